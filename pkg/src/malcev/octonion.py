"""The octonion algebra, its traceless Malcev algebra, and a mechanical
walk through the proof chain identifying the alternative envelope of the
7-dimensional simple Malcev algebra with the octonions.

Octonion elements are dense coefficient tuples over the basis
(1, e1, ..., e7); products come from the catalog table, which encodes the
defining relations with index arithmetic mod 7 on 1-based unit indices.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as iproduct

from .core import (
    FiniteAlgebra,
    catalog,
    evaluate_bilinear,
    is_zero,
    vadd,
    vscale,
    vsub,
    verify_variety,
)
from .envelope import EnvContext, commutator as env_commutator, monomials_up_to, product
from .envelope import associator as env_associator, format_monomial
from .reports import VerificationReport

Octonion = tuple  # 8 coefficients; index 0 is the unit, 1..7 the e_i

_OCT = catalog("octonions")

OCT_DIM = 8


def oct_unit(i: int) -> Octonion:
    """The basis unit e_i for 1 <= i <= 7 (wrapped mod 7), or 1 for i = 0."""
    if i == 0:
        return _OCT.basis_vector(0)
    return _OCT.basis_vector((i - 1) % 7 + 1)


def oct_mul(u: Octonion, v: Octonion) -> Octonion:
    return evaluate_bilinear(_OCT, u, v)


def oct_comm(u: Octonion, v: Octonion) -> Octonion:
    return vsub(oct_mul(u, v), oct_mul(v, u))


def oct_circ(u: Octonion, v: Octonion) -> Octonion:
    """The Jordan-type symmetric product uv + vu, not halved."""
    return vadd(oct_mul(u, v), oct_mul(v, u))


def oct_assoc(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return vsub(oct_mul(oct_mul(x, y), z), oct_mul(x, oct_mul(y, z)))


def oct_jacobian(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return vadd(
        vadd(oct_comm(oct_comm(x, y), z), oct_comm(oct_comm(y, z), x)),
        oct_comm(oct_comm(z, x), y),
    )


def traceless_malcev() -> FiniteAlgebra:
    """The 7-dim Malcev algebra of traceless octonions: brackets are
    commutators of the units e_1..e_7 inside the octonions."""
    table = []
    for i in range(1, 8):
        row = []
        for j in range(1, 8):
            br = oct_comm(oct_unit(i), oct_unit(j))
            if br[0]:
                raise AssertionError("commutator of units left the traceless span")
            row.append(br[1:])
        table.append(tuple(row))
    return FiniteAlgebra(
        name="traceless_octonions",
        labels=tuple(f"e{i}" for i in range(1, 8)),
        table=tuple(table),
    )


# --- signed basis isomorphism search ----------------------------------------


def is_signed_isomorphism(A: FiniteAlgebra, B: FiniteAlgebra, mapping) -> bool:
    """mapping[i] = (j, sign) sends basis i of A to sign * basis j of B."""
    if sorted(j for j, _ in mapping) != list(range(A.dim)):
        return False
    for i1 in range(A.dim):
        j1, s1 = mapping[i1]
        for i2 in range(A.dim):
            j2, s2 = mapping[i2]
            want = {k: s1 * s2 * c for k, c in enumerate(B.table[j1][j2]) if c}
            got: dict = {}
            for k, c in enumerate(A.table[i1][i2]):
                if c:
                    jk, sk = mapping[k]
                    got[jk] = got.get(jk, 0) + c * sk
            got = {k: c for k, c in got.items() if c}
            if got != want:
                return False
    return True


def find_signed_isomorphism(A: FiniteAlgebra, B: FiniteAlgebra):
    """Search signed basis permutations for a bracket-preserving bijection.

    Returns the mapping as a list of (target index, sign) pairs, or None.
    Backtracking assigns one source basis vector at a time and prunes on
    every bracket whose value is already fully determined.
    """
    if A.dim != B.dim:
        raise ValueError("algebras must have equal dimension")
    n = A.dim
    assignment: list = [None] * n
    used = [False] * n

    def partial_ok(i: int) -> bool:
        j1, s1 = assignment[i]
        for i2 in range(i):
            j2, s2 = assignment[i2]
            want = {
                k: s1 * s2 * c for k, c in enumerate(B.table[j1][j2]) if c
            }
            av = A.table[i][i2]
            support = [k for k, c in enumerate(av) if c]
            got_assigned: dict = {}
            pending = 0
            for k in support:
                if assignment[k] is None:
                    pending += 1
                else:
                    jk, sk = assignment[k]
                    got_assigned[jk] = got_assigned.get(jk, 0) + av[k] * sk
            got_assigned = {k: c for k, c in got_assigned.items() if c}
            if not pending:
                if got_assigned != want:
                    return False
                continue
            for j, c in got_assigned.items():
                if want.get(j, 0) != c:
                    return False
            unmatched = [j for j in want if j not in got_assigned]
            if len(unmatched) > pending:
                return False
            if any(used[j] for j in unmatched):
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == n:
            return is_signed_isomorphism(A, B, assignment)
        for j in range(n):
            if used[j]:
                continue
            for s in (1, -1):
                assignment[i] = (j, s)
                used[j] = True
                if partial_ok(i) and backtrack(i + 1):
                    return True
                assignment[i] = None
                used[j] = False
        return False

    if backtrack(0):
        return list(assignment)
    return None


# --- the proof chain ---------------------------------------------------------


def verify_octonion_theorem_chain(seed: int = 2026, samples: int = 200) -> VerificationReport:
    """Every arithmetic link in the identification of the alternative
    envelope of the 7-dim simple Malcev algebra with the octonions,
    checked inside the octonions. Steps are numbered as in the chain."""
    rep = VerificationReport("octonion identification chain")
    units = [oct_unit(i) for i in range(8)]
    one = units[0]

    def e(i: int) -> Octonion:
        return oct_unit(i)

    # step 1: defining relations of the unit basis, indices mod 7
    for i in range(1, 8):
        rep.record(
            oct_mul(e(i), e(i)) == vscale(-1, one), f"step 1: e{i}^2 = -1"
        )
        rep.record(
            oct_mul(e(i), e(i + 1)) == e(i + 3), f"step 1: e{i} e{(i % 7) + 1} = e{(i + 2) % 7 + 1}"
        )
        rep.record(
            oct_mul(e(i + 1), e(i + 3)) == e(i), f"step 1: cyclic pair relation at i={i}"
        )
        rep.record(
            oct_mul(e(i + 3), e(i)) == e(i + 1), f"step 1: cyclic triple relation at i={i}"
        )
        for j in range(1, 8):
            if i != j:
                rep.record(
                    oct_mul(e(i), e(j)) == vscale(-1, oct_mul(e(j), e(i))),
                    f"step 1: e{i} e{j} = -e{j} e{i}",
                )
    for i in range(8):
        rep.record(oct_mul(units[0], units[i]) == units[i], f"step 1: 1 * basis {i}")
        rep.record(oct_mul(units[i], units[0]) == units[i], f"step 1: basis {i} * 1")

    # step 2: commutator brackets of the traceless units, and the Malcev laws
    M = traceless_malcev()
    for i in range(1, 8):
        rep.record(
            oct_comm(e(i), e(i + 1)) == vscale(2, e(i + 3)),
            f"step 2: [e{i}, e{(i % 7) + 1}] = 2 e{(i + 2) % 7 + 1}",
        )
        rep.record(
            oct_comm(e(i + 1), e(i + 3)) == vscale(2, e(i)),
            f"step 2: second bracket family at i={i}",
        )
        rep.record(
            oct_comm(e(i + 3), e(i)) == vscale(2, e(i + 1)),
            f"step 2: third bracket family at i={i}",
        )
    malcev_rep = verify_variety(M, "malcev")
    rep.record(
        malcev_rep.passed,
        "step 2: traceless commutator algebra satisfies the Malcev laws",
        "" if malcev_rep.passed else malcev_rep.failures[0].where,
    )

    # step 3: associator equals one sixth of the Jacobian, all unit triples
    for i, j, k in iproduct(range(1, 8), repeat=3):
        lhs = oct_assoc(e(i), e(j), e(k))
        rhs = vscale(Fraction(1, 6), oct_jacobian(e(i), e(j), e(k)))
        rep.record(lhs == rhs, f"step 3: associator vs Jacobian at ({i},{j},{k})")

    # step 4: the three associator value families
    for i in range(1, 8):
        rep.record(
            oct_assoc(e(i + 1), e(i + 2), e(i + 5)) == vscale(2, e(i)),
            f"step 4: first associator family at i={i}",
        )
        rep.record(
            oct_assoc(e(i + 4), e(i + 1), e(i + 6)) == vscale(2, e(i)),
            f"step 4: second associator family at i={i}",
        )
        rep.record(
            oct_assoc(e(i + 1), e(i + 3), e(i + 2)) == vscale(2, e(i + 6)),
            f"step 4: third associator family at i={i}",
        )
        rep.record(
            oct_jacobian(e(i + 1), e(i + 2), e(i + 5)) == vscale(12, e(i)),
            f"step 4: Jacobian value at i={i}",
        )

    # step 5: [x,y] o (x,y,z) = 0 on all unit triples
    for i, j, k in iproduct(range(1, 8), repeat=3):
        val = oct_circ(oct_comm(e(i), e(j)), oct_assoc(e(i), e(j), e(k)))
        rep.record(is_zero(val), f"step 5: commutator-associator identity at ({i},{j},{k})")

    # step 6: vanishing symmetric products at offsets 4, 2, 6
    for i in range(1, 8):
        for off in (4, 2, 6):
            rep.record(
                is_zero(oct_circ(e(i), e(i + off))),
                f"step 6: e{i} o e{(i + off - 1) % 7 + 1} = 0",
            )

    # step 7: anticommutativity of distinct units
    for i, j in iproduct(range(1, 8), repeat=2):
        if i != j:
            rep.record(
                oct_mul(e(i), e(j)) == vscale(-1, oct_mul(e(j), e(i))),
                f"step 7: e{i} e{j} + e{j} e{i} = 0",
            )

    # step 8: the recovered product relations
    for i in range(1, 8):
        rep.record(oct_mul(e(i), e(i + 1)) == e(i + 3), f"step 8: first product family at i={i}")
        rep.record(oct_mul(e(i + 1), e(i + 3)) == e(i), f"step 8: second product family at i={i}")
        rep.record(oct_mul(e(i + 3), e(i)) == e(i + 1), f"step 8: third product family at i={i}")

    # step 9: the linearized identity, proof substitution plus random draws
    def linearized(x, y, r, s, z) -> Octonion:
        return vadd(
            vadd(
                oct_circ(oct_comm(x, y), oct_assoc(r, s, z)),
                oct_circ(oct_comm(r, y), oct_assoc(x, s, z)),
            ),
            vadd(
                oct_circ(oct_comm(x, s), oct_assoc(r, y, z)),
                oct_circ(oct_comm(r, s), oct_assoc(x, y, z)),
            ),
        )

    for i in range(1, 8):
        x, y, r, s, z = e(i + 2), e(i + 6), e(i + 1), e(i + 2), e(i + 5)
        rep.record(is_zero(linearized(x, y, r, s, z)), f"step 9: full linearized identity at i={i}")
        rep.record(
            is_zero(oct_circ(oct_comm(r, y), oct_assoc(x, s, z))),
            f"step 9: second term vanishes at i={i}",
        )
        rep.record(
            is_zero(oct_circ(oct_comm(x, s), oct_assoc(r, y, z))),
            f"step 9: third term vanishes at i={i}",
        )
        two_term = vadd(
            oct_circ(oct_comm(x, y), oct_assoc(r, s, z)),
            oct_circ(oct_comm(r, s), oct_assoc(x, y, z)),
        )
        rep.record(is_zero(two_term), f"step 9: surviving two-term identity at i={i}")
    rnd = random.Random(seed)
    for t in range(samples):
        xs = [e(rnd.randrange(1, 8)) for _ in range(5)]
        rep.record(
            is_zero(linearized(*xs)),
            f"step 9: random substitution {t}",
        )

    # step 10: equal squares around the 4-offset loop
    for i in range(1, 8):
        val = vsub(
            vscale(8, oct_mul(e(i), e(i))), vscale(8, oct_mul(e(i + 4), e(i + 4)))
        )
        rep.record(is_zero(val), f"step 10: 8 e{i}^2 - 8 e{(i + 3) % 7 + 1}^2 = 0")
    squares = {i: oct_mul(e(i), e(i)) for i in range(1, 8)}
    rep.record(
        all(squares[i] == squares[1] for i in range(2, 8)),
        "step 10: all unit squares share one value a",
    )

    # parts 1-3: the span of a and the units is a subalgebra with identity -a
    a = squares[1]
    for j in range(1, 8):
        rep.record(oct_mul(a, e(j)) == vscale(-1, e(j)), f"part 1: a e{j} = -e{j}")
        rep.record(oct_mul(e(j), a) == vscale(-1, e(j)), f"part 1: e{j} a = -e{j}")
    for i in range(1, 8):
        rep.record(
            oct_mul(oct_mul(e(i), e(i)), e(i + 1)) == oct_mul(e(i), e(i + 3)),
            f"part 1: e{i}^2 e{(i % 7) + 1} = e{i} e{(i + 2) % 7 + 1}",
        )
        rep.record(
            oct_mul(e(i), e(i + 3)) == vscale(-1, e(i + 1)),
            f"part 1: e{i} e{(i + 2) % 7 + 1} = -e{(i % 7) + 1}",
        )
    rep.record(oct_mul(a, a) == vscale(-1, a), "part 2: a^2 = -a")
    for i, j in iproduct(range(1, 8), repeat=2):
        if i == j:
            continue
        prod = oct_mul(e(i), e(j))
        nonzero = [(k, c) for k, c in enumerate(prod) if c]
        ok = len(nonzero) == 1 and nonzero[0][0] != 0 and nonzero[0][1] in (1, -1)
        rep.record(ok, f"part 3: e{i} e{j} is a signed unit")
    minus_a = vscale(-1, a)
    for i in range(8):
        rep.record(
            oct_mul(minus_a, units[i]) == units[i]
            and oct_mul(units[i], minus_a) == units[i],
            f"part 3: -a is an identity on basis {i}",
        )
    for i, j, k in ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7)):
        rep.record(
            oct_mul(e(i), e(j)) == e(k),
            f"part 3: e{i} e{j} = e{k} generates the rest",
        )
    return rep


# --- the central element of the 7-dim envelope --------------------------------


def verify_um_center(cap: int = 2) -> VerificationReport:
    """The sum of squared generators in the envelope of the 7-dim simple
    Malcev algebra commutes and associates with everything up to the cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    rep = VerificationReport("central element of the 7-dim envelope")
    A = catalog("M_nonsplit")
    ctx = EnvContext(A)
    gens = []
    for g in range(A.dim):
        mono = tuple(1 if v == g else 0 for v in range(A.dim))
        gens.append({mono: Fraction(1)})
    c: dict = {}
    for g_el in gens:
        for m, coeff in product(ctx, g_el, g_el).items():
            c[m] = c.get(m, 0) + coeff
    c = {m: v for m, v in c.items() if v}
    monos = monomials_up_to(A.dim, cap)
    for m in monos:
        fm = {m: Fraction(1)}
        rep.record(
            not env_commutator(ctx, c, fm),
            f"[c, {format_monomial(A.labels, m)}] = 0",
        )
    for g, g_el in enumerate(gens):
        for m in monos:
            fm = {m: Fraction(1)}
            name = format_monomial(A.labels, m)
            rep.record(
                not env_associator(ctx, c, g_el, fm),
                f"(c, {A.labels[g]}, {name}) = 0",
            )
            rep.record(
                not env_associator(ctx, g_el, c, fm),
                f"({A.labels[g]}, c, {name}) = 0",
            )
            rep.record(
                not env_associator(ctx, g_el, fm, c),
                f"({A.labels[g]}, {name}, c) = 0",
            )
    return rep
