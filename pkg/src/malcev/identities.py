"""Free multilinear degree-4 nonassociative computations and the derived
binary-ternary structure of right alternative algebras.

A multilinear degree-4 polynomial lives in the 120-dimensional space indexed
by (tree shape, permutation): the five bracketings of four factors crossed
with the 24 orderings of the symbols a, b, c, d. Formal expressions are
polynomials over binary trees; commutators and associators expand to tree
combinations before being read off against the canonical basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product as iproduct

from .core import FiniteAlgebra, catalog, verify_variety
from .linalg import rank, solve_in_span
from .reports import VerificationReport

SYMBOLS = ("a", "b", "c", "d")

# tree shapes on four leaves, enumerated left to right
_LEAF = "*"
SHAPES = (
    (((_LEAF, _LEAF), _LEAF), _LEAF),
    ((_LEAF, (_LEAF, _LEAF)), _LEAF),
    ((_LEAF, _LEAF), (_LEAF, _LEAF)),
    (_LEAF, ((_LEAF, _LEAF), _LEAF)),
    (_LEAF, (_LEAF, (_LEAF, _LEAF))),
)
SHAPE_NAMES = ("((xy)z)w", "(x(yz))w", "(xy)(zw)", "x((yz)w)", "x(y(zw))")
PERMS = tuple(permutations(SYMBOLS))
_PERM_INDEX = {p: i for i, p in enumerate(PERMS)}
DIM = len(SHAPES) * len(PERMS)


# --- formal tree polynomials -------------------------------------------------

Poly = dict  # binary tree (nested pairs of symbols) -> Fraction


def p_var(s: str) -> Poly:
    if s not in SYMBOLS:
        raise ValueError(f"unknown symbol {s!r}")
    return {s: Fraction(1)}


def p_scale(c, f: Poly) -> Poly:
    c = Fraction(c)
    return {t: c * v for t, v in f.items()} if c else {}


def p_add(*fs: Poly) -> Poly:
    acc: Poly = {}
    for f in fs:
        for t, c in f.items():
            new = acc.get(t, 0) + c
            if new:
                acc[t] = new
            else:
                acc.pop(t, None)
    return acc


def p_sub(f: Poly, g: Poly) -> Poly:
    return p_add(f, p_scale(-1, g))


def p_mul(f: Poly, g: Poly) -> Poly:
    acc: Poly = {}
    for t1, c1 in f.items():
        for t2, c2 in g.items():
            t = (t1, t2)
            new = acc.get(t, 0) + c1 * c2
            if new:
                acc[t] = new
            else:
                acc.pop(t, None)
    return acc


def p_comm(f: Poly, g: Poly) -> Poly:
    return p_sub(p_mul(f, g), p_mul(g, f))


def p_assoc(f: Poly, g: Poly, h: Poly) -> Poly:
    return p_sub(p_mul(p_mul(f, g), h), p_mul(f, p_mul(g, h)))


def _shape_and_leaves(tree):
    if isinstance(tree, str):
        return _LEAF, [tree]
    ls, ll = _shape_and_leaves(tree[0])
    rs, rl = _shape_and_leaves(tree[1])
    return (ls, rs), ll + rl


def expand_multilinear(f: Poly) -> list:
    """Coefficient vector of a formal polynomial in the 120-dim basis.

    Every tree must use each of a, b, c, d exactly once."""
    vec = [Fraction(0)] * DIM
    for tree, coeff in f.items():
        shape, leaves = _shape_and_leaves(tree)
        if sorted(leaves) != sorted(SYMBOLS):
            raise ValueError(f"tree {tree} is not multilinear in a,b,c,d")
        idx = SHAPES.index(shape) * len(PERMS) + _PERM_INDEX[tuple(leaves)]
        vec[idx] += coeff
    return vec


def evaluate_in_algebra(vec: list, B: FiniteAlgebra, args: dict):
    """Value of a 120-vector under a substitution of algebra elements.

    args maps each of the symbols a, b, c, d to a dense vector of B."""
    missing = [s for s in SYMBOLS if s not in args]
    if missing:
        raise ValueError(f"substitution missing symbols {missing}")
    m = B.mul
    total = list(B.zero())
    for idx, coeff in enumerate(vec):
        if not coeff:
            continue
        shape, perm = divmod(idx, len(PERMS))
        x, y, z, w = (args[s] for s in PERMS[perm])
        if shape == 0:
            val = m(m(m(x, y), z), w)
        elif shape == 1:
            val = m(m(x, m(y, z)), w)
        elif shape == 2:
            val = m(m(x, y), m(z, w))
        elif shape == 3:
            val = m(x, m(m(y, z), w))
        else:
            val = m(x, m(y, m(z, w)))
        for i, v in enumerate(val):
            total[i] += coeff * v
    return tuple(total)


def basis_term_name(idx: int) -> str:
    shape, perm = divmod(idx, len(PERMS))
    name = SHAPE_NAMES[shape]
    for placeholder, sym in zip("xyzw", PERMS[perm]):
        name = name.replace(placeholder, sym)
    return name


# --- the degree-4 elements ----------------------------------------------------


def _element_constructors():
    def akivis1(A, B, C, D):
        return p_comm(p_comm(p_comm(A, B), C), D)

    def akivis2(A, B, C, D):
        return p_comm(p_assoc(A, B, C), D)

    def akivis3(A, B, C, D):
        return p_comm(p_comm(A, B), p_comm(C, D))

    def akivis4(A, B, C, D):
        return p_assoc(p_comm(A, B), C, D)

    def akivis5(A, B, C, D):
        return p_assoc(A, p_comm(B, C), D)

    def akivis6(A, B, C, D):
        return p_assoc(A, B, p_comm(C, D))

    def f_elem(A, B, C, D):
        return p_sub(
            p_sub(p_assoc(p_mul(A, B), C, D), p_mul(A, p_assoc(B, C, D))),
            p_mul(p_assoc(A, C, D), B),
        )

    def g_elem(A, B, C, D):
        return p_sub(
            p_sub(p_assoc(A, p_mul(B, C), D), p_mul(B, p_assoc(A, C, D))),
            p_mul(p_assoc(A, B, D), C),
        )

    return (
        ("[[[a,b],c],d]", akivis1),
        ("[(a,b,c),d]", akivis2),
        ("[[a,b],[c,d]]", akivis3),
        ("([a,b],c,d)", akivis4),
        ("(a,[b,c],d)", akivis5),
        ("(a,b,[c,d])", akivis6),
        ("f", f_elem),
        ("g", g_elem),
    )


def akivis_f_g_elements() -> list:
    """The six Akivis elements plus f and g, expanded at the identity
    permutation, as (name, vector) pairs."""
    out = []
    for name, fn in _element_constructors():
        args = [p_var(s) for s in SYMBOLS]
        out.append((name, expand_multilinear(fn(*args))))
    return out


def linearized_cube(X: Poly, Y: Poly, Z: Poly) -> Poly:
    """Full linearization of x(xx) = (xx)x: the symmetric associator sum."""
    return p_add(
        p_assoc(X, Y, Z),
        p_assoc(X, Z, Y),
        p_assoc(Y, X, Z),
        p_assoc(Y, Z, X),
        p_assoc(Z, X, Y),
        p_assoc(Z, Y, X),
    )


def _consequence_constructors():
    def conseq1(A, B, C, D):
        return linearized_cube(p_comm(A, D), B, C)

    def conseq2(A, B, C, D):
        return p_comm(linearized_cube(A, B, C), D)

    return (("third-power-consequence-1", conseq1), ("third-power-consequence-2", conseq2))


def _consequence_family_constructors():
    # raw degree-4 consequences of the linearized cube identity: substituting
    # a product into one slot, and multiplying the identity by a variable
    def substituted(A, B, C, D):
        return linearized_cube(p_mul(A, D), B, C)

    def right_multiple(A, B, C, D):
        return p_mul(linearized_cube(A, B, C), D)

    def left_multiple(A, B, C, D):
        return p_mul(D, linearized_cube(A, B, C))

    return (
        ("third-power-substitution", substituted),
        ("third-power-right-multiple", right_multiple),
        ("third-power-left-multiple", left_multiple),
    )


def third_power_consequences() -> list:
    """The two degree-4 consequences of linearized third-power
    associativity, under all 24 substitutions; identity substitution first.
    Returned as (name, permutation string, vector) triples."""
    out = []
    for name, fn in _consequence_constructors():
        for perm in PERMS:
            args = [p_var(s) for s in perm]
            out.append((name, "".join(perm), expand_multilinear(fn(*args))))
    return out


@dataclass(frozen=True)
class DecompositionReport:
    member: bool
    span_dim: int
    coefficients: tuple  # (name, permutation string, Fraction), nonzero only
    recombined: bool  # coefficients reproduce the target exactly


def _span_generators():
    gens = []
    for name, fn in _element_constructors():
        if name == "g":
            continue
        for perm in PERMS:
            args = [p_var(s) for s in perm]
            gens.append((name, "".join(perm), expand_multilinear(fn(*args))))
    gens.extend(third_power_consequences())
    # the two combinations above do not span the space of degree-4
    # consequences of the linearized cube identity; the raw families do
    for name, fn in _consequence_family_constructors():
        for perm in PERMS:
            args = [p_var(s) for s in perm]
            gens.append((name, "".join(perm), expand_multilinear(fn(*args))))
    return gens


def decompose(target: list, order_seed=None) -> DecompositionReport:
    """Exact membership of a 120-vector in the span of all permutations of
    f, the Akivis elements, and the degree-4 consequences of the linearized
    cube identity."""
    gens = _span_generators()
    if order_seed is not None:
        import random

        random.Random(order_seed).shuffle(gens)
    vectors = [v for _, _, v in gens]
    coeffs = solve_in_span(vectors, target)
    span_dim = rank(vectors)
    if coeffs is None:
        return DecompositionReport(False, span_dim, (), False)
    nonzero = tuple(
        (name, perm, c)
        for (name, perm, _), c in zip(gens, coeffs)
        if c
    )
    recombined = [Fraction(0)] * DIM
    for v, c in zip(vectors, coeffs):
        if c:
            for i, x in enumerate(v):
                recombined[i] += c * x
    return DecompositionReport(True, span_dim, nonzero, recombined == list(target))


def decompose_g(order_seed=None) -> DecompositionReport:
    g_vec = dict(akivis_f_g_elements())["g"]
    return decompose(g_vec, order_seed=order_seed)


# --- Bol structure of right alternative algebras -------------------------------


@dataclass(frozen=True)
class BolData:
    """Binary and ternary tables over a finite basis, sparse vectors."""

    labels: tuple
    binary: dict  # (i, j) -> {k: coeff}
    ternary: dict  # (i, j, k) -> {l: coeff}

    @property
    def dim(self) -> int:
        return len(self.labels)


def _sparse(dense) -> dict:
    return {k: c for k, c in enumerate(dense) if c}


def circ_product(B: FiniteAlgebra, u, v):
    """Symmetrized product uv + vu on dense vectors.

    The normalization matters: the fifth derived-structure identity is
    quadratic in the commutator but only linear in the ternary operation,
    and it balances exactly for this unhalved convention."""
    uv = B.mul(u, v)
    vu = B.mul(v, u)
    return tuple(x + y for x, y in zip(uv, vu))


def jordan_associator(B: FiniteAlgebra, x, y, z):
    """Associator of the symmetrized product; in a commutative table this
    is the ordinary associator of the doubled product."""
    lhs = circ_product(B, circ_product(B, x, y), z)
    rhs = circ_product(B, x, circ_product(B, y, z))
    return tuple(p - q for p, q in zip(lhs, rhs))


def bol_data_from_right_alternative(B: FiniteAlgebra) -> BolData:
    """Derived Bol operations: the commutator, and the Jordan associator
    with its arguments cycled, [a,b,c] = <b,c,a>."""
    pre = verify_variety(B, "right-alternative")
    if not pre.passed:
        raise ValueError(f"{B.name} is not right alternative: {pre.failures[0].where}")
    n = B.dim
    e = B.basis_vector
    binary = {}
    ternary = {}
    for i in range(n):
        for j in range(n):
            uv = B.mul(e(i), e(j))
            vu = B.mul(e(j), e(i))
            binary[i, j] = _sparse(tuple(x - y for x, y in zip(uv, vu)))
            for k in range(n):
                ternary[i, j, k] = _sparse(jordan_associator(B, e(j), e(k), e(i)))
    return BolData(labels=B.labels, binary=binary, ternary=ternary)


def lts_bol_data() -> BolData:
    """The 2-dimensional simple Lie triple system as a Bol algebra: zero
    binary product, ternary generated by [e,f,e] = 2e and [e,f,f] = -2f."""
    two = Fraction(2)
    ternary = {(i, j, k): {} for i, j, k in iproduct(range(2), repeat=3)}
    ternary[0, 1, 0] = {0: two}
    ternary[0, 1, 1] = {1: -two}
    ternary[1, 0, 0] = {0: -two}
    ternary[1, 0, 1] = {1: two}
    binary = {(i, j): {} for i, j in iproduct(range(2), repeat=2)}
    return BolData(labels=("e", "f"), binary=binary, ternary=ternary)


def _vadd_sparse(*vs) -> dict:
    acc: dict = {}
    for v in vs:
        for k, c in v.items():
            new = acc.get(k, 0) + c
            if new:
                acc[k] = new
            else:
                acc.pop(k, None)
    return acc


def _vscale_sparse(c, v: dict) -> dict:
    return {k: c * x for k, x in v.items()} if c else {}


def _bin_ext(data: BolData, u: dict, v: dict) -> dict:
    acc: dict = {}
    for i, ci in u.items():
        for j, cj in v.items():
            for k, c in data.binary[i, j].items():
                new = acc.get(k, 0) + ci * cj * c
                if new:
                    acc[k] = new
                else:
                    acc.pop(k, None)
    return acc


def _tern_ext(data: BolData, u: dict, v: dict, w: dict) -> dict:
    acc: dict = {}
    for i, ci in u.items():
        for j, cj in v.items():
            cij = ci * cj
            for k, ck in w.items():
                for l, c in data.ternary[i, j, k].items():
                    new = acc.get(l, 0) + cij * ck * c
                    if new:
                        acc[l] = new
                    else:
                        acc.pop(l, None)
    return acc


def verify_bol(data: BolData) -> VerificationReport:
    """The five Bol-algebra identities, multilinearized where arguments
    repeat, on all basis tuples."""
    rep = VerificationReport(f"bol identities on ({', '.join(data.labels)})")
    n = data.dim
    basis = [{i: Fraction(1)} for i in range(n)]

    for i in range(n):
        rep.record(not data.binary[i, i], f"[{data.labels[i]},{data.labels[i]}] = 0")
    for i, j in iproduct(range(n), repeat=2):
        rep.record(
            not _vadd_sparse(data.binary[i, j], data.binary[j, i]),
            f"binary antisymmetry at ({i},{j})",
        )
    for i, k in iproduct(range(n), repeat=2):
        rep.record(not data.ternary[i, i, k], f"ternary [x,x,z] = 0 at ({i},{k})")
    for i, j, k in iproduct(range(n), repeat=3):
        rep.record(
            not _vadd_sparse(data.ternary[i, j, k], data.ternary[j, i, k]),
            f"ternary antisymmetry at ({i},{j},{k})",
        )
        cyc = _vadd_sparse(
            data.ternary[i, j, k], data.ternary[j, k, i], data.ternary[k, i, j]
        )
        rep.record(not cyc, f"ternary cyclic sum at ({i},{j},{k})")

    # [a,b,[c,d,e]] = [[a,b,c],d,e] + [c,[a,b,d],e] + [c,d,[a,b,e]]
    ok4 = True
    first4 = ""
    for a, b, c, d, e in iproduct(range(n), repeat=5):
        lhs = _tern_ext(data, basis[a], basis[b], data.ternary[c, d, e])
        rhs = _vadd_sparse(
            _tern_ext(data, data.ternary[a, b, c], basis[d], basis[e]),
            _tern_ext(data, basis[c], data.ternary[a, b, d], basis[e]),
            _tern_ext(data, basis[c], basis[d], data.ternary[a, b, e]),
        )
        if _vadd_sparse(lhs, _vscale_sparse(-1, rhs)):
            ok4 = False
            first4 = f"first failure at ({a},{b},{c},{d},{e})"
            break
    rep.record(ok4, f"ternary derivation identity on all {n ** 5} tuples", first4)

    # [[a,b],[c,d]] = [a,b,[c,d]] - [c,d,[a,b]] - [[a,b,c],d] + [[a,b,d],c]
    ok5 = True
    first5 = ""
    for a, b, c, d in iproduct(range(n), repeat=4):
        lhs = _bin_ext(data, data.binary[a, b], data.binary[c, d])
        rhs = _vadd_sparse(
            _tern_ext(data, basis[a], basis[b], data.binary[c, d]),
            _vscale_sparse(-1, _tern_ext(data, basis[c], basis[d], data.binary[a, b])),
            _vscale_sparse(-1, _bin_ext(data, data.ternary[a, b, c], basis[d])),
            _bin_ext(data, data.ternary[a, b, d], basis[c]),
        )
        if _vadd_sparse(lhs, _vscale_sparse(-1, rhs)):
            ok5 = False
            first5 = f"first failure at ({a},{b},{c},{d})"
            break
    rep.record(ok5, f"binary-ternary compatibility on all {n ** 4} tuples", first5)
    return rep


def bol_from_right_alternative(B: FiniteAlgebra):
    """Derived Bol data plus the verification of the five identities."""
    data = bol_data_from_right_alternative(B)
    return data, verify_bol(data)
