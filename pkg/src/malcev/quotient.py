"""Alternator ideals and the alternative quotients of the enveloping
algebras of the 4-dim solvable and 5-dim nilpotent Malcev algebras.

Ideals are monomial-span ideals given by explicit membership predicates on
exponent vectors; the quotient is computed by deleting ideal monomials.
The predicates are validated against the engine (products with generators
stay in the span) rather than recomputed by generator closure, which is
unsound under degree truncation because products shed degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial

from .closedform import _add_term, _shifted_power
from .core import FiniteAlgebra, catalog, commutator_algebra
from .envelope import (
    EnvContext,
    format_monomial,
    monomials_up_to,
    product,
)
from .polyops import binom
from .reports import VerificationReport

S_LABELS = ("a", "b", "c", "d")
T_LABELS = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class MonomialSpanIdeal:
    """Alternator ideal as a span of PBW monomials."""

    tag: str

    def __post_init__(self):
        if self.tag not in ("S", "T"):
            raise ValueError(f"no ideal data for tag {self.tag!r}")

    @property
    def algebra(self) -> FiniteAlgebra:
        return catalog(self.tag)

    def contains(self, m: tuple) -> bool:
        if self.tag == "S":
            i, j, k, l = m
            return l >= 2 or (l == 1 and j + k >= 1)
        i, j, k, l, e = m
        return e >= 2 or (e == 1 and k >= 1)


def ideal_for(tag: str) -> MonomialSpanIdeal:
    return MonomialSpanIdeal(tag)


def reduce(ideal: MonomialSpanIdeal, x: dict) -> dict:
    """Project onto the survivor span by deleting ideal monomials."""
    return {m: c for m, c in x.items() if not ideal.contains(m)}


def is_survivor(ideal: MonomialSpanIdeal, m: tuple) -> bool:
    return not ideal.contains(m)


def verify_ideal_closed(ideal: MonomialSpanIdeal, cap: int = 5) -> VerificationReport:
    """Products of ideal basis monomials with generators, both sides, all
    reduce to 0: the span absorbs generator multiplication up to the cap."""
    if cap < 2:
        raise ValueError("cap must be at least 2")
    rep = VerificationReport(f"ideal closure ({ideal.tag})")
    A = ideal.algebra
    ctx = EnvContext(A)
    members = [m for m in monomials_up_to(A.dim, cap) if ideal.contains(m)]
    for u in members:
        fu = {u: Fraction(1)}
        name = format_monomial(A.labels, u)
        for g in range(A.dim):
            gmono = tuple(1 if v == g else 0 for v in range(A.dim))
            fg = {gmono: Fraction(1)}
            rep.record(
                not reduce(ideal, product(ctx, fg, fu)),
                f"{A.labels[g]} * ({name}) reduces to 0",
            )
            rep.record(
                not reduce(ideal, product(ctx, fu, fg)),
                f"({name}) * {A.labels[g]} reduces to 0",
            )
    return rep


# --- closed-form quotient products ------------------------------------------


def _survivor_S_kind(m: tuple) -> str:
    i, j, k, l = m
    if l == 0:
        return "bc"
    if l == 1 and j == 0 and k == 0:
        return "d"
    raise ValueError(f"{m} is not a survivor monomial of the solvable quotient")


def as_product(m1: tuple, m2: tuple) -> dict:
    """Product of survivor monomials in the alternative quotient of the
    solvable envelope: types a^i d and a^i b^j c^k."""
    kind1, kind2 = _survivor_S_kind(m1), _survivor_S_kind(m2)
    acc: dict = {}
    if kind1 == "d" and kind2 == "d":
        return acc
    if kind1 == "bc" and kind2 == "d":
        i, j, k, _ = m1
        m = m2[0]
        if j == 0 and k == 0:
            _add_term(acc, (i + m, 0, 0, 1), Fraction(1))
        return acc
    if kind1 == "d" and kind2 == "bc":
        i = m1[0]
        m, n, p, _ = m2
        if n == 0 and p == 0:
            for a_exp, c in _shifted_power(i, m, -1).items():
                _add_term(acc, (a_exp, 0, 0, 1), Fraction(c))
        return acc
    i, j, k, _ = m1
    m, n, p, _ = m2
    for a_exp, c in _shifted_power(i, m, j + k).items():
        _add_term(acc, (a_exp, j + n, k + p, 0), Fraction(c))
    if j + n == 1 and k + p == 1:
        corr: dict = {}
        if (j, k) == (1, 0):
            for a_exp, c in _shifted_power(0, i + m, -1).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(c))
            for a_exp, c in _shifted_power(i, m, 1).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(-c))
        elif (j, k) == (0, 1):
            for a_exp, c in _shifted_power(0, i + m, -1).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(-c))
            for a_exp, c in _shifted_power(i, m, 1).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(-c))
        elif (j, k) == (1, 1):
            for a_exp, c in _shifted_power(i, m, -1).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(c))
            for a_exp, c in _shifted_power(i, m, 2).items():
                _add_term(corr, (a_exp, 0, 0, 1), Fraction(-c))
        for mono, c in corr.items():
            _add_term(acc, mono, c)
    return acc


def _survivor_T_kind(m: tuple) -> str:
    i, j, k, l, e = m
    if e == 0:
        return "c"
    if e == 1 and k == 0:
        return "e"
    raise ValueError(f"{m} is not a survivor monomial of the nilpotent quotient")


def at_product(m1: tuple, m2: tuple) -> dict:
    """Product of survivor monomials in the alternative quotient of the
    nilpotent envelope: types a^i b^j c^k d^l and a^i b^j d^l e."""
    kind1, kind2 = _survivor_T_kind(m1), _survivor_T_kind(m2)
    acc: dict = {}
    if kind1 == "e" and kind2 == "e":
        return acc
    if kind1 == "c" and kind2 == "e":
        i, j, k, l, _ = m1
        p, q, _, s, _ = m2
        if k == 0:
            _add_term(acc, (i + p, j + q, 0, l + s, 1), Fraction(1))
        return acc
    if kind1 == "e" and kind2 == "c":
        i, j, _, l, _ = m1
        p, q, r, s, _ = m2
        if r == 0:
            _add_term(acc, (i + p, j + q, 0, l + s, 1), Fraction(1))
        return acc
    i, j, k, l, _ = m1
    p, q, r, s, _ = m2
    for mu in range(j + 1):
        c = (-1) ** mu * factorial(mu) * binom(j, mu) * binom(p, mu)
        _add_term(acc, (i + p - mu, j + q - mu, k + r + mu, l + s, 0), Fraction(c))
    if k == 0 and r == 0:
        coeff = (
            Fraction(i * j * s, 6)
            - Fraction(i * l * q, 6)
            + Fraction(j * l * p, 2)
            + Fraction(j * p * s, 3)
            - Fraction(l * p * q, 3)
        )
        _add_term(acc, (i + p - 1, j + q - 1, 0, l + s - 1, 1), coeff)
    if k == 0 and r == 1 and l:
        _add_term(acc, (i + p, j + q, 0, l + s - 1, 1), Fraction(-l))
    return acc


# --- verification sweeps -----------------------------------------------------


def _quotient_product_table(tag: str, cap: int):
    """All pairwise reduced engine products of survivor monomials."""
    ideal = ideal_for(tag)
    A = ideal.algebra
    ctx = EnvContext(A)
    survivors = [m for m in monomials_up_to(A.dim, cap) if is_survivor(ideal, m)]
    table = {}
    for x in survivors:
        fx = {x: Fraction(1)}
        for y in survivors:
            table[x, y] = reduce(ideal, product(ctx, fx, {y: Fraction(1)}))
    return ideal, ctx, survivors, table


def verify_quotient_oracle(tag: str, cap: int = 3) -> VerificationReport:
    """Closed-form quotient product equals reduce of the engine product on
    every ordered pair of survivor monomials of degree <= cap."""
    rep = VerificationReport(f"quotient closed form vs engine ({tag})")
    ideal, _, survivors, table = _quotient_product_table(tag, cap)
    closed = as_product if tag == "S" else at_product
    labels = ideal.algebra.labels
    for x in survivors:
        for y in survivors:
            rep.record(
                closed(x, y) == table[x, y],
                f"({format_monomial(labels, x)}) ({format_monomial(labels, y)})",
            )
    return rep


def verify_alternative_quotient(tag: str, cap: int = 2) -> VerificationReport:
    """The quotient associator vanishes on repeated arguments and changes
    sign under transpositions, on all survivor monomials of degree <= cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    rep = VerificationReport(f"alternative quotient ({tag})")
    ideal, ctx, survivors, table = _quotient_product_table(tag, cap)
    labels = ideal.algebra.labels

    def named(m):
        return format_monomial(labels, m)

    def qmul_el_mono(f: dict, y: tuple) -> dict:
        return reduce(ideal, product(ctx, f, {y: Fraction(1)}))

    def qmul_mono_el(x: tuple, f: dict) -> dict:
        return reduce(ideal, product(ctx, {x: Fraction(1)}, f))

    assoc = {}
    for x, y, z in iproduct(survivors, repeat=3):
        left = qmul_el_mono(table[x, y], z)
        right = qmul_mono_el(x, table[y, z])
        assoc[x, y, z] = {
            m: c for m, c in ((m, left.get(m, 0) - right.get(m, 0)) for m in left | right) if c
        }
    for x, y in iproduct(survivors, repeat=2):
        rep.record(not assoc[x, x, y], f"({named(x)},{named(x)},{named(y)}) = 0")
        rep.record(not assoc[y, x, x], f"({named(y)},{named(x)},{named(x)}) = 0")
    for x, y, z in iproduct(survivors, repeat=3):
        base = assoc[x, y, z]
        for swapped, tag2 in (
            ((y, x, z), "12"),
            ((x, z, y), "23"),
            ((z, y, x), "13"),
        ):
            other = assoc[swapped]
            ok = all(base.get(m, 0) + other.get(m, 0) == 0 for m in base | other)
            rep.record(
                ok,
                f"associator sign under swap {tag2} at"
                f" ({named(x)},{named(y)},{named(z)})",
            )
    return rep


def verify_speciality_S() -> VerificationReport:
    """The commutator algebra of the 4-dim alternative algebra has exactly
    the solvable Malcev algebra's structure constants, basis to basis."""
    rep = VerificationReport("solvable algebra is special")
    minus = commutator_algebra(catalog("A4"))
    S = catalog("S")
    for i in range(4):
        for j in range(4):
            rep.record(
                minus.table[i][j] == S.table[i][j],
                f"[{S.labels[i]},{S.labels[j]}] matches",
                f"{minus.table[i][j]} != {S.table[i][j]}",
            )
    return rep
