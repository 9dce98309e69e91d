"""Alternator ideals and the alternative quotients."""

from fractions import Fraction

import pytest

from malcev.core import catalog
from malcev.envelope import (
    EnvContext,
    alternator_left,
    alternator_right,
    parse_monomial,
)
from malcev.quotient import (
    as_product,
    at_product,
    ideal_for,
    is_survivor,
    reduce,
    verify_alternative_quotient,
    verify_ideal_closed,
    verify_quotient_oracle,
    verify_speciality_S,
)

S_LABELS = ("a", "b", "c", "d")
T_LABELS = ("a", "b", "c", "d", "e")


def s_el(*terms) -> dict:
    return {parse_monomial(S_LABELS, t): Fraction(c) for t, c in terms}


def t_el(*terms) -> dict:
    return {parse_monomial(T_LABELS, t): Fraction(c) for t, c in terms}


def s_mono(text: str):
    return parse_monomial(S_LABELS, text)


def t_mono(text: str):
    return parse_monomial(T_LABELS, text)


# --- ideals and reduce -------------------------------------------------------


def test_ideal_membership():
    S = ideal_for("S")
    assert S.contains(s_mono("d^2"))
    assert S.contains(s_mono("bd"))
    assert S.contains(s_mono("a^2cd"))
    assert not S.contains(s_mono("a^3d"))
    assert not S.contains(s_mono("ab^2c"))
    T = ideal_for("T")
    assert T.contains(t_mono("e^2"))
    assert T.contains(t_mono("ce"))
    assert T.contains(t_mono("abc^2de"))
    assert not T.contains(t_mono("abde"))
    assert not T.contains(t_mono("a^2b^2c^2d^2"))
    with pytest.raises(ValueError):
        ideal_for("M")


def test_reduce_examples():
    S = ideal_for("S")
    x = s_el(("ab^2c^2", 1), ("abcd", -2), ("d^2", 2))
    assert reduce(S, x) == s_el(("ab^2c^2", 1))
    assert reduce(S, s_el(("a^3d", 1))) == s_el(("a^3d", 1))
    T = ideal_for("T")
    assert reduce(T, t_el(("ce", 1))) == {}
    # idempotent and linear
    assert reduce(S, reduce(S, x)) == reduce(S, x)
    y = s_el(("d^2", 5), ("a", 3))
    summed = dict(x)
    for m, c in y.items():
        summed[m] = summed.get(m, 0) + c
    want = dict(reduce(S, x))
    for m, c in reduce(S, y).items():
        want[m] = want.get(m, 0) + c
    assert reduce(S, summed) == {m: c for m, c in want.items() if c}


def test_ideal_closed_small():
    for tag in ("S", "T"):
        rep = verify_ideal_closed(ideal_for(tag), cap=3)
        assert rep.passed, rep.failures[:3]
    with pytest.raises(ValueError):
        verify_ideal_closed(ideal_for("S"), cap=1)


# --- closed-form quotient products -------------------------------------------


def test_as_product_spot_values():
    assert as_product(s_mono("ad"), s_mono("a^2d")) == {}
    assert as_product(s_mono("c"), s_mono("b")) == s_el(("bc", 1), ("d", -2))
    assert as_product(s_mono("b"), s_mono("c")) == s_el(("bc", 1))
    assert as_product(s_mono("d"), s_mono("a")) == s_el(("ad", 1), ("d", -1))
    assert as_product(s_mono("d"), s_mono("ab")) == {}
    assert as_product(s_mono("ab"), s_mono("a^2d")) == {}
    assert as_product(s_mono("a"), s_mono("a^2d")) == s_el(("a^3d", 1))
    # (a^i b^j c^k)(a^m b^n c^p) at i=j=m=p=1: main a(a+1)bc, case (1,0)
    # correction (a-1)^2 d - a(a+1) d
    assert as_product(s_mono("ab"), s_mono("ac")) == s_el(
        ("a^2bc", 1), ("abc", 1), ("ad", -3), ("d", 1)
    )


def test_as_product_rejects_ideal_monomials():
    with pytest.raises(ValueError):
        as_product(s_mono("d^2"), s_mono("a"))
    with pytest.raises(ValueError):
        as_product(s_mono("a"), s_mono("bd"))


def test_at_product_spot_values():
    assert at_product(t_mono("b"), t_mono("a")) == t_el(("ab", 1), ("c", -1))
    assert at_product(t_mono("e"), t_mono("be")) == {}
    assert at_product(t_mono("abcd"), t_mono("1")) == t_el(("abcd", 1))
    assert at_product(t_mono("abde"), t_mono("ab")) == t_el(("a^2b^2de", 1))
    assert at_product(t_mono("abde"), t_mono("c")) == {}
    assert at_product(t_mono("cd"), t_mono("e")) == {}
    assert at_product(t_mono("d"), t_mono("c")) == t_el(("cd", 1), ("e", -1))


def test_at_product_rejects_ideal_monomials():
    with pytest.raises(ValueError):
        at_product(t_mono("e^2"), t_mono("a"))
    with pytest.raises(ValueError):
        at_product(t_mono("a"), t_mono("ce"))


def test_quotient_oracle_small():
    for tag in ("S", "T"):
        rep = verify_quotient_oracle(tag, cap=2)
        assert rep.passed, rep.failures[:3]


# --- alternativity -----------------------------------------------------------


def test_unreduced_alternator_contrast():
    ctx = EnvContext(catalog("S"))
    bc = s_el(("bc", 1))
    alt = alternator_right(ctx, bc, s_el(("a", 1)))
    assert alt == s_el(("d^2", 2))  # (a, bc, bc)
    assert reduce(ideal_for("S"), alt) == {}


def test_alternators_reduce_to_zero():
    ctx_s = EnvContext(catalog("S"))
    S = ideal_for("S")
    ab = s_el(("ab", 1))
    ac = s_el(("ac", 1))
    bc = s_el(("bc", 1))
    for x, y in ((bc, s_el(("a", 1))), (ac, s_el(("b", 1))), (ab, s_el(("c", 1)))):
        assert reduce(S, alternator_right(ctx_s, x, y)) == {}
    ctx_t = EnvContext(catalog("T"))
    T = ideal_for("T")
    for x, y in (
        (t_el(("ab", 1)), t_el(("d", 1))),
        (t_el(("bd", 1)), t_el(("a^2", 1))),
    ):
        assert reduce(T, alternator_left(ctx_t, x, y)) == {}


def test_alternative_quotient_small():
    for tag in ("S", "T"):
        rep = verify_alternative_quotient(tag, cap=1)
        assert rep.passed, rep.failures[:3]
    with pytest.raises(ValueError):
        verify_alternative_quotient("S", cap=0)


def test_survivor_predicate():
    S = ideal_for("S")
    assert is_survivor(S, s_mono("a^2d"))
    assert not is_survivor(S, s_mono("abd"))


def test_speciality():
    rep = verify_speciality_S()
    assert rep.passed, rep.failures[:3]
    assert rep.checks == 16
