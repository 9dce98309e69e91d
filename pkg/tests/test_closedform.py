"""Closed-form structure constants against frozen values and the engine."""

from fractions import Fraction

import pytest

from malcev.closedform import (
    bcd_bracket_closed,
    us_product,
    us_subalgebra_product,
    ut_product,
    verify_subalgebra_rules,
    verify_us_crosscheck,
    verify_ut_crosscheck,
)
from malcev.core import catalog
from malcev.envelope import EnvContext, bracket_el_gen, parse_monomial

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


# --- spot values ------------------------------------------------------------


def test_us_product_spot_values():
    assert us_product(s_mono("c"), s_mono("b")) == s_el(("bc", 1), ("d", -2))
    assert us_product(s_mono("b"), s_mono("c")) == s_el(("bc", 1))
    assert us_product(s_mono("a"), s_mono("a^3")) == s_el(("a^4", 1))
    assert us_product(s_mono("1"), s_mono("abc")) == s_el(("abc", 1))
    assert us_product(s_mono("ab"), s_mono("ab")) == s_el(("a^2b^2", 1), ("ab^2", 1))
    assert us_product(s_mono("ad"), s_mono("ad")) == s_el(("a^2d^2", 1), ("ad^2", -1))
    assert us_product(s_mono("bcd"), s_mono("b")) == s_el(("b^2cd", 1), ("bd^2", -2))


def test_us_alternators_via_closed_form():
    bc = s_mono("bc")
    a = s_mono("a")
    left = {}
    for m, c in us_product(a, bc).items():
        for mono, cc in us_product(m, bc).items():
            left[mono] = left.get(mono, 0) + c * cc
    left = {m: c for m, c in left.items() if c}
    assert left == s_el(("ab^2c^2", 1), ("abcd", -2), ("d^2", 2))
    right = {}
    for m, c in us_product(bc, bc).items():
        for mono, cc in us_product(a, m).items():
            right[mono] = right.get(mono, 0) + c * cc
    right = {m: c for m, c in right.items() if c}
    assert right == s_el(("ab^2c^2", 1), ("abcd", -2))


def test_ut_product_spot_values():
    assert ut_product(t_mono("b"), t_mono("a")) == t_el(("ab", 1), ("c", -1))
    assert ut_product(t_mono("a"), t_mono("b")) == t_el(("ab", 1))
    assert ut_product(t_mono("d"), t_mono("c")) == t_el(("cd", 1), ("e", -1))
    assert ut_product(t_mono("c"), t_mono("d")) == t_el(("cd", 1))
    assert ut_product(t_mono("1"), t_mono("e^2")) == t_el(("e^2", 1))
    assert ut_product(t_mono("e"), t_mono("abcd")) == t_el(("abcde", 1))


# --- engine crosschecks -----------------------------------------------------


def test_us_crosscheck_small():
    rep = verify_us_crosscheck(cap=2)
    assert rep.passed, rep.failures[:3]
    assert rep.checks == 15 * 15


def test_ut_crosscheck_small():
    rep = verify_ut_crosscheck(cap=2)
    assert rep.passed, rep.failures[:3]
    assert rep.checks == 21 * 21


def test_us_crosscheck_spot_degree4():
    ctx = EnvContext(catalog("S"))
    from malcev.envelope import product

    for xt, yt in (
        ("a^2d^2", "b^2c^2"),
        ("bcd", "abc"),
        ("a^4", "d^4"),
        ("abcd", "abcd"),
        ("b^2d", "a^2c"),
    ):
        x, y = s_mono(xt), s_mono(yt)
        assert us_product(x, y) == product(
            ctx, {x: Fraction(1)}, {y: Fraction(1)}
        ), (xt, yt)


def test_ut_crosscheck_spot_degree4():
    ctx = EnvContext(catalog("T"))
    from malcev.envelope import product

    for xt, yt in (
        ("abcd", "e^2"),
        ("b^2d^2", "ac"),
        ("cd^3", "ab^2"),
        ("d^4", "c^4"),
    ):
        x, y = t_mono(xt), t_mono(yt)
        assert ut_product(x, y) == product(
            ctx, {x: Fraction(1)}, {y: Fraction(1)}
        ), (xt, yt)


# --- subalgebra rules -------------------------------------------------------


def test_subalgebra_spot_values():
    assert us_subalgebra_product(s_mono("ab"), s_mono("ab")) == s_el(
        ("a^2b^2", 1), ("ab^2", 1)
    )
    assert us_subalgebra_product(s_mono("ad"), s_mono("a^2d")) == s_el(
        ("a^3d^2", 1), ("a^2d^2", -2), ("ad^2", 1)
    )
    assert us_subalgebra_product(s_mono("bcd"), s_mono("b")) == s_el(
        ("b^2cd", 1), ("bd^2", -2)
    )
    assert us_subalgebra_product(s_mono("c^2"), s_mono("c^3")) == s_el(("c^5", 1))


def test_subalgebra_rejects_mixed_support():
    with pytest.raises(ValueError):
        us_subalgebra_product(s_mono("ab"), s_mono("cd"))


def test_subalgebra_rules_match_and_associate():
    rep = verify_subalgebra_rules(cap=3)
    assert rep.passed, rep.failures[:3]


# --- bcd bracket ------------------------------------------------------------


def test_bcd_bracket_closed_spot():
    assert bcd_bracket_closed(s_mono("bcd")) == s_el(("bcd", 1), ("d^2", -3))
    assert bcd_bracket_closed(s_mono("cd")) == {}
    assert bcd_bracket_closed(s_mono("a^2b")) == s_el(("a^2b", 1))
    assert bcd_bracket_closed(s_mono("d^2")) == s_el(("d^2", -2))


def test_bcd_bracket_matches_engine():
    from malcev.envelope import monomials_up_to

    ctx = EnvContext(catalog("S"))
    for m in monomials_up_to(4, 4):
        got = bcd_bracket_closed(m)
        want = bracket_el_gen(ctx, {m: Fraction(1)}, 0)
        assert got == want, m
