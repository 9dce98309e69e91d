"""Octonion arithmetic, the traceless Malcev algebra, the identification
chain, and the central element of the 7-dim envelope."""

from fractions import Fraction

import pytest

from malcev.core import FiniteAlgebra, catalog, vadd, vscale, verify_variety
from malcev.octonion import (
    find_signed_isomorphism,
    is_signed_isomorphism,
    oct_assoc,
    oct_circ,
    oct_comm,
    oct_mul,
    oct_unit,
    traceless_malcev,
    verify_octonion_theorem_chain,
    verify_um_center,
)

ONE = oct_unit(0)


def test_oct_mul_spot_values():
    e = oct_unit
    assert oct_mul(e(1), e(2)) == e(4)
    assert oct_mul(e(2), e(1)) == vscale(-1, e(4))
    assert oct_mul(e(3), e(3)) == vscale(-1, ONE)
    assert oct_mul(ONE, e(5)) == e(5)
    assert oct_mul(e(5), ONE) == e(5)
    mixed = vadd(vscale(2, ONE), e(1))
    assert oct_mul(mixed, e(1)) == vadd(vscale(2, e(1)), vscale(-1, ONE))


def test_oct_unit_wraps_mod_seven():
    assert oct_unit(8) == oct_unit(1)
    assert oct_unit(14) == oct_unit(7)
    assert oct_unit(0) == ONE


def test_traceless_malcev_brackets():
    M = traceless_malcev()
    assert M.dim == 7
    e = M.basis_vector
    assert M.mul(e(0), e(1)) == vscale(2, e(3))  # [e1, e2] = 2 e4
    assert M.mul(e(1), e(3)) == vscale(2, e(0))  # [e2, e4] = 2 e1
    assert M.mul(e(0), e(0)) == M.zero()
    rep = verify_variety(M, "malcev")
    assert rep.passed, rep.failures[:3]


def test_traceless_is_not_lie():
    rep = verify_variety(traceless_malcev(), "jacobi")
    assert not rep.passed


def test_signed_isomorphism_identity():
    M = catalog("M_nonsplit")
    mapping = find_signed_isomorphism(M, M)
    assert mapping == [(i, 1) for i in range(7)]
    assert is_signed_isomorphism(M, M, mapping)


def test_signed_isomorphism_traceless_vs_catalog():
    M = traceless_malcev()
    N = catalog("M_nonsplit")
    mapping = find_signed_isomorphism(M, N)
    assert mapping is not None
    assert is_signed_isomorphism(M, N, mapping)


def test_signed_isomorphism_absent():
    zero7 = FiniteAlgebra(
        name="abelian7",
        labels=tuple(f"v{i}" for i in range(7)),
        table=tuple(
            tuple(tuple(Fraction(0) for _ in range(7)) for _ in range(7))
            for _ in range(7)
        ),
    )
    assert find_signed_isomorphism(catalog("M_nonsplit"), zero7) is None
    with pytest.raises(ValueError):
        find_signed_isomorphism(catalog("S"), catalog("M_nonsplit"))


def test_chain_spot_values():
    e = oct_unit
    assert oct_assoc(e(2), e(3), e(6)) == vscale(2, e(1))
    assert oct_circ(e(1), e(5)) == vscale(0, ONE)
    assert oct_comm(e(1), e(2)) == vscale(2, e(4))


def test_octonion_theorem_chain():
    rep = verify_octonion_theorem_chain(samples=50)
    assert rep.passed, rep.failures[:5]
    assert rep.checks > 1000


def test_um_center_small():
    rep = verify_um_center(cap=1)
    assert rep.passed, rep.failures[:5]
    assert rep.checks == 8 + 7 * 8 * 3
    with pytest.raises(ValueError):
        verify_um_center(cap=0)
