"""Structure-constant algebras, varieties, catalog, split decomposition."""

from __future__ import annotations

from fractions import Fraction

import pytest

from malcev.core import (
    EPS,
    GaussianRational,
    algebra_from_json,
    algebra_to_json,
    catalog,
    commutator_algebra,
    evaluate_bilinear,
    format_element,
    jacobian,
    verify_split_decomposition,
    verify_variety,
)
from malcev.linalg import rank


def vec(A, expr: dict[str, int]):
    out = [Fraction(0)] * A.dim
    for label, coeff in expr.items():
        out[A.index(label)] += coeff
    return tuple(out)


def test_bilinear_on_catalog_tables():
    S = catalog("S")
    assert S.mul(vec(S, {"b": 1}), vec(S, {"c": 1})) == vec(S, {"d": 2})
    assert S.mul(S.zero(), vec(S, {"c": 1})) == S.zero()
    T = catalog("T")
    assert T.mul(vec(T, {"a": 1}), vec(T, {"b": 1})) == vec(T, {"c": 1})


def test_bilinear_dimension_mismatch():
    S = catalog("S")
    with pytest.raises(ValueError):
        evaluate_bilinear(S, (Fraction(1),), S.zero())


def test_jacobian_witness_in_S():
    S = catalog("S")
    a, b, c = (vec(S, {l: 1}) for l in "abc")
    assert jacobian(S, a, b, c) == vec(S, {"d": -6})
    assert jacobian(S, a, a, b) == S.zero()


def test_variety_suite_on_malcev_catalog():
    for name in ("S", "T", "M_nonsplit", "M_split", "sl2", "LV5"):
        A = catalog(name)
        assert verify_variety(A, "anticommutative").passed, name
        assert verify_variety(A, "malcev").passed, name


def test_S_fails_jacobi_with_witness():
    rep = verify_variety(catalog("S"), "jacobi")
    assert not rep.passed
    witnesses = {f.where: f.detail for f in rep.failures}
    assert witnesses["J(a,b,c)"] == "-6d"


def test_sl2_is_lie():
    assert verify_variety(catalog("sl2"), "jacobi").passed


def test_LV5_is_not_lie():
    assert not verify_variety(catalog("LV5"), "jacobi").passed


def test_alternative_laws_for_A4_and_octonions():
    for name in ("A4", "octonions"):
        A = catalog(name)
        assert verify_variety(A, "left-alternative").passed, name
        assert verify_variety(A, "right-alternative").passed, name
        assert verify_variety(A, "third-power-associative").passed, name


def test_A4_not_associative():
    assert not verify_variety(catalog("A4"), "associative").passed


def test_commutator_of_A4_is_S():
    S = catalog("S")
    Aminus = commutator_algebra(catalog("A4"))
    assert Aminus.table == S.table
    assert verify_variety(Aminus, "malcev").passed


def test_commutator_algebra_of_octonions():
    Ominus = commutator_algebra(catalog("octonions"))
    assert verify_variety(Ominus, "malcev").passed
    one = Ominus.basis_vector(0)
    for i in range(8):
        assert Ominus.mul(one, Ominus.basis_vector(i)) == Ominus.zero()


def test_octonion_table_spot_values():
    O = catalog("octonions")
    e = lambda i: O.basis_vector(i)
    assert O.mul(e(1), e(2)) == e(4)
    assert O.mul(e(2), e(1)) == tuple(-c for c in e(4))
    assert O.mul(e(3), e(3)) == tuple(-c for c in e(0))
    assert O.mul(e(0), e(5)) == e(5)


def test_jacobian_alternating_on_catalog():
    for name in ("S", "T", "M_nonsplit"):
        A = catalog(name)
        basis = [A.basis_vector(i) for i in range(A.dim)]
        for x in basis:
            for y in basis:
                for z in basis:
                    j1 = jacobian(A, x, y, z)
                    assert jacobian(A, y, x, z) == tuple(-c for c in j1)
                    assert jacobian(A, x, z, y) == tuple(-c for c in j1)


def test_M_nonsplit_brackets_span_everything():
    M = catalog("M_nonsplit")
    rows = [
        list(M.mul(M.basis_vector(i), M.basis_vector(j)))
        for i in range(7)
        for j in range(7)
    ]
    assert rank(rows) == 7


def test_split_decomposition_report():
    rep = verify_split_decomposition()
    assert rep.passed, rep.failures[:3]
    assert rep.checks >= 49 + 9 + 14 + 12


def test_gaussian_rational_arithmetic():
    assert EPS * EPS == -1
    x = GaussianRational.of(Fraction(1, 2)) + EPS
    assert x - EPS == Fraction(1, 2)
    assert (x * x) == GaussianRational(Fraction(-3, 4), Fraction(1))
    assert str(EPS) == "eps"


def test_json_round_trip():
    for name in ("S", "octonions"):
        A = catalog(name)
        again = algebra_from_json(algebra_to_json(A))
        assert again.table == A.table
        assert again.labels == A.labels


def test_json_rejects_malformed():
    with pytest.raises(ValueError):
        algebra_from_json({"name": "x", "dim": 2, "labels": ["a"], "table": []})
    with pytest.raises(ValueError):
        algebra_from_json({"name": "x"})


def test_format_element():
    S = catalog("S")
    assert format_element(S.labels, vec(S, {"d": -6})) == "-6d"
    assert format_element(S.labels, vec(S, {"b": 2, "c": 1})) == "2b + c"
    assert format_element(S.labels, S.zero()) == "0"
    assert format_element(S.labels, vec(S, {"b": 1, "d": -3})) == "b - 3d"


def test_catalog_rejects_unknown():
    with pytest.raises(ValueError):
        catalog("nope")


def test_unknown_variety_rejected():
    with pytest.raises(ValueError):
        verify_variety(catalog("S"), "jordan")
