"""Exact structure-constant algebras, a catalog of test algebras, and
verification of variety identities.

An algebra is a dense table of rational structure constants c[i][j][k] over an
ordered basis; bracket tables and full multiplication tables share the type.
All arithmetic is exact: Fraction scalars, or GaussianRational where a square
root of -1 is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .reports import VerificationReport

Scalar = Union[int, Fraction, "GaussianRational"]

VARIETIES = (
    "anticommutative",
    "jacobi",
    "malcev",
    "left-alternative",
    "right-alternative",
    "third-power-associative",
    "associative",
)


@dataclass(frozen=True)
class GaussianRational:
    """Rational plus a formal imaginary part; eps**2 reduces to -1 exactly."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(x: Scalar) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(Fraction(x), Fraction(0))

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im == 1:
            im = "eps"
        elif self.im == -1:
            im = "-eps"
        else:
            im = f"{self.im}*eps"
        if not self.re:
            return im
        joiner = "" if im.startswith("-") else "+"
        return f"({self.re}{joiner}{im})"


EPS = GaussianRational(Fraction(0), Fraction(1))
HALF = Fraction(1, 2)

Vector = tuple  # dense coefficient tuple over an algebra's basis


@dataclass(frozen=True)
class FiniteAlgebra:
    """Finite-dimensional algebra given by structure constants.

    table[i][j][k] is the coefficient of basis element k in the product of
    basis elements i and j. No symmetry is assumed.
    """

    name: str
    labels: tuple[str, ...]
    table: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def mul(self, u: Vector, v: Vector) -> Vector:
        return evaluate_bilinear(self, u, v)

    def index(self, label: str) -> int:
        return self.labels.index(label)


def evaluate_bilinear(A: FiniteAlgebra, u: Vector, v: Vector) -> Vector:
    if len(u) != A.dim or len(v) != A.dim:
        raise ValueError(f"dimension mismatch: algebra {A.name} has dim {A.dim}")
    out: list[Scalar] = [Fraction(0)] * A.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = A.table[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            uv = ui * vj
            for k, c in enumerate(row[j]):
                if c:
                    out[k] = out[k] + uv * c
    return tuple(out)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Vector) -> bool:
    return all(not a for a in u)


def _is_negative(c: Scalar) -> bool:
    if isinstance(c, GaussianRational):
        return not c.im and c.re < 0
    return c < 0


def format_element(labels: Sequence[str], u: Vector) -> str:
    """Human form of a vector, e.g. '-6d' or '2b + c'."""
    parts: list[str] = []
    for coeff, label in zip(u, labels):
        if not coeff:
            continue
        neg = _is_negative(coeff)
        mag = -coeff if (parts and neg) else coeff
        if label == "1":
            body = str(mag)
        elif mag == 1:
            body = label
        elif mag == -1:
            body = f"-{label}"
        else:
            body = f"{mag}{label}"
        if not parts:
            parts.append(body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def jacobian(A: FiniteAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    m = A.mul
    return vadd(vadd(m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y))


def associator(A: FiniteAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    m = A.mul
    return vsub(m(m(x, y), z), m(x, m(y, z)))


def commutator_algebra(B: FiniteAlgebra) -> FiniteAlgebra:
    table = tuple(
        tuple(
            tuple(B.table[i][j][k] - B.table[j][i][k] for k in range(B.dim))
            for j in range(B.dim)
        )
        for i in range(B.dim)
    )
    return FiniteAlgebra(name=f"{B.name}^-", labels=B.labels, table=table)


def _malcev_defect(A: FiniteAlgebra, a: Vector, b: Vector, c: Vector) -> Vector:
    return vsub(
        A.mul(jacobian(A, a, b, c), a), jacobian(A, a, b, A.mul(a, c))
    )


def _malcev_defect_linear(
    A: FiniteAlgebra, a1: Vector, a2: Vector, b: Vector, c: Vector
) -> Vector:
    m = A.mul
    out = vadd(m(jacobian(A, a1, b, c), a2), m(jacobian(A, a2, b, c), a1))
    out = vsub(out, jacobian(A, a1, b, m(a2, c)))
    return vsub(out, jacobian(A, a2, b, m(a1, c)))


def verify_variety(A: FiniteAlgebra, variety: str) -> VerificationReport:
    """Check a defining identity of the named variety on all basis tuples.

    Multilinear identities are checked directly on basis tuples.
    Non-multilinear ones are checked on basis substitutions of their full
    linearizations, plus the original identity on basis elements.
    """
    if variety not in VARIETIES:
        raise ValueError(f"unknown variety {variety!r}")
    rep = VerificationReport(f"{A.name} is {variety}")
    basis = [A.basis_vector(i) for i in range(A.dim)]
    L = A.labels
    m = A.mul

    def check(ok_vec: Vector, where: str) -> None:
        rep.record(is_zero(ok_vec), where, format_element(L, ok_vec))

    if variety == "anticommutative":
        for i, x in enumerate(basis):
            check(m(x, x), f"[{L[i]},{L[i]}]")
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                check(vadd(m(x, y), m(y, x)), f"[{L[i]},{L[j]}]+[{L[j]},{L[i]}]")
    elif variety == "jacobi":
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    check(jacobian(A, x, y, z), f"J({L[i]},{L[j]},{L[k]})")
    elif variety == "malcev":
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    check(
                        _malcev_defect(A, x, y, z),
                        f"malcev({L[i]},{L[j]},{L[k]})",
                    )
        for i1, x1 in enumerate(basis):
            for i2, x2 in enumerate(basis):
                for j, y in enumerate(basis):
                    for k, z in enumerate(basis):
                        check(
                            _malcev_defect_linear(A, x1, x2, y, z),
                            f"malcev-linear({L[i1]},{L[i2]},{L[j]},{L[k]})",
                        )
    elif variety == "left-alternative":
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                check(associator(A, x, x, y), f"({L[i]},{L[i]},{L[j]})")
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    check(
                        vadd(associator(A, x, z, y), associator(A, z, x, y)),
                        f"({L[i]},{L[k]},{L[j]})+({L[k]},{L[i]},{L[j]})",
                    )
    elif variety == "right-alternative":
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                check(associator(A, y, x, x), f"({L[j]},{L[i]},{L[i]})")
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    check(
                        vadd(associator(A, y, x, z), associator(A, y, z, x)),
                        f"({L[j]},{L[i]},{L[k]})+({L[j]},{L[k]},{L[i]})",
                    )
    elif variety == "third-power-associative":
        for i, x in enumerate(basis):
            check(associator(A, x, x, x), f"({L[i]},{L[i]},{L[i]})")
        from itertools import permutations

        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    acc = A.zero()
                    for p, q, r in permutations((x, y, z)):
                        acc = vadd(acc, associator(A, p, q, r))
                    check(acc, f"sym-associator({L[i]},{L[j]},{L[k]})")
    elif variety == "associative":
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    check(associator(A, x, y, z), f"({L[i]},{L[j]},{L[k]})")
    return rep


# ---------------------------------------------------------------------------
# Catalog


def _table_from_entries(
    labels: Sequence[str],
    entries: dict[tuple[str, str], Iterable[tuple[int, str]]],
    antisymmetric: bool,
) -> tuple:
    n = len(labels)
    idx = {s: i for i, s in enumerate(labels)}
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (li, lj), terms in entries.items():
        i, j = idx[li], idx[lj]
        for coeff, lk in terms:
            table[i][j][idx[lk]] += Fraction(coeff)
            if antisymmetric:
                table[j][i][idx[lk]] -= Fraction(coeff)
    return tuple(tuple(tuple(row) for row in plane) for plane in table)


def _bracket_algebra(name, labels, entries) -> FiniteAlgebra:
    return FiniteAlgebra(
        name=name,
        labels=tuple(labels),
        table=_table_from_entries(labels, entries, antisymmetric=True),
    )


def _octonion_table() -> tuple:
    """Unital 8-dim table: unit first, then e1..e7 with cyclic index rules."""
    labels = OCTONION_LABELS
    n = 8
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        table[0][i][i] += 1
        if i:
            table[i][0][i] += 1
    for i in range(1, 8):
        table[i][i][0] -= 1

    def wrap(i: int) -> int:
        return (i - 1) % 7 + 1

    def set_pair(i: int, j: int, k: int) -> None:
        table[i][j][k] += 1
        table[j][i][k] -= 1

    for i in range(1, 8):
        set_pair(i, wrap(i + 1), wrap(i + 3))
        set_pair(wrap(i + 1), wrap(i + 3), i)
        set_pair(wrap(i + 3), i, wrap(i + 1))
    return tuple(tuple(tuple(row) for row in plane) for plane in table)


OCTONION_LABELS = ("1", "e1", "e2", "e3", "e4", "e5", "e6", "e7")

CATALOG_NAMES = ("S", "T", "A4", "M_nonsplit", "M_split", "sl2", "LV5", "octonions")


def catalog(name: str) -> FiniteAlgebra:
    if name == "S":
        return _bracket_algebra(
            "S",
            ("a", "b", "c", "d"),
            {
                ("a", "b"): [(-1, "b")],
                ("a", "c"): [(-1, "c")],
                ("a", "d"): [(1, "d")],
                ("b", "c"): [(2, "d")],
            },
        )
    if name == "T":
        return _bracket_algebra(
            "T",
            ("a", "b", "c", "d", "e"),
            {("a", "b"): [(1, "c")], ("c", "d"): [(1, "e")]},
        )
    if name == "A4":
        labels = ("a", "b", "c", "d")
        entries = {
            ("a", "a"): [(1, "a")],
            ("a", "d"): [(1, "d")],
            ("b", "a"): [(1, "b")],
            ("b", "c"): [(1, "d")],
            ("c", "a"): [(1, "c")],
            ("c", "b"): [(-1, "d")],
        }
        return FiniteAlgebra(
            name="A4",
            labels=labels,
            table=_table_from_entries(labels, entries, antisymmetric=False),
        )
    if name == "M_nonsplit":
        L = ("e1", "e2", "e3", "e4", "e5", "e6", "e7")
        # basis order (i, j, k, l, m, n, p); 21 independent brackets
        entries = {
            ("e1", "e2"): [(2, "e3")],
            ("e1", "e3"): [(-2, "e2")],
            ("e1", "e4"): [(2, "e5")],
            ("e1", "e5"): [(-2, "e4")],
            ("e1", "e6"): [(-2, "e7")],
            ("e1", "e7"): [(2, "e6")],
            ("e2", "e3"): [(2, "e1")],
            ("e2", "e4"): [(2, "e6")],
            ("e2", "e5"): [(2, "e7")],
            ("e2", "e6"): [(-2, "e4")],
            ("e2", "e7"): [(-2, "e5")],
            ("e3", "e4"): [(2, "e7")],
            ("e3", "e5"): [(-2, "e6")],
            ("e3", "e6"): [(2, "e5")],
            ("e3", "e7"): [(-2, "e4")],
            ("e4", "e5"): [(2, "e1")],
            ("e4", "e6"): [(2, "e2")],
            ("e4", "e7"): [(2, "e3")],
            ("e5", "e6"): [(-2, "e3")],
            ("e5", "e7"): [(2, "e2")],
            ("e6", "e7"): [(-2, "e1")],
        }
        return _bracket_algebra("M_nonsplit", L, entries)
    if name == "M_split":
        L = ("h", "x", "y", "z", "x'", "y'", "z'")
        entries = {
            ("h", "x"): [(2, "x")],
            ("h", "y"): [(2, "y")],
            ("h", "z"): [(2, "z")],
            ("h", "x'"): [(-2, "x'")],
            ("h", "y'"): [(-2, "y'")],
            ("h", "z'"): [(-2, "z'")],
            ("x", "y"): [(2, "z'")],
            ("x", "z"): [(-2, "y'")],
            ("x", "x'"): [(1, "h")],
            ("y", "z"): [(2, "x'")],
            ("y", "y'"): [(1, "h")],
            ("z", "z'"): [(1, "h")],
            ("x'", "y'"): [(-2, "z")],
            ("x'", "z'"): [(2, "y")],
            ("y'", "z'"): [(-2, "x")],
        }
        return _bracket_algebra("M_split", L, entries)
    if name == "sl2":
        return _bracket_algebra(
            "sl2",
            ("h", "x", "x'"),
            {
                ("h", "x"): [(2, "x")],
                ("h", "x'"): [(-2, "x'")],
                ("x", "x'"): [(1, "h")],
            },
        )
    if name == "LV5":
        # sl2 plus its 2-dim irreducible non-Lie module spanned by y, z'
        return _bracket_algebra(
            "LV5",
            ("h", "x", "x'", "y", "z'"),
            {
                ("h", "x"): [(2, "x")],
                ("h", "x'"): [(-2, "x'")],
                ("x", "x'"): [(1, "h")],
                ("h", "y"): [(2, "y")],
                ("h", "z'"): [(-2, "z'")],
                ("x", "y"): [(2, "z'")],
                ("x'", "z'"): [(2, "y")],
            },
        )
    if name == "octonions":
        return FiniteAlgebra(
            name="octonions", labels=OCTONION_LABELS, table=_octonion_table()
        )
    raise ValueError(f"unknown catalog name {name!r}")


# ---------------------------------------------------------------------------
# JSON interchange


def algebra_to_json(A: FiniteAlgebra) -> dict:
    return {
        "name": A.name,
        "dim": A.dim,
        "labels": list(A.labels),
        "table": [
            [[str(c) for c in cell] for cell in row] for row in A.table
        ],
    }


def algebra_from_json(data: dict) -> FiniteAlgebra:
    try:
        name = data["name"]
        dim = data["dim"]
        labels = tuple(data["labels"])
        raw = data["table"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"algebra JSON missing field: {exc}") from exc
    if not isinstance(dim, int) or dim <= 0 or len(labels) != dim:
        raise ValueError("algebra JSON: dim must be a positive int matching labels")
    if len(raw) != dim or any(
        len(row) != dim or any(len(cell) != dim for cell in row) for row in raw
    ):
        raise ValueError("algebra JSON: table must be dim x dim x dim")
    table = tuple(
        tuple(tuple(Fraction(c) for c in cell) for cell in row) for row in raw
    )
    return FiniteAlgebra(name=str(name), labels=labels, table=table)


# ---------------------------------------------------------------------------
# Split/non-split comparison over GaussianRational


def _gvec(*coords: Scalar) -> tuple[GaussianRational, ...]:
    return tuple(GaussianRational.of(c) for c in coords)


def split_basis_in_nonsplit() -> dict[str, tuple[GaussianRational, ...]]:
    """Split-form basis written in complexified non-split coordinates.

    Non-split coordinate order matches catalog(M_nonsplit).
    """
    Z = Fraction(0)
    H = HALF

    def vec(pairs: dict[int, Scalar]) -> tuple[GaussianRational, ...]:
        return _gvec(*[pairs.get(i, Z) for i in range(7)])

    return {
        "h": vec({3: EPS}),
        "x": vec({0: H, 4: -H * EPS}),
        "y": vec({2: H, 6: -H * EPS}),
        "z": vec({1: H, 5: -H * EPS}),
        "x'": vec({0: -H, 4: -H * EPS}),
        "y'": vec({2: -H, 6: -H * EPS}),
        "z'": vec({1: -H, 5: -H * EPS}),
    }


def verify_split_decomposition() -> VerificationReport:
    """Relate the non-split and split forms of the 7-dim simple algebra.

    Checks, over GaussianRational: (i) the complexified change of basis turns
    the non-split table into the split table on all pairs; (ii) {h, x, x'}
    satisfies the rank-1 simple Lie algebra relations; (iii) the module action
    brackets on {y, z'} and {z, y'}; (iv) the swap y -> -z, z' -> y'
    intertwines the two module actions.
    """
    rep = VerificationReport("split decomposition")
    M4 = catalog("M_nonsplit")
    M5 = catalog("M_split")
    split = split_basis_in_nonsplit()
    labels5 = M5.labels

    # (i) every split-form bracket, computed in complexified non-split coords
    for i, li in enumerate(labels5):
        for j, lj in enumerate(labels5):
            got = evaluate_bilinear(M4, split[li], split[lj])
            want: tuple = (GaussianRational.of(0),) * 7
            for k, c in enumerate(M5.table[i][j]):
                if c:
                    want = vadd(want, vscale(c, split[labels5[k]]))
            rep.record(
                is_zero(vsub(got, want)),
                f"change of basis [{li},{lj}]",
                format_element(M4.labels, got),
            )

    # (ii) the sl2 relations inside the split form
    sl2 = catalog("sl2")
    for li in sl2.labels:
        for lj in sl2.labels:
            got = M5.mul(
                M5.basis_vector(M5.index(li)), M5.basis_vector(M5.index(lj))
            )
            want = M5.zero()
            for k, c in enumerate(
                sl2.table[sl2.index(li)][sl2.index(lj)]
            ):
                if c:
                    want = vadd(want, vscale(c, M5.basis_vector(M5.index(sl2.labels[k]))))
            rep.record(
                is_zero(vsub(got, want)), f"sl2 relation [{li},{lj}]",
                format_element(M5.labels, got),
            )

    # (iii) the stated module actions, plus triviality inside each module
    actions = {
        ("h", "y"): [(2, "y")],
        ("h", "z'"): [(-2, "z'")],
        ("h", "z"): [(2, "z")],
        ("h", "y'"): [(-2, "y'")],
        ("x", "y"): [(2, "z'")],
        ("x", "z'"): [],
        ("x", "z"): [(-2, "y'")],
        ("x", "y'"): [],
        ("x'", "y"): [],
        ("x'", "z'"): [(2, "y")],
        ("x'", "z"): [],
        ("x'", "y'"): [(-2, "z")],
        ("y", "z'"): [],
        ("z", "y'"): [],
    }
    for (li, lj), terms in actions.items():
        got = M5.mul(M5.basis_vector(M5.index(li)), M5.basis_vector(M5.index(lj)))
        want = M5.zero()
        for coeff, lk in terms:
            want = vadd(want, vscale(Fraction(coeff), M5.basis_vector(M5.index(lk))))
        rep.record(
            is_zero(vsub(got, want)), f"module action [{li},{lj}]",
            format_element(M5.labels, got),
        )

    # (iv) intertwining both ways: theta(y) = -z, theta(z') = y'
    def theta(v: Vector) -> Vector:
        out = list(M5.zero())
        out[M5.index("z")] = -v[M5.index("y")]
        out[M5.index("y'")] = v[M5.index("z'")]
        return tuple(out)

    def theta_inv(v: Vector) -> Vector:
        out = list(M5.zero())
        out[M5.index("y")] = -v[M5.index("z")]
        out[M5.index("z'")] = v[M5.index("y'")]
        return tuple(out)

    for lu in ("h", "x", "x'"):
        u = M5.basis_vector(M5.index(lu))
        for lv in ("y", "z'"):
            v = M5.basis_vector(M5.index(lv))
            lhs = theta(M5.mul(u, v))
            rhs = M5.mul(u, theta(v))
            rep.record(
                is_zero(vsub(lhs, rhs)), f"intertwine V->W [{lu},{lv}]",
                format_element(M5.labels, vsub(lhs, rhs)),
            )
        for lw in ("z", "y'"):
            w = M5.basis_vector(M5.index(lw))
            lhs = theta_inv(M5.mul(u, w))
            rhs = M5.mul(u, theta_inv(w))
            rep.record(
                is_zero(vsub(lhs, rhs)), f"intertwine W->V [{lu},{lw}]",
                format_element(M5.labels, vsub(lhs, rhs)),
            )
    return rep
