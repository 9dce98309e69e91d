"""Universal nonassociative enveloping algebra U(M) on its PBW basis.

Elements are sparse maps from exponent vectors to rationals. A monomial with
exponents (i1, ..., in) stands for the left-tapped word g1^i1 ( g2^i2 ( ... ))
with generator indices non-decreasing; the empty vector is the unit. Products
are reduced eagerly to this basis by three recursive rewriting rules:

  [by, a] = [b,a]y + b[y,a] + 1/2 [[y,a],b] - 1/2 [[y,b],a] - 1/2 [y,[a,b]]
  a(by)   = b(ay) + [a,b]y - 1/3 [[y,a],b] + 1/3 [[y,b],a] + 1/3 [y,[a,b]]
  (aw)z   = 2a(wz) - w(az) - w[z,a] + [wz, a]

with a, b generators, y, w, z monomials, b minimal in its monomial. The
fractional coefficients require characteristic 0; coefficients are Fraction
throughout and no other ring is configurable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .core import FiniteAlgebra, verify_variety
from .reports import VerificationReport

PbwMonomial = tuple  # exponent vector, one slot per generator
EnvElement = dict  # PbwMonomial -> Fraction, zero never stored

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def unit_monomial(dim: int) -> PbwMonomial:
    return (0,) * dim


def degree(m: PbwMonomial) -> int:
    return sum(m)


def monomials_of_degree(dim: int, d: int) -> list[PbwMonomial]:
    out = []
    for combo in combinations_with_replacement(range(dim), d):
        exps = [0] * dim
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out)


def monomials_up_to(dim: int, cap: int) -> list[PbwMonomial]:
    out: list[PbwMonomial] = []
    for d in range(cap + 1):
        out.extend(monomials_of_degree(dim, d))
    return out


# --- element helpers -------------------------------------------------------


def el_zero() -> EnvElement:
    return {}


def el_monomial(m: PbwMonomial, coeff: Fraction = Fraction(1)) -> EnvElement:
    return {m: Fraction(coeff)} if coeff else {}


def _add_into(acc: EnvElement, el: EnvElement, scale: Fraction = Fraction(1)) -> None:
    if not scale:
        return
    for m, c in el.items():
        new = acc.get(m, 0) + c * scale
        if new:
            acc[m] = new
        else:
            acc.pop(m, None)


def el_add(*els: EnvElement) -> EnvElement:
    acc: EnvElement = {}
    for el in els:
        _add_into(acc, el)
    return acc


def el_sub(x: EnvElement, y: EnvElement) -> EnvElement:
    acc = dict(x)
    _add_into(acc, y, Fraction(-1))
    return acc


def el_scale(c: Fraction, el: EnvElement) -> EnvElement:
    c = Fraction(c)
    return {m: v * c for m, v in el.items()} if c else {}


def el_degree(el: EnvElement) -> int:
    return max((degree(m) for m in el), default=0)


def _first_gen(m: PbwMonomial) -> int:
    for i, e in enumerate(m):
        if e:
            return i
    raise ValueError("unit monomial has no generators")


def _without(m: PbwMonomial, g: int) -> PbwMonomial:
    out = list(m)
    out[g] -= 1
    return tuple(out)


def _with(m: PbwMonomial, g: int) -> PbwMonomial:
    out = list(m)
    out[g] += 1
    return tuple(out)


class EnvContext:
    """Carrier for an enveloping-algebra computation over a fixed algebra.

    Caches bracket-with-generator and generator-left-multiplication results,
    keyed by (generator index, monomial); full monomial products are always
    recomputed from these.
    """

    def __init__(self, algebra: FiniteAlgebra, verify: bool = True, use_cache: bool = True):
        if verify:
            for variety in ("anticommutative", "malcev"):
                rep = verify_variety(algebra, variety)
                if not rep.passed:
                    raise ValueError(
                        f"algebra {algebra.name} is not {variety}: "
                        f"{rep.failures[0].where}"
                    )
        self.algebra = algebra
        self.dim = algebra.dim
        self.use_cache = use_cache
        self._bracket_cache: dict = {}
        self._leftmul_cache: dict = {}

    def _check_gen(self, a: int) -> None:
        if not 0 <= a < self.dim:
            raise ValueError(f"generator index {a} out of range for dim {self.dim}")

    def gen_bracket(self, i: int, j: int) -> EnvElement:
        """[g_i, g_j] from the structure constants, as a degree <= 1 element."""
        out: EnvElement = {}
        for k, c in enumerate(self.algebra.table[i][j]):
            if c:
                out[_with(unit_monomial(self.dim), k)] = c
        return out


def bracket_mono_gen(ctx: EnvContext, x: PbwMonomial, a: int) -> EnvElement:
    """[x, a] reduced to the PBW basis; recursion descends on degree(x)."""
    ctx._check_gen(a)
    key = (a, x)
    if ctx.use_cache:
        hit = ctx._bracket_cache.get(key)
        if hit is not None:
            return dict(hit)
    n = degree(x)
    if n == 0:
        result: EnvElement = {}
    elif n == 1:
        result = ctx.gen_bracket(_first_gen(x), a)
    else:
        b = _first_gen(x)
        y = _without(x, b)
        ya = bracket_mono_gen(ctx, y, a)
        yb = bracket_mono_gen(ctx, y, b)
        acc: EnvElement = {}
        # [b,a] y
        for k, c in enumerate(ctx.algebra.table[b][a]):
            if c:
                _add_into(acc, left_mul_gen(ctx, k, y), c)
        # b [y,a]
        _add_into(acc, left_mul_el(ctx, b, ya))
        # 1/2 [[y,a], b]
        _add_into(acc, bracket_el_gen(ctx, ya, b), HALF)
        # -1/2 [[y,b], a]
        _add_into(acc, bracket_el_gen(ctx, yb, a), -HALF)
        # -1/2 [y, [a,b]]
        for k, c in enumerate(ctx.algebra.table[a][b]):
            if c:
                _add_into(acc, bracket_mono_gen(ctx, y, k), -HALF * c)
        result = acc
    if ctx.use_cache:
        ctx._bracket_cache[key] = dict(result)
    return result


def left_mul_gen(ctx: EnvContext, a: int, x: PbwMonomial) -> EnvElement:
    """a . x reduced to the PBW basis.

    Terminates by the lexicographic measure (degree, inversions of the
    prepended generator): the b(ay) call strictly drops one inversion and
    every other call drops the degree.
    """
    ctx._check_gen(a)
    if degree(x) == 0:
        return el_monomial(_with(unit_monomial(ctx.dim), a))
    b = _first_gen(x)
    if a <= b:
        return el_monomial(_with(x, a))
    key = (a, x)
    if ctx.use_cache:
        hit = ctx._leftmul_cache.get(key)
        if hit is not None:
            return dict(hit)
    y = _without(x, b)
    acc: EnvElement = {}
    # b (a y)
    _add_into(acc, left_mul_el(ctx, b, left_mul_gen(ctx, a, y)))
    # [a,b] y
    for k, c in enumerate(ctx.algebra.table[a][b]):
        if c:
            _add_into(acc, left_mul_gen(ctx, k, y), c)
    ya = bracket_mono_gen(ctx, y, a)
    yb = bracket_mono_gen(ctx, y, b)
    # -1/3 [[y,a], b]
    _add_into(acc, bracket_el_gen(ctx, ya, b), -THIRD)
    # +1/3 [[y,b], a]
    _add_into(acc, bracket_el_gen(ctx, yb, a), THIRD)
    # +1/3 [y, [a,b]]
    for k, c in enumerate(ctx.algebra.table[a][b]):
        if c:
            _add_into(acc, bracket_mono_gen(ctx, y, k), THIRD * c)
    if ctx.use_cache:
        ctx._leftmul_cache[key] = dict(acc)
    return acc


def bracket_el_gen(ctx: EnvContext, el: EnvElement, a: int) -> EnvElement:
    acc: EnvElement = {}
    for m, c in el.items():
        _add_into(acc, bracket_mono_gen(ctx, m, a), c)
    return acc


def left_mul_el(ctx: EnvContext, a: int, el: EnvElement) -> EnvElement:
    acc: EnvElement = {}
    for m, c in el.items():
        _add_into(acc, left_mul_gen(ctx, a, m), c)
    return acc


def _mono_times_el(ctx: EnvContext, x: PbwMonomial, z: EnvElement) -> EnvElement:
    n = degree(x)
    if n == 0:
        return dict(z)
    a = _first_gen(x)
    if n == 1:
        return left_mul_el(ctx, a, z)
    w = _without(x, a)
    wz = _mono_times_el(ctx, w, z)
    acc = el_scale(2, left_mul_el(ctx, a, wz))
    # - w (a z)
    _add_into(acc, _mono_times_el(ctx, w, left_mul_el(ctx, a, z)), Fraction(-1))
    # - w [z, a]
    za: EnvElement = {}
    for m, c in z.items():
        _add_into(za, bracket_mono_gen(ctx, m, a), c)
    _add_into(acc, _mono_times_el(ctx, w, za), Fraction(-1))
    # + [wz, a]
    _add_into(acc, bracket_el_gen(ctx, wz, a))
    return acc


def product(ctx: EnvContext, x: EnvElement, y: EnvElement) -> EnvElement:
    """Bilinear product on U(M); left factor reduced by the (aw)z rule."""
    acc: EnvElement = {}
    for m, c in x.items():
        _add_into(acc, _mono_times_el(ctx, m, y), c)
    return acc


def commutator(ctx: EnvContext, x: EnvElement, y: EnvElement) -> EnvElement:
    return el_sub(product(ctx, x, y), product(ctx, y, x))


def associator(ctx: EnvContext, x: EnvElement, y: EnvElement, z: EnvElement) -> EnvElement:
    left = product(ctx, product(ctx, x, y), z)
    right = product(ctx, x, product(ctx, y, z))
    return el_sub(left, right)


def alternator_left(ctx: EnvContext, x: EnvElement, y: EnvElement) -> EnvElement:
    """(x, x, y)."""
    return associator(ctx, x, x, y)


def alternator_right(ctx: EnvContext, x: EnvElement, y: EnvElement) -> EnvElement:
    """(y, x, x)."""
    return associator(ctx, y, x, x)


def derivation_dab(ctx: EnvContext, a: int, b: int, x: EnvElement) -> EnvElement:
    """The inner derivation attached to a pair of generators.

    D(x) = 1/2 [[a,b], x] + 1/2 ([a,[b,x]] - [b,[a,x]]), written via the
    right-bracket primitive [m, g]: [g, x] = -[x, g].
    """
    ctx._check_gen(a)
    ctx._check_gen(b)
    acc: EnvElement = {}
    for k, c in enumerate(ctx.algebra.table[a][b]):
        if c:
            _add_into(acc, bracket_el_gen(ctx, x, k), -HALF * c)
    xb = bracket_el_gen(ctx, x, b)
    xa = bracket_el_gen(ctx, x, a)
    _add_into(acc, bracket_el_gen(ctx, xb, a), HALF)
    _add_into(acc, bracket_el_gen(ctx, xa, b), -HALF)
    return acc


def nucleus_center_check(ctx: EnvContext, elem: EnvElement, cap: int) -> VerificationReport:
    """Nucleus and center membership up to a degree cap.

    Checks all three associator placements against all pairs of basis
    monomials of degree <= cap, and commutation against the same monomials.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    labels = ctx.algebra.labels
    rep = VerificationReport("nucleus/center membership")
    monos = monomials_up_to(ctx.dim, cap)
    for mx in monos:
        x = el_monomial(mx)
        com = commutator(ctx, elem, x)
        rep.record(not com, f"center [elem, {format_monomial(labels, mx)}]",
                   format_env(labels, com))
    for mx in monos:
        x = el_monomial(mx)
        for my in monos:
            y = el_monomial(my)
            sx = format_monomial(labels, mx)
            sy = format_monomial(labels, my)
            for tag, trip in (
                ("(elem,x,y)", (elem, x, y)),
                ("(x,elem,y)", (x, elem, y)),
                ("(x,y,elem)", (x, y, elem)),
            ):
                res = associator(ctx, *trip)
                rep.record(not res, f"nucleus {tag} at x={sx}, y={sy}",
                           format_env(labels, res))
    return rep


# --- text and JSON forms ---------------------------------------------------


def format_monomial(labels, m: PbwMonomial) -> str:
    if not any(m):
        return "1"
    parts = []
    for label, e in zip(labels, m):
        if e == 1:
            parts.append(label)
        elif e > 1:
            parts.append(f"{label}^{e}")
    return "".join(parts)


def format_env(labels, el: EnvElement) -> str:
    """Human form, highest degree first, e.g. 'ab^2c^2 - 2abcd + 2d^2'."""
    if not el:
        return "0"
    parts: list[str] = []
    for m in sorted(el, key=lambda m: (-degree(m), m)):
        c = el[m]
        word = format_monomial(labels, m)
        mag = c if not parts else abs(c)
        if word == "1":
            body = str(mag)
        elif mag == 1:
            body = word
        elif mag == -1:
            body = f"-{word}"
        else:
            body = f"{mag}{word}"
        parts.append(body if not parts else ("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_monomial(labels, text: str) -> PbwMonomial:
    """Parse juxtaposed generator names with optional ^exponent, e.g. a^2bc.

    Longest label match wins so primed and indexed names parse correctly.
    The input 1 denotes the unit.
    """
    exps = [0] * len(labels)
    if text == "1":
        return tuple(exps)
    by_length = sorted(range(len(labels)), key=lambda i: -len(labels[i]))
    pos = 0
    while pos < len(text):
        for i in by_length:
            if text.startswith(labels[i], pos):
                pos += len(labels[i])
                e = 1
                if pos < len(text) and text[pos] == "^":
                    pos += 1
                    start = pos
                    while pos < len(text) and text[pos].isdigit():
                        pos += 1
                    if start == pos:
                        raise ValueError(f"missing exponent after ^ in {text!r}")
                    e = int(text[start:pos])
                exps[i] += e
                break
        else:
            raise ValueError(f"cannot parse monomial {text!r} at position {pos}")
    return tuple(exps)


def env_to_json(el: EnvElement) -> list[dict]:
    return [
        {"exponents": list(m), "coeff": str(el[m])} for m in sorted(el)
    ]


def env_from_json(data: list[dict]) -> EnvElement:
    out: EnvElement = {}
    for term in data:
        m = tuple(int(e) for e in term["exponents"])
        c = Fraction(term["coeff"])
        if c:
            out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}
