"""Differential operators on the polynomial algebra attached to U(M).

Operators are formal sums of composition words over the primitive symbols
I, M_x (multiply by a variable), D_x (differentiate), S^k (shift the first
variable by k), plus named symbols lam(g), rho(g) standing for left
multiplication and right bracket by a generator of the 4-dim solvable
algebra. Words apply right to left. Operator equality is extensional:
operators are compared through their actions on spanning sets of monomials.

Also houses the combinatorics shared by the structure-constant formulas:
binomial/multinomial coefficients, falling factorials (the differential
coefficients), Stirling numbers of the second kind, and the X coefficients
given both by their recurrence and by their Stirling closed form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import catalog
from .envelope import (
    EnvContext,
    bracket_el_gen,
    left_mul_el,
    monomials_up_to,
    format_monomial,
)
from .reports import VerificationReport

Polynomial = dict  # exponent tuple -> Fraction, shared shape with EnvElement
DiffOp = dict  # word (tuple of symbols) -> Fraction

S_LABELS = ("a", "b", "c", "d")


# --- combinatorics ---------------------------------------------------------


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def multinom(n: int, *parts: int) -> int:
    """n! / (p1! p2! ... (n - sum)!), 0 when the parts do not fit."""
    if n < 0 or any(p < 0 for p in parts) or sum(parts) > n:
        return 0
    out = factorial(n)
    rest = n
    for p in parts:
        out //= factorial(p)
        rest -= p
    return out // factorial(rest)


def falling_factorial(r: int, s: int) -> int:
    """r (r-1) ... (r-s+1) with the empty product equal to 1."""
    if s < 0:
        raise ValueError("falling factorial needs s >= 0")
    out = 1
    for t in range(s):
        out *= r - t
    return out


def stirling2(r: int, s: int) -> int:
    """Partitions of an r-set into s blocks, by the alternating sum."""
    if r < 0 or s < 0:
        raise ValueError("stirling2 needs r, s >= 0")
    total = sum((-1) ** (s - t) * binom(s, t) * t**r for t in range(s + 1))
    assert total % factorial(s) == 0
    return total // factorial(s)


def x_coefficient(i: int, gamma: int, delta: int, eps: int, t: int, mode: str) -> int:
    """The shift-interaction coefficients of the general left-multiplication
    formula, as a function of the outer summation difference t.

    Zero outside 0 <= gamma <= i, 0 <= delta <= i - gamma,
    0 <= eps <= i - gamma - delta; both modes agree there.
    """
    if mode not in ("recurrence", "closed"):
        raise ValueError(f"unknown mode {mode!r}")
    if i < 0 or gamma < 0 or delta < 0 or eps < 0:
        return 0
    if gamma > i or delta > i - gamma or eps > i - gamma - delta:
        return 0
    if mode == "recurrence":
        return _x_recurrence(i, gamma, delta, eps, t)
    out = 0
    for zeta in range(i - gamma - delta - eps + 1):
        out += multinom(i, gamma, zeta) * stirling2(i - gamma - zeta, delta + eps) * t**zeta
    return binom(delta + eps, eps) * out


@lru_cache(maxsize=None)
def _x_recurrence(i: int, gamma: int, delta: int, eps: int, t: int) -> int:
    if gamma < 0 or delta < 0 or eps < 0:
        return 0
    if gamma > i or delta > i - gamma or eps > i - gamma - delta:
        return 0
    if i == 0:
        return 1
    return (
        (t + delta + eps) * _x_recurrence(i - 1, gamma, delta, eps, t)
        + _x_recurrence(i - 1, gamma - 1, delta, eps, t)
        + _x_recurrence(i - 1, gamma, delta - 1, eps, t)
        + _x_recurrence(i - 1, gamma, delta, eps - 1, t)
    )


# --- operator algebra ------------------------------------------------------


def op_zero() -> DiffOp:
    return {}

def op_identity() -> DiffOp:
    return {(): Fraction(1)}


def op_word(*symbols) -> DiffOp:
    word = tuple(s for s in symbols if s != ("S", 0))
    return {word: Fraction(1)}


def M(v: int):
    return ("M", v)


def D(v: int):
    return ("D", v)


def shift(k: int):
    return ("S", k)


def lam(g: int):
    return ("LAM", g)


def rho(g: int):
    return ("RHO", g)


def op_add(*ops: DiffOp) -> DiffOp:
    acc: DiffOp = {}
    for op in ops:
        for w, c in op.items():
            new = acc.get(w, 0) + c
            if new:
                acc[w] = new
            else:
                acc.pop(w, None)
    return acc


def op_scale(c, op: DiffOp) -> DiffOp:
    c = Fraction(c)
    return {w: v * c for w, v in op.items()} if c else {}


def op_sub(p: DiffOp, q: DiffOp) -> DiffOp:
    return op_add(p, op_scale(-1, q))


def op_compose(*ops: DiffOp) -> DiffOp:
    """Concatenate words left to right: op_compose(P, Q) acts as P after Q."""
    acc = op_identity()
    for op in ops:
        nxt: DiffOp = {}
        for w1, c1 in acc.items():
            for w2, c2 in op.items():
                w = w1 + w2
                new = nxt.get(w, 0) + c1 * c2
                if new:
                    nxt[w] = new
                else:
                    nxt.pop(w, None)
        acc = nxt
    return acc


def op_pow(op: DiffOp, n: int) -> DiffOp:
    acc = op_identity()
    for _ in range(n):
        acc = op_compose(acc, op)
    return acc


def op_commutator(p: DiffOp, q: DiffOp) -> DiffOp:
    return op_sub(op_compose(p, q), op_compose(q, p))


# --- application -----------------------------------------------------------


def _apply_symbol(sym, f: Polynomial) -> Polynomial:
    kind = sym[0]
    out: Polynomial = {}
    if kind == "M":
        v = sym[1]
        for m, c in f.items():
            if v >= len(m):
                raise ValueError(f"unknown variable index {v}")
            key = m[:v] + (m[v] + 1,) + m[v + 1:]
            out[key] = out.get(key, 0) + c
    elif kind == "D":
        v = sym[1]
        for m, c in f.items():
            if v >= len(m):
                raise ValueError(f"unknown variable index {v}")
            if m[v]:
                key = m[:v] + (m[v] - 1,) + m[v + 1:]
                out[key] = out.get(key, 0) + c * m[v]
    elif kind == "S":
        k = sym[1]
        for m, c in f.items():
            if not m:
                raise ValueError("shift needs at least one variable")
            i = m[0]
            for r in range(i + 1):
                key = (r,) + m[1:]
                out[key] = out.get(key, 0) + c * binom(i, r) * k ** (i - r)
    elif kind in ("LAM", "RHO"):
        table_kind = "lambda" if kind == "LAM" else "rho"
        return apply(table_operators_S(S_LABELS[sym[1]], table_kind), f)
    else:
        raise ValueError(f"unknown operator symbol {sym!r}")
    return {m: c for m, c in out.items() if c}


def apply(op: DiffOp, f: Polynomial) -> Polynomial:
    """Apply a formal operator sum to a polynomial, word symbols right to left."""
    acc: Polynomial = {}
    for word, coeff in op.items():
        g = f
        for sym in reversed(word):
            g = _apply_symbol(sym, g)
            if not g:
                break
        for m, c in g.items():
            new = acc.get(m, 0) + coeff * c
            if new:
                acc[m] = new
            else:
                acc.pop(m, None)
    return acc


def expand_named(op: DiffOp) -> DiffOp:
    """Replace every named lam/rho symbol by its table word sum."""
    acc: DiffOp = {}
    for word, coeff in op.items():
        expanded = op_identity()
        for sym in word:
            if sym[0] in ("LAM", "RHO"):
                kind = "lambda" if sym[0] == "LAM" else "rho"
                expanded = op_compose(expanded, table_operators_S(S_LABELS[sym[1]], kind))
            else:
                expanded = op_compose(expanded, {(sym,): Fraction(1)})
        for w, c in expanded.items():
            new = acc.get(w, 0) + coeff * c
            if new:
                acc[w] = new
            else:
                acc.pop(w, None)
    return acc


def ops_agree_on(p: DiffOp, q: DiffOp, monomials) -> tuple[bool, str]:
    for m in monomials:
        got = apply(p, {m: Fraction(1)})
        want = apply(q, {m: Fraction(1)})
        if got != want:
            return False, f"differ on {m}"
    return True, ""


# --- the operator table and formula lemmas ---------------------------------

A, B, C, Dv = 0, 1, 2, 3


def table_operators_S(x: str, kind: str) -> DiffOp:
    """Left-multiplication and right-bracket operators for the 4-dim
    solvable algebra, as primitive differential-operator words."""
    if x not in S_LABELS:
        raise ValueError(f"unknown generator {x!r}")
    if kind not in ("rho", "lambda"):
        raise ValueError(f"unknown kind {kind!r}")
    I = op_identity()
    Sop = op_word(shift(1))
    Sinv = op_word(shift(-1))
    if x == "a":
        if kind == "rho":
            return op_add(
                op_word(M(B), D(B)),
                op_word(M(C), D(C)),
                op_scale(-1, op_word(M(Dv), D(Dv))),
                op_scale(-3, op_word(M(Dv), D(B), D(C))),
            )
        return op_word(M(A))
    if x == "b":
        if kind == "rho":
            return op_add(
                op_compose(op_sub(I, Sop), op_word(M(B))),
                op_compose(op_sub(op_sub(Sop, I), op_scale(2, Sinv)), op_word(M(Dv), D(C))),
            )
        return op_add(
            op_compose(Sop, op_word(M(B))),
            op_compose(op_sub(Sinv, Sop), op_word(M(Dv), D(C))),
        )
    if x == "c":
        if kind == "rho":
            return op_add(
                op_compose(op_sub(I, Sop), op_word(M(C))),
                op_compose(op_add(op_sub(Sop, I), op_scale(2, Sinv)), op_word(M(Dv), D(B))),
            )
        return op_sub(
            op_compose(Sop, op_word(M(C))),
            op_compose(op_add(Sinv, Sop), op_word(M(Dv), D(B))),
        )
    if kind == "rho":
        return op_compose(op_sub(I, Sinv), op_word(M(Dv)))
    return op_compose(Sinv, op_word(M(Dv)))


def lambda_formula_S(m) -> DiffOp:
    """Left multiplication by a PBW monomial as an operator word sum.

    Uses the most specific applicable formula: a plain power product on
    support {c, d}, the double sum on support {b, c, d}, and the five-fold
    sum with X coefficients in general.
    """
    i, j, k, l = m
    lam_b, lam_c, lam_d = op_word(lam(B)), op_word(lam(C)), op_word(lam(Dv))
    if i == 0 and j == 0:
        return op_compose(op_pow(lam_c, k), op_pow(lam_d, l))
    if i == 0:
        acc: DiffOp = {}
        for alpha in range(min(j, k) + 1):
            for beta in range(alpha + 1):
                coeff = (
                    (-1) ** (alpha - beta)
                    * factorial(alpha)
                    * binom(alpha, beta)
                    * binom(j, alpha)
                    * binom(k, alpha)
                )
                if not coeff:
                    continue
                word = op_compose(
                    op_word(shift(-beta)),
                    op_pow(lam_b, j - alpha),
                    op_pow(lam_c, k - alpha),
                    op_pow(op_word(M(Dv)), alpha),
                    op_pow(lam_d, l),
                )
                acc = op_add(acc, op_scale(coeff, word))
        return acc
    lam_a = op_word(lam(A))
    acc = {}
    for alpha in range(min(j, k) + 1):
        for beta in range(alpha + 1):
            for gamma in range(i + 1):
                for delta in range(i - gamma + 1):
                    for eps in range(i - gamma - delta + 1):
                        coeff = (
                            (-1) ** (i + alpha - beta - gamma - delta)
                            * factorial(alpha)
                            * factorial(delta)
                            * factorial(eps)
                            * binom(alpha, beta)
                            * multinom(j, alpha, eps)
                            * multinom(k, alpha, delta)
                            * x_coefficient(i, gamma, delta, eps, alpha - beta, "closed")
                        )
                        if not coeff:
                            continue
                        word = op_compose(
                            op_pow(lam_a, gamma),
                            op_word(shift(-(beta + delta + eps))),
                            op_pow(lam_b, j - alpha - eps),
                            op_pow(op_word(D(B)), delta),
                            op_pow(op_word(D(C)), eps),
                            op_pow(lam_c, k - alpha - delta),
                            op_pow(op_word(M(Dv)), alpha + delta + eps),
                            op_pow(lam_d, l),
                        )
                        acc = op_add(acc, op_scale(coeff, word))
    return acc


# --- verification sweeps ---------------------------------------------------


def verify_commutation_relations(cap: int = 4) -> VerificationReport:
    """The operator commutation lemma, checked extensionally on all
    monomials of degree <= cap in the four variables."""
    rep = VerificationReport("operator commutation relations")
    monos = monomials_up_to(4, cap)
    I = op_identity()
    zero: DiffOp = {}
    Sop = op_word(shift(1))
    Sinv = op_word(shift(-1))

    def relation(name: str, got: DiffOp, want: DiffOp) -> None:
        ok, where = ops_agree_on(got, want, monos)
        rep.record(ok, name, where)

    for x in range(4):
        Mx, Dx = op_word(M(x)), op_word(D(x))
        relation(f"[D_{S_LABELS[x]}, M_{S_LABELS[x]}] = I", op_commutator(Dx, Mx), I)
        relation(f"[D_{S_LABELS[x]}, S] = 0", op_commutator(Dx, Sop), zero)
        relation(f"[D_{S_LABELS[x]}, S^-1] = 0", op_commutator(Dx, Sinv), zero)
        relation(f"S S^-1 = I on D_{S_LABELS[x]} slot", op_compose(Sop, Sinv), I)
        for y in range(4):
            My, Dy = op_word(M(y)), op_word(D(y))
            if x != y:
                relation(
                    f"[D_{S_LABELS[x]}, M_{S_LABELS[y]}] = 0", op_commutator(Dx, My), zero
                )
            relation(
                f"[D_{S_LABELS[x]}, D_{S_LABELS[y]}] = 0", op_commutator(Dx, Dy), zero
            )
            relation(
                f"[M_{S_LABELS[x]}, M_{S_LABELS[y]}] = 0", op_commutator(Mx, My), zero
            )
    Ma = op_word(M(A))
    relation("[M_a, S] = -S", op_commutator(Ma, Sop), op_scale(-1, Sop))
    relation("[M_a, S^-1] = S^-1", op_commutator(Ma, Sinv), Sinv)
    for x in range(1, 4):
        Mx = op_word(M(x))
        relation(f"[M_{S_LABELS[x]}, S] = 0", op_commutator(Mx, Sop), zero)
        relation(f"[M_{S_LABELS[x]}, S^-1] = 0", op_commutator(Mx, Sinv), zero)
    return rep


def verify_table_operators(cap: int = 4) -> VerificationReport:
    """Table operators against the engine actions, on all monomials of
    degree <= cap: rho(x) matches the right bracket and lam(x) matches
    left multiplication."""
    rep = VerificationReport("operator table vs engine")
    ctx = EnvContext(catalog("S"))
    monos = monomials_up_to(4, cap)
    for g, label in enumerate(S_LABELS):
        rho_op = table_operators_S(label, "rho")
        lam_op = table_operators_S(label, "lambda")
        for m in monos:
            f = {m: Fraction(1)}
            rep.record(
                apply(rho_op, f) == bracket_el_gen(ctx, f, g),
                f"rho({label}) on {format_monomial(S_LABELS, m)}",
            )
            rep.record(
                apply(lam_op, f) == left_mul_el(ctx, g, f),
                f"lam({label}) on {format_monomial(S_LABELS, m)}",
            )
    return rep


def verify_lambda_formula(mono_cap: int = 3, apply_cap: int = 3) -> VerificationReport:
    """The left-multiplication formula against the engine: the operator for
    every monomial of degree <= mono_cap, applied to every monomial of
    degree <= apply_cap."""
    from .envelope import _mono_times_el

    rep = VerificationReport("left multiplication formula vs engine")
    ctx = EnvContext(catalog("S"))
    for m in monomials_up_to(4, mono_cap):
        op = lambda_formula_S(m)
        for f_mono in monomials_up_to(4, apply_cap):
            f = {f_mono: Fraction(1)}
            got = apply(op, f)
            want = _mono_times_el(ctx, m, f)
            rep.record(
                got == want,
                f"lam-formula({format_monomial(S_LABELS, m)}) on "
                f"{format_monomial(S_LABELS, f_mono)}",
            )
    return rep


def verify_x_coefficient(imax: int = 5, tmax: int = 5) -> VerificationReport:
    """Recurrence mode equals closed mode on every valid index tuple."""
    rep = VerificationReport("x-coefficient recurrence vs closed form")
    for i in range(imax + 1):
        for gamma in range(i + 1):
            for delta in range(i - gamma + 1):
                for eps in range(i - gamma - delta + 1):
                    for t in range(tmax + 1):
                        rec = x_coefficient(i, gamma, delta, eps, t, "recurrence")
                        clo = x_coefficient(i, gamma, delta, eps, t, "closed")
                        rep.record(
                            rec == clo,
                            f"X_{i}({gamma},{delta},{eps}) at t={t}",
                            f"recurrence {rec} != closed {clo}",
                        )
    return rep


def format_diffop(op: DiffOp) -> str:
    """Readable operator sum, e.g. 'M_b D_b + M_c D_c'."""
    if not op:
        return "0"

    def sym_str(sym) -> str:
        kind = sym[0]
        if kind == "M":
            return f"M_{S_LABELS[sym[1]]}"
        if kind == "D":
            return f"D_{S_LABELS[sym[1]]}"
        if kind == "S":
            k = sym[1]
            return "S" if k == 1 else f"S^{k}"
        if kind == "LAM":
            return f"lam({S_LABELS[sym[1]]})"
        return f"rho({S_LABELS[sym[1]]})"

    parts: list[str] = []
    for word in sorted(op, key=lambda w: (len(w), w)):
        c = op[word]
        body = " ".join(sym_str(s) for s in word) if word else "I"
        mag = c if not parts else abs(c)
        if mag == 1:
            text = body
        elif mag == -1:
            text = f"-{body}"
        else:
            text = f"{mag} {body}"
        parts.append(text if not parts else ("- " if c < 0 else "+ ") + text)
    return " ".join(parts)
