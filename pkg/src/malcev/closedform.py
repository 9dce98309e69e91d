"""Closed-form structure constants for the enveloping algebras of the
4-dimensional solvable and 5-dimensional nilpotent Malcev algebras.

These evaluate products of PBW basis monomials directly as finite
combinatorial sums, with no rewriting recursion. They are the fast route;
the recursive engine is the reference route, and the two are crosschecked
pairwise over monomial ranges.

Exponent sanity: every summand whose coefficient is nonzero must land on a
genuine monomial. A negative exponent with a nonzero coefficient means the
formula was transcribed wrong, so it raises instead of being dropped.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .core import catalog
from .envelope import EnvContext, monomials_up_to, product, format_monomial
from .polyops import binom, falling_factorial, multinom, stirling2
from .reports import VerificationReport

S_LABELS = ("a", "b", "c", "d")
T_LABELS = ("a", "b", "c", "d", "e")


def _add_term(acc: dict, exponents: tuple, coeff: Fraction) -> None:
    if not coeff:
        return
    if any(e < 0 for e in exponents):
        raise ArithmeticError(
            f"nonzero coefficient {coeff} on negative exponents {exponents}"
        )
    new = acc.get(exponents, 0) + coeff
    if new:
        acc[exponents] = new
    else:
        del acc[exponents]


def us_product(x: tuple, y: tuple) -> dict:
    """Product of PBW monomials a^i b^j c^k d^l times a^m b^n c^p d^q in the
    enveloping algebra of the 4-dim solvable Malcev algebra."""
    i, j, k, l = x
    m, n, p, q = y
    acc: dict = {}
    for alpha in range(min(j, k) + 1):
        c_alpha = factorial(alpha)
        for beta in range(alpha + 1):
            c_beta = c_alpha * binom(alpha, beta)
            t = alpha - beta
            for gamma in range(i + 1):
                for delta in range(i - gamma + 1):
                    for eps in range(i - gamma - delta + 1):
                        c_de = c_beta * factorial(delta + eps)
                        for zeta in range(i - gamma - delta - eps + 1):
                            c_zeta = (
                                c_de
                                * t**zeta
                                * multinom(i, gamma, zeta)
                                * stirling2(i - gamma - zeta, delta + eps)
                            )
                            if not c_zeta:
                                continue
                            for eta in range(j - alpha - eps + 1):
                                for theta in range(j - alpha - eps - eta + 1):
                                    c_j = c_zeta * multinom(j, alpha, eps, eta, theta)
                                    if not c_j:
                                        continue
                                    for lam in range(k - alpha - delta + 1):
                                        f1 = falling_factorial(n, k - alpha - lam)
                                        f2 = falling_factorial(p + lam, j - alpha - eta)
                                        if not (f1 and f2):
                                            continue
                                        for mu in range(k - alpha - delta - lam + 1):
                                            c_k = (
                                                c_j
                                                * multinom(k, alpha, delta, lam, mu)
                                                * f1
                                                * f2
                                            )
                                            if not c_k:
                                                continue
                                            sign = (-1) ** (
                                                i + j + k + alpha - beta - gamma
                                                - eps - eta - theta - lam
                                            )
                                            omega = (
                                                j + k - l - 2 * alpha - beta
                                                - 2 * delta - 2 * eps
                                                - 2 * theta - 2 * mu
                                            )
                                            base = (
                                                n - k + alpha + eta + lam,
                                                p - j + alpha + eta + lam,
                                                j + k + l + q - alpha - eta - lam,
                                            )
                                            for nu in range(m + 1):
                                                coeff = (
                                                    sign
                                                    * c_k
                                                    * omega**nu
                                                    * binom(m, nu)
                                                )
                                                _add_term(
                                                    acc,
                                                    (m + gamma - nu,) + base,
                                                    Fraction(coeff),
                                                )
    return acc


def ut_product(x: tuple, y: tuple) -> dict:
    """Product of PBW monomials a^i b^j c^k d^l e^m times a^p b^q c^r d^s e^t
    in the enveloping algebra of the 5-dim nilpotent Malcev algebra."""
    i, j, k, l, m = x
    p, q, r, s, t = y
    acc: dict = {}
    for alpha in range(l + 1):
        for beta in range(i + 1):
            c_b = factorial(alpha) * factorial(beta) * binom(i, beta)
            for gamma in range(beta + 1):
                c_g = c_b * binom(alpha, beta - gamma)
                if not c_g:
                    continue
                for delta in range(gamma + 1):
                    for eps in range(j - alpha - delta + 1):
                        for zeta in range(j - alpha - delta - eps + 1):
                            c_z = c_g * multinom(j, alpha, delta, eps, zeta)
                            if not c_z:
                                continue
                            for eta in range(l - alpha - (gamma - delta) + 1):
                                for theta in range(l - alpha - (gamma - delta) - eta + 1):
                                    c_t = c_z * multinom(l, alpha, gamma - delta, eta, theta)
                                    if not c_t:
                                        continue
                                    f1 = falling_factorial(
                                        p, j - beta - eps + l - alpha - eta - theta
                                    )
                                    f2 = falling_factorial(q, l - alpha - eta - theta)
                                    f3 = falling_factorial(r, theta)
                                    if not (f1 and f2 and f3):
                                        continue
                                    for lam in range(eta + 1):
                                        c_l = (
                                            c_t
                                            * factorial(lam)
                                            * binom(j - alpha - eps - zeta, lam)
                                            * binom(eta, lam)
                                            * f1 * f2 * f3
                                        )
                                        if not c_l:
                                            continue
                                        num = c_l * falling_factorial(
                                            s, j - alpha - eps - zeta - lam
                                        )
                                        if not num:
                                            continue
                                        sign = (-1) ** (
                                            beta + zeta + l - alpha - gamma - eta
                                        )
                                        den = 2 ** (alpha + gamma) * 3 ** (
                                            j - eps - zeta + l - alpha - eta - theta
                                        )
                                        expo = (
                                            i + p - j + eps - l + alpha + eta + theta,
                                            eps + q - l + alpha + eta + theta,
                                            zeta + k + r - theta,
                                            eta + s + alpha + eps + zeta - j,
                                            j - alpha - eps - zeta + l - eta + m + t,
                                        )
                                        _add_term(acc, expo, Fraction(sign * num, den))
    return acc


# --- associative subalgebra shortcuts --------------------------------------


def _shifted_power(i: int, k: int, s: int) -> dict:
    """a^i (a+s)^k as a dict exponent-of-a -> integer coefficient."""
    return {i + r: binom(k, r) * s ** (k - r) for r in range(k + 1)}


def us_subalgebra_product(x: tuple, y: tuple) -> dict:
    """Product of two monomials supported on one of the associative
    subalgebras generated by {a,b}, {a,c}, {a,d} or {b,c,d}."""
    support = {v for v in range(4) if x[v] or y[v]}
    acc: dict = {}
    if support <= {0, 1} or support <= {0, 2}:
        e = 1 if support <= {0, 1} else 2
        i, j = x[0], x[e]
        k, l = y[0], y[e]
        for a_exp, c in _shifted_power(i, k, j).items():
            mono = [0, 0, 0, 0]
            mono[0] = a_exp
            mono[e] = j + l
            _add_term(acc, tuple(mono), Fraction(c))
        return acc
    if support <= {0, 3}:
        i, j = x[0], x[3]
        k, l = y[0], y[3]
        for a_exp, c in _shifted_power(i, k, -j).items():
            _add_term(acc, (a_exp, 0, 0, j + l), Fraction(c))
        return acc
    if support <= {1, 2, 3}:
        i, j, k = x[1], x[2], x[3]
        l, m, n = y[1], y[2], y[3]
        for h in range(l + 1):
            c = (-1) ** h * 2**h * binom(l, h) * falling_factorial(j, h)
            _add_term(acc, (0, i + l - h, j + m - h, k + n + h), Fraction(c))
        return acc
    raise ValueError(f"monomials {x}, {y} are not supported on a known subalgebra")


def bcd_bracket_closed(x: tuple) -> dict:
    """[a^m b^n c^p d^q, a] in closed form."""
    m, n, p, q = x
    acc: dict = {}
    _add_term(acc, x, Fraction(n + p - q))
    if n and p:
        _add_term(acc, (m, n - 1, p - 1, q + 1), Fraction(-3 * n * p))
    return acc


# --- crosschecks against the engine ----------------------------------------


def product_diff(labels, closed: dict, engine: dict) -> str:
    """Locate the first differing monomial between two sparse products and
    report both coefficients. Used in mismatch diagnostics only."""
    for m in sorted(set(closed) | set(engine), key=lambda t: (sum(t), t)):
        lhs = closed.get(m, Fraction(0))
        rhs = engine.get(m, Fraction(0))
        if lhs != rhs:
            return (
                f"first differing monomial {format_monomial(labels, m)}: "
                f"closed {lhs}, engine {rhs}"
            )
    return "no difference"


def verify_us_crosscheck(cap: int = 3) -> VerificationReport:
    """Closed-form product equals the engine product for every ordered pair
    of solvable-algebra monomials of degree <= cap."""
    rep = VerificationReport("solvable closed form vs engine")
    ctx = EnvContext(catalog("S"))
    monos = monomials_up_to(4, cap)
    for x in monos:
        fx = {x: Fraction(1)}
        for y in monos:
            got = us_product(x, y)
            want = product(ctx, fx, {y: Fraction(1)})
            rep.record(
                got == want,
                f"({format_monomial(S_LABELS, x)}) ({format_monomial(S_LABELS, y)})",
                "" if got == want else product_diff(S_LABELS, got, want),
            )
    return rep


def verify_ut_crosscheck(cap: int = 3) -> VerificationReport:
    """Closed-form product equals the engine product for every ordered pair
    of nilpotent-algebra monomials of degree <= cap."""
    rep = VerificationReport("nilpotent closed form vs engine")
    ctx = EnvContext(catalog("T"))
    monos = monomials_up_to(5, cap)
    for x in monos:
        fx = {x: Fraction(1)}
        for y in monos:
            got = ut_product(x, y)
            want = product(ctx, fx, {y: Fraction(1)})
            rep.record(
                got == want,
                f"({format_monomial(T_LABELS, x)}) ({format_monomial(T_LABELS, y)})",
                "" if got == want else product_diff(T_LABELS, got, want),
            )
    return rep


def verify_subalgebra_rules(cap: int = 4) -> VerificationReport:
    """Subalgebra shortcut rules match the general closed form, and the
    shortcut subalgebras really are associative."""
    rep = VerificationReport("subalgebra product rules")
    supports = ({0, 1}, {0, 2}, {0, 3}, {1, 2, 3})
    for support in supports:
        monos = [
            m
            for m in monomials_up_to(4, cap)
            if all(e == 0 or v in support for v, e in enumerate(m))
        ]
        tag = "".join(S_LABELS[v] for v in sorted(support))
        for x in monos:
            for y in monos:
                rep.record(
                    us_subalgebra_product(x, y) == us_product(x, y),
                    f"{tag}: ({format_monomial(S_LABELS, x)})"
                    f" ({format_monomial(S_LABELS, y)})",
                )
        for x in monos:
            if sum(x) > 2:
                continue
            for y in monos:
                if sum(y) > 2:
                    continue
                for z in monos:
                    if sum(z) > 2:
                        continue
                    yz = us_subalgebra_product(y, z)
                    xy = us_subalgebra_product(x, y)
                    left: dict = {}
                    for m, c in xy.items():
                        for mono, cc in us_subalgebra_product(m, z).items():
                            _add_term(left, mono, c * cc)
                    right: dict = {}
                    for m, c in yz.items():
                        for mono, cc in us_subalgebra_product(x, m).items():
                            _add_term(right, mono, c * cc)
                    rep.record(
                        left == right,
                        f"{tag} associativity at ({format_monomial(S_LABELS, x)},"
                        f" {format_monomial(S_LABELS, y)},"
                        f" {format_monomial(S_LABELS, z)})",
                    )
    return rep
