"""Exact linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction


def rank(rows: list[list[Fraction]]) -> int:
    """Rank by Gaussian elimination; Fraction arithmetic keeps it exact."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def solve_in_span(
    basis: list[list[Fraction]], target: list[Fraction]
) -> list[Fraction] | None:
    """Coefficients expressing target in the span of the basis rows, or None.

    The system may be underdetermined; free variables are set to 0.
    """
    n = len(basis)
    if n == 0:
        return [] if all(x == 0 for x in target) else None
    dim = len(target)
    # Columns of the system are the basis vectors: A c = target with A dim x n.
    aug = [[basis[j][i] for j in range(n)] + [target[i]] for i in range(dim)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, dim) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == dim:
            break
    # Inconsistent iff a zero row has nonzero right-hand side.
    for i in range(r, dim):
        if aug[i][n] != 0:
            return None
    coeffs = [Fraction(0)] * n
    for row, col in pivots:
        coeffs[col] = aug[row][n]
    return coeffs
