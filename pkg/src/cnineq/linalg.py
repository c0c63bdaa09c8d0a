"""Fraction-free integer elimination (Bareiss)."""

from __future__ import annotations


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    a = [list(row) for row in matrix]
    k = len(a)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(k - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, k) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        piv = a[p][p]
        row_p = a[p]
        for i in range(p + 1, k):
            row_i = a[i]
            f = row_i[p]
            for j in range(p + 1, k):
                row_i[j] = (piv * row_i[j] - f * row_p[j]) // prev
            row_i[p] = 0
        prev = piv
    return sign * a[k - 1][k - 1]


def fraction_free_solve(matrix: list[list[int]], rhs: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Solve ``A X = B`` over the integers without fractions.

    Returns ``(d, Y)`` with ``X = Y / d`` exactly, where ``d = ±det(A)``. ``rhs`` is a
    list of columns. Raises ZeroDivisionError for a singular ``A``.
    """
    k = len(matrix)
    r = len(rhs)
    # augmented rows: [A | B]
    a = [list(matrix[i]) + [col[i] for col in rhs] for i in range(k)]
    width = k + r
    prev = 1
    for p in range(k):
        if a[p][p] == 0:
            swap = next((i for i in range(p + 1, k) if a[i][p] != 0), None)
            if swap is None:
                raise ZeroDivisionError("singular matrix")
            a[p], a[swap] = a[swap], a[p]
        piv = a[p][p]
        row_p = a[p]
        for i in range(k):
            if i == p:
                continue
            row_i = a[i]
            f = row_i[p]
            for j in range(width):
                if j != p:
                    row_i[j] = (piv * row_i[j] - f * row_p[j]) // prev
            row_i[p] = 0
        prev = piv
    # every diagonal entry is now the same +-det(A)
    d = a[0][0] if k else 1
    cols = [[a[i][k + c] for i in range(k)] for c in range(r)]
    return d, cols
