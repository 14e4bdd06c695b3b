"""Exact rank of small integer matrices over Q or GF(p)."""

from __future__ import annotations

from .field import FieldSpec, QQ


def rank(rows: list[list[int]], field: FieldSpec = QQ) -> int:
    """Rank of an integer matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    if field.prime is None:
        return _rank_bareiss(rows)
    return _rank_mod(rows, field.prime)


def _rank_bareiss(rows: list[list[int]]) -> int:
    # fraction-free elimination: every intermediate entry stays an integer
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def _rank_mod(rows: list[list[int]], p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        row_r = [x * inv % p for x in a[r]]
        a[r] = row_r
        for i in range(r + 1, m):
            f = a[i][c]
            if f:
                row_i = a[i]
                for j in range(c, n):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        r += 1
        if r == m:
            break
    return r
