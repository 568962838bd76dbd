"""Small exact linear-algebra helpers over Fraction and int."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def mat_inverse(m: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    """Inverse of a square matrix by Gauss-Jordan elimination over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def lcm_denominator(rows: Sequence[Sequence[Fraction]]) -> int:
    out = 1
    for row in rows:
        for x in row:
            d = Fraction(x).denominator
            out = out * d // gcd(out, d)
    return out


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def sparse_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank of an integer matrix given as sparse rows {column: value}.

    Fraction-free elimination: each pivot row eliminates its leading column
    from later rows by integer cross-multiplication, and rows are divided by
    their content to keep entries small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = _normalize(r)
                break
            a, b = p[lead], r[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {k: fa * v for k, v in r.items()}
            for k, v in p.items():
                nv = new.get(k, 0) - fb * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _normalize(new)
    return len(pivots)
