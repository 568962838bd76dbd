"""Bracket notations and closed-form decompositions of wedge powers of F^vee.

Two notations are used for homogeneous bundles on the adjoint varieties of
the classical groups:

* type A_n, on the partial flag variety of lines inside hyperplanes:
  ``[a; b_1, ..., b_{n-1}; c]`` stands for the weight with coordinate
  ``lam_i - lam_{i+1}`` on node i;
* types B_n and D_n, on the isotropic Grassmannian of planes:
  ``[a, b; c_1, ..., c_{n-2}]`` with coordinates ``lam_i - lam_{i+1}`` for
  i < n and ``2 lam_n`` (B) or ``lam_{n-1} + lam_n`` (D) on the last node.
  Entries may be half-integers.

These converters and the summand lists below are independent of the generic
peeling code, and the test-suite compares the two.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, UnsupportedShape
from .rootcore import Weight

# ---------------------------------------------------------------- notation


def typeA_bracket_to_weight(bracket: Sequence[int]) -> Weight:
    """[l_1; l_2..l_n; l_{n+1}] (flattened, length n+1) to fundamental coordinates."""
    return tuple(int(bracket[i] - bracket[i + 1]) for i in range(len(bracket) - 1))


def weight_to_typeA_bracket(w: Sequence[int]) -> tuple[int, ...]:
    """Inverse of typeA_bracket_to_weight, normalised by last entry 0."""
    out = [0]
    for c in reversed(w):
        out.append(out[-1] + c)
    return tuple(reversed(out))


def so_bracket_to_weight(series: str, bracket: Sequence) -> Weight:
    lam = [Fraction(x) for x in bracket]
    n = len(lam)
    coords = [lam[i] - lam[i + 1] for i in range(n - 1)]
    if series == "B":
        coords.append(2 * lam[-1])
    elif series == "D":
        coords[-1] = lam[-2] - lam[-1]
        coords.append(lam[-2] + lam[-1])
    else:
        raise UnsupportedShape(f"series {series} has no orthogonal bracket notation")
    if any(c.denominator != 1 for c in coords):
        raise UnsupportedShape(f"{bracket} is not an integral weight")
    return tuple(int(c) for c in coords)


def weight_to_so_bracket(series: str, w: Sequence[int]) -> tuple[Fraction, ...]:
    n = len(w)
    lam = [Fraction(0)] * n
    if series == "B":
        lam[-1] = Fraction(w[-1], 2)
        for i in range(n - 2, -1, -1):
            lam[i] = lam[i + 1] + w[i]
    elif series == "D":
        lam[-1] = Fraction(w[-1] - w[-2], 2)
        lam[-2] = Fraction(w[-1] + w[-2], 2)
        for i in range(n - 3, -1, -1):
            lam[i] = lam[i + 1] + w[i]
    else:
        raise UnsupportedShape(f"series {series} has no orthogonal bracket notation")
    return tuple(lam)


def render_typeA(bracket: Sequence[int]) -> str:
    mid = ",".join(str(x) for x in bracket[1:-1])
    return f"[{bracket[0]}; {mid}; {bracket[-1]}]"


def render_so(bracket: Sequence[Fraction]) -> str:
    def f(x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    head = ",".join(f(x) for x in bracket[:2])
    tail = ",".join(f(x) for x in bracket[2:])
    return f"[{head}; {tail}]"


def parse_bracket(text: str) -> tuple[list[Fraction], ...]:
    """Split a bracket string on ';' into groups of Fractions."""
    body = text.strip().lstrip("[").rstrip("]")
    groups = []
    for part in body.split(";"):
        part = part.strip()
        groups.append([Fraction(x) for x in part.split(",")] if part else [])
    return tuple(groups)


# ---------------------------------------------------------------- type A


def typeA_wedge_summands(n: int, p: int, twist: int) -> list[tuple[int, ...]]:
    """Brackets of the irreducible summands from the type A_n wedge formula.

    twist=1 gives wedge^p F^vee (x) L for 0 <= p <= 2n-2; twist=0 gives
    wedge^(p-1) F^vee for 1 <= p <= 2n-1 (the index is shifted by one, as
    in the closed formula).  Each bracket is flattened to length n+1.
    """
    if twist == 1:
        if not 0 <= p <= 2 * n - 2:
            raise IndexOutOfRange(f"p={p} outside 0..{2 * n - 2}")
        total = p
    elif twist == 0:
        if not 1 <= p <= 2 * n - 1:
            raise IndexOutOfRange(f"p={p} outside 1..{2 * n - 1}")
        total = p - 1
    else:
        raise IndexOutOfRange("twist must be 0 or 1")
    out = []
    for a in range(min(total, n - 1) + 1):  # a, b play the roles of (p, q) in the formula
        b = total - a
        if b > n - 1:
            continue
        for j in range(max(0, b - a), min(b, n - a - 1) + 1):
            zeros = n - a + b - 2 * j - 1
            minus = a - b + j
            if zeros < 0 or minus < 0:
                continue
            mid = [1] * j + [0] * zeros + [-1] * minus
            out.append(tuple([-b + twist] + mid + [a - 1 + (1 - twist)]))
    return sorted(out)


# ---------------------------------------------------------------- types B and D


def _two_column(shape: Sequence[int]) -> tuple[int, int]:
    parts = [x for x in shape if x]
    if any(x not in (1, 2) for x in parts) or list(parts) != sorted(parts, reverse=True):
        raise UnsupportedShape(f"{tuple(shape)} is not of the form (2^i, 1^(j-i))")
    return parts.count(2), len(parts)


def gl_to_o_branching(shape: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """O(m-4) constituents of S_shape of the standard GL(m-4) representation."""
    if m < 5:
        raise UnsupportedShape("need m >= 5")
    i, j = _two_column(shape)
    p = i + j
    size = m - 4
    if j > size:
        return []
    out = []
    for delta in range(i + 1):
        if p - delta <= size:
            out.append(tuple([2] * (i - delta) + [1] * (j - i) + [0] * (size - j + delta)))
    return out


def o_to_so_branching(mu: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """SO(m-4) constituents of the O(m-4) representation with shape mu.

    Output sequences have length floor((m-4)/2).
    """
    a, r = _two_column(mu)
    size = m - 4
    k = size // 2
    if r > size:
        raise UnsupportedShape(f"{tuple(mu)} has more than {size} rows")
    if 2 * r < size:
        return [tuple([2] * a + [1] * (r - a) + [0] * (k - r))]
    if 2 * r > size:
        ones = size - r - a
        return [tuple([2] * a + [1] * ones + [0] * (k - a - ones))]
    if a < r:
        base = [2] * a + [1] * (k - a)
    else:
        base = [2] * k
    other = base[:-1] + [-base[-1]]
    return [tuple(base), tuple(other)]


def bd_wedge_summands(series: str, n: int, p: int, twist: int) -> list[tuple]:
    """Orthogonal brackets of wedge^p F^vee (twist 0) or wedge^p F^vee (x) L (twist 1).

    Chains the exterior power of U (x) U^perp/U through the two branching
    steps GL -> O -> SO.
    """
    if series not in "BD":
        raise UnsupportedShape("series must be B or D")
    m = 2 * n + 1 if series == "B" else 2 * n
    size = m - 4
    if not 0 <= p <= 2 * size:
        raise IndexOutOfRange(f"p={p} outside 0..{2 * size}")
    out = []
    for i in range(p // 2 + 1):
        j = p - i
        if j > size:
            continue
        shape = [2] * i + [1] * (j - i)
        for o_shape in gl_to_o_branching(shape, m):
            for so in o_to_so_branching(o_shape, m):
                out.append(tuple([-i + twist, -j + twist] + list(so)))
    return sorted(out)
