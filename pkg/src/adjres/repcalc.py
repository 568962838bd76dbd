"""Weight multiplicities, exterior powers and Levi decompositions.

Every multiset here is a plain ``dict`` mapping a weight tuple (fundamental
coordinates of the ambient group G) to a positive int count.  Levi
representations are never moved to their own coordinates: a Levi weight is
just a G-weight, and the Levi only enters through which simple reflections
and roots are allowed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import NegativeMultiplicity, NotDominant, NotPDominant, POutOfRange
from .exact import lcm_denominator, mat_inverse
from .rootcore import RootSystem, Weight, orbit
from .weyl import dominant_conjugate, normalize_nodes

WeightMultiset = dict  # dict[Weight, int]


def _add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    if any(x < 0 for x in lam):
        raise NotDominant(f"{tuple(lam)} is not dominant")
    num = den = 1
    for r in rs.positive_roots:
        c = r.coroot_coords
        num *= sum((x + 1) * y for x, y in zip(lam, c))
        den *= sum(c)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def levi_dim(rs: RootSystem, parabolic_nodes: Iterable[int], mu: Sequence[int]) -> int:
    """Dimension of the Levi irreducible with highest weight mu (Weyl formula on the Levi)."""
    levi = _levi_nodes(rs, normalize_nodes(rs, parabolic_nodes))
    num = den = 1
    for r in _subsystem_roots(rs, levi):
        c = r.coroot_coords
        num *= sum((x + 1) * y for x, y in zip(mu, c))
        den *= sum(c)
    return num // den


def _levi_nodes(rs: RootSystem, parabolic: frozenset[int]) -> tuple[int, ...]:
    """0-based nodes of the Levi subsystem, i.e. the complement of the parabolic."""
    return tuple(i for i in range(rs.rank) if i + 1 not in parabolic)


@lru_cache(maxsize=None)
def _subsystem_roots(rs: RootSystem, nodes: tuple[int, ...]):
    keep = set(nodes)
    return tuple(r for r in rs.positive_roots
                 if all(c == 0 or i in keep for i, c in enumerate(r.simple_coords)))


@lru_cache(maxsize=None)
def _height_functional(rs: RootSystem, nodes: tuple[int, ...]) -> tuple[int, ...]:
    """Integer vector h with <h, alpha_i> equal to a fixed positive constant for i in nodes.

    Built from the inverse Cartan matrix of the subsystem.  Coordinates
    outside ``nodes`` get zero weight.
    """
    if not nodes:
        return (0,) * rs.rank
    sub = [[rs.cartan[i][j] for j in nodes] for i in nodes]
    inv = mat_inverse(sub)
    colsum = [sum(inv[r][c] for r in range(len(nodes))) for c in range(len(nodes))]
    scale = lcm_denominator([colsum])
    h = [0] * rs.rank
    for k, i in enumerate(nodes):
        h[i] = int(colsum[k] * scale)
    return tuple(h)


def _dominant_weights(rs, lam: Weight, nodes: tuple[int, ...]) -> list[Weight]:
    """Dominant weights of V(lam) for the subsystem on ``nodes``.

    Downward closure by positive roots from lam; every dominant weight below
    lam is reached this way because dominance order on dominant weights is
    generated by positive roots.
    """
    pos = [r.weight_coords for r in _subsystem_roots(rs, nodes)]
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in pos:
            nu = _sub(mu, a)
            if nu not in seen and all(nu[i] >= 0 for i in nodes):
                seen.add(nu)
                stack.append(nu)
    h = _height_functional(rs, nodes)
    return sorted(seen, key=lambda w: (-sum(x * y for x, y in zip(h, w)), tuple(-x for x in w)))


@lru_cache(maxsize=4096)
def _freudenthal_dominant(rs: RootSystem, lam: Weight, nodes: tuple[int, ...]) -> tuple:
    pos = [r.weight_coords for r in _subsystem_roots(rs, nodes)]
    two_rho = (0,) * rs.rank
    for a in pos:
        two_rho = _add(two_rho, a)
    doms = _dominant_weights(rs, lam, nodes)
    mult = {lam: 1}
    cartan = rs.cartan
    lam_shift = _add(lam, two_rho)
    for mu in doms[1:]:
        total = 0
        for a in pos:
            w = mu
            while True:
                w = _add(w, a)
                m = mult.get(dominant_conjugate(w, cartan, nodes))
                if m is None:
                    break
                total += m * rs.inner(w, a)
        den = rs.inner(_sub(lam, mu), _add(lam_shift, mu))
        q, rem = divmod(2 * total, den)
        assert rem == 0, "Freudenthal recursion produced a non-integer"
        if q:
            mult[mu] = q
    return tuple(mult.items())


def _expand(rs: RootSystem, dominant: tuple, nodes: tuple[int, ...]) -> dict:
    out = {}
    for mu, m in dominant:
        for w in orbit(mu, nodes, rs.cartan):
            out[w] = m
    return out


def freudenthal(rs: RootSystem, lam: Sequence[int]) -> dict:
    """Full weight multiset of the G-irreducible V(lam)."""
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        raise NotDominant(f"{lam} is not dominant")
    nodes = tuple(range(rs.rank))
    return _expand(rs, _freudenthal_dominant(rs, lam, nodes), nodes)


@lru_cache(maxsize=4096)
def _levi_irrep_cached(rs, parabolic: frozenset[int], mu: Weight) -> tuple:
    nodes = _levi_nodes(rs, parabolic)
    if any(mu[i] < 0 for i in nodes):
        raise NotPDominant(f"{mu} is not dominant on the Levi nodes")
    return tuple(sorted(_expand(rs, _freudenthal_dominant(rs, mu, nodes), nodes).items()))


def levi_irrep_weights(rs: RootSystem, parabolic_nodes: Iterable[int], mu: Sequence[int]) -> dict:
    """Weights of the Levi irreducible with highest weight mu, in G coordinates."""
    return dict(_levi_irrep_cached(rs, normalize_nodes(rs, parabolic_nodes), tuple(mu)))


def exterior_powers(ms: Mapping[Weight, int], pmax: int | None = None) -> list[dict]:
    """All exterior powers 0..pmax of a weight multiset in one pass.

    Dynamic program over distinct weights: a weight of multiplicity m adds
    binomial(m, k) copies of k times itself to wedge degree k.
    """
    total = sum(ms.values())
    pmax = total if pmax is None else min(pmax, total)
    if not ms:
        return [{}]
    n = len(next(iter(ms)))
    dp: list[dict] = [{(0,) * n: 1}] + [{} for _ in range(pmax)]
    for w, m in sorted(ms.items()):
        new = [dict(d) for d in dp]
        for k in range(1, min(m, pmax) + 1):
            coef = comb(m, k)
            shift = tuple(k * x for x in w)
            for p in range(pmax - k + 1):
                target = new[p + k]
                for v, c in dp[p].items():
                    key = _add(v, shift)
                    target[key] = target.get(key, 0) + c * coef
        dp = new
    return dp


def exterior_power(ms: Mapping[Weight, int], p: int) -> dict:
    total = sum(ms.values())
    if not 0 <= p <= total:
        raise POutOfRange(f"p={p} outside 0..{total}")
    if p == 0:
        n = len(next(iter(ms))) if ms else 0
        return {(0,) * n: 1}
    return exterior_powers(ms, p)[p]


def shift(ms: Mapping[Weight, int], by: Sequence[int]) -> dict:
    return {_add(w, by): c for w, c in ms.items()}


@dataclass(frozen=True)
class LeviDecomposition:
    summands: tuple[tuple[Weight, int], ...]

    def as_dict(self) -> dict:
        return dict(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)


def peel_levi(rs: RootSystem, parabolic_nodes: Iterable[int], ms: Mapping[Weight, int]) -> LeviDecomposition:
    """Split a Levi representation, given by its weights, into irreducibles.

    Weights are visited once, in decreasing order of a Levi height functional.
    A weight that still has positive count when reached cannot lie below any
    remaining weight, so it is a highest weight, and its irreducible is
    subtracted.
    """
    parabolic = normalize_nodes(rs, parabolic_nodes)
    nodes = _levi_nodes(rs, parabolic)
    h = _height_functional(rs, nodes)
    rem = dict(ms)
    order = sorted(rem, key=lambda w: (-sum(x * y for x, y in zip(h, w)), tuple(-x for x in w)))
    found = []
    for w in order:
        c = rem.get(w, 0)
        if c == 0:
            continue
        if c < 0 or any(w[i] < 0 for i in nodes):
            raise NegativeMultiplicity(f"weight {w} left with count {c}: not a Levi representation")
        found.append((w, c))
        for v, m in _levi_irrep_cached(rs, parabolic, w):
            left = rem.get(v, 0) - c * m
            if left:
                rem[v] = left
            else:
                rem.pop(v, None)
    if rem:
        w, c = min(rem.items())
        raise NegativeMultiplicity(f"residual weight {w} with count {c}")
    found.sort(key=lambda wc: tuple(-x for x in wc[0]))
    return LeviDecomposition(tuple(found))


def reconstruct(rs: RootSystem, parabolic_nodes, decomposition: LeviDecomposition) -> dict:
    out: dict = {}
    for w, c in decomposition:
        for v, m in levi_irrep_weights(rs, parabolic_nodes, w).items():
            out[v] = out.get(v, 0) + c * m
    return out


# Closed-form summand lists, re-exported for convenience.
from .fastpaths import (  # noqa: E402
    bd_wedge_summands,
    gl_to_o_branching,
    o_to_so_branching,
    typeA_wedge_summands,
)

__all__ = [
    "WeightMultiset", "LeviDecomposition", "weyl_dim", "levi_dim", "freudenthal",
    "levi_irrep_weights", "exterior_power", "exterior_powers", "peel_levi", "reconstruct",
    "shift", "typeA_wedge_summands", "gl_to_o_branching", "o_to_so_branching",
    "bd_wedge_summands",
]
