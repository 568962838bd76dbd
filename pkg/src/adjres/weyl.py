"""Weyl group algorithms that never enumerate the group itself."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import EmptyParabolic, IndexOutOfRange
from .rootcore import RootSystem, Weight, orbit, reflect


@dataclass(frozen=True)
class DotResult:
    status: str  # "singular" or "regular"
    dominant_weight: Weight | None = None
    length: int | None = None

    @property
    def regular(self) -> bool:
        return self.status == "regular"


def _coroot_rows(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(r.coroot_coords for r in rs.positive_roots)


def dominant_conjugate(lam: Sequence[int], cartan, nodes: Iterable[int] | None = None) -> Weight:
    """Dominant element of the orbit of lam under the reflections in nodes (0-based)."""
    nodes = range(len(lam)) if nodes is None else list(nodes)
    mu = tuple(lam)
    while True:
        for i in nodes:
            if mu[i] < 0:
                mu = reflect(mu, i, cartan)
                break
        else:
            return mu


def dot_normalize(rs: RootSystem, lam: Sequence[int]) -> DotResult:
    n = rs.rank
    mu = tuple(lam[i] + 1 for i in range(n))
    length = 0
    for cor in _coroot_rows(rs):
        v = sum(a * b for a, b in zip(mu, cor))
        if v == 0:
            return DotResult("singular")
        if v < 0:
            length += 1
    dom = dominant_conjugate(mu, rs.cartan)
    return DotResult("regular", tuple(x - 1 for x in dom), length)


@dataclass(frozen=True)
class BettiSequence:
    b: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.b)

    def __getitem__(self, p: int) -> int:
        return self.b[p] if 0 <= p < len(self.b) else 0

    def __len__(self) -> int:
        return len(self.b)


def normalize_nodes(rs: RootSystem, nodes: Iterable[int]) -> frozenset[int]:
    """Validate a set of 1-based node labels."""
    out = frozenset(int(i) for i in nodes)
    for i in out:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"node {i} not in 1..{rs.rank}")
    return out


@lru_cache(maxsize=None)
def _coset_betti(rs: RootSystem, nodes: frozenset[int]) -> BettiSequence:
    lam = tuple(int(i + 1 in nodes) for i in range(rs.rank))
    rows = _coroot_rows(rs)
    counts: dict[int, int] = {}
    for mu in orbit(lam, range(rs.rank), rs.cartan):
        k = sum(1 for cor in rows if sum(a * b for a, b in zip(mu, cor)) < 0)
        counts[k] = counts.get(k, 0) + 1
    top = max(counts)
    return BettiSequence(tuple(counts.get(k, 0) for k in range(top + 1)))


def coset_betti(rs: RootSystem, parabolic_nodes: Iterable[int]) -> BettiSequence:
    """Betti numbers b_p = #{w in W^P : l(w) = p} of G/P."""
    nodes = normalize_nodes(rs, parabolic_nodes)
    if not nodes:
        raise EmptyParabolic("parabolic node set must be nonempty")
    return _coset_betti(rs, nodes)
