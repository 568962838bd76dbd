"""Bott-Borel-Weil cohomology of homogeneous bundles on G/P.

Convention: E_lam is the bundle whose fibre is the Levi irreducible with
highest weight lam.  Then H^0(E_lam) = V_lam for G-dominant lam, and in
general the only nonzero group is H^l(w) = V_{w(lam+rho)-rho}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import NotPDominant
from .repcalc import weyl_dim
from .rootcore import RootSystem, Weight
from .weyl import dot_normalize, normalize_nodes


@dataclass(frozen=True)
class BundleDescription:
    parabolic_nodes: frozenset[int]
    summands: tuple[tuple[Weight, int], ...]


@dataclass
class CohomResult:
    """Graded G-representation: degree q -> {dominant weight: multiplicity}."""

    groups: dict[int, dict[Weight, int]] = field(default_factory=dict)

    def add(self, q: int, weight: Weight, mult: int = 1) -> None:
        if mult == 0:
            return
        g = self.groups.setdefault(q, {})
        g[weight] = g.get(weight, 0) + mult
        if g[weight] == 0:
            del g[weight]
            if not g:
                del self.groups[q]

    def merge(self, other: "CohomResult", times: int = 1) -> None:
        for q, reps in other.groups.items():
            for w, m in reps.items():
                self.add(q, w, m * times)

    def degrees(self) -> list[int]:
        return sorted(self.groups)

    def is_zero(self) -> bool:
        return not self.groups

    def mult(self, q: int, weight: Weight) -> int:
        return self.groups.get(q, {}).get(tuple(weight), 0)

    def total_dims(self, rs: RootSystem) -> dict[int, int]:
        return {q: sum(m * weyl_dim(rs, w) for w, m in reps.items())
                for q, reps in sorted(self.groups.items())}

    def euler_characteristic(self, rs: RootSystem) -> int:
        return sum((-1) ** q * d for q, d in self.total_dims(rs).items())

    def __eq__(self, other) -> bool:
        return isinstance(other, CohomResult) and self.groups == other.groups

    def to_json(self, rs: RootSystem) -> list[dict]:
        out = []
        for q in self.degrees():
            reps = sorted(self.groups[q].items(), key=lambda wm: tuple(-x for x in wm[0]))
            out.append({"q": q, "reps": [{"weight": list(w), "dim": str(weyl_dim(rs, w)), "mult": m}
                                         for w, m in reps]})
        return out

    @classmethod
    def from_json(cls, data: list[dict]) -> "CohomResult":
        res = cls()
        for row in data:
            for rep in row["reps"]:
                res.add(int(row["q"]), tuple(rep["weight"]), int(rep["mult"]))
        return res


@lru_cache(maxsize=200_000)
def _bbw(rs: RootSystem, parabolic: frozenset[int], lam: Weight) -> tuple:
    for i in range(rs.rank):
        if i + 1 not in parabolic and lam[i] < 0:
            raise NotPDominant(f"{lam} is negative on Levi node {i + 1}")
    res = dot_normalize(rs, lam)
    if not res.regular:
        return ()
    return ((res.length, res.dominant_weight),)


def bbw_cohomology(rs: RootSystem, parabolic_nodes: Iterable[int], lam) -> CohomResult:
    out = CohomResult()
    for q, w in _bbw(rs, normalize_nodes(rs, parabolic_nodes), tuple(lam)):
        out.add(q, w, 1)
    return out


def bundle_cohomology(rs: RootSystem, bundle: BundleDescription) -> CohomResult:
    out = CohomResult()
    parabolic = normalize_nodes(rs, bundle.parabolic_nodes)
    for lam, m in bundle.summands:
        for q, w in _bbw(rs, parabolic, tuple(lam)):
            out.add(q, w, m)
    return out
