"""Root systems of the simple Lie algebras with exact integer data.

Weights are plain integer tuples in the basis of fundamental weights, with
nodes numbered as in Bourbaki.  The one non-obvious choice is G2, where node 1
carries the long simple root, so that the adjoint representation is V(w1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .errors import DimensionMismatch, RankOutOfRange
from .exact import lcm_denominator, mat_inverse

Weight = tuple[int, ...]

_RANK_BOUNDS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_BOUNDS:
            raise RankOutOfRange(f"unknown series {self.series!r}")
        if not _RANK_BOUNDS[self.series](self.rank):
            raise RankOutOfRange(f"{self.series}{self.rank} is not a valid simple type")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"

    @classmethod
    def parse(cls, text: str | "LieType") -> "LieType":
        if isinstance(text, LieType):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise RankOutOfRange(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def cartan_matrix(t: LieType) -> list[list[int]]:
    """Cartan matrix with entry [i][j] = <alpha_i^vee, alpha_j>."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):  # 1-based nodes
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    s = t.series
    if s in "ABCD":
        chain = n if s != "D" else n - 1
        for i in range(1, chain):
            link(i, i + 1)
        if s == "B":
            link(n - 1, n, -1, -2)  # alpha_n short
        elif s == "C":
            link(n - 1, n, -2, -1)  # alpha_n long
        elif s == "D":
            link(n - 2, n)
    elif s == "E":
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, n):
            link(i, i + 1)
    elif s == "F":
        link(1, 2)
        link(2, 3, -1, -2)  # alpha_3 short
        link(3, 4)
    elif s == "G":
        link(1, 2, -1, -3)  # alpha_1 long
    return a


def _root_length_halves(t: LieType) -> list[int]:
    """d_i = (alpha_i, alpha_i)/2 with short simple roots normalised to 1."""
    n = t.rank
    if t.series == "B":
        return [2] * (n - 1) + [1]
    if t.series == "C":
        return [1] * (n - 1) + [2]
    if t.series == "F":
        return [2, 2, 1, 1]
    if t.series == "G":
        return [3, 1]
    return [1] * n


@dataclass(frozen=True)
class Root:
    simple_coords: tuple[int, ...]
    weight_coords: Weight
    coroot_coords: tuple[int, ...]
    length_class: str  # "long" or "short"

    @property
    def height(self) -> int:
        return sum(self.simple_coords)


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    exponents: tuple[int, ...]
    weyl_order: int
    form_scale: int
    form: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def num_long_roots(self) -> int:
        return 2 * sum(r.length_class == "long" for r in self.positive_roots)

    @property
    def long_simple_count(self) -> int:
        top = max(self.d)
        return sum(x == top for x in self.d)

    s = long_simple_count

    @property
    def coxeter_number(self) -> int:
        return self.exponents[-1] + 1

    def simple_root(self, i: int) -> Weight:
        """Simple root alpha_i (1-based) in fundamental-weight coordinates."""
        return tuple(self.cartan[r][i - 1] for r in range(self.rank))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """form_scale times the invariant form (lam, mu); short roots have (a,a)=2."""
        f = self.form
        n = self.rank
        return sum(lam[i] * f[i][j] * mu[j] for i in range(n) for j in range(n)
                   if lam[i] and mu[j])

    def to_simple_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        inv = _cartan_inverse(self.lie_type)
        n = self.rank
        return tuple(sum(inv[i][j] * lam[j] for j in range(n)) for i in range(n))

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def _cartan_inverse(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in mat_inverse(cartan_matrix(t)))


def _positive_roots_by_closure(a: list[list[int]], d: list[int]) -> list[tuple[int, ...]]:
    """All positive roots in simple coordinates, grown height by height.

    beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0 where p is the
    largest k with beta - k alpha_i a root.  Lower roots are already known
    when beta is processed, so p is available.
    """
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in known:
                        p += 1
                    else:
                        break
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                if p - pairing > 0:
                    new = list(beta)
                    new[i] += 1
                    new = tuple(new)
                    if new not in known:
                        known.add(new)
                        nxt.append(new)
        nxt.sort()
        out.extend(nxt)
        layer = nxt
    return out


def exponents_from_heights(heights: Iterable[int]) -> tuple[int, ...]:
    """Conjugate of the partition k -> #{roots of height k}."""
    counts: dict[int, int] = {}
    for h in heights:
        counts[h] = counts.get(h, 0) + 1
    parts = [counts[k] for k in sorted(counts)]
    width = parts[0] if parts else 0
    return tuple(sorted(sum(1 for c in parts if c >= i) for i in range(1, width + 1)))


def reflect(lam: Sequence[int], i: int, cartan) -> Weight:
    """Simple reflection s_i (0-based node) on a weight in fundamental coordinates."""
    c = lam[i]
    if c == 0:
        return tuple(lam)
    return tuple(x - c * cartan[r][i] for r, x in enumerate(lam))


def orbit(lam: Weight, nodes: Sequence[int], cartan, cap: int | None = None) -> list[Weight]:
    """Orbit of lam under the subgroup generated by the given simple reflections.

    Breadth-first with a sorted frontier, so the output order is canonical.
    Returns an empty list if cap is given and exceeded.
    """
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    out = [tuple(lam)]
    while frontier:
        nxt = set()
        for mu in frontier:
            for i in nodes:
                if mu[i] > 0:  # only walk downwards; the orbit is still exhausted
                    nu = reflect(mu, i, cartan)
                    if nu not in seen:
                        nxt.add(nu)
        frontier = sorted(nxt, reverse=True)
        seen.update(frontier)
        out.extend(frontier)
        if cap is not None and len(out) > cap:
            return []
    return out


def weyl_group_order(cartan, nodes: frozenset[int] | None = None, _memo=None) -> int:
    """|W| by the stabiliser recursion |W_S| = |W_S . w_i| * |W_{S - i}|.

    A single orbit of rho is far too large for E8, but every step here uses
    the orbit of one fundamental weight, and the node with the smallest orbit
    is chosen (for E8 the chain is 240, 56, 27, 10, 8, 4, 3, 2).
    """
    n = len(cartan)
    if nodes is None:
        nodes = frozenset(range(n))
    if _memo is None:
        _memo = {}
    if not nodes:
        return 1
    if nodes in _memo:
        return _memo[nodes]
    best = None
    order_nodes = sorted(nodes)
    for cap in (64, 512, 5000, None):
        for i in order_nodes:
            w = tuple(int(k == i) for k in range(n))
            orb = orbit(w, order_nodes, cartan, cap)
            if orb and (best is None or len(orb) < best[1]):
                best = (i, len(orb))
        if best:
            break
    i, size = best
    result = size * weyl_group_order(cartan, nodes - {i}, _memo)
    _memo[nodes] = result
    return result


def orbit_chain(t: LieType) -> list[int]:
    """Orbit sizes used by weyl_group_order, outermost first (for documentation)."""
    a = cartan_matrix(t)
    nodes = frozenset(range(t.rank))
    sizes = []
    while nodes:
        best = None
        for i in sorted(nodes):
            w = tuple(int(k == i) for k in range(t.rank))
            orb = orbit(w, sorted(nodes), a, 5000)
            if orb and (best is None or len(orb) < best[1]):
                best = (i, len(orb))
        sizes.append(best[1])
        nodes = nodes - {best[0]}
    return sizes


@lru_cache(maxsize=None)
def build_root_system(t: LieType | str) -> RootSystem:
    t = LieType.parse(t)
    a = cartan_matrix(t)
    d = _root_length_halves(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            assert d[i] * a[i][j] == d[j] * a[j][i], "symmetrisability"
    roots_simple = _positive_roots_by_closure(a, d)
    dmax = max(d)
    roots = []
    for c in roots_simple:
        wc = tuple(sum(a[i][j] * c[j] for j in range(n)) for i in range(n))
        # (beta, beta) with the symmetrised matrix diag(d) A
        norm2 = sum(c[i] * d[i] * a[i][j] * c[j] for i in range(n) for j in range(n))
        d_beta = Fraction(norm2, 2)
        cor = tuple(Fraction(c[i] * d[i]) / d_beta for i in range(n))
        assert all(x.denominator == 1 for x in cor)
        cor = tuple(int(x) for x in cor)
        roots.append(Root(c, wc, cor, "long" if d_beta == dmax else "short"))
    exps = exponents_from_heights(sum(c) for c in roots_simple)
    inv = _cartan_inverse(t)
    f_rat = [[d[i] * inv[i][j] for j in range(n)] for i in range(n)]
    scale = lcm_denominator(f_rat)
    form = tuple(tuple(int(x * scale) for x in row) for row in f_rat)
    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(r) for r in a),
        d=tuple(d),
        positive_roots=tuple(roots),
        exponents=exps,
        weyl_order=weyl_group_order(a),
        form_scale=scale,
        form=form,
    )


def pair(rs: RootSystem, lam: Sequence[int], alpha: Root) -> int:
    """<lam, alpha^vee>."""
    if len(lam) != rs.rank or len(alpha.coroot_coords) != rs.rank:
        raise DimensionMismatch(f"expected length {rs.rank}")
    return sum(x * y for x, y in zip(lam, alpha.coroot_coords))


def _dominance_max(rs: RootSystem, roots: list[Root]) -> Root:
    tops = [r for r in roots
            if not any(all(a >= b for a, b in zip(o.simple_coords, r.simple_coords))
                       and o is not r for o in roots)]
    assert len(tops) == 1
    return tops[0]


def highest_root(rs: RootSystem) -> Root:
    return _dominance_max(rs, list(rs.positive_roots))


def highest_short_root(rs: RootSystem) -> Root:
    short = [r for r in rs.positive_roots if r.length_class == "short"]
    if not short:
        return highest_root(rs)
    return _dominance_max(rs, short)


def discriminant_degree(rs: RootSystem) -> int:
    return rs.num_long_roots


def check_invariants(rs: RootSystem) -> list[str]:
    """Return a list of violated RootSystem invariants (empty when all hold)."""
    bad = []
    e = rs.exponents
    if sum(e) != len(rs.positive_roots):
        bad.append("sum of exponents != |positive roots|")
    if prod(x + 1 for x in e) != rs.weyl_order:
        bad.append("product of (e_i + 1) != |W|")
    if len({e[i] + e[-1 - i] for i in range(len(e))}) != 1:
        bad.append("exponents not palindromic")
    if rs.lie_type.simply_laced and rs.num_long_roots != 2 * len(rs.positive_roots):
        bad.append("simply laced but some root short")
    if rs.lie_type.simply_laced and rs.s != rs.rank:
        bad.append("simply laced but s != rank")
    closure = _positive_roots_by_closure([list(r) for r in rs.cartan], list(rs.d))
    if len(closure) != len(rs.positive_roots):
        bad.append("closure not idempotent")
    return bad
