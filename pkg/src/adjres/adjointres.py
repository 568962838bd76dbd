"""Adjoint varieties: cohomology tables, Weyman-complex assembly, predictions.

Notation used throughout:

* X = G/P is the closed orbit in P(g), L = O_X(1) has weight theta (the
  highest root), and F is the contact distribution of rank dim X - 1.
* The fibre of F^vee has weights -beta for the positive roots with
  <beta, theta^vee> = 1, each once.
* Weyman terms: H^q(Omega-hat^p (x) L) contributes to homological position
  u = q - p with twist O(-p).
"""
from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .bbw import BundleDescription, CohomResult, bbw_cohomology, bundle_cohomology
from .errors import CancellationMismatch, ComputeExcluded, ConventionError, POutOfRange
from .repcalc import exterior_powers, levi_dim, peel_levi, weyl_dim
from .rootcore import (LieType, RootSystem, Weight, build_root_system, highest_root,
                       highest_short_root, pair)
from .weyl import BettiSequence, coset_betti

SCHEMA_VERSION = "1"
EXCLUDED_MESSAGE = "computation excluded at desk scale"


@dataclass(frozen=True)
class ComputeConfig:
    """Knobs for the cohomology pipeline."""

    threads: int = 1
    allow_e7: bool = False
    cache_dir: str | None = None

    @classmethod
    def from_env(cls, **kw) -> "ComputeConfig":
        kw.setdefault("cache_dir", os.environ.get("ADJRES_CACHE") or None)
        return cls(**kw)


# Values quoted for each adjoint variety, used only as cross-checks of the
# computed data (never as inputs to the pipeline).
CATALOG_PARABOLIC = {"B": {2}, "C": {1}, "D": {2}, "G": {1}, "F": {1}}
CATALOG_PARABOLIC_E = {6: {2}, 7: {1}, 8: {8}}
CATALOG_INDEX = {"G2": 3, "F4": 8, "E6": 11}
CATALOG_DIM = {"G2": 5, "F4": 15, "E6": 21}
CATALOG_FDUAL = {
    "G2": [(-2, 3)],
    "F4": [(-2, 1, 0, 0)],
    "E6": [(0, -2, 0, 1, 0, 0)],
    "E7": [(-2, 0, 1, 0, 0, 0, 0)],
    "E8": [(0, 0, 0, 0, 0, 0, 1, -2)],
}
# j of the resolution: where the quasi-minuscule term sits.
CATALOG_J = {"C": 1, "G": 2, "F": 3}
# A second quoted value puts the quasi-minuscule class of both G2 and F4 in wedge degree 2.
CATALOG_PHAT_ALT = {"G2": 2, "F4": 2}


def catalog_parabolic(t: LieType) -> set[int]:
    if t.series == "A":
        return {1, t.rank}
    if t.series == "E":
        return set(CATALOG_PARABOLIC_E[t.rank])
    if t.series == "D" and t.rank == 3:
        return {2, 3}  # D3 = A3, the middle node of A3 is node 1
    return set(CATALOG_PARABOLIC[t.series])


def catalog_j(t: LieType) -> int:
    if t.simply_laced:
        return 0
    if t.series == "B":
        return t.rank
    return CATALOG_J[t.series]


@dataclass(frozen=True)
class AdjointVariety:
    lie_type: LieType
    parabolic_nodes: frozenset[int]
    dim_X: int
    e: int
    L_weight: Weight
    Fdual_fiber: tuple[tuple[Weight, int], ...]
    Fdual_summands: tuple[Weight, ...]
    index: int
    disc_degree: int
    s: int
    j: int
    qm_weight: Weight
    epsilon: int
    exponents: tuple[int, ...]
    betti: BettiSequence

    @property
    def rs(self) -> RootSystem:
        return build_root_system(self.lie_type)

    @property
    def f_rank(self) -> int:
        return self.dim_X - 1

    @property
    def dim_g(self) -> int:
        return weyl_dim(self.rs, self.L_weight)

    @property
    def dim_qm(self) -> int:
        return weyl_dim(self.rs, self.qm_weight)

    @property
    def excluded(self) -> bool:
        return self.lie_type == LieType("E", 8)


def _typeA_fdual(n: int) -> list[Weight]:
    """The two pieces [-1; 1, 0.., 0; 0] and [0; 0.., 0, -1; 1] of F^vee in type A_n."""
    if n == 1:
        return []
    from .fastpaths import typeA_bracket_to_weight
    first = [-1] + [1] + [0] * (n - 2) + [0]
    second = [0] + [0] * (n - 2) + [-1] + [1]
    return [typeA_bracket_to_weight(first), typeA_bracket_to_weight(second)]


@lru_cache(maxsize=None)
def adjoint_catalog(t: LieType | str) -> AdjointVariety:
    t = LieType.parse(t)
    rs = build_root_system(t)
    theta = highest_root(rs)
    nodes = frozenset(i + 1 for i in range(rs.rank) if theta.weight_coords[i] != 0)
    if set(nodes) != catalog_parabolic(t):
        raise ConventionError(f"{t}: parabolic {sorted(nodes)} differs from catalog")
    fiber: dict[Weight, int] = {}
    tangent_sum = [0] * rs.rank
    for r in rs.positive_roots:
        k = pair(rs, r.weight_coords, theta)
        if k >= 1:
            tangent_sum = [a + b for a, b in zip(tangent_sum, r.weight_coords)]
        if k == 1:
            w = tuple(-x for x in r.weight_coords)
            fiber[w] = fiber.get(w, 0) + 1
    dim_x = sum(fiber.values()) + 1
    ratios = {a // b for a, b in zip(tangent_sum, theta.weight_coords) if b}
    index = ratios.pop()
    if ratios or [index * x for x in theta.weight_coords] != tangent_sum:
        raise ConventionError(f"{t}: canonical class not a multiple of L")
    dec = peel_levi(rs, nodes, fiber)
    summands = tuple(w for w, _ in dec)
    expected = CATALOG_FDUAL.get(str(t))
    if t.series == "A":
        expected = _typeA_fdual(t.rank)
    elif t.series in "BD" and t.rank >= {"B": 3, "D": 4}[t.series]:
        from .fastpaths import so_bracket_to_weight
        expected = [so_bracket_to_weight(t.series, [0, -1, 1] + [0] * (t.rank - 3))]
    elif t.series == "C":
        expected = [tuple(-x for x in rs.simple_root(1))]
    if expected is not None and sorted(expected, reverse=True) != sorted(summands, reverse=True):
        raise ConventionError(f"{t}: F^vee summands {summands} differ from catalog {expected}")
    if sum(levi_dim(rs, nodes, w) * m for w, m in dec) != dim_x - 1:
        raise ConventionError(f"{t}: F^vee rank mismatch")
    if str(t) in CATALOG_INDEX and (CATALOG_INDEX[str(t)], CATALOG_DIM[str(t)]) != (index, dim_x):
        raise ConventionError(f"{t}: index/dimension differ from catalog")
    if dim_x % 2 == 0:
        raise ConventionError(f"{t}: adjoint variety of even dimension")
    return AdjointVariety(
        lie_type=t,
        parabolic_nodes=nodes,
        dim_X=dim_x,
        e=(dim_x - 1) // 2,
        L_weight=theta.weight_coords,
        Fdual_fiber=tuple(sorted(fiber.items())),
        Fdual_summands=summands,
        index=index,
        disc_degree=rs.num_long_roots,
        s=rs.s,
        j=catalog_j(t),
        qm_weight=highest_short_root(rs).weight_coords,
        epsilon=int(t.simply_laced),
        exponents=rs.exponents,
        betti=coset_betti(rs, nodes),
    )


def check_computable(X: AdjointVariety, config: ComputeConfig) -> None:
    if X.excluded:
        raise ComputeExcluded(EXCLUDED_MESSAGE)
    if X.lie_type == LieType("E", 7) and not config.allow_e7:
        raise ComputeExcluded("E7 is opt-in (allow_e7 / --allow-e7); expect hours of CPU and several GB")


def calibrate(X: AdjointVariety) -> None:
    """Sign-convention checks run before any adjoint computation."""
    rs = X.rs
    zero = (0,) * rs.rank
    h = bbw_cohomology(rs, X.parabolic_nodes, zero)
    if h.groups != {0: {zero: 1}}:
        raise ConventionError("H(O_X) is not C in degree 0")
    h = bbw_cohomology(rs, X.parabolic_nodes, X.L_weight)
    if h.groups != {0: {X.L_weight: 1}} or X.dim_g != rs.rank + 2 * len(rs.positive_roots):
        raise ConventionError("H^0(L) is not the adjoint representation")
    dec = peel_levi(rs, X.parabolic_nodes, dict(X.Fdual_fiber))
    h = bundle_cohomology(rs, BundleDescription(X.parabolic_nodes, dec.summands))
    if h.groups != {1: {zero: X.betti[1]}}:
        raise ConventionError(f"H(F^vee) = {h.groups}, expected C^{X.betti[1]} in degree 1")


@dataclass
class CohomTable:
    lie_type: LieType
    rows: dict[tuple[int, int], CohomResult] = field(default_factory=dict)

    def get(self, p: int, twist: int) -> CohomResult:
        return self.rows.get((p, twist), CohomResult())


def _row_worker(args):
    type_str, nodes, p, ms, theta = args
    rs = build_root_system(type_str)
    dec = peel_levi(rs, nodes, ms)
    out = []
    for twist in (0, 1):
        summands = dec.summands if twist == 0 else tuple(
            (tuple(a + b for a, b in zip(w, theta)), m) for w, m in dec.summands)
        res = bundle_cohomology(rs, BundleDescription(nodes, summands))
        out.append((p, twist, res.to_json(rs)))
    return out


def _cache_path(config: ComputeConfig, t: LieType) -> str | None:
    if not config.cache_dir:
        return None
    key = hashlib.sha256(json.dumps({"schema": SCHEMA_VERSION, "kind": "wedge-table",
                                     "type": str(t)}).encode()).hexdigest()[:32]
    return os.path.join(config.cache_dir, f"{key}.json")


_TABLES: dict[LieType, CohomTable] = {}


def compute_tables(X: AdjointVariety, config: ComputeConfig | None = None) -> CohomTable:
    """Cohomology of wedge^p F^vee and wedge^p F^vee (x) L for all p."""
    config = config or ComputeConfig()
    check_computable(X, config)
    if X.lie_type in _TABLES:
        return _TABLES[X.lie_type]
    calibrate(X)
    rs = X.rs
    path = _cache_path(config, X.lie_type)
    table = CohomTable(X.lie_type)
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        for row in data["rows"]:
            table.rows[(row["p"], row["twist"])] = CohomResult.from_json(row["cohomology"])
        _TABLES[X.lie_type] = table
        return table
    powers = exterior_powers(dict(X.Fdual_fiber))
    jobs = [(str(X.lie_type), X.parabolic_nodes, p, ms, X.L_weight) for p, ms in enumerate(powers)]
    if config.threads > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as ex:
            results = list(ex.map(_row_worker, jobs))
    else:
        results = [_row_worker(j) for j in jobs]
    for chunk in results:
        for p, twist, js in chunk:
            table.rows[(p, twist)] = CohomResult.from_json(js)
    if path:
        os.makedirs(config.cache_dir, exist_ok=True)
        rows = [{"p": p, "twist": tw, "cohomology": table.rows[(p, tw)].to_json(rs)}
                for (p, tw) in sorted(table.rows)]
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump({"schema": SCHEMA_VERSION, "type": str(X.lie_type), "rows": rows}, fh)
        os.replace(tmp, path)
    _TABLES[X.lie_type] = table
    return table


def wedge_F_cohomology(X: AdjointVariety, p: int, twist: int,
                       config: ComputeConfig | None = None) -> CohomResult:
    if not 0 <= p <= X.f_rank:
        raise POutOfRange(f"p={p} outside 0..{X.f_rank}")
    return compute_tables(X, config).get(p, twist)


# ------------------------------------------------------------------ pattern


@dataclass
class PatternReport:
    lie_type: LieType
    mismatches: list[str]
    qm_locations: list[tuple[int, int]]
    trivial_range: tuple[int, int] | None  # observed p-range of twist-1 trivial towers

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_cohomology_pattern(X: AdjointVariety, table: CohomTable | None = None) -> PatternReport:
    """Compare the tables with the uniform vanishing pattern.

    Twist 0: only H^p(wedge^p) = C^{b_p}, for p <= e.  Twist 1: H^0 of L is g,
    and H^{p-2}(wedge^p (x) L) = C^{b_{p-2}} for 2 <= p <= e+1, plus a single
    quasi-minuscule class in the non-simply-laced case.
    """
    table = table or compute_tables(X)
    zero = (0,) * X.rs.rank
    bad: list[str] = []
    qm: list[tuple[int, int]] = []
    trivial_ps = []
    for p in range(X.f_rank + 1):
        got0 = table.get(p, 0).groups
        want0 = {p: {zero: X.betti[p]}} if p <= X.e and X.betti[p] else {}
        if got0 != want0:
            bad.append(f"twist 0, p={p}: got {got0}, expected {want0}")
        got1 = {q: dict(r) for q, r in table.get(p, 1).groups.items()}
        if X.epsilon == 0:
            for q in sorted(got1):
                if X.qm_weight in got1[q]:
                    qm.extend([(p, q)] * got1[q][X.qm_weight])
                    del got1[q][X.qm_weight]
            got1 = {q: r for q, r in got1.items() if r}
        if any(zero in r for r in got1.values()):
            trivial_ps.append(p)
        want1: dict = {}
        if p == 0:
            want1 = {0: {X.L_weight: 1}}
        elif 2 <= p <= X.e + 1 and X.betti[p - 2]:
            want1 = {p - 2: {zero: X.betti[p - 2]}}
        if got1 != want1:
            bad.append(f"twist 1, p={p}: got {got1}, expected {want1}")
    if X.epsilon == 0 and len(qm) != 1:
        bad.append(f"expected exactly one quasi-minuscule class, found {qm}")
    if X.epsilon == 1 and qm:
        bad.append(f"unexpected quasi-minuscule classes {qm}")
    rng = (min(trivial_ps), max(trivial_ps)) if trivial_ps else None
    return PatternReport(X.lie_type, bad, qm, rng)


# ------------------------------------------------------------------ Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Equivariant graded free complex: u -> {(twist, rep): multiplicity}.

    A rep is a G-dominant weight; the zero weight is the trivial representation.
    """

    lie_type: str
    sheaf: str
    terms: tuple[tuple[int, tuple[tuple[int, Weight, int], ...]], ...]
    metadata: tuple[tuple[str, str], ...] = ()

    @classmethod
    def from_dict(cls, lie_type, sheaf, data: dict[int, dict[tuple[int, Weight], int]],
                  metadata: dict | None = None) -> "BettiTable":
        terms = []
        for u in sorted(data, reverse=True):
            entries = tuple(sorted(((tw, rep, m) for (tw, rep), m in data[u].items() if m),
                                   key=lambda e: (-e[0], tuple(-x for x in e[1]))))
            if entries:
                terms.append((u, entries))
        return cls(str(lie_type), sheaf, tuple(terms), tuple(sorted((metadata or {}).items())))

    def as_dict(self) -> dict[tuple[int, int, Weight], int]:
        return {(u, tw, rep): m for u, entries in self.terms for tw, rep, m in entries}

    def to_json(self) -> dict:
        return {"schema": SCHEMA_VERSION, "type": self.lie_type, "sheaf": self.sheaf,
                "terms": [{"u": u, "entries": [{"twist": tw, "rep": list(rep), "mult": m}
                                               for tw, rep, m in entries]}
                          for u, entries in self.terms]}

    def render(self, rs: RootSystem | None = None) -> str:
        rs = rs or build_root_system(self.lie_type)
        lines = [f"{self.lie_type} {self.sheaf} resolution"]
        for u, entries in self.terms:
            parts = []
            for tw, rep, m in entries:
                o = f"O({tw})"
                label = "" if not any(rep) else f"V{list(rep)}[{weyl_dim(rs, rep)}] x "
                parts.append((f"{m}*" if m > 1 else "") + label + o)
            lines.append(f"  u={u:>3}: " + " + ".join(parts))
        return "\n".join(lines)

    def degree_data(self, rs: RootSystem | None = None) -> tuple[int, int]:
        """(alternating rank sum, degree) of the complex read as a Hilbert numerator.

        With P(x) = sum (-1)^|u| rank x^(-twist), a module supported on a
        hypersurface has P(1) = 0 and -P'(1) equal to its degree.
        """
        rs = rs or build_root_system(self.lie_type)
        rank_sum = deg = 0
        for u, entries in self.terms:
            sign = (-1) ** abs(u)
            for tw, rep, m in entries:
                r = m * weyl_dim(rs, rep)
                rank_sum += sign * r
                deg += sign * r * tw
        return rank_sum, deg

    def hilbert_function(self, nvars: int, t: int, rs: RootSystem | None = None) -> int:
        """Hilbert function in degree t of the cokernel, assuming exactness."""
        from math import comb
        rs = rs or build_root_system(self.lie_type)
        total = 0
        for u, entries in self.terms:
            for tw, rep, m in entries:
                k = t + tw
                if k >= 0:
                    total += (-1) ** abs(u) * m * weyl_dim(rs, rep) * comb(k + nvars - 1, nvars - 1)
        return total


@dataclass(frozen=True)
class Diff:
    entries: tuple[tuple[int, int, Weight, int, int], ...]  # (u, twist, rep, mult_a, mult_b)

    @property
    def empty(self) -> bool:
        return not self.entries

    def render(self) -> str:
        if self.empty:
            return "no differences"
        return "\n".join(f"u={u} twist={tw} rep={list(rep)}: {a} vs {b}"
                         for u, tw, rep, a, b in self.entries)


def compare_resolutions(a: BettiTable, b: BettiTable) -> Diff:
    da, db = a.as_dict(), b.as_dict()
    keys = sorted(set(da) | set(db), key=lambda k: (-k[0], -k[1], k[2]))
    return Diff(tuple((u, tw, rep, da.get((u, tw, rep), 0), db.get((u, tw, rep), 0))
                      for u, tw, rep in keys if da.get((u, tw, rep), 0) != db.get((u, tw, rep), 0)))


LIE_BRACKET_NOTE = ("the block g(x)O(-1) -> g(x)O is the Lie bracket, "
                    "and its kernel is free on the gradients of the basic invariants")


def predicted_resolution(t: LieType | str, which: str, j: int | None = None) -> BettiTable:
    """Resolution shape from catalog constants alone (no cohomology)."""
    t = LieType.parse(t)
    X = adjoint_catalog(t)
    zero = (0,) * t.rank
    ex = X.exponents[:X.s]
    data: dict[int, dict] = {}

    def put(u, tw, rep, m=1):
        d = data.setdefault(u, {})
        d[(tw, rep)] = d.get((tw, rep), 0) + m

    if which == "jacobian":
        j = X.j if j is None else j
        put(0, 0, X.L_weight)
        put(-1, -1, X.L_weight)
        for e in ex:
            put(-1, -e, zero)
            put(-2, -e - 1, zero)
        if X.epsilon == 0:
            put(-1, -j, X.qm_weight)
            put(-2, -j - 1, X.qm_weight)
        return BettiTable.from_dict(t, which, data, {"bracket": LIE_BRACKET_NOTE, "j": str(j)})
    if which == "structure":
        m = X.dim_X
        for e in ex:
            put(0, -e + 1, zero)
            put(-1, -m + e - 2, zero)
        return BettiTable.from_dict(t, which, data)
    raise ValueError(f"unknown sheaf {which!r}")


# ------------------------------------------------------------------ assembly


Provenance = dict  # (u, twist, rep) -> list of (p, q, piece)


def _extension_cohomology(sub: CohomResult, quot: CohomResult, allowed: dict[int, int],
                          context: str) -> CohomResult:
    """Cohomology of an extension 0 -> sub -> E -> quot -> 0.

    ``allowed`` maps a degree q to the number of trivial classes that the
    connecting map H^q(quot) -> H^{q+1}(sub) kills (it has maximal rank
    there).  Any other representation present on both sides of a
    connecting map is an unforced coincidence and raises.
    """
    zero = None
    out = CohomResult()
    out.merge(sub)
    out.merge(quot)
    for q, reps in quot.groups.items():
        above = sub.groups.get(q + 1, {})
        for w, m in reps.items():
            if w not in above:
                continue
            zero = (0,) * len(w)
            if w == zero and q in allowed:
                k = allowed[q]
                out.add(q, w, -k)
                out.add(q + 1, w, -k)
            elif w == zero and q not in allowed:
                raise CancellationMismatch(f"{context}: trivial classes in degrees {q},{q + 1} with no rule")
            else:
                raise CancellationMismatch(f"{context}: rep {w} in degrees {q},{q + 1}; map not determined")
    return out


def omega_L_cohomology(X: AdjointVariety, table: CohomTable) -> list[CohomResult]:
    """H(Omega^p (x) L) for p = 0..dim X from 0 -> wedge^{p-1} -> Omega^p(1) -> wedge^p (1) -> 0.

    The connecting map on trivial classes H^{p-2}(wedge^p (1)) -> H^{p-1}(wedge^{p-1})
    is the hyperplane class (maximal rank), so min(b_{p-2}, b_{p-1}) copies cancel.
    """
    out = []
    b = X.betti
    for p in range(X.dim_X + 1):
        sub = table.get(p - 1, 0) if p >= 1 else CohomResult()
        quot = table.get(p, 1) if p <= X.f_rank else CohomResult()
        allowed = {p - 2: min(b[p - 2], b[p - 1])} if p >= 2 else {}
        out.append(_extension_cohomology(sub, quot, allowed, f"Omega^{p}(1)"))
    return out


def assemble_jacobian_resolution(X: AdjointVariety, table: CohomTable | None = None,
                                 provenance: Provenance | None = None) -> BettiTable:
    """Weyman complex of the Jacobian ideal, from the computed tables.

    Omega-hat^p (x) L is an extension of Omega^{p-1} (x) L by Omega^p (x) L.
    Its connecting map on trivial classes is the hyperplane class acting on
    cokernels of the hyperplane class, hence zero, so nothing cancels there.
    """
    table = table or compute_tables(X)
    om = omega_L_cohomology(X, table)
    data: dict[int, dict] = {}
    for p in range(X.dim_X + 2):
        sub = om[p] if p < len(om) else CohomResult()
        quot = om[p - 1] if 1 <= p <= len(om) else CohomResult()
        for piece, part in (("sub", sub), ("quot", quot)):
            for q, reps in part.groups.items():
                for w, m in reps.items():
                    d = data.setdefault(q - p, {})
                    d[(-p, w)] = d.get((-p, w), 0) + m
                    if provenance is not None:
                        provenance.setdefault((q - p, -p, w), []).append((p, q, piece))
    _check_hat_coincidences(X, om)
    return BettiTable.from_dict(X.lie_type, "jacobian", data, {"bracket": LIE_BRACKET_NOTE})


def _check_hat_coincidences(X: AdjointVariety, om: list[CohomResult]) -> None:
    """Every class that could meet a connecting map inside Omega-hat^p (x) L must be a
    trivial cokernel class, for which the map is zero; anything else raises."""
    for p in range(1, len(om)):
        sub, quot = om[p], om[p - 1]
        for q, reps in quot.groups.items():
            for w in reps:
                if w in sub.groups.get(q + 1, {}) and any(w):
                    raise CancellationMismatch(f"Omega-hat^{p}(1): rep {w} in degrees {q},{q + 1}")


def assemble_structure_resolution(X: AdjointVariety) -> BettiTable:
    """Weyman complex of the normalisation: b_p trivial classes of Omega^p, hyperplane
    class between Omega^{p-1} and Omega^p cancelled at maximal rank."""
    b = X.betti
    m = X.dim_X
    zero = (0,) * X.rs.rank
    data: dict[int, dict] = {0: {}, -1: {}}
    for p in range(m + 2):
        top, low = b[p], b[p - 1]
        if top < 0 or low < 0:
            raise CancellationMismatch("negative Betti number")
        c, k = top - min(top, low), low - min(top, low)
        if c:
            data[0][(-p, zero)] = c
        if k:
            data[-1][(-p, zero)] = k
    return BettiTable.from_dict(X.lie_type, "structure", data)


def exponents_from_table(X: AdjointVariety, table: BettiTable) -> list[int]:
    """Exponents read from the trivial part of the u=-1 term (twist -e)."""
    out = []
    zero = (0,) * X.rs.rank
    for (u, tw, rep), m in sorted(table.as_dict().items()):
        if u == -1 and rep == zero:
            out.extend([-tw] * m)
    return sorted(out)


def qm_location(X: AdjointVariety, table: CohomTable | None = None) -> list[tuple[int, int]]:
    if X.epsilon == 1:
        return []
    table = table or compute_tables(X)
    locs = []
    for (p, twist), res in sorted(table.rows.items()):
        if twist == 1:
            for q in res.degrees():
                locs.extend([(p, q)] * res.mult(q, X.qm_weight))
    return locs


@dataclass
class ArbitrationReport:
    lie_type: LieType
    qm_locations: list[tuple[int, int]]
    j_computed: int | None
    j_catalog: int
    p_alt: int | None
    assembled_matches_computed: bool
    assembled_matches_catalog: bool

    @property
    def consistent(self) -> bool:
        return self.j_computed is not None and self.assembled_matches_computed

    def lines(self) -> list[str]:
        out = [f"{self.lie_type}: quasi-minuscule class found at (p, q) = {self.qm_locations}"]
        out.append(f"  j from computation = {self.j_computed}; "
                   f"catalog j = {self.j_catalog}; "
                   f"alternative quoted wedge degree = {self.p_alt}")
        out.append(f"  computation agrees with catalog j: {self.j_computed == self.j_catalog}")
        if self.p_alt is not None:
            out.append(f"  computation agrees with alternative wedge degree: "
                       f"{self.j_computed == self.p_alt}")
        out.append(f"  assembled == predicted(j computed): {self.assembled_matches_computed}; "
                   f"assembled == predicted(catalog j): {self.assembled_matches_catalog}")
        return out


def arbitrate_j(X: AdjointVariety, config: ComputeConfig | None = None) -> ArbitrationReport:
    table = compute_tables(X, config)
    locs = qm_location(X, table)
    jc = None
    if len(locs) == 1 and locs[0][1] == locs[0][0] - 1:
        jc = locs[0][0]
    assembled = assemble_jacobian_resolution(X, table)
    match_c = jc is not None and compare_resolutions(
        assembled, predicted_resolution(X.lie_type, "jacobian", jc)).empty
    match_i = compare_resolutions(assembled, predicted_resolution(X.lie_type, "jacobian")).empty
    return ArbitrationReport(X.lie_type, locs, jc, X.j,
                             CATALOG_PHAT_ALT.get(str(X.lie_type)), match_c, match_i)


# ------------------------------------------------------------------ minimality


@dataclass
class MinimalityReport:
    lie_type: LieType
    adjacent_pairs: list[tuple[int, int, Weight]]  # (u, twist, rep) shared by u and u-1
    cancellable: list[tuple[int, int, Weight, str]]

    @property
    def ok(self) -> bool:
        return not self.cancellable


def minimality_witness(X: AdjointVariety, table: CohomTable | None = None) -> MinimalityReport:
    """Look for constant pairs between adjacent terms that a nonzero map could cancel.

    A shared (twist, rep) between u and u-1 always comes from one bundle
    Omega-hat^p (x) L, because the twist is -p.  Such a pair could only
    cancel through the connecting map of that extension.  For trivial
    classes the map is the hyperplane class on cokernels of the hyperplane
    class, so it vanishes.  A pair with any other provenance is reported as
    cancellable.
    """
    table = table or compute_tables(X)
    prov: Provenance = {}
    res = assemble_jacobian_resolution(X, table, prov)
    d = res.as_dict()
    pairs, bad = [], []
    for (u, tw, rep) in sorted(d):
        if (u - 1, tw, rep) not in d:
            continue
        pairs.append((u, tw, rep))
        src_hi = prov[(u, tw, rep)]
        src_lo = prov[(u - 1, tw, rep)]
        ps = {s[0] for s in src_hi + src_lo}
        reason = None
        if len(ps) != 1:
            reason = f"pieces from different bundles {sorted(ps)}"
        elif any(rep):
            reason = "non-trivial representation in adjacent degrees"
        elif not all(piece == "sub" for _, _, piece in src_hi) or \
                not all(piece == "quot" for _, _, piece in src_lo):
            reason = f"unexpected provenance {src_hi} / {src_lo}"
        if reason:
            bad.append((u, tw, rep, reason))
    return MinimalityReport(X.lie_type, pairs, bad)


def literal_constant_pairs(table: BettiTable) -> list[tuple[int, int, Weight]]:
    """Shared (twist, rep) between adjacent positions, with no provenance filtering."""
    d = table.as_dict()
    return [(u, tw, rep) for (u, tw, rep) in sorted(d) if (u - 1, tw, rep) in d]


def resolve(t: LieType | str, which: str, config: ComputeConfig | None = None) -> BettiTable:
    X = adjoint_catalog(t)
    config = config or ComputeConfig()
    check_computable(X, config)
    if which == "structure":
        return assemble_structure_resolution(X)
    return assemble_jacobian_resolution(X, compute_tables(X, config))


def types_in_matrix() -> list[str]:
    return ["A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6"]


def fast_path_mismatches(t: LieType | str) -> list[str]:
    """Compare the closed-form wedge decompositions with generic peeling, all p, both twists.

    Supported for types A_n (n >= 2), B_n (n >= 3) and D_n (n >= 4).
    """
    from collections import Counter

    from .errors import UnsupportedShape
    from .fastpaths import (bd_wedge_summands, so_bracket_to_weight, typeA_bracket_to_weight,
                            typeA_wedge_summands)

    t = LieType.parse(t)
    if not ((t.series == "A" and t.rank >= 2) or (t.series == "B" and t.rank >= 3)
            or (t.series == "D" and t.rank >= 4)):
        raise UnsupportedShape(f"no closed-form wedge decomposition for {t}")
    X = adjoint_catalog(t)
    rs = X.rs
    theta = X.L_weight
    out = []
    for p, ms in enumerate(exterior_powers(dict(X.Fdual_fiber))):
        generic = Counter(peel_levi(rs, X.parabolic_nodes, ms).as_dict())
        twisted = Counter({tuple(a + b for a, b in zip(w, theta)): c for w, c in generic.items()})
        if t.series == "A":
            fast0 = Counter(typeA_bracket_to_weight(b) for b in typeA_wedge_summands(t.rank, p + 1, 0))
            fast1 = Counter(typeA_bracket_to_weight(b) for b in typeA_wedge_summands(t.rank, p, 1))
        else:
            fast0 = Counter(so_bracket_to_weight(t.series, b) for b in bd_wedge_summands(t.series, t.rank, p, 0))
            fast1 = Counter(so_bracket_to_weight(t.series, b) for b in bd_wedge_summands(t.series, t.rank, p, 1))
        if generic != fast0:
            out.append(f"{t} p={p} twist 0: peel {sorted(generic.items())} vs closed form {sorted(fast0.items())}")
        if twisted != fast1:
            out.append(f"{t} p={p} twist 1: peel {sorted(twisted.items())} vs closed form {sorted(fast1.items())}")
    return out
