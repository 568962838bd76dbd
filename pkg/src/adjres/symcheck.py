"""Exact symbolic witnesses built from explicit matrix models.

Covers sl_n, sp_2n and so_m at small size.  Everything is graded linear
algebra over the rationals.  Hilbert functions come from ranks of sparse
integer matrices, so no Groebner bases are needed.

Coordinates.  The algebra has a basis b_1..b_N of torus weight vectors and
x_1..x_N are the coordinate functions, so the generic element is
x = sum x_i b_i.  The Killing Gram matrix K is kept explicitly; the basis is
orthogonal up to scalars only on weight pairs, never normalised.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Iterable, Sequence

from .errors import DegreeBoundExceeded, RankOutOfRange, SizeOutOfRange, UnsupportedShape
from .exact import mat_inverse, sparse_rank
from .rootcore import LieType, build_root_system

Monomial = tuple[int, ...]

SIZE_BOUNDS = {"sl": (2, 5), "sp": (4, 6), "so": (5, 7)}
MAX_KERNEL_UNKNOWNS = 60_000


# ---------------------------------------------------------------- polynomials


class Poly:
    """Sparse polynomial in a fixed number of variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, nvars: int, i: int, coef=1) -> "Poly":
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): Fraction(coef)})

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {m: c * v for m, v in self.terms.items()}) if c else Poly(self.nvars)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.nvars, out)

    def diff(self, i: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                k = list(m)
                k[i] -= 1
                out[tuple(k)] = c * m[i]
        return Poly(self.nvars, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"{self.terms[m]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _poly_sum(polys: Iterable[Poly], nvars: int) -> Poly:
    return reduce(lambda a, b: a + b, polys, Poly(nvars))


def _det(m: list[list[Poly]]) -> Poly:
    n = len(m)
    if n == 1:
        return m[0][0]
    nv = m[0][0].nvars
    out = Poly(nv)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


# ---------------------------------------------------------------- algebras

Matrix = tuple[tuple[Fraction, ...], ...]


def _zeros(m: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * m for _ in range(m)]


def _matmul(a, b):
    m = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(m) if a[i][k]), Fraction(0)) for j in range(m)]
            for i in range(m)]


def _bracket(a, b):
    ab, ba = _matmul(a, b), _matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


@dataclass(frozen=True)
class MatrixLieAlgebra:
    kind: str
    size: int
    lie_type: LieType
    basis: tuple[Matrix, ...]
    weights: tuple[tuple[int, ...], ...]  # torus weight of each basis vector
    structure: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]  # [a][b] -> sparse c_ab^k
    killing_gram: Matrix

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket_coords(self, a: int, b: int) -> dict[int, Fraction]:
        return dict(self.structure[a][b])


def _form_matrix(kind: str, m: int) -> list[list[Fraction]]:
    """Antidiagonal bilinear form: symmetric for so, alternating for sp."""
    om = _zeros(m)
    for i in range(m):
        sign = -1 if kind == "sp" and i >= m // 2 else 1
        om[i][m - 1 - i] = Fraction(sign)
    return om


def _raw_basis(kind: str, m: int) -> list[list[list[Fraction]]]:
    def unit(i, j):
        e = _zeros(m)
        e[i][j] = Fraction(1)
        return e

    if kind == "sl":
        out = [unit(i, j) for i in range(m) for j in range(m) if i != j]
        for i in range(m - 1):
            h = unit(i, i)
            h[i + 1][i + 1] = Fraction(-1)
            out.append(h)
        return out
    # X = Y - Omega^{-1} Y^T Omega projects onto the algebra preserving Omega.
    om = _form_matrix(kind, m)
    om_inv = mat_inverse(om)
    out, seen = [], set()
    for i in range(m):
        for j in range(m):
            y = unit(i, j)
            yt = [list(r) for r in zip(*y)]
            corr = _matmul(_matmul(om_inv, yt), om)
            x = [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(y, corr)]
            support = tuple((r, c) for r in range(m) for c in range(m) if x[r][c])
            if not support:
                continue
            lead = x[support[0][0]][support[0][1]]
            key = tuple((r, c, x[r][c] / lead) for r, c in support)
            if key in seen:
                continue
            seen.add(key)
            out.append(x)
    # E_ii and E_{i'i'} project to the same element up to sign; the key dedupes them
    return out


def _weight_of(kind: str, x, m: int) -> tuple[int, ...]:
    """Torus weight of a basis matrix.

    For sl it is e_r - e_c.  For sp and so the diagonal torus has entries
    (t_1, .., t_k, [0,] -t_k, .., -t_1), so index i and m-1-i carry opposite
    characters and the weight is folded onto k = m // 2 coordinates.
    """
    w = [0] * m
    for r in range(m):
        for c in range(m):
            if x[r][c] and r != c:
                w[r] += 1
                w[c] -= 1
                break
        else:
            continue
        break
    if kind == "sl":
        return tuple(w)
    k = m // 2
    return tuple(w[i] - w[m - 1 - i] for i in range(k))


def _lie_type_of(kind: str, m: int) -> LieType:
    if kind == "sl":
        return LieType("A", m - 1)
    if kind == "sp":
        return LieType("C", m // 2)
    return LieType("B", m // 2) if m % 2 else LieType("D", m // 2)


def build_algebra(kind: str, size: int) -> MatrixLieAlgebra:
    """Matrix model of sl_size, sp_size or so_size (antidiagonal forms)."""
    if kind not in SIZE_BOUNDS:
        raise UnsupportedShape(f"unknown kind {kind!r}; use sl, sp or so")
    lo, hi = SIZE_BOUNDS[kind]
    if not lo <= size <= hi or (kind == "sp" and size % 2):
        raise SizeOutOfRange(f"{kind}_{size} outside the supported range {lo}..{hi}")
    m = size
    basis = _raw_basis(kind, m)
    lt = _lie_type_of(kind, m)
    rs = build_root_system(lt)
    if len(basis) != rs.rank + 2 * len(rs.positive_roots):
        raise AssertionError(f"{kind}_{m}: basis of size {len(basis)} disagrees with {lt}")
    n = len(basis)
    # Coordinates by a left inverse: solve (B^T B) c = B^T vec(Y).
    vecs = [[x[r][c] for r in range(m) for c in range(m)] for x in basis]
    gram = [[sum(a * b for a, b in zip(u, v)) for v in vecs] for u in vecs]
    gram_inv = mat_inverse(gram)

    def coords(y) -> list[Fraction]:
        flat = [y[r][c] for r in range(m) for c in range(m)]
        rhs = [sum(a * b for a, b in zip(v, flat) if a) for v in vecs]
        c = [sum(gram_inv[i][k] * rhs[k] for k in range(n)) for i in range(n)]
        back = [sum(c[i] * vecs[i][k] for i in range(n)) for k in range(m * m)]
        if back != flat:
            raise AssertionError("bracket left the span of the basis")
        return c

    structure = []
    for a in range(n):
        row = []
        for b in range(n):
            c = coords(_bracket(basis[a], basis[b]))
            row.append(tuple((k, v) for k, v in enumerate(c) if v))
        structure.append(tuple(row))
    # Killing form tr(ad_a ad_b); (ad_a)_{k,b} = c_ab^k.
    ad = []
    for a in range(n):
        mat = _zeros(n)
        for b in range(n):
            for k, v in structure[a][b]:
                mat[k][b] = v
        ad.append(mat)
    killing = [[sum(ad[a][i][k] * ad[b][k][i] for i in range(n) for k in range(n) if ad[a][i][k])
                for b in range(n)] for a in range(n)]
    mat_inverse(killing)  # raises if degenerate
    return MatrixLieAlgebra(
        kind, m, lt,
        tuple(tuple(tuple(r) for r in x) for x in basis),
        tuple(_weight_of(kind, x, m) for x in basis),
        tuple(structure),
        tuple(tuple(r) for r in killing),
    )


def jacobi_holds(alg: MatrixLieAlgebra) -> bool:
    """Exact Jacobi identity on structure constants."""
    n = alg.dim

    def br(u: dict[int, Fraction], b: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, ca in u.items():
            for k, v in alg.structure[a][b]:
                out[k] = out.get(k, 0) + ca * v
        return {k: v for k, v in out.items() if v}

    for a in range(n):
        for b in range(n):
            for c in range(n):
                total: dict[int, Fraction] = {}
                for u in (br(alg.bracket_coords(a, b), c), br(alg.bracket_coords(b, c), a),
                          br(alg.bracket_coords(c, a), b)):
                    for k, v in u.items():
                        total[k] = total.get(k, 0) + v
                if any(total.values()):
                    return False
    return True


# ---------------------------------------------------------------- adjoint map


@dataclass(frozen=True)
class AdMatrix:
    """M(x) with M(x) v = coordinates of [x, v]; entries are linear forms {i: coef}."""

    entries: tuple[tuple[tuple[tuple[int, Fraction], ...], ...], ...]
    dim: int

    def form(self, k: int, j: int) -> dict[int, Fraction]:
        return dict(self.entries[k][j])

    def poly(self, k: int, j: int) -> Poly:
        return _poly_sum((Poly.var(self.dim, i, c) for i, c in self.entries[k][j]), self.dim)

    def at(self, point: Sequence) -> list[list[Fraction]]:
        return [[sum((Fraction(point[i]) * c for i, c in self.entries[k][j]), Fraction(0))
                 for j in range(self.dim)] for k in range(self.dim)]


def ad_matrix(alg: MatrixLieAlgebra) -> AdMatrix:
    n = alg.dim
    ent = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, v in alg.structure[i][j]:
                ent[k][j][i] = ent[k][j].get(i, 0) + v
    return AdMatrix(tuple(tuple(tuple(sorted((i, c) for i, c in e.items() if c)) for e in row)
                          for row in ent), n)


def gram_skew_holds(alg: MatrixLieAlgebra, M: AdMatrix | None = None) -> bool:
    """K M(x) + M(x)^T K = 0, checked coefficient by coefficient in x."""
    M = M or ad_matrix(alg)
    n, K = alg.dim, alg.killing_gram
    for i in range(n):
        Mi = [[M.form(k, j).get(i, Fraction(0)) for j in range(n)] for k in range(n)]
        for a in range(n):
            for b in range(n):
                s = sum(K[a][k] * Mi[k][b] + Mi[k][a] * K[k][b] for k in range(n))
                if s:
                    return False
    return True


def matrix_rank(rows: list[list[Fraction]]) -> int:
    ints = []
    for row in rows:
        den = lcm(*(x.denominator for x in row)) if row else 1
        ints.append({c: int(x * den) for c, x in enumerate(row) if x})
    return sparse_rank(ints)


# ---------------------------------------------------------------- invariants


def generic_element(alg: MatrixLieAlgebra) -> list[list[Poly]]:
    n, m = alg.dim, alg.size
    out = [[Poly(n) for _ in range(m)] for _ in range(m)]
    for i, b in enumerate(alg.basis):
        for r in range(m):
            for c in range(m):
                if b[r][c]:
                    out[r][c] = out[r][c] + Poly.var(n, i, b[r][c])
    return out


def _poly_matmul(a, b):
    m, n = len(a), a[0][0].nvars
    return [[_poly_sum((a[i][k] * b[k][j] for k in range(m) if a[i][k].terms and b[k][j].terms), n)
             for j in range(m)] for i in range(m)]


def invariant_degrees(alg: MatrixLieAlgebra) -> list[int]:
    if alg.kind == "sl":
        return list(range(2, alg.size + 1))
    if alg.kind == "so" and alg.size % 2 == 0:
        raise UnsupportedShape("so of even size needs a Pfaffian invariant, which is not implemented")
    return [2 * k for k in range(1, alg.size // 2 + 1)]


def basic_invariants(alg: MatrixLieAlgebra) -> list[Poly]:
    """tr(x^d) for the degrees d = e_i + 1."""
    degs = invariant_degrees(alg)
    X = generic_element(alg)
    out, power, d = [], X, 1
    for target in degs:
        while d < target:
            power = _poly_matmul(power, X)
            d += 1
        out.append(_poly_sum((power[i][i] for i in range(alg.size)), alg.dim))
    return out


def gradient(F: Poly) -> list[Poly]:
    return [F.diff(i) for i in range(F.nvars)]


def check_nu_in_kernel(alg: MatrixLieAlgebra, polys: Sequence[Poly] | None = None) -> bool:
    """M(x) K^{-1} grad F = 0 for every F (the invariants by default)."""
    polys = basic_invariants(alg) if polys is None else polys
    M = ad_matrix(alg)
    n = alg.dim
    kinv = mat_inverse(alg.killing_gram)
    Mp = [[M.poly(k, j) for j in range(n)] for k in range(n)]
    for F in polys:
        g = gradient(F)
        v = [_poly_sum((g[i].scale(kinv[j][i]) for i in range(n) if kinv[j][i]), n) for j in range(n)]
        for k in range(n):
            if not _poly_sum((Mp[k][j] * v[j] for j in range(n) if Mp[k][j].terms), n).is_zero():
                return False
    return True


# ---------------------------------------------------------------- graded kernel


def dim_U(nvars: int, t: int) -> int:
    return comb(t + nvars - 1, nvars - 1) if t >= 0 else 0


def predicted_kernel_dim(alg: MatrixLieAlgebra, t: int) -> int:
    rs = build_root_system(alg.lie_type)
    return sum(dim_U(alg.dim, t - 1 - e) for e in rs.exponents)


def _monomials(nvars: int, deg: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def _kernel_dim_at(alg: MatrixLieAlgebra, t: int) -> int:
    """dim ker of g (x) U_{t-1} -> g (x) U_t, v(x) -> [x, v(x)]."""
    if t <= 0:
        return 0
    n = alg.dim
    M = ad_matrix(alg)
    den = lcm(*(c.denominator for row in M.entries for e in row for _, c in e)) or 1
    # weight of the coordinate x_i is minus the weight of b_i
    blocks: dict[tuple, list[dict]] = {}
    target_index: dict[tuple, int] = {}
    for mono in _monomials(n, t - 1):
        mw = [0] * len(alg.weights[0])
        for i, e in enumerate(mono):
            if e:
                for r, w in enumerate(alg.weights[i]):
                    mw[r] -= e * w
        for j in range(n):
            key = tuple(a + b for a, b in zip(alg.weights[j], mw))
            row: dict[int, int] = {}
            for k in range(n):
                for i, c in M.entries[k][j]:
                    tm = list(mono)
                    tm[i] += 1
                    col = target_index.setdefault((k, tuple(tm)), len(target_index))
                    row[col] = row.get(col, 0) + int(c * den)
            blocks.setdefault(key, []).append(row)
    rank = sum(sparse_rank(rows) for rows in blocks.values())
    return n * dim_U(n, t - 1) - rank


def graded_kernel_dims(alg: MatrixLieAlgebra, t_max: int, threads: int = 1) -> list[int]:
    """Kernel dimensions of the bracket map for t = 0..t_max."""
    if alg.dim * dim_U(alg.dim, t_max - 1) > MAX_KERNEL_UNKNOWNS:
        raise DegreeBoundExceeded(
            f"t_max={t_max} needs {alg.dim * dim_U(alg.dim, t_max - 1)} unknowns "
            f"(bound {MAX_KERNEL_UNKNOWNS})")
    ts = list(range(t_max + 1))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_kernel_dim_at, [alg] * len(ts), ts))
    return [_kernel_dim_at(alg, t) for t in ts]


@dataclass
class HilbertCheck:
    t: int
    image: int
    log_derivations: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.log_derivations == self.predicted


def image_hilbert_check(alg: MatrixLieAlgebra, t_max: int) -> list[HilbertCheck]:
    """Degree-wise Hilbert function of im(ad) plus the free part on the invariants.

    The prediction is read off the Jacobian Betti table of the matching
    adjoint variety: the free module in position -1 minus the one in
    position -2.
    """
    from .adjointres import predicted_resolution
    from .repcalc import weyl_dim

    table = predicted_resolution(alg.lie_type, "jacobian")
    rs = build_root_system(alg.lie_type)
    n = alg.dim
    kers = graded_kernel_dims(alg, t_max)
    out = []
    for t in range(t_max + 1):
        image = n * dim_U(n, t - 1) - kers[t]
        logder = image + sum(dim_U(n, t - e) for e in rs.exponents)
        pred = 0
        for (u, tw, rep), m in table.as_dict().items():
            if u == -1:
                pred += m * weyl_dim(rs, rep) * dim_U(n, t + tw)
            elif u == -2:
                pred -= m * weyl_dim(rs, rep) * dim_U(n, t + tw)
        out.append(HilbertCheck(t, image, logder, pred))
    return out


# ---------------------------------------------------------------- Saito matrix


@dataclass
class SaitoReport:
    lie_type: LieType
    determinant: Poly
    root_product: Poly
    quotient: Fraction | None

    @property
    def ok(self) -> bool:
        return self.quotient is not None and self.quotient != 0


def _cartan_element(alg: MatrixLieAlgebra, r: int) -> tuple[list[Poly], list[Poly]]:
    """Diagonal of a generic Cartan element, and the coordinates x_1..x_m used for roots."""
    m = alg.size
    xs = [Poly.var(r, i) for i in range(r)]
    if alg.kind == "sl":
        last = -_poly_sum(xs, r)
        full = xs + [last]
        return full, full
    zero = Poly(r)
    mid = [zero] if m % 2 else []
    return xs + mid + [-x for x in reversed(xs)], xs


def _root_forms(t: LieType, coords: list[Poly]) -> list[Poly]:
    n = t.rank
    simple = [coords[i] - coords[i + 1] for i in range(n - 1)] if t.series != "A" else \
        [coords[i] - coords[i + 1] for i in range(n)]
    if t.series == "B":
        simple.append(coords[n - 1])
    elif t.series == "C":
        simple.append(coords[n - 1].scale(2))
    rs = build_root_system(t)
    out = []
    for root in rs.positive_roots:
        out.append(_poly_sum((simple[i].scale(c) for i, c in enumerate(root.simple_coords) if c),
                             simple[0].nvars))
    return out


def saito_determinant_check(t: LieType | str) -> SaitoReport:
    """Jacobian determinant of the restricted invariants against the product of positive roots."""
    t = LieType.parse(t)
    if t.series not in "ABC" or t.rank > 3 or (t.series == "C" and t.rank < 2) \
            or (t.series == "B" and t.rank < 2):
        raise RankOutOfRange(f"Saito check covers A1-A3, B2-B3, C2-C3; got {t}")
    kind, size = {"A": ("sl", t.rank + 1), "B": ("so", 2 * t.rank + 1), "C": ("sp", 2 * t.rank)}[t.series]
    alg = build_algebra(kind, size)
    r = t.rank
    diag, coords = _cartan_element(alg, r)
    fs = []
    for d in invariant_degrees(alg):
        fs.append(_poly_sum((reduce(lambda a, b: a * b, [x] * d) for x in diag), r))
    jac = [[f.diff(i) for i in range(r)] for f in fs]
    det = _det(jac)
    prod = reduce(lambda a, b: a * b, _root_forms(t, coords))
    quotient = None
    if prod.terms and det.terms:
        mono = max(prod.terms)
        q = det.terms.get(mono, Fraction(0)) / prod.terms[mono]
        if q and det == prod.scale(q):
            quotient = q
    return SaitoReport(t, det, prod, quotient)
