"""Randomised exact identities (hypothesis)."""
from math import comb

from hypothesis import given, settings, strategies as st

from adjres.adjointres import adjoint_catalog
from adjres.repcalc import (exterior_power, freudenthal, levi_irrep_weights, peel_levi,
                            reconstruct, weyl_dim)
from adjres.rootcore import build_root_system
from adjres.weyl import dot_normalize

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"]


def dominant(rank, top=2):
    return st.lists(st.integers(0, top), min_size=rank, max_size=rank).map(tuple)


@st.composite
def type_and_weight(draw, types=SMALL, top=2):
    t = draw(st.sampled_from(types))
    rs = build_root_system(t)
    return rs, draw(dominant(rs.rank, top if rs.rank < 4 else 1))


@settings(max_examples=60, deadline=None)
@given(type_and_weight())
def test_freudenthal_total_is_weyl_dim(data):
    rs, lam = data
    assert sum(freudenthal(rs, lam).values()) == weyl_dim(rs, lam)


@settings(max_examples=60, deadline=None)
@given(type_and_weight(), st.data())
def test_freudenthal_weyl_invariant(data, draw):
    rs, lam = data
    ms = freudenthal(rs, lam)
    i = draw.draw(st.integers(0, rs.rank - 1))
    from adjres.rootcore import reflect
    assert all(ms[reflect(w, i, rs.cartan)] == m for w, m in ms.items())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=8),
       st.integers(0, 8))
def test_exterior_power_total_is_binomial(weights, p):
    ms = {}
    for w in weights:
        ms[w] = ms.get(w, 0) + 1
    n = len(weights)
    if p <= n:
        assert sum(exterior_power(ms, p).values()) == comb(n, p)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4"]), st.data())
def test_peel_reconstruct(t, data):
    X = adjoint_catalog(t)
    p = data.draw(st.integers(0, X.f_rank))
    ms = exterior_power(dict(X.Fdual_fiber), p)
    dec = peel_levi(X.rs, X.parabolic_nodes, ms)
    assert reconstruct(X.rs, X.parabolic_nodes, dec) == ms


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A2", "B2", "C3", "G2"]), st.data())
def test_peel_sum_of_irreducibles(t, data):
    X = adjoint_catalog(t)
    rs, nodes = X.rs, X.parabolic_nodes
    levi = [i for i in range(rs.rank) if i + 1 not in nodes]
    picks = data.draw(st.lists(st.lists(st.integers(-2, 2), min_size=rs.rank, max_size=rs.rank),
                               min_size=1, max_size=3))
    ms, want = {}, {}
    for w in picks:
        w = tuple(abs(x) if i in levi else x for i, x in enumerate(w))
        want[w] = want.get(w, 0) + 1
        for v, m in levi_irrep_weights(rs, nodes, w).items():
            ms[v] = ms.get(v, 0) + m
    assert peel_levi(rs, nodes, ms).as_dict() == want


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL + ["E6"]), st.data())
def test_dot_normalize_idempotent(t, data):
    rs = build_root_system(t)
    lam = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    r = dot_normalize(rs, lam)
    if r.regular:
        again = dot_normalize(rs, r.dominant_weight)
        assert again.regular and again.length == 0 and again.dominant_weight == r.dominant_weight
        assert 0 <= r.length <= len(rs.positive_roots)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "G2", "F4"]), st.data())
def test_simple_reflection_changes_length_by_one(t, data):
    from adjres.rootcore import reflect
    rs = build_root_system(t)
    lam = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=rs.rank, max_size=rs.rank)))
    r = dot_normalize(rs, lam)
    if not r.regular:
        return
    i = data.draw(st.integers(0, rs.rank - 1))
    shifted = reflect(tuple(x + 1 for x in lam), i, rs.cartan)
    r2 = dot_normalize(rs, tuple(x - 1 for x in shifted))
    assert r2.regular and r2.dominant_weight == r.dominant_weight
    assert abs(r2.length - r.length) == 1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A3", "B3", "G2", "C2"]), st.data())
def test_wedge_duality(t, data):
    X = adjoint_catalog(t)
    fib = dict(X.Fdual_fiber)
    n = sum(fib.values())
    top = tuple(sum(m * w[i] for w, m in fib.items()) for i in range(X.rs.rank))
    p = data.draw(st.integers(0, n))
    low = exterior_power(fib, p)
    high = exterior_power(fib, n - p)
    # wedge^(n-p) = (wedge^p)^vee (x) det
    assert high == {tuple(a - b for a, b in zip(top, w)): m for w, m in low.items()}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_euler_sign_rule_on_borel(t, data):
    from adjres.bbw import BundleDescription, bbw_cohomology, bundle_cohomology
    from adjres.rootcore import reflect
    rs = build_root_system(t)
    borel = set(range(1, rs.rank + 1))
    lam = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(0, rs.rank - 1))
    other = tuple(x - 1 for x in reflect(tuple(x + 1 for x in lam), i, rs.cartan))
    chi = bbw_cohomology(rs, borel, lam).euler_characteristic(rs)
    assert chi == -bbw_cohomology(rs, borel, other).euler_characteristic(rs)
    both = bundle_cohomology(rs, BundleDescription(frozenset(borel), ((lam, 1), (other, 1))))
    assert both.euler_characteristic(rs) == 0
