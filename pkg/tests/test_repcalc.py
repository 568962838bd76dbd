from collections import Counter

import pytest

from adjres.adjointres import adjoint_catalog
from adjres.errors import NegativeMultiplicity, NotDominant, NotPDominant, POutOfRange
from adjres.repcalc import (exterior_power, exterior_powers, freudenthal, levi_dim,
                            levi_irrep_weights, peel_levi, reconstruct, shift, weyl_dim)
from adjres.rootcore import build_root_system


def test_weyl_dim():
    assert weyl_dim(build_root_system("A2"), (1, 1)) == 8
    assert weyl_dim(build_root_system("G2"), (0, 1)) == 7
    assert weyl_dim(build_root_system("E8"), (0,) * 8) == 1
    with pytest.raises(NotDominant):
        weyl_dim(build_root_system("A2"), (-1, 0))


def test_freudenthal_small():
    assert freudenthal(build_root_system("A1"), (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    assert freudenthal(build_root_system("A2"), (1, 1))[(0, 0)] == 2


def test_freudenthal_f4_26():
    rs = build_root_system("F4")
    f = freudenthal(rs, (0, 0, 0, 1))
    assert sum(f.values()) == 26 == weyl_dim(rs, (0, 0, 0, 1))
    assert f[(0, 0, 0, 0)] == 2


def test_levi_irrep_b3_fdual():
    rs = build_root_system("B3")
    ms = levi_irrep_weights(rs, {2}, (1, -2, 2))
    assert sum(ms.values()) == 6 == levi_dim(rs, {2}, (1, -2, 2))


def test_levi_irrep_trivial_cases():
    rs = build_root_system("A2")
    assert levi_irrep_weights(rs, {1}, (0, 0)) == {(0, 0): 1}
    assert levi_irrep_weights(rs, {1, 2}, (3, -5)) == {(3, -5): 1}
    with pytest.raises(NotPDominant):
        levi_irrep_weights(rs, {1}, (0, -1))


def test_exterior_power():
    adj = freudenthal(build_root_system("A1"), (2,))
    assert exterior_power(adj, 2) == {(2,): 1, (0,): 1, (-2,): 1}
    assert exterior_power(adj, 0) == {(0,): 1}
    six = {(i,): 1 for i in range(6)}
    assert sum(exterior_power(six, 3).values()) == 20
    with pytest.raises(POutOfRange):
        exterior_power(six, 7)


def test_exterior_powers_matches_single():
    ms = freudenthal(build_root_system("B2"), (1, 0))
    allp = exterior_powers(ms)
    for p in range(len(allp)):
        assert allp[p] == exterior_power(ms, p)


def test_peel_irreducible_input():
    rs = build_root_system("B3")
    ms = levi_irrep_weights(rs, {2}, (1, -2, 2))
    assert peel_levi(rs, {2}, ms).summands == (((1, -2, 2), 1),)
    assert len(peel_levi(rs, {2}, {})) == 0


def test_peel_type_a_fdual_two_pieces():
    X = adjoint_catalog("A4")
    dec = peel_levi(X.rs, X.parabolic_nodes, dict(X.Fdual_fiber))
    assert sorted(w for w, _ in dec) == sorted(X.Fdual_summands)
    assert len(dec) == 2
    assert sum(levi_dim(X.rs, X.parabolic_nodes, w) for w, _ in dec) == X.dim_X - 1


def test_peel_reconstruct_roundtrip():
    X = adjoint_catalog("G2")
    ms = exterior_power(dict(X.Fdual_fiber), 2)
    dec = peel_levi(X.rs, X.parabolic_nodes, ms)
    assert reconstruct(X.rs, X.parabolic_nodes, dec) == ms


def test_peel_rejects_non_representations():
    rs = build_root_system("A2")
    with pytest.raises(NegativeMultiplicity):
        peel_levi(rs, {2}, {(-1, 0): 1})  # negative on the Levi node
    with pytest.raises(NegativeMultiplicity):
        peel_levi(rs, {2}, {(1, 0): 1})  # missing the rest of the 2-dim Levi irrep


def test_shift():
    assert shift({(0, 1): 2}, (1, 1)) == {(1, 2): 2}
    assert Counter(shift({}, (1,))) == Counter()
