import pytest

from adjres.errors import EmptyParabolic, IndexOutOfRange
from adjres.rootcore import build_root_system
from adjres.weyl import coset_betti, dominant_conjugate, dot_normalize


def test_dot_normalize_a1():
    rs = build_root_system("A1")
    r = dot_normalize(rs, (-2,))
    assert r.regular and r.dominant_weight == (0,) and r.length == 1
    assert not dot_normalize(rs, (-1,)).regular


@pytest.mark.parametrize("t", ["A3", "B3", "G2", "F4"])
def test_dominant_is_fixed(t):
    rs = build_root_system(t)
    lam = tuple(range(rs.rank))
    r = dot_normalize(rs, lam)
    assert r.dominant_weight == lam and r.length == 0


def test_longest_element_length():
    rs = build_root_system("B3")
    r = dot_normalize(rs, tuple(-2 for _ in range(3)))  # -2rho + rho = -rho is regular antidominant
    assert r.regular and r.length == len(rs.positive_roots) and r.dominant_weight == (0, 0, 0)


def test_dominant_conjugate():
    rs = build_root_system("A2")
    assert dominant_conjugate((-1, 0), rs.cartan) == (0, 1)


@pytest.mark.parametrize("t,nodes,b", [
    ("G2", {1}, (1, 1, 1, 1, 1, 1)),
    ("B3", {2}, (1, 1, 2, 2, 2, 2, 1, 1)),
    ("A1", {1}, (1, 1)),
])
def test_coset_betti(t, nodes, b):
    assert coset_betti(build_root_system(t), nodes).b == b


def test_e6_adjoint_betti():
    b = coset_betti(build_root_system("E6"), {2})
    assert b.total == 72 and len(b) == 22
    jumps = [p + 1 for p in range(11) if b[p] - b[p - 1] > 0 for _ in range(b[p] - b[p - 1])]
    assert jumps == [1, 4, 5, 7, 8, 11]


def test_coset_betti_errors():
    rs = build_root_system("A2")
    with pytest.raises(EmptyParabolic):
        coset_betti(rs, set())
    with pytest.raises(IndexOutOfRange):
        coset_betti(rs, {3})


def test_betti_indexing_outside_range_is_zero():
    b = coset_betti(build_root_system("A1"), {1})
    assert b[-1] == 0 and b[5] == 0
