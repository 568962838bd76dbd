from fractions import Fraction

import pytest

from adjres.adjointres import fast_path_mismatches
from adjres.bbw import BundleDescription, bundle_cohomology
from adjres.errors import IndexOutOfRange, UnsupportedShape
from adjres.fastpaths import (bd_wedge_summands, gl_to_o_branching, o_to_so_branching,
                              parse_bracket, render_so, render_typeA, so_bracket_to_weight,
                              typeA_bracket_to_weight, typeA_wedge_summands,
                              weight_to_so_bracket, weight_to_typeA_bracket)
from adjres.rootcore import build_root_system


def test_type_a_bracket_roundtrip():
    w = (2, -1, 0, 3)
    assert typeA_bracket_to_weight(weight_to_typeA_bracket(w)) == w
    assert render_typeA((1, 0, -1)) == "[1; 0; -1]"


@pytest.mark.parametrize("series,w", [("B", (1, -2, 2)), ("B", (0, 0, 1)), ("D", (1, 0, 1, 1)),
                                      ("D", (0, -1, 0, 3))])
def test_so_bracket_roundtrip(series, w):
    assert so_bracket_to_weight(series, weight_to_so_bracket(series, w)) == w


def test_so_bracket_half_integers():
    assert render_so(weight_to_so_bracket("B", (0, 0, 1))) == "[1/2,1/2; 1/2]"
    assert parse_bracket("[1,-1; 1/2]") == ([Fraction(1), Fraction(-1)], [Fraction(1, 2)])
    with pytest.raises(UnsupportedShape):
        so_bracket_to_weight("B", [Fraction(1, 2), 0, 0])


def test_type_a_line_bundle():
    assert typeA_wedge_summands(2, 0, 1) == [(1, 0, -1)]


def test_type_a_indexing():
    # twist 0 is shifted by one: p=1 is wedge^0, p=2 is F^vee itself
    assert typeA_wedge_summands(3, 1, 0) == [(0, 0, 0, 0)]
    assert len(typeA_wedge_summands(3, 2, 0)) == 2


def test_type_a_wedge2_twisted_has_one_trivial_section():
    rs = build_root_system("A2")
    summands = tuple((typeA_bracket_to_weight(b), 1) for b in typeA_wedge_summands(2, 2, 1))
    res = bundle_cohomology(rs, BundleDescription(frozenset({1, 2}), summands))
    assert res.groups == {0: {(0, 0): 1}}


def test_type_a_ranges():
    with pytest.raises(IndexOutOfRange):
        typeA_wedge_summands(2, 3, 1)
    with pytest.raises(IndexOutOfRange):
        typeA_wedge_summands(2, 0, 0)


def test_gl_to_o():
    assert gl_to_o_branching([1], 9) == [(1, 0, 0, 0, 0)]
    assert gl_to_o_branching([2], 9) == [(2, 0, 0, 0, 0), (0, 0, 0, 0, 0)]
    assert gl_to_o_branching([2, 2, 1], 7) == [(1, 0, 0)]
    with pytest.raises(UnsupportedShape):
        gl_to_o_branching([3], 9)


def test_o_to_so():
    assert o_to_so_branching([1, 0, 0], 11) == [(1, 0, 0)]
    assert o_to_so_branching([1, 1], 8) == [(1, 1), (1, -1)]
    assert o_to_so_branching([], 9) == [(0, 0)]


def test_bd_zeroth_power():
    assert bd_wedge_summands("B", 3, 0, 0) == [(0, 0, 0)]
    assert bd_wedge_summands("D", 4, 0, 1) == [(1, 1, 0, 0)]


@pytest.mark.parametrize("t", ["A2", "A3", "A4", "B3", "B4", "D4", "D5"])
def test_closed_forms_match_peel(t):
    assert fast_path_mismatches(t) == []


def test_no_closed_form_for_exceptional():
    with pytest.raises(UnsupportedShape):
        fast_path_mismatches("G2")
