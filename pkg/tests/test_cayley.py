from fractions import Fraction

import pytest

from polyadj.adjunction import adjunction_report
from polyadj.cayley import (
    CayleySpec,
    cayley_construct,
    cayley_smooth,
    closed_form_invariants,
    is_strict,
    recognize_cayley,
)
from polyadj.errors import DimensionMismatch, NotStrict
from polyadj.polytope import cube, hull_from_points, standard_simplex, unimodular_equivalent


def seg(length):
    return standard_simplex(1, length)


def test_construct_trapezoid():
    spec = CayleySpec((seg(1), seg(3)), 2)
    P = cayley_construct(spec)
    assert set(P.vertices) == {(0, 0), (1, 0), (0, 2), (3, 2)}
    assert P.dim == 2


def test_construct_matches_hull():
    spec = CayleySpec((standard_simplex(2), standard_simplex(2, 2)), 1)
    P = cayley_construct(spec)
    pts = [v + (0,) for v in standard_simplex(2).vertices]
    pts += [v + (1,) for v in standard_simplex(2, 2).vertices]
    assert P == hull_from_points(pts)


def test_factor_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        CayleySpec((standard_simplex(1), standard_simplex(2)), 1)


def test_strictness():
    assert is_strict(CayleySpec((seg(1), seg(5)), 2))
    assert is_strict(CayleySpec((standard_simplex(2), standard_simplex(2, 3)), 1))
    mixed = CayleySpec((standard_simplex(2), cube(2)), 1)
    assert not is_strict(mixed)
    with pytest.raises(NotStrict):
        cayley_smooth(mixed)


def test_smoothness_divisibility():
    assert cayley_smooth(CayleySpec((seg(1), seg(3)), 2))
    assert not cayley_smooth(CayleySpec((seg(1), seg(2)), 2))
    assert cayley_smooth(CayleySpec((seg(1), seg(2)), 1))
    # non-smooth common fan
    tri = hull_from_points([(0, 0), (2, 0), (0, 1)])  # vertex (2,0) is singular
    assert not cayley_smooth(CayleySpec((tri, tri), 1))


def test_smoothness_agrees_with_constructed_polytope():
    for spec in [CayleySpec((seg(1), seg(3)), 2),
                 CayleySpec((seg(1), seg(2)), 2),
                 CayleySpec((seg(2), seg(2), seg(4)), 2),
                 CayleySpec((standard_simplex(2), standard_simplex(2, 2)), 1)]:
        assert cayley_smooth(spec) == cayley_construct(spec).is_smooth()


def test_closed_form_case1():
    rep = closed_form_invariants(CayleySpec((seg(1), seg(3)), 2))
    assert rep.case_tag == "Case1"
    assert rep.q_codegree_closed_form == 1 and rep.q_normal
    P = cayley_construct(CayleySpec((seg(1), seg(3)), 2))
    adj = adjunction_report(P)
    assert adj.q_codegree == 1 and adj.q_normal


def test_closed_form_case2a():
    spec = CayleySpec((seg(1), seg(1), seg(1)), 2)
    rep = closed_form_invariants(spec)
    assert rep.case_tag == "Case2a"
    assert rep.q_codegree_closed_form == 2 and rep.q_normal
    adj = adjunction_report(cayley_construct(spec))
    assert adj.q_codegree == 2 and adj.q_normal


def test_closed_form_hypothesis_fails():
    # mixed offsets break the divisibility condition, so no closed form
    rep = closed_form_invariants(CayleySpec((seg(1), seg(2)), 2))
    assert rep.case_tag == "HypothesisFails" and not rep.smooth
    # (k+1)/s < m
    rep = closed_form_invariants(
        CayleySpec((standard_simplex(2), standard_simplex(2)), 3))
    assert rep.case_tag == "HypothesisFails" and rep.smooth


def test_recognize_trapezoid():
    P = hull_from_points([(0, 0), (1, 0), (0, 2), (3, 2)])
    st = recognize_cayley(P, 2, 1)
    assert st is not None
    assert st.spec.order == 2 and st.spec.k == 1
    assert st.transform.apply_polytope(P) == cayley_construct(st.spec)
    lengths = sorted(sum(f.facets.offsets) for f in st.spec.factors)
    assert lengths == [1, 3]


def test_recognize_square_as_cayley_of_segments():
    st = recognize_cayley(cube(2), 1, 1)
    assert st is not None
    assert all(f.dim == 1 for f in st.spec.factors)


def test_recognize_round_trip():
    spec = CayleySpec((standard_simplex(2, 2), standard_simplex(2, 3)), 1)
    P = cayley_construct(spec)
    st = recognize_cayley(P, 1, 1)
    assert st is not None
    assert st.transform.apply_polytope(P) == cayley_construct(st.spec)
    degrees = sorted(sum(f.facets.offsets) for f in st.spec.factors)
    assert degrees == [2, 3]


def test_recognize_not_found():
    assert recognize_cayley(standard_simplex(2, 2), 1, 1) is None
    assert recognize_cayley(standard_simplex(3, 2), 1, 2) is None


def test_recognized_structure_is_equivalent_copy():
    spec = CayleySpec((seg(2), seg(2)), 1)
    P = cayley_construct(spec)
    st = recognize_cayley(P, 1, 1)
    assert unimodular_equivalent(P, cayley_construct(st.spec)) is not None
