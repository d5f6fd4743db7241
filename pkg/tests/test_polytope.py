from fractions import Fraction
from math import comb

import pytest

from polyadj import polytope as pt
from polyadj.errors import (
    DimensionMismatch,
    EmptyInput,
    NotFullDimensional,
    UnboundedPolyhedron,
)
from polyadj.polytope import (
    AffineUnimodularMap,
    FacetPresentation,
    Polytope,
    cube,
    hull_from_points,
    standard_simplex,
    unimodular_equivalent,
    vertex_enumeration,
)


def test_hull_duplicates_and_nonextreme():
    P = hull_from_points([(0, 0), (1, 0), (0, 1), (0, 0)])
    assert len(P.vertices) == 3
    Q = hull_from_points([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert Q.vertices == ((0, 0), (0, 2), (2, 0))


def test_hull_single_point_and_errors():
    P = hull_from_points([(0, 0)])
    assert P.dim == 0 and P.vertices == ((0, 0),)
    with pytest.raises(EmptyInput):
        hull_from_points([])
    with pytest.raises(DimensionMismatch):
        hull_from_points([(0,), (0, 1)])


def test_hull_lower_dimensional():
    P = hull_from_points([(0, 0), (1, 1), (2, 2), (3, 3)])
    assert P.dim == 1
    assert P.vertices == ((0, 0), (3, 3))


def test_facet_presentation_triangle():
    F = standard_simplex(2).facets
    assert set(zip(F.normals, F.offsets)) == {
        ((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)}


def test_facet_presentation_box_and_dilation():
    F = cube(2).facets
    assert set(F.normals) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    F3 = standard_simplex(3, 2).facets
    assert set(zip(F3.normals, F3.offsets)) == {
        ((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((-1, -1, -1), 2)}


def test_facets_require_full_dimensional():
    P = hull_from_points([(0, 0), (1, 1)])
    with pytest.raises(NotFullDimensional):
        P.facets


def test_vertex_enumeration():
    F = FacetPresentation(((1, 0), (0, 1), (-1, -1)), (0, 0, 1))
    assert vertex_enumeration(F) == [(0, 0), (0, 1), (1, 0)]
    t = Fraction(2, 3)
    Ft = FacetPresentation(((1, 0), (0, 1), (-1, -1)), (-t, -t, 2 - t))
    assert vertex_enumeration(Ft) == [(t, t)]
    assert vertex_enumeration(FacetPresentation(((1,), (-1,)), (-1, 0))) == []


def test_vertex_enumeration_unbounded():
    with pytest.raises(UnboundedPolyhedron):
        vertex_enumeration(FacetPresentation(((1, 0), (0, 1)), (0, 0)))


def test_round_trip_vertices():
    for P in [standard_simplex(2), standard_simplex(3, 2), cube(3),
              hull_from_points([(0, 0), (3, 0), (0, 2), (3, 1), (1, 2)])]:
        assert tuple(vertex_enumeration(P.facets)) == P.vertices


def test_lattice_point_counts():
    assert len(standard_simplex(2).lattice_points()) == 3
    assert len(standard_simplex(2, 2).lattice_points()) == 6
    assert len(standard_simplex(3, 3).lattice_points()) == 20
    assert standard_simplex(2).lattice_points() == [(0, 0), (0, 1), (1, 0)]


def test_interior_lattice_points():
    assert standard_simplex(2, 2).interior_lattice_points() == []
    assert standard_simplex(2, 3).interior_lattice_points() == [(1, 1)]
    assert len(standard_simplex(2, 4).interior_lattice_points()) == 3


def test_dilate_and_product():
    assert standard_simplex(2).dilate(2) == standard_simplex(2, 2)
    P = hull_from_points([(0, 0), (2, 0), (1, 2)])
    assert P.dilate(1) == P
    assert P.dilate(3).normal_fan() == P.normal_fan()
    sq = standard_simplex(1).product(standard_simplex(1))
    assert sq == cube(2)
    prism = standard_simplex(2).product(standard_simplex(1))
    assert len(prism.vertices) == 6
    assert len(standard_simplex(1).product(standard_simplex(2, 2)).facets) == 5


def test_normal_fan():
    fan = standard_simplex(2).normal_fan()
    assert len(fan.rays) == 3 and len(fan.maximal_cones) == 3
    fan_sq = cube(2).normal_fan()
    assert len(fan_sq.rays) == 4 and len(fan_sq.maximal_cones) == 4
    assert standard_simplex(2, 2).normal_fan() == standard_simplex(2).normal_fan()


def test_same_normal_fan():
    assert cube(2).normal_fan() == cube(2, 2).normal_fan()
    assert standard_simplex(2).normal_fan() != cube(2).normal_fan()
    P = hull_from_points([(0, 0), (2, 0), (0, 1), (2, 1)])
    assert P.normal_fan() == cube(2).normal_fan()


def test_simple_and_smooth():
    for n in range(1, 5):
        assert standard_simplex(n).is_simple()
        assert standard_simplex(n, 2).is_smooth()
    pyramid = hull_from_points(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    assert not pyramid.is_simple()
    assert not pyramid.is_smooth()
    assert cube(3).is_smooth()
    assert not hull_from_points([(0, 0), (2, 1), (1, 2)]).is_smooth()


def test_normal_fan_cone_count_is_vertex_count():
    for P in [standard_simplex(3), cube(3),
              hull_from_points([(0, 0), (3, 0), (0, 2), (3, 1), (1, 2)])]:
        assert len(P.normal_fan().maximal_cones) == len(P.vertices)


def test_unimodular_equivalent_translation():
    P = pt.standard_simplex(2)
    Q = P.translate((5, 5))
    T = unimodular_equivalent(P, Q)
    assert T is not None
    assert T.matrix == ((1, 0), (0, 1)) and T.translation == (5, 5)


def test_unimodular_equivalent_shear():
    P = cube(2)
    Q = hull_from_points([(0, 0), (1, 0), (1, 1), (2, 1)])
    T = unimodular_equivalent(P, Q)
    assert T is not None
    assert {T.apply(v) for v in P.vertices} == set(Q.vertices)


def test_unimodular_not_equivalent():
    assert unimodular_equivalent(standard_simplex(2), standard_simplex(2, 2)) is None


def test_unimodular_invariants_preserved():
    P = hull_from_points([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)])
    T = AffineUnimodularMap(((1, 2, 0), (0, 1, 0), (1, 1, 1)), (3, -1, 2))
    Q = T.apply_polytope(P)
    assert len(P.lattice_points()) == len(Q.lattice_points())
    assert len(P.interior_lattice_points()) == len(Q.interior_lattice_points())
    assert P.is_smooth() == Q.is_smooth()
    assert P.is_simple() == Q.is_simple()


def test_map_inverse_compose():
    T = AffineUnimodularMap(((1, 1), (0, 1)), (2, -3))
    I = T.compose(T.inverse())
    assert I.matrix == ((1, 0), (0, 1)) and I.translation == (0, 0)


def test_ehrhart_polynomiality_by_interpolation():
    # |kP cap Z^n| agrees with a degree-n polynomial through k=0..n at n+1, n+2
    for P in [standard_simplex(2, 2), cube(2),
              hull_from_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])]:
        n = P.dim
        counts = [len(P.dilate(k).lattice_points()) if k else 1 for k in range(n + 3)]
        # Newton forward differences: a degree-n polynomial has vanishing
        # (n+1)-th differences
        diffs = counts[:]
        for _ in range(n + 1):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        assert all(d == 0 for d in diffs)


def test_simplex_dilate_counts():
    for n in range(1, 4):
        for k in range(1, 4):
            assert len(standard_simplex(n, k).lattice_points()) == comb(n + k, n)


def test_to_full_dimensional_preserves_lattice():
    P = hull_from_points([(0, 0, 0), (2, 0, 2), (0, 2, 2)])
    red, chart = P.to_full_dimensional()
    assert red.ambient_dim == 2 and red.is_full_dimensional
    for v in P.vertices:
        assert chart.from_chart(chart.to_chart(v)) == v
