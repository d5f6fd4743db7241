from fractions import Fraction

import pytest

from polyadj.adjunction import (
    adjoint,
    adjunction_report,
    fan_change_candidates,
    lambda_value,
    sigma,
)
from polyadj.errors import NegativeParameter, NotSimple
from polyadj.polytope import cube, hull_from_points, standard_simplex


def test_adjoint_identity_and_point():
    P = standard_simplex(2, 2)
    assert adjoint(P, 0) == P
    Q = adjoint(P, Fraction(2, 3))
    assert Q.vertices == ((Fraction(2, 3), Fraction(2, 3)),)
    assert adjoint(standard_simplex(2), 1) is None


def test_adjoint_negative_parameter():
    with pytest.raises(NegativeParameter):
        adjoint(standard_simplex(2), -1)


def test_adjoint_monotone_containment():
    P = cube(2, 3)
    A = adjoint(P, Fraction(1, 2))
    B = adjoint(P, 1)
    for v in B.vertices:
        assert A.contains(v)


def test_sigma_simplices():
    for n in range(1, 5):
        assert sigma(standard_simplex(n)) == Fraction(1, n + 1)
        assert sigma(standard_simplex(n, 2)) == Fraction(2, n + 1)
    assert sigma(cube(2)) == Fraction(1, 2)


def test_lambda_values():
    assert lambda_value(standard_simplex(2, 2)) == Fraction(2, 3)
    assert lambda_value(cube(2)) == Fraction(1, 2)


def test_lambda_rejects_non_simple():
    pyramid = hull_from_points(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
    with pytest.raises(NotSimple):
        lambda_value(pyramid)


def test_report_homothetic_simplex():
    rep = adjunction_report(standard_simplex(3, 2))
    assert rep.sigma == rep.lam == Fraction(1, 2)
    assert rep.q_codegree == rep.nef_value == 2
    assert rep.q_normal


def test_report_segment():
    rep = adjunction_report(standard_simplex(1))
    assert rep.sigma == rep.lam == Fraction(1, 2)
    assert rep.q_codegree == 2


def test_dim_drop_at_sigma():
    for P in [standard_simplex(3, 2), cube(2), standard_simplex(2, 4)]:
        s = sigma(P)
        assert adjoint(P, s).dim < P.dim
        assert adjoint(P, s * Fraction(7, 8)).dim == P.dim


def test_fan_equality_below_lambda():
    P = hull_from_points([(0, 0), (3, 0), (0, 2), (3, 2)])  # 3x2 rectangle
    lam = lambda_value(P)
    assert lam == 1
    below = adjoint(P, lam - Fraction(1, 1000))
    assert below.normal_fan() == P.normal_fan()
    s = sigma(P)
    assert s == 1  # the short side collapses exactly at sigma here
    # a rectangle with lambda < sigma does not exist; use a Hirzebruch-type
    # trapezoid, whose top edge collapses strictly before sigma
    Q = hull_from_points([(0, 0), (4, 0), (0, 3), (1, 3)])
    lamq = lambda_value(Q)
    sq = sigma(Q)
    assert lamq == 1 and sq == Fraction(4, 3)
    assert adjoint(Q, lamq - Fraction(1, 1000)).normal_fan() == Q.normal_fan()
    cands = [c for c in fan_change_candidates(Q) if c > lamq] + [sq]
    above = lamq + min(min(cands) - lamq, Fraction(1, 1000)) / 2
    assert adjoint(Q, above).normal_fan() != Q.normal_fan()


def test_unimodular_invariance_of_sigma():
    from polyadj.polytope import AffineUnimodularMap
    P = standard_simplex(3, 2)
    T = AffineUnimodularMap(((1, 0, 1), (0, 1, 1), (0, 0, 1)), (4, -2, 1))
    Q = T.apply_polytope(P)
    assert sigma(P) == sigma(Q)
    assert lambda_value(P) == lambda_value(Q)
