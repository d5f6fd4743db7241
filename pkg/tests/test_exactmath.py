from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyadj import exactmath as em
from polyadj.errors import DimensionMismatch, SingularSystem, ZeroVector


def test_primitive_basic():
    assert em.primitive((2, 4, 6)) == (1, 2, 3)
    assert em.primitive((0, -3)) == (0, -1)
    assert em.primitive((1, 0, 0)) == (1, 0, 0)


def test_primitive_zero_vector():
    with pytest.raises(ZeroVector):
        em.primitive((0, 0))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6), st.integers(1, 9))
def test_primitive_scale_invariant(entries, c):
    v = tuple(entries)
    if all(a == 0 for a in v):
        return
    assert em.primitive(em.vec_scale(c, v)) == em.primitive(v)


def test_unimodular_certificate():
    assert em.unimodular_certificate([(1, 0), (0, 1)]) == 1
    assert em.unimodular_certificate([(2, 1), (1, 2)]) == 3
    assert em.unimodular_certificate([(1, 0), (1, 1)]) == 1
    with pytest.raises(DimensionMismatch):
        em.unimodular_certificate([(1, 0, 0), (0, 1, 0)])


def test_smith_examples():
    factors, U, V = em.smith_decomposition(((2, 0), (0, 3)))
    assert factors == (1, 6)
    factors, _, _ = em.smith_decomposition(em.identity(3))
    assert factors == (1, 1, 1)
    factors, _, _ = em.smith_decomposition(((2,),))
    assert factors == (2,)


def _check_smith(M):
    factors, U, V = em.smith_decomposition(M)
    assert abs(em.det_int(U)) == 1
    assert abs(em.det_int(V)) == 1
    D = em.mat_mul(em.mat_mul(U, M), V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i == j and i < len(factors):
                assert x == factors[i]
            else:
                assert x == 0
    for a, b in zip(factors, factors[1:]):
        if b != 0:
            assert a != 0 and b % a == 0


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_random(m, n, data):
    M = tuple(tuple(data.draw(st.integers(-9, 9)) for _ in range(n)) for _ in range(m))
    _check_smith(M)


def test_smith_invariant_under_unimodular():
    M = ((2, 4), (6, 8))
    L = ((1, 1), (0, 1))
    R = ((1, 0), (3, 1))
    f0, _, _ = em.smith_decomposition(M)
    f1, _, _ = em.smith_decomposition(em.mat_mul(em.mat_mul(L, M), R))
    assert f0 == f1


def test_dual_basis():
    assert em.dual_basis([(1, 0), (0, 1)]) == ((1, 0), (0, 1))
    u = em.dual_basis([(1, 1), (0, 1)])
    assert u == ((1, 0), (-1, 1))
    u = em.dual_basis([(2, 0), (0, 1)])
    assert u == ((Fraction(1, 2), 0), (0, 1))
    with pytest.raises(SingularSystem):
        em.dual_basis([(1, 1), (2, 2)])


@given(st.integers(2, 4), st.data())
def test_dual_basis_pairings(n, data):
    vs = tuple(tuple(data.draw(st.integers(-5, 5)) for _ in range(n)) for _ in range(n))
    if em.det(vs) == 0:
        return
    us = em.dual_basis(vs)
    for i in range(n):
        for j in range(n):
            assert em.dot(vs[i], us[j]) == (1 if i == j else 0)


def test_hermite_lattice_preserved():
    M = ((2, 4, 4), (-6, 6, 12), (10, 4, 16))
    H = em.hermite_normal_form(M)
    # same Smith invariant factors => same lattice up to basis change,
    # and HNF rows must lie in the row lattice of M (checked via stacked SNF)
    f0, _, _ = em.smith_decomposition(M)
    f1, _, _ = em.smith_decomposition(H)
    assert tuple(f for f in f0 if f) == tuple(f for f in f1 if f)
    stacked = tuple(M) + tuple(H)
    f2, _, _ = em.smith_decomposition(stacked)
    assert tuple(f for f in f2 if f) == tuple(f for f in f0 if f)


def test_saturated_kernel_basis():
    F = ((1, 1, 1),)
    B = em.saturated_kernel_basis(F)
    assert len(B) == 2
    for b in B:
        assert em.dot(F[0], b) == 0
    # saturation: kernel basis extends to a basis of Z^3
    f, _, _ = em.smith_decomposition(B)
    assert f == (1, 1)


def test_lp_basic():
    # maximize t s.t. x >= t, x <= 1 - t  (variables (x, t))
    res = em.lp_feasible_max(
        [((1, -1), 0), ((-1, -1), -1)], (0, 1))
    assert res.status == "optimal"
    assert res.value == Fraction(1, 2)
    x, t = res.witness
    assert x - t >= 0 and -x - t >= -1


def test_lp_unbounded():
    res = em.lp_feasible_max([((1,), 0)], (1,))
    assert res.status == "unbounded"


def test_lp_infeasible():
    res = em.lp_feasible_max([((1,), 1), ((-1,), 0)], (1,))
    assert res.status == "infeasible"


def test_lp_witness_feasible():
    cons = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1), ((1, 2), Fraction(1, 3))]
    res = em.lp_feasible_max(cons, (1, 1))
    assert res.status == "optimal"
    assert res.value == 1
    for normal, off in cons:
        assert em.dot(normal, res.witness) >= off
