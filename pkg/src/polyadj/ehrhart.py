"""Ehrhart counting, h*-polynomial, degree and codegree.

Counts are by direct (pruned) enumeration with memoization; the degree is
computed twice -- as deg h* and through the first dilate with an interior
lattice point -- and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InternalInconsistency, NotFullDimensional
from .polytope import Polytope

_count_cache: dict = {}


def count(P: Polytope, m: int) -> int:
    """f_P(m) = number of lattice points in mP, with f_P(0) = 1."""
    if m == 0:
        return 1
    key = (P, m)
    if key not in _count_cache:
        _count_cache[key] = len(P.dilate(m).lattice_points())
    return _count_cache[key]


def ehrhart_polynomial(P: Polytope):
    """Coefficients (low to high) of the degree-n polynomial through
    (m, f_P(m)) for m = 0..n; cross-checked at n+1 and n+2."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("Ehrhart polynomial requires full dimension")
    n = P.dim
    xs = list(range(n + 1))
    ys = [count(P, m) for m in xs]
    coeffs = _interpolate(xs, ys)
    for m in (n + 1, n + 2):
        if evaluate(coeffs, m) != count(P, m):
            raise InternalInconsistency("Ehrhart interpolation failed extension check")
    return coeffs


def _interpolate(xs, ys):
    """Newton divided differences over exact rationals."""
    k = len(xs)
    table = [Fraction(y) for y in ys]
    for j in range(1, k):
        for i in range(k - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial coefficients
    coeffs = [Fraction(0)] * k
    acc = [Fraction(1)]  # product (x - x_0)...(x - x_{j-1})
    for j in range(k):
        for i, c in enumerate(acc):
            coeffs[i] += table[j] * c
        new = [Fraction(0)] * (len(acc) + 1)
        for i, c in enumerate(acc):
            new[i] -= xs[j] * c
            new[i + 1] += c
        acc = new
    return tuple(coeffs)


def evaluate(coeffs, x):
    result = Fraction(0)
    for c in reversed(coeffs):
        result = result * x + c
    return result


@dataclass(frozen=True)
class HStarPolynomial:
    coefficients: tuple  # h*_0 .. h*_n

    @property
    def degree(self):
        d = 0
        for i, c in enumerate(self.coefficients):
            if c != 0:
                d = i
        return d


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    codegree: int
    hstar: HStarPolynomial


def h_star(P: Polytope) -> HStarPolynomial:
    """h*_j = sum_{i=0..j} (-1)^i C(n+1, i) f_P(j - i)."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("h* requires full dimension")
    n = P.dim
    coeffs = []
    for j in range(n + 1):
        h = sum((-1) ** i * comb(n + 1, i) * count(P, j - i) for i in range(j + 1))
        coeffs.append(h)
    assert coeffs[0] == 1
    assert all(c >= 0 for c in coeffs), "h* coefficients must be nonnegative"
    return HStarPolynomial(tuple(coeffs))


def codegree(P: Polytope) -> int:
    """Smallest k >= 1 such that kP has an interior lattice point."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("codegree requires full dimension")
    for k in range(1, P.dim + 2):
        if P.dilate(k).interior_lattice_points():
            return k
    raise InternalInconsistency("codegree exceeds n+1")


def degree_and_codegree(P: Polytope) -> DegreeReport:
    hs = h_star(P)
    d = hs.degree
    c = codegree(P)
    if c != P.dim + 1 - d:
        raise InternalInconsistency(
            f"deg h* = {d} disagrees with interior-point codegree {c}")
    return DegreeReport(degree=d, codegree=c, hstar=hs)
