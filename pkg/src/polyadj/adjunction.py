"""Adjoint polytope family P^(t) and the derived invariants.

sigma(P) is the largest t with P^(t) nonempty (one exact LP); lambda(P) is
the largest t below which P^(t) keeps the normal fan of P, computed for
simple polytopes by the vertex-displacement formula.  Q-codegree = 1/sigma,
nef value = 1/lambda, Q-normal iff sigma = lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactmath as em
from .errors import NegativeParameter, NotFullDimensional, NotSimple
from .polytope import Polytope, hull_from_points, vertex_enumeration


@dataclass(frozen=True)
class AdjunctionReport:
    sigma: Fraction
    lam: Fraction
    q_codegree: Fraction
    nef_value: Fraction
    q_normal: bool


def adjoint(P: Polytope, t):
    """The polytope with every facet moved inward by lattice distance t.

    Returns a rational Polytope, or None when the shifted system is empty.
    """
    t = Fraction(t)
    if t < 0:
        raise NegativeParameter("adjoint parameter must be >= 0")
    verts = vertex_enumeration(P.facets.shift(t))
    if not verts:
        return None
    return hull_from_points(verts)


def sigma(P: Polytope) -> Fraction:
    """sup { t >= 0 : P^(t) nonempty }, attained; a single exact LP in (x, t)."""
    if not P.is_full_dimensional:
        raise NotFullDimensional("sigma requires a full-dimensional polytope")
    n = P.ambient_dim
    F = P.facets
    cons = [(tuple(eta) + (-1,), -Fraction(a)) for eta, a in zip(F.normals, F.offsets)]
    cons.append(((0,) * n + (1,), 0))
    res = em.lp_feasible_max(cons, (0,) * n + (1,))
    assert res.status == "optimal"
    return res.value


def _vertex_displacements(P: Polytope):
    """Per vertex v of a simple P, the direction u_v with v + t*u_v the vertex
    path of P^(t): the sum of the dual basis of the incident facet normals."""
    F = P.facets
    out = []
    for v, inc in zip(P.vertices, P._incidence):
        normals = [F.normals[i] for i in sorted(inc)]
        duals = em.dual_basis(normals)
        u = tuple(sum(col) for col in zip(*duals))
        out.append(u)
    return out


def fan_change_candidates(P: Polytope):
    """Sorted candidate parameters where a moving vertex of P^(t) meets a
    non-incident facet (the exact event set behind lambda)."""
    if not P.is_simple():
        raise NotSimple("lambda is only computed for simple polytopes")
    F = P.facets
    cands = set()
    for v, inc, u in zip(P.vertices, P._incidence, _vertex_displacements(P)):
        for j, (eta, a) in enumerate(zip(F.normals, F.offsets)):
            if j in inc:
                continue
            den = 1 - em.dot(eta, u)
            if den > 0:
                cands.add(Fraction(em.dot(eta, v) + a, 1) / den)
    return sorted(cands)


def lambda_value(P: Polytope) -> Fraction:
    """Largest t such that P^(t') has the normal fan of P for all t' < t."""
    s = sigma(P)
    cands = fan_change_candidates(P)
    return min(cands + [s]) if cands else s


def adjunction_report(P: Polytope) -> AdjunctionReport:
    s = sigma(P)
    lam = lambda_value(P)
    assert 0 < lam <= s
    return AdjunctionReport(
        sigma=s,
        lam=lam,
        q_codegree=1 / s,
        nef_value=1 / lam,
        q_normal=(s == lam),
    )
