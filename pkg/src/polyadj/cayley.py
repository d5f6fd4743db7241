"""Generalized Cayley polytopes [P_0 * ... * P_k]^s.

Construction, strictness, the divisibility smoothness criterion, closed-form
invariants for smooth strict specs, and recognition of strict Cayley
structure on a given polytope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactmath as em
from .errors import DimensionMismatch, NotStrict
from .polytope import (
    AffineUnimodularMap,
    Polytope,
    hull_from_points,
    standard_simplex,
    unimodular_equivalent,
)


@dataclass(frozen=True)
class CayleySpec:
    """Factors P_0..P_k (full-dimensional, common ambient dimension m) and the
    order s of the construction."""

    factors: tuple
    order: int

    def __post_init__(self):
        m = self.factors[0].ambient_dim
        if any(f.ambient_dim != m for f in self.factors):
            raise DimensionMismatch("factors live in different ambient spaces")
        assert len(self.factors) >= 2 and self.order >= 1

    @property
    def m(self):
        return self.factors[0].ambient_dim

    @property
    def k(self):
        return len(self.factors) - 1


@dataclass(frozen=True)
class CayleyAnalysis:
    strict: bool
    smooth: bool
    case_tag: str  # "Case1" | "Case2a" | "Case2b" | "HypothesisFails"
    q_codegree_closed_form: Fraction | None = None
    nef_value_closed_form: Fraction | None = None
    q_normal: bool | None = None


@dataclass(frozen=True)
class CayleyStructure:
    """Witnessed recognition: transform(P) = cayley_construct(spec) exactly."""

    spec: CayleySpec
    transform: AffineUnimodularMap


def cayley_construct(spec: CayleySpec) -> Polytope:
    """Conv(P_0 x {0}, P_1 x {s e_1}, ..., P_k x {s e_k}) in R^m x R^k."""
    m, k, s = spec.m, spec.k, spec.order
    verts = []
    for j, factor in enumerate(spec.factors):
        tail = tuple(s if i == j - 1 else 0 for i in range(k))
        for v in factor.vertices:
            verts.append(tuple(v) + tail)
    # every listed point is extreme: it is a vertex of the face over a vertex
    # of the base simplex s*Delta_k
    return Polytope._trusted(m + k, tuple(sorted(verts)))


def is_strict(spec: CayleySpec) -> bool:
    fan0 = spec.factors[0].normal_fan()
    return all(f.normal_fan() == fan0 for f in spec.factors[1:])


def _aligned_offsets(spec: CayleySpec):
    """Common ray list (sorted) and the offset matrix a[i][j] of factor j on
    ray i.  Requires strictness."""
    if not is_strict(spec):
        raise NotStrict("factors do not share a normal fan")
    rays = list(spec.factors[0].facets.normals)
    offsets = []
    for f in spec.factors:
        F = f.facets
        lookup = dict(zip(F.normals, F.offsets))
        offsets.append([lookup[r] for r in rays])
    return rays, [[offsets[j][i] for j in range(len(spec.factors))] for i in range(len(rays))]


def _common_fan_smooth(spec: CayleySpec) -> bool:
    P0 = spec.factors[0]
    F = P0.facets
    for inc in P0._incidence:
        mat = tuple(F.normals[i] for i in sorted(inc))
        if len(mat) != P0.ambient_dim or abs(em.det_int(mat)) != 1:
            return False
    return True


def cayley_smooth(spec: CayleySpec) -> bool:
    """Smoothness of the constructed polytope, decided on the factor data:
    the common fan must be smooth and s must divide every a_ij - a_i0."""
    _rays, a = _aligned_offsets(spec)
    if not _common_fan_smooth(spec):
        return False
    s = spec.order
    for row in a:
        if any((row[j] - row[0]) % s != 0 for j in range(1, len(row))):
            return False
    return True


def closed_form_invariants(spec: CayleySpec) -> CayleyAnalysis:
    """Closed-form Q-codegree / nef value for smooth strict specs with
    (k+1)/s >= m; the tagged verdict HypothesisFails otherwise."""
    strict = is_strict(spec)
    if not strict:
        raise NotStrict("closed forms are stated for strict Cayley polytopes")
    smooth = cayley_smooth(spec)
    m, k, s = spec.m, spec.k, spec.order
    if not smooth or Fraction(k + 1, s) < m:
        return CayleyAnalysis(strict=True, smooth=smooth, case_tag="HypothesisFails")
    fan_rays = spec.factors[0].facets.normals
    if len(fan_rays) == m + 1:
        # base is a projective space; factors are dilated unimodular simplices
        # whose dilation factor is the offset sum (rays sum to zero)
        degrees = sorted(sum(f.facets.offsets) for f in spec.factors)
        total = sum(degrees)
        if s * m <= total < s * (m + 1):
            d0, dk = degrees[0], degrees[-1]
            if d0 == dk:
                q = Fraction(m + 1, d0)
                return CayleyAnalysis(True, True, "Case2a", q, q, True)
            rem = m + 1 - Fraction(total, s)
            tau = Fraction(k + 1, s) + rem / d0
            q = Fraction(k + 1, s) + rem / dk
            return CayleyAnalysis(True, True, "Case2b", q, tau, False)
    q = Fraction(k + 1, s)
    return CayleyAnalysis(True, True, "Case1", q, q, True)


def recognize_cayley(P: Polytope, s: int, k: int):
    """Search for a strict Cayley structure of order s with k+1 factors.

    Scans (k+1)-subsets of facet normals summing to zero whose span is a
    rank-k direct summand; accepts when the induced projection maps P onto a
    unimodular copy of s*Delta_k with m-dimensional fibers sharing one normal
    fan.  Returns the first CayleyStructure in deterministic facet order, or
    None.
    """
    n = P.ambient_dim
    m = n - k
    assert P.is_full_dimensional and m >= 1 and s >= 1
    F = P.facets
    model = standard_simplex(k, s)
    for subset in combinations(range(len(F.normals)), k + 1):
        total = [0] * n
        for i in subset:
            total = [a + b for a, b in zip(total, F.normals[i])]
        if any(total):
            continue
        proj = tuple(F.normals[i] for i in subset[1:])  # k x n
        factors, _U, V = em.smith_decomposition(proj)
        if len(factors) != k or any(f != 1 for f in factors):
            continue  # span is not a rank-k direct summand
        Vinv = em.unimodular_inverse(V)
        phi = tuple(Vinv[k:])  # m x n projection onto fiber coordinates
        images = [em.mat_vec(proj, v) for v in P.vertices]
        img_hull = hull_from_points(images)
        if len(img_hull.vertices) != k + 1 or set(images) != set(img_hull.vertices):
            continue
        if img_hull.dim != k:
            continue
        g = unimodular_equivalent(img_hull, model)
        if g is None:
            continue
        # order the image vertices so that vertex j sits at s*e_j
        position = {}
        for w in img_hull.vertices:
            gw = g.apply(w)
            j = next((i for i, x in enumerate(gw) if x), None)
            position[w] = 0 if j is None else j + 1
        fibers = [[] for _ in range(k + 1)]
        for v, w in zip(P.vertices, images):
            fibers[position[w]].append(em.mat_vec(phi, v))
        factor_polys = [hull_from_points(f) for f in fibers]
        if any(f.dim != m for f in factor_polys):
            continue
        fan0 = factor_polys[0].normal_fan()
        if any(f.normal_fan() != fan0 for f in factor_polys[1:]):
            continue
        spec = CayleySpec(tuple(factor_polys), s)
        matrix = phi + em.mat_mul(g.matrix, proj)
        translation = (0,) * m + tuple(g.translation)
        transform = AffineUnimodularMap(matrix, translation)
        assert transform.apply_polytope(P) == cayley_construct(spec)
        return CayleyStructure(spec, transform)
    return None
