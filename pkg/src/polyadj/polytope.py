"""Lattice polytopes over exact rationals.

Carries polytopes in both vertex and facet form, converts between the two
with an incremental double-description method, enumerates lattice points,
and tests simplicity / smoothness / unimodular equivalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct

from . import exactmath as em
from .errors import (
    DimensionMismatch,
    EmptyInput,
    NotFullDimensional,
    UnboundedPolyhedron,
)


def _norm_scalar(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _norm_point(p):
    return tuple(_norm_scalar(Fraction(x)) for x in p)


@dataclass(frozen=True)
class FacetPresentation:
    """P = {x : <normals[i], x> >= -offsets[i]}, normals primitive, no
    redundant inequality."""

    normals: tuple
    offsets: tuple

    def __len__(self):
        return len(self.normals)

    def shift(self, t):
        """Move every facet inward by lattice distance t (adjoint system)."""
        return FacetPresentation(self.normals, tuple(_norm_scalar(Fraction(a) - t) for a in self.offsets))

    def satisfies(self, point, strict=False):
        for eta, a in zip(self.normals, self.offsets):
            v = em.dot(eta, point) + a
            if v < 0 or (strict and v == 0):
                return False
        return True


@dataclass(frozen=True)
class NormalFan:
    """Rays are primitive integer vectors; one maximal cone per vertex, given
    as a frozenset of ray indices.  The vertex/facet incidence *is* the cone
    lattice at the level this artifact needs."""

    rays: tuple
    maximal_cones: tuple

    def canonical(self):
        return (
            frozenset(self.rays),
            frozenset(frozenset(self.rays[i] for i in cone) for cone in self.maximal_cones),
        )

    def __eq__(self, other):
        return isinstance(other, NormalFan) and self.canonical() == other.canonical()

    def __hash__(self):
        rays, cones = self.canonical()
        return hash((rays, cones))


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> matrix @ x + translation, with |det matrix| = 1."""

    matrix: tuple
    translation: tuple

    def __post_init__(self):
        if abs(em.det_int(self.matrix)) != 1:
            raise ValueError("matrix is not unimodular")

    def apply(self, point):
        return _norm_point(em.vec_add(em.mat_vec(self.matrix, point), self.translation))

    def apply_polytope(self, P):
        return Polytope._trusted(P.ambient_dim, tuple(sorted(self.apply(v) for v in P.vertices)))

    def inverse(self):
        inv = em.unimodular_inverse(self.matrix)
        return AffineUnimodularMap(inv, tuple(-x for x in em.mat_vec(inv, self.translation)))

    def compose(self, other):
        """self after other."""
        return AffineUnimodularMap(
            em.mat_mul(self.matrix, other.matrix),
            em.vec_add(em.mat_vec(self.matrix, other.translation), self.translation),
        )

    @staticmethod
    def identity(n):
        return AffineUnimodularMap(em.identity(n), (0,) * n)

    @staticmethod
    def translation_by(t):
        return AffineUnimodularMap(em.identity(len(t)), tuple(t))


# ---------------------------------------------------------------------------
# Double description: extreme rays of a pointed cone {y : A y >= 0}
# ---------------------------------------------------------------------------

def _extreme_rays(rows):
    """Extreme rays of {y in Q^d : <row, y> >= 0 for all rows}.

    The cone must be pointed (rank of rows = d); rows are integer tuples.
    Returns primitive integer generators, sorted lexicographically.
    """
    d = len(rows[0])
    # greedy selection of d linearly independent starting rows
    base_idx = []
    echelon = []
    for i, row in enumerate(rows):
        cand = [Fraction(x) for x in row]
        for piv in echelon:
            j = next(k for k, x in enumerate(piv) if x != 0)
            if cand[j]:
                f = cand[j] / piv[j]
                cand = [a - f * b for a, b in zip(cand, piv)]
        if any(cand):
            echelon.append(cand)
            base_idx.append(i)
        if len(base_idx) == d:
            break
    if len(base_idx) < d:
        raise ValueError("cone is not pointed / not full rank")

    B = tuple(rows[i] for i in base_idx)
    Binv = em.mat_inverse(B)
    rays = [em.scale_to_primitive(tuple(Binv[i][j] for i in range(d))) for j in range(d)]
    processed = list(base_idx)
    zero_sets = []
    for j, r in enumerate(rays):
        zero_sets.append(frozenset(i for i in processed if em.dot(rows[i], r) == 0))

    rest = [i for i in range(len(rows)) if i not in set(base_idx)]
    for idx in rest:
        row = rows[idx]
        if not rays:
            break
        vals = [em.dot(row, r) for r in rays]
        pos = [j for j, v in enumerate(vals) if v > 0]
        zero = [j for j, v in enumerate(vals) if v == 0]
        neg = [j for j, v in enumerate(vals) if v < 0]
        if not neg:
            processed.append(idx)
            zero_sets = [
                zs | {idx} if vals[j] == 0 else zs for j, zs in enumerate(zero_sets)
            ]
            continue
        new_rays = []
        seen = set()
        for p in pos:
            for q in neg:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < d - 2:
                    continue
                adjacent = True
                for o in range(len(rays)):
                    if o not in (p, q) and common <= zero_sets[o]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = em.vec_add(
                    em.vec_scale(vals[p], rays[q]), em.vec_scale(-vals[q], rays[p])
                )
                ray = em.primitive(combo)
                if ray not in seen:
                    seen.add(ray)
                    new_rays.append(ray)
        processed.append(idx)
        kept = [(rays[j], zero_sets[j] | ({idx} if vals[j] == 0 else frozenset()))
                for j in pos + zero]
        for r in new_rays:
            kept.append((r, frozenset(i for i in processed if em.dot(rows[i], r) == 0)))
        kept.sort(key=lambda rz: rz[0])
        rays = [r for r, _ in kept]
        zero_sets = [z for _, z in kept]
    return tuple(sorted(rays))


def _integer_rows(rows):
    """Clear denominators row-wise, returning integer tuples."""
    out = []
    for row in rows:
        denom = 1
        for x in row:
            f = Fraction(x)
            denom = denom * f.denominator // math.gcd(denom, f.denominator)
        out.append(tuple(int(Fraction(x) * denom) for x in row))
    return out


def vertex_enumeration(F: FacetPresentation):
    """Exact rational vertices of the polyhedron described by F.

    Empty list iff the system is infeasible; raises UnboundedPolyhedron if
    the polyhedron has a nonzero recession direction.
    """
    n = len(F.normals[0])
    rows = [tuple(eta) + (Fraction(a),) for eta, a in zip(F.normals, F.offsets)]
    rows.append((0,) * n + (1,))
    rows = _integer_rows(rows)
    if em.rank(rows) < n + 1:
        raise UnboundedPolyhedron("system has a lineality direction")
    rays = _extreme_rays(rows)
    verts = []
    for r in rays:
        t = r[-1]
        if t == 0:
            raise UnboundedPolyhedron("system has a recession direction")
        verts.append(_norm_point(tuple(Fraction(x, t) for x in r[:-1])))
    return sorted(verts)


# ---------------------------------------------------------------------------
# Charts for lower-dimensional polytopes
# ---------------------------------------------------------------------------

class LatticeChart:
    """Lattice-preserving affine chart aff(points) cap Z^n  <->  Z^d."""

    def __init__(self, points):
        p0 = points[0]
        diffs = [em.vec_sub(p, p0) for p in points[1:]]
        n = len(p0)
        if not diffs:
            diffs = [(0,) * n]
        factors, _U, V = em.smith_decomposition(tuple(diffs))
        self.rank = sum(1 for f in factors if f != 0)
        self.origin = tuple(p0)
        self._V = V
        Vinv = em.unimodular_inverse(V)
        self._basis = tuple(Vinv[:self.rank])  # rows: basis of saturated lattice

    def to_chart(self, x):
        w = em.vec_sub(x, self.origin)
        coeff = tuple(sum(w[i] * self._V[i][j] for i in range(len(w)))
                      for j in range(len(w)))
        assert all(c == 0 for c in coeff[self.rank:]), "point outside affine hull"
        return coeff[:self.rank]

    def from_chart(self, c):
        x = list(self.origin)
        for ci, b in zip(c, self._basis):
            for i in range(len(x)):
                x[i] += ci * b[i]
        return tuple(x)


def _rational_affine_chart(points):
    """Coordinates of rational points within their affine hull (not
    lattice-preserving; used only to extract extreme points)."""
    p0 = points[0]
    diffs = [tuple(Fraction(a) - Fraction(b) for a, b in zip(p, p0)) for p in points[1:]]
    basis = []
    for dvec in diffs:
        cand = list(dvec)
        for piv in basis:
            j = next(k for k, x in enumerate(piv) if x != 0)
            if cand[j]:
                f = cand[j] / piv[j]
                cand = [a - f * b for a, b in zip(cand, piv)]
        if any(cand):
            basis.append(cand)
    d = len(basis)
    B = tuple(tuple(row) for row in basis)
    # independent column subset
    cols = []
    rk = 0
    for j in range(len(p0)):
        test = cols + [j]
        sub = tuple(tuple(row[c] for c in test) for row in B)
        if em.rank(sub) == len(test):
            cols = test
            rk += 1
        if rk == d:
            break
    sub = tuple(tuple(row[c] for c in cols) for row in B)
    subinv = em.mat_inverse(sub)

    def to_chart(x):
        w = tuple(Fraction(a) - Fraction(b) for a, b in zip(x, p0))
        wj = tuple(w[c] for c in cols)
        return tuple(sum(wj[i] * subinv[i][j] for i in range(d)) for j in range(d))

    return to_chart, d


# ---------------------------------------------------------------------------
# Polytope
# ---------------------------------------------------------------------------

class Polytope:
    """Convex polytope with exact rational vertices; lattice polytope when all
    vertices are integral.  Immutable; facet form computed lazily and cached."""

    def __init__(self, ambient_dim, vertices):
        self.ambient_dim = ambient_dim
        self.vertices = tuple(sorted(_norm_point(v) for v in vertices))

    @classmethod
    def _trusted(cls, ambient_dim, vertices):
        P = object.__new__(cls)
        P.ambient_dim = ambient_dim
        P.vertices = tuple(vertices)
        return P

    def __eq__(self, other):
        return (isinstance(other, Polytope)
                and self.ambient_dim == other.ambient_dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return f"Polytope(dim={self.dim}/{self.ambient_dim}, {len(self.vertices)} vertices)"

    @property
    def is_lattice(self):
        return all(all(isinstance(x, int) for x in v) for v in self.vertices)

    @cached_property
    def dim(self):
        v0 = self.vertices[0]
        diffs = [tuple(Fraction(a) - Fraction(b) for a, b in zip(v, v0)) for v in self.vertices[1:]]
        return em.rank(diffs) if diffs else 0

    @property
    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    @cached_property
    def facets(self) -> FacetPresentation:
        if not self.is_full_dimensional:
            raise NotFullDimensional(
                "facet presentation requires a full-dimensional polytope; reduce first")
        n = self.ambient_dim
        rows = _integer_rows([tuple(v) + (1,) for v in self.vertices])
        rays = _extreme_rays(rows)
        normals = []
        offsets = []
        for r in rays:
            eta, a = r[:-1], r[-1]
            assert any(eta), "trivial ray in dual cone"
            g = 0
            for x in eta:
                g = math.gcd(g, x)
            normals.append(tuple(x // g for x in eta))
            offsets.append(_norm_scalar(Fraction(a, g)))
        order = sorted(range(len(normals)), key=lambda i: (normals[i], offsets[i]))
        return FacetPresentation(tuple(normals[i] for i in order),
                                 tuple(offsets[i] for i in order))

    @cached_property
    def _incidence(self):
        """Per-vertex frozenset of tight facet indices."""
        F = self.facets
        out = []
        for v in self.vertices:
            out.append(frozenset(
                i for i, (eta, a) in enumerate(zip(F.normals, F.offsets))
                if em.dot(eta, v) + a == 0))
        return tuple(out)

    def contains(self, point, strict=False):
        return self.facets.satisfies(point, strict=strict)

    def normal_fan(self) -> NormalFan:
        return NormalFan(self.facets.normals, self._incidence)

    def dilate(self, k):
        assert k >= 1
        return Polytope._trusted(
            self.ambient_dim,
            tuple(_norm_point(em.vec_scale(k, v)) for v in self.vertices))

    def translate(self, t):
        return Polytope._trusted(
            self.ambient_dim,
            tuple(sorted(_norm_point(em.vec_add(v, t)) for v in self.vertices)))

    def product(self, other):
        return Polytope._trusted(
            self.ambient_dim + other.ambient_dim,
            tuple(sorted(tuple(v) + tuple(w)
                         for v in self.vertices for w in other.vertices)))

    def is_simple(self):
        n = self.ambient_dim
        return all(len(inc) == n for inc in self._incidence)

    def is_smooth(self):
        if not self.is_simple():
            return False
        F = self.facets
        for inc in self._incidence:
            mat = tuple(F.normals[i] for i in sorted(inc))
            if abs(em.det_int(mat)) != 1:
                return False
        return True

    def lattice_points(self):
        """All integer points of the polytope, in lexicographic order."""
        if self.dim == 0:
            v = self.vertices[0]
            return [v] if all(isinstance(x, int) for x in v) else []
        F = self.facets
        return _enumerate_lattice_points(F.normals, F.offsets, self._bounding_box())

    def interior_lattice_points(self):
        """Integer points strictly inside; equals the lattice points of the
        facet system with every offset reduced by one."""
        if not self.is_full_dimensional:
            raise NotFullDimensional("interior requires full-dimensional polytope")
        F = self.facets.shift(1)
        return _enumerate_lattice_points(F.normals, F.offsets, self._bounding_box())

    def _bounding_box(self):
        lo = []
        hi = []
        for j in range(self.ambient_dim):
            vals = [Fraction(v[j]) for v in self.vertices]
            lo.append(math.ceil(min(vals)))
            hi.append(math.floor(max(vals)))
        return list(zip(lo, hi))

    def to_full_dimensional(self):
        """Lattice-preserving reduction onto the affine hull.

        Returns (reduced polytope in Z^d, chart).  Lattice polytopes only.
        """
        assert self.is_lattice
        chart = LatticeChart(self.vertices)
        reduced = Polytope._trusted(
            chart.rank, tuple(sorted(chart.to_chart(v) for v in self.vertices)))
        return reduced, chart


def hull_from_points(points):
    """Convex hull: polytope whose vertex set is the extreme points."""
    pts = [_norm_point(p) for p in points]
    if not pts:
        raise EmptyInput("hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of differing dimension")
    pts = sorted(set(pts))
    if len(pts) == 1:
        return Polytope._trusted(n, (pts[0],))
    v0 = pts[0]
    diffs = [tuple(Fraction(a) - Fraction(b) for a, b in zip(p, v0)) for p in pts[1:]]
    d = em.rank(diffs)
    if d == n:
        P = Polytope(n, pts)
        verts = _extract_vertices(P)
        return Polytope._trusted(n, tuple(sorted(verts)))
    # lower-dimensional: find extreme points in an affine chart
    to_chart, _ = _rational_affine_chart(pts)
    reduced = [to_chart(p) for p in pts]
    hull_red = hull_from_points(reduced)
    red_set = set(hull_red.vertices)
    verts = [p for p, c in zip(pts, (tuple(_norm_point(c)) for c in reduced)) if c in red_set]
    return Polytope._trusted(n, tuple(sorted(verts)))


def _extract_vertices(P: Polytope):
    """Extreme points among P.vertices for full-dimensional P (a point is a
    vertex iff its tight facet normals span the whole space)."""
    F = P.facets
    n = P.ambient_dim
    verts = []
    for v in P.vertices:
        tight = [F.normals[i] for i, (eta, a) in enumerate(zip(F.normals, F.offsets))
                 if em.dot(eta, v) + a == 0]
        if len(tight) >= n and em.rank(tight) == n:
            verts.append(v)
    return verts


def _enumerate_lattice_points(normals, offsets, box):
    """Integer points satisfying <eta_i, x> >= -a_i, recursively by
    coordinate slabs with per-inequality interval pruning."""
    n = len(box)
    m = len(normals)
    # scale every inequality to pure integers
    snormals = []
    offs = []
    for eta, a in zip(normals, offsets):
        f = Fraction(a)
        snormals.append(tuple(x * f.denominator for x in eta))
        offs.append(f.numerator)
    normals = snormals
    # smax[i][j]: max of sum_{l >= j} eta_il * x_l over the box
    smax = [[0] * (n + 1) for _ in range(m)]
    for i in range(m):
        for j in range(n - 1, -1, -1):
            lo, hi = box[j]
            c = normals[i][j]
            if lo > hi:
                return []
            contrib = max(c * lo, c * hi)
            smax[i][j] = smax[i][j + 1] + contrib
    out = []
    x = [0] * n
    residual = [list(offs)]  # stack of residual vectors r_i = a_i + sum_{l<j} eta_il x_l

    def rec(j):
        r = residual[-1]
        if j == n:
            out.append(tuple(x))
            return
        lo, hi = box[j]
        for i in range(m):
            c = normals[i][j]
            bound = -r[i] - smax[i][j + 1]
            if c > 0:
                lo = max(lo, -((-bound) // c))
            elif c < 0:
                hi = min(hi, bound // c)
            elif bound > 0:
                return
        for val in range(lo, hi + 1):
            x[j] = val
            residual.append([r[i] + normals[i][j] * val for i in range(m)])
            rec(j + 1)
            residual.pop()

    rec(0)
    return sorted(out)


# ---------------------------------------------------------------------------
# Unimodular equivalence
# ---------------------------------------------------------------------------

def _affine_basis_indices(P: Polytope):
    """Indices of n+1 affinely independent vertices, greedily and
    deterministically chosen."""
    idx = [0]
    basis = []
    v0 = P.vertices[0]
    for i, v in enumerate(P.vertices[1:], start=1):
        cand = [Fraction(a) - Fraction(b) for a, b in zip(v, v0)]
        for piv in basis:
            j = next(k for k, y in enumerate(piv) if y != 0)
            if cand[j]:
                f = cand[j] / piv[j]
                cand = [a - f * b for a, b in zip(cand, piv)]
        if any(cand):
            basis.append(cand)
            idx.append(i)
        if len(idx) == P.ambient_dim + 1:
            break
    return idx


def unimodular_equivalent(P: Polytope, Q: Polytope):
    """An affine unimodular map T with T(P) = Q, or None if none exists.

    Exhaustive search over ordered vertex tuples of Q matching a fixed
    affine basis of P; complete at desk scale.
    """
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    if not (P.is_full_dimensional and Q.is_full_dimensional):
        raise NotFullDimensional("equivalence search requires full-dimensional polytopes")
    if len(P.vertices) != len(Q.vertices):
        return None
    if len(P.facets) != len(Q.facets):
        return None
    degP = sorted(len(i) for i in P._incidence)
    degQ = sorted(len(i) for i in Q._incidence)
    if degP != degQ:
        return None

    n = P.ambient_dim
    base = _affine_basis_indices(P)
    p0 = P.vertices[base[0]]
    Dp = tuple(zip(*[em.vec_sub(P.vertices[i], p0) for i in base[1:]]))  # columns p_i - p_0
    Dp_inv = em.mat_inverse(Dp)
    pdeg = [len(P._incidence[i]) for i in base]
    qverts = Q.vertices
    qdeg = [len(i) for i in Q._incidence]
    qset = set(qverts)
    pvset = set(P.vertices)

    chosen = []

    def attempt():
        q0 = chosen[0]
        Dq = tuple(zip(*[em.vec_sub(q, q0) for q in chosen[1:]]))
        M = em.mat_mul(Dq, Dp_inv)
        flat = [x for row in M for x in row]
        if any(Fraction(x).denominator != 1 for x in flat):
            return None
        M = tuple(tuple(int(Fraction(x)) for x in row) for row in M)
        if abs(em.det_int(M)) != 1:
            return None
        t = em.vec_sub(q0, em.mat_vec(M, p0))
        T = AffineUnimodularMap(M, t)
        if {T.apply(v) for v in pvset} == qset:
            return T
        return None

    def search(level, used, part_basis):
        for qi, q in enumerate(qverts):
            if qi in used or qdeg[qi] != pdeg[level]:
                continue
            if level > 0:
                cand = [Fraction(a) - Fraction(b) for a, b in zip(q, chosen[0])]
                for piv in part_basis:
                    j = next(k for k, y in enumerate(piv) if y != 0)
                    if cand[j]:
                        f = cand[j] / piv[j]
                        cand = [a - f * b for a, b in zip(cand, piv)]
                if not any(cand):
                    continue
            chosen.append(q)
            if level == n:
                T = attempt()
                if T is not None:
                    return T
            else:
                nb = part_basis + ([cand] if level > 0 else [])
                T = search(level + 1, used | {qi}, nb)
                if T is not None:
                    return T
            chosen.pop()
        return None

    return search(0, frozenset(), [])


# ---------------------------------------------------------------------------
# Standard polytopes
# ---------------------------------------------------------------------------

def standard_simplex(n, scale=1):
    """scale * Delta_n: hull of 0 and scale*e_i."""
    verts = [(0,) * n] + [tuple(scale if j == i else 0 for j in range(n)) for i in range(n)]
    return Polytope._trusted(n, tuple(sorted(verts)))


def cube(n, side=1):
    return Polytope._trusted(n, tuple(sorted(iproduct(*[[0, side]] * n))))
