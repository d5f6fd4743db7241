"""Fans, torus-invariant divisors, and the polytope dictionary.

A FanDivisor D = sum a_i D_i on a complete fan determines the polytope
P_D = { x : <x, r_i> >= -a_i }.  Positivity of D translates into shape
conditions on P_D: ample iff the normal fan of P_D is the fan itself, big
iff P_D is full-dimensional, effective iff P_D is nonempty.  Nefness is
decided cone by cone on simplicial fans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exactmath as em
from .errors import DimensionMismatch, IncompleteFan, NonSimplicial, ZeroVector
from .polytope import FacetPresentation, Polytope, hull_from_points, vertex_enumeration


@dataclass(frozen=True)
class Fan:
    """Rational fan given by primitive ray generators and maximal cones
    (tuples of ray indices)."""

    ambient_dim: int
    rays: tuple
    maximal_cones: tuple

    def __post_init__(self):
        for r in self.rays:
            if len(r) != self.ambient_dim:
                raise DimensionMismatch("ray has wrong length")
            if not any(r):
                raise ZeroVector("fan rays must be nonzero")
            assert em.primitive(r) == tuple(r), "fan rays must be primitive"
        object.__setattr__(self, "maximal_cones",
                           tuple(sorted(tuple(sorted(c)) for c in self.maximal_cones)))

    @staticmethod
    def from_polytope(P: Polytope) -> "Fan":
        nf = P.normal_fan()
        cones = tuple(tuple(sorted(cone)) for cone in nf.maximal_cones)
        return Fan(P.ambient_dim, tuple(nf.rays), cones)

    def _canonical(self):
        return frozenset(
            frozenset(self.rays[i] for i in cone) for cone in self.maximal_cones
        )

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._canonical() == other._canonical()

    def __hash__(self):
        return hash((self.ambient_dim, self._canonical()))

    def is_simplicial(self) -> bool:
        n = self.ambient_dim
        return all(
            len(c) == n and em.rank(tuple(self.rays[i] for i in c)) == n
            for c in self.maximal_cones
        )

    def is_smooth(self) -> bool:
        if not self.is_simplicial():
            return False
        return all(
            abs(em.det_int(tuple(self.rays[i] for i in c))) == 1
            for c in self.maximal_cones
        )

    def is_complete(self) -> bool:
        """Wall criterion: every facet of a maximal cone must be shared by
        exactly one other maximal cone.  Stated for simplicial fans with
        full-dimensional maximal cones."""
        if not self.maximal_cones:
            return False
        if not self.is_simplicial():
            raise NonSimplicial("completeness check requires a simplicial fan")
        walls: dict = {}
        for cone in self.maximal_cones:
            for drop in cone:
                wall = frozenset(cone) - {drop}
                walls[wall] = walls.get(wall, 0) + 1
        return all(count == 2 for count in walls.values())


@dataclass(frozen=True)
class FanDivisor:
    """Invariant divisor sum a_i D_i; coefficients follow the ray order."""

    fan: Fan
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != len(self.fan.rays):
            raise DimensionMismatch("one coefficient per ray required")


def polytope_from_divisor(D: FanDivisor):
    """P_D = { x : <x, r_i> >= -a_i }, or None when the system is infeasible.

    Requires a complete fan (so that P_D is bounded).
    """
    if not D.fan.is_complete():
        raise IncompleteFan("divisor polytope requires a complete fan")
    F = FacetPresentation(D.fan.rays, tuple(Fraction(a) for a in D.coefficients))
    verts = vertex_enumeration(F)
    if not verts:
        return None
    return hull_from_points(verts)


def is_effective(D: FanDivisor) -> bool:
    return polytope_from_divisor(D) is not None


def is_big(D: FanDivisor) -> bool:
    P = polytope_from_divisor(D)
    return P is not None and P.dim == D.fan.ambient_dim


def is_ample(D: FanDivisor) -> bool:
    """D is ample iff P_D is full-dimensional with normal fan equal to the
    fan of D."""
    P = polytope_from_divisor(D)
    if P is None or P.dim != D.fan.ambient_dim:
        return False
    return Fan.from_polytope(P) == D.fan


def is_nef(D: FanDivisor) -> bool:
    """Cone-by-cone test on a complete simplicial fan: the linear functional
    m_sigma matching D on the rays of each maximal cone must satisfy
    <m_sigma, r> >= -a_r on every other ray."""
    if not D.fan.is_complete():
        raise IncompleteFan("nef test requires a complete fan")
    rays, a = D.fan.rays, D.coefficients
    for cone in D.fan.maximal_cones:
        mat = tuple(rays[i] for i in cone)
        rhs = tuple(-Fraction(a[i]) for i in cone)
        inv = em.mat_inverse(mat)
        m_sigma = tuple(em.dot(row, rhs) for row in inv)
        for j, r in enumerate(rays):
            if em.dot(m_sigma, r) < -a[j]:
                return False
    return True


def star_subdivision(fan: Fan, direction) -> Fan:
    """Subdivide every maximal cone containing the primitive ray through
    `direction` into the cones obtained by swapping the new ray for each
    generator appearing with positive coefficient."""
    f = em.primitive(direction)
    if not fan.is_simplicial():
        raise NonSimplicial("star subdivision implemented for simplicial fans")
    rays = list(fan.rays)
    if f in rays:
        new_idx = rays.index(f)
    else:
        new_idx = len(rays)
        rays.append(f)
    new_cones = []
    for cone in fan.maximal_cones:
        mat = tuple(fan.rays[i] for i in cone)
        inv = em.mat_inverse(mat)
        coords = tuple(em.dot(row, f) for row in em.transpose(inv))
        if any(c < 0 for c in coords):
            new_cones.append(cone)
            continue
        positive = [i for i, c in zip(cone, coords) if c > 0]
        if len(positive) <= 1:
            new_cones.append(cone)  # f already lies on a ray of the cone
            continue
        for drop in positive:
            new_cones.append(tuple(sorted((set(cone) - {drop}) | {new_idx})))
    return Fan(fan.ambient_dim, tuple(rays), tuple(new_cones))


def projective_space_fan(n: int) -> Fan:
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append((-1,) * n)
    cones = tuple(tuple(j for j in range(n + 1) if j != i) for i in range(n + 1))
    return Fan(n, tuple(rays), cones)


def product_fan(F: Fan, G: Fan) -> Fan:
    nf, ng = F.ambient_dim, G.ambient_dim
    rays = [tuple(r) + (0,) * ng for r in F.rays]
    rays += [(0,) * nf + tuple(r) for r in G.rays]
    cones = tuple(
        tuple(sorted(list(cf) + [len(F.rays) + i for i in cg]))
        for cf in F.maximal_cones
        for cg in G.maximal_cones
    )
    return Fan(nf + ng, tuple(rays), cones)


def blowup_product_fan(m: int) -> Fan:
    """Fan of the blowup of P^m x P^1 along the invariant codimension-2
    subspace cut out by the first coordinate hyperplane and a pole of the
    line factor: star subdivision of the product fan at e_1 + e."""
    base = product_fan(projective_space_fan(m), projective_space_fan(1))
    direction = tuple(1 if i in (0, m) else 0 for i in range(m + 1))
    return star_subdivision(base, direction)


def blowup_product_divisor(m: int) -> FanDivisor:
    """Distinguished divisor on blowup_product_fan(m): coefficient 2 on e_1
    and on e, 3 on the exceptional ray e_1 + e, 0 elsewhere."""
    fan = blowup_product_fan(m)
    e1 = tuple(1 if i == 0 else 0 for i in range(m + 1))
    e = tuple(1 if i == m else 0 for i in range(m + 1))
    exc = tuple(1 if i in (0, m) else 0 for i in range(m + 1))
    coeff = {e1: 2, e: 2, exc: 3}
    return FanDivisor(fan, tuple(coeff.get(r, 0) for r in fan.rays))


def blowup_product_polytope(m: int) -> Polytope:
    """The lattice polytope of blowup_product_divisor(m); smooth,
    Q-codegree (m+1)/2, nef value m, codegree m."""
    P = polytope_from_divisor(blowup_product_divisor(m))
    assert P is not None and P.dim == m + 1
    return P
