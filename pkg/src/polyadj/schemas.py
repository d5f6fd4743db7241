"""Wire formats: polytope.v1, cayley.v1, fan.v1, and report documents.

All numbers are exact: rationals travel as "p/q" strings, and integers that
do not fit in a signed 64-bit word travel as decimal strings.  Every report
field is present (null when skipped), so the schema is stable for
downstream tooling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator

from .errors import ParseError
from .polytope import (
    AffineUnimodularMap,
    FacetPresentation,
    Polytope,
    hull_from_points,
    vertex_enumeration,
)

_I64_MAX = 2**63 - 1
_I64_MIN = -(2**63)

Coordinate = Union[int, str]


def encode_int(x: int):
    """Decimal string when the value does not fit in a signed 64-bit word."""
    return x if _I64_MIN <= x <= _I64_MAX else str(x)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise ParseError("expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    try:
        return int(str(x), 10)
    except ValueError as exc:
        raise ParseError(f"not an integer: {x!r}") from exc


def encode_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def decode_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError("expected a rational, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {x!r}") from exc


class FacetsDoc(BaseModel):
    normals: list[list[Coordinate]]
    offsets: list[Coordinate]


class PolytopeDoc(BaseModel):
    format: Literal["polytope.v1"] = "polytope.v1"
    ambient_dim: int = Field(ge=0)
    vertices: Optional[list[list[Coordinate]]] = None
    facets: Optional[FacetsDoc] = None

    @model_validator(mode="after")
    def _one_presentation(self):
        if (self.vertices is None) == (self.facets is None):
            raise ValueError("exactly one of vertices/facets is required")
        return self

    def to_polytope(self) -> Polytope:
        n = self.ambient_dim
        if self.vertices is not None:
            pts = []
            for row in self.vertices:
                if len(row) != n:
                    raise ParseError("vertex length differs from ambient_dim")
                pts.append(tuple(decode_int(x) for x in row))
            if not pts:
                raise ParseError("empty vertex list")
            return hull_from_points(pts)
        normals = []
        for row in self.facets.normals:
            if len(row) != n:
                raise ParseError("normal length differs from ambient_dim")
            normals.append(tuple(decode_int(x) for x in row))
        offsets = tuple(decode_rational(x) for x in self.facets.offsets)
        if len(offsets) != len(normals):
            raise ParseError("one offset per normal is required")
        verts = vertex_enumeration(FacetPresentation(tuple(normals), offsets))
        if not verts:
            raise ParseError("facet system is infeasible")
        if any(any(Fraction(x).denominator != 1 for x in v) for v in verts):
            raise ParseError("facet system does not describe a lattice polytope")
        return hull_from_points(verts)

    @staticmethod
    def from_polytope(P: Polytope) -> "PolytopeDoc":
        return PolytopeDoc(
            ambient_dim=P.ambient_dim,
            vertices=[[encode_int(x) for x in v] for v in P.vertices],
        )


class CayleyDoc(BaseModel):
    format: Literal["cayley.v1"] = "cayley.v1"
    s: int = Field(ge=1)
    factors: list[PolytopeDoc] = Field(min_length=2)

    def to_spec(self):
        from .cayley import CayleySpec

        return CayleySpec(tuple(f.to_polytope() for f in self.factors), self.s)

    @staticmethod
    def from_spec(spec) -> "CayleyDoc":
        return CayleyDoc(
            s=spec.order,
            factors=[PolytopeDoc.from_polytope(f) for f in spec.factors],
        )


class FanDoc(BaseModel):
    format: Literal["fan.v1"] = "fan.v1"
    rays: list[list[Coordinate]]
    maximal_cones: list[list[int]]
    coefficients: Optional[list[Coordinate]] = None

    def to_fan(self):
        from .toricdict import Fan

        if not self.rays:
            raise ParseError("a fan needs at least one ray")
        n = len(self.rays[0])
        rays = []
        for row in self.rays:
            if len(row) != n:
                raise ParseError("rays have inconsistent lengths")
            rays.append(tuple(decode_int(x) for x in row))
        for cone in self.maximal_cones:
            if any(i < 0 or i >= len(rays) for i in cone):
                raise ParseError("cone refers to a ray index out of range")
        return Fan(n, tuple(rays), tuple(tuple(c) for c in self.maximal_cones))

    def to_divisor(self):
        from .toricdict import FanDivisor

        if self.coefficients is None:
            raise ParseError("divisor operations require coefficients")
        fan = self.to_fan()
        return FanDivisor(fan, tuple(decode_int(x) for x in self.coefficients))


class MapDoc(BaseModel):
    matrix: list[list[Coordinate]]
    translation: list[Coordinate]

    @staticmethod
    def from_map(T: AffineUnimodularMap) -> "MapDoc":
        return MapDoc(
            matrix=[[encode_int(x) for x in row] for row in T.matrix],
            translation=[encode_int(x) for x in T.translation],
        )

    def to_map(self) -> AffineUnimodularMap:
        return AffineUnimodularMap(
            tuple(tuple(decode_int(x) for x in row) for row in self.matrix),
            tuple(decode_int(x) for x in self.translation),
        )


class VerdictDoc(BaseModel):
    tag: str
    witness: Optional[dict] = None
    detail: Optional[str] = None

    @staticmethod
    def from_verdict(v) -> "VerdictDoc":
        from .cayley import CayleyStructure

        witness = None
        if isinstance(v.witness, AffineUnimodularMap):
            witness = {"map": MapDoc.from_map(v.witness).model_dump()}
        elif isinstance(v.witness, CayleyStructure):
            witness = {
                "cayley": CayleyDoc.from_spec(v.witness.spec).model_dump(),
                "map": MapDoc.from_map(v.witness.transform).model_dump(),
            }
        return VerdictDoc(tag=v.tag, witness=witness, detail=v.detail)


class AnalysisReport(BaseModel):
    ambient_dim: int
    dim: int
    vertex_count: int
    facet_count: int
    smooth: bool
    simple: bool
    degree: Optional[int]
    codegree: Optional[int]
    q_codegree: str
    nef_value: str
    q_normal: bool
    h_star: Optional[list[Coordinate]]
    classification: Optional[VerdictDoc] = None


class CayleyAnalysisReport(BaseModel):
    strict: bool
    smooth: bool
    case: str
    q_codegree: Optional[str]
    nef_value: Optional[str]
    consistent: Optional[bool]


class RecognitionReport(BaseModel):
    found: bool
    spec: Optional[CayleyDoc] = None
    transform: Optional[MapDoc] = None


class EquivalenceReport(BaseModel):
    equivalent: bool
    map: Optional[MapDoc] = None


ALL_SCHEMAS = {
    "polytope.v1": PolytopeDoc,
    "cayley.v1": CayleyDoc,
    "fan.v1": FanDoc,
    "analysis_report": AnalysisReport,
    "cayley_analysis_report": CayleyAnalysisReport,
    "recognition_report": RecognitionReport,
    "equivalence_report": EquivalenceReport,
    "verdict": VerdictDoc,
}
