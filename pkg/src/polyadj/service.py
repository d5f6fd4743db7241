"""HTTP service and the shared report builders behind it.

The report builders are plain functions over domain objects; the FastAPI
app and the command-line client both call them, so both front ends emit
identical documents.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .adjunction import adjunction_report
from .cayley import CayleySpec, cayley_construct, closed_form_invariants, recognize_cayley
from .classify import classify
from .ehrhart import degree_and_codegree
from .errors import (
    DimensionMismatch,
    IncompleteFan,
    NotSimple,
    NotStrict,
    ParseError,
    PolyadjError,
)
from .polytope import Polytope, unimodular_equivalent
from .schemas import (
    AnalysisReport,
    CayleyAnalysisReport,
    CayleyDoc,
    EquivalenceReport,
    FanDoc,
    MapDoc,
    PolytopeDoc,
    RecognitionReport,
    VerdictDoc,
    encode_int,
    encode_rational,
)
from . import toricdict

_CASE_NAMES = {
    "Case1": "1",
    "Case2a": "2a",
    "Case2b": "2b",
    "HypothesisFails": "HypothesisFails",
}


# ---------------------------------------------------------------------------
# Report builders (shared by HTTP service and CLI)
# ---------------------------------------------------------------------------

def analyze_polytope(P: Polytope, with_classification: bool = False,
                     with_ehrhart: bool = True) -> AnalysisReport:
    adj = adjunction_report(P)
    degree = codeg = hstar = None
    if with_ehrhart:
        rep = degree_and_codegree(P)
        degree, codeg = rep.degree, rep.codegree
        hstar = [encode_int(c) for c in rep.hstar.coefficients]
    verdict = VerdictDoc.from_verdict(classify(P)) if with_classification else None
    return AnalysisReport(
        ambient_dim=P.ambient_dim,
        dim=P.dim,
        vertex_count=len(P.vertices),
        facet_count=len(P.facets.normals),
        smooth=P.is_smooth(),
        simple=P.is_simple(),
        degree=degree,
        codegree=codeg,
        q_codegree=encode_rational(adj.q_codegree),
        nef_value=encode_rational(adj.nef_value),
        q_normal=adj.q_normal,
        h_star=hstar,
        classification=verdict,
    )


def analyze_cayley(spec: CayleySpec) -> CayleyAnalysisReport:
    rep = closed_form_invariants(spec)  # raises NotStrict on non-strict input
    consistent = None
    q = tau = None
    if rep.case_tag != "HypothesisFails":
        q = encode_rational(rep.q_codegree_closed_form)
        tau = encode_rational(rep.nef_value_closed_form)
        adj = adjunction_report(cayley_construct(spec))
        consistent = (adj.q_codegree == rep.q_codegree_closed_form
                      and adj.nef_value == rep.nef_value_closed_form)
    return CayleyAnalysisReport(
        strict=rep.strict,
        smooth=rep.smooth,
        case=_CASE_NAMES[rep.case_tag],
        q_codegree=q,
        nef_value=tau,
        consistent=consistent,
    )


def recognition_report(P: Polytope, s: int, k: int) -> RecognitionReport:
    st = recognize_cayley(P, s, k)
    if st is None:
        return RecognitionReport(found=False)
    return RecognitionReport(
        found=True,
        spec=CayleyDoc.from_spec(st.spec),
        transform=MapDoc.from_map(st.transform),
    )


def equivalence_report(P: Polytope, Q: Polytope) -> EquivalenceReport:
    T = unimodular_equivalent(P, Q)
    if T is None:
        return EquivalenceReport(equivalent=False)
    return EquivalenceReport(equivalent=True, map=MapDoc.from_map(T))


def fan_query(doc: FanDoc, action: str):
    D = doc.to_divisor()
    if action == "polytope":
        P = toricdict.polytope_from_divisor(D)
        return None if P is None else PolytopeDoc.from_polytope(P)
    if action == "ample":
        return toricdict.is_ample(D)
    if action == "nef":
        return toricdict.is_nef(D)
    if action == "big":
        return toricdict.is_big(D)
    if action == "effective":
        return toricdict.is_effective(D)
    raise ParseError(f"unknown fan query {action!r}")


# ---------------------------------------------------------------------------
# FastAPI app
# ---------------------------------------------------------------------------

ERROR_STATUS = {
    ParseError: 400,
    NotSimple: 422,
    NotStrict: 422,
    DimensionMismatch: 422,
    IncompleteFan: 422,
}


def create_app() -> FastAPI:
    app = FastAPI(title="polyadj", description=__doc__)

    @app.exception_handler(PolyadjError)
    async def _domain_error(request: Request, exc: PolyadjError):
        status = ERROR_STATUS.get(type(exc), 422)
        return JSONResponse(
            status_code=status,
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.post("/analyze", response_model=AnalysisReport)
    def analyze(doc: PolytopeDoc,
                classify: bool = Query(default=False),
                ehrhart: bool = Query(default=True)):
        return analyze_polytope(doc.to_polytope(), classify, ehrhart)

    @app.post("/cayley/build", response_model=PolytopeDoc)
    def cayley_build(doc: CayleyDoc):
        return PolytopeDoc.from_polytope(cayley_construct(doc.to_spec()))

    @app.post("/cayley/recognize", response_model=RecognitionReport)
    def cayley_recognize(doc: PolytopeDoc,
                         s: int = Query(ge=1),
                         k: int = Query(ge=1)):
        return recognition_report(doc.to_polytope(), s, k)

    @app.post("/cayley/analyze", response_model=CayleyAnalysisReport)
    def cayley_analyze(doc: CayleyDoc):
        return analyze_cayley(doc.to_spec())

    @app.post("/equiv", response_model=EquivalenceReport)
    def equiv(a: PolytopeDoc, b: PolytopeDoc):
        return equivalence_report(a.to_polytope(), b.to_polytope())

    @app.post("/fan/{action}")
    def fan(action: str, doc: FanDoc):
        result = fan_query(doc, action)
        if isinstance(result, PolytopeDoc):
            return result
        return result

    return app


app = create_app()
