"""FastAPI application exposing the verification checks.

Check verdicts travel inside the report body (including
``rejected-input`` for structurally bad lattices or unreadable terms);
HTTP errors are reserved for requests the schema itself rules out.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import PlainTextResponse

from .. import __version__, checks
from .. import heyting as hey
from ..diagrams import build_diagram, to_dot
from ..finset import FinSet, make_set
from ..terms import FreeCategory
from ..typeexpr import Base
from .schemas import (
    CheckReportModel,
    DotRequest,
    HealthResponse,
    ReportResponse,
    SweepRequest,
    TermEqRequest,
    VerifyRequest,
)


def _respond(reports: list[checks.CheckReport]) -> ReportResponse:
    return ReportResponse(
        reports=[CheckReportModel(**r.to_dict()) for r in reports],
        summary=checks.summarize(reports),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="distcat service",
        description="Runs bicartesian-closed-category verification checks.",
        version=__version__,
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/verify", response_model=ReportResponse, response_model_by_alias=True)
    def verify(req: VerifyRequest) -> ReportResponse:
        report = checks.run_check(
            req.check,
            req.instance,
            sizes=req.sizes,
            lattice=req.lattice.to_spec() if req.lattice else None,
            objects=req.objects,
            trials=req.trials,
            max_base_size=req.max_base_size,
            seed=req.seed,
        )
        return _respond([report])

    @app.post("/sweep", response_model=ReportResponse, response_model_by_alias=True)
    def sweep(req: SweepRequest) -> ReportResponse:
        if req.instance == "finset":
            reports = checks.sweep_finset(req.max_size, seed=req.seed, trials=req.trials)
        else:
            reports = checks.sweep_heyting(req.max_poset, seed=req.seed)
        return _respond(reports)

    @app.post("/dot", response_class=PlainTextResponse)
    def dot(req: DotRequest) -> str:
        if req.instance == "finset":
            sizes = req.sizes or (2, 2, 2)
            cat = FinSet()
            a, b, c = (make_set(n, s) for n, s in zip("ABC", sizes))
            return to_dot(build_diagram(req.diagram, cat, a, b, c, sized=True))
        if req.instance == "heyting":
            spec = req.lattice.to_spec() if req.lattice else {"kind": "divisors", "n": 30}
            try:
                _, lattice = checks.resolve_lattice(spec)
                cat = hey.HeytingCategory(lattice)
                labels = req.objects or list(lattice.elements[:3])
                if len(labels) != 3:
                    raise checks.RejectedInput("need three objects for a diagram")
                a, b, c = (lattice.index_of(str(x)) for x in labels)
            except (checks.RejectedInput, KeyError) as bad:
                return PlainTextResponse(str(bad), status_code=422)
            return to_dot(build_diagram(req.diagram, cat, a, b, c))
        free = FreeCategory()
        return to_dot(
            build_diagram(req.diagram, free, Base("A"), Base("B"), Base("C"))
        )

    @app.post("/term-eq", response_model=ReportResponse, response_model_by_alias=True)
    def term_eq(req: TermEqRequest) -> ReportResponse:
        report = checks.check_term_eq(
            req.left, req.right, trials=req.trials, max_base_size=req.max_base_size, seed=req.seed
        )
        return _respond([report])

    return app
