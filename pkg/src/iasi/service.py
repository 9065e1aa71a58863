"""HTTP service exposing verification, construction, decision and search.

Every operation is stateless request/response, so the app can serve many
clients at once; the bundled CLI drives the same app in process.  Run it
standalone with ``uvicorn iasi.service:app``.

Outcome conventions: semantic impossibility (non-bipartite input to a
bipartite-only construction) and bounded-search verdicts are 200
responses with a ``status`` field; malformed or inconsistent parameters
are 4xx.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import schemas
from .construct import (
    construct_uniform_bipartite,
    construct_uniform_odd,
    construct_weakly_uniform,
    resolve_params,
)
from .decide import admits_uniform, admits_weakly_uniform
from .errors import BudgetExceededError, NotBipartiteError
from .graphs import Bipartition
from .labeling import Labeling, induced_edge_label, verify
from .oracle import SearchSpace, run_search

app = FastAPI(
    title="iasi",
    description="k-uniform integer additive set-indexers on finite simple graphs",
    version="0.1.0",
)


def _report_model(g, labeling: Labeling) -> schemas.ReportModel:
    report = verify(g, labeling)
    edges = [
        schemas.EdgeReportModel(
            u=u, v=v, label=list(induced_edge_label(labeling, u, v).elements), size=report.edge_sizes[(u, v)]
        )
        for u, v in g.edges
    ]
    return schemas.ReportModel(
        vertex_injective=report.vertex_injective,
        edge_injective=report.edge_injective,
        is_iasi=report.is_iasi,
        is_weak=report.is_weak,
        uniform_k=report.uniform_k,
        is_weakly_uniform=report.is_weakly_uniform,
        edges=edges,
        witnesses=list(report.witnesses),
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify_endpoint(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    if req.expect_uniform is not None and req.expect_weakly is not None:
        raise HTTPException(status_code=400, detail="expect_uniform and expect_weakly are mutually exclusive")
    g = req.graph.to_graph()
    try:
        labeling = schemas.labels_to_labeling(g, req.labels)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    report = _report_model(g, labeling)
    expectation_met = None
    if req.expect_uniform is not None:
        expectation_met = report.uniform_k == req.expect_uniform
    elif req.expect_weakly is not None:
        expectation_met = report.is_weakly_uniform == req.expect_weakly
    return schemas.VerifyResponse(report=report, expectation_met=expectation_met)


@app.post("/construct", response_model=schemas.ConstructResponse)
def construct_endpoint(req: schemas.ConstructRequest) -> schemas.ConstructResponse:
    g = req.graph.to_graph()
    try:
        params = resolve_params(req.mode, k=req.k, m=req.m, n=req.n, d=req.d)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    try:
        if req.mode == "weakly":
            labeling = construct_weakly_uniform(g, params.k)
        elif req.mode == "bipartite":
            labeling = construct_uniform_bipartite(g, params.m, params.n, params.d)
        else:
            labeling = construct_uniform_odd(g, params.m, params.d)
    except NotBipartiteError as exc:
        return schemas.ConstructResponse(status="infeasible", odd_cycle=list(exc.odd_cycle))
    # Mandatory self-check before anything is returned to a client.
    report = verify(g, labeling)
    advertised_ok = (
        report.is_weakly_uniform == params.k if req.mode == "weakly" else report.uniform_k == params.k
    )
    if not advertised_ok:
        raise HTTPException(status_code=500, detail="construction failed its own verification")
    return schemas.ConstructResponse(
        status="ok",
        labels=schemas.labeling_to_labels(labeling),
        uniform_k=report.uniform_k,
        is_weakly_uniform=report.is_weakly_uniform,
    )


@app.post("/decide", response_model=schemas.DecideResponse)
def decide_endpoint(req: schemas.DecideRequest) -> schemas.DecideResponse:
    g = req.graph.to_graph()
    decision = admits_weakly_uniform(g, req.k) if req.weakly else admits_uniform(g, req.k)
    certificate = None
    if isinstance(decision.certificate, Bipartition):
        certificate = schemas.CertificateModel(
            left=list(decision.certificate.left), right=list(decision.certificate.right)
        )
    elif decision.certificate is not None:
        certificate = schemas.CertificateModel(odd_cycle=list(decision.certificate))
    return schemas.DecideResponse(exists=decision.exists, rule=decision.rule, certificate=certificate)


@app.post("/search", response_model=schemas.SearchResponse)
def search_endpoint(req: schemas.SearchRequest) -> schemas.SearchResponse:
    g = req.graph.to_graph()
    mode = "uniform_k" if req.mode == "uniform" else "weakly_k"
    space = SearchSpace(
        universe_max=req.universe_max, max_label_size=req.max_label_size, mode=mode, k=req.k
    )
    try:
        result = run_search(g, space, limit=req.limit, budget=req.budget)
    except BudgetExceededError as exc:
        return schemas.SearchResponse(
            status="aborted",
            labelings=[schemas.labeling_to_labels(lab) for lab in exc.found],
            steps=exc.steps,
        )
    status = "found" if result.labelings else "exhausted"
    return schemas.SearchResponse(
        status=status,
        labelings=[schemas.labeling_to_labels(lab) for lab in result.labelings],
        steps=result.steps,
    )
