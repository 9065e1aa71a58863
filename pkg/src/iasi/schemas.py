"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from . import oracle
from .graphs import Graph
from .intset import IntSet
from .labeling import Labeling


class GraphModel(BaseModel):
    vertex_count: int = Field(ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _well_formed(self) -> "GraphModel":
        self.to_graph()  # raises ValueError on loops / out-of-range endpoints
        return self

    def to_graph(self) -> Graph:
        return Graph(self.vertex_count, self.edges)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(vertex_count=g.vertex_count, edges=list(g.edges))


def labels_to_labeling(g: Graph, labels: list[list[int]]) -> Labeling:
    return Labeling(g, tuple(IntSet(lab) for lab in labels))


def labeling_to_labels(labeling: Labeling) -> list[list[int]]:
    return [list(lab.elements) for lab in labeling.labels]


class VerifyRequest(BaseModel):
    graph: GraphModel
    labels: list[list[int]]
    expect_uniform: Optional[int] = Field(default=None, ge=1)
    expect_weakly: Optional[int] = Field(default=None, ge=1)


class EdgeReportModel(BaseModel):
    u: int
    v: int
    label: list[int]
    size: int


class ReportModel(BaseModel):
    vertex_injective: bool
    edge_injective: bool
    is_iasi: bool
    is_weak: bool
    uniform_k: Optional[int]
    is_weakly_uniform: Optional[int]
    edges: list[EdgeReportModel]
    witnesses: list[str]


class VerifyResponse(BaseModel):
    report: ReportModel
    expectation_met: Optional[bool] = None


class ConstructRequest(BaseModel):
    graph: GraphModel
    mode: Literal["weakly", "bipartite", "odd"]
    k: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    d: Optional[int] = Field(default=None, ge=1)


class ConstructResponse(BaseModel):
    status: Literal["ok", "infeasible"]
    labels: Optional[list[list[int]]] = None
    uniform_k: Optional[int] = None
    is_weakly_uniform: Optional[int] = None
    odd_cycle: Optional[list[int]] = None


class DecideRequest(BaseModel):
    graph: GraphModel
    k: int = Field(ge=1)
    weakly: bool = False


class CertificateModel(BaseModel):
    left: Optional[list[int]] = None
    right: Optional[list[int]] = None
    odd_cycle: Optional[list[int]] = None


class DecideResponse(BaseModel):
    exists: bool
    rule: str
    certificate: Optional[CertificateModel] = None


class SearchRequest(BaseModel):
    graph: GraphModel
    mode: Literal["uniform", "weakly"]
    k: int = Field(ge=1)
    universe_max: int = Field(default=12, ge=0)
    max_label_size: int = Field(default=4, ge=1)
    budget: int = Field(default=oracle.DEFAULT_BUDGET, ge=1)
    limit: int = Field(default=1, ge=1)


class SearchResponse(BaseModel):
    status: Literal["found", "exhausted", "aborted"]
    labelings: list[list[list[int]]]
    steps: int
