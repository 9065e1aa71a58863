"""Command-line client for the labeling service.

Each command builds a JSON request, sends it to the in-process HTTP app
(the same one ``uvicorn iasi.service:app`` serves), and renders the
response as plain text or json-lines.

Exit codes are a stable scripting contract:
  0  success / labeling exists / expectation met
  1  verified false / does not exist / infeasible / search exhausted
  2  input error (unparseable file, bad parameters)
  3  search aborted on step budget
"""

from __future__ import annotations

import json
import sys
import warnings
from pathlib import Path
from typing import NoReturn

import click

with warnings.catch_warnings():
    # starlette nags about httpx2, which is not packaged anywhere yet
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from . import service
from .errors import ParseError
from .graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    parse_edge_list,
    path,
    tree_from_parent_array,
)
from .labeling import parse_labeling
from .oracle import DEFAULT_BUDGET

FORMATS = click.Choice(["text", "json-lines"])


def _fail_input(message: str) -> NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _post(endpoint: str, payload: dict) -> dict:
    client = TestClient(service.app)
    resp = client.post(endpoint, json=payload)
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail")
        _fail_input(detail if isinstance(detail, str) else json.dumps(detail))
    resp.raise_for_status()
    return resp.json()


def _graph_payload(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _load_graph(path_arg: str) -> Graph:
    try:
        return parse_edge_list(Path(path_arg).read_text())
    except ParseError as exc:
        _fail_input(f"{path_arg}: {exc}")


def _family_graph(spec: str) -> Graph:
    name, _, rest = spec.partition(":")
    try:
        if name == "path":
            return path(int(rest))
        if name == "cycle":
            return cycle(int(rest))
        if name == "complete":
            return complete(int(rest))
        if name == "complete_bipartite":
            m, n = rest.split(",")
            return complete_bipartite(int(m), int(n))
        if name == "tree":
            parents = [None if tok == "-" else int(tok) for tok in rest.split(",")]
            return tree_from_parent_array(parents)
    except ValueError as exc:
        _fail_input(f"bad family spec {spec!r}: {exc}")
    _fail_input(f"unknown family {name!r} (use path/cycle/complete/complete_bipartite/tree)")


def _resolve_graph(graph_file: str | None, family: str | None) -> Graph:
    if graph_file is not None and family is not None:
        raise click.UsageError("provide exactly one of GRAPH_FILE or --family")
    if graph_file is not None:
        return _load_graph(graph_file)
    if family is not None:
        return _family_graph(family)
    raise click.UsageError("provide exactly one of GRAPH_FILE or --family")


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _fmt_opt(value: int | None) -> str:
    return "none" if value is None else str(value)


def _fmt_set(elements: list[int]) -> str:
    return "{" + ",".join(map(str, elements)) + "}"


def _jline(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _echo_labeling(labels: list[list[int]]) -> None:
    for v, elems in enumerate(labels):
        click.echo(f"{v}: {_fmt_set(elems)}")


@click.group()
@click.version_option(package_name="iasi")
def main() -> None:
    """Integer additive set-indexers: verify, construct, decide, search."""


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("labeling_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--expect-uniform", type=int, default=None, help="Exit 0 iff uniform_k equals this value.")
@click.option("--expect-weakly", type=int, default=None, help="Exit 0 iff is_weakly_uniform equals this value.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def verify(graph_file: str, labeling_file: str, expect_uniform: int | None, expect_weakly: int | None, fmt: str) -> None:
    """Verify a labeling file against a graph file."""
    g = _load_graph(graph_file)
    try:
        labeling = parse_labeling(Path(labeling_file).read_text(), g)
    except ParseError as exc:
        _fail_input(f"{labeling_file}: {exc}")
    payload = {
        "graph": _graph_payload(g),
        "labels": [list(lab.elements) for lab in labeling.labels],
        "expect_uniform": expect_uniform,
        "expect_weakly": expect_weakly,
    }
    data = _post("/verify", payload)
    report = data["report"]
    expectation_met = data["expectation_met"]
    if fmt == "text":
        for field in ("vertex_injective", "edge_injective", "is_iasi", "is_weak"):
            click.echo(f"{field}: {_fmt_bool(report[field])}")
        click.echo(f"uniform_k: {_fmt_opt(report['uniform_k'])}")
        click.echo(f"is_weakly_uniform: {_fmt_opt(report['is_weakly_uniform'])}")
        for edge in report["edges"]:
            click.echo(f"edge {edge['u']} {edge['v']}: {_fmt_set(edge['label'])} size={edge['size']}")
        for witness in report["witnesses"]:
            click.echo(f"witness: {witness}")
        if expectation_met is not None:
            field = "uniform_k" if expect_uniform is not None else "is_weakly_uniform"
            k = expect_uniform if expect_uniform is not None else expect_weakly
            click.echo(f"expect {field}={k}: {'pass' if expectation_met else 'fail'}")
    else:
        summary = {key: report[key] for key in (
            "vertex_injective", "edge_injective", "is_iasi", "is_weak", "uniform_k", "is_weakly_uniform",
        )}
        click.echo(_jline({"type": "report", **summary}))
        for edge in report["edges"]:
            click.echo(_jline({"type": "edge", **edge}))
        for witness in report["witnesses"]:
            click.echo(_jline({"type": "witness", "message": witness}))
        if expectation_met is not None:
            field = "uniform_k" if expect_uniform is not None else "is_weakly_uniform"
            k = expect_uniform if expect_uniform is not None else expect_weakly
            click.echo(_jline({"type": "expect", "field": field, "k": k, "met": expectation_met}))
    sys.exit(0 if expectation_met in (None, True) else 1)


@main.command()
@click.argument("mode", type=click.Choice(["weakly", "bipartite", "odd"]))
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--family", default=None, help="Graph family shortcut, e.g. cycle:5 or tree:-,0,0,1,1.")
@click.option("--k", type=int, default=None, help="Target uniformity.")
@click.option("--m", type=int, default=None, help="Left-side AP length override.")
@click.option("--n", type=int, default=None, help="Right-side AP length override.")
@click.option("--d", type=int, default=None, help="AP common difference (default 1).")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def construct(mode: str, graph_file: str | None, family: str | None, k: int | None,
              m: int | None, n: int | None, d: int | None, fmt: str) -> None:
    """Construct a verified labeling; prints it in the labeling file format."""
    g = _resolve_graph(graph_file, family)
    payload = {"graph": _graph_payload(g), "mode": mode, "k": k, "m": m, "n": n, "d": d}
    data = _post("/construct", payload)
    if data["status"] == "infeasible":
        if fmt == "text":
            click.echo("infeasible: not bipartite")
            click.echo("odd_cycle: " + " ".join(map(str, data["odd_cycle"])))
        else:
            click.echo(_jline({"type": "infeasible", "kind": "not_bipartite", "odd_cycle": data["odd_cycle"]}))
        sys.exit(1)
    if fmt == "text":
        _echo_labeling(data["labels"])
    else:
        for v, elems in enumerate(data["labels"]):
            click.echo(_jline({"type": "vertex", "vertex": v, "label": elems}))
    sys.exit(0)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--family", default=None, help="Graph family shortcut, e.g. cycle:5.")
@click.option("--k", type=int, required=True)
@click.option("--weakly", is_flag=True, default=False, help="Decide weakly k-uniform existence instead.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def decide(graph_file: str | None, family: str | None, k: int, weakly: bool, fmt: str) -> None:
    """Decide existence of a (weakly) k-uniform labeling; exit 0 iff it exists."""
    g = _resolve_graph(graph_file, family)
    data = _post("/decide", {"graph": _graph_payload(g), "k": k, "weakly": weakly})
    certificate = data["certificate"]
    if fmt == "text":
        click.echo(f"exists: {_fmt_bool(data['exists'])}")
        click.echo(f"rule: {data['rule']}")
        if certificate:
            if certificate.get("odd_cycle") is not None:
                click.echo("odd_cycle: " + " ".join(map(str, certificate["odd_cycle"])))
            else:
                click.echo("left: " + " ".join(map(str, certificate["left"])))
                click.echo("right: " + " ".join(map(str, certificate["right"])))
    else:
        click.echo(_jline({"type": "decision", "exists": data["exists"], "rule": data["rule"]}))
        if certificate:
            fields = {key: val for key, val in certificate.items() if val is not None}
            click.echo(_jline({"type": "certificate", **fields}))
    sys.exit(0 if data["exists"] else 1)


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--family", default=None, help="Graph family shortcut, e.g. cycle:5.")
@click.option("--mode", type=click.Choice(["uniform", "weakly"]), required=True)
@click.option("--k", type=int, required=True)
@click.option("--universe", type=int, default=12, show_default=True, help="Labels draw from {0..U}.")
@click.option("--max-size", type=int, default=4, show_default=True, help="Largest label size (uniform mode).")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True, help="Step budget before aborting.")
@click.option("--all", "limit", type=click.IntRange(min=1), default=1, show_default=True,
              help="Collect up to N labelings instead of the first.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def search(graph_file: str | None, family: str | None, mode: str, k: int, universe: int,
           max_size: int, budget: int, limit: int, fmt: str) -> None:
    """Exhaustively search a bounded label universe; ground truth for small graphs."""
    g = _resolve_graph(graph_file, family)
    payload = {
        "graph": _graph_payload(g),
        "mode": mode,
        "k": k,
        "universe_max": universe,
        "max_label_size": max_size,
        "budget": budget,
        "limit": limit,
    }
    data = _post("/search", payload)
    status = data["status"]
    if fmt == "text":
        for i, labels in enumerate(data["labelings"]):
            if i:
                click.echo("")
            _echo_labeling(labels)
        if status != "found":
            click.echo(status)
    else:
        for i, labels in enumerate(data["labelings"]):
            click.echo(_jline({"type": "labeling", "index": i, "labels": labels}))
        click.echo(_jline({
            "type": "status", "status": status, "count": len(data["labelings"]), "steps": data["steps"],
        }))
    sys.exit({"found": 0, "exhausted": 1, "aborted": 3}[status])


if __name__ == "__main__":
    main()
