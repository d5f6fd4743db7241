"""Command-line client.

Thin front end over the report builders in :mod:`polyadj.service`: commands
parse JSON documents, call the same functions the HTTP service exposes (or
forward to a running service with ``--server``), and print one JSON
document on standard output.  Exit codes: 0 success (including negative
verdicts such as NotEquivalent), 2 malformed input, 3 unsupported input,
4 strictness required, 5 dimension mismatch, 6 incomplete fan.
"""

from __future__ import annotations

import json
import os
import sys

import click
import pydantic

from . import service
from .errors import (
    DimensionMismatch,
    IncompleteFan,
    NotStrict,
    ParseError,
    PolyadjError,
)
from .schemas import ALL_SCHEMAS, CayleyDoc, FanDoc, PolytopeDoc

EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_NOT_STRICT = 4
EXIT_DIMENSION = 5
EXIT_INCOMPLETE_FAN = 6

_ERROR_EXIT = {
    "ParseError": EXIT_PARSE,
    "NotStrict": EXIT_NOT_STRICT,
    "DimensionMismatch": EXIT_DIMENSION,
    "IncompleteFan": EXIT_INCOMPLETE_FAN,
}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, (ParseError, pydantic.ValidationError, json.JSONDecodeError)):
        return EXIT_PARSE
    if isinstance(exc, NotStrict):
        return EXIT_NOT_STRICT
    if isinstance(exc, DimensionMismatch):
        return EXIT_DIMENSION
    if isinstance(exc, IncompleteFan):
        return EXIT_INCOMPLETE_FAN
    if isinstance(exc, (PolyadjError, AssertionError)):
        return EXIT_UNSUPPORTED
    raise exc


def _fail(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(_exit_code(exc))


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _parse(model, raw):
    try:
        return model.model_validate(raw)
    except pydantic.ValidationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)


def _emit(payload):
    click.echo(json.dumps(payload, indent=2))


def _emit_model(model):
    _emit(model.model_dump())


def _remote(server: str, path: str, payload, params=None):
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=payload,
                          params=params or {}, timeout=300.0)
    body = response.json()
    if response.status_code >= 400:
        message = body.get("message", body) if isinstance(body, dict) else body
        click.echo(f"error: {message}", err=True)
        tag = body.get("error") if isinstance(body, dict) else None
        sys.exit(_ERROR_EXIT.get(tag, EXIT_UNSUPPORTED if response.status_code != 400 else EXIT_PARSE))
    _emit(body)


def _print_schemas(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    _emit({name: model.model_json_schema() for name, model in ALL_SCHEMAS.items()})
    ctx.exit(0)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Forward requests to a running polyadj service instead of "
                   "computing in-process.")
@click.option("--json-schema", is_flag=True, callback=_print_schemas,
              expose_value=False, is_eager=True,
              help="Print the JSON schemas of all wire formats and exit.")
@click.pass_context
def main(ctx, server):
    """Exact adjunction-theoretic invariants of lattice polytopes."""
    threads = os.environ.get("POLYADJ_THREADS")
    if threads is not None and (not threads.isdigit() or int(threads) < 1):
        click.echo(f"warning: ignoring invalid POLYADJ_THREADS={threads!r}", err=True)
    ctx.obj = {"server": server}


@main.command()
@click.argument("input", type=str)
@click.option("--classify", "with_classification", is_flag=True,
              help="Append the five-family classification verdict.")
@click.option("--no-ehrhart", is_flag=True,
              help="Skip lattice-point counting (degree/codegree/h* are null).")
@click.pass_context
def analyze(ctx, input, with_classification, no_ehrhart):
    """Full invariant report for a polytope.v1 document."""
    doc = _parse(PolytopeDoc, _load_json(input))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], "/analyze", doc.model_dump(),
                {"classify": with_classification, "ehrhart": not no_ehrhart})
        return
    try:
        report = service.analyze_polytope(
            doc.to_polytope(), with_classification, not no_ehrhart)
    except Exception as exc:  # noqa: BLE001 - translated to exit codes
        _fail(exc)
    _emit_model(report)


@main.group()
def cayley():
    """Generalized Cayley polytopes: build, recognize, analyze."""


@cayley.command("build")
@click.argument("input", type=str)
@click.pass_context
def cayley_build(ctx, input):
    """Construct the polytope of a cayley.v1 document."""
    doc = _parse(CayleyDoc, _load_json(input))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], "/cayley/build", doc.model_dump())
        return
    try:
        from .cayley import cayley_construct

        out = PolytopeDoc.from_polytope(cayley_construct(doc.to_spec()))
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    _emit_model(out)


@cayley.command("recognize")
@click.argument("input", type=str)
@click.option("-s", "order", type=click.IntRange(min=1), required=True,
              help="Order of the Cayley structure to search for.")
@click.option("-k", "k", type=click.IntRange(min=1), required=True,
              help="Number of factors minus one.")
@click.pass_context
def cayley_recognize(ctx, input, order, k):
    """Search a polytope.v1 document for a strict Cayley structure."""
    doc = _parse(PolytopeDoc, _load_json(input))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], "/cayley/recognize", doc.model_dump(),
                {"s": order, "k": k})
        return
    try:
        report = service.recognition_report(doc.to_polytope(), order, k)
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    _emit_model(report)


@cayley.command("analyze")
@click.argument("input", type=str)
@click.pass_context
def cayley_analyze(ctx, input):
    """Closed-form invariants of a cayley.v1 spec, cross-checked exactly."""
    doc = _parse(CayleyDoc, _load_json(input))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], "/cayley/analyze", doc.model_dump())
        return
    try:
        report = service.analyze_cayley(doc.to_spec())
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    _emit_model(report)


@main.command()
@click.argument("input_a", type=str)
@click.argument("input_b", type=str)
@click.pass_context
def equiv(ctx, input_a, input_b):
    """Decide affine unimodular equivalence of two polytope.v1 documents."""
    a = _parse(PolytopeDoc, _load_json(input_a))
    b = _parse(PolytopeDoc, _load_json(input_b))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], "/equiv",
                {"a": a.model_dump(), "b": b.model_dump()})
        return
    try:
        report = service.equivalence_report(a.to_polytope(), b.to_polytope())
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    _emit_model(report)


@main.command()
@click.argument("action",
                type=click.Choice(["polytope", "ample", "nef", "big", "effective"]))
@click.argument("input", type=str)
@click.pass_context
def fan(ctx, action, input):
    """Divisor queries on a fan.v1 document with coefficients."""
    doc = _parse(FanDoc, _load_json(input))
    if ctx.obj["server"]:
        _remote(ctx.obj["server"], f"/fan/{action}", doc.model_dump())
        return
    try:
        result = service.fan_query(doc, action)
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    if isinstance(result, PolytopeDoc):
        _emit_model(result)
    else:
        _emit(result)
