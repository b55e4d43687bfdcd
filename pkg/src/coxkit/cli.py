"""Command-line surface: nested-set enumeration, Cartan-diagrammatic verdicts,
and the named verification suites.

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage or fixture
errors.  Reports are byte-identical across runs unless timing is requested.
"""

from __future__ import annotations

import json
import sys

import click

from .diagrams import (
    Diagram,
    chain_move_classes,
    chain_to_nested_set,
    enumerate_chains,
    enumerate_nested_sets,
)
from .fixtures import (
    FixtureError,
    fixture_names,
    load_fixture_file,
    named_fixture,
    parse_rational_matrix,
)
from .realizations import cartan_diagrammatic_test
from .report import SuiteReport
from .suites import SUITE_NAMES, run_suite

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _fail_usage(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(USAGE_ERROR)


def _load(fixture, name, expected_type):
    if (fixture is None) == (name is None):
        _fail_usage("provide exactly one of --fixture or --name")
    try:
        obj = load_fixture_file(fixture) if fixture else named_fixture(name)
    except FixtureError as exc:
        _fail_usage(str(exc))
    if not isinstance(obj, expected_type):
        _fail_usage(f"fixture is not a {expected_type.__name__}")
    return obj


def _parse_vertices(diagram: Diagram, spec: str | None, default: int) -> int:
    if spec is None:
        return default
    if spec.strip() == "":
        return 0
    try:
        verts = [int(x) for x in spec.split(",")]
    except ValueError:
        _fail_usage(f"bad vertex list {spec!r}")
    return diagram.subdiagram_mask(verts)


@click.group()
def main():
    """Exact verification toolkit for diagram combinatorics, Kac-Moody
    realizations, and quantum Weyl group operators."""


@main.command("fixtures")
def cmd_fixtures():
    """List the named fixtures shipped with the package."""
    for name in fixture_names():
        click.echo(name)


@main.command("enumerate")
@click.option("--fixture", type=click.Path(), help="diagram fixture file")
@click.option("--name", help="named diagram fixture")
@click.option("-B", "--base", "base_spec", help="comma-separated base vertices (default: all)")
@click.option("-L", "--lower", "lower_spec", help="comma-separated lower vertices (default: empty)")
@click.option("--maximal", is_flag=True, help="only maximal nested sets / chains")
@click.option("--chains", "show_chains", is_flag=True, help="enumerate chains with their nested-set images")
@click.option("--count-only", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_enumerate(fixture, name, base_spec, lower_spec, maximal, show_chains, count_only, fmt):
    """Enumerate nested sets or chains on a diagram fixture."""
    diagram = _load(fixture, name, Diagram)
    base = _parse_vertices(diagram, base_spec, diagram.full_mask)
    lower = _parse_vertices(diagram, lower_spec, 0)
    if lower & ~base:
        _fail_usage("lower diagram is not contained in the base")

    def mask_list(m):
        return diagram.vertices_of(m)

    if show_chains:
        chains = enumerate_chains(diagram, base, lower, maximal_only=maximal)
        classes = chain_move_classes(diagram, base, lower)
        class_of = {}
        for ci, cls in enumerate(classes):
            for c in cls:
                class_of[c.steps] = ci
        if count_only:
            payload = {"chains": len(chains), "move_classes": len(classes)}
        else:
            payload = {
                "chains": [
                    {
                        "steps": [mask_list(s) for s in c.steps],
                        "class": class_of[c.steps],
                        "nested_set": sorted(
                            mask_list(m) for m in chain_to_nested_set(c).members
                        ),
                    }
                    for c in chains
                ],
                "move_classes": len(classes),
            }
    else:
        found = enumerate_nested_sets(diagram, base, lower, maximal_only=maximal)
        if count_only:
            payload = {"count": len(found)}
        else:
            payload = {
                "count": len(found),
                "nested_sets": [
                    sorted(mask_list(m) for m in ns.members) for ns in found
                ],
            }
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _echo_text(payload)


def _echo_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                click.echo(f"{pad}{k}:")
                _echo_text(v, indent + 1)
            else:
                click.echo(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                _echo_text(item, indent)
                click.echo("")
            else:
                click.echo(f"{pad}- {item}")


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


@main.command("diagrammatic")
@click.option("--fixture", type=click.Path(), help="matrix fixture file")
@click.option("--name", help="named matrix fixture")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_diagrammatic(fixture, name, fmt):
    """Cartan-diagrammatic verdict for a square rational matrix."""
    matrix = _load(fixture, name, list)
    if any(len(row) != len(matrix) for row in matrix):
        _fail_usage("matrix must be square")
    verdict = cartan_diagrammatic_test(matrix)
    payload = {"verdict": verdict.kind, "witness": verdict.witness}
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(f"verdict: {verdict.kind}")
        if verdict.witness:
            click.echo(f"witness: {verdict.witness}")


@main.command("verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--break-coefficient", is_flag=True,
              help="run the associator suite with a perturbed 2-jet coefficient")
@click.option("--with-timing", is_flag=True, help="include timings in JSON output")
def cmd_verify(suite, fmt, break_coefficient, with_timing):
    """Run a named verification suite; exit 0 iff every check passes."""
    report = run_suite(suite, break_coefficient=break_coefficient)
    if fmt == "json":
        click.echo(report.to_json(with_timing=with_timing))
    else:
        click.echo(report.to_text())
    if not report.ok:
        sys.exit(CHECK_FAILURE)


if __name__ == "__main__":
    main()
