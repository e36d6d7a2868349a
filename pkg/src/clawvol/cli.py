"""Command-line front end.

Verbs: vertices, facets, volume, degree, assemble, verify, lemma, table.
Output is deterministic; identical commands give byte-identical results.

Exit codes: 0 success, 1 verification failure (a refuted claim or a
cross-check mismatch), 2 usage error, 3 guard-rail refusal.  Guard rails
can be lifted with --override-guard or the CLAWVOL_OVERRIDE_GUARD
environment variable.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import serialize
from .clawpoly import facets as claw_facets
from .clawpoly import group_from_cli, model_lattice_index
from .clawpoly import vertices as claw_vertices
from .cuts import LEMMA_GROUPS, LEMMA_IDS, run_lemma
from .formulas import degree_table
from .geometry import GuardRailError
from .serialize import rat_to_str
from .verify import METHODS, degree_by_method, verify_degree, verify_doc, verify_text

GUARD_ENV = "CLAWVOL_OVERRIDE_GUARD"


def _fail(code: int, kind: str, message: str) -> None:
    message = " ".join(str(message).split())
    sys.stderr.write(f"clawvol: error: {kind}: {message}\n")
    sys.exit(code)


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except GuardRailError as exc:
            _fail(3, "guard-rail", str(exc))
        except ValueError as exc:
            _fail(2, "usage", str(exc))

    return wrapper


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check_format(fmt: str, allowed: tuple[str, ...]) -> None:
    if fmt not in allowed:
        raise ValueError(
            f"format {fmt!r} is not valid here; choose from: {', '.join(allowed)}")


_group_option = click.option(
    "--group", "group_name", required=True,
    help="Group: z2, z2xz2, or z3.")
_n_option = click.option("--n", "n", type=int, required=True,
                         help="Number of leaves (n >= 2).")
_output_option = click.option("--output", "output", default=None,
                              type=click.Path(dir_okay=False, writable=True),
                              help="Write to this file instead of stdout.")
_guard_option = click.option(
    "--override-guard", "override_guard", is_flag=True, envvar=GUARD_ENV,
    help="Lift the size guard rails on geometric computations.")


@click.group()
@click.version_option(package_name="clawvol")
def main() -> None:
    """Exact lattice volumes and degrees for claw-tree model polytopes."""


@main.command("vertices")
@_group_option
@_n_option
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json", "ext"]))
@_output_option
@_handle_errors
def vertices_cmd(group_name: str, n: int, fmt: str, output: str | None) -> None:
    """List the polytope's vertices."""
    group = group_from_cli(group_name)
    vp = claw_vertices(group, n)
    if fmt == "text":
        lines = [" ".join(rat_to_str(x) for x in v) for v in vp.vertices]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = serialize.dumps(serialize.vpolytope_to_doc(vp))
    else:
        text = serialize.write_ext(vp)
    _emit(text, output)


@main.command("facets")
@_group_option
@_n_option
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json", "ine"]))
@_output_option
@_handle_errors
def facets_cmd(group_name: str, n: int, fmt: str, output: str | None) -> None:
    """List the facet inequalities <a, x> <= b."""
    group = group_from_cli(group_name)
    hp = claw_facets(group, n)
    if fmt == "text":
        lines = [
            " ".join(rat_to_str(x) for x in h.normal) + " <= " + rat_to_str(h.offset)
            for h in hp.halfspaces
        ]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = serialize.dumps(serialize.hpolytope_to_doc(hp))
    else:
        text = serialize.write_ine(hp)
    _emit(text, output)


@main.command("volume")
@_group_option
@_n_option
@click.option("--method", "method", default="triangulation",
              type=click.Choice(list(METHODS)))
@_output_option
@_guard_option
@_handle_errors
def volume_cmd(group_name: str, n: int, method: str, output: str | None,
               override_guard: bool) -> None:
    """Lattice volume of the polytope in the standard lattice Z^d."""
    group = group_from_cli(group_name)
    value = degree_by_method(group, n, method, allow_big=override_guard)
    value *= model_lattice_index(group)
    _emit(rat_to_str(value) + "\n", output)


@main.command("degree")
@_group_option
@_n_option
@click.option("--method", "method", default="formula",
              type=click.Choice(list(METHODS)))
@_output_option
@_guard_option
@_handle_errors
def degree_cmd(group_name: str, n: int, method: str, output: str | None,
               override_guard: bool) -> None:
    """Degree: the volume measured in the model lattice."""
    group = group_from_cli(group_name)
    value = degree_by_method(group, n, method, allow_big=override_guard)
    _emit(rat_to_str(value) + "\n", output)


@main.command("assemble")
@_group_option
@_n_option
@_output_option
@_handle_errors
def assemble_cmd(group_name: str, n: int, output: str | None) -> None:
    """Degree by the arithmetic inclusion-exclusion route."""
    group = group_from_cli(group_name)
    value = degree_by_method(group, n, "inclusion-exclusion")
    _emit(rat_to_str(value) + "\n", output)


@main.command("verify")
@_group_option
@_n_option
@click.option("--method", "methods", multiple=True, default=("all",),
              type=click.Choice(["all", *METHODS]))
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
@_output_option
@_guard_option
@_handle_errors
def verify_cmd(group_name: str, n: int, methods: tuple[str, ...], fmt: str,
               output: str | None, override_guard: bool) -> None:
    """Cross-check the degree by independent methods; exit 1 on mismatch."""
    group = group_from_cli(group_name)
    selected: tuple[str, ...] = ()
    for m in methods:
        picked = METHODS if m == "all" else (m,)
        selected += tuple(p for p in picked if p not in selected)
    result = verify_degree(group, n, selected, allow_big=override_guard)
    if fmt == "text":
        text = verify_text(result)
    else:
        text = serialize.dumps(verify_doc(result))
    _emit(text, output)
    if not result.consistent:
        _fail(1, "verify", f"methods disagree for group={group.name} n={n}")


@main.command("lemma")
@click.option("--lemma", "lemma_id", required=True,
              type=click.Choice(list(LEMMA_IDS)))
@_n_option
@click.option("--group", "group_name", default=None,
              help="Optional; must match the lemma's group.")
@click.option("--format", "fmt", default="text",
              type=click.Choice(["text", "json"]))
@_output_option
@_guard_option
@_handle_errors
def lemma_cmd(lemma_id: str, n: int, group_name: str | None, fmt: str,
              output: str | None, override_guard: bool) -> None:
    """Check every instance of one claim family; exit 1 on any refutation."""
    expected_group = LEMMA_GROUPS[lemma_id]
    if group_name is not None and group_from_cli(group_name) is not expected_group:
        raise ValueError(
            f"lemma {lemma_id} concerns group {expected_group.name}, "
            f"not {group_name}")
    records = run_lemma(lemma_id, n, allow_big=override_guard)
    if fmt == "json":
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    else:
        lines = []
        for r in records:
            hyp = json.dumps(r["hypothesis"], sort_keys=True)
            lines.append(
                f"{r['lemma']} {hyp} expected={r['expected']} "
                f"computed={r['computed']} {r['verdict']}")
        text = "\n".join(lines) + "\n"
    _emit(text, output)
    refuted = sum(1 for r in records if r["verdict"] != "confirmed")
    if refuted:
        _fail(1, "lemma",
              f"{refuted} of {len(records)} instances refuted for "
              f"{lemma_id} at n={n}")


def _parse_n_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad n range {text!r}; use N or N..M") from None
    return lo, hi


@main.command("table")
@_group_option
@click.option("--n", "n_range", required=True,
              help="Single n or inclusive range N..M.")
@click.option("--format", "fmt", default="csv",
              type=click.Choice(["text", "json", "csv"]))
@_output_option
@_guard_option
@_handle_errors
def table_cmd(group_name: str, n_range: str, fmt: str, output: str | None,
              override_guard: bool) -> None:
    """Tabulate degrees over a range of n."""
    group = group_from_cli(group_name)
    lo, hi = _parse_n_range(n_range)
    rows = degree_table(group, lo, hi, allow_big=override_guard)
    if fmt == "csv":
        lines = ["group,n,degree"]
        lines += [f"{group.name},{n},{deg}" for n, deg in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        data = [{"group": group.name, "n": n, "degree": deg} for n, deg in rows]
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"{group.name} {n} {deg}" for n, deg in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, output)


if __name__ == "__main__":
    main()
