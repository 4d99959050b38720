"""
exlines command line.

    exlines verify e6-lines
    exlines count fano-heptads
    exlines table triangle-pairs --format json
    exlines export structure-constants-e8 e8.json
    exlines group hesse --orbits
    exlines algebra build e7 --theta 3 --check jacobi,module

stdout carries data only; logs and progress bars go to stderr.
Exit codes: 0 pass, 1 verification or IO failure, 2 usage error.
"""

import logging
import sys
from typing import List, Optional

import typer

from cli.registry import COUNTS, EXPORTS, GROUPS, TABLES, group_document, names
from config.settings import Settings, configure_logging, load_settings
from jobs.algebra_job import e7_model, e8_model, grading_report, jacobi_report, v56_module
from liealg.mod import multiplicative_od
from liealg.module56 import module_axiom_failure
from liealg.structure import StructureConstantAlgebra
from models.models import CheckSpec, SuiteContext, VerificationReport
from orchestrator.orchestrator import VerificationOrchestrator, expand, suite_names
from storage.json_repo import ArtifactError, JsonArtifactRepository, canonical_json, round_trips
from utils.formatting import FORMATS, render_csv, render_report, render_text

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

ALGEBRA_CHECKS = ("jacobi", "grading", "module", "mod")

app = typer.Typer(add_completion=False, no_args_is_help=True, help="Exceptional line configurations and O-graded Lie algebras.")
algebra_app = typer.Typer(no_args_is_help=True, help="Build the O-graded models of e7 and e8.")
app.add_typer(algebra_app, name="algebra")


# ==============================================================
# HELPERS
# ==============================================================

def usage_error(message: str) -> typer.Exit:
    typer.echo(f"error: {message}", err=True)
    return typer.Exit(code=EXIT_USAGE)


def settings_of(ctx: typer.Context) -> Settings:
    return ctx.obj if isinstance(ctx.obj, Settings) else load_settings()


def make_context(settings: Settings, threads: Optional[int] = None, theta: Optional[int] = None) -> SuiteContext:
    try:
        resolved = settings.resolve_threads(threads)
    except ValueError as e:
        raise usage_error(str(e))
    return SuiteContext(
        threads=resolved,
        chunk_size=settings.runtime.jacobi_chunk_size,
        progress=settings.runtime.progress,
        theta_index=settings.models.theta_index if theta is None else theta,
        composition_samples=settings.octonion.composition_samples,
        seed=settings.octonion.seed,
    )


def check_name(name: str, registry, what: str) -> None:
    if name not in registry:
        raise usage_error(f"unknown {what} {name!r}; expected one of {', '.join(names(registry))}")


def check_theta(theta: Optional[int]) -> None:
    if theta is not None and not 0 <= theta <= 15:
        raise usage_error(f"--theta must be in 0..15, got {theta}")


def emit_reports(reports: List[VerificationReport], as_json: bool, timings: bool) -> None:
    if as_json:
        typer.echo(canonical_json({
            "schema": 1,
            "kind": "verification",
            "ok": all(r.ok for r in reports),
            "reports": [r.to_dict(timings) for r in reports],
        }), nl=False)
    else:
        for r in reports:
            typer.echo(render_report(r), nl=False)


@app.callback()
def main(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Override the configured log level."),
    config: Optional[str] = typer.Option(None, "--config", help="Path to an alternative settings.yml."),
):
    settings = load_settings(config)
    configure_logging(settings, log_level)
    ctx.obj = settings


# ==============================================================
# verify
# ==============================================================

@app.command()
def verify(
    ctx: typer.Context,
    suite: str = typer.Argument(..., help=f"One of: {', '.join(suite_names())}"),
    as_json: bool = typer.Option(False, "--json", help="Print the report as schema-1 JSON."),
    threads: Optional[int] = typer.Option(None, "--threads", envvar="EXLINES_THREADS",
                                          help="Verification workers; 0 means every core."),
    timings: Optional[bool] = typer.Option(None, "--timings/--no-timings",
                                           help="Include per-check seconds in JSON output."),
):
    """Run a verification suite; exit 0 iff every check passes."""
    settings = settings_of(ctx)
    try:
        targets = expand([suite])
    except ValueError as e:
        raise usage_error(str(e))

    orchestrator = VerificationOrchestrator(make_context(settings, threads))
    reports = [orchestrator.run_suite(name) for name in targets]
    emit_reports(reports, as_json, settings.reports.timings if timings is None else timings)
    raise typer.Exit(code=EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED)


# ==============================================================
# count / table
# ==============================================================

@app.command()
def count(name: str = typer.Argument(..., help=f"One of: {', '.join(COUNTS)}")):
    """Print the exact size of a configuration."""
    check_name(name, COUNTS, "count")
    typer.echo(COUNTS[name]())


@app.command()
def table(
    name: str = typer.Argument(..., help=f"One of: {', '.join(TABLES)}"),
    fmt: str = typer.Option("text", "--format", help="text, json or csv"),
    theta: Optional[int] = typer.Option(None, "--theta", help="θ table index for the theta table."),
):
    """Print one of the reference tables."""
    check_name(name, TABLES, "table")
    if fmt not in FORMATS:
        raise usage_error(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    check_theta(theta)

    result = TABLES[name](theta or 0)
    if fmt == "json":
        typer.echo(canonical_json(result.to_dict()), nl=False)
    elif fmt == "csv":
        typer.echo(render_csv(result), nl=False)
    else:
        typer.echo(render_text(result), nl=False)


# ==============================================================
# export
# ==============================================================

@app.command()
def export(
    ctx: typer.Context,
    what: str = typer.Argument(..., help=f"One of: {', '.join(EXPORTS)}"),
    path: str = typer.Argument(..., help="Destination JSON file."),
    theta: Optional[int] = typer.Option(None, "--theta", help="θ table index for e7, V56 and octonion exports."),
):
    """Write a schema-1 JSON document and check that it reads back unchanged."""
    if not what:
        raise usage_error("export needs a registry name")
    check_name(what, EXPORTS, "export")
    check_theta(theta)

    context = make_context(settings_of(ctx), theta=theta)
    repo = JsonArtifactRepository()
    try:
        payload = EXPORTS[what](context)
        repo.save(path, payload)
        if not round_trips(repo, path, payload):
            raise ArtifactError(f"{path} does not read back to the exported document")
    except ArtifactError as e:
        logger.error(f"✗ Export failed: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_FAILED)
    typer.echo(path)


# ==============================================================
# group
# ==============================================================

@app.command()
def group(
    name: str = typer.Argument(..., help=f"One of: {', '.join(GROUPS)}"),
    order: bool = typer.Option(True, "--order/--no-order", help="Print the group order."),
    orbits: bool = typer.Option(False, "--orbits", help="Print the orbit sizes."),
    as_json: bool = typer.Option(False, "--json", help="Print generators as image arrays."),
):
    """Order and orbits of one of the permutation groups."""
    check_name(name, GROUPS, "group")
    g = GROUPS[name]()
    if as_json:
        typer.echo(canonical_json(group_document(name, g)), nl=False)
        return
    typer.echo(f"degree = {g.degree}")
    if order:
        typer.echo(f"order = {g.order()}")
    if orbits:
        typer.echo("orbits = " + " ".join(str(len(o)) for o in g.orbits()))


# ==============================================================
# algebra build
# ==============================================================

def algebra_checks(model_name: str, wanted: List[str], context: SuiteContext,
                   verify_on_build: bool = False) -> List[CheckSpec]:
    """The dimension check, the requested ones, and Jacobi when verify_on_build is set."""
    build = e7_model if model_name == "e7" else e8_model
    checks = [CheckSpec("dimension", 133 if model_name == "e7" else 248, lambda: build(context).dim)]
    if "jacobi" in wanted or verify_on_build:
        checks.append(CheckSpec("Jacobi on all ordered triples", True,
                                lambda: jacobi_report(context, build(context)).ok))
    if "grading" in wanted:
        checks.append(CheckSpec("O-grading law", True, lambda: grading_report(context, build(context)).ok))
    if "module" in wanted:
        checks.append(CheckSpec("V56 module axiom", True, lambda: module_axiom_failure(v56_module(context)) is None))
    if "mod" in wanted:
        checks.append(CheckSpec("multiplicative orthogonal decomposition", True,
                                lambda: multiplicative_od(build(context)).ok))
    return checks


@algebra_app.command("build")
def algebra_build(
    ctx: typer.Context,
    model: str = typer.Argument(..., help="e7 or e8"),
    theta: Optional[int] = typer.Option(None, "--theta", help="θ table index (e7 only)."),
    check: str = typer.Option("", "--check", help=f"Comma-separated subset of {','.join(ALGEBRA_CHECKS)}."),
    output: Optional[str] = typer.Option(None, "--output", "-o", help="Also write the structure constants here."),
    threads: Optional[int] = typer.Option(None, "--threads", envvar="EXLINES_THREADS"),
    as_json: bool = typer.Option(False, "--json"),
):
    """Build a model, print its provenance and run the requested checks."""
    if model not in ("e7", "e8"):
        raise usage_error(f"model must be e7 or e8, got {model!r}")
    check_theta(theta)
    if theta is not None and model == "e8":
        raise usage_error("--theta applies to e7 only; the e8 signs are solved")
    wanted = [c.strip() for c in check.split(",") if c.strip()]
    unknown = [c for c in wanted if c not in ALGEBRA_CHECKS]
    if unknown:
        raise usage_error(f"unknown check(s) {', '.join(unknown)}; expected a subset of {','.join(ALGEBRA_CHECKS)}")
    if "module" in wanted and model != "e7":
        raise usage_error("the module check applies to e7 (V56)")
    if "mod" in wanted and model != "e8":
        raise usage_error("the mod check applies to e8")

    settings = settings_of(ctx)
    context = make_context(settings, threads, theta)
    orchestrator = VerificationOrchestrator(context)
    report = VerificationReport(f"{model}-build")
    for spec in algebra_checks(model, wanted, context, settings.models.verify_on_build):
        report.checks.append(orchestrator.run_check(spec))

    if report.ok:
        built = (e7_model if model == "e7" else e8_model)(context)
        if output:
            repo = JsonArtifactRepository()
            try:
                repo.save(output, built.algebra.to_dict())
            except ArtifactError as e:
                typer.echo(f"error: {e}", err=True)
                raise typer.Exit(code=EXIT_FAILED)
        if not as_json:
            for key, value in sorted(built.provenance.items()):
                typer.echo(f"{key} = {value}")
    emit_reports([report], as_json, timings=False)
    raise typer.Exit(code=EXIT_OK if report.ok else EXIT_FAILED)


def load_algebra(path: str) -> StructureConstantAlgebra:
    """Re-import an exported structure-constant document."""
    return StructureConstantAlgebra.from_dict(JsonArtifactRepository().load(path, "structure_constants"))


def run() -> None:
    app(prog_name="exlines")


if __name__ == "__main__":
    sys.exit(run())
