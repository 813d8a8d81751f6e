"""Command-line interface: solve, explain, whatif, convert, serve."""

import json
import logging
import os
import sys
from pathlib import Path

import click

from .core import Semantics
from .errors import DisputeKitError, IncompatibleTask
from .explain import (
    compute_standings,
    dispute_tree,
    reduce_framework,
    render_dispute_tree,
    status_report,
    what_if,
)
from .formats import (
    Document,
    DocumentKind,
    OracleMismatch,
    ProblemTask,
    TaskKind,
    cross_check,
    delta_to_obj,
    document_of,
    edit_from_obj,
    parse_apx,
    parse_document,
    parse_tgf,
    run_task,
    serialize_apx,
    serialize_document,
    serialize_tgf,
)
from .variants import AudienceOrder

log = logging.getLogger("disputekit")


def _configure_logging() -> None:
    level = os.environ.get("DISPUTEKIT_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_document(path: str, fmt: str | None) -> Document:
    if fmt is None:
        suffix = Path(path).suffix.lower().lstrip(".")
        fmt = suffix if suffix in ("tgf", "apx", "json") else "json"
    text = _read_input(path)
    if fmt == "tgf":
        return document_of(parse_tgf(text))
    if fmt == "apx":
        return document_of(parse_apx(text))
    return parse_document(text)


def _audience_option(value: str | None) -> AudienceOrder | None:
    if value is None:
        return None
    return AudienceOrder([v.strip() for v in value.split(",") if v.strip()])


_SEMANTICS = click.Choice([s.value for s in Semantics])
_TASKS = click.Choice([t.value for t in TaskKind])
_FORMATS = click.Choice(["tgf", "apx", "json"])


def _fail(exc: Exception) -> None:
    code = getattr(exc, "code", "error")
    click.echo(f"error [{code}]: {exc}", err=True)
    sys.exit(1)


@click.group()
def main() -> None:
    """Argumentation workbench for modelling and deciding disputes."""
    _configure_logging()


@main.command()
@click.argument("document", type=str)
@click.option("--format", "fmt", type=_FORMATS, default=None, help="Input format; inferred from the extension by default.")
@click.option("--semantics", type=_SEMANTICS, default="GR", show_default=True)
@click.option("--task", type=_TASKS, default="SE", show_default=True)
@click.option("--argument", default=None, help="Query argument for DC/DS tasks.")
@click.option("--audience", default=None, help="Comma-separated value ranking; overrides the document order.")
@click.option("--require-backing", is_flag=True, help="Exclude case-file arguments without backing.")
@click.option("--oracle", is_flag=True, help="Cross-check the solver against brute force; fail on mismatch.")
def solve(document, fmt, semantics, task, argument, audience, require_backing, oracle):
    """Run one solver task against a dispute document."""
    try:
        doc = _load_document(document, fmt)
        aud = _audience_option(audience)
        problem = ProblemTask(TaskKind(task), Semantics(semantics), argument)
        output = run_task(doc, problem, aud, require_backing)
        if oracle:
            cross_check(doc, aud, require_backing)
        click.echo(output, nl=False)
    except (DisputeKitError, OracleMismatch, OSError) as exc:
        _fail(exc)


_REPORT_HEADER = "id\tstatus\tcredulous\tskeptical\tdefeaters\tdefenders\tcondition\texternal"


def _report_tsv(report) -> str:
    lines = [_REPORT_HEADER]
    for e in report.entries:
        defenders = ",".join(
            f"{attacker}:{'+'.join(ds)}" for attacker, ds in sorted(e.defenders.items()) if ds
        )
        lines.append(
            "\t".join(
                [
                    e.id,
                    e.status.value,
                    str(e.credulous).lower(),
                    str(e.skeptical).lower(),
                    ",".join(e.defeaters),
                    defenders,
                    e.condition or "",
                    "" if e.external is None else str(e.external).lower(),
                ]
            )
        )
    for note in report.notes:
        lines.append(f"# note: {note}")
    return "\n".join(lines) + "\n"


@main.command()
@click.argument("document", type=str)
@click.option("--format", "fmt", type=_FORMATS, default=None)
@click.option("--semantics", type=_SEMANTICS, default="GR", show_default=True)
@click.option("--argument", default=None, help="Explain one argument with its dispute tree.")
@click.option("--audience", default=None)
@click.option("--require-backing", is_flag=True)
@click.option("--verbosity", type=click.IntRange(0, 2), default=1, show_default=True)
@click.option("--figures", "figures_dir", type=click.Path(file_okay=False), default=None,
              help="Also render the dispute graph (and tree) as PNG files here.")
def explain(document, fmt, semantics, argument, audience, require_backing, verbosity, figures_dir):
    """Report argument standings; with --argument, print its dispute tree."""
    try:
        doc = _load_document(document, fmt)
        aud = _audience_option(audience)
        sem = Semantics(semantics)
        report = status_report(doc.framework, sem, aud or doc.audience, require_backing)
        if argument is None:
            click.echo(_report_tsv(report), nl=False)
        else:
            f = reduce_framework(doc.framework, aud or doc.audience, require_backing)
            tree = dispute_tree(f, argument)
            click.echo(render_dispute_tree(tree, f, verbosity), nl=False)
        if figures_dir is not None:
            from .figures import render_dispute_tree_figure, render_framework_figure

            Path(figures_dir).mkdir(parents=True, exist_ok=True)
            standings = compute_standings(doc.framework, sem, aud or doc.audience, require_backing)
            graph_path = str(Path(figures_dir) / "graph.png")
            render_framework_figure(doc, standings, graph_path)
            written = [graph_path]
            if argument is not None:
                f = reduce_framework(doc.framework, aud or doc.audience, require_backing)
                tree_path = str(Path(figures_dir) / f"dispute_{argument}.png")
                render_dispute_tree_figure(dispute_tree(f, argument), tree_path)
                written.append(tree_path)
            for path in written:
                click.echo(f"wrote {path}", err=True)
    except (DisputeKitError, OSError) as exc:
        _fail(exc)


@main.command()
@click.argument("document", type=str)
@click.option("--format", "fmt", type=_FORMATS, default=None)
@click.option("--edits", "edits_path", required=True, type=str,
              help="JSON file with an array of edit objects ('-' for stdin).")
@click.option("--semantics", type=_SEMANTICS, default="GR", show_default=True)
@click.option("--audience", default=None)
@click.option("--require-backing", is_flag=True)
def whatif(document, fmt, edits_path, semantics, audience, require_backing):
    """Preview the status changes a batch of edits would cause."""
    try:
        doc = _load_document(document, fmt)
        aud = _audience_option(audience)
        raw = json.loads(_read_input(edits_path))
        if not isinstance(raw, list):
            raise IncompatibleTask("edits file must hold a JSON array")
        edits = [edit_from_obj(o, f"$[{i}]") for i, o in enumerate(raw)]
        delta = what_if(doc.framework, edits, Semantics(semantics), aud or doc.audience, require_backing)
        click.echo(json.dumps(delta_to_obj(delta), indent=2) + "\n", nl=False)
    except (DisputeKitError, OSError, json.JSONDecodeError) as exc:
        _fail(exc)


@main.command()
@click.argument("document", type=str)
@click.option("--format", "fmt", type=_FORMATS, default=None)
@click.option("--to", "target", type=_FORMATS, required=True)
def convert(document, fmt, target):
    """Re-encode a document; TGF and APX cover plain attack graphs only."""
    try:
        doc = _load_document(document, fmt)
        if target == "json":
            click.echo(serialize_document(doc), nl=False)
            return
        if doc.kind != DocumentKind.AAF:
            raise IncompatibleTask(
                f"{target} carries plain attack graphs; convert a {doc.kind.value} document to json"
            )
        text = serialize_tgf(doc.framework) if target == "tgf" else serialize_apx(doc.framework)
        click.echo(text, nl=False)
    except (DisputeKitError, OSError) as exc:
        _fail(exc)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
@click.option("--journal-dir", type=click.Path(file_okay=False), default=None,
              help="Append-only per-session edit journals for crash recovery.")
def serve(host, port, journal_dir):
    """Start the interactive session service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(journal_dir), host=host, port=port)


if __name__ == "__main__":
    main()
