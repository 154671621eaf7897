#!/usr/bin/env python3
# main.py - homfly-bounds command line
"""
HOMFLY degree bounds toolkit.

    python main.py compute "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
    python main.py analyze diagram.json
    python main.py verify --corpus default --json out.json --md out.md
    python main.py skein-tree "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)" --dot tree.dot
"""
import logging
import os
import sys
from pathlib import Path
from typing import Optional

import typer

from src.bounds import build_report
from src.config import get_settings
from src.diagram import LinkDiagram, from_json, is_alternating, is_positive_diagram, parse_braid, parse_pd, stats
from src.errors import HomflyBoundsError
from src.homfly import SkeinEngine, highest_z_term, leaf_observations, max_deg_z, min_deg_v, skein_tree
from src.harness import load_corpus, render_markdown, run_verification, write_json_report, write_markdown_report
from src.seifert import analyze as analyze_graph
from src.seifert import build_seifert_graph

logger = logging.getLogger("homfly_bounds")

app = typer.Typer(add_completion=False, help="HOMFLY polynomials, Seifert graphs and degree bounds.")

_options: dict = {}


def _configure_logging(quiet: bool) -> None:
    level = logging.WARNING if quiet else getattr(logging, get_settings().log_level, logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


@app.callback()
def main(
    cap: Optional[int] = typer.Option(None, "--cap", help="Crossing cap for the skein engine."),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only log warnings and errors."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for the verification dispatch order."),
):
    _configure_logging(quiet)
    _options.update(cap=cap, seed=seed)


def _load_diagram(source: str, braid: bool) -> LinkDiagram:
    """A PD / braid string, or a file holding one (.json files use the diagram JSON form)."""
    name = None
    if os.path.isfile(source):
        path = Path(source)
        name = path.stem
        if path.suffix.lower() == ".json":
            return from_json(path.read_text(encoding="utf-8"))
        source = path.read_text(encoding="utf-8").strip()
    return parse_braid(source, name=name) if braid else parse_pd(source, name=name)


def _fail(error: Exception) -> None:
    typer.echo(f"error: {error}", err=True)
    raise typer.Exit(code=2)


def _engine() -> SkeinEngine:
    return SkeinEngine(cap=get_settings().with_overrides(crossing_cap=_options.get("cap")).crossing_cap)


@app.command()
def compute(
    source: str = typer.Argument(..., help="PD code, braid word or file."),
    braid: bool = typer.Option(False, "--braid", help="Read SOURCE as a braid word."),
):
    """Print the HOMFLY polynomial and its degree data."""
    try:
        d = _load_diagram(source, braid)
        p = _engine().homfly(d)
    except HomflyBoundsError as e:
        _fail(e)
    h = highest_z_term(p)
    typer.echo(p.to_text())
    typer.echo(f"min_deg_v: {min_deg_v(p)}")
    typer.echo(f"max_deg_z: {max_deg_z(p)}")
    typer.echo(f"h(v): {h.to_text()}")


@app.command()
def analyze(
    source: str = typer.Argument(..., help="PD code, braid word or file."),
    braid: bool = typer.Option(False, "--braid", help="Read SOURCE as a braid word."),
):
    """Print diagram statistics, the Seifert graph blocks and the bounds."""
    try:
        d = _load_diagram(source, braid)
        st = stats(d)
        graph = analyze_graph(build_seifert_graph(d))
        report = build_report(d, engine=_engine())
    except HomflyBoundsError as e:
        _fail(e)

    typer.echo(f"s={st.s} c={st.c} w={st.w} s+={st.s_plus} pieces={st.diagram_components}")
    typer.echo(f"blocks: {len(graph.blocks)}")
    for block in graph.blocks:
        typer.echo(f"  sign={block.sign.value} rank={block.rank} crossings={sorted(e.crossing for e in block.edges)}")
    typer.echo(f"homogeneous: {graph.is_homogeneous}")
    typer.echo(f"positive: {graph.is_positive}  negative: {graph.is_negative}")
    typer.echo(f"positive diagram: {is_positive_diagram(d)}  alternating: {is_alternating(d)}")
    if graph.is_homogeneous:
        typer.echo(f"rank: {graph.rank}  sum eps*rank: {graph.eps_rank_sum}")
    if report.sigma is not None:
        typer.echo(f"sigma: {report.sigma}")
    typer.echo(f"HOMFLY: {report.polynomial.to_text()}")
    for name, result in report.results.items():
        typer.echo(f"  {name}: {result.verdict.value} ({result.lhs} vs {result.rhs})")
    if report.violations:
        raise typer.Exit(code=1)


@app.command()
def verify(
    corpus: str = typer.Option("default", "--corpus", help="Corpus CSV/JSON, or 'default'."),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the JSON report here."),
    md_out: Optional[Path] = typer.Option(None, "--md", help="Write the markdown report here."),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Thread pool size."),
):
    """Run every check over a corpus and write the reports."""
    path = get_settings().corpus_path if corpus == "default" else Path(corpus)
    try:
        records = load_corpus(path)
    except HomflyBoundsError as e:
        _fail(e)

    summary = run_verification(records, cap=_options.get("cap"), workers=workers, seed=_options.get("seed"))
    if json_out:
        write_json_report(summary, json_out)
    if md_out:
        write_markdown_report(summary, md_out)
    if not json_out and not md_out:
        typer.echo(render_markdown(summary))

    typer.echo(", ".join(f"{k}: {v}" for k, v in summary.counts.items()))
    raise typer.Exit(code=summary.exit_code)


@app.command("skein-tree")
def skein_tree_command(
    source: str = typer.Argument(..., help="PD code, braid word or file."),
    braid: bool = typer.Option(False, "--braid", help="Read SOURCE as a braid word."),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Write the tree as DOT."),
    json_out: Optional[Path] = typer.Option(None, "--json", help="Write the tree as JSON."),
):
    """Export the skein resolution tree of a diagram."""
    try:
        d = _load_diagram(source, braid)
        tree = skein_tree(d, cap=get_settings().with_overrides(crossing_cap=_options.get("cap")).crossing_cap)
    except HomflyBoundsError as e:
        _fail(e)

    leaves = tree.leaves()
    typer.echo(f"nodes: {sum(1 for _ in tree.nodes())}  leaves: {len(leaves)}")
    typer.echo(f"total: {tree.total().to_text()}")
    if dot:
        tree.save_dot(dot)
        typer.echo(f"wrote {dot}")
    if json_out:
        json_out.write_text(tree.to_json(), encoding="utf-8")
        typer.echo(f"wrote {json_out}")
    graph = analyze_graph(build_seifert_graph(d))
    if graph.component_count == 1:
        obs = leaf_observations(tree, graph)
        typer.echo(f"top-z leaves: {obs['top_leaves']}  rightmost: {obs['rightmost_leaf']}")


if __name__ == "__main__":
    app()
