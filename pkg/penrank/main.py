#!/usr/bin/env python3
"""penrank - length-similarity ranking workbench for penpal matching."""

import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click

from penrank.cfg.config import LOG_LEVELS, PenrankConfig
from penrank.cfg.template_generator import TemplateGenerator
from penrank.corpus.index import build_index
from penrank.corpus.readers import load_queries, read_records
from penrank.corpus.storage import load_index, save_index
from penrank.corpus.tokenizer import tokenize
from penrank.errors import (
    CONSTRAINT_FAILURE_EXIT_CODE,
    EXIT_CODES_HELP,
    MalformedInputError,
    PenrankError,
)
from penrank.evaluation.io import read_qrels, read_run
from penrank.evaluation.metrics import mrr
from penrank.evaluation.runner import evaluate
from penrank.feature.constraints import verify_feature_constraints
from penrank.feature.length_similarity import sample_curve, write_curve_csv
from penrank.models import Query, RunResult
from penrank.paths import OUTPUT_DIR
from penrank.rankers.params import Bm25LengthSimParams
from penrank.rankers.ranking import format_run, rank, write_run
from penrank.rankers.scorers import SCORERS, make_scorer
from penrank.synth.generator import generate_corpus
from penrank.synth.writers import write_corpus_bundle
from penrank.tuning.grid import format_point, load_grid
from penrank.tuning.search import format_report, grid_search, tune_and_test, write_report

logger = logging.getLogger(__name__)

SCORER_CHOICE = click.Choice(sorted(SCORERS))


def _print_compact_command_tree(formatter, ctx, command, prefix="", is_last=True, max_cmd_width=20):
    """Recursively write the command tree with descriptions aligned on the same line."""
    cmd_name = command.name or "penrank"
    tree_char = "└── " if is_last else "├── "
    cmd_display = f"{prefix}{tree_char}{cmd_name}"

    help_text = command.get_short_help_str(limit=80)
    if help_text:
        padding = max(max_cmd_width - len(cmd_display) + 2, 2)
        formatter.write(f"{cmd_display}{' ' * padding}{help_text}\n")
    else:
        formatter.write(f"{cmd_display}\n")

    if isinstance(command, click.Group):
        subcommands = sorted(command.commands.values(), key=lambda c: c.name)
        new_prefix = prefix + ("    " if is_last else "│   ")
        for i, subcmd in enumerate(subcommands):
            _print_compact_command_tree(formatter, ctx, subcmd, new_prefix, i == len(subcommands) - 1,
                                        max_cmd_width)


class PenrankGroup(click.Group):
    """Click group with tree-formatted help that turns penrank errors into exit codes."""

    def format_commands(self, ctx, formatter):
        formatter.write("\nCommands:\n")
        max_width = self._calculate_max_command_width(self, "")
        _print_compact_command_tree(formatter, ctx, self, "", True, max_width)
        formatter.write("\n")
        formatter.write_text(EXIT_CODES_HELP)
        formatter.write("\n")
        formatter.write_text('Use "penrank COMMAND --help" for more information on a command.')

    def _calculate_max_command_width(self, command, prefix, depth=0):
        max_width = 0
        subcommands = list(getattr(command, "commands", {}).values())
        for i, subcmd in enumerate(subcommands):
            is_last = i == len(subcommands) - 1
            cmd_display = f"{prefix}{'└── ' if is_last else '├── '}{subcmd.name}"
            max_width = max(max_width, len(cmd_display))
            if isinstance(subcmd, click.Group) and depth < 3:
                new_prefix = prefix + ("    " if is_last else "│   ")
                max_width = max(max_width, self._calculate_max_command_width(subcmd, new_prefix, depth + 1))
        return max_width

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except PenrankError as e:
            logger.debug("Command failed", exc_info=True)
            click.echo(f"❌ {e}", err=True)
            ctx.exit(e.exit_code)


def _parse_params(value: Optional[str]) -> Dict[str, Any]:
    """``--params`` as inline JSON or a path to a JSON file."""
    if not value:
        return {}
    text = value
    if not value.lstrip().startswith("{") and Path(value).is_file():
        text = Path(value).read_text(encoding="utf-8")
    try:
        params = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"--params is not valid JSON: {e}") from e
    if not isinstance(params, dict):
        raise MalformedInputError("--params must be a JSON object of parameter values")
    return params


def _scorer(config: PenrankConfig, name: str, params: Optional[str]):
    scorer = make_scorer(name, {**config.scorer_params(name), **_parse_params(params)})
    logger.info(f"Using scorer {scorer.describe()}")
    return scorer


def _top_k(config: PenrankConfig, top_k: Optional[int]) -> int:
    return top_k if top_k is not None else config.top_k


@click.group(cls=PenrankGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False),
              help="Configuration file (default: config/penrank.yaml, then ./penrank.yaml).")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False),
              help="Logging level (default: logging.level from the configuration, else WARNING).")
@click.pass_context
def cli(ctx, config_path, log_level):
    """penrank - length-similarity ranking workbench for penpal matching.

    Indexes profile texts, ranks them with BM25 and its length-similarity
    variant or one of five baselines, and evaluates and tunes runs by MRR.
    """
    ctx.ensure_object(dict)
    config = PenrankConfig(config_path)
    level = (log_level or config.log_level).upper()
    logging.basicConfig(level=getattr(logging, level), stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logging.getLogger("penrank").setLevel(getattr(logging, level))
    ctx.obj["config"] = config


@cli.command("index")
@click.option("--corpus", required=True, type=click.Path(), help="JSON-lines corpus of {id, text} records.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Index file to write.")
@click.pass_context
def index_cmd(ctx, corpus, out):
    """Build an inverted index from a corpus file."""
    config = ctx.obj["config"]
    index = build_index(read_records(corpus), config.tokenizer)
    save_index(index, out)
    click.echo(f"✅ Indexed {len(index)} documents ({len(index.postings)} terms, "
               f"avgdl {index.stats.avgdl:.2f}) to {out}", err=True)


@cli.command("search")
@click.option("--index", "index_path", required=True, type=click.Path(), help="Index file.")
@click.option("--query", "query_text", required=True, help="Query text.")
@click.option("--query-id", default="query", show_default=True, help="Id printed in the result lines.")
@click.option("--exclude", "exclude_doc", help="Document id never to return (e.g. the user's own profile).")
@click.option("--scorer", "scorer_name", type=SCORER_CHOICE, default="bm25-lengthsim", show_default=True)
@click.option("--params", help="Parameter overrides as a JSON object (or a JSON file).")
@click.option("--top-k", type=int, help="Number of results (default: retrieval.top_k).")
@click.pass_context
def search_cmd(ctx, index_path, query_text, query_id, exclude_doc, scorer_name, params, top_k):
    """Rank the indexed documents for one query and print the ranked list."""
    config = ctx.obj["config"]
    index = load_index(index_path)
    query = Query.from_tokens(query_id, tokenize(query_text, index.tokenizer), exclude_doc=exclude_doc)
    if not query.terms:
        click.echo("⚠️  Query has no terms after preprocessing; nothing can match", err=True)
    scored = rank(query, index, _scorer(config, scorer_name, params), _top_k(config, top_k))
    for line in format_run(RunResult((scored,))):
        click.echo(line)


@cli.command("eval")
@click.option("--index", "index_path", type=click.Path(), help="Index file.")
@click.option("--queries", type=click.Path(), help="JSON-lines query file.")
@click.option("--qrels", required=True, type=click.Path(), help="Relevance judgments (TSV).")
@click.option("--run", "run_path", type=click.Path(),
              help="Score an existing run file instead of ranking (queries from --queries, else every judged query).")
@click.option("--scorer", "scorer_name", type=SCORER_CHOICE, default="bm25-lengthsim", show_default=True)
@click.option("--params", help="Parameter overrides as a JSON object (or a JSON file).")
@click.option("--top-k", type=int, help="Results per query (default: retrieval.top_k).")
@click.option("--out", type=click.Path(dir_okay=False), help="Run file to write.")
@click.pass_context
def eval_cmd(ctx, index_path, queries, qrels, run_path, scorer_name, params, top_k, out):
    """Rank a query set, write the run and print its MRR."""
    config = ctx.obj["config"]
    judgments = read_qrels(qrels)

    if run_path:
        run = read_run(run_path)
        # queries that retrieved nothing have no run lines but still count
        query_ids = [query_id for query_id, _ in read_records(queries)] if queries else judgments.query_ids
        covered = run.covering(query_ids)
        if len(covered) > len(run):
            click.echo(f"⚠️  {len(covered) - len(run)} queries have no results in {run_path}; "
                       f"they count as not retrieved", err=True)
        value = mrr(covered, judgments)
    else:
        if not index_path or not queries:
            raise click.UsageError("eval needs --index and --queries unless --run is given")
        index = load_index(index_path)
        result = evaluate(index, load_queries(queries, index.tokenizer), judgments,
                          _scorer(config, scorer_name, params), _top_k(config, top_k))
        value = result.mrr
        if out:
            write_run(result.run, out)
            click.echo(f"✅ Run written to {out}", err=True)

    click.echo(f"MRR\t{value:.6f}")


@cli.command("tune")
@click.option("--index", "index_path", required=True, type=click.Path(), help="Index file.")
@click.option("--queries", required=True, type=click.Path(), help="Training queries (JSON lines).")
@click.option("--qrels", required=True, type=click.Path(), help="Relevance judgments (TSV).")
@click.option("--scorer", "scorer_name", type=SCORER_CHOICE, default="bm25-lengthsim", show_default=True)
@click.option("--grid", "grid_source", help="Grid as a JSON object or a JSON file (default: tuning.grids).")
@click.option("--top-k", type=int, help="Results per query (default: retrieval.top_k).")
@click.option("--test-queries", type=click.Path(), help="Also score the best point on these queries.")
@click.option("--test-qrels", type=click.Path(), help="Judgments for --test-queries (default: --qrels).")
@click.option("--out", type=click.Path(dir_okay=False), help="Report file (default: runs/tune_<scorer>.tsv).")
@click.pass_context
def tune_cmd(ctx, index_path, queries, qrels, scorer_name, grid_source, top_k, test_queries, test_qrels, out):
    """Grid-search scorer parameters on training queries by MRR."""
    config = ctx.obj["config"]
    grid = load_grid(grid_source, scorer_name) if grid_source else config.tuning_grid(scorer_name)
    index = load_index(index_path)
    train = load_queries(queries, index.tokenizer)
    judgments = read_qrels(qrels)
    top_k = _top_k(config, top_k)

    click.echo(f"🔍 Tuning {scorer_name} over {len(grid)} grid points...", err=True)
    if test_queries:
        test = load_queries(test_queries, index.tokenizer)
        test_judgments = read_qrels(test_qrels) if test_qrels else judgments
        report, test_result = tune_and_test(index, train, judgments, test, test_judgments,
                                            scorer_name, grid, top_k)
    else:
        report, test_result = grid_search(index, train, judgments, scorer_name, grid, top_k), None

    out = Path(out) if out else OUTPUT_DIR / f"tune_{scorer_name}.tsv"
    write_report(report, out)
    click.echo(f"✅ Report written to {out}", err=True)
    click.echo(format_report(report)[-1])
    if test_result is not None:
        click.echo(f"test\t{format_point(report.best_point)}\tmrr={test_result.mrr:.6f}")


@cli.command("curve")
@click.option("--params", help="Length-similarity parameters b1, b2, B1, B2, c as JSON.")
@click.option("--y", "query_length", type=float, default=100.0, show_default=True, help="Query length |q|.")
@click.option("--x-min", type=float, default=0.0, show_default=True)
@click.option("--x-max", type=float, default=300.0, show_default=True)
@click.option("--n", "samples", type=int, default=301, show_default=True, help="Number of samples.")
@click.option("--out", type=click.Path(dir_okay=False), help="CSV file (default: stdout).")
@click.pass_context
def curve_cmd(ctx, params, query_length, x_min, x_max, samples, out):
    """Sample the length-similarity curve h(x, y) as x,h CSV."""
    config = ctx.obj["config"]
    p = Bm25LengthSimParams.from_mapping({**config.scorer_params("bm25-lengthsim"), **_parse_params(params)})
    curve = sample_curve(p.lengthsim, query_length, x_min, x_max, samples)
    if out:
        write_curve_csv(curve, out)
        click.echo(f"✅ Wrote {len(curve)} samples to {out}", err=True)
    else:
        click.echo("x,h")
        for x, h in curve:
            click.echo(f"{x!r},{h!r}")


@cli.command("verify")
@click.option("--params", help="Length-similarity parameters b1, b2, B1, B2, c as JSON.")
@click.option("--y", "query_length", type=float, default=131.0, show_default=True, help="Query length |q|.")
@click.option("--fd-step", type=float, default=1e-3, show_default=True, help="Finite-difference step.")
@click.option("--tol", type=float, default=1e-4, show_default=True, help="Tolerance of the numeric checks.")
@click.pass_context
def verify_cmd(ctx, params, query_length, fd_step, tol):
    """Check the six design constraints of the length-similarity curve."""
    config = ctx.obj["config"]
    p = Bm25LengthSimParams.from_mapping({**config.scorer_params("bm25-lengthsim"), **_parse_params(params)})
    report = verify_feature_constraints(p.lengthsim, query_length, fd_step=fd_step, tol=tol)
    for check in report:
        click.echo(str(check))
    if report.all_passed:
        click.echo(f"✅ All {len(report)} constraints hold", err=True)
    else:
        click.echo(f"❌ {len(report.failures)} of {len(report)} constraints failed", err=True)
        ctx.exit(CONSTRAINT_FAILURE_EXIT_CODE)


@cli.command("synth")
@click.option("--seed", type=int, help="Random seed (default: synth.seed).")
@click.option("--out", type=click.Path(file_okay=False), help="Output directory (default: runs/synth).")
@click.pass_context
def synth_cmd(ctx, seed, out):
    """Generate a synthetic penpal corpus with queries and judgments."""
    config = ctx.obj["config"]
    synth_config = config.synth
    if seed is not None:
        synth_config = dataclasses.replace(synth_config, seed=seed)

    click.echo(f"🎲 Generating {synth_config.users} profiles (seed {synth_config.seed})...", err=True)
    corpus = generate_corpus(synth_config)
    out = Path(out) if out else OUTPUT_DIR / "synth"
    paths = write_corpus_bundle(corpus, out)
    click.echo(f"✅ Synthetic corpus written to {out}:", err=True)
    for path in paths.values():
        click.echo(f"   {path}", err=True)


@cli.group()
def config():
    """Manage configuration files."""


@config.command("regenerate")
@click.option("--out", type=click.Path(dir_okay=False), help="Output path (default: the bundled template).")
def config_regenerate_cmd(out):
    """Regenerate the configuration template from built-in defaults."""
    click.echo("🔄 Regenerating configuration template...", err=True)
    template_path = TemplateGenerator().regenerate_template(out)
    click.echo(f"💡 Copy {template_path.name} to config/penrank.yaml and customize it.", err=True)


def main():
    """Main entry point for penrank."""
    try:
        cli()
    except KeyboardInterrupt:
        click.echo("\n👋 Interrupted", err=True)
        sys.exit(130)
    except Exception as e:
        click.echo(f"💥 Unexpected error: {e}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
