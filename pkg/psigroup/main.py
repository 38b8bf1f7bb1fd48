# psigroup/main.py
"""
Command-line entry point: ψ(G) for single groups, the theorem checks and
the corpus tables.

Exit codes: 0 when every check passes, 1 when a counterexample is found,
2 on usage, IO or parse errors and on checks that crashed.
"""
import logging
import sys
from typing import List, Optional, Sequence, Tuple

import click
from tabulate import tabulate

from psigroup.analysis.psi import psi_report
from psigroup.analysis.structure import structure_report
from psigroup.arith.functions import euler_phi, factorize, psi_cyclic, psi_cyclic_by_divisors
from psigroup.config import settings
from psigroup.exceptions import PsiGroupError
from psigroup.groups.catalog import build_entry, small_group_catalog
from psigroup.groups.families import RECIPES, abelian
from psigroup.groups.perm_group import PermGroup
from psigroup.harness.corpus import Corpus, builtin_corpus, dump_corpus, load_corpus, sweep_corpus
from psigroup.harness.tables import emit_table
from psigroup.harness.theorems import run_all
from psigroup.models.schemas import TableFormat, TheoremId, format_fraction

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_ERROR = 2

# Recipes that take no integer parameters from the command line.
_NON_CLI_RECIPES = {"permutations"}


def _configure_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else settings.get_log_level()
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _fail(message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_ERROR)


# ============================================================================
# Helpers
# ============================================================================

def _family_group(name: str, params: Sequence[int]) -> PermGroup:
    if name == "abelian":
        return abelian(list(params))
    if name not in RECIPES or name in _NON_CLI_RECIPES:
        known = ", ".join(sorted(set(RECIPES) - _NON_CLI_RECIPES))
        raise click.BadParameter(f"unknown family '{name}' (known: {known})", param_hint="NAME")
    try:
        return RECIPES[name](*params)
    except TypeError as e:
        raise click.BadParameter(f"wrong parameters for {name}: {e}", param_hint="PARAMS") from None


def _resolve_group(name: str, params: Sequence[int]) -> PermGroup:
    """A catalog label when ``name`` is one and no parameters are given, otherwise a family."""
    if not params:
        for entry in small_group_catalog():
            if entry.name == name:
                return build_entry(entry)
    return _family_group(name, params)


def _build_corpus(corpus_path: Optional[str], max_order: Optional[int], sweeps: bool) -> Corpus:
    if corpus_path:
        corpus = load_corpus(corpus_path)
        if max_order is not None:
            corpus = corpus.up_to_order(max_order)
    else:
        corpus = builtin_corpus(max_order)
    if sweeps:
        corpus = corpus.merged(sweep_corpus())
    return corpus


def _group_summary(group: PermGroup) -> List[Tuple[str, str]]:
    report = psi_report(group)
    structure = structure_report(group)
    rows = [
        ("label", report.label),
        ("order", str(report.n)),
        ("psi(G)", str(report.psi)),
        ("psi(C_n)", str(report.psi_cn)),
        ("ratio", format_fraction(report.ratio)),
        ("cyclic", str(report.cyclic)),
        ("solvable", str(structure.solvable)),
        ("derived orders", " > ".join(str(order) for order in structure.derived_orders)),
        ("|Z(G)|", str(structure.center_order)),
        ("G'' central", str(structure.second_derived_central)),
    ]
    if report.n > 1:
        rows += [
            ("q, p", f"{report.q}, {report.p}"),
            ("Sylow p cyclic / normal", f"{structure.sylow_p_cyclic} / {structure.sylow_p_normal}"),
            ("threshold case", structure.theorem6_case.value),
        ]
    if structure.cyclic_maximal_indices is not None:
        rows.append(("cyclic maximal indices", str(structure.cyclic_maximal_indices)))
    return rows


# ============================================================================
# Commands
# ============================================================================

@click.group()
@click.option("--verbose", "-v", is_flag=True, default=settings.VERBOSE, help="Debug logging.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """Sum of element orders of finite groups and the bounds built on it."""
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    _configure_logging(verbose)


@cli.command()
@click.argument("name")
@click.argument("params", nargs=-1, type=int)
def psi(name: str, params: Tuple[int, ...]) -> None:
    """ψ(G) for a catalog label (e.g. Q8) or a family with parameters (e.g. dihedral 10)."""
    try:
        group = _resolve_group(name, params)
        click.echo(tabulate(_group_summary(group), tablefmt="plain"))
    except PsiGroupError as e:
        _fail(str(e))


@cli.command("psi-cyclic")
@click.argument("n", type=click.IntRange(min=1))
def psi_cyclic_command(n: int) -> None:
    """ψ(C_n) from the closed form, with φ(n) and the divisor-sum cross-check."""
    try:
        factorization = factorize(n)
        rows = [
            ("n", n),
            ("factors", " * ".join(f"{p}^{e}" for p, e in factorization.factors) or "1"),
            ("phi(n)", euler_phi(n)),
            ("psi(C_n)", psi_cyclic(n)),
            ("sum d phi(d)", psi_cyclic_by_divisors(n)),
        ]
        click.echo(tabulate(rows, tablefmt="plain"))
    except PsiGroupError as e:
        _fail(str(e))


@cli.command()
@click.option(
    "--theorem",
    "theorem",
    default="all",
    show_default=True,
    help=f"Check identifier or 'all' ({', '.join(t.value for t in TheoremId)}).",
)
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--max-order", type=click.IntRange(min=1), default=None)
@click.option("--sweeps", is_flag=True, help="Add the family sweeps to the corpus.")
@click.option("--verbose", "-v", is_flag=True, help="List skipped entries.")
@click.pass_context
def verify(
    ctx: click.Context,
    theorem: str,
    corpus_path: Optional[str],
    max_order: Optional[int],
    sweeps: bool,
    verbose: bool,
) -> None:
    """Run theorem checks over a corpus; exit 1 on any counterexample."""
    verbose = verbose or ctx.obj.get("verbose", False)
    if verbose:
        _configure_logging(True)
    if theorem.lower() != "all" and theorem not in {t.value for t in TheoremId}:
        raise click.BadParameter(f"unknown theorem '{theorem}'", param_hint="--theorem")

    try:
        corpus = _build_corpus(corpus_path, max_order, sweeps)
    except (PsiGroupError, OSError) as e:
        _fail(str(e))
        return

    selected = None if theorem.lower() == "all" else [theorem]
    results = run_all(corpus, theorem_ids=selected)

    rows = [
        (
            result.theorem_id.value,
            result.universe_size,
            result.applicable,
            len(result.skipped),
            len(result.counterexamples),
            len(result.equality_witnesses),
            "ERROR" if result.error else ("PASS" if result.passed else "FAIL"),
            f"{result.elapsed_seconds:.2f}",
        )
        for result in results
    ]
    click.echo(
        tabulate(
            rows,
            headers=["check", "universe", "applicable", "skipped", "counterexamples", "witnesses", "status", "seconds"],
        )
    )

    for result in results:
        for counterexample in result.counterexamples:
            click.echo(f"{result.theorem_id.value} counterexample {counterexample.label}: {counterexample.detail}")
        if result.equality_witnesses:
            click.echo(f"{result.theorem_id.value} equality: {', '.join(result.equality_witnesses)}")
        for warning in result.warnings:
            click.echo(f"warning: {warning}", err=True)
        if result.error:
            click.echo(f"{result.theorem_id.value} error: {result.error}", err=True)
        if verbose:
            for skipped in result.skipped:
                click.echo(f"{result.theorem_id.value} skipped {skipped.label}: {skipped.reason}")

    if any(result.error for result in results):
        sys.exit(EXIT_ERROR)
    if any(result.counterexamples for result in results):
        sys.exit(EXIT_COUNTEREXAMPLE)


@cli.command()
@click.option(
    "--format",
    "table_format",
    type=click.Choice([f.value for f in TableFormat]),
    default=TableFormat.CSV.value,
    show_default=True,
)
@click.option("--out", "destination", type=click.Path(dir_okay=False), default=None)
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--max-order", type=click.IntRange(min=1), default=None)
@click.option("--sweeps", is_flag=True)
def table(
    table_format: str,
    destination: Optional[str],
    corpus_path: Optional[str],
    max_order: Optional[int],
    sweeps: bool,
) -> None:
    """Write the ψ table of a corpus as CSV or JSON."""
    destination = destination or f"psi_table.{table_format}"
    try:
        corpus = _build_corpus(corpus_path, max_order, sweeps)
        summary = emit_table(corpus, table_format, destination)
    except (PsiGroupError, OSError) as e:
        _fail(str(e))
        return
    click.echo(f"Wrote {summary.rows} rows to {summary.path}")


@cli.command()
@click.argument("name")
@click.argument("params", nargs=-1, type=int)
def family(name: str, params: Tuple[int, ...]) -> None:
    """Build a family member and print its order profile."""
    try:
        group = _family_group(name, params)
        profile = group.order_profile
        rows = [(order, count, order * count) for order, count in sorted(profile.pairs.items())]
        click.echo(f"{group.name}: order {group.order}, psi {profile.psi}")
        click.echo(tabulate(rows, headers=["element order", "count", "contribution"]))
    except PsiGroupError as e:
        _fail(str(e))


@cli.command()
@click.option("--max-order", type=click.IntRange(min=1), default=None)
def catalog(max_order: Optional[int]) -> None:
    """List the built-in catalog with ψ and the ratio to ψ(C_n)."""
    try:
        corpus = builtin_corpus(max_order)
    except PsiGroupError as e:
        _fail(str(e))
        return
    rows = [
        (entry.label, entry.order, entry.psi_report.psi, format_fraction(entry.psi_report.ratio))
        for entry in corpus
    ]
    click.echo(tabulate(rows, headers=["label", "order", "psi", "ratio"]))


@cli.command("export-corpus")
@click.argument("destination", type=click.Path(dir_okay=False))
@click.option("--max-order", type=click.IntRange(min=1), default=None)
@click.option("--sweeps", is_flag=True)
def export_corpus(destination: str, max_order: Optional[int], sweeps: bool) -> None:
    """Write the built-in corpus (and optionally the sweeps) as JSON Lines."""
    try:
        corpus = _build_corpus(None, max_order, sweeps)
        count = dump_corpus(corpus, destination)
    except (PsiGroupError, OSError) as e:
        _fail(str(e))
        return
    click.echo(f"Wrote {count} groups to {destination}")


if __name__ == "__main__":
    cli()
