#!/usr/bin/env python3
"""Main entry point for Coulomb Kit"""
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

# Set up production logging first
from src.utils.logging import setup_logging, get_logger

from config import (
    DEFAULT_ORDER, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_WORKERS,
    EXIT_INVALID, EXIT_NOT_GOOD, LOG_DIR,
)
from src.cli.report import Report, error_report
from src.cli.spec_parser import load_spec
from src.cli.workflows import cmd_anomaly, cmd_hilbert, cmd_kostant_verify, cmd_rep_info
from src.core.lie import WeylEnumerationError
from src.core.monopole import NotGoodError
from src.exporters import ReportExporter
from src.utils.monitoring import monitor
from src.utils.validation import InputValidator, ValidationError

# Rich console for pretty output
console = Console()

STATUS_STYLES = {0: "green", 1: "red", 2: "red", 3: "yellow"}


@click.group()
@click.version_option(version='0.1.0')
@click.option('--debug', is_flag=True, help='Enable debug logging')
@click.pass_context
def cli(ctx, debug):
    """Coulomb Kit - anomaly checks, Coulomb branch Hilbert series and Kostant-map checks

    Commands:
      rep-info        - Weights, symplecticity and SL(2) decomposition of a representation
      anomaly         - Trace form and anomaly verdict
      hilbert         - Monopole-formula Hilbert series (and SL(2) presentation check)
      kostant-verify  - Seeded property suite for the orthosymplectic maps

    Quick Start:
      python main.py hilbert data/examples/sl2_n3.json --order 10
    """
    log_file = None
    if debug:
        log_file = LOG_DIR / f'debug_{datetime.now().strftime("%Y%m%d_%H%M%S")}.log'

    setup_logging(debug=debug, log_file=log_file)
    ctx.ensure_object(dict)
    ctx.obj['debug'] = debug


def _run(command: str, inputs: Dict[str, Any], build: Callable[[], Report]) -> Report:
    """Run a workflow, turning expected failures into error reports"""
    logger = get_logger(__name__)
    try:
        with monitor.measure(command):
            return build()
    except (ValidationError, WeylEnumerationError) as e:
        logger.debug(f"{command} rejected input: {e}")
        return error_report(command, inputs, e, EXIT_INVALID)
    except NotGoodError as e:
        return error_report(command, inputs, e, EXIT_NOT_GOOD)


def _finish(report: Report, as_json: bool, output: Optional[str],
            render: Callable[[Report], None]):
    """Print the report, write it if asked, exit with its status"""
    if as_json:
        click.echo(report.to_json(), nl=False)
    elif "error" in report.results:
        _render_error(report)
    else:
        render(report)
        _render_footer(report)

    if output:
        path = ReportExporter().export_json(report, Path(output))
        if not as_json:
            console.print(f"[dim]Report written to {path}[/dim]")

    monitor.log_summary()
    sys.exit(report.exit_status)


def _render_error(report: Report):
    style = STATUS_STYLES.get(report.exit_status, "red")
    location = report.results.get("location")
    prefix = f"{location}: " if location and not report.results["error"].startswith(location) else ""
    console.print(f"[{style}]Error ({report.status_label}): {escape(prefix + report.results['error'])}[/{style}]")
    if "direction" in report.results:
        console.print(f"  Direction of non-convergence: {tuple(report.results['direction'])}")


def _render_footer(report: Report):
    for warning in report.warnings:
        console.print(f"[yellow]Warning:[/yellow] {escape(warning)}")
    duration = monitor.last_duration(report.command)
    if duration is not None:
        console.print(f"[dim]Runtime: {duration:.2f}s[/dim]")


def _weights_text(weights) -> str:
    return ", ".join(
        f"{tuple(w)}" + (f"x{m}" if m > 1 else "") for w, m in weights
    )


# --- rep-info ------------------------------------------------------------------

def _render_rep_info(report: Report):
    results = report.results
    group = results["group"]
    console.print(f"[bold green]{report.inputs['name']}[/bold green]\n")

    table = Table(title="Representation", show_header=False)
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_row("Group", f"{group['name']} (rank {group['rank']})")
    table.add_row("Cartan matrix", str(group["cartan_matrix"]))
    table.add_row("Weyl group order", str(group["weyl_order"]) if group["weyl_order"] is not None else "too large")
    table.add_row("Dimension", str(results["dimension"]))
    table.add_row("Weights", _weights_text(results["weights"]))

    symplectic = results["symplectic"]
    table.add_row("Symplectic", "[green]yes[/green]" if symplectic["ok"] else "[red]no[/red]")
    for violation in symplectic["violations"]:
        table.add_row("", f"[red]{violation}[/red]")

    split = results["cotangent_split"]
    table.add_row("Cotangent split N", _weights_text(split) if split is not None else "none")

    if "isotypic" in results:
        components = results["isotypic"]["components"]
        text = " + ".join(f"V^{k} x C^{m}" for k, m in components.items()) or "0"
        table.add_row("SL(2) decomposition", text)
        table.add_row("SL(2) symplectic", "yes" if results["isotypic"]["sl2_symplectic"] else "no")

    console.print(table)


@cli.command('rep-info')
@click.argument('spec_file', type=click.Path())
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report')
@click.option('--output', type=click.Path(), help='Also write the JSON report to this file')
def rep_info(spec_file: str, as_json: bool, output: Optional[str]):
    """Describe the representation in SPEC_FILE"""
    inputs = {"file": spec_file}
    report = _run("rep-info", inputs, lambda: cmd_rep_info(load_spec(spec_file)))
    _finish(report, as_json, output, _render_rep_info)


# --- anomaly -----------------------------------------------------------------------

def _render_anomaly(report: Report):
    results = report.results
    console.print(f"[bold green]{report.inputs['name']}[/bold green]\n")

    gram = Table(title="Trace form B")
    size = len(results["trace_form"])
    for j in range(size):
        gram.add_column(f"e{j}", justify="right")
    for row in results["trace_form"]:
        gram.add_row(*[str(x) for x in row])
    console.print(gram)

    if results["pass"]:
        console.print("\n[bold green]PASS[/bold green] anomaly-free")
    else:
        console.print(f"\n[bold red]FAIL[/bold red] {results['summary']}")

    if "monopole_number" in results:
        integral = "integral" if results["monopole_number_integral"] else "not integral"
        console.print(f"Monopole number N = {results['monopole_number']} ({integral})")
    if "parity_criterion" in results:
        console.print(f"Parity criterion: {'holds' if results['parity_criterion'] else 'fails'}")


@cli.command()
@click.argument('spec_file', type=click.Path())
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report')
@click.option('--output', type=click.Path(), help='Also write the JSON report to this file')
def anomaly(spec_file: str, as_json: bool, output: Optional[str]):
    """Run the anomaly check on SPEC_FILE (exit 1 when anomalous)"""
    inputs = {"file": spec_file}
    report = _run("anomaly", inputs, lambda: cmd_anomaly(load_spec(spec_file)))
    _finish(report, as_json, output, _render_anomaly)


# --- hilbert -------------------------------------------------------------------------

def _render_hilbert(report: Report):
    results = report.results
    console.print(f"[bold green]{report.inputs['name']}[/bold green]")
    console.print(f"Complete through q^{results['order']} "
                  f"({results['contributing_coweights']} coweights in {results['shells']} shells)\n")

    presentation = results.get("presentation", {})
    expected = dict(tuple(row) for row in presentation.get("series", []))

    table = Table(title="Hilbert series")
    table.add_column("Exponent", justify="right", style="cyan")
    table.add_column("Monopole", justify="right")
    if expected:
        table.add_column("Presentation", justify="right")
    for exponent, coeff in results["coefficients"]:
        row = [exponent, coeff]
        if expected:
            row.append(expected.get(exponent, "0"))
        table.add_row(*row)
    console.print(table)

    if presentation:
        console.print(f"\nC[delta, eta, xi] / ({presentation['relation']}), N = {presentation['monopole_number']}")
        if "comparison" in presentation:
            style = "green" if presentation["comparison"] == "MATCH" else "red"
            console.print(f"[bold {style}]{presentation['comparison']}[/bold {style}] {presentation['comparison_detail']}")


@cli.command()
@click.argument('spec_file', type=click.Path())
@click.option('--order', type=int, default=DEFAULT_ORDER, show_default=True, help='Truncation order K')
@click.option('--workers', type=int, default=DEFAULT_WORKERS, show_default=True, help='Worker threads')
@click.option('--shell-cap', type=int, envvar='COULOMB_KIT_SHELL_CAP',
              help='Coweight shells examined before declaring the theory not good')
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report')
@click.option('--output', type=click.Path(), help='Also write the JSON report to this file')
@click.option('--csv', 'csv_path', type=click.Path(), help='Write the coefficient table to a CSV file')
def hilbert(spec_file: str, order: int, workers: int, shell_cap: Optional[int],
            as_json: bool, output: Optional[str], csv_path: Optional[str]):
    """Hilbert series of the Coulomb branch for SPEC_FILE"""
    inputs = {"file": spec_file, "order": order}

    def build() -> Report:
        InputValidator.validate_order(order)
        InputValidator.validate_workers(workers)
        if shell_cap is not None:
            InputValidator.validate_shell_cap(shell_cap)
        spec = load_spec(spec_file)
        if as_json:
            return cmd_hilbert(spec, order, workers=workers, shell_cap=shell_cap)
        with console.status("[yellow]Summing over dominant coweights...[/yellow]"):
            return cmd_hilbert(spec, order, workers=workers, shell_cap=shell_cap)

    report = _run("hilbert", inputs, build)
    if csv_path and report.exit_status != EXIT_INVALID and "coefficients" in report.results:
        path = ReportExporter().export_series_csv(report, Path(csv_path))
        if not as_json:
            console.print(f"[dim]Coefficients written to {path}[/dim]")
    _finish(report, as_json, output, _render_hilbert)


# --- kostant-verify -------------------------------------------------------------------

def _render_kostant(report: Report):
    results = report.results
    inputs = report.inputs
    console.print(f"[bold green]Kostant property suite[/bold green] n = {inputs['n']}, "
                  f"{inputs['samples']} samples, seed {inputs['seed']}\n")

    table = Table(title="Properties")
    table.add_column("Property", style="cyan")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", justify="right")
    for name, tally in results["tallies"].items():
        failed = str(tally["failed"]) if not tally["failed"] else f"[red]{tally['failed']}[/red]"
        table.add_row(name, str(tally["passed"]), failed)
    console.print(table)

    counterexample = results["first_counterexample"]
    if counterexample:
        console.print(f"\n[red]First counterexample[/red] ({counterexample['property']}, "
                      f"sample {counterexample['sample']}): {escape(counterexample['detail'])}")
    else:
        console.print("\n[bold green]All properties hold[/bold green]")


@cli.command('kostant-verify')
@click.option('--n', 'n', type=int, default=1, show_default=True, help='Half the dimension of M')
@click.option('--samples', type=int, default=DEFAULT_SAMPLES, show_default=True)
@click.option('--seed', type=int, default=DEFAULT_SEED, show_default=True)
@click.option('--workers', type=int, default=DEFAULT_WORKERS, show_default=True, help='Worker threads')
@click.option('--json', 'as_json', is_flag=True, help='Print the machine-readable report')
@click.option('--output', type=click.Path(), help='Also write the JSON report to this file')
def kostant_verify(n: int, samples: int, seed: int, workers: int, as_json: bool, output: Optional[str]):
    """Check the orthosymplectic/mirabolic identities on seeded random samples"""
    inputs = {"n": n, "samples": samples, "seed": seed}

    def build() -> Report:
        if as_json:
            return cmd_kostant_verify(n, samples, seed, workers=workers)
        with console.status(f"[yellow]Checking {samples} samples...[/yellow]"):
            return cmd_kostant_verify(n, samples, seed, workers=workers)

    report = _run("kostant-verify", inputs, build)
    _finish(report, as_json, output, _render_kostant)


if __name__ == '__main__':
    cli()
