"""
Command-line interface for spin9forms.

Usage:
    spin9forms verify all                          # run every invariant suite
    spin9forms export psi8 --format json --out psi8.json
    spin9forms export table3 --format csv --out table3.csv
    spin9forms eq2 --ratio                         # omega construction vs psi8
    spin9forms berger --samples 20000 --seed 1     # Monte Carlo line average

Exit codes: 0 pass, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__, canon
from .formats import (
    FormatError,
    dumps_json,
    form_to_csv,
    form_to_dict,
    format_coefficient,
    read_monomials,
    table3_to_csv,
    table3_to_dict,
)
from .table3 import classify_table3

__all__ = ["cli", "main"]

SUITE_NAMES = ("algebra", "octoform", "kraines", "calibrations", "psi8", "spin9", "berger", "all")
FORM_TARGETS = ("psi8", "psi8-scaled", "cayley", "associative", "kraines")
EXPORT_TARGETS = FORM_TARGETS + ("table3",)


def _form_for(target: str, n: int):
    if target == "psi8":
        return canon.psi8().form
    if target == "psi8-scaled":
        return canon.scaled_psi8()
    if target == "cayley":
        return canon.cayley()
    if target == "associative":
        return canon.associative()
    if target == "kraines":
        return canon.kraines_standard(n)
    raise click.BadParameter(target)


def _write(text: str, out: str) -> None:
    if out == "-":
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(2)


@click.group()
@click.version_option(version=__version__)
def cli():
    """Exact octonion-valued forms and the Spin(9)-invariant 8-form."""


@cli.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
def verify(suite):
    """Run an invariant suite; prints one line per check."""
    from .checks import run_suite

    ok = run_suite(suite, emit=click.echo)
    sys.exit(0 if ok else 1)


@cli.command()
@click.argument("target", type=click.Choice(EXPORT_TARGETS))
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--out", default="-", show_default=True, help="Output path, '-' for stdout.")
@click.option("-n", "n", type=click.IntRange(1, 3), default=2, show_default=True, help="Quaternionic dimension for kraines.")
def export(target, fmt, out, n):
    """Write a form or the coefficient-table classification as JSON or CSV."""
    if target == "table3":
        report = classify_table3(canon.scaled_psi8())
        text = dumps_json(table3_to_dict(report)) if fmt == "json" else table3_to_csv(report)
    else:
        phi = _form_for(target, n)
        if target.startswith("psi8") and not phi.is_integral():
            click.echo("error: non-integral coefficient in psi8", err=True)
            sys.exit(1)
        name = f"kraines-{n}" if target == "kraines" else target
        text = dumps_json(form_to_dict(phi, name)) if fmt == "json" else form_to_csv(phi)
    _write(text, out)


@cli.command()
@click.option("--ratio", is_flag=True, required=True, help="Print lambda with eq2 = lambda * psi8.")
def eq2(ratio):
    """Compare the omega_ij construction with psi8."""
    from .spin9 import eq2_ratio

    try:
        lam = eq2_ratio()
    except ArithmeticError as exc:
        click.echo(f"FAIL not proportional: {exc}")
        sys.exit(1)
    click.echo(f"lambda {format_coefficient(lam)}")


@cli.command()
@click.option("--samples", type=click.IntRange(min=1), required=True)
@click.option("--seed", type=int, required=True)
@click.option("--monomials", "monomials_path", type=click.Path(dir_okay=False), default=None,
              help="File of monomials like x0^x1^...^y7, one per line.")
@click.option("--threshold", type=float, default=0.99, show_default=True)
@click.option("--no-threshold", is_flag=True, help="Always exit 0 after printing the report.")
def berger(samples, seed, monomials_path, threshold, no_threshold):
    """Monte Carlo average of line volume forms compared with psi8."""
    from .mc_report import berger_report

    monomials = None
    if monomials_path is not None:
        try:
            monomials = read_monomials(monomials_path)
        except (OSError, FormatError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        if any(m.bit_count() != 8 for m in monomials):
            click.echo("error: monomials must have degree 8", err=True)
            sys.exit(2)
    report = berger_report(samples, seed, monomials)
    click.echo(report.render(), nl=False)
    if no_threshold:
        sys.exit(0)
    sim = report.similarity
    sys.exit(0 if sim == sim and sim >= threshold else 1)


def main():
    cli()


if __name__ == "__main__":
    main()
