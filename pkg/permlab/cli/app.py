"""The ``permlab`` command.

Data (permanents, reports, CSV, check summaries) goes to stdout through
``typer.echo``; status lines and errors go to the themed stderr console.
Exit codes follow :class:`permlab.cli.consts.ExitCode`.
"""

import json
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Optional

import typer

from permlab.bounds.utils import bound_report
from permlab.cli.consts import (
    BoundOrder,
    CountedFamily,
    ExitCode,
    OutputFormat,
    SweepFamily,
)
from permlab.cli.utils import config_manager
from permlab.corpus.consts import DEFAULT_CORPUS_COUNT, DEFAULT_CORPUS_MAX_N
from permlab.corpus.interfaces import CorpusSummary
from permlab.corpus.utils import check_identities, run_corpus
from permlab.exceptions import (
    BudgetExceededError,
    ConfigError,
    IndexRangeError,
    MatrixFileError,
    MatrixShapeError,
    PreconditionError,
    ScalarDomainError,
    SelfCheckError,
)
from permlab.families.interfaces import FamilyKind, FamilySpec
from permlab.families.utils import (
    check_family_counts,
    derangement_matrix,
    derive_seed,
    family_reference_stats,
    menage_matrix,
    random_matrix,
)
from permlab.file.utils import (
    bound_report_to_dict,
    bound_report_to_row,
    bound_report_to_text,
    format_ext_real,
    format_scalar,
    read_matrix_file,
    sweep_csv_text,
    write_matrix_file,
    write_sweep_csv,
)
from permlab.logging import get_logger, setup_logging
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain
from permlab.numerics.utils import injection_count
from permlab.permanent.consts import PermanentMethod
from permlab.permanent.utils import permanent
from permlab.style import (
    print_error,
    print_header,
    print_labeled_info,
    print_success,
    print_warning,
    render_table,
)

logger = get_logger(__name__)

app = typer.Typer(
    name="permlab",
    help="Exact and numerical laboratory for approximations of normalized permanents.",
    no_args_is_help=True,
    add_completion=False,
)

_INPUT_ERRORS = (
    MatrixFileError,
    MatrixShapeError,
    ScalarDomainError,
    IndexRangeError,
    PreconditionError,
    ConfigError,
)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Translate permlab errors into exit codes."""
    try:
        yield
    except BudgetExceededError as e:
        print_error(str(e))
        raise typer.Exit(code=ExitCode.BUDGET_EXCEEDED)
    except SelfCheckError as e:
        print_error(str(e))
        raise typer.Exit(code=ExitCode.CHECK_FAILED)
    except _INPUT_ERRORS as e:
        print_error(str(e))
        raise typer.Exit(code=ExitCode.INPUT_ERROR)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="Override LOG_LEVEL (DEBUG, INFO, WARNING, ...)."
    ),
) -> None:
    """Exact and numerical laboratory for approximations of normalized permanents."""
    if log_level is not None:
        setup_logging(log_level)


@app.command("compute")
def cmd_compute(
    input_file: Path = typer.Option(..., "--input", help="Matrix file (JSON)."),
    method: PermanentMethod = typer.Option(PermanentMethod.AUTO, "--method"),
    normalized: bool = typer.Option(False, "--normalized", help="Divide by N!/(N-n)!."),
) -> None:
    """Print the permanent (or normalized permanent) of a matrix file."""
    with _exit_codes():
        Z = read_matrix_file(input_file)
        value = permanent(Z, method)
        if normalized:
            value = value * Fraction(1, injection_count(Z.N, Z.n))
        typer.echo(format_scalar(value))


@app.command("bounds")
def cmd_bounds(
    input_file: Path = typer.Option(..., "--input", help="Matrix file (JSON)."),
    order: BoundOrder = typer.Option(BoundOrder.BOTH, "--order"),
    output_format: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
) -> None:
    """Statistics, exact errors and error bounds of a matrix file."""
    with _exit_codes():
        Z = read_matrix_file(input_file)
        report = bound_report(
            Z,
            first=order in (BoundOrder.FIRST, BoundOrder.BOTH),
            second=order in (BoundOrder.SECOND, BoundOrder.BOTH),
        )
        if not report.stats.bounded:
            print_warning("Some entries exceed modulus one; bounds that need |z| <= 1 are omitted")
        if output_format is OutputFormat.JSON:
            typer.echo(json.dumps(bound_report_to_dict(report), indent=2))
        elif output_format is OutputFormat.CSV:
            typer.echo(sweep_csv_text([bound_report_to_row(input_file.stem, report)]), nl=False)
        else:
            typer.echo(bound_report_to_text(report))


def _echo_summary(summary: CorpusSummary) -> None:
    for line in summary.lines():
        typer.echo(line)
    if not summary.ok:
        render_table(
            "Violations",
            ["check", "seed", "shape", "detail"],
            [(v.check, v.seed, f"{v.shape[0]}x{v.shape[1]}", v.detail) for v in summary.violations],
        )
        print_error(f"{len(summary.violations)} check(s) failed")
        raise typer.Exit(code=ExitCode.CHECK_FAILED)
    print_success(f"{sum(total for _, total in summary.counts.values())} checks passed")


@app.command("check-identities")
def cmd_check_identities(
    N: int = typer.Option(4, "--N", help="Rows."),
    n: int = typer.Option(3, "--n", help="Columns."),
    trials: int = typer.Option(50, "--trials"),
    seed: int = typer.Option(0, "--seed", min=0, max=2**64 - 1),
    domain: ScalarDomain = typer.Option(ScalarDomain.RATIONAL, "--domain"),
) -> None:
    """Run every applicable identity checker on seeded random matrices."""
    with _exit_codes():
        print_header(f"Identity suite on {trials} {domain.value} {N}x{n} matrices")
        summary = check_identities(N, n, trials, seed, domain)
    _echo_summary(summary)


def _sweep_matrices(
    family: SweepFamily, n_min: int, n_max: int, N: Optional[int], trials: int, seed: int
) -> Iterator[RectMatrix]:
    index = 0
    for n in range(n_min, n_max + 1):
        if family is SweepFamily.DERANGEMENT:
            yield derangement_matrix(n)
        elif family is SweepFamily.MENAGE:
            yield menage_matrix(n)
        else:
            for _ in range(trials):
                spec = FamilySpec(
                    kind=FamilyKind.RANDOM_UNIT_DISC,
                    n=n,
                    N=max(N or n, n),
                    seed=derive_seed(seed, index),
                )
                index += 1
                yield random_matrix(spec)


@app.command("sweep")
def cmd_sweep(
    family: SweepFamily = typer.Option(..., "--family"),
    n_min: int = typer.Option(..., "--n-min"),
    n_max: int = typer.Option(..., "--n-max"),
    out: Path = typer.Option(..., "--out", help="CSV file to write."),
    N: Optional[int] = typer.Option(None, "--N", help="Rows for the random family (default n)."),
    trials: int = typer.Option(1, "--trials", help="Matrices per n for the random family."),
    seed: int = typer.Option(0, "--seed", min=0, max=2**64 - 1),
) -> None:
    """Write one CSV row of statistics, errors and bounds per family member."""
    with _exit_codes():
        if n_min > n_max:
            raise PreconditionError(f"--n-min {n_min} exceeds --n-max {n_max}")
        rows: List[Dict[str, str]] = []
        for Z in _sweep_matrices(family, n_min, n_max, N, trials, seed):
            report = bound_report(Z, require_exact=True)
            rows.append(bound_report_to_row(family.value, report))
            logger.info(f"{family.value} {Z.N}x{Z.n}: err1={format_ext_real(report.actual_error_first)}")
        write_sweep_csv(rows, out)
    print_success(f"Wrote {len(rows)} rows to {out}")


def _text(value: Optional[ExtReal]) -> str:
    return format_ext_real(value) or "-"


@app.command("family")
def cmd_family(
    name: CountedFamily = typer.Option(..., "--name"),
    n: int = typer.Option(..., "--n"),
    emit_matrix: Optional[Path] = typer.Option(None, "--emit-matrix", help="Also write the matrix file."),
) -> None:
    """Print ``permanent formula theta beta gamma kappa_tilde`` for a counted family."""
    kind = FamilyKind(name.value)
    with _exit_codes():
        per, count = check_family_counts(kind, n)
        ref = family_reference_stats(kind, n)
        typer.echo(
            " ".join(
                [
                    str(per),
                    str(count),
                    _text(ref.theta2),
                    _text(ref.beta),
                    _text(ref.gamma),
                    _text(ref.kappa_tilde),
                ]
            )
        )
        if emit_matrix is not None:
            Z = derangement_matrix(n) if kind is FamilyKind.DERANGEMENT else menage_matrix(n)
            write_matrix_file(Z, emit_matrix)


@app.command("corpus")
def cmd_corpus(
    count: int = typer.Option(DEFAULT_CORPUS_COUNT, "--count", help="Random unit-disc matrices."),
    seed: int = typer.Option(0, "--seed", min=0, max=2**64 - 1),
    max_N: int = typer.Option(DEFAULT_CORPUS_MAX_N, "--max-N"),
    zero_one: Optional[int] = typer.Option(None, "--zero-one", help="Random 0-1 matrices."),
) -> None:
    """Bound validity, bound ordering and classical inequality corpora."""
    with _exit_codes():
        print_header(f"Bound corpus, {count} matrices up to {max_N} rows")
        summary = run_corpus(count, seed, max_N, zero_one)
    _echo_summary(summary)


@app.command("config")
def cmd_config() -> None:
    """Write or refresh the ``.permlab.env`` template."""
    with _exit_codes():
        path = config_manager.write_template()
    print_labeled_info("Budget terms", config_manager.get_budget_terms())
    print_labeled_info("Worker threads", config_manager.get_max_workers())
    print_success(f"Configuration template at {path}")
