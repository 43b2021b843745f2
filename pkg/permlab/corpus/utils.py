"""Seeded corpora: identity suites, bound validity and the classical inequalities.

Every matrix is built from its own seed ``derive_seed(master, index)``, so
trials run in a thread pool and the results are put back in index order
before anything is reported.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar, cast

from permlab.bounds.utils import (
    bound_report,
    check_aux_inequalities,
    check_bregman_minc,
    check_hadamard,
)
from permlab.cli.consts import DEFAULT_RATIONAL_DENOMINATOR
from permlab.cli.utils import config_manager
from permlab.corpus.consts import BOUND_SLACK, CHAIN_SLACK, FAMILY_MAX_N, MAX_IDENTITY_DIM
from permlab.corpus.interfaces import CorpusSummary, CorpusViolation
from permlab.exceptions import PreconditionError, SelfCheckError
from permlab.families.interfaces import FamilyKind, FamilySpec
from permlab.families.utils import (
    SplitMix64,
    derangement_matrix,
    derive_seed,
    menage_matrix,
    random_matrix,
)
from permlab.file.utils import format_ext_real
from permlab.identities.utils import run_identity_suite
from permlab.logging import get_logger
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def run_parallel(
    func: Callable[[T], R], items: Sequence[T], max_workers: Optional[int] = None
) -> List[R]:
    """Apply ``func`` to every item in a thread pool, keeping input order.

    Args:
        func: Work function; must not share mutable state between calls.
        items: Inputs.
        max_workers: Pool size; ``None`` reads ``PERMLAB_MAX_WORKERS``.

    Returns:
        ``[func(item) for item in items]``.
    """
    workers = max_workers if max_workers is not None else config_manager.get_max_workers()
    results: List[Optional[R]] = [None] * len(items)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(func, item): index for index, item in enumerate(items)}
        for count, future in enumerate(as_completed(futures), start=1):
            results[futures[future]] = future.result()
            logger.debug(f"Finished item {futures[future]} ({count}/{len(items)})")
    return cast(List[R], results)


def _identity_trial(N: int, n: int, domain: ScalarDomain, seed: int) -> CorpusSummary:
    kind = FamilyKind.RANDOM_RATIONAL if domain is ScalarDomain.RATIONAL else FamilyKind.RANDOM_UNIT_DISC
    Z = random_matrix(
        FamilySpec(kind=kind, n=n, N=N, seed=seed, denominator=DEFAULT_RATIONAL_DENOMINATOR)
    )
    summary = CorpusSummary()
    for report in run_identity_suite(Z, seed):
        name = report.identity_id.value
        summary.record(name, report.holds)
        if not report.holds:
            summary.violations.append(
                CorpusViolation(name, seed, (N, n), f"discrepancy {report.discrepancy}")
            )
    return summary


def check_identities(
    N: int,
    n: int,
    trials: int,
    seed: int,
    domain: ScalarDomain = ScalarDomain.RATIONAL,
    max_workers: Optional[int] = None,
) -> CorpusSummary:
    """Run the identity suite on ``trials`` seeded random ``N x n`` matrices.

    Raises:
        PreconditionError: Unless ``1 <= n <= N <= 7`` and ``trials >= 1``.
    """
    if not 1 <= n <= N <= MAX_IDENTITY_DIM:
        raise PreconditionError(f"need 1 <= n <= N <= {MAX_IDENTITY_DIM}, got N={N}, n={n}")
    if trials < 1:
        raise PreconditionError(f"trials must be positive, got {trials}")
    logger.info(f"Checking identities on {trials} {domain} {N}x{n} matrices")
    seeds = [derive_seed(seed, index) for index in range(trials)]
    summary = CorpusSummary()
    for part in run_parallel(lambda s: _identity_trial(N, n, domain, s), seeds, max_workers):
        summary.merge(part)
    return summary


def _exceeds(value: ExtReal, bound: ExtReal, slack: float) -> bool:
    if not bound.is_finite:
        return False
    return float(value) > float(bound) + slack


def _out_of_order(low: ExtReal, high: ExtReal) -> bool:
    if not high.is_finite:
        return False
    return float(low) > float(high) * (1 + CHAIN_SLACK) + CHAIN_SLACK


def _bound_trial(seed: int, max_N: int) -> CorpusSummary:
    rng = SplitMix64(seed)
    N = rng.randint(2, max_N)
    n = rng.randint(2, N)
    Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=n, N=N, seed=seed))
    summary = CorpusSummary()

    def note(check: str, passed: bool, detail: str) -> None:
        summary.record(check, passed)
        if not passed:
            summary.violations.append(CorpusViolation(check, seed, (N, n), detail))

    report = bound_report(Z)
    err1, err2 = report.actual_error_first, report.actual_error_second
    if report.first is None or report.second is None:
        raise SelfCheckError(f"bound report for a {N}x{n} matrix is missing a bound group")
    if err1 is not None:
        for name, bound in report.first.applicable().items():
            note(
                f"first.{name}",
                not _exceeds(err1, bound, BOUND_SLACK),
                f"error {format_ext_real(err1)} > bound {format_ext_real(bound)}",
            )
    if err2 is not None:
        bound = report.second.theta_kappa
        note(
            "second.theta_kappa",
            not _exceeds(err2, bound, BOUND_SLACK),
            f"error {format_ext_real(err2)} > bound {format_ext_real(bound)}",
        )
    chain = [
        ("theta_kappa", report.first.theta_kappa),
        ("theta_beta", report.first.theta_beta),
        ("alpha_beta", report.first.alpha_beta),
        ("beta_only", report.first.beta_only),
    ]
    for (low_name, low), (high_name, high) in zip(chain, chain[1:]):
        if low is None or high is None:
            note(f"order.{low_name}<={high_name}", False, "bound inapplicable on a bounded matrix")
            continue
        note(
            f"order.{low_name}<={high_name}",
            not _out_of_order(low, high),
            f"{format_ext_real(low)} > {format_ext_real(high)}",
        )
    note("hadamard", check_hadamard(Z), "permanent exceeds the column norm product")
    for check in check_aux_inequalities(Z, report.stats):
        note(
            f"aux.{check.name}",
            check.holds,
            f"{format_ext_real(check.lhs)} > {format_ext_real(check.rhs)}",
        )
    return summary


def _bregman_trial(Z: RectMatrix, seed: int) -> CorpusSummary:
    summary = CorpusSummary()
    passed = check_bregman_minc(Z)
    summary.record("bregman_minc", passed)
    if not passed:
        summary.violations.append(
            CorpusViolation("bregman_minc", seed, Z.shape, "permanent exceeds the bound")
        )
    return summary


def run_corpus(
    count: int,
    seed: int,
    max_N: int = 7,
    zero_one_count: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> CorpusSummary:
    """Bound validity, bound ordering, Hadamard, auxiliary and Bregman-Minc corpora.

    Args:
        count: Number of random unit-disc matrices, shapes ``2 <= n <= N <= max_N``.
        seed: Master seed.
        max_N: Largest row count.
        zero_one_count: Number of random square 0-1 matrices for Bregman-Minc;
            defaults to ``count // 2 + 1``. Derangement (``n <= 10``) and
            menage matrices are always added.
        max_workers: Thread pool size.

    Raises:
        PreconditionError: If ``count < 1`` or ``max_N < 2``.
    """
    if count < 1:
        raise PreconditionError(f"count must be positive, got {count}")
    if max_N < 2:
        raise PreconditionError(f"max_N must be at least 2, got {max_N}")
    logger.info(f"Running bound corpus on {count} matrices (seed {seed})")
    seeds = [derive_seed(seed, index) for index in range(count)]
    summary = CorpusSummary()
    for part in run_parallel(lambda s: _bound_trial(s, max_N), seeds, max_workers):
        summary.merge(part)

    zero_one = zero_one_count if zero_one_count is not None else count // 2 + 1
    matrices: List[Tuple[RectMatrix, int]] = []
    for index in range(zero_one):
        s = derive_seed(seed ^ 0x5A5A5A5A, index)
        size = SplitMix64(s).randint(1, max_N)
        matrices.append(
            (random_matrix(FamilySpec(kind=FamilyKind.RANDOM_ZERO_ONE, n=size, seed=s)), s)
        )
    matrices.extend((derangement_matrix(n), n) for n in range(2, FAMILY_MAX_N + 1))
    matrices.extend((menage_matrix(n), n) for n in range(3, FAMILY_MAX_N + 1))
    for part in run_parallel(lambda item: _bregman_trial(*item), matrices, max_workers):
        summary.merge(part)
    logger.info(f"Corpus finished with {len(summary.violations)} violations")
    return summary
