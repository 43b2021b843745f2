"""Matrix statistics and error bounds for the approximants ``H_1`` and ``H_2``.

The first and second order bounds below are valid for every complex matrix.
The older bounds collected for comparison (the ``16 n / N``, ``gamma`` and
row-residual families) assume every entry has modulus at most one and are
reported as inapplicable otherwise.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from permlab.approximants.utils import h1 as approximant_h1
from permlab.approximants.utils import h2 as approximant_h2
from permlab.approximants.utils import h_ell
from permlab.bounds.consts import (
    GAMMA_BOUND_FACTOR,
    HALF_GAMMA_CORRECTION,
    INEQUALITY_REL_TOL,
    RESIDUAL_ROWS_CORRECTION,
    UNIFORM_BOUND_FACTOR,
)
from permlab.bounds.interfaces import (
    BoundReport,
    FirstOrderBounds,
    InequalityCheck,
    MatrixStats,
    SecondOrderBounds,
)
from permlab.cli.utils import config_manager
from permlab.exceptions import BudgetExceededError, PreconditionError
from permlab.interfaces import Real, Scalar
from permlab.logging import get_logger
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix
from permlab.numerics.utils import column_stats, injection_count, modulus, modulus_sq
from permlab.permanent.utils import normalized_permanent, permanent

logger = get_logger(__name__)

Number = Union[ExtReal, Fraction, float, int]


def h_kn(k: int, n: int) -> Fraction:
    """``(n+k-2)(n-k+1) / (k (k-1) (k-2) C(n, k))`` for ``3 <= k <= n``."""
    if not 3 <= k <= n:
        raise PreconditionError(f"h_kn needs 3 <= k <= n, got k={k}, n={n}")
    return Fraction((n + k - 2) * (n - k + 1), k * (k - 1) * (k - 2) * math.comb(n, k))


def zeta(k: int) -> float:
    """Geometric mean ``(k!)^(1/k)`` of ``1..k``; ``zeta(0) = 0``."""
    if k < 0:
        raise PreconditionError(f"zeta needs k >= 0, got {k}")
    if k == 0:
        return 0.0
    return math.exp(math.lgamma(k + 1) / k)


def c_tilde(ell: int) -> float:
    """``(e^l l! / l^(l + 1/2))^(1/2)``."""
    return math.sqrt(math.exp(ell + math.lgamma(ell + 1) - (ell + 0.5) * math.log(ell)))


def _series(terms: List[Tuple[int, int, int]], x1: Number, x2: Number) -> ExtReal:
    a, b = ExtReal.of(x1), ExtReal.of(x2)
    if not (a.is_finite and b.is_finite):
        raise PreconditionError("f and g need finite arguments")
    total = ExtReal.zero()
    for weight, p1, p2 in terms:
        total = total + ExtReal(Fraction(weight)) * a**p1 * b**p2
    return total


def f_first(n: int, x1: Number, x2: Number) -> ExtReal:
    """``sum_{k=2}^{n} (k-1) x1^(n-k) x2^(k-2)`` with ``0^0 = 1``."""
    return _series([(k - 1, n - k, k - 2) for k in range(2, n + 1)], x1, x2)


def f_first_closed(n: int, x1: float, x2: float) -> float:
    """Closed form of :func:`f_first` for ``x1 != x2``."""
    return ((n - 1) * x2**n - n * x1 * x2 ** (n - 1) + x1**n) / (x2 - x1) ** 2


def f_second3(n: int, x1: Number, x2: Number) -> ExtReal:
    """``sum_{k=3}^{n} (n+k-2)(n-k+1) x1^(n-k) x2^(k-3)``."""
    return _series(
        [((n + k - 2) * (n - k + 1), n - k, k - 3) for k in range(3, n + 1)], x1, x2
    )


def g_second4(n: int, x1: Number, x2: Number) -> ExtReal:
    """``sum_{k=4}^{n} (k-3)(n+k-2)(n-k+1) x1^(n-k) x2^(k-4)``."""
    return _series(
        [((k - 3) * (n + k - 2) * (n - k + 1), n - k, k - 4) for k in range(4, n + 1)],
        x1,
        x2,
    )


def _abs_diffs(Z: RectMatrix) -> List[List[List[Real]]]:
    """``A[u][v][r] = |z[u][r] - z[v][r]|``."""
    e = Z.entries
    return [
        [[modulus(e[u][r] - e[v][r]) for r in range(Z.n)] for v in range(Z.N)]
        for u in range(Z.N)
    ]


def _pair_tables(
    A: List[List[List[Real]]], N: int, n: int
) -> Dict[Tuple[int, int], List[List[Real]]]:
    """``P[(r,s)][u][v] = A[u][v][r] A[u][v][s]`` for ordered column pairs."""
    return {
        (r, s): [[A[u][v][r] * A[u][v][s] for v in range(N)] for u in range(N)]
        for r, s in itertools.permutations(range(n), 2)
    }


def _theta(P: Dict[Tuple[int, int], List[List[Real]]], N: int, n: int) -> ExtReal:
    if n < 2:
        return ExtReal.zero()
    total: Real = Fraction(0)
    for table in P.values():
        inner = sum((table[u][v] for u, v in itertools.permutations(range(N), 2)), Fraction(0))
        total += inner * inner
    return (ExtReal(total / (n * (n - 1)))).sqrt() / ExtReal(Fraction(N * (N - 1)))


def _theta3(
    A: List[List[List[Real]]], P: Dict[Tuple[int, int], List[List[Real]]], N: int, n: int
) -> ExtReal:
    if n < 3:
        return ExtReal.zero()
    # B[t][u] = sum_{w != u} A[u][w][t]; the w-sum then excludes v by subtraction
    B = [[sum((A[u][w][t] for w in range(N)), Fraction(0)) for u in range(N)] for t in range(n)]
    total: Real = Fraction(0)
    for r, s, t in itertools.permutations(range(n), 3):
        table = P[(r, s)]
        inner: Real = Fraction(0)
        for u, v in itertools.permutations(range(N), 2):
            inner += table[u][v] * (B[t][u] - A[u][v][t])
        total += inner * inner
    root = ExtReal(total * Fraction(math.factorial(n - 3), math.factorial(n))).sqrt()
    return root * ExtReal(Fraction(math.factorial(N - 3), math.factorial(N)))


def _theta4(P: Dict[Tuple[int, int], List[List[Real]]], N: int, n: int) -> ExtReal:
    if n < 4:
        return ExtReal.zero()
    # Row pairs (w, x) disjoint from (u, v): all pairs minus those touching u or v.
    margins = {key: [sum(row, Fraction(0)) for row in table] for key, table in P.items()}
    totals = {key: sum(m, Fraction(0)) for key, m in margins.items()}
    total: Real = Fraction(0)
    for q, r, s, t in itertools.permutations(range(n), 4):
        head, tail = P[(q, r)], P[(s, t)]
        m, whole = margins[(s, t)], totals[(s, t)]
        inner: Real = Fraction(0)
        for u, v in itertools.permutations(range(N), 2):
            if head[u][v] == 0:
                continue
            inner += head[u][v] * (whole - 2 * m[u] - 2 * m[v] + 2 * tail[u][v])
        total += inner * inner
    root = ExtReal(total * Fraction(math.factorial(n - 4), math.factorial(n))).sqrt()
    return root * ExtReal(Fraction(math.factorial(N - 4), math.factorial(N)))


def _kappa(squares: List[List[Real]], N: int, n: int, nu: int) -> ExtReal:
    """``max_{|J|=|R|=nu} sum_{j not in J} sum_{l not in R} |z|^2 / ((n-nu)(N-nu))``."""
    if n < nu + 1:
        return ExtReal.one()
    best: Optional[Real] = None
    for J in itertools.combinations(range(N), nu):
        kept = [
            sum((squares[j][col] for j in range(N) if j not in J), Fraction(0))
            for col in range(n)
        ]
        # the best R removes the nu lightest columns
        value = sum(sorted(kept)[nu:], Fraction(0))
        if best is None or value > best:
            best = value
    if best is None:
        return ExtReal.one()
    return ExtReal(best / ((n - nu) * (N - nu)))


def _kappa_tilde(Z: RectMatrix) -> Optional[ExtReal]:
    if not Z.is_zero_one():
        return None
    N, n = Z.shape
    if n < 3:
        return ExtReal.one()
    column_sums = [int(sum(Z.column(c), Fraction(0)).real) for c in range(n)]
    scale = zeta(N - 2) ** 2
    best = 0.0
    for u, v in itertools.combinations(range(N), 2):
        weights = sorted(
            zeta(column_sums[c] - int(Z.entries[u][c].real) - int(Z.entries[v][c].real)) ** 2
            / scale
            for c in range(n)
        )
        best = max(best, math.fsum(weights[2:]))
    return ExtReal(best / (n - 2))


def stats(Z: RectMatrix, max_dim: Optional[int] = None) -> MatrixStats:
    """Compute :class:`MatrixStats` for ``Z``.

    Rational inputs give exact values wherever no irrational square root
    is involved.

    Args:
        Z: The matrix.
        max_dim: Size guard on ``N`` and ``n``; ``None`` reads
            ``PERMLAB_STAT_MAX_DIM``.

    Raises:
        BudgetExceededError: If ``N`` or ``n`` exceeds the guard.
    """
    N, n = Z.shape
    limit = config_manager.get_stat_max_dim() if max_dim is None else max_dim
    if max(N, n) > limit:
        raise BudgetExceededError("matrix statistics", max(N, n), limit)
    columns = column_stats(Z)
    squares = [[modulus_sq(v) for v in row] for row in Z.entries]
    row_residual_sq = tuple(
        sum((modulus_sq(a) for a in row), Fraction(0)) for row in columns.residuals
    )
    alpha = ExtReal(sum(row_residual_sq, Fraction(0)) / (n * N))
    beta = ExtReal(sum((modulus_sq(m) for m in columns.means), Fraction(0)) / n)
    bounded = all(s <= 1 for row in squares for s in row)
    if bounded:
        # rounding in the column means can push beta just past one
        beta = min(beta, ExtReal.one())
    A = _abs_diffs(Z)
    P = _pair_tables(A, N, n)
    result = MatrixStats(
        N=N,
        n=n,
        alpha=alpha,
        beta=beta,
        theta2=_theta(P, N, n),
        theta3=_theta3(A, P, N, n),
        theta4=_theta4(P, N, n),
        kappa={nu: _kappa(squares, N, n, nu) for nu in (2, 3, 4)},
        kappa_tilde=_kappa_tilde(Z),
        row_residual_sq=row_residual_sq,
        bounded=bounded,
        zero_one=Z.is_zero_one(),
    )
    logger.debug(f"stats for {N}x{n}: theta={float(result.theta2):.6g}, beta={float(beta):.6g}")
    return result


def _ratio(num: int, den: int) -> ExtReal:
    if num == 0:
        return ExtReal.zero()
    return ExtReal(Fraction(num, den))


def _chain_sum(beta: ExtReal, n: int) -> ExtReal:
    """``(1 - x^(n/2)) / (1 - x)`` at ``x = sqrt(beta)``, via ``sum_{m<n} s^m / (1 + s)``, ``s = beta^(1/4)``."""
    s = beta.sqrt().sqrt()
    total = ExtReal.zero()
    for m in range(n):
        total = total + s**m
    return total / (ExtReal.one() + s)


def _gamma_or_infinity(st: MatrixStats, x: Fraction = Fraction(1)) -> ExtReal:
    gamma = st.gamma(x)
    return ExtReal.infinity() if gamma is None else gamma


def bound_general_order(st: MatrixStats, ell: int) -> Optional[ExtReal]:
    """``(l+1)^(1/4) C~_{l+1} gamma^((l+1)/2) / (1-gamma)^(3/4)`` for ``|N.Per - H_l|``.

    ``+inf`` when ``gamma >= 1``; ``None`` unless every entry has modulus at most one.
    """
    if not st.bounded:
        return None
    if not 1 <= ell <= st.n:
        raise PreconditionError(f"approximant order must lie in 1..{st.n}, got {ell}")
    gamma = st.gamma()
    if gamma is None or gamma >= 1:
        return ExtReal.infinity()
    factor = ExtReal((ell + 1) ** 0.25 * c_tilde(ell + 1))
    return factor * gamma ** Fraction(ell + 1, 2) / gamma.complement() ** Fraction(3, 4)


def bound_first_order(st: MatrixStats) -> FirstOrderBounds:
    """All first order bounds that apply to a matrix with statistics ``st``.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    N, n = st.N, st.n
    if n < 2:
        raise PreconditionError("first order bounds need at least two columns")
    root_beta = st.beta.sqrt()
    prefactor = st.theta2 / ExtReal(Fraction(2 * N))
    theta_kappa = prefactor * f_first(n, root_beta, st.kappa[2].sqrt())
    theta_kappa_01 = None
    if st.zero_one:
        theta_kappa_01 = prefactor * f_first(n, root_beta, st.kappa_01.sqrt())
    if not st.bounded:
        return FirstOrderBounds(theta_kappa=theta_kappa, theta_kappa_01=theta_kappa_01)
    gamma = _gamma_or_infinity(st)
    half = _gamma_or_infinity(st, Fraction(1, 2))
    if gamma >= 1:
        gamma_half = ExtReal.infinity()
    else:
        gamma_half = half + ExtReal(HALF_GAMMA_CORRECTION) * gamma ** Fraction(
            3, 2
        ) / gamma.complement() ** Fraction(3, 4)
    return FirstOrderBounds(
        theta_kappa=theta_kappa,
        theta_kappa_01=theta_kappa_01,
        theta_beta=ExtReal(Fraction(n - 1, 2 * N)) * st.theta2 * _chain_sum(st.beta, n),
        alpha_beta=_ratio(n - 1, N - 1)
        * st.alpha
        * min(ExtReal(Fraction(n, 2)), root_beta.complement().reciprocal()),
        beta_only=(ExtReal.one() + root_beta) * _ratio(n - 1, N - 1),
        uniform=ExtReal(Fraction(UNIFORM_BOUND_FACTOR * n, N)),
        gamma_linear=ExtReal(GAMMA_BOUND_FACTOR) * gamma,
        gamma_half=gamma_half,
        gamma_half_chain=(ExtReal.one() + root_beta) * half,
        general_order=bound_general_order(st, 1),
    )


def bound_second_order(st: MatrixStats) -> SecondOrderBounds:
    """All second order bounds that apply to a matrix with statistics ``st``.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    N, n = st.N, st.n
    if n < 2:
        raise PreconditionError("second order bounds need at least two columns")
    root_beta = st.beta.sqrt()
    theta_kappa = st.theta3 / ExtReal(Fraction(2 * N * N)) * f_second3(
        n, root_beta, st.kappa[3].sqrt()
    ) + st.theta4 / ExtReal(Fraction(8 * N * N)) * g_second4(n, root_beta, st.kappa[4].sqrt())
    if not st.bounded:
        return SecondOrderBounds(theta_kappa=theta_kappa)
    gamma = _gamma_or_infinity(st)
    if gamma >= 1 or st.beta > 1:
        residual_rows = ExtReal.infinity()
    else:
        cap = min(ExtReal(Fraction(n, 3)), st.beta.complement().reciprocal())
        rows = ExtReal.zero()
        for mass in st.row_residual_sq:
            rows = rows + (ExtReal(mass) / ExtReal(Fraction(N * N)) * cap) ** Fraction(3, 2)
        residual_rows = ExtReal(math.sqrt(3)) * rows + ExtReal(
            RESIDUAL_ROWS_CORRECTION
        ) * gamma**2 / gamma.complement() ** Fraction(3, 4)
    return SecondOrderBounds(
        theta_kappa=theta_kappa,
        residual_rows=residual_rows,
        general_order=bound_general_order(st, 2),
    )


def _error(a: Scalar, b: Scalar) -> ExtReal:
    return ExtReal(abs(a - b))


def actual_error_order(Z: RectMatrix, ell: int, budget: Optional[int] = None) -> ExtReal:
    """``|normalized permanent - H_l|``."""
    return _error(normalized_permanent(Z, budget), h_ell(Z, ell))


def bound_report(
    Z: RectMatrix,
    *,
    first: bool = True,
    second: bool = True,
    budget: Optional[int] = None,
    max_dim: Optional[int] = None,
    require_exact: bool = False,
) -> BoundReport:
    """Statistics, exact errors and the requested bounds for ``Z``.

    The exact errors are left as ``None`` when the permanent exceeds the
    term budget, unless ``require_exact`` is set; the statistics guard
    always raises.
    """
    st = stats(Z, max_dim)
    columns = column_stats(Z)
    h1 = approximant_h1(Z, columns)
    h2 = approximant_h2(Z, columns) if Z.n >= 2 else None
    try:
        norm: Optional[Scalar] = normalized_permanent(Z, budget)
    except BudgetExceededError as e:
        if require_exact:
            raise
        logger.warning(f"Skipping exact errors: {e}")
        norm = None
    return BoundReport(
        stats=st,
        normalized_permanent=norm,
        h1=h1,
        h2=h2,
        actual_error_first=None if norm is None else _error(norm, h1),
        actual_error_second=None if norm is None or h2 is None else _error(norm, h2),
        first=bound_first_order(st) if first and Z.n >= 2 else None,
        second=bound_second_order(st) if second and Z.n >= 2 else None,
    )


def bound_esp(values: Sequence[Scalar], n: int) -> Tuple[ExtReal, ExtReal]:
    """Two bounds on ``|E_n / C(N, n) - mean^n|`` for values of modulus at most one.

    Returns:
        ``(f_first(n, |mean|, sqrt(kappa)) S / (N (N-1)),
        n (n-1) / (N (N-1)) S min{1/2, 1 / (n (1 - |mean|))})`` where
        ``S = sum_j |z_j - mean|^2``.

    Raises:
        PreconditionError: Unless ``2 <= n <= N`` and every ``|z_j| <= 1``.
    """
    N = len(values)
    if not 2 <= n <= N:
        raise PreconditionError(f"need 2 <= n <= {N}, got {n}")
    squares = [modulus_sq(v) for v in values]
    if any(s > 1 for s in squares):
        raise PreconditionError("every value must have modulus at most one")
    mean = sum(values, Fraction(0)) * Fraction(1, N)
    spread = ExtReal(sum((modulus_sq(v - mean) for v in values), Fraction(0)))
    if n >= 3:
        total = sum(squares, Fraction(0))
        lightest = min(squares[u] + squares[v] for u, v in itertools.combinations(range(N), 2))
        kappa = ExtReal((total - lightest) / (N - 2))
    else:
        kappa = ExtReal.one()
    size = min(ExtReal(modulus(mean)), ExtReal.one())
    pairs = ExtReal(Fraction(1, N * (N - 1)))
    first = f_first(n, size, kappa.sqrt()) * spread * pairs
    cap = min(ExtReal(Fraction(1, 2)), (ExtReal(Fraction(n)) * size.complement()).reciprocal())
    second = ExtReal(Fraction(n * (n - 1))) * pairs * spread * cap
    return first, second


def _holds(lhs: ExtReal, rhs: ExtReal) -> bool:
    if lhs <= rhs:
        return True
    return lhs.isclose(rhs, rel_tol=INEQUALITY_REL_TOL)


def check_hadamard(Z: RectMatrix, budget: Optional[int] = None) -> bool:
    """``|Per(Z)| <= N!/(N-n)! prod_r ((1/N) sum_j |z[j][r]|^2)^(1/2)``.

    Rational inputs are compared exactly through squares.
    """
    per = permanent(Z, budget=budget)
    count = injection_count(Z.N, Z.n)
    column_means = [
        sum((modulus_sq(v) for v in Z.column(r)), Fraction(0)) / Z.N for r in range(Z.n)
    ]
    if isinstance(per, Fraction):
        rhs_sq: Fraction = Fraction(count * count)
        for m in column_means:
            rhs_sq *= Fraction(m)
        return per * per <= rhs_sq
    rhs = float(count) * math.prod(math.sqrt(m) for m in column_means)
    return _holds(ExtReal(abs(per)), ExtReal(rhs))


def check_bregman_minc(Z: RectMatrix, budget: Optional[int] = None) -> bool:
    """``Per(Z) <= N!/(N-n)! prod_r zeta(N mean[r]) / (N!)^(1/N)`` for 0-1 matrices.

    Raises:
        PreconditionError: If ``Z`` is not a 0-1 matrix.
    """
    if not Z.is_zero_one():
        raise PreconditionError("the Bregman-Minc bound needs a 0-1 matrix")
    N, n = Z.shape
    per = float(abs(complex(permanent(Z, budget=budget))))
    sums = [int(sum(Z.column(r), Fraction(0)).real) for r in range(n)]
    if any(c == 0 for c in sums):
        return per == 0
    log_rhs = math.log(injection_count(N, n)) + sum(
        math.log(zeta(c)) - math.lgamma(N + 1) / N for c in sums
    )
    return _holds(ExtReal(per), ExtReal(math.exp(log_rhs)))


def check_aux_inequalities(Z: RectMatrix, st: Optional[MatrixStats] = None) -> List[InequalityCheck]:
    """Evaluate the auxiliary inequalities behind the bound comparisons.

    Includes the exact identity ``alpha = (1/(nN)) sum |z|^2 - beta`` as a
    two-sided check. Inequalities in ``x = sqrt(beta)`` are evaluated only
    when ``beta <= 1``.
    """
    st = st or stats(Z)
    N, n = st.N, st.n
    checks: List[InequalityCheck] = []

    def add(name: str, lhs: ExtReal, rhs: ExtReal) -> None:
        checks.append(InequalityCheck(name=name, holds=_holds(lhs, rhs), lhs=lhs, rhs=rhs))

    mass = sum((modulus_sq(v) for row in Z.entries for v in row), Fraction(0)) / (n * N)
    direct = ExtReal(mass - st.beta.value) if mass >= st.beta.value else ExtReal.zero()
    checks.append(
        InequalityCheck(
            name="alpha_identity",
            holds=st.alpha.isclose(direct, rel_tol=INEQUALITY_REL_TOL, abs_tol=1e-15),
            lhs=st.alpha,
            rhs=direct,
        )
    )
    if n >= 2:
        add("theta_alpha", st.theta2, ExtReal(Fraction(2 * N, N - 1)) * st.alpha)
    if n >= 3:
        A = _abs_diffs(Z)
        rows = ExtReal.zero()
        for u, v in itertools.permutations(range(N), 2):
            rows = rows + ExtReal(sum((A[u][v][r] ** 2 for r in range(n)), Fraction(0))) ** Fraction(3, 2)
        scale = ExtReal(Fraction(math.factorial(n - 3), math.factorial(n))).sqrt()
        add("theta3_rows", st.theta3, ExtReal(Fraction(math.factorial(N - 2), math.factorial(N))) * scale * rows)
    if n >= 4:
        factor = ExtReal(Fraction(n * (n - 1), (n - 2) * (n - 3))).sqrt() * ExtReal(
            Fraction(N * (N - 1), (N - 2) * (N - 3))
        )
        add("theta4_theta", st.theta4, factor * st.theta2**2)
    if st.bounded:
        add("gamma_n_over_N", _gamma_or_infinity(st), ExtReal(Fraction(n, N)))
    if st.beta <= 1 and n >= 2:
        x = st.beta.sqrt()
        chain = ExtReal(Fraction(n - 1)) * _chain_sum(st.beta, n)
        add("f_first_chain", f_first(n, x, 1), chain)
        add(
            "f_first_min",
            chain,
            ExtReal(Fraction(n - 1)) * min(ExtReal(Fraction(n, 2)), x.complement().reciprocal()),
        )
        square_cap = x.complement().reciprocal() ** 2
        add(
            "f_second3_min",
            f_second3(n, x, 1),
            ExtReal(Fraction(2 * (n - 1))) * min(ExtReal(Fraction(n * (n - 2), 3)), square_cap),
        )
        if n >= 3:
            add(
                "g_second4_min",
                g_second4(n, x, 1),
                ExtReal(Fraction(2 * (n - 1) * (n - 3)))
                * min(ExtReal(Fraction(n * (n - 2), 8)), square_cap),
            )
    return checks
