"""Numerical audits of the divisor-sum / double-series identities.

Each check turns one claim into a parameterized computation and emits
an AuditReport with a verdict:

* pass/fail for claims with a decidable finite check (exact integer
  identities, residuals under a stated tolerance);
* diagnostic for convergence-behavior probes, where the report's job is
  to exhibit the numbers, not to adjudicate a limit statement.

The centerpiece is the double array

    a[i][j] = (-1)^(j/i + 1) j^-s (-1)^Omega(i)   if i | j, else 0

at points s where the alternating series sum (-1)^(n+1) n^-s vanishes.
Row-order iterated sums scale every row by that vanishing value, while
column sums collapse to beta(j)/j^s whose partial sums track
(1 - 2^(1-s)) zeta(2s).  interchange_probe lays the two orders side by
side at a located critical-line zero; at desk scale they are starkly
different, which is exactly what the report documents.

All derived verdict thresholds live in Thresholds, with provenance
from the pre-build reference sweep (tools/make_reference_values.py)
repeated in the report notes.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundsError, DomainError, UsageError
from .ntheory import (
    FactorSieve,
    beta_bruteforce_table,
    beta_closed,
    beta_closed_table,
    liouville,
    liouville_table,
    primes,
)
from .zeta import LN2, as_eval_point, eta, eta_partial, zeta_em, zeta_eta, zeta_global
from .zeros import ZeroRecord, first_zeros

CLAIM_IDS = (
    "beta33",
    "mult33",
    "split36",
    "identity36",
    "trivial25",
    "zerofree24",
    "tails35",
    "interchange35",
)

VERDICTS = ("pass", "fail", "diagnostic")


@dataclass(frozen=True)
class Thresholds:
    """Verdict thresholds, fixed ahead of time.

    The two derived numbers come from the pre-build reference sweep
    (tools/make_reference_values.py, mpmath + brute-force integers):

    * zero_free_margin: half the minimum |zeta| = 0.0471854143 observed
      over sigma in {0.10..0.45, 0.55..0.90}, t in [2, 30] step 0.1
      (attained at sigma 0.55, t 14.1);
    * interchange_column_min: half the minimum column-order partial-sum
      magnitude 4.6263070959 observed at the first critical-line zero
      over J in {1e4, 1e5, 1e6}.
    """

    rearrangement_tol: float = 1e-12
    trivial_zero_tol: float = 1e-8
    nonzero_control_min: float = 1e-3
    zero_free_margin: float = 0.0235927071711
    interchange_row_max: float = 1e-4
    interchange_column_min: float = 2.3131535479
    residual_jitter_factor: float = 1.10

    note_zero_free: str = (
        "margin 0.0235927071711 is half the sweep minimum |zeta| = "
        "0.0471854143 at sigma=0.55, t=14.1 (pre-build reference sweep, "
        "tools/make_reference_values.py)"
    )
    note_interchange: str = (
        "column threshold 2.3131535479 is half the sweep minimum "
        "|column partial| = 4.6263070959 over J in {1e4, 1e5, 1e6} at the "
        "first zero (pre-build direct-summation sweep, "
        "tools/make_reference_values.py)"
    )


DEFAULT_THRESHOLDS = Thresholds()


@dataclass(frozen=True)
class Series:
    """Plot-ready tabular data attached to a report."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


@dataclass(frozen=True)
class AuditReport:
    """One claim, its parameters, computed metrics, and a verdict."""

    claim_id: str
    params: dict
    metrics: dict
    verdict: str
    series: Series | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.claim_id not in CLAIM_IDS:
            raise UsageError(f"unknown claim id {self.claim_id!r}")
        if self.verdict not in VERDICTS:
            raise UsageError(f"unknown verdict {self.verdict!r}")


@dataclass(frozen=True)
class TailDiagnostics:
    """Row-tail supremum data for the double array at a zero.

    sup_tail is max over rows m <= m_max of the absolute tail
    |sum_{n >= n1} a[m][n]|, argmax_m its location, and eta_bound_M a
    finite-grid estimate (times a 2x safety factor) of the constant
    bounding every partial sum of the alternating series.
    """

    s: complex
    n1: int
    m_max: int
    sup_tail: float
    argmax_m: int
    eta_bound_M: float


@dataclass(frozen=True)
class SplitSeries:
    """Partial sums of the square / twice-a-square split at depth J."""

    J: int
    b_partial: complex
    c_partial: complex
    combined: complex


# ------------------------------------------------------------ double array


def a_ij(sieve: FactorSieve, i: int, j: int, s) -> complex:
    """Entry (i, j) of the double array at evaluation point s."""
    s = as_eval_point(s)
    i, j = int(i), int(j)
    if i < 1 or j < 1:
        raise DomainError(f"indices must be >= 1, got i={i}, j={j}")
    if j % i:
        return 0j
    sign = 1.0 if (j // i) % 2 else -1.0  # (-1)^(j/i + 1)
    return sign * liouville(sieve, i) * j ** (-s)


def row_sum_partial(sieve: FactorSieve, i: int, L: int, s) -> complex:
    """Partial row sum over j = i, 2i, ..., Li.

    Factoring j = i*l gives lambda(i) i^-s times the alternating
    partial sum through L; the equality with direct term-by-term
    summation of a_ij is exercised in the tests.
    """
    s = as_eval_point(s)
    lam = liouville(sieve, i)
    return lam * int(i) ** (-s) * eta_partial(s, L).value


def column_sum(sieve: FactorSieve, j: int, s) -> complex:
    """Full column sum: beta(j) / j^s via the closed form."""
    s = as_eval_point(s)
    j = int(j)
    if not 1 <= j <= sieve.limit:
        raise BoundsError(f"j={j} outside sieve range [1, {sieve.limit}]")
    return beta_closed(j) * j ** (-s)


def _powers(count: int, s: complex) -> np.ndarray:
    """j^-s for j = 1..count as a complex array."""
    j = np.arange(1, count + 1, dtype=np.float64)
    return np.exp(-s * np.log(j))


# -------------------------------------------------------------- beta checks


def check_beta_theorem(sieve: FactorSieve, n_max: int) -> AuditReport:
    """Brute-force divisor sums against the closed form for all n <= n_max."""
    n_max = int(n_max)
    brute = beta_bruteforce_table(sieve, n_max)
    closed = beta_closed_table(n_max)
    bad = np.flatnonzero(brute[1:] != closed[1:]) + 1
    metrics = {
        "n_checked": n_max,
        "mismatch_count": int(bad.size),
        "first_mismatch": int(bad[0]) if bad.size else None,
    }
    verdict = "pass" if bad.size == 0 else "fail"
    return AuditReport("beta33", {"n": n_max}, metrics, verdict)


def check_multiplicative_identity(sieve: FactorSieve, n_max: int) -> AuditReport:
    """beta(p^a m) = beta(p^a) beta(m) for odd prime powers and odd coprime m.

    Both sides come from the brute-force table, so the check does not
    assume the closed form.  Covers every triple with p^a * m <= n_max.
    """
    n_max = int(n_max)
    brute = beta_bruteforce_table(sieve, n_max).astype(np.int64)
    checked = 0
    failures = 0
    first_failure = None
    for p in primes(sieve, n_max):
        p = int(p)
        if p == 2:
            continue
        q = p
        while q <= n_max:
            m = np.arange(1, n_max // q + 1, 2, dtype=np.int64)
            m = m[m % p != 0]
            if m.size:
                lhs = brute[q * m]
                rhs = brute[q] * brute[m]
                bad = np.flatnonzero(lhs != rhs)
                checked += int(m.size)
                if bad.size:
                    failures += int(bad.size)
                    if first_failure is None:
                        first_failure = {
                            "p": p,
                            "a": int(round(math.log(q, p))),
                            "m": int(m[bad[0]]),
                        }
            q *= p
    metrics = {
        "triples_checked": checked,
        "failures": failures,
        "first_failure": first_failure,
    }
    verdict = "pass" if failures == 0 else "fail"
    return AuditReport("mult33", {"n": n_max}, metrics, verdict)


# ------------------------------------------------------------- split series


def _square_indices(limit: int) -> np.ndarray:
    return np.arange(1, math.isqrt(limit) + 1, dtype=np.int64) ** 2


def _twice_square_indices(limit: int) -> np.ndarray:
    return 2 * np.arange(1, math.isqrt(limit // 2) + 1, dtype=np.int64) ** 2


def split_series(sieve: FactorSieve, s, J: int) -> SplitSeries:
    """Termwise partial sums of beta(j)/j^s and of its two-class split.

    combined sums beta(j) j^-s for every j <= J with beta from the
    brute-force table; b_partial and c_partial regroup the identical
    nonzero terms by squareness class.
    """
    s = as_eval_point(s)
    J = int(J)
    if s.real <= 0.5:
        raise DomainError(f"absolute convergence needs Re(s) > 1/2, got {s}")
    if J < 1:
        raise DomainError(f"J must be >= 1, got {J}")
    beta = beta_bruteforce_table(sieve, J)
    pows = _powers(J, s)
    combined = (beta[1:] * pows).sum()
    b_partial = pows[_square_indices(J) - 1].sum()
    c_partial = -2.0 * pows[_twice_square_indices(J) - 1].sum()
    return SplitSeries(J, complex(b_partial), complex(c_partial), complex(combined))


def check_split_identity(
    sieve: FactorSieve,
    s,
    J: int,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AuditReport:
    """Finite-J regrouping check: combined == b_partial + c_partial.

    The two sides add the same floating-point terms in different
    orders, so they must agree to rounding (rearrangement_tol); the
    residuals against zeta(2s) and -2^(1-s) zeta(2s) are reported for
    cross-J comparison.
    """
    sp = split_series(sieve, s, J)
    s = as_eval_point(s)
    z2s = zeta_em(2 * s).value
    two = cmath.exp((1 - s) * LN2)
    gap = abs(sp.combined - (sp.b_partial + sp.c_partial))
    metrics = {
        "combined": sp.combined,
        "b_partial": sp.b_partial,
        "c_partial": sp.c_partial,
        "regroup_gap": gap,
        "b_residual": abs(sp.b_partial - z2s),
        "c_residual": abs(sp.c_partial + two * z2s),
        "zeta_2s": z2s,
    }
    verdict = "pass" if gap < thresholds.rearrangement_tol else "fail"
    return AuditReport(
        "split36", {"s": s, "J": sp.J}, metrics, verdict
    )


def check_split_identity_sweep(
    sieve: FactorSieve,
    s,
    J_grid: list[int],
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AuditReport:
    """check_split_identity along an ascending J grid, one report.

    Passes when every regrouping gap is below rearrangement_tol and the
    b/c residuals improve along the grid (a step may backslide by at
    most the jitter factor).
    """
    J_grid = _ascending_grid(J_grid, "J_grid")
    s = as_eval_point(s)
    rows = []
    for J in J_grid:
        r = check_split_identity(sieve, s, J, thresholds).metrics
        rows.append((J, r["regroup_gap"], r["b_residual"], r["c_residual"]))
    ok_gap = all(r[1] < thresholds.rearrangement_tol for r in rows)
    ok_trend = _improves([r[2] for r in rows], thresholds.residual_jitter_factor)
    ok_trend &= _improves([r[3] for r in rows], thresholds.residual_jitter_factor)
    metrics = {
        "max_regroup_gap": max(r[1] for r in rows),
        "b_residuals": {str(r[0]): r[2] for r in rows},
        "c_residuals": {str(r[0]): r[3] for r in rows},
        "residuals_improve": ok_trend,
    }
    verdict = "pass" if (ok_gap and ok_trend) else "fail"
    series = Series(("J", "regroup_gap", "b_residual", "c_residual"), tuple(rows))
    return AuditReport(
        "split36", {"s": s, "J_grid": list(J_grid)}, metrics, verdict, series
    )


def _improves(values: list[float], jitter: float) -> bool:
    return all(b <= a * jitter for a, b in zip(values, values[1:])) and (
        values[-1] < values[0]
    )


def _ascending_grid(grid, name: str) -> list[int]:
    grid = [int(x) for x in grid]
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError(f"{name} must be a nonempty ascending list, got {grid}")
    return grid


# --------------------------------------------------------- dirichlet identity


def identity_tail_bound(s, J: int) -> float:
    """Analytic bound on |sum_{j>J} beta(j)/j^s| for Re(s) > 1/2.

    Both square classes are bounded by absolute values and the integral
    tail estimate sum_{m>=a} m^-x <= a^-x + a^(1-x)/(x-1).
    """
    s = as_eval_point(s)
    x = 2.0 * s.real
    if x <= 1.0:
        raise DomainError(f"tail bound needs Re(s) > 1/2, got {s}")

    def geom(a: int) -> float:
        return a ** (-x) + a ** (1.0 - x) / (x - 1.0)

    b_side = geom(math.isqrt(J) + 1)
    c_side = 2.0 ** (1.0 - s.real) * geom(math.isqrt(J // 2) + 1)
    return b_side + c_side


def check_identity(
    sieve: FactorSieve,
    s,
    J: int,
    tol: float | None = None,
) -> AuditReport:
    """Partial sums of beta(j)/j^s against (1 - 2^(1-s)) zeta(2s).

    beta comes from the brute-force table; zeta(2s) from the
    Euler-Maclaurin evaluator.  tol defaults to the analytic tail bound
    at depth J.  The gap is also recorded along a decade grid up to J
    so reports exhibit the convergence trend.
    """
    s = as_eval_point(s)
    J = int(J)
    if s.real <= 0.5:
        raise DomainError(f"absolute convergence needs Re(s) > 1/2, got {s}")
    if J < 1:
        raise DomainError(f"J must be >= 1, got {J}")
    if tol is None:
        tol = identity_tail_bound(s, J)
    beta = beta_bruteforce_table(sieve, J)
    terms = beta[1:] * _powers(J, s)
    partial = np.cumsum(terms)
    reference = (1.0 - cmath.exp((1 - s) * LN2)) * zeta_em(2 * s).value
    grid = sorted({10**k for k in range(3, 13) if 10**k < J} | {J})
    grid = [g for g in grid if g >= 1]
    rows = [(g, float(abs(partial[g - 1] - reference))) for g in grid]
    gap = rows[-1][1]
    metrics = {
        "gap": gap,
        "tol": float(tol),
        "partial_at_J": complex(partial[-1]),
        "reference": complex(reference),
        "gaps": {str(g): v for g, v in rows},
    }
    verdict = "pass" if gap < tol else "fail"
    series = Series(("J", "gap"), tuple(rows))
    return AuditReport(
        "identity36", {"s": s, "J": J, "tol": float(tol)}, metrics, verdict, series
    )


# -------------------------------------------------------------- tail probes

ZERO_RESIDUAL_MAX = 1e-6


def tail_sup(s, n1: int, m_max: int | None = None) -> TailDiagnostics:
    """Supremum over rows m <= m_max of the absolute row tail from n1.

    Requires s to be a located zero of the alternating series
    (|eta(s)| < 1e-6): then the tail from l >= k+1 equals minus the
    partial sum through k, so no second truncation is introduced (the
    zero's residual is the only bias, far below the tail sizes probed).
    Row m's tail is |m^-s| * |partial(floor(n1/m))|.
    """
    s = as_eval_point(s)
    n1 = int(n1)
    if n1 < 2:
        raise DomainError(f"n1 must be >= 2, got {n1}")
    m_max = n1 if m_max is None else int(m_max)
    if m_max < n1:
        raise DomainError(f"m_max must be >= n1, got m_max={m_max}, n1={n1}")
    residual = abs(eta(s, 1e-12).value)
    if residual >= ZERO_RESIDUAL_MAX:
        raise DomainError(
            f"|eta(s)| = {residual:.3e} at s={s}; tail_sup needs a located "
            f"zero (< {ZERO_RESIDUAL_MAX})"
        )
    signs = np.where(np.arange(1, n1 + 1) & 1, 1.0, -1.0)
    terms = signs * _powers(n1, s)
    partial = np.concatenate(([0j], np.cumsum(terms)))
    m = np.arange(1, m_max + 1, dtype=np.int64)
    tails = np.abs(partial[n1 // m])
    vals = m.astype(np.float64) ** (-s.real) * tails
    arg = int(np.argmax(vals))
    bound_m = 2.0 * float(np.abs(partial).max())
    return TailDiagnostics(
        s, n1, m_max, float(vals[arg]), int(m[arg]), bound_m
    )


def tail_sup_report(rho: ZeroRecord, n1_grid: list[int]) -> AuditReport:
    """tail_sup along an n1 grid at a located zero; always diagnostic."""
    n1_grid = _ascending_grid(n1_grid, "n1_grid")
    s = complex(0.5, rho.t)
    rows = []
    for n1 in n1_grid:
        d = tail_sup(s, n1)
        rows.append((n1, d.sup_tail, d.argmax_m, d.eta_bound_M))
    metrics = {
        "zero_t": rho.t,
        "eta_residual": rho.residual,
        "sup_tails": {str(r[0]): r[1] for r in rows},
        "sup_tail_decreasing": all(b[1] <= a[1] for a, b in zip(rows, rows[1:])),
        "eta_bound_M": rows[-1][3],
    }
    series = Series(("n1", "sup_tail", "argmax_m", "eta_bound_M"), tuple(rows))
    return AuditReport(
        "tails35",
        {"zero_t": rho.t, "n1_grid": list(n1_grid)},
        metrics,
        "diagnostic",
        series,
    )


def interchange_probe(
    sieve: FactorSieve,
    rho: ZeroRecord,
    M_grid: list[int],
    J_grid: list[int],
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AuditReport:
    """Row-order versus column-order partial sums at a located zero.

    Row order: sum over m <= M of lambda(m) m^-s times the full row
    value eta(s), which is ~0 at a zero, so every row-order partial is
    ~0.  Column order: sum over j <= J of beta(j)/j^s, which tracks the
    nonzero reference (1 - 2^(1-s)) zeta(2s).  Verdict is always
    diagnostic: the probe exhibits the contrast, it does not adjudicate
    the limit interchange itself.
    """
    M_grid = _ascending_grid(M_grid, "M_grid")
    J_grid = _ascending_grid(J_grid, "J_grid")
    s = complex(0.5, rho.t)
    eta_value = eta(s, 1e-12).value

    lam = liouville_table(sieve, M_grid[-1]).astype(np.float64)
    row_cum = np.cumsum(lam[1:] * _powers(M_grid[-1], s))
    row_order = {str(M): float(abs(row_cum[M - 1] * eta_value)) for M in M_grid}

    max_j = J_grid[-1]
    sq = np.cumsum(np.exp(-2 * s * np.log(np.arange(1, math.isqrt(max_j) + 1))))
    sq = np.concatenate(([0j], sq))
    two = cmath.exp((1 - s) * LN2)
    cols = {}
    for J in J_grid:
        cols[J] = complex(sq[math.isqrt(J)] - two * sq[math.isqrt(J // 2)])

    try:
        z2s = zeta_em(2 * s).value
        z2s_path = "em"
    except DomainError:
        z2s = zeta_eta(2 * s).value
        z2s_path = "eta"
    reference = (1.0 - two) * z2s

    col_abs_min = min(abs(v) for v in cols.values())
    gap_max = max(abs(v - reference) for v in cols.values())
    metrics = {
        "zero_t": rho.t,
        "eta_residual": float(abs(eta_value)),
        "row_order_abs": row_order,
        "row_order_abs_max": max(row_order.values()),
        "column_order": {str(J): v for J, v in cols.items()},
        "column_order_abs_min": col_abs_min,
        "column_gap_to_reference_max": gap_max,
        "reference": reference,
        "reference_abs": abs(reference),
        "zeta_2s": z2s,
        "zeta_2s_evaluator": z2s_path,
        "row_threshold": thresholds.interchange_row_max,
        "column_threshold": thresholds.interchange_column_min,
    }
    rows = tuple(
        (J, cols[J].real, cols[J].imag, abs(cols[J]), abs(cols[J] - reference))
        for J in J_grid
    )
    series = Series(("J", "col_re", "col_im", "col_abs", "gap_to_reference"), rows)
    return AuditReport(
        "interchange35",
        {"zero_t": rho.t, "M_grid": list(M_grid), "J_grid": list(J_grid)},
        metrics,
        "diagnostic",
        series,
        notes=(thresholds.note_interchange,),
    )


# ---------------------------------------------------------------- zeta side


def check_trivial_zeros(
    k_max: int, tol: float = DEFAULT_THRESHOLDS.trivial_zero_tol
) -> AuditReport:
    """zeta(-2k) vanishes for k = 1..k_max, on both evaluator paths.

    zeta_global must return exactly 0 (its sin factor recognizes the
    even integers); the independent Euler-Maclaurin path must agree to
    tol.  zeta(-3) = 1/120 is reported as the nonzero control.
    """
    k_max = int(k_max)
    if not 1 <= k_max <= 5:
        raise DomainError(f"k_max must be in [1, 5], got {k_max}")
    rows = []
    all_exact = True
    all_small = True
    for k in range(1, k_max + 1):
        g = zeta_global(-2.0 * k)
        em = abs(zeta_em(-2.0 * k).value)
        exact = g.value == 0
        all_exact &= exact
        all_small &= em < tol
        rows.append((k, em, 1.0 if exact else 0.0))
    control = abs(zeta_em(-3.0).value)
    metrics = {
        "em_residuals": {str(r[0]): r[1] for r in rows},
        "max_em_residual": max(r[1] for r in rows),
        "all_exact_zero": all_exact,
        "control_abs_zeta_minus3": control,
    }
    verdict = "pass" if (all_exact and all_small) else "fail"
    series = Series(("k", "em_residual", "global_exact_zero"), tuple(rows))
    return AuditReport(
        "trivial25", {"k_max": k_max, "tol": tol}, metrics, verdict, series
    )


def default_zero_free_grids() -> tuple[list[float], list[float]]:
    """The standard off-critical-line scan grid."""
    sigmas = [round(0.10 + 0.05 * i, 2) for i in range(8)]
    sigmas += [round(0.55 + 0.05 * i, 2) for i in range(8)]
    ts = [round(2.0 + 0.1 * i, 1) for i in range(281)]
    return sigmas, ts


def check_zero_free_region(
    sigma_grid: list[float],
    t_grid: list[float],
    margin: float = DEFAULT_THRESHOLDS.zero_free_margin,
    tol: float = 1e-8,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> AuditReport:
    """min |zeta| over an off-critical-line grid must clear the margin.

    Grid points must keep distance >= 0.05 from the critical line and
    from s = 1; degenerate grids are rejected rather than passed
    vacuously.
    """
    sigma_grid = [float(x) for x in sigma_grid]
    t_grid = [float(x) for x in t_grid]
    if not sigma_grid or not t_grid or len(sigma_grid) * len(t_grid) < 2:
        raise UsageError("grids must contain at least two points in total")
    slack = 0.05 - 1e-9  # distance exactly 0.05 is allowed despite rounding
    for sig in sigma_grid:
        if abs(sig - 0.5) < slack:
            raise UsageError(f"sigma={sig} within 0.05 of the critical line")
        for t in t_grid:
            if abs(complex(sig, t) - 1.0) < slack:
                raise UsageError(f"grid point {sig}+{t}i within 0.05 of s = 1")
    best = (math.inf, None, None)
    rows = []
    for sig in sigma_grid:
        row_best = (math.inf, None)
        for t in t_grid:
            try:
                v = abs(zeta_eta(complex(sig, t), tol).value)
            except Exception:
                v = abs(zeta_em(complex(sig, t), tol).value)
            if v < row_best[0]:
                row_best = (v, t)
            if v < best[0]:
                best = (v, sig, t)
        rows.append((sig, row_best[0], row_best[1]))
    metrics = {
        "min_abs_zeta": best[0],
        "argmin_sigma": best[1],
        "argmin_t": best[2],
        "margin": float(margin),
        "points": len(sigma_grid) * len(t_grid),
    }
    verdict = "pass" if best[0] > margin else "fail"
    series = Series(("sigma", "min_abs_zeta", "argmin_t"), tuple(rows))
    notes = ()
    if margin == thresholds.zero_free_margin:
        notes = (thresholds.note_zero_free,)
    return AuditReport(
        "zerofree24",
        {"sigma_points": len(sigma_grid), "t_points": len(t_grid), "margin": float(margin)},
        metrics,
        verdict,
        series,
        notes,
    )


# ------------------------------------------------------------------ run all

DEFAULT_AUDIT_SIEVE = 1_000_000


def run_all(
    sieve: FactorSieve,
    tol: float = 1e-10,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
    progress=None,
) -> list[AuditReport]:
    """Every claim with its default parameters, in fixed order.

    The caller supplies the sieve (>= 1e6 recommended; smaller sieves
    scale the exhaustive checks down with it).  progress, if given, is
    called with each claim id before it runs.
    """
    limit = sieve.limit

    def tick(name):
        if progress is not None:
            progress(name)

    reports = []
    tick("beta33")
    reports.append(check_beta_theorem(sieve, min(limit, 1_000_000)))
    tick("mult33")
    reports.append(check_multiplicative_identity(sieve, min(limit, 100_000)))
    tick("split36")
    grid = [j for j in (1_000, 10_000, 100_000) if j <= limit] or [limit]
    reports.append(check_split_identity_sweep(sieve, 0.75, grid, thresholds))
    tick("identity36")
    reports.append(check_identity(sieve, 0.75, min(limit, 1_000_000)))
    tick("trivial25")
    reports.append(check_trivial_zeros(5, thresholds.trivial_zero_tol))
    tick("zerofree24")
    sigmas, ts = default_zero_free_grids()
    reports.append(
        check_zero_free_region(sigmas, ts, thresholds.zero_free_margin, 1e-8, thresholds)
    )
    rho = first_zeros(1, max(tol, 1e-9))[0]
    tick("tails35")
    reports.append(tail_sup_report(rho, [100, 1_000, 10_000]))
    tick("interchange35")
    m_grid = [m for m in (100, 1_000, 10_000) if m <= limit] or [limit]
    reports.append(
        interchange_probe(sieve, rho, m_grid, [10_000, 100_000, 1_000_000], thresholds)
    )
    return reports
