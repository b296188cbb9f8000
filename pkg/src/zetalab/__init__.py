"""zetalab: evaluators, critical-line zeros, and identity audits around
the Riemann zeta function.

The library side has four layers:

* ntheory: exact integer arithmetic (smallest-prime-factor sieve,
  Omega, the Liouville sign, divisors, and the alternating divisor sum
  beta with its 1 / -2 / 0 closed form);
* zeta: double-precision complex evaluation of the alternating (eta)
  series, two independent zeta paths, complex Gamma, and the Hardy Z
  apparatus;
* zeros: bracketing and bisection of critical-line zeros;
* audit: parameterized numerical checks that turn the divisor-sum and
  double-series identities into pass/fail/diagnostic reports.

The zetalab CLI (see zetalab.cli) exposes all of it as subcommands.
"""

from .audit import (
    AuditReport,
    Series,
    SplitSeries,
    TailDiagnostics,
    Thresholds,
    a_ij,
    check_beta_theorem,
    check_identity,
    check_multiplicative_identity,
    check_split_identity,
    check_split_identity_sweep,
    check_trivial_zeros,
    check_zero_free_region,
    column_sum,
    identity_tail_bound,
    interchange_probe,
    row_sum_partial,
    run_all,
    split_series,
    tail_sup,
    tail_sup_report,
)
from .errors import (
    BoundsError,
    ConditioningError,
    DomainError,
    PoleError,
    PrecisionError,
    RefinementError,
    UsageError,
    ZetalabError,
)
from .ntheory import (
    BetaClass,
    FactorSieve,
    beta_bruteforce,
    beta_bruteforce_table,
    beta_closed,
    beta_closed_table,
    big_omega,
    build_sieve,
    classify,
    divisors,
    factorize,
    isqrt,
    liouville,
    liouville_table,
    omega_table,
    primes,
)
from .zeta import (
    EvalPoint,
    SeriesValue,
    as_eval_point,
    dirichlet_partial,
    eta,
    eta_partial,
    gamma,
    hardy_z,
    riemann_siegel_theta,
    zeta_em,
    zeta_eta,
    zeta_global,
)
from .zeros import ZeroBracket, ZeroRecord, first_zeros, refine, scan_brackets

__version__ = "0.1.0"
