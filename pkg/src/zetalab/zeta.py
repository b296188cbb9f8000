"""Double-precision complex evaluators around the Riemann zeta function.

Two independent zeta paths are provided on purpose:

* zeta_eta: the alternating series sum (-1)^(n+1) n^-s, accelerated by
  the Cohen / Rodriguez Villegas / Zagier binomial-Chebyshev scheme and
  divided by (1 - 2^(1-s)).  Valid for Re(s) > 0 away from the zeros of
  the denominator at s = 1 + 2*pi*i*k/ln 2 (k != 0), where it refuses
  with a ConditioningError.

* zeta_em: Euler-Maclaurin summation with Bernoulli correction terms,
  sharing no series code with the eta path.  For Re(s) < 0 it reflects
  through the functional equation into the well-conditioned half plane.

zeta_global stitches the two into an evaluator for all s != 1 via the
functional equation

    zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s),

returning exactly 0 at negative even integers (the sin factor is
recognized as an exact zero instead of leaving a ~1e-16 residue).

The critical-line apparatus (riemann_siegel_theta, hardy_z) turns
zeta(1/2 + it) into the real-valued Z(t) whose sign changes locate
zeros.

Every evaluator returns a SeriesValue bundling the value with an
absolute-error estimate and the number of terms spent.  The estimates
are upper estimates under each evaluator's stated model, not certified
bounds; the test suite cross-validates the two zeta paths against each
other and against independently computed references.
"""

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditioningError, DomainError, PoleError, PrecisionError

EvalPoint = complex

_EPS = sys.float_info.epsilon
LN2 = math.log(2.0)
TWO_PI = 2.0 * math.pi

# zeros of (1 - 2^(1-s)) other than s = 1 sit at 1 + i*k*DENOM_ZERO_SPACING
DENOM_ZERO_SPACING = TWO_PI / LN2
HAZARD_RADIUS = 0.05

TOL_FLOOR = 1e-14


@dataclass(frozen=True)
class SeriesValue:
    """A complex evaluation plus its error budget.

    abs_err_est is an upper estimate of the absolute truncation and
    rounding error under the producing evaluator's error model
    (math.inf flags a divergent tail); terms_used counts series terms.
    """

    value: complex
    abs_err_est: float
    terms_used: int


def as_eval_point(s) -> complex:
    """Coerce s to a finite complex evaluation point."""
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"evaluation point must be finite, got {s}")
    return s


# ----------------------------------------------------------------- partials


def dirichlet_partial(s, n_terms: int) -> SeriesValue:
    """Partial sum of sum n^-s for n <= n_terms.

    For Re(s) > 1 the error estimate is the integral tail bound
    N^(1-sigma)/(sigma-1); elsewhere the tail is flagged unbounded.
    """
    s = as_eval_point(s)
    n_terms = int(n_terms)
    if n_terms < 1:
        raise DomainError(f"need at least one term, got {n_terms}")
    total = 0j
    for n in range(1, n_terms + 1):
        total += n ** (-s)
    sigma = s.real
    if sigma > 1.0:
        err = n_terms ** (1.0 - sigma) / (sigma - 1.0)
    else:
        err = math.inf
    return SeriesValue(total, err, n_terms)


def eta_partial(s, n_terms: int) -> SeriesValue:
    """Partial sum of the alternating series sum (-1)^(n+1) n^-s.

    Requires Re(s) > 0.  The error estimate is the magnitude of the
    first omitted term; for real s that is the exact alternating-series
    bound, for complex s a heuristic.
    """
    s = as_eval_point(s)
    if s.real <= 0.0:
        raise DomainError(f"alternating series needs Re(s) > 0, got {s}")
    n_terms = int(n_terms)
    if n_terms < 1:
        raise DomainError(f"need at least one term, got {n_terms}")
    total = 0j
    sign = 1.0
    for n in range(1, n_terms + 1):
        total += sign * n ** (-s)
        sign = -sign
    err = (n_terms + 1) ** (-s.real)
    return SeriesValue(total, err, n_terms)


# -------------------------------------------------------------------- gamma

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def gamma(z) -> complex:
    """Complex Gamma(z): Lanczos approximation, g = 607/128, 15 terms.

    Reflection handles Re(z) < 1/2.  Relative error stays near 1e-14 on
    the validated box |Re z| <= 20, |Im z| <= 60 (checked in the test
    suite against independent references and the recurrence).
    """
    z = as_eval_point(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (w + k)
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * t ** (w + 0.5) * cmath.exp(-t) * acc


# ------------------------------------------------------------ eta (series)

_ACCEL_RATE = math.log(3.0 + math.sqrt(8.0))
_ACCEL_MAX_TERMS = 380  # (3+sqrt 8)^n must stay below float overflow


def _accel_plan(s: complex, tol: float) -> tuple[int, float]:
    """Pick the acceleration order n and its truncation constant.

    Writing a_k = (k+1)^-s as moments of the weight
    (-ln x)^(s-1)/Gamma(s) on [0,1], the scheme's truncation error is
    bounded by tv * (3+sqrt 8)^-n with tv = Gamma(sigma)/|Gamma(s)|,
    the weight's total variation.  tv is evaluated in log space; sigma
    is clamped to 30 since tv only shrinks beyond that.
    """
    sigma = min(s.real, 30.0)
    if s.imag == 0.0:
        log_tv = 0.0
    else:
        log_tv = math.lgamma(sigma) - math.log(abs(gamma(complex(sigma, s.imag))))
    log_tv = max(0.0, log_tv)
    n = math.ceil((log_tv + math.log(1.0 / tol)) / _ACCEL_RATE) + 2
    n = max(n, 12)
    if n > _ACCEL_MAX_TERMS:
        raise PrecisionError(
            f"tol={tol} needs {n} accelerated terms at s={s}; "
            f"cap is {_ACCEL_MAX_TERMS}"
        )
    return n, math.exp(min(700.0, log_tv))


def eta(s, tol: float = 1e-12) -> SeriesValue:
    """Accelerated evaluation of sum (-1)^(n+1) n^-s for Re(s) > 0.

    Binomial/Chebyshev weighting of the alternating partial sums gives
    geometric convergence at rate 3+sqrt(8) per term.  The error model
    (see _accel_plan) is exact for real s and a heuristic for complex
    s; accelerated values used in acceptance checks are additionally
    cross-checked against the Euler-Maclaurin path.
    """
    s = as_eval_point(s)
    if s.real <= 0.0:
        raise DomainError(f"alternating series needs Re(s) > 0, got {s}")
    if tol < TOL_FLOOR:
        raise PrecisionError(f"tol={tol} below double-precision floor {TOL_FLOOR}")
    n, tv = _accel_plan(s, tol)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    total = 0j
    total_abs = 0.0
    for k in range(n):
        c = b - c
        a_k = (k + 1) ** (-s)
        total += c * a_k
        total_abs += abs(c) * abs(a_k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    value = total / d
    trunc = tv * math.exp(-_ACCEL_RATE * n)
    rounding = 4.0 * _EPS * total_abs / d
    return SeriesValue(value, trunc + rounding, n)


def nearest_denominator_zero(s: complex) -> complex | None:
    """The closest zero of (1 - 2^(1-s)) with k != 0, or None."""
    k = round(s.imag / DENOM_ZERO_SPACING)
    if k == 0:
        return None
    return complex(1.0, k * DENOM_ZERO_SPACING)


def zeta_eta(s, tol: float = 1e-12) -> SeriesValue:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) for Re(s) > 0, s != 1.

    Within HAZARD_RADIUS of a denominator zero 1 + 2*pi*i*k/ln2 (k != 0)
    the division is ill-conditioned even though zeta itself is regular
    there; a ConditioningError tells the caller to use zeta_em instead.
    """
    s = as_eval_point(s)
    if s == 1:
        raise PoleError("zeta pole at s = 1")
    if s.real <= 0.0:
        raise DomainError(f"eta-based evaluator needs Re(s) > 0, got {s}")
    hazard = nearest_denominator_zero(s)
    if hazard is not None and abs(s - hazard) < HAZARD_RADIUS:
        raise ConditioningError(
            f"s={s} is within {HAZARD_RADIUS} of denominator zero {hazard}; "
            "evaluate with zeta_em instead"
        )
    denom = 1.0 - cmath.exp((1.0 - s) * LN2)
    ev = eta(s, max(TOL_FLOOR, 0.5 * tol * min(abs(denom), 1.0)))
    value = ev.value / denom
    err = (ev.abs_err_est + 4.0 * _EPS * (abs(ev.value) + abs(value))) / abs(denom)
    return SeriesValue(value, err, ev.terms_used)


# --------------------------------------------------------- Euler-Maclaurin

_EM_SIGMA_MAX = 10.0
_EM_T_MAX = 60.0
_EM_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
)
# B_{2k} / (2k)! for k = 1..9 (the 9th drives the remainder estimate)
_EM_COEF = tuple(
    float(b / math.factorial(2 * (k + 1))) for k, b in enumerate(_EM_BERNOULLI)
)
_EM_ORDER = 8


def _em_sum(s: complex, n_shift: int) -> tuple[complex, float, int]:
    """One Euler-Maclaurin pass with shift point n_shift and 8 Bernoulli
    correction terms; returns (value, error estimate, terms used)."""
    partial = 0j
    mag = 0.0
    for n in range(1, n_shift):
        term = n ** (-s)
        partial += term
        mag += abs(term)
    tail_pole = n_shift ** (1.0 - s) / (s - 1.0)
    tail_half = 0.5 * n_shift ** (-s)
    total = partial + tail_pole + tail_half
    mag += abs(tail_pole) + abs(tail_half)
    poch = s  # rising product s(s+1)...(s+2k-2)
    npow = n_shift ** (-s - 1.0)
    scale = 1.0 / (n_shift * n_shift)
    for k in range(1, _EM_ORDER + 1):
        term = _EM_COEF[k - 1] * poch * npow
        total += term
        mag += abs(term)
        poch *= (s + (2 * k - 1)) * (s + 2 * k)
        npow *= scale
    # standard remainder bound: next term times |s+2K+1|/(sigma+2K+1)
    next_term = abs(_EM_COEF[_EM_ORDER] * poch * npow)
    est = next_term * abs(s + (2 * _EM_ORDER + 1)) / (s.real + 2 * _EM_ORDER + 1)
    est += 4.0 * _EPS * mag
    return total, est, n_shift + _EM_ORDER + 1


def _zeta_em_unboxed(s: complex, tol: float) -> SeriesValue:
    n_shift = max(10, math.ceil(abs(s.imag) / 2.0) + 10)
    best = None
    for _ in range(3):
        value, est, used = _em_sum(s, n_shift)
        if best is None or est < best.abs_err_est:
            best = SeriesValue(value, est, used)
        if est <= tol:
            break
        n_shift *= 2
    return best


def zeta_em(s, tol: float = 1e-12) -> SeriesValue:
    """zeta(s) by Euler-Maclaurin summation, independent of the eta path.

    Validated for -10 <= Re(s) <= 10, |Im(s)| <= 60.  The shift point
    starts at max(10, ceil(|t|/2) + 10) with 8 Bernoulli corrections and
    doubles (at most twice) if the remainder estimate misses tol.  For
    Re(s) < 0 the direct sum cancels catastrophically in doubles, so the
    evaluator reflects through the functional equation into Re >= 1.
    """
    s = as_eval_point(s)
    if s == 1:
        raise PoleError("zeta pole at s = 1")
    if abs(s.real) > _EM_SIGMA_MAX or abs(s.imag) > _EM_T_MAX:
        raise DomainError(
            f"s={s} outside validated box |Re| <= {_EM_SIGMA_MAX}, "
            f"|Im| <= {_EM_T_MAX}"
        )
    if s.real < 0.0:
        w = _zeta_em_unboxed(1.0 - s, tol)
        chi = (
            2.0 ** s
            * math.pi ** (s - 1.0)
            * cmath.sin(0.5 * math.pi * s)
            * gamma(1.0 - s)
        )
        value = chi * w.value
        err = abs(chi) * w.abs_err_est + 1e-13 * abs(value)
        return SeriesValue(value, err, w.terms_used)
    return _zeta_em_unboxed(s, tol)


# ------------------------------------------------------------- global zeta


def zeta_global(s, tol: float = 1e-12) -> SeriesValue:
    """zeta(s) for any s != 1.

    Re(s) > 0 delegates to zeta_eta (falling back to zeta_em inside the
    denominator hazard disks).  Re(s) <= 0 evaluates the functional
    equation right-hand side; a negative even integer given exactly
    returns exactly 0, since sin(pi s / 2) is then an exact zero.  The
    reflection is indeterminate (0 times the pole) at s = 0, where the
    known value -1/2 is returned.
    """
    s = as_eval_point(s)
    if s == 1:
        raise PoleError("zeta pole at s = 1")
    if s.real > 0.0:
        try:
            return zeta_eta(s, tol)
        except ConditioningError:
            return zeta_em(s, tol)
    if s.imag == 0.0:
        re = s.real
        if re < 0.0 and re == math.floor(re) and int(re) % 2 == 0:
            return SeriesValue(0j, 0.0, 1)
        if re == 0.0:
            return SeriesValue(complex(-0.5), _EPS, 1)
    w = zeta_global(1.0 - s, tol)
    chi = (
        2.0 ** s
        * math.pi ** (s - 1.0)
        * cmath.sin(0.5 * math.pi * s)
        * gamma(1.0 - s)
    )
    value = chi * w.value
    err = abs(chi) * w.abs_err_est + 1e-13 * abs(value)
    return SeriesValue(value, err, w.terms_used)


# ----------------------------------------------------------- critical line


def riemann_siegel_theta(t: float) -> float:
    """Phase theta(t) making e^(i theta) zeta(1/2 + it) real.

    Asymptotic expansion
        (t/2) ln(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3);
    the first omitted term is 31/(80640 t^5), so the result is good to
    about 4e-9 at t = 10 and improves rapidly beyond.
    """
    t = float(t)
    if t < 1.0:
        raise DomainError(f"theta asymptotic needs t >= 1, got {t}")
    return (
        0.5 * t * math.log(t / TWO_PI)
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def theta_error_model(t: float) -> float:
    """Upper estimate of the theta expansion's absolute error.

    First omitted asymptotic term plus an exponentially small component
    0.7 e^(-pi t); the latter dominates below t ~ 5 (the measured error
    there behaves like 0.51 e^(-pi t)) and is negligible past t = 10.
    """
    t = float(t)
    return 1.1 * 31.0 / (80640.0 * t**5) + 0.7 * math.exp(-math.pi * t)


def hardy_z(t: float, tol: float = 1e-10) -> float:
    """Hardy Z(t) = e^(i theta(t)) zeta(1/2 + it), real for real t.

    The imaginary part of the computed product is pure numerical error
    (phase error from the theta asymptotic plus zeta evaluation error);
    it is asserted small before being dropped.
    """
    t = float(t)
    if t < 1.0:
        raise DomainError(f"hardy_z needs t >= 1, got {t}")
    ev = zeta_eta(complex(0.5, t), tol)
    z = cmath.exp(1j * riemann_siegel_theta(t)) * ev.value
    allowed = max(1e-8, 4.0 * (abs(z) * theta_error_model(t) + ev.abs_err_est))
    if abs(z.imag) > allowed:
        raise PrecisionError(
            f"hardy_z residual imag {z.imag:.3e} exceeds {allowed:.3e} at t={t}"
        )
    return z.real
