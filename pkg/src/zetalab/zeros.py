"""Locate and refine zeros of zeta on the critical line.

Zeros are detected as sign changes of the real-valued Hardy Z function
sampled on a grid (robust against amplitude noise, unlike hunting
minima of |zeta|), then pinned down by bisection, which cannot leave
the bracket.  Each refined zero records the residual |eta(1/2 + it)|,
the natural smallness certificate here since eta vanishes wherever
zeta does on the critical line.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, RefinementError
from .zeta import eta, hardy_z

SCAN_STEP_MAX = 0.25
_SCAN_T_CAP = 100.0  # first 20 zeros end near t = 77.1
MAX_ZEROS = 20


@dataclass(frozen=True)
class ZeroBracket:
    """An interval [t_lo, t_hi] with a strict sign change of Z."""

    t_lo: float
    t_hi: float
    z_lo: float
    z_hi: float

    def __post_init__(self):
        if not self.t_lo < self.t_hi:
            raise DomainError(f"bracket needs t_lo < t_hi, got {self}")
        if not self.z_lo * self.z_hi < 0.0:
            raise DomainError(f"bracket needs a strict sign change, got {self}")


@dataclass(frozen=True)
class ZeroRecord:
    """A refined critical-line zero ordinate and its provenance."""

    t: float
    residual: float  # |eta(1/2 + it)|
    iterations: int
    bracket: ZeroBracket


def scan_brackets(
    t_min: float, t_max: float, step: float = 0.1, tol: float = 1e-10
) -> list[ZeroBracket]:
    """Sample Z on a grid and return one bracket per sign change.

    The default step 0.1 is far below the smallest zero gap under
    t = 100, so no sign change escapes between grid points there.
    """
    t_min, t_max, step = float(t_min), float(t_max), float(step)
    if not 1.0 <= t_min < t_max:
        raise DomainError(f"need 1 <= t_min < t_max, got [{t_min}, {t_max}]")
    if not 0.0 < step <= SCAN_STEP_MAX:
        raise DomainError(f"need 0 < step <= {SCAN_STEP_MAX}, got {step}")
    n_steps = math.ceil((t_max - t_min) / step - 1e-9)
    brackets = []
    t_prev = t_min
    z_prev = _z_nonzero(t_min, step, tol)
    for i in range(1, n_steps + 1):
        t_cur = min(t_min + i * step, t_max)
        z_cur = _z_nonzero(t_cur, step, tol)
        if z_prev * z_cur < 0.0:
            brackets.append(ZeroBracket(t_prev, t_cur, z_prev, z_cur))
        t_prev, z_prev = t_cur, z_cur
    return brackets


def _z_nonzero(t: float, step: float, tol: float) -> float:
    """Z(t), nudged off an exact floating-point zero if one is hit."""
    z = hardy_z(t, tol)
    if z == 0.0:
        z = hardy_z(t + step * 1e-6, tol)
    return z


def refine(bracket: ZeroBracket, tol: float = 1e-9) -> ZeroRecord:
    """Bisect a bracket until its width is at most tol."""
    tol = float(tol)
    if tol < 1e-10:
        raise DomainError(f"refine tolerance must be >= 1e-10, got {tol}")
    lo, hi = bracket.t_lo, bracket.t_hi
    z_lo = bracket.z_lo
    iterations = 0
    max_iterations = 200
    while hi - lo > tol:
        iterations += 1
        if iterations > max_iterations:
            raise RefinementError(
                f"bracket [{lo}, {hi}] failed to shrink below {tol}"
            )
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:  # interval below float spacing
            break
        z_mid = hardy_z(mid, min(1e-10, tol))
        if z_mid == 0.0:
            lo = hi = mid
            break
        if z_lo * z_mid < 0.0:
            hi = mid
        else:
            lo, z_lo = mid, z_mid
    t = 0.5 * (lo + hi)
    residual = abs(eta(complex(0.5, t), 1e-12).value)
    return ZeroRecord(t, residual, iterations, bracket)


def first_zeros(k: int, tol: float = 1e-9) -> list[ZeroRecord]:
    """The k smallest zero ordinates t > 0, ascending, refined to tol."""
    k = int(k)
    if not 1 <= k <= MAX_ZEROS:
        raise DomainError(f"k must be in [1, {MAX_ZEROS}], got {k}")
    brackets: list[ZeroBracket] = []
    t_lo = 1.0
    chunk = 20.0
    while len(brackets) < k:
        if t_lo >= _SCAN_T_CAP:
            raise RefinementError(
                f"found only {len(brackets)} zeros below t = {_SCAN_T_CAP}"
            )
        t_hi = min(t_lo + chunk, _SCAN_T_CAP)
        brackets.extend(scan_brackets(t_lo, t_hi, 0.1, tol))
        t_lo = t_hi
    return [refine(b, tol) for b in brackets[:k]]
