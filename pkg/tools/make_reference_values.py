#!/usr/bin/env python3
"""Regenerate the frozen reference values used by the test suite.

Everything here is computed with mpmath (plus brute-force integer
arithmetic), completely independently of the zetalab package, so the
numbers frozen into tests/ act as genuine oracles.  Run from the repo
root:

    python tools/make_reference_values.py > /tmp/reference_values.txt

Sections:
  1. elementary constants (zeta/eta/gamma at spot points)
  2. critical-line zero ordinates
  3. complex zeta/gamma reference points
  4. min |zeta| sweeps (off-critical-line grid, cross-evaluator grid)
  5. divisor-sum Dirichlet partial sums at the first zero and the
     identity-gap tables used to pin audit thresholds
"""

import math

import mpmath as mp

mp.mp.dps = 30


# ---------------------------------------------------------------- integers


def divisor_sum_beta(n: int) -> int:
    """Divisor sum sum_{m|n} (-1)^(n/m+1) * (-1)^Omega(m), by trial division."""
    total = 0
    for m in range(1, n + 1):
        if n % m == 0:
            omega = 0
            r = m
            p = 2
            while p * p <= r:
                while r % p == 0:
                    omega += 1
                    r //= p
                p += 1
            if r > 1:
                omega += 1
            total += (-1) ** ((n // m) + 1) * (-1) ** omega
    return total


def liouville_td(n: int) -> int:
    omega = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            omega += 1
            n //= p
        p += 1
    if n > 1:
        omega += 1
    return -1 if omega % 2 else 1


# ------------------------------------------------------- dirichlet partials


def squares_partial(s, limit: int):
    """sum over j<=limit, j=m^2 of j^-s  ==  sum_{m<=sqrt(limit)} m^-2s."""
    return mp.nsum(lambda m: mp.power(m, -2 * s), [1, math.isqrt(limit)])


def twice_squares_partial(s, limit: int):
    """sum over j<=limit, j=2m^2 of -2*j^-s."""
    return -mp.power(2, 1 - s) * mp.nsum(
        lambda m: mp.power(m, -2 * s), [1, math.isqrt(limit // 2)]
    )


def beta_dirichlet_partial(s, limit: int):
    return squares_partial(s, limit) + twice_squares_partial(s, limit)


def tail_bound(sigma: float, limit: int):
    """Upper bound for |sum_{j>limit} beta(j) j^-s| via absolute values."""
    x = 2 * sigma
    b = mp.zeta(x, math.isqrt(limit) + 1)  # Hurwitz: sum_{m>isqrt(J)} m^-2sigma
    c = mp.power(2, 1 - sigma) * mp.zeta(x, math.isqrt(limit // 2) + 1)
    return b + c


def main() -> None:
    print("# --- elementary constants (mpmath, 30 dps) ---")
    for label, val in [
        ("zeta(2)", mp.zeta(2)),
        ("zeta(3)", mp.zeta(3)),
        ("zeta(0.5)", mp.zeta(mp.mpf("0.5"))),
        ("zeta(1.5)", mp.zeta(mp.mpf("1.5"))),
        ("zeta(-1)", mp.zeta(-1)),
        ("zeta(-3)", mp.zeta(-3)),
        ("eta(1)=log2", mp.log(2)),
        ("eta(2)=pi^2/12", mp.pi**2 / 12),
        ("eta(0.5)", (1 - mp.power(2, mp.mpf("0.5"))) * mp.zeta(mp.mpf("0.5"))),
        ("gamma(0.5)", mp.gamma(mp.mpf("0.5"))),
    ]:
        print(f"{label:18s} = {mp.nstr(val, 20)}")

    print()
    print("# --- complex zeta reference points ---")
    for s in [
        mp.mpc("0.5", "25"),
        mp.mpc("2", "3"),
        mp.mpc("0.3", "7.7"),
        mp.mpc("1.5", "-11.25"),
        mp.mpc("0.1", "30"),
        mp.mpc("0.9", "5"),
        mp.mpc("-2.5", "4"),
        mp.mpc("3.5", "-0.4"),
    ]:
        print(f"zeta({mp.nstr(s, 10)}) = {mp.nstr(mp.zeta(s), 20)}")

    print()
    print("# --- complex gamma reference points ---")
    for z in [
        mp.mpc("0.5", "14.134725141734693"),
        mp.mpc("1", "1"),
        mp.mpc("-2.5", "0"),
        mp.mpc("20", "60"),
        mp.mpc("-19.5", "59"),
        mp.mpc("5.5", "-30.5"),
        mp.mpc("0.001", "0"),
        mp.mpc("-4.2", "-3.7"),
    ]:
        print(f"gamma({mp.nstr(z, 10)}) = {mp.nstr(mp.gamma(z), 20)}")

    print()
    print("# --- riemann-siegel theta: asymptotic at 50 dps vs exact ---")
    mp.mp.dps = 50
    for t in [mp.mpf(10), mp.mpf(20), mp.mpf("14.134725141734693")]:
        asym = (
            t / 2 * mp.log(t / (2 * mp.pi))
            - t / 2
            - mp.pi / 8
            + 1 / (48 * t)
            + 7 / (5760 * t**3)
        )
        exact = mp.im(mp.loggamma(mp.mpf("0.25") + 0.5j * t)) - t / 2 * mp.log(mp.pi)
        print(f"theta_asym({mp.nstr(t,12)}) = {mp.nstr(asym, 20)}   "
              f"exact = {mp.nstr(exact, 20)}   diff = {mp.nstr(asym - exact, 3)}")
    mp.mp.dps = 30

    print()
    print("# --- first 20 critical-line zero ordinates ---")
    zeros = []
    for k in range(1, 21):
        rho = mp.zetazero(k)
        zeros.append(mp.im(rho))
        print(f"t_{k:<2d} = {mp.nstr(mp.im(rho), 18)}")

    t1 = zeros[0]
    rho1 = mp.mpc(0.5, t1)

    print()
    print("# --- off-critical-line grid sweep: min |zeta| ---")
    # sigma in {0.10 .. 0.45} + {0.55 .. 0.90} step 0.05, t in [2, 30] step 0.1
    mp.mp.dps = 20
    sigmas = [mp.mpf(k) / 100 for k in list(range(10, 50, 5)) + list(range(55, 95, 5))]
    best = (mp.inf, None)
    for sig in sigmas:
        for i in range(281):
            t = 2 + mp.mpf(i) / 10
            v = abs(mp.zeta(mp.mpc(sig, t)))
            if v < best[0]:
                best = (v, (sig, t))
    print(f"min |zeta| = {mp.nstr(best[0], 12)} at sigma={best[1][0]}, t={best[1][1]}")
    print(f"half of min (margin) = {mp.nstr(best[0] / 2, 12)}")

    print()
    print("# --- cross-evaluator 200-point grid: min |zeta| ---")
    best2 = (mp.inf, None)
    for i in range(10):
        sig = mp.mpf("0.1") + i * (mp.mpf("2.9") / 9)
        for j in range(20):
            t = -30 + j * (mp.mpf(60) / 19)
            v = abs(mp.zeta(mp.mpc(sig, t)))
            if v < best2[0]:
                best2 = (v, (sig, t))
    print(f"min |zeta| on cross-eval grid = {mp.nstr(best2[0], 12)} at {best2[1]}")
    mp.mp.dps = 30

    print()
    print("# --- divisor-sum partials at rho_1 (column order) ---")
    # termwise check at J=1e4: brute-force beta vs square/twice-square classes
    termwise = mp.mpc(0)
    for j in range(1, 10_001):
        r = math.isqrt(j)
        if r * r == j:
            b = 1
        elif j % 2 == 0 and math.isqrt(j // 2) ** 2 == j // 2:
            b = -2
        else:
            b = 0
        if b:
            termwise += b * mp.power(j, -rho1)
    classes = beta_dirichlet_partial(rho1, 10_000)
    print(f"termwise(J=1e4) vs class split agreement: "
          f"{mp.nstr(abs(termwise - classes), 5)}")
    # spot check the class shortcut against full divisor sums for j<=300
    for j in range(1, 301):
        r = math.isqrt(j)
        closed = 1 if r * r == j else (-2 if j % 2 == 0 and math.isqrt(j // 2) ** 2 == j // 2 else 0)
        assert divisor_sum_beta(j) == closed, j
    print("divisor_sum_beta == {1,-2,0} closed values for all j <= 300: ok")

    ref = (1 - mp.power(2, 1 - rho1)) * mp.zeta(2 * rho1)
    print(f"reference (1-2^(1-rho1))*zeta(2 rho1) = {mp.nstr(ref, 18)}")
    print(f"|reference| = {mp.nstr(abs(ref), 12)}")
    print(f"zeta(2 rho1) = zeta(1+{mp.nstr(2*t1, 16)}i) = {mp.nstr(mp.zeta(2 * rho1), 16)}")
    for J in [10_000, 100_000, 1_000_000]:
        col = beta_dirichlet_partial(rho1, J)
        print(f"J={J:>8d}  col={mp.nstr(col, 14)}  |col|={mp.nstr(abs(col), 12)}  "
              f"|col-ref|={mp.nstr(abs(col - ref), 12)}")

    print()
    print("# --- row-order magnitudes at rho_1 ---")
    lam_partial = mp.mpc(0)
    marks = {100, 1000, 10000}
    for m in range(1, 10_001):
        lam_partial += liouville_td(m) * mp.power(m, -rho1)
        if m in marks:
            print(f"M={m:>6d}  |sum lam(m) m^-rho| = {mp.nstr(abs(lam_partial), 10)}")

    print()
    print("# --- identity gap tables ---")
    for s in [mp.mpf("0.75"), mp.mpc("0.9", "5"), mp.mpf(2), mp.mpc("1.1", "-3")]:
        target = (1 - mp.power(2, 1 - s)) * mp.zeta(2 * s)
        print(f"s = {mp.nstr(s, 10)}   (1-2^(1-s))zeta(2s) = {mp.nstr(target, 18)}")
        prev = None
        for J in [1_000, 10_000, 100_000, 1_000_000]:
            gap = abs(beta_dirichlet_partial(s, J) - target)
            bound = tail_bound(float(mp.re(s)), J)
            ratio = "" if prev is None else f"  ratio={mp.nstr(gap / prev, 6)}"
            print(f"  J={J:>8d}  gap={mp.nstr(gap, 10)}  tail_bound={mp.nstr(bound, 10)}{ratio}")
            prev = gap

    print()
    print("# --- split-series b-residuals at s=0.75 (b -> zeta(1.5)) ---")
    z15 = mp.zeta(mp.mpf("1.5"))
    for J in [1_000, 10_000, 100_000]:
        b = squares_partial(mp.mpf("0.75"), J)
        print(f"J={J:>7d}  |b_partial - zeta(1.5)| = {mp.nstr(abs(b - z15), 10)}")

    print()
    print("# --- eta partial-sum bound constant at rho_1 (sup_n |partial_n|) ---")
    cum = mp.mpc(0)
    sup = mp.mpf(0)
    arg = 0
    for n in range(1, 20_001):
        cum += (-1) ** (n + 1) * mp.power(n, -rho1)
        if abs(cum) > sup:
            sup, arg = abs(cum), n
    print(f"sup over n<=2e4 of |eta partial| = {mp.nstr(sup, 10)} at n={arg}")

    print()
    print("# --- misc audit spot values ---")
    print(f"zeta(-3) = 1/120 = {mp.nstr(mp.zeta(-3), 18)}")
    print(f"|zeta(1-rho1)| = {mp.nstr(abs(mp.zeta(1 - rho1)), 6)}")


if __name__ == "__main__":
    main()
