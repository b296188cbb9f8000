"""Frozen reference values for the test suite.

Produced by tools/make_reference_values.py (mpmath at 30-50 digits plus
brute-force integer sweeps), fully independent of the zetalab code
paths they check.  Regenerate with that script if a value needs to be
revisited; never copy a number out of the package under test.
"""

# elementary constants
ZETA2 = 1.6449340668482264365
ZETA3 = 1.2020569031595942854
ZETA_HALF = -1.4603545088095868129
ZETA_3_HALVES = 2.6123753486854883433
ETA1_LOG2 = 0.69314718055994530942
ETA2_PI2_12 = 0.82246703342411321824
ETA_HALF = 0.60489864342163037025
SQRT_PI = 1.7724538509055160273
ZETA_MINUS3 = 0.0083333333333333333333  # 1/120

# complex zeta spot checks: s -> zeta(s)
ZETA_POINTS = {
    0.5 + 25j: 0.0049845933640356753834 - 0.014012301962583382963j,
    2 + 3j: 0.79802198514627572062 - 0.11374430805293850022j,
    0.3 + 7.7j: 1.1852567966808096576 + 0.43078440949025090018j,
    1.5 - 11.25j: 1.1353576373340347479 + 0.30965588360724577239j,
    0.1 + 30j: -0.96251840464438797613 - 0.61159008791443992495j,
    0.9 + 5j: 0.7492926332399253401 + 0.18839721995874548287j,
    -2.5 + 4j: 0.065835426299844124867 + 0.29407154049039689664j,
    3.5 - 0.4j: 1.1175254444338575812 + 0.043663629800934811512j,
}

# complex gamma spot checks: z -> gamma(z)
GAMMA_POINTS = {
    0.5 + 14.134725141734693j: -1.445551448817965223e-10
    - 5.5227880818233052602e-10j,
    1 + 1j: 0.49801566811835604271 - 0.15494982830181068512j,
    -2.5 + 0j: -0.94530872048294188123 + 0j,
    20 + 60j: 1.7392113620721272732e-6 - 8.4371715133493481262e-7j,
    -19.5 + 59j: -2.5385255991787748359e-76 + 2.7378721352377992921e-76j,
    5.5 - 30.5j: 9.2946501109217928745e-14 + 4.9989566030813399271e-14j,
    0.001 + 0j: 999.42377248459546611 + 0j,
    -4.2 - 3.7j: -4.9270849544222682422e-6 + 4.288625660906832355e-6j,
}

# phase function (asymptotic form evaluated at 50 digits)
THETA10 = -3.0670744001641120414
THETA20 = 1.1868948083241198328

# first twenty critical-line zero ordinates
ZERO_ORDINATES = (
    14.1347251417346938,
    21.022039638771555,
    25.0108575801456888,
    30.4248761258595132,
    32.9350615877391897,
    37.5861781588256713,
    40.9187190121474952,
    43.3270732809149995,
    48.0051508811671597,
    49.7738324776723022,
    52.9703214777144606,
    56.4462476970633948,
    59.3470440026023531,
    60.8317785246098098,
    65.1125440480816067,
    67.0798105294941737,
    69.5464017111739793,
    72.0671576744819076,
    75.7046906990839332,
    77.1448400688748054,
)

# off-critical-line sweep: min |zeta| over sigma in {0.10..0.45, 0.55..0.90},
# t in [2, 30] step 0.1, attained at sigma=0.55, t=14.1
ZEROFREE_MIN = 0.0471854143422
ZEROFREE_MARGIN = 0.0235927071711

# column-order partial sums of the divisor-sum Dirichlet series at the
# first zero rho_1, plus the reference (1 - 2^(1-rho)) zeta(2 rho)
INTERCHANGE_REFERENCE = 3.92066351874624713 - 2.4546813192103511j
INTERCHANGE_COL_ABS = {
    10_000: 4.63045286565,
    100_000: 4.63989752927,
    1_000_000: 4.62630709595,
}
INTERCHANGE_COL_MIN = 4.62630709595
INTERCHANGE_THRESHOLD = 2.3131535479  # half the sweep minimum
ZETA_2RHO1 = 1.836735353402834 - 0.6511975965222687j

# |sum_{j<=J} beta(j)/j^s - (1-2^(1-s)) zeta(2s)| along the decade grid
IDENTITY_GAPS = {
    0.75 + 0j: {
        1_000: 0.1450457073,
        10_000: 0.08376198172,
        100_000: 0.04667219269,
        1_000_000: 0.02618810878,
    },
    0.9 + 5j: {
        1_000: 0.002698769592,
        10_000: 0.001083712821,
        100_000: 0.0004144974893,
        1_000_000: 0.0001642885306,
    },
    2 + 0j: {
        1_000: 3.958197034e-6,
        10_000: 1.472288109e-7,
        100_000: 4.414653932e-9,
        1_000_000: 1.377848203e-10,
    },
}

# |b_partial(J) - zeta(1.5)| at s = 0.75
SPLIT_B_RESIDUALS_075 = {
    1_000: 0.3563371026,
    10_000: 0.19950125,
    100_000: 0.1124198504,
}

# sup over n <= 2e4 of |alternating partial sum| at rho_1 (attained at n=2)
ETA_PARTIAL_SUP_RHO1 = 1.678434218
