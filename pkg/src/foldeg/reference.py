"""Frozen reference values used for regression checks.

Everything in this module was produced by the pipeline itself at the
default weight system (0, 2, 7, 10) and then cross-checked by an
independent route (a second elimination method, a symbolic fixed-point
transport, or a closed-form evaluation).  The constants are inlined so
the test suite can detect regressions without recomputing oracles.
"""

from fractions import Fraction

from .exact import WeightSystem

# Weight systems accepted everywhere in the test suite.  Each one has
# four pairwise-distinct entries and six pairwise-distinct pair sums.
DEFAULT_WEIGHTS = WeightSystem((0, 2, 7, 10))
ALT_WEIGHTS_A = WeightSystem((0, 1, 5, 13))
ALT_WEIGHTS_B = WeightSystem((1, 3, 9, 20))

# An inadmissible system: 0+3 == 1+2, so two pair sums collide.
BAD_WEIGHTS_VALUES = (0, 1, 2, 3)

# ---------------------------------------------------------------------------
# Degree-2 Legendrian localization at weights (0, 2, 7, 10).
#
# The six fixed points in canonical order (1,2), (1,3), (1,4), (2,3),
# (2,4), (3,4).  Each contribution is e5(fiber weights) / e5(tangent
# weights) written with the raw (unreduced) numerator and denominator,
# the denominator normalized to be positive.
LEGENDRIAN_D2_CONTRIBUTIONS = (
    ((1, 2), 833800359, 42000),
    ((1, 3), -38740434, 1500),
    ((1, 4), 7716777, 336),
    ((2, 3), -4199874, 336),
    ((2, 4), -3398841, 1500),
    ((3, 4), -105534, 42000),
)

# The same six values arranged by increasing pair in the wedge-basis
# order (1,2), (1,3), (2,3), (1,4), (2,4), (3,4), reduced.  This is the
# order in which the sequence is conventionally displayed.
LEGENDRIAN_D2_WEDGE_ORDER_VALUES = (
    Fraction(833800359, 42000),
    Fraction(-38740434, 1500),
    Fraction(-4199874, 336),
    Fraction(7716777, 336),
    Fraction(-3398841, 1500),
    Fraction(-105534, 42000),
)

LEGENDRIAN_D2_DEGREE = 2224
LEGENDRIAN_D3_DEGREE = 83520

# Legendrian degrees for d = 2..17, the sixteen data points that pin
# down the degree-15 closed-form polynomial.
LEGENDRIAN_DEGREES = {
    2: 2224,
    3: 83520,
    4: 1375504,
    5: 13883954,
    6: 100202760,
    7: 565138791,
    8: 2636502120,
    9: 10576955268,
    10: 37516645848,
    11: 120109547415,
    12: 352586242008,
    13: 960816829700,
    14: 2454559390192,
    15: 5925543510082,
    16: 13606774920240,
    17: 29883399530400,
}

# ---------------------------------------------------------------------------
# The limit fiber at the fixed point (3,4) for d = 2, weights (0,2,7,10):
# twenty quotient weights and the elementary symmetric value e5 used in
# the localization numerator.
D2_P34_QUOTIENT_WEIGHTS = (
    -10, -8, -7, -6, -5, -3, -3, -2, -1, 0,
    0, 2, 2, 3, 4, 4, 5, 7, 10, 13,
)
D2_P34_E5 = 105534

# The same twenty weights written symbolically as integer combinations
# of the four torus weights (w1, w2, w3, w4); each row is the coefficient
# vector (c1, c2, c3, c4) meaning c1*w1 + c2*w2 + c3*w3 + c4*w4.
D2_P34_SYMBOLIC_WEIGHTS = (
    (2, -1, 0, 0),   # 2w1 - w2
    (1, 0, 0, 0),    # w1
    (0, 1, 0, 0),    # w2
    (-1, 2, 0, 0),   # -w1 + 2w2
    (0, 0, -1, 2),   # -w3 + 2w4
    (0, 0, 0, 1),    # w4
    (0, 0, 1, 0),    # w3
    (0, 0, 2, -1),   # 2w3 - w4
    (0, 1, -1, 1),   # w2 - w3 + w4
    (0, 1, 0, 0),    # w2
    (0, 1, 1, -1),   # w2 + w3 - w4
    (0, 2, -1, 0),   # 2w2 - w3
    (0, 2, 0, -1),   # 2w2 - w4
    (1, 0, -1, 1),   # w1 - w3 + w4
    (1, 0, 0, 0),    # w1
    (1, 0, 1, -1),   # w1 + w3 - w4
    (1, 1, -1, 0),   # w1 + w2 - w3
    (1, 1, 0, -1),   # w1 + w2 - w4
    (2, 0, -1, 0),   # 2w1 - w3
    (2, 0, 0, -1),   # 2w1 - w4
)

# ---------------------------------------------------------------------------
# Pencil-of-planes family on the Grassmannian of lines.
PENCIL_D2_DEGREE = 825
PENCIL_D3_DEGREE = 13300

PENCIL_DEGREES = {
    2: 825,
    3: 13300,
    4: 124950,
    5: 819280,
    6: 4148340,
    7: 17278800,
    8: 61764450,
    9: 195209300,
    10: 557541985,
    11: 1462921460,
    12: 3571595300,
    13: 8195387200,
    14: 17817774800,
}
