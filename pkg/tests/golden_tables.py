"""Frozen golden data for the table-reproduction tests.

Heat-kernel entries are exact (Fraction mantissa, sqrt(pi) flag, power of
the radius); zeta'(0) and high-temperature columns are the published
4-5 significant-digit values.
"""

from fractions import Fraction as F

# ---------------------------------------------------------------------------
# Heat-kernel coefficients: {bc: {D: {n: (mantissa, sqrt_pi_power)}}}.
# The power of a is implied: a^(D-n).  Entries not listed for odd n are
# absent from the source tables (n > D+1); even-n entries are all zero and
# checked separately.
# ---------------------------------------------------------------------------

HEAT_KERNEL = {
    "dirichlet": {
        3: {1: (F(-1, 2), 0), 3: (F(-1, 24), 0)},
        4: {1: (F(-1, 8), 1), 3: (F(-11, 256), 1), 5: (F(-35, 32768), 1)},
        5: {1: (F(-1, 12), 0), 3: (F(-1, 16), 0), 5: (F(17, 5760), 0)},
        6: {
            1: (F(-1, 64), 1),
            3: (F(-125, 6144), 1),
            5: (F(2159, 786432), 1),
            7: (F(1685, 12582912), 1),
        },
        7: {
            1: (F(-1, 120), 0),
            3: (F(-1, 60), 0),
            5: (F(1, 256), 0),
            7: (F(-367, 967680), 0),
        },
        8: {
            1: (F(-1, 768), 1),
            3: (F(-91, 24576), 1),
            5: (F(60179, 47185920), 1),
            7: (F(-260699, 754974720), 1),
            9: (F(-16169407, 773094113280), 1),
        },
    },
    "neumann": {
        3: {1: (F(1, 2), 0), 3: (F(-17, 24), 0)},
        4: {
            1: (F(1, 8), 1),
            3: (F(41, 256), 1),
            4: (F(-1), 0),
            5: (F(5861, 32768), 1),
        },
        5: {1: (F(1, 12), 0), 3: (F(3, 16), 0), 5: (F(-3887, 5760), 0)},
        6: {
            1: (F(1, 64), 1),
            3: (F(335, 6144), 1),
            5: (F(108007, 786432), 1),
            6: (F(-1), 0),
            7: (F(1723783, 8388608), 1),
        },
        7: {
            1: (F(1, 120), 0),
            3: (F(1, 24), 0),
            5: (F(37, 256), 0),
            7: (F(-676463, 967680), 0),
        },
        8: {
            1: (F(1, 768), 1),
            3: (F(217, 24576), 1),
            5: (F(1909579, 47185920), 1),
            7: (F(170051269, 1509949440), 1),
            8: (F(-1), 0),
            9: (F(171400283233, 773094113280), 1),
        },
    },
    "pc": {
        3: {1: (F(0), 0), 3: (F(1, 4), 0)},
        4: {
            1: (F(-1, 8), 1),
            3: (F(211, 256), 1),
            4: (F(-1), 0),
            5: (F(1631, 32768), 1),
        },
        5: {1: (F(-1, 6), 0), 3: (F(1), 0), 5: (F(-899, 1440), 0)},
        6: {
            1: (F(-3, 64), 1),
            3: (F(585, 2048), 1),
            5: (F(75361, 262144), 1),
            6: (F(-1), 0),
            7: (F(1052991, 8388608), 1),
        },
        7: {
            1: (F(-1, 30), 0),
            3: (F(5, 24), 0),
            5: (F(163, 384), 0),
            7: (F(-340577, 483840), 0),
        },
        8: {
            1: (F(-5, 768), 1),
            3: (F(1015, 24576), 1),
            5: (F(6994813, 47185920), 1),
            7: (F(231850177, 1509949440), 1),
            8: (F(-1), 0),
            9: (F(122133914599, 773094113280), 1),
        },
    },
    "ip": {
        3: {1: (F(0), 0), 3: (F(1, 4), 0)},
        4: {
            1: (F(1, 8), 1),
            3: (F(-121, 256), 1),
            4: (F(1), 0),
            5: (F(-2713, 32768), 1),
        },
        5: {1: (F(1, 6), 0), 3: (F(-1, 2), 0), 5: (F(989, 1440), 0)},
        6: {
            1: (F(3, 64), 1),
            3: (F(-235, 2048), 1),
            5: (F(-44071, 262144), 1),
            6: (F(1), 0),
            7: (F(-871339, 4194304), 1),
        },
        7: {
            1: (F(1, 30), 0),
            3: (F(-7, 120), 0),
            5: (F(-23, 128), 0),
            7: (F(301727, 483840), 0),
        },
        8: {
            1: (F(5, 768), 1),
            3: (F(-133, 24576), 1),
            5: (F(-2036587, 47185920), 1),
            7: (F(-28775291, 188743680), 1),
            8: (F(1), 0),
            9: (F(-190744485241, 773094113280), 1),
        },
    },
}

# Three published D=8 top-coefficient cells carry arithmetic misprints at
# relative 4e-10 / 3e-13 / 3e-14 (one and the same slip in the d_8-weighted
# Gamma-ratio sum; the m_8-only Neumann cell is exact).  HEAT_KERNEL above
# stores the internally consistent values, frozen after verifying the
# Debye table against the exact Wronskian identity and a 220-digit
# residual check; PUBLISHED_VARIANTS keeps the printed cells so the tests
# can document the relationship.
PUBLISHED_VARIANTS = {
    ("dirichlet", 8, 9): (F(-1059678257581, 50665495807918080), 1),
    ("pc", 8, 9): (F(800416822715749, 5066549580791808), 1),
    ("ip", 8, 9): (F(-2500126116950921, 10133099161583616), 1),
}

# ---------------------------------------------------------------------------
# zeta'(a;0) - 2 zeta(a;0) log a: published numeric column, by bc and D.
# ---------------------------------------------------------------------------

ZETA_PRIME = {
    "dirichlet": {
        3: -2.9516e-1,
        4: 3.0448e-2,
        5: 1.6014e-2,
        6: -3.2027e-3,
        7: -1.9066e-3,
        8: 4.6559e-4,
    },
    "neumann": {
        3: -6.0823e-1,
        4: -4.8203e-1,
        5: -1.9959e-1,
        6: -1.6471e-1,
        7: -2.2863e-2,
        8: 8.7232e-2,
    },
    "pc": {
        3: 3.8429e-1,
        4: -2.9522,
        5: -1.0179,
        6: -1.3066,
        7: -6.5045e-1,
        8: -5.9992e-1,
    },
    "ip": {
        3: 3.8429e-1,
        4: 1.8074,
        5: 5.4679e-1,
        6: 3.6985e-1,
        7: 9.8969e-2,
        8: 5.6555e-2,
    },
}

# Exact rational weights of zeta_R'(-j) in the closed forms of the same
# tables (criterion: they must match the term breakdown exactly).
ZETA_PRIME_WEIGHTS = {
    ("dirichlet", 3): {1: F(1)},
    ("dirichlet", 4): {2: F(-1)},
    ("dirichlet", 5): {1: F(-1, 24), 3: F(7, 24)},
    ("dirichlet", 6): {2: F(1, 12), 4: F(-1, 12)},
    ("dirichlet", 7): {1: F(3, 640), 3: F(-7, 192), 5: F(31, 1920)},
    ("dirichlet", 8): {2: F(-1, 90), 4: F(1, 72), 6: F(-1, 360)},
    ("neumann", 3): {1: F(-1)},
    ("neumann", 4): {2: F(1)},
    ("neumann", 5): {1: F(1, 24), 3: F(-7, 24)},
    ("neumann", 6): {2: F(-1, 12), 4: F(1, 12)},
    ("neumann", 7): {1: F(-3, 640), 3: F(7, 192), 5: F(-31, 1920)},
    ("neumann", 8): {2: F(1, 90), 4: F(-1, 72), 6: F(1, 360)},
    ("pc", 3): {},
    ("pc", 4): {0: F(2), 2: F(-1)},
    ("pc", 5): {1: F(-13, 12), 3: F(7, 12)},
    ("pc", 6): {2: F(5, 4), 4: F(-1, 4)},
    ("pc", 7): {1: F(29, 480), 3: F(-7, 16), 5: F(31, 480)},
    ("pc", 8): {2: F(-5, 36), 4: F(11, 72), 6: F(-1, 72)},
    ("ip", 3): {},
    ("ip", 4): {0: F(-2), 2: F(1)},
    ("ip", 5): {1: F(13, 12), 3: F(-7, 12)},
    ("ip", 6): {2: F(-5, 4), 4: F(1, 4)},
    ("ip", 7): {1: F(-29, 480), 3: F(7, 16), 5: F(-31, 480)},
    ("ip", 8): {2: F(5, 36), 4: F(-11, 72), 6: F(1, 72)},
}

# ---------------------------------------------------------------------------
# High-temperature asymptote tables: coefficients of
#   E_asym = tln * T*log(aT) + tlin * T + lg * log(aT) + const
# tln is exact (-c_D); the floats carry the published 4-digit rounding.
# ---------------------------------------------------------------------------

ASYM = {
    "dirichlet": {
        3: (F(1, 24), 0.1476, 0.0, 0.0),
        4: (F(0), -0.0152, -0.0008, -0.0015),
        5: (F(-17, 5760), -0.0080, 0.0, 0.0),
        6: (F(0), 0.0016, 0.0001, 0.0002),
        7: (F(367, 967680), 0.0010, 0.0, 0.0),
        8: (F(0), -0.00023, -0.00001, -0.00003),
    },
    "neumann": {
        3: (F(17, 24), 0.3041, 0.0, 0.0),
        4: (F(1), 0.2410, 0.1265, 0.2471),
        5: (F(3887, 5760), 0.0998, 0.0, 0.0),
        6: (F(1), 0.0824, 0.1453, 0.2839),
        7: (F(676463, 967680), 0.0114, 0.0, 0.0),
        8: (F(1), -0.0436, 0.1568, 0.3063),
    },
    "pc": {
        3: (F(-1, 4), -0.1921, 0.0, 0.0),
        4: (F(1), 1.4761, 0.0352, 0.0688),
        5: (F(899, 1440), 0.5090, 0.0, 0.0),
        6: (F(1), 0.6533, 0.0888, 0.1734),
        7: (F(340577, 483840), 0.3252, 0.0, 0.0),
        8: (F(1), 0.3000, 0.1117, 0.2183),
    },
    "ip": {
        3: (F(-1, 4), -0.1921, 0.0, 0.0),
        4: (F(-1), -0.9037, -0.0585, -0.1144),
        5: (F(-989, 1440), -0.2734, 0.0, 0.0),
        6: (F(-1), -0.1849, -0.1469, -0.2870),
        7: (F(-301727, 483840), -0.0495, 0.0, 0.0),
        8: (F(-1), -0.0283, -0.1745, -0.3409),
    },
}

ALL_BCS = ("dirichlet", "neumann", "pc", "ip")
ALL_DIMS = (3, 4, 5, 6, 7, 8)
