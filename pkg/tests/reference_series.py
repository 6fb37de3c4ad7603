"""Displayed leading coefficients (m: f(m)) of the Dirichlet series.

Only the nonzero terms are listed; every m below the last key that is not
listed has coefficient zero, except for the sigma1 and zeta_K rows, which
list every displayed term.
"""

SQUARE = {1: 1, 5: 2, 13: 2, 17: 2, 25: 2, 29: 2, 37: 2, 41: 2, 53: 2, 61: 2, 65: 4, 73: 2}
SIGMA1 = {1: 1, 2: 3, 3: 4, 4: 7, 5: 6, 6: 12, 7: 8, 8: 15, 9: 13, 10: 18, 11: 12, 12: 28, 13: 14}
ZETA_K = {1: 1, 2: 1, 4: 1, 5: 2, 8: 1, 9: 1, 10: 2, 13: 2, 16: 1, 17: 2, 18: 1, 20: 2, 25: 3}
PRIMITIVE_SQUARE = {1: 1, 2: 1, 5: 2, 10: 2, 13: 2, 17: 2, 25: 2, 26: 2, 29: 2, 34: 2, 37: 2, 41: 2}
CUBIC3 = {1: 1, 3: 4, 5: 6, 7: 8, 9: 12, 11: 12, 13: 14, 15: 24, 17: 18, 19: 20, 21: 32, 23: 24, 25: 30}
D4 = {1: 1, 3: 16, 5: 36, 7: 64, 9: 168, 11: 144, 13: 196, 15: 576, 17: 324, 19: 400, 21: 1024, 23: 576}
Z4 = {1: 1, 2: 2, 3: 16, 5: 36, 6: 32, 7: 64, 9: 168, 10: 72, 11: 144, 13: 196, 14: 128, 15: 576, 17: 324}
TENFOLD = {1: 1, 11: 4, 31: 4, 41: 4, 61: 4, 71: 4, 101: 4, 121: 8, 131: 4, 151: 4, 181: 4}
ICOSAHEDRAL = {1: 1, 4: 5, 5: 6, 9: 10, 11: 24, 16: 20, 19: 40, 20: 30, 25: 30, 29: 60, 31: 64, 36: 50}
MC = {1: 1, 4: 8, 5: 6, 9: 10, 11: 24, 16: 32, 19: 40, 20: 48, 25: 30, 29: 60, 31: 64, 36: 80}
H4 = {1: 1, 4: 25, 5: 36, 9: 100, 11: 288, 16: 440, 19: 800, 20: 900, 25: 960, 29: 1800, 31: 2048, 36: 2500}

# (label, counting-function name, coefficients, zero terms implied between keys)
ALL_SERIES = [
    ("Z2 CSL", "square", SQUARE, True),
    ("sigma1", "sigma1", SIGMA1, True),
    ("zeta_K", "square_all", ZETA_K, True),
    ("primitive square", "square_primitive", PRIMITIVE_SQUARE, True),
    ("Z2 CSL zeta form", "square_zeta", SQUARE, True),
    ("Z3", "cubic3", CUBIC3, True),
    ("D4", "D4", D4, True),
    ("Z4", "Z4", Z4, True),
    ("tenfold", "tenfold", TENFOLD, True),
    ("icosahedral", "icosahedral", ICOSAHEDRAL, True),
    ("MC", "MC", MC, True),
    ("H4", "H4", H4, True),
]

ICOSAHEDRAL_SPECTRUM = [1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36, 41, 44, 45, 49, 55, 59, 61, 64,
                        71, 76, 79, 80, 81, 89, 95, 99, 100]
