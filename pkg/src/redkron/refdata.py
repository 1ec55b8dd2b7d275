"""Frozen reference values for the verify suites.

The three coefficient grids, the cyclotomic factorization of the first
nontrivial family-1 numerator, and the two a=2 quasipolynomials, all as
published; the verify suites recompute every entry independently.
"""

from fractions import Fraction


# family1(a, a, k) for a = 0..5, k = 0..12
FAMILY1_GRID = {
    0: (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    1: (1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7),
    2: (1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57),
    3: (1, 1, 3, 5, 9, 13, 22, 30, 45, 61, 85, 111, 150),
    4: (1, 1, 3, 5, 10, 15, 26, 38, 60, 85, 125, 172, 243),
    5: (1, 1, 3, 5, 10, 16, 28, 42, 68, 100, 151, 215, 312),
}

# family2(2, 2, k, i) for i = 0..4, k = 0..16; row i starts with 3i zeros
FAMILY2_GRID = {
    0: (1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66, 81, 93, 111),
    1: (0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66),
    2: (0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38),
    3: (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7, 9, 14, 17),
    4: (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 4, 7),
}

# family3(2, 3, k, i) for i = 0..5, k = 0..13; cells with i <= k <= 2i are
# the stable diagonal values diag_stable(2, k-i)
FAMILY3_GRID = {
    0: (1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 57, 66),
    1: (0, 1, 2, 4, 7, 11, 16, 23, 31, 41, 53, 67, 83, 102),
    2: (0, 0, 1, 2, 5, 8, 14, 20, 30, 40, 55, 70, 91, 112),
    3: (0, 0, 0, 1, 2, 5, 9, 15, 23, 34, 47, 64, 84, 108),
    4: (0, 0, 0, 0, 1, 2, 5, 9, 16, 24, 37, 51, 71, 93),
    5: (0, 0, 0, 0, 0, 1, 2, 5, 9, 16, 25, 38, 54, 75),
}

DIAG_STABLE_A2 = (1, 2, 5, 9, 16, 25)

# cyclotomic exponents of the a=2 family-1 numerator over (1-x^6)^4
NUMERATOR1_A2_CYCLOTOMIC = {2: 2, 3: 3, 6: 4}

# a=2 family-1 quasipolynomial in k: period 6, coefficients constant-first
QUASI1_A2 = (
    (Fraction(1), Fraction(2, 3), Fraction(1, 6), Fraction(1, 72)),
    (Fraction(5, 18), Fraction(13, 24), Fraction(1, 6), Fraction(1, 72)),
    (Fraction(8, 9), Fraction(2, 3), Fraction(1, 6), Fraction(1, 72)),
    (Fraction(1, 2), Fraction(13, 24), Fraction(1, 6), Fraction(1, 72)),
    (Fraction(7, 9), Fraction(2, 3), Fraction(1, 6), Fraction(1, 72)),
    (Fraction(7, 18), Fraction(13, 24), Fraction(1, 6), Fraction(1, 72)),
)

# a=2 family-3 diagonal quasipolynomial in j: period 6
QUASI3_A2 = (
    (Fraction(1), Fraction(1), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
    (Fraction(175, 288), Fraction(15, 16), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
    (Fraction(8, 9), Fraction(1), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
    (Fraction(23, 32), Fraction(15, 16), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
    (Fraction(8, 9), Fraction(1), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
    (Fraction(175, 288), Fraction(15, 16), Fraction(7, 18), Fraction(1, 16), Fraction(1, 288)),
)
