"""Plane partitions in a box, the box generating function, and the
transform linking the 3 x (a-1) box counts to the stable diagonals."""

from .series import box_exponents, inv_product_series


def enumerate_pp(r, s, t):
    """Yield all plane partitions in the r x s x t box, each exactly once.

    A plane partition is an r x s matrix of entries in 0..t weakly
    decreasing along rows and columns; trailing zeros are kept so every
    matrix has the full r x s shape.  Enumeration is row-major with
    entries descending, i.e. lexicographically decreasing.
    """
    if r < 0 or s < 0 or t < 0:
        raise ValueError("box dimensions must be non-negative")
    if r == 0 or s == 0:
        yield tuple(() for _ in range(r))
        return
    grid = [[0] * s for _ in range(r)]

    def rec(pos):
        if pos == r * s:
            yield tuple(tuple(row) for row in grid)
            return
        i, j = divmod(pos, s)
        bound = t
        if i > 0:
            bound = min(bound, grid[i - 1][j])
        if j > 0:
            bound = min(bound, grid[i][j - 1])
        for v in range(bound, -1, -1):
            grid[i][j] = v
            yield from rec(pos + 1)
        grid[i][j] = 0

    yield from rec(0)


def pp_weight(pp):
    return sum(sum(row) for row in pp)


def count_pp(k, r, s):
    """Plane partitions of weight k in an r x s rectangle, unbounded
    entries.  The entry bound t = k is exact: no entry can exceed the
    total weight."""
    if k < 0:
        return 0
    if r == 0 or s == 0:
        return 1 if k == 0 else 0
    return sum(1 for pp in enumerate_pp(r, s, k) if pp_weight(pp) == k)


def macmahon_series(r, s, t, order):
    """First order+1 coefficients of the box generating function
    prod_{i<=r} prod_{j<=s} (1 - x^{i+j+t-1}) / (1 - x^{i+j-1})."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            e = i + j - 1
            for n in range(e, order + 1):  # divide by (1 - x^e)
                coeffs[n] += coeffs[n - e]
            e = i + j + t - 1
            for n in range(order, e - 1, -1):  # multiply by (1 - x^e)
                coeffs[n] -= coeffs[n - e]
    return coeffs


def box_series(r, s, order):
    """Coefficients counting plane partitions in an r x s rectangle by
    weight, with unbounded entries."""
    return inv_product_series(box_exponents(r, s), order)


def family3_convolution(a, j):
    """Stable diagonal value as a convolution of box counts:
    sum_l #pp(l; 3 x (a-1)) * #pp(j-l; 2 x 1)."""
    if a < 2:
        raise ValueError("a must be >= 2")
    return sum(count_pp(l, 3, a - 1) * count_pp(j - l, 2, 1)
               for l in range(j + 1))


def lemma2_transform(r_seq):
    """q_n = sum_{m<=n} (floor((n-m)/2) + 1) * r_m."""
    return [sum(((n - m) // 2 + 1) * r_seq[m] for m in range(n + 1))
            for n in range(len(r_seq))]
