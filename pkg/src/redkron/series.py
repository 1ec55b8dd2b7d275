"""Exact truncated power series, cyclotomic polynomials, and
quasipolynomial extraction for the coefficient-family generating
functions.

Generating functions here are always of the form prod_i (1-x^i)^{-e_i};
they are represented by their exponent map {i: e_i} and expanded to exact
integer coefficient lists on demand.  Rewriting over the common
denominator (1-x^ell)^m turns each one into a polynomial numerator whose
cyclotomic factorization is computed by pure exponent arithmetic, and the
quasipolynomial evaluation rule falls out of the binomial expansion of
the denominator.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache, reduce
from math import factorial, lcm


# --- integer polynomial / series helpers (coefficient lists, ascending) ---

def poly_trim(p):
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return list(p[:i])


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divexact(num, den):
    """Exact polynomial division over the integers; raises if inexact."""
    num = poly_trim(num)
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * (len(num) - len(den) + 1) if len(num) >= len(den) else []
    rem = list(num)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(rem[i + len(den) - 1], lead)
        if r:
            raise ValueError("inexact polynomial division")
        out[i] = q
        for j, y in enumerate(den):
            rem[i + j] -= q * y
    if any(rem):
        raise ValueError("inexact polynomial division")
    return out


def series_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if x:
            hi = min(len(b), order + 1 - i)
            for j in range(hi):
                out[i + j] += x * b[j]
    return out


def inv_product_series(exponents, order):
    """Coefficients of prod_i (1-x^i)^{-e_i} up to the truncation order.

    Each factor 1/(1-x^i) is applied as a stride-i running sum, which is
    the exact geometric-series multiplication in the truncated ring.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for i, e in sorted(exponents.items()):
        if i < 1:
            raise ValueError(f"exponent key must be positive, got {i}")
        if e < 0:
            raise ValueError(f"exponent must be non-negative, got {e}")
        for _ in range(e):
            for n in range(i, order + 1):
                coeffs[n] += coeffs[n - i]
    return coeffs


def divisors(n):
    return sorted(d for d in range(1, n + 1) if n % d == 0)


@cache
def cyclotomic(n):
    """The n-th cyclotomic polynomial, by iterated exact division of
    x^n - 1 by the cyclotomic polynomials of the proper divisors."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = poly_divexact(poly, cyclotomic(d))
    return poly


def lcm_upto(m):
    return reduce(lcm, range(1, m + 1), 1)


# --- the family generating functions ---

def f_exponents(a):
    """Denominator exponents of the square-case family generating function:
    (1-x)(1-x^2)^2 ... (1-x^a)^2 (1-x^{a+1})."""
    if a < 1:
        raise ValueError("a must be >= 1")
    exps = {1: 1}
    for i in range(2, a + 1):
        exps[i] = 2
    exps[a + 1] = exps.get(a + 1, 0) + 1
    return exps


def g_exponents(a):
    """Denominator exponents of the stable-diagonal generating function:
    (1-x)^2 (1-x^2)^3 ... (1-x^{a-1})^3 (1-x^a)^2 (1-x^{a+1}).

    At a=1 the product pattern degenerates; the correct series there is
    1/((1-x)(1-x^2)), the convolution of the empty 3x0 box with the 2x1
    box, and it matches the stabilized coefficients.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if a == 1:
        return {1: 1, 2: 1}
    exps = {1: 2}
    for i in range(2, a):
        exps[i] = 3
    exps[a] = exps.get(a, 0) + 2
    exps[a + 1] = exps.get(a + 1, 0) + 1
    return exps


def box_exponents(r, s):
    """Denominator exponents for plane partitions in an r x s rectangle
    with unbounded entries (the reformulated box product)."""
    low, high = min(r, s), max(r, s)
    exps = {}
    for j in range(low, high + 1):
        exps[j] = exps.get(j, 0) + low
    for i in range(1, low):
        exps[i] = exps.get(i, 0) + i
        exps[high + i] = exps.get(high + i, 0) + (low - i)
    return exps


def f_series(a, order):
    if a == 0:
        return [1] + [0] * order
    return inv_product_series(f_exponents(a), order)


def g_series(a, order):
    return inv_product_series(g_exponents(a), order)


def h_series(a, order):
    """Plane partitions in a 3 x (a-1) rectangle, as a series."""
    if a < 2:
        raise ValueError("a must be >= 2")
    return inv_product_series(box_exponents(3, a - 1), order)


# --- numerators over (1 - x^ell)^m and quasipolynomial extraction ---

def numerator_polynomial(exponents, ell, m):
    """The exact polynomial (1-x^ell)^m * prod_i (1-x^i)^{-e_i}.

    Computed in cyclotomic-exponent arithmetic: every factor is a signed
    product of cyclotomic polynomials, so the quotient's exponent vector
    is m minus the summed denominator exponents per divisor.  A negative
    exponent means ell or m was wrong for this denominator.  Returns the
    expanded polynomial together with its cyclotomic exponent vector.
    """
    exps = {d: m for d in divisors(ell)}
    for i, e in exponents.items():
        if ell % i:
            raise ValueError(f"denominator degree {i} does not divide ell={ell}")
        for d in divisors(i):
            exps[d] -= e
    bad = {d: v for d, v in exps.items() if v < 0}
    if bad:
        raise ValueError(f"negative cyclotomic exponents {bad}: wrong ell or m")
    sign = -1 if (m - sum(exponents.values())) % 2 else 1
    poly = [sign]
    for d in sorted(exps):
        for _ in range(exps[d]):
            poly = poly_mul(poly, cyclotomic(d))
    return poly, {d: v for d, v in exps.items() if v > 0}


@dataclass(frozen=True)
class Quasipolynomial:
    """Period ell plus one exact-rational polynomial per residue class.

    ``residue_polys[r]`` is the tuple of Fraction coefficients
    (constant-first) of the polynomial evaluated at n whenever
    n % period == r.
    """

    period: int
    residue_polys: tuple

    @property
    def degree(self):
        return max((len(p) - 1 for p in self.residue_polys), default=0)


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _frac_poly_trim(p):
    i = len(p)
    while i > 1 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def quasipoly_extract(numerator, ell, m):
    """Quasipolynomial of the coefficients of numerator / (1-x^ell)^m.

    For n = ell*q + r the coefficient is
        sum over s == r (mod ell) of numerator[s] * C(m-1 + q - (s-r)/ell, m-1),
    and because deg(numerator) < ell*m every binomial with negative upper
    offset vanishes, so the sum is a single polynomial in n per residue.
    """
    numerator = poly_trim(numerator)
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(numerator) - 1 >= ell * m:
        raise ValueError("numerator degree must be < ell * m")
    fact = factorial(m - 1)
    residues = []
    for r in range(ell):
        acc = [Fraction(0)]
        for s in range(r, len(numerator), ell):
            c = numerator[s]
            if not c:
                continue
            # C(m-1 + (n-s)/ell, m-1) as a polynomial in n
            p = [Fraction(1)]
            for t in range(1, m):
                p = _frac_poly_mul(p, [Fraction(t) - Fraction(s, ell),
                                       Fraction(1, ell)])
            scale = Fraction(c, fact)
            if len(p) > len(acc):
                acc += [Fraction(0)] * (len(p) - len(acc))
            for i, x in enumerate(p):
                acc[i] += scale * x
        residues.append(_frac_poly_trim(acc))
    return Quasipolynomial(ell, tuple(residues))


def quasipoly_eval(qp, n):
    """Evaluate at n using the residue class of n; exact rational."""
    poly = qp.residue_polys[n % qp.period]
    acc = Fraction(0)
    for c in reversed(poly):
        acc = acc * n + c
    return acc


def minimal_period(qp):
    """Smallest divisor p of the period with p-periodic residue polynomials."""
    for p in divisors(qp.period):
        if all(qp.residue_polys[r] == qp.residue_polys[(r + p) % qp.period]
               for r in range(qp.period)):
            return p
    return qp.period


def family_quasipoly(family, a):
    """Extracted quasipolynomial for family 1 (square case) or the
    family-3 stable diagonals, with the denominator (1-x^ell)^m fixed by
    ell = lcm(1..a+1) and m = 2a (family 1) or 3a-1 (family 3)."""
    if family == 1:
        exps, m = f_exponents(a), 2 * a
    elif family == 3:
        exps, m = g_exponents(a), 3 * a - 1
    else:
        raise ValueError("family must be 1 or 3")
    ell = lcm_upto(a + 1)
    num, _ = numerator_polynomial(exps, ell, m)
    return quasipoly_extract(num, ell, m)
