"""Symmetric-group characters and exact Kronecker coefficients.

This is the brute-force ground truth for everything downstream: character
values come from the Murnaghan-Nakayama border-strip recursion (memoized,
exact integers), and Kronecker coefficients from the class-weighted triple
product of character rows.
"""

import os
from functools import lru_cache
from math import factorial

from .partitions import as_partition, partitions_of, z_weight
from .tableaux import iter_skew_fillings


DEFAULT_ORACLE_CAP = 25
_ORACLE_CAP_ENV = "REDKRON_ORACLE_CAP"
_oracle_cap_override = None


class ScaleExceededError(Exception):
    """Raised when a computation would exceed the configured oracle scale."""


def oracle_cap():
    """Largest n the character oracle will accept."""
    if _oracle_cap_override is not None:
        return _oracle_cap_override
    env = os.environ.get(_ORACLE_CAP_ENV)
    return int(env) if env else DEFAULT_ORACLE_CAP


def set_oracle_cap(cap):
    """Override the oracle cap (None restores env/default behaviour)."""
    global _oracle_cap_override
    _oracle_cap_override = None if cap is None else int(cap)


def _check_scale(n):
    cap = oracle_cap()
    if n > cap:
        raise ScaleExceededError(
            f"character oracle scale exceeded: n={n} > cap {cap}")


# Memo for (lambda, rho) character values.  Entries are pure and
# idempotent, so concurrent readers/writers always observe consistent
# values even without locking.
_MN_MEMO = {}


def _strip_removals(lam, r):
    """All ways to remove a border strip of size r from lam.

    Returns (new_partition, height) pairs via the beta-number encoding:
    removing a strip of size r means lowering one first-column hook
    length by r without colliding with another.
    """
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(betas)
    out = []
    for b in betas:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in betas if nb < x < b)
        newb = sorted((x for x in betas if x != b), reverse=True)
        newb.append(nb)
        newb.sort(reverse=True)
        m = len(newb)
        newlam = tuple(x - (m - 1 - i) for i, x in enumerate(newb))
        out.append((as_partition(newlam), height))
    return out


def mn_character(lam, rho):
    """Character value chi^lam(rho) by recursive border-strip removal.

    Strips are removed for the largest remaining part of rho first, which
    makes the recursion deterministic and keeps the memo keys canonical.
    """
    lam = as_partition(lam)
    rho = as_partition(rho)
    if sum(lam) != sum(rho):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, rho)


def _mn(lam, rho):
    if not rho:
        return 1
    key = (lam, rho)
    val = _MN_MEMO.get(key)
    if val is not None:
        return val
    r, rest = rho[0], rho[1:]
    total = 0
    for newlam, height in _strip_removals(lam, r):
        total += (-1) ** height * _mn(newlam, rest)
    _MN_MEMO[key] = total
    return total


def dimension(lam):
    """Dimension of the irreducible indexed by lam."""
    lam = as_partition(lam)
    return _mn(lam, (1,) * sum(lam))


class CharacterTable:
    """Full character table of the symmetric group on n letters.

    Rows are indexed by irreducibles (partitions of n), columns by
    conjugacy classes (also partitions of n), both in reverse
    lexicographic order.
    """

    def __init__(self, n):
        _check_scale(n)
        self.n = n
        self.partitions = tuple(partitions_of(n))
        self._index = {p: i for i, p in enumerate(self.partitions)}
        self._rows = {}

    def row(self, lam):
        """All character values of lam, ordered like ``self.partitions``."""
        lam = as_partition(lam)
        if lam not in self._index:
            raise ValueError(f"{lam} is not a partition of {self.n}")
        cached = self._rows.get(lam)
        if cached is None:
            cached = tuple(_mn(lam, rho) for rho in self.partitions)
            self._rows[lam] = cached
        return cached

    def value(self, lam, rho):
        rho = as_partition(rho)
        return self.row(lam)[self._index[rho]]

    def class_sizes(self):
        nfact = factorial(self.n)
        return tuple(nfact // z_weight(rho) for rho in self.partitions)


@lru_cache(maxsize=None)
def character_table(n):
    return CharacterTable(n)


def kronecker_coeff(lam, mu, nu):
    """Kronecker coefficient g_{mu nu}^lam, exactly.

    Computed as sum over classes of chi^lam chi^mu chi^nu / z; the sum is
    accumulated over class sizes so the arithmetic stays in integers.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("all three partitions must have equal size")
    if n == 0:
        return 1
    _check_scale(n)
    table = character_table(n)
    r1, r2, r3 = table.row(lam), table.row(mu), table.row(nu)
    num = sum(c * a * b * d
              for c, a, b, d in zip(table.class_sizes(), r1, r2, r3))
    nfact = factorial(n)
    if num % nfact:
        raise ArithmeticError("character sum is not divisible by n!")
    g = num // nfact
    if g < 0:
        raise ArithmeticError("negative Kronecker coefficient")
    return g


def kronecker_product(mu, nu):
    """Full expansion of the Kronecker product of mu and nu.

    Returns {lam: g_{mu nu}^lam} restricted to positive coefficients.
    """
    mu, nu = as_partition(mu), as_partition(nu)
    n = sum(mu)
    if sum(nu) != n:
        raise ValueError("both partitions must have equal size")
    if n == 0:
        return {(): 1}
    _check_scale(n)
    table = character_table(n)
    r2, r3 = table.row(mu), table.row(nu)
    sizes = table.class_sizes()
    nfact = factorial(n)
    out = {}
    for lam in table.partitions:
        r1 = table.row(lam)
        num = sum(c * a * b * d for c, a, b, d in zip(sizes, r1, r2, r3))
        if num:
            out[lam] = num // nfact
    return out


def lr_coeff(alpha, beta, gamma):
    """Littlewood-Richardson coefficient c^gamma_{alpha beta}.

    Counts skew semi-standard fillings of gamma/alpha of content beta
    whose reverse reading word is a classical lattice word.
    """
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    if sum(alpha) + sum(beta) != sum(gamma):
        raise ValueError("sizes must satisfy |alpha| + |beta| = |gamma|")
    content = tuple(beta)
    return sum(1 for _ in iter_skew_fillings(gamma, alpha, content, head=()))


__all__ = [
    "CharacterTable", "ScaleExceededError", "character_table", "dimension",
    "kronecker_coeff", "kronecker_product", "lr_coeff", "mn_character",
    "oracle_cap", "set_oracle_cap",
]
