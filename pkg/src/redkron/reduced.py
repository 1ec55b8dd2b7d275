"""Reduced Kronecker coefficients via stabilization.

The reduced coefficient indexed by (alpha, beta, gamma) is the stable
value of the Kronecker coefficients of the padded triple, reached no
later than the minimum of the three pairwise stabilization bounds.  It
is evaluated at the smallest point where all three paddings are valid
partitions, going through the character oracle when that point is within
the oracle scale and otherwise through the two-row tableau rule when one
padded partition has at most two rows.
"""

from .characters import ScaleExceededError, kronecker_coeff, oracle_cap
from .partitions import as_partition, pad, part_at
from .tableaux import TwoRowRuleError, two_row_multiplicity


def stab(alpha, beta):
    """Explicit stabilization bound |alpha| + |beta| + alpha_1 + beta_1."""
    return sum(alpha) + sum(beta) + part_at(alpha, 0) + part_at(beta, 0)


def stability_threshold(alpha, beta, gamma):
    """Minimum of the three pairwise stabilization bounds."""
    return min(stab(alpha, beta), stab(alpha, gamma), stab(beta, gamma))


def evaluation_point(alpha, beta, gamma):
    """Smallest n at which the stable value is read off: the threshold,
    raised if needed so that all three paddings are partitions."""
    return max(stability_threshold(alpha, beta, gamma),
               sum(alpha) + part_at(alpha, 0),
               sum(beta) + part_at(beta, 0),
               sum(gamma) + part_at(gamma, 0))


def _two_row_at(alpha, beta, gamma, n):
    """Kronecker coefficient of the padded triple via the two-row rule.

    One of the three reduced partitions must have at most one part, so
    its padding is the two-row partition (n-p, p).
    """
    triple = [as_partition(alpha), as_partition(beta), as_partition(gamma)]
    for idx in range(3):
        if len(triple[idx]) <= 1:
            p = part_at(triple[idx], 0)
            others = [pad(t, n) for i, t in enumerate(triple) if i != idx]
            if p == 0:
                return 1 if others[0] == others[1] else 0
            for lam, nu in (others, others[::-1]):
                try:
                    return two_row_multiplicity(n, p, lam, nu)
                except TwoRowRuleError:
                    continue
    raise TwoRowRuleError(
        "no index of the triple admits the two-row rule at n=%d" % n)


def kron_at(alpha, beta, gamma, n, method="auto"):
    """Kronecker coefficient g of the triple padded at n."""
    if method not in ("auto", "oracle", "tableau"):
        raise ValueError(f"unknown method {method!r}")
    if method == "tableau":
        return _two_row_at(alpha, beta, gamma, n)
    if method == "oracle" or n <= oracle_cap():
        return kronecker_coeff(pad(gamma, n), pad(alpha, n), pad(beta, n))
    try:
        return _two_row_at(alpha, beta, gamma, n)
    except TwoRowRuleError as exc:
        raise ScaleExceededError(
            f"n={n} exceeds the oracle cap and the two-row rule "
            f"does not apply") from exc


def reduced_kron(alpha, beta, gamma, method="auto"):
    """The reduced Kronecker coefficient of (alpha, beta, gamma)."""
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    n = evaluation_point(alpha, beta, gamma)
    return kron_at(alpha, beta, gamma, n, method=method)


def stabilization_sequence(alpha, beta, gamma, n_lo, n_hi, method="auto"):
    """Kronecker coefficients of the padded triple for each n in
    [n_lo, n_hi]; n_lo must make all three paddings valid."""
    alpha, beta, gamma = as_partition(alpha), as_partition(beta), as_partition(gamma)
    feasible = max(sum(t) + part_at(t, 0) for t in (alpha, beta, gamma))
    if n_lo < feasible:
        raise ValueError(f"n_lo must be >= {feasible} for valid paddings")
    return [kron_at(alpha, beta, gamma, n, method=method)
            for n in range(n_lo, n_hi + 1)]
