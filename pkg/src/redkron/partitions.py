"""Integer partitions, padding, and lattice-word predicates.

A partition is a plain tuple of weakly decreasing positive integers,
stored without trailing zeros so that equal partitions compare equal.
All componentwise operations implicitly zero-pad the shorter argument.
"""

from math import factorial


Partition = tuple


def as_partition(parts):
    """Canonicalize an iterable into a partition tuple.

    Trailing zeros are stripped; anything not weakly decreasing or
    containing a negative entry is rejected.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part: {p}")
    return p


def parse_partition(text):
    """Parse the comma-separated textual form, e.g. '5,3,2,1'; '' is empty."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(tok) for tok in text.split(","))


def format_partition(p):
    """Render a partition in the comma-separated textual form."""
    return ",".join(str(x) for x in p)


def part_at(p, i):
    """The i-th part (0-indexed), zero beyond the last part."""
    return p[i] if 0 <= i < len(p) else 0


def conjugate(p):
    """Transpose of the Young diagram."""
    if not p:
        return ()
    cols = [0] * p[0]
    for row in p:
        for j in range(row):
            cols[j] += 1
    return tuple(cols)


def pad(alpha, n):
    """The padding (n - |alpha|, alpha_1, alpha_2, ...).

    Valid only when n >= |alpha| + alpha_1, which is exactly when the
    result is a partition of n.
    """
    total = sum(alpha)
    first = alpha[0] if alpha else 0
    if n < total + first:
        raise ValueError(f"padding needs n >= {total + first}, got {n}")
    return as_partition((n - total,) + tuple(alpha))


def contains(inner, outer):
    """True iff inner fits inside outer componentwise."""
    return all(part_at(outer, i) >= x for i, x in enumerate(inner))


def intersect(p, q):
    """Componentwise minimum of two partitions."""
    return as_partition(min(part_at(p, i), part_at(q, i))
                        for i in range(max(len(p), len(q))))


def is_alpha_lattice(word, alpha):
    """Lattice-word test with head counts taken from ``alpha``.

    A word passes iff for every prefix and every value i, the number of
    occurrences of i plus alpha_i stays >= the number of occurrences of
    i+1 plus alpha_{i+1}.  With ``alpha = ()`` this is the classical
    lattice-word (Yamanouchi) condition.
    """
    counts = {}
    for v in word:
        if v < 1:
            raise ValueError(f"word entries must be positive, got {v}")
        c = counts.get(v, 0) + 1
        if v > 1 and counts.get(v - 1, 0) + part_at(alpha, v - 2) < c + part_at(alpha, v - 1):
            return False
        counts[v] = c
    return True


def z_weight(rho):
    """Centralizer order of the conjugacy class rho: prod_i i^{m_i} m_i!."""
    z = 1
    mult = {}
    for x in rho:
        mult[x] = mult.get(x, 0) + 1
    for x, m in mult.items():
        z *= x ** m * factorial(m)
    return z


def partitions_of(n, max_length=None):
    """Yield the partitions of n in reverse lexicographic order.

    ``max_length`` bounds the number of parts.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    slots = n if max_length is None else max_length

    def gen(remaining, max_part, room):
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first, room - 1):
                yield (first,) + rest

    yield from gen(n, n, slots)
