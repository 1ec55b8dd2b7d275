"""Kronecker tableaux and the two-row Kronecker product rule.

A Kronecker tableau is a skew semi-standard filling of lambda/alpha with
content nu/alpha whose reverse reading word (rows read right-to-left, top
row first) is an alpha-lattice word, subject to one extra condition when
alpha_1 > alpha_2: the number of 1's in row 2 of the skew shape, or the
number of 2's in row 1, must equal alpha_1 - alpha_2.

Summed over alpha of a fixed size p contained in lambda and nu, these
tableaux count the multiplicity of s_nu in the Kronecker product of
s_{(n-p,p)} with s_lambda.
"""

from dataclasses import dataclass

from .partitions import (as_partition, conjugate, contains, intersect,
                         is_alpha_lattice, part_at, partitions_of)


class TwoRowRuleError(ValueError):
    """Neither hypothesis of the two-row counting rule applies."""


@dataclass(frozen=True)
class KroneckerTableau:
    """Skew filling of shape outer/inner; rows holds only the skew cells."""

    outer: tuple
    inner: tuple
    rows: tuple

    def cell(self, r, c):
        """Entry at row r, absolute column c (both 0-indexed)."""
        return self.rows[r][c - part_at(self.inner, r)]

    def reverse_reading_word(self):
        word = []
        for row in self.rows:
            word.extend(reversed(row))
        return tuple(word)

    def content(self, nvalues=None):
        """Multiplicity vector of the entries, 1-indexed values."""
        if nvalues is None:
            nvalues = max((v for row in self.rows for v in row), default=0)
        counts = [0] * nvalues
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def type_partition(self):
        """Content plus inner shape; equals the declared type of a valid tableau."""
        m = max(len(self.inner),
                max((v for row in self.rows for v in row), default=0))
        cnt = self.content(m)
        return as_partition(cnt[i] + part_at(self.inner, i) for i in range(m))


def iter_skew_fillings(outer, inner, content, head=(), alpha_condition=False):
    """Yield skew semi-standard fillings with a lattice reading word.

    Cells are filled in reverse-reading-word order (row 1 right-to-left,
    then row 2, ...) so the head-lattice prefix condition prunes every
    partial filling.  ``content[v-1]`` is the required number of entries
    v; ``head`` supplies the alpha_i offsets of the lattice condition
    (empty head = classical lattice words).  With ``alpha_condition``
    the extra Kronecker condition on rows 1 and 2 is enforced as soon as
    both rows are complete.

    Yields tuples of row tuples (skew cells only).  Yields nothing when
    the shapes are incompatible.
    """
    outer = tuple(outer)
    nrows = len(outer)
    inner_p = [part_at(inner, r) for r in range(nrows)]
    if len(inner) > nrows:
        return
    if any(inner_p[r] > outer[r] for r in range(nrows)):
        return
    m = len(content)
    ncells = sum(outer) - sum(inner_p)
    if sum(content) != ncells or any(c < 0 for c in content):
        return

    headv = [0] + [part_at(head, v - 1) for v in range(1, m + 2)]
    counts = [0] * (m + 2)
    remaining = list(content)
    rows = [[0] * (outer[r] - inner_p[r]) for r in range(nrows)]

    # Cell order: (row, index-in-row, index of the cell directly above or -1).
    cells = []
    for r in range(nrows):
        for j in range(len(rows[r]) - 1, -1, -1):
            c_abs = inner_p[r] + j
            above = c_abs - inner_p[r - 1] if r > 0 and c_abs >= inner_p[r - 1] else -1
            cells.append((r, j, above))

    # The extra condition only involves rows 1 and 2, so it can be decided
    # as soon as the last cell of those rows is placed.
    a1, a2 = part_at(head, 0), part_at(head, 1)
    check_at = -1
    if alpha_condition and a1 > a2:
        for i, (r, _, _) in enumerate(cells):
            if r <= 1:
                check_at = i
        if check_at == -1:
            return  # rows 1 and 2 are empty; their counts cannot reach a1-a2

    def condition_ok():
        twos_r1 = sum(1 for v in rows[0] if v == 2) if nrows >= 1 else 0
        ones_r2 = sum(1 for v in rows[1] if v == 1) if nrows >= 2 else 0
        return twos_r1 == a1 - a2 or ones_r2 == a1 - a2

    def fill(i):
        if i == ncells:
            yield tuple(tuple(row) for row in rows)
            return
        r, j, above = cells[i]
        row = rows[r]
        hi = row[j + 1] if j + 1 < len(row) else m
        lo = rows[r - 1][above] + 1 if above >= 0 else 1
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and counts[v - 1] + headv[v - 1] < counts[v] + 1 + headv[v]:
                continue
            row[j] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            if i != check_at or condition_ok():
                yield from fill(i + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            row[j] = 0

    if ncells == 0:
        yield tuple(tuple(row) for row in rows)
        return
    yield from fill(0)


def _validate_triple(lam, nu, alpha):
    lam, nu, alpha = as_partition(lam), as_partition(nu), as_partition(alpha)
    if sum(lam) != sum(nu):
        raise ValueError(f"shape/type mismatch: |{lam}| != |{nu}|")
    return lam, nu, alpha


def is_kronecker_tableau(t, lam, nu, alpha):
    """Check all four defining conditions of a Kronecker tableau."""
    lam, nu, alpha = _validate_triple(lam, nu, alpha)
    if not (contains(alpha, lam) and contains(alpha, nu)):
        raise ValueError("alpha must be contained in both lambda and nu")
    if t.outer != lam or t.inner != alpha:
        return False
    if len(t.rows) != len(lam):
        return False
    for r, row in enumerate(t.rows):
        if len(row) != lam[r] - part_at(alpha, r):
            return False
        # rows weakly increase
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    # columns strictly increase (only where the cell above is in the shape)
    for r in range(1, len(t.rows)):
        for c in range(max(part_at(alpha, r), part_at(alpha, r - 1)), lam[r]):
            if t.cell(r - 1, c) >= t.cell(r, c):
                return False
    m = len(nu)
    if any(v < 1 or v > m for row in t.rows for v in row):
        return False
    expected = tuple(nu[i] - part_at(alpha, i) for i in range(m))
    if t.content(m) != expected:
        return False
    if not is_alpha_lattice(t.reverse_reading_word(), alpha):
        return False
    a1, a2 = part_at(alpha, 0), part_at(alpha, 1)
    if a1 > a2:
        ones_r2 = sum(1 for v in t.rows[1] if v == 1) if len(t.rows) >= 2 else 0
        twos_r1 = sum(1 for v in t.rows[0] if v == 2) if t.rows else 0
        if ones_r2 != a1 - a2 and twos_r1 != a1 - a2:
            return False
    return True


def enumerate_kron_tableaux(lam, nu, alpha):
    """Yield every Kronecker tableau of shape lam/alpha and type nu/alpha.

    Empty stream when alpha is not contained in both lam and nu.
    """
    lam, nu, alpha = _validate_triple(lam, nu, alpha)
    if not (contains(alpha, lam) and contains(alpha, nu)):
        return
    content = tuple(nu[i] - part_at(alpha, i) for i in range(len(nu)))
    for rows in iter_skew_fillings(lam, alpha, content, head=alpha,
                                   alpha_condition=True):
        yield KroneckerTableau(lam, alpha, rows)


def count_kron_tableaux(lam, nu, alpha):
    """Number of Kronecker tableaux of shape lam/alpha and type nu/alpha."""
    return sum(1 for _ in enumerate_kron_tableaux(lam, nu, alpha))


def two_row_multiplicity(n, p, lam, nu):
    """Multiplicity of s_nu in s_{(n-p,p)} * s_lam by tableau counting.

    Applies when n >= 2p and either lam_1 >= 2p-1 (counted directly) or
    the length of lam is >= 2p-1 (counted on conjugates).  Raises
    TwoRowRuleError when neither hypothesis holds.
    """
    lam, nu = as_partition(lam), as_partition(nu)
    if p < 1 or n < 2 * p:
        raise TwoRowRuleError(f"need n >= 2p >= 2, got n={n}, p={p}")
    if sum(lam) != n or sum(nu) != n:
        raise ValueError("lam and nu must be partitions of n")
    if part_at(lam, 0) >= 2 * p - 1:
        pass
    elif len(lam) >= 2 * p - 1:
        lam, nu = conjugate(lam), conjugate(nu)
    else:
        raise TwoRowRuleError(
            f"two-row rule hypothesis fails for n={n}, p={p}, lam={lam}")
    bound = intersect(lam, nu)
    return sum(count_kron_tableaux(lam, nu, alpha)
               for alpha in partitions_of(p, max_length=len(bound))
               if contains(alpha, bound))
