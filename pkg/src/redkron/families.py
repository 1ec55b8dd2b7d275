"""The three coefficient families, coloured-partition alphabets, and the
constructive bijections onto Kronecker tableaux.

Index conventions (fixed by the reference grids and the stable-diagonal
series, which pin them unambiguously):

  family1(a, b, k)    = rk((k^a), (k^b), (k))
  family2(a, b, k, i) = rk(((k+i)^a), (k^b), (k))
  family3(a, b, k, i) = rk((k^(b-1)), (k+i, k^(a-1)), (k))

where rk is the reduced Kronecker coefficient.  For family 3 the square
regime is b = a+1: the j-th diagonal (j = k-i) is then constant for
k >= 2j, with value diag_stable(a, j).

The bijections realize the square-regime counts: coloured partitions of
weight k over the alphabet B_a map onto the Kronecker tableaux of shape
and type (3k, k^a)/alpha (family 1), and coloured partitions of weight j
over C_a map onto the tableaux of shape (3k, k^a)/alpha and type
(2k+j, 2k-j, k^(a-1))/alpha (family 3 diagonals).  Each coloured part is
a column of height a+1 with a shaded top segment; alpha is read off the
shaded cells.
"""

from typing import NamedTuple

from .partitions import as_partition, pad, part_at
from .reduced import evaluation_point, reduced_kron
from .series import f_series, g_series
from .tableaux import KroneckerTableau

PLAIN, BAR, DBAR = 0, 1, 2
_SUFFIX = {PLAIN: "", BAR: "~", DBAR: "~~"}


class ColouredPart(NamedTuple):
    """A decorated part; the decoration distinguishes identity, not weight."""

    level: int
    deco: int

    def __str__(self):
        return f"{self.level}{_SUFFIX[self.deco]}"


def parse_coloured_part(token):
    token = token.strip()
    deco = PLAIN
    if token.endswith("~~"):
        deco, token = DBAR, token[:-2]
    elif token.endswith("~"):
        deco, token = BAR, token[:-1]
    level = int(token)
    if level < 1:
        raise ValueError(f"part level must be positive: {token}")
    return ColouredPart(level, deco)


def parse_coloured_partition(text):
    text = text.strip()
    if not text:
        return ()
    toks = text.replace(",", " ").split()
    return canonical_coloured(parse_coloured_part(t) for t in toks)


def format_coloured_partition(beta):
    return ",".join(str(p) for p in beta)


def canonical_coloured(parts):
    """Multiset canonical form: level descending, plain < bar < doublebar."""
    return tuple(sorted(parts, key=lambda p: (-p.level, p.deco)))


def coloured_weight(beta):
    return sum(p.level for p in beta)


def alphabet_B(a):
    """{1~} + {l, l~ : 2 <= l <= a} + {(a+1)~}; 2a parts in total."""
    if a < 1:
        raise ValueError("a must be >= 1")
    parts = [ColouredPart(1, BAR)]
    for l in range(2, a + 1):
        parts.append(ColouredPart(l, PLAIN))
        parts.append(ColouredPart(l, BAR))
    parts.append(ColouredPart(a + 1, BAR))
    return tuple(parts)


def alphabet_C(a):
    """{1, 1~} + {l, l~, l~~ : 2 <= l <= a-1} + {a, a~, a+1}; 3a-1 parts."""
    if a < 2:
        raise ValueError("a must be >= 2")
    parts = [ColouredPart(1, PLAIN), ColouredPart(1, BAR)]
    for l in range(2, a):
        parts.append(ColouredPart(l, PLAIN))
        parts.append(ColouredPart(l, BAR))
        parts.append(ColouredPart(l, DBAR))
    parts.append(ColouredPart(a, PLAIN))
    parts.append(ColouredPart(a, BAR))
    parts.append(ColouredPart(a + 1, PLAIN))
    return tuple(parts)


def enumerate_coloured(alphabet, weight):
    """All multisets over the alphabet of the given total weight.

    Deterministic order: parts are consumed in alphabet order (level then
    decoration), multiplicities descending.
    """
    alpha_sorted = sorted(set(alphabet))

    def rec(idx, remaining):
        if remaining == 0:
            yield ()
            return
        if idx == len(alpha_sorted):
            return
        part = alpha_sorted[idx]
        for mult in range(remaining // part.level, -1, -1):
            for rest in rec(idx + 1, remaining - mult * part.level):
                yield (part,) * mult + rest

    for multiset in rec(0, weight):
        yield canonical_coloured(multiset)


# --- coefficient values ---

def _square_dim(a):
    return a * (a + 1) // 2


def family1(a, b, k):
    """rk((k^a), (k^b), (k)); for b = a read from the series fast path."""
    _check_nonneg(a=a, b=b, k=k)
    if a == b:
        if a == 0:
            return 1 if k == 0 else 0
        return f_series(a, k)[k]
    return reduced_kron((k,) * a, (k,) * b, (k,))


def family2(a, b, k, i):
    """rk(((k+i)^a), (k^b), (k)); for b = a this is zero below k = d*i
    with d = a(a+1)/2 and the family-1 series shifted by d*i above."""
    _check_nonneg(a=a, b=b, k=k, i=i)
    if a == b:
        if a == 0:
            return 1 if k == 0 else 0
        d = _square_dim(a)
        if k < d * i:
            return 0
        return f_series(a, k - d * i)[k - d * i]
    return reduced_kron((k + i,) * a, (k,) * b, (k,))


def family3(a, b, k, i):
    """rk((k^(b-1)), (k+i, k^(a-1)), (k)), always computed through the
    reduced-coefficient pathways (the stable diagonals cross-check
    against diag_stable)."""
    _check_nonneg(k=k, i=i)
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    first = (k,) * (b - 1)
    second = (k + i,) + (k,) * (a - 1)
    return reduced_kron(first, second, (k,))


def diag_stable(a, j):
    """Stable value of the j-th family-3 diagonal (b = a+1, k >= 2j)."""
    _check_nonneg(a=a, j=j)
    if a < 1:
        raise ValueError("a must be >= 1")
    return g_series(a, j)[j]


def _check_nonneg(**kwargs):
    for name, value in kwargs.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")


# --- column catalogues for the bijections ---
#
# A column is (shaded, entries): `shaded` top cells carry the inner
# shape, `entries` fill the remaining rows down to row a+1.

def _column_B(p, a):
    level, deco = p
    if deco == BAR:
        if level == 1:
            return (1, (1,) + tuple(range(3, a + 2)))
        if 2 <= level <= a:
            return (level, (1,) + tuple(range(level + 2, a + 2)))
        if level == a + 1:
            return (a + 1, ())
    elif deco == PLAIN and 2 <= level <= a:
        return (level, tuple(range(level + 1, a + 2)))
    raise ValueError(f"part {p} is outside the B alphabet for a={a}")


def _column_C(p, a):
    level, deco = p
    if deco == PLAIN:
        if level == 1:
            return (1, (1,) + tuple(range(3, a + 2)))
        if 2 <= level <= a - 1:
            return (level, (1,) + tuple(range(level + 2, a + 2)))
        if level == a:
            return (a, (1,))
        if level == a + 1:
            return (a + 1, ())
    elif deco == BAR:
        if level == 1:
            return (2, (2,) + tuple(range(4, a + 2)))
        if 2 <= level <= a - 1:
            return (level, tuple(range(level + 1, a + 2)))
        if level == a:
            return (a, (a + 1,))
    elif deco == DBAR and 2 <= level <= a - 1:
        return (level + 1, (2,) + tuple(range(level + 3, a + 2)))
    raise ValueError(f"part {p} is outside the C alphabet for a={a}")


def _filler_column(a):
    # carries one shaded box and no weight; pads alpha up to size k
    return (1, tuple(range(2, a + 2)))


def _family2_extra_columns(a):
    return [(j - 1, tuple(range(j, a + 2))) for j in range(2, a + 2)]


def _assemble_tableau(columns, outer, type_partition):
    """Sort the columns into a semi-standard tableau, read alpha off the
    shaded cells, complete row r with r for r >= 2, and fill row 1 with
    the leftover type content in weakly increasing order."""
    outer = as_partition(outer)
    nrows = len(outer)
    cols = sorted(columns, key=lambda c: (-c[0], c[1]))
    ncols = len(cols)
    alpha = as_partition(sum(1 for sh, _ in cols if sh >= r)
                         for r in range(1, nrows + 1))
    nvalues = max(nrows, len(type_partition))
    used = [0] * (nvalues + 1)
    rows = [[0] * (outer[r] - part_at(alpha, r)) for r in range(nrows)]
    for pos, (sh, entries) in enumerate(cols):
        for off, v in enumerate(entries):
            r = sh + off
            rows[r][pos - part_at(alpha, r)] = v
            used[v] += 1
    for r in range(1, nrows):
        for c in range(ncols, outer[r]):
            rows[r][c - part_at(alpha, r)] = r + 1
            used[r + 1] += 1
    leftover = []
    for v in range(1, nvalues + 1):
        cnt = part_at(type_partition, v - 1) - part_at(alpha, v - 1) - used[v]
        if cnt < 0:
            raise ValueError("column content exceeds the declared type")
        leftover.extend([v] * cnt)
    if len(leftover) != len(rows[0]):
        raise ValueError("leftover content does not fill the first row")
    rows[0] = leftover
    return KroneckerTableau(outer, alpha, tuple(tuple(r) for r in rows))


def bij_family1(beta, a):
    """Family-1 bijection: coloured partition over B_a of weight k to a
    Kronecker tableau of shape and type (3k, k^a)/alpha."""
    beta = canonical_coloured(beta)
    k = coloured_weight(beta)
    if k == 0:
        return KroneckerTableau((), (), ())
    outer = as_partition((3 * k,) + (k,) * a)
    cols = [_column_B(p, a) for p in beta]
    return _assemble_tableau(cols, outer, outer)


def bij_family2(beta, a, i):
    """Family-2 bijection for the shifted coefficient: the B_a columns of
    beta plus i copies of each extra staircase column; shape and type come
    from padding the shifted triple at its evaluation point."""
    beta = canonical_coloured(beta)
    if i < 0:
        raise ValueError("i must be non-negative")
    k = coloured_weight(beta)
    d = _square_dim(a)
    kk = k + d * i
    if kk == 0:
        return KroneckerTableau((), (), ())
    n = evaluation_point((kk + i,) * a, (kk,) * a, (kk,))
    outer = pad((kk,) * a, n)
    typ = pad((kk + i,) * a, n)
    cols = [_column_B(p, a) for p in beta]
    for extra in _family2_extra_columns(a):
        cols.extend([extra] * i)
    return _assemble_tableau(cols, outer, typ)


def bij_family3(beta, a, k):
    """Family-3 bijection: coloured partition over C_a of weight j to a
    Kronecker tableau of shape (3k, k^a)/alpha and type
    (2k+j, 2k-j, k^(a-1))/alpha, valid for k >= 2j."""
    beta = canonical_coloured(beta)
    j = coloured_weight(beta)
    if k < 2 * j:
        raise ValueError(f"need k >= 2j, got k={k}, j={j}")
    cols = [_column_C(p, a) for p in beta]
    if k == 0:
        return KroneckerTableau((), (), ())
    m0 = (k - j
          - sum(1 for p in beta if p == ColouredPart(1, BAR))
          - sum(1 for p in beta if p.deco == DBAR))
    cols.extend([_filler_column(a)] * m0)
    outer = as_partition((3 * k,) + (k,) * a)
    typ = as_partition((2 * k + j, 2 * k - j) + (k,) * (a - 1))
    return _assemble_tableau(cols, outer, typ)


def inv_bij_family3(t, a, k):
    """Inverse of the family-3 bijection: read the column multiplicities
    of the tableau against the column catalogue.  Rejects any tableau
    containing a column outside the catalogue."""
    if k == 0:
        if t.outer != () or t.inner != ():
            raise ValueError("the weight-0 tableau must be empty")
        return ()
    expected = as_partition((3 * k,) + (k,) * a)
    if t.outer != expected:
        raise ValueError(f"tableau shape {t.outer} is not {expected}")
    alpha = t.inner
    if sum(alpha) != k:
        raise ValueError(f"inner shape must have size {k}")
    catalogue = {_column_C(p, a): p for p in alphabet_C(a)}
    catalogue[_filler_column(a)] = None
    full = tuple(range(1, a + 2))
    parts = []
    for c in range(k):
        sh = sum(1 for r in range(a + 1) if part_at(alpha, r) > c)
        entries = tuple(t.cell(r, c) for r in range(sh, a + 1))
        if sh == 0:
            if entries != full:
                raise ValueError(f"column {c} is outside the catalogue")
            continue
        if (sh, entries) not in catalogue:
            raise ValueError(f"column {c} is outside the catalogue")
        p = catalogue[(sh, entries)]
        if p is not None:
            parts.append(p)
    return canonical_coloured(parts)


# --- saturation and monotonicity ---

def saturation_check(family, s_max, *, a, k=None, i=None, j=None):
    """True iff the stretched coefficient stays positive for s = 1..s_max.

    family 1 needs (a, k); family 2 the shifted square case (a, k, i);
    family 3 the stable diagonal (a, j).
    """
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    if family == 1:
        if k is None:
            raise ValueError("family 1 needs k")
        return all(family1(a, a, s * k) > 0 for s in range(1, s_max + 1))
    if family == 2:
        if k is None or i is None:
            raise ValueError("family 2 needs k and i")
        d = _square_dim(a)
        return all(family2(a, a, s * (k + d * i), s * i) > 0
                   for s in range(1, s_max + 1))
    if family == 3:
        if j is None:
            raise ValueError("family 3 needs j")
        return all(diag_stable(a, s * j) > 0 for s in range(1, s_max + 1))
    raise ValueError(f"unsupported family {family!r}")


def monotonicity_check(family, vary, lo, hi, *, a=None, b=None, k=None, i=None):
    """True iff the indicated one-parameter sequence is weakly increasing.

    ``vary`` is 'k' or 'a'; the other parameters are held fixed.
    """
    if hi < lo:
        raise ValueError("empty range")
    if family == 1 and vary == "k":
        seq = [family1(a, a if b is None else b, kk) for kk in range(lo, hi + 1)]
    elif family == 1 and vary == "a":
        seq = [family1(aa, aa, k) for aa in range(lo, hi + 1)]
    elif family == 2 and vary == "k":
        seq = [family2(a, a if b is None else b, kk, i) for kk in range(lo, hi + 1)]
    elif family == 3 and vary == "k":
        seq = [family3(a, a + 1 if b is None else b, kk, i) for kk in range(lo, hi + 1)]
    else:
        raise ValueError(f"unsupported combination family={family}, vary={vary}")
    return all(x <= y for x, y in zip(seq, seq[1:]))
