"""Cross-pathway verification suites.

Each criterion recomputes a slice of the reference data through the
pathway under test and reports exact comparisons.  The suite runner may
parallelize independent criteria; the report always lists checks in
declaration order.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import refdata
from .characters import kronecker_coeff
from .families import (alphabet_B, alphabet_C, bij_family1, bij_family3,
                       diag_stable, enumerate_coloured, family1, family2,
                       family3, inv_bij_family3, monotonicity_check,
                       parse_coloured_partition, saturation_check)
from .partitions import partitions_of
from .planepart import (box_series, enumerate_pp, lemma2_transform,
                        macmahon_series, pp_weight)
from .reduced import evaluation_point, kron_at, reduced_kron
from .series import (f_exponents, f_series, family_quasipoly, g_exponents,
                     g_series, h_series, lcm_upto, minimal_period,
                     numerator_polynomial, poly_trim, quasipoly_eval)
from .tableaux import is_kronecker_tableau, two_row_multiplicity


@dataclass(frozen=True)
class Check:
    description: str
    expected: object
    actual: object

    @property
    def passed(self):
        return self.expected == self.actual


@dataclass
class RunReport:
    suite: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def criterion_1():
    """Family-1 grid via the series pathway."""
    checks = []
    for a, row in refdata.FAMILY1_GRID.items():
        got = tuple(family1(a, a, k) for k in range(len(row)))
        checks.append(Check(f"family-1 grid row a={a}", row, got))
    return checks


def criterion_2():
    """Family-2 grid (a=2) including the zero-prefix rule k < 3i."""
    checks = []
    for i, row in refdata.FAMILY2_GRID.items():
        got = tuple(family2(2, 2, k, i) for k in range(len(row)))
        checks.append(Check(f"family-2 grid row i={i}", row, got))
        nz = next((k for k, v in enumerate(got) if v), None)
        checks.append(Check(f"family-2 zero prefix i={i}", 3 * i, nz))
    return checks


def criterion_3():
    """Family-3 grid (a=2, b=3) via the reduced-coefficient pathways,
    with the stable diagonal matched against the diagonal series."""
    checks = [Check("family-3 stable diagonal series",
                    refdata.DIAG_STABLE_A2,
                    tuple(diag_stable(2, j) for j in range(6)))]
    for i, row in refdata.FAMILY3_GRID.items():
        got = tuple(family3(2, 3, k, i) for k in range(len(row)))
        checks.append(Check(f"family-3 grid row i={i}", row, got))
        bold_cells = [k for k in range(len(row)) if i <= k <= 2 * i]
        expected = tuple(diag_stable(2, k - i) for k in bold_cells)
        actual = tuple(got[k] for k in bold_cells)
        checks.append(Check(f"family-3 stable diagonal cells i={i}", expected, actual))
    return checks


def criterion_4():
    """Square-case values recomputed purely by the character oracle at
    the stability threshold."""
    checks = []
    for a in (1, 2):
        for k in range(4):
            got = reduced_kron((k,) * a, (k,) * a, (k,), method="oracle")
            checks.append(Check(f"oracle square case a={a} k={k}",
                                refdata.FAMILY1_GRID[a][k], got))
    return checks


def criterion_5():
    """Two-row tableau rule equals the character oracle for n <= 10."""
    checks = []
    for n in range(2, 11):
        parts = list(partitions_of(n))
        for p in (1, 2, 3):
            if n < 2 * p:
                continue
            mismatches = []
            pairs = 0
            for lam in parts:
                if lam[0] < 2 * p - 1 and len(lam) < 2 * p - 1:
                    continue
                for nu in parts:
                    pairs += 1
                    t = two_row_multiplicity(n, p, lam, nu)
                    g = kronecker_coeff((n - p, p), lam, nu)
                    if t != g:
                        mismatches.append((lam, nu, t, g))
            checks.append(Check(
                f"two-row rule vs oracle n={n} p={p} ({pairs} pairs)",
                [], mismatches))
    return checks


def criterion_6():
    """Weight histograms of box enumeration match the box series, and the
    bounded/unbounded series agree below the entry bound."""
    checks = []
    for r in range(1, 5):
        mismatches = []
        for s in range(1, 5):
            for t in range(1, 5):
                hist = [0] * (r * s * t + 1)
                for pp in enumerate_pp(r, s, t):
                    hist[pp_weight(pp)] += 1
                series = macmahon_series(r, s, t, r * s * t)
                if hist != series:
                    mismatches.append((r, s, t))
        checks.append(Check(f"box histogram vs series r={r}, s,t<=4", [], mismatches))
    mismatches = [(r, s) for r in range(1, 5) for s in range(1, 5)
                  if box_series(r, s, 20) != macmahon_series(r, s, 20, 20)]
    checks.append(Check("unbounded box vs entry bound t=20, r,s<=4", [], mismatches))
    checks.append(Check("2x2 box series prefix",
                        refdata.FAMILY1_GRID[2],
                        tuple(box_series(2, 2, 12))))
    return checks


def _family1_images(a, k):
    lam = tuple(x for x in (3 * k,) + (k,) * a if x)
    images = set()
    for beta in enumerate_coloured(alphabet_B(a), k):
        t = bij_family1(beta, a)
        if k and not is_kronecker_tableau(t, lam, lam, t.inner):
            return None
        images.add(t)
    return images


def _family3_images(a, j, k):
    lam = tuple(x for x in (3 * k,) + (k,) * a if x)
    nu = tuple(x for x in (2 * k + j, 2 * k - j) + (k,) * (a - 1) if x)
    images = set()
    for beta in enumerate_coloured(alphabet_C(a), j):
        t = bij_family3(beta, a, k)
        if k and not is_kronecker_tableau(t, lam, nu, t.inner):
            return None
        if inv_bij_family3(t, a, k) != beta:
            return None
        images.add(t)
    return images


def criterion_7():
    """Bijection certification: validity, injectivity, count equality,
    round trip, and the two worked-example tableaux."""
    checks = []
    for a in (1, 2, 3):
        counts = []
        expected = []
        for k in range(9):
            images = _family1_images(a, k)
            counts.append(-1 if images is None else len(images))
            expected.append(family1(a, a, k))
        checks.append(Check(f"family-1 bijection image counts a={a} k<=8",
                            tuple(expected), tuple(counts)))
    for a in (2, 3):
        counts = []
        expected = []
        for j in range(5):
            images = _family3_images(a, j, 2 * j)
            counts.append(-1 if images is None else len(images))
            expected.append(diag_stable(a, j))
        checks.append(Check(f"family-3 bijection image counts a={a} j<=4 k=2j",
                            tuple(expected), tuple(counts)))
    t1 = bij_family1(parse_coloured_partition("2,1~"), 3)
    checks.append(Check(
        "family-1 worked example (alpha=(2,1), shape (9,3,3,3))",
        ((9, 3, 3, 3), (2, 1),
         ((1, 1, 1, 1, 1, 1, 2), (1, 2), (3, 3, 3), (4, 4, 4))),
        (t1.outer, t1.inner, t1.rows)))
    t3 = bij_family3(parse_coloured_partition("2~~,1"), 3, 7)
    checks.append(Check(
        "family-3 worked example (a=3, j=3, k=7)",
        ((21, 7, 7, 7), (5, 1, 1),
         ((1,) * 11 + (2, 2, 2, 2, 4), (1, 2, 2, 2, 2, 2),
          (3, 3, 3, 3, 3, 3), (2, 4, 4, 4, 4, 4, 4))),
        (t3.outer, t3.inner, t3.rows)))
    return checks


def criterion_8():
    """Quasipolynomial extraction: numerator factorization, published
    residue coefficients, series agreement, periods, degree formulas."""
    checks = []
    _, cyc = numerator_polynomial(f_exponents(2), 6, 4)
    checks.append(Check("a=2 family-1 numerator cyclotomic exponents",
                        refdata.NUMERATOR1_A2_CYCLOTOMIC, cyc))
    qp1 = family_quasipoly(1, 2)
    checks.append(Check("a=2 family-1 residue polynomials",
                        refdata.QUASI1_A2, qp1.residue_polys))
    qp3 = family_quasipoly(3, 2)
    checks.append(Check("a=2 family-3 residue polynomials",
                        refdata.QUASI3_A2, qp3.residue_polys))
    for a in (1, 2, 3, 4):
        qp = family_quasipoly(1, a)
        series = f_series(a, 200)
        bad = [n for n in range(201) if quasipoly_eval(qp, n) != series[n]]
        checks.append(Check(f"family-1 quasipolynomial vs series a={a} n<=200",
                            [], bad))
        checks.append(Check(f"family-1 quasipolynomial degree a={a}",
                            2 * a - 1, qp.degree))
    for a in (1, 2, 3):
        qp = family_quasipoly(3, a)
        series = g_series(a, 200)
        bad = [n for n in range(201) if quasipoly_eval(qp, n) != series[n]]
        checks.append(Check(f"family-3 quasipolynomial vs series a={a} n<=200",
                            [], bad))
        checks.append(Check(f"family-3 quasipolynomial degree a={a}",
                            3 * a - 2, qp.degree))
    checks.append(Check("a=2 family-1 minimal period", 6,
                        minimal_period(family_quasipoly(1, 2))))
    checks.append(Check("a=2 family-3 minimal period", 6,
                        minimal_period(family_quasipoly(3, 2))))
    for a in (1, 2, 3, 4):
        ell = lcm_upto(a + 1)
        p, _ = numerator_polynomial(f_exponents(a), ell, 2 * a)
        checks.append(Check(f"family-1 numerator degree a={a}",
                            2 * a * ell - (a + 2) * a, len(poly_trim(p)) - 1))
        q, _ = numerator_polynomial(g_exponents(a), ell, 3 * a - 1)
        checks.append(Check(f"family-3 numerator degree a={a}",
                            ell * (3 * a - 1) - 3 * (a * a + a) // 2,
                            len(poly_trim(q)) - 1))
    return checks


def criterion_9():
    """The floor-transform sends the 3 x (a-1) box series to the diagonal
    series, and the four-term recursion inverts it."""
    checks = []
    for a in (2, 3, 4, 5):
        h = h_series(a, 100)
        g = g_series(a, 100)
        checks.append(Check(f"floor transform of box series a={a}",
                            tuple(g), tuple(lemma2_transform(h))))
        rec = [g[0], g[1] - g[0], g[2] - g[1] - g[0]]
        rec += [g[n] - g[n - 1] - g[n - 2] + g[n - 3] for n in range(3, 101)]
        checks.append(Check(f"inverse recursion a={a}", tuple(h), tuple(rec)))
    return checks


def criterion_10():
    """Stretched positivity and grid monotonicity."""
    checks = []
    bad = [(a, k) for a in range(1, 5) for k in range(6)
           if not saturation_check(1, 10, a=a, k=k)]
    checks.append(Check("family-1 stretched positivity a<=4 k<=5 s<=10", [], bad))
    bad = [(a, j) for a in range(1, 4) for j in range(5)
           if not saturation_check(3, 10, a=a, j=j)]
    checks.append(Check("family-3 diagonal stretched positivity a<=3 j<=4 s<=10",
                        [], bad))
    bad = [a for a in range(1, 6) if not monotonicity_check(1, "k", 0, 12, a=a)]
    checks.append(Check("family-1 grid rows weakly increasing a=1..5", [], bad))
    bad = [k for k in range(13) if not monotonicity_check(1, "a", 0, 5, k=k)]
    checks.append(Check("family-1 grid columns weakly increasing k=0..12", [], bad))
    return checks


def criterion_11():
    """Padded Kronecker coefficients are constant from the stability
    threshold up to n=14 for 50 seeded random triples of size <= 3."""
    small = [p for m in range(4) for p in partitions_of(m)]
    rng = random.Random(0)
    triples = [tuple(rng.choice(small) for _ in range(3)) for _ in range(50)]
    not_constant = []
    for alpha, beta, gamma in triples:
        start = evaluation_point(alpha, beta, gamma)
        seq = [kron_at(alpha, beta, gamma, n, method="oracle")
               for n in range(start, 15)]
        if len(set(seq)) > 1:
            not_constant.append((alpha, beta, gamma, seq))
    return [Check("stabilization of 50 random triples (threshold..14)",
                  [], not_constant)]


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
    9: criterion_9, 10: criterion_10, 11: criterion_11,
}

SUITES = {
    "tables": (1, 2, 3),
    "oracle": (4, 5, 11),
    "bijections": (7,),
    "planepartitions": (6, 9),
    "quasipoly": (8,),
    "saturation": (10,),
    "all": tuple(range(1, 12)),
}


def run_criterion(number):
    return CRITERIA[number]()


def run_suite(name, threads=1):
    """Execute the named suite; check order follows declaration order
    regardless of scheduling."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    numbers = SUITES[name]
    start = time.monotonic()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_criterion, numbers))
    else:
        results = [run_criterion(n) for n in numbers]
    checks = [c for chunk in results for c in chunk]
    return RunReport(name, checks, time.monotonic() - start)


def report_lines(report):
    lines = []
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        line = f"[{mark}] {c.description}"
        if not c.passed:
            line += f"\n       expected: {c.expected!r}\n       actual:   {c.actual!r}"
        lines.append(line)
    n_pass = sum(1 for c in report.checks if c.passed)
    lines.append(f"suite {report.suite}: {n_pass}/{len(report.checks)} checks passed "
                 f"in {report.elapsed:.2f} s")
    return lines
