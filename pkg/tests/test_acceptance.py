"""Acceptance gate: one test per criterion, exact tolerances throughout.

Each test drives the corresponding verify-suite criterion and prints a
single pass/fail line (visible with ``pytest -s`` or on failure).
"""

import time

import pytest

from redkron.verify import run_criterion

DESCRIPTIONS = {
    1: "family-1 grid reproduction via the series pathway",
    2: "family-2 grid reproduction including the zero-prefix rule",
    3: "family-3 grid reproduction with stable diagonals",
    4: "square-case values recomputed purely by the character oracle",
    5: "two-row tableau rule equals the character oracle (n <= 10)",
    6: "box enumeration histograms equal the box generating functions",
    7: "bijection certification and worked-example tableaux",
    8: "quasipolynomial extraction, periods, and degree formulas",
    9: "floor transform links the box series to the diagonal series",
    10: "stretched positivity and grid monotonicity",
    11: "padded coefficients constant from the stability threshold",
}


def _run(number):
    start = time.monotonic()
    checks = run_criterion(number)
    elapsed = time.monotonic() - start
    failures = [c for c in checks if not c.passed]
    status = "FAIL" if failures else "PASS"
    print(f"[acceptance] criterion {number:2d}: {status} "
          f"({len(checks)} checks, {elapsed:.1f} s) -- {DESCRIPTIONS[number]}")
    for c in failures:
        print(f"  failed: {c.description}")
        print(f"    expected: {c.expected!r}")
        print(f"    actual:   {c.actual!r}")
    assert not failures


@pytest.mark.parametrize("number", sorted(DESCRIPTIONS))
def test_criterion(number):
    _run(number)
