import itertools

import pytest

from redkron.characters import (ScaleExceededError, character_table,
                                dimension, kronecker_coeff,
                                kronecker_product, lr_coeff, mn_character,
                                set_oracle_cap)
from redkron.partitions import conjugate, partitions_of, z_weight


def teardown_module(module):
    set_oracle_cap(None)


def test_character_examples():
    for rho in partitions_of(5):
        assert mn_character((5,), rho) == 1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((1, 1, 1), (3,)) == 1
    with pytest.raises(ValueError):
        mn_character((2, 1), (4,))


def test_dimension_positive():
    for lam in partitions_of(7):
        assert dimension(lam) > 0


def test_row_orthogonality():
    from fractions import Fraction
    for n in range(1, 9):
        table = character_table(n)
        for lam in table.partitions:
            for mu in table.partitions:
                total = sum(Fraction(table.value(lam, rho) * table.value(mu, rho),
                                     z_weight(rho))
                            for rho in table.partitions)
                assert total == (1 if lam == mu else 0)


def test_column_orthogonality():
    for n in range(1, 11):
        table = character_table(n)
        rows = [table.row(lam) for lam in table.partitions]
        ncls = len(table.partitions)
        for i in range(ncls):
            for j in range(i, ncls):
                total = sum(row[i] * row[j] for row in rows)
                expected = z_weight(table.partitions[i]) if i == j else 0
                assert total == expected


def test_kronecker_examples():
    assert kronecker_coeff((2, 1), (2, 1), (2, 1)) == 1
    assert kronecker_coeff((2,), (1, 1), (1, 1)) == 1
    for lam in partitions_of(5):
        assert kronecker_coeff(lam, lam, (5,)) == 1
    with pytest.raises(ValueError):
        kronecker_coeff((2, 1), (3,), (2, 2))


def test_kronecker_full_s3_symmetry():
    for n in range(1, 9):
        base = {}
        for triple in itertools.combinations_with_replacement(partitions_of(n), 3):
            base[triple] = kronecker_coeff(*triple)
        for triple, value in base.items():
            for perm in itertools.permutations(triple):
                assert kronecker_coeff(*perm) == value


def test_sign_twist():
    for n in range(1, 9):
        sign = (1,) * n
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                expected = 1 if lam == conjugate(mu) else 0
                assert kronecker_coeff(lam, mu, sign) == expected


def test_kronecker_product_examples():
    assert kronecker_product((2, 1), (2, 1)) == {(3,): 1, (2, 1): 1,
                                                 (1, 1, 1): 1}
    assert kronecker_product((1, 1), (2,)) == {(1, 1): 1}
    for lam in partitions_of(4):
        assert kronecker_product((4,), lam) == {lam: 1}


def test_kronecker_product_dimension_identity():
    for n in range(2, 8):
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                expansion = kronecker_product(mu, nu)
                total = sum(g * dimension(lam) for lam, g in expansion.items())
                assert total == dimension(mu) * dimension(nu)


def brute_lr(alpha, beta, gamma):
    # reference: fill cells row by row with explicit loops, then filter
    from itertools import product

    rows = []
    ncells = []
    for r in range(len(gamma)):
        inner = alpha[r] if r < len(alpha) else 0
        ncells.append(gamma[r] - inner)
    if any(c < 0 for c in ncells):
        return 0
    m = len(beta)
    total = 0
    cells = sum(ncells)
    if cells != sum(beta):
        return 0
    for filling in product(range(1, m + 1), repeat=cells):
        idx = 0
        grid = {}
        ok = True
        for r in range(len(gamma)):
            inner = alpha[r] if r < len(alpha) else 0
            for c in range(inner, gamma[r]):
                grid[(r, c)] = filling[idx]
                idx += 1
        counts = [0] * m
        for v in grid.values():
            counts[v - 1] += 1
        if counts != list(beta):
            continue
        for (r, c), v in grid.items():
            if (r, c + 1) in grid and grid[(r, c + 1)] < v:
                ok = False
            if (r + 1, c) in grid and grid[(r + 1, c)] <= v:
                ok = False
        if not ok:
            continue
        word = []
        for r in range(len(gamma)):
            inner = alpha[r] if r < len(alpha) else 0
            word.extend(grid[(r, c)] for c in range(gamma[r] - 1, inner - 1, -1))
        prefix = [0] * (m + 1)
        for v in word:
            prefix[v - 1] += 1
            if any(prefix[i] < prefix[i + 1] for i in range(m - 1)):
                ok = False
                break
        if ok:
            total += 1
    return total


def test_lr_examples():
    assert lr_coeff((2, 1), (), (2, 1)) == 1
    assert lr_coeff((1,), (1, 1), (2, 1)) == 1
    assert lr_coeff((2, 1), (2, 1), (4, 2)) == brute_lr((2, 1), (2, 1), (4, 2)) == 1
    assert lr_coeff((1,), (2, 1), (2, 1, 1)) == brute_lr((1,), (2, 1), (2, 1, 1))
    with pytest.raises(ValueError):
        lr_coeff((2,), (2,), (3,))


def test_lr_matches_brute_force_small():
    for total in range(2, 6):
        for asize in range(total + 1):
            for alpha in partitions_of(asize):
                for beta in partitions_of(total - asize):
                    for gamma in partitions_of(total):
                        assert lr_coeff(alpha, beta, gamma) == \
                            brute_lr(alpha, beta, gamma)


def test_oracle_scale_error():
    set_oracle_cap(6)
    with pytest.raises(ScaleExceededError):
        kronecker_coeff((7,), (7,), (7,))
    set_oracle_cap(None)


def test_oracle_cap_env_var(monkeypatch):
    from redkron.characters import oracle_cap
    monkeypatch.setenv("REDKRON_ORACLE_CAP", "9")
    assert oracle_cap() == 9
    with pytest.raises(ScaleExceededError):
        kronecker_coeff((10,), (10,), (10,))
    set_oracle_cap(30)  # explicit override beats the environment
    assert oracle_cap() == 30
    set_oracle_cap(None)
