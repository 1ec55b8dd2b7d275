import itertools

import pytest

from redkron.families import (ColouredPart, alphabet_B, alphabet_C,
                              bij_family1, bij_family2, bij_family3,
                              canonical_coloured, coloured_weight,
                              diag_stable, enumerate_coloured, family1,
                              family2, family3, format_coloured_partition,
                              inv_bij_family3, monotonicity_check,
                              parse_coloured_partition, saturation_check)
from redkron.planepart import family3_convolution
from redkron.reduced import reduced_kron
from redkron.tableaux import KroneckerTableau, is_kronecker_tableau


def test_alphabets():
    assert [str(p) for p in alphabet_B(1)] == ["1~", "2~"]
    assert [str(p) for p in alphabet_B(2)] == ["1~", "2", "2~", "3~"]
    assert [str(p) for p in alphabet_C(2)] == ["1", "1~", "2", "2~", "3"]
    assert [str(p) for p in alphabet_C(3)] == ["1", "1~", "2", "2~", "2~~",
                                               "3", "3~", "4"]
    for a in range(1, 7):
        assert len(alphabet_B(a)) == 2 * a
    for a in range(2, 7):
        assert len(alphabet_C(a)) == 3 * a - 1
    with pytest.raises(ValueError):
        alphabet_C(1)


def test_coloured_text_roundtrip():
    beta = parse_coloured_partition("2~~ 1")
    assert beta == (ColouredPart(2, 2), ColouredPart(1, 0))
    assert format_coloured_partition(beta) == "2~~,1"
    assert parse_coloured_partition("") == ()
    assert coloured_weight(beta) == 3
    assert canonical_coloured([ColouredPart(2, 1), ColouredPart(2, 0)]) == \
        (ColouredPart(2, 0), ColouredPart(2, 1))


def test_enumerate_coloured_counts():
    assert list(enumerate_coloured(alphabet_B(2), 0)) == [()]
    assert len(list(enumerate_coloured(alphabet_B(2), 4))) == 7
    assert len(list(enumerate_coloured(alphabet_C(2), 2))) == 5
    # deterministic order
    first = list(enumerate_coloured(alphabet_B(3), 5))
    assert first == list(enumerate_coloured(alphabet_B(3), 5))
    assert len(set(first)) == len(first)


def test_coloured_multiset_counts_match_series():
    for a in (1, 2, 3):
        for k in range(11):
            count = sum(1 for _ in enumerate_coloured(alphabet_B(a), k))
            assert count == family1(a, a, k), (a, k)
    for a in (2, 3):
        for j in range(9):
            count = sum(1 for _ in enumerate_coloured(alphabet_C(a), j))
            assert count == diag_stable(a, j), (a, j)


def test_family1_values():
    assert family1(2, 2, 4) == 7
    assert family1(5, 5, 12) == 312
    assert family1(3, 3, 0) == 1
    assert family1(0, 0, 3) == 0
    assert family1(0, 0, 0) == 1


def test_family1_fast_path_matches_reduced_pathway():
    for a in (1, 2):
        for k in range(5):
            assert family1(a, a, k) == \
                reduced_kron((k,) * a, (k,) * a, (k,)), (a, k)


def test_family2_values():
    assert family2(2, 2, 5, 1) == 3
    assert family2(2, 2, 5, 2) == 0
    for k in range(17):
        assert family2(2, 2, k, 0) == family1(2, 2, k)


def test_family2_zero_threshold():
    for a in (1, 2, 3):
        d = a * (a + 1) // 2
        for i in (1, 2, 3):
            for k in range(21):
                value = family2(a, a, k, i)
                assert (value == 0) == (k < d * i), (a, i, k, value)


def test_family3_values():
    assert family3(2, 3, 3, 1) == 4
    assert family3(2, 3, 10, 5) == 25
    assert family3(2, 3, 2, 0) == 3
    # zero cells above the first diagonal
    assert family3(2, 3, 1, 3) == 0


def test_diag_stable_values():
    assert diag_stable(2, 0) == 1
    assert diag_stable(2, 3) == 9
    assert diag_stable(2, 5) == 25
    assert [diag_stable(2, j) for j in range(6)] == [1, 2, 5, 9, 16, 25]


def test_diag_stability_in_k():
    for a in (1, 2):
        for j in range(4):
            values = {family3(a, a + 1, k, k - j)
                      for k in range(2 * j, 2 * j + 5)}
            assert values == {diag_stable(a, j)}, (a, j, values)


def test_diag_matches_convolution():
    for a in (2, 3):
        for j in range(9):
            assert diag_stable(a, j) == family3_convolution(a, j)


def test_off_square_values_are_boolean():
    for a, b in itertools.product(range(4), repeat=2):
        if a == b:
            continue
        for k in range(7):
            assert family1(a, b, k) in (0, 1), (a, b, k)
    for a, b in itertools.product(range(1, 4), repeat=2):
        if b == a + 1:
            continue
        for k in range(7):
            for i in (0, 1):
                assert family3(a, b, k, i) in (0, 1), (a, b, k, i)
    for a in (1, 2):
        for b in (1, 2, 3):
            if a == b:
                continue
            for k in range(6):
                assert family2(a, b, k, 1) in (0, 1), (a, b, k)


# --- bijections ---

def test_bij_family1_worked_example():
    t = bij_family1(parse_coloured_partition("2,1~"), 3)
    assert t.outer == (9, 3, 3, 3)
    assert t.inner == (2, 1)
    assert t.rows == ((1, 1, 1, 1, 1, 1, 2), (1, 2), (3, 3, 3), (4, 4, 4))
    assert is_kronecker_tableau(t, (9, 3, 3, 3), (9, 3, 3, 3), (2, 1))


def test_bij_family1_empty():
    t = bij_family1((), 2)
    assert t == KroneckerTableau((), (), ())


def test_bij_family1_counts():
    for a in (1, 2, 3):
        for k in range(7):
            lam = tuple(x for x in (3 * k,) + (k,) * a if x)
            images = set()
            for beta in enumerate_coloured(alphabet_B(a), k):
                t = bij_family1(beta, a)
                if k:
                    assert is_kronecker_tableau(t, lam, lam, t.inner), (a, beta)
                images.add(t)
            assert len(images) == family1(a, a, k)


def test_bij_family1_rejects_foreign_parts():
    with pytest.raises(ValueError):
        bij_family1((ColouredPart(1, 0),), 2)  # plain 1 is not in this alphabet


def test_bij_family2_worked_example():
    t = bij_family2(parse_coloured_partition("4~,2~"), 3, 1)
    assert t.outer == (36, 12, 12, 12)
    assert t.inner == (5, 4, 2, 1)
    assert t.type_partition() == (33, 13, 13, 13)
    assert t.rows[0] == (1,) * 27 + (2, 3, 3, 4)
    assert t.rows[1] == (2,) * 8
    assert t.rows[2] == (1,) + (3,) * 9
    assert t.rows[3] == (4,) * 11
    assert is_kronecker_tableau(t, (36, 12, 12, 12), (33, 13, 13, 13),
                                (5, 4, 2, 1))


def test_bij_family2_zero_shift_matches_family1():
    for a in (1, 2, 3):
        for beta in enumerate_coloured(alphabet_B(a), 4):
            assert bij_family2(beta, a, 0) == bij_family1(beta, a)


def test_bij_family2_image_count():
    for k in range(5):
        images = set()
        for beta in enumerate_coloured(alphabet_B(2), k):
            t = bij_family2(beta, 2, 1)
            if sum(t.outer):
                assert is_kronecker_tableau(t, t.outer, t.type_partition(),
                                            t.inner), beta
            images.add(t)
        assert len(images) == family1(2, 2, k)


def test_bij_family3_worked_example():
    t = bij_family3(parse_coloured_partition("2~~,1"), 3, 7)
    assert t.outer == (21, 7, 7, 7)
    assert t.inner == (5, 1, 1)
    assert t.rows == ((1,) * 11 + (2, 2, 2, 2, 4), (1, 2, 2, 2, 2, 2),
                      (3, 3, 3, 3, 3, 3), (2, 4, 4, 4, 4, 4, 4))
    assert is_kronecker_tableau(t, (21, 7, 7, 7), (17, 11, 7, 7), (5, 1, 1))
    assert inv_bij_family3(t, 3, 7) == parse_coloured_partition("2~~,1")


def test_bij_family3_empty_weight():
    # weight 0 still pads alpha with filler columns
    t = bij_family3((), 2, 3)
    assert t.outer == (9, 3, 3)
    assert t.inner == (3,)
    assert is_kronecker_tableau(t, (9, 3, 3), (6, 6, 3), (3,))
    assert inv_bij_family3(t, 2, 3) == ()


def test_bij_family3_requires_room():
    with pytest.raises(ValueError):
        bij_family3(parse_coloured_partition("1"), 2, 1)  # k < 2j


def test_bij_family3_roundtrip_exhaustive():
    for a in (2, 3):
        for j in range(4):
            for k in (2 * j, 2 * j + 1):
                for beta in enumerate_coloured(alphabet_C(a), j):
                    t = bij_family3(beta, a, k)
                    assert inv_bij_family3(t, a, k) == beta


def test_inv_bij_rejects_foreign_columns():
    t = bij_family3(parse_coloured_partition("1"), 2, 2)
    rows = [list(r) for r in t.rows]
    assert rows[-1][0] == 3
    rows[-1][0] = 2  # now column 0 reads (1, 2): outside the catalogue
    broken = KroneckerTableau(t.outer, t.inner, tuple(tuple(r) for r in rows))
    with pytest.raises(ValueError):
        inv_bij_family3(broken, 2, 2)
    with pytest.raises(ValueError):
        inv_bij_family3(t, 2, 3)  # wrong declared weight


# --- saturation and monotonicity ---

def test_saturation_examples():
    assert saturation_check(1, 10, a=2, k=3)
    assert saturation_check(1, 10, a=2, k=0)
    assert saturation_check(2, 10, a=2, k=2, i=1)
    assert saturation_check(3, 10, a=2, j=2)
    with pytest.raises(ValueError):
        saturation_check(4, 10, a=2, k=1)


def test_monotonicity_examples():
    assert monotonicity_check(1, "k", 0, 12, a=3)
    assert monotonicity_check(1, "a", 0, 5, k=6)
    assert monotonicity_check(2, "k", 0, 16, a=2, i=1)
    assert monotonicity_check(3, "k", 0, 10, a=2, i=2)
    with pytest.raises(ValueError):
        monotonicity_check(2, "a", 0, 3, k=2, i=1)  # not a claimed direction
