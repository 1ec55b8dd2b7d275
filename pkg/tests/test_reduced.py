import itertools

import pytest

from redkron.characters import ScaleExceededError, lr_coeff, set_oracle_cap
from redkron.partitions import partitions_of
from redkron.reduced import (evaluation_point, kron_at, reduced_kron, stab,
                             stability_threshold, stabilization_sequence)


def teardown_module(module):
    set_oracle_cap(None)


def test_stab_examples():
    assert stab((1,), (1,)) == 4
    assert stab((), ()) == 0
    assert stab((2, 2), (2, 2)) == 12


def test_stability_threshold():
    assert stability_threshold((1,), (1,), (1,)) == 4
    assert stability_threshold((), (), ()) == 0
    # min(12, 10, 10): each pairwise bound is |x|+|y|+x1+y1
    assert stability_threshold((2, 2), (2, 2), (2,)) == 10


def test_reduced_examples():
    assert reduced_kron((1,), (1,), (1,)) == 1
    assert reduced_kron((), (), ()) == 1
    assert reduced_kron((2, 2), (2, 2), (2,)) == 3


def test_pathways_agree():
    cases = [((2, 2), (2, 2), (2,)), ((3,), (3,), (3,)),
             ((2, 1), (2, 1), (1,)), ((2,), (1, 1), (1,))]
    for alpha, beta, gamma in cases:
        assert reduced_kron(alpha, beta, gamma, method="oracle") == \
            reduced_kron(alpha, beta, gamma, method="tableau")


def test_stabilization_sequences():
    seq = stabilization_sequence((1,), (1,), (1,), 3, 8)
    assert len(set(seq[1:])) == 1  # constant from the threshold n=4 on
    seq = stabilization_sequence((1,), (1,), (), 2, 8)
    assert len(set(seq[-3:])) == 1
    seq = stabilization_sequence((), (), (), 0, 5)
    assert seq == [1] * 6
    with pytest.raises(ValueError):
        stabilization_sequence((2, 2), (1,), (1,), 3, 8)  # infeasible padding


def test_constant_from_threshold_small_triples():
    small = [p for m in range(4) for p in partitions_of(m)]
    for alpha, beta, gamma in itertools.product(small[:5], small[:5], small[:5]):
        start = evaluation_point(alpha, beta, gamma)
        seq = [kron_at(alpha, beta, gamma, n) for n in range(start, 13)]
        assert len(set(seq)) <= 1, (alpha, beta, gamma, seq)


def test_littlewood_coincidence():
    # the reduced coefficient collapses to Littlewood-Richardson when the
    # sizes are additive
    for total in range(7):
        for asize in range(total + 1):
            for alpha in partitions_of(asize):
                for beta in partitions_of(total - asize):
                    for gamma in partitions_of(total):
                        assert reduced_kron(alpha, beta, gamma) == \
                            lr_coeff(alpha, beta, gamma), (alpha, beta, gamma)


def test_symmetry_small():
    small = [(), (1,), (2,), (1, 1), (2, 1)]
    for triple in itertools.combinations(small, 3):
        base = reduced_kron(*triple)
        for perm in itertools.permutations(triple):
            assert reduced_kron(*perm) == base


def test_scale_exceeded_without_two_row_escape():
    set_oracle_cap(5)
    with pytest.raises(ScaleExceededError):
        reduced_kron((2, 2), (2, 2), (2, 2))  # no index has a one-row shape
    # a one-row third index escapes through the tableau rule
    assert reduced_kron((2, 2), (2, 2), (2,)) == 3
    set_oracle_cap(None)
