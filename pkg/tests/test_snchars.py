import itertools
import random
from fractions import Fraction

import pytest

from weylchars.snchars import (
    centralizer_order_sn,
    character_table_sn,
    mn_trace_sn,
    oracle_trace_sn,
    young_perm_char,
)
from weylchars.symbols import partition_to_beta, partitions, shift_beta


def test_trivial_and_sign_characters():
    assert mn_trace_sn((3,), (3,)) == 1
    assert mn_trace_sn((1, 2, 3), (1, 2)) == -1
    for cls in partitions(4):
        assert mn_trace_sn((4,), cls) == 1


def test_standard_examples():
    # frozen from oracle_trace_sn
    assert oracle_trace_sn((1, 3), (1, 1, 1)) == 2
    assert mn_trace_sn((1, 3), (1, 1, 1)) == 2
    assert mn_trace_sn((1, 3), (3,)) == -1


def test_zero_symbol():
    for cls in [(2,), (1, 1)]:
        assert mn_trace_sn((1, 1), cls) == 0
        assert oracle_trace_sn((1, 1), cls) == 0


def test_weight_mismatch_raises():
    with pytest.raises(ValueError):
        mn_trace_sn((1, 3), (2,))
    with pytest.raises(ValueError):
        oracle_trace_sn((1, 3), (1, 1))


def test_young_perm_char_examples():
    assert young_perm_char((2, 2), (1, 1, 1, 1)) == 6
    assert young_perm_char((2, 2), (2, 2)) == 2
    for cls in partitions(5):
        assert young_perm_char((5,), cls) == 1


def test_young_perm_char_zero_blocks():
    assert young_perm_char((3, 0), (1, 2)) == 1
    assert young_perm_char((0, 0), ()) == 1
    with pytest.raises(ValueError):
        young_perm_char((2, 1), (2, 2))


def test_oracle_trivialities():
    for cls in partitions(6):
        assert oracle_trace_sn((6,), cls) == 1
    assert oracle_trace_sn((0, 1, 2), ()) == 1
    assert oracle_trace_sn((), ()) == 1


def test_oracle_equivalence_small():
    for n in range(6):
        for p in partitions(n):
            beta = partition_to_beta(p)
            for cls in partitions(n):
                assert mn_trace_sn(beta, cls) == oracle_trace_sn(beta, cls), (p, cls)


def test_removal_order_independence():
    rng = random.Random(99)
    for n in (4, 5, 6):
        for p in partitions(n):
            beta = partition_to_beta(p)
            for cls in partitions(n):
                reference = mn_trace_sn(beta, cls)
                for _ in range(3):
                    order = list(cls)
                    rng.shuffle(order)
                    assert mn_trace_sn(beta, cls, order=order) == reference


def test_shift_invariance():
    for p in partitions(5):
        beta = partition_to_beta(p)
        for cls in partitions(5):
            value = mn_trace_sn(beta, cls)
            for d in (1, 2, 3):
                assert mn_trace_sn(shift_beta(beta, d), cls) == value


def test_linearity_under_permutation():
    beta = (0, 2, 5)
    from weylchars.symbols import perm_sign

    for cls in partitions(4):
        reference = mn_trace_sn(beta, cls)
        for perm in itertools.permutations(range(3)):
            shuffled = tuple(beta[i] for i in perm)
            assert mn_trace_sn(shuffled, cls) == perm_sign(perm) * reference


def test_centralizer_orders():
    assert centralizer_order_sn((1, 1, 1)) == 6
    assert centralizer_order_sn((3,)) == 3
    assert centralizer_order_sn((1, 2)) == 2
    # centralizer orders weight the classes back to the group order
    for n in range(1, 7):
        import math

        total = sum(
            Fraction(math.factorial(n), centralizer_order_sn(c))
            for c in partitions(n)
        )
        assert total == math.factorial(n)


def test_table_small():
    table = character_table_sn(1)
    assert table.entries == ((1,),)
    table = character_table_sn(3)
    assert table.row((1, 3)) == (2, 0, -1)
    assert table.col_labels == ((1, 1, 1), (1, 2), (3,))
    table = character_table_sn(4)
    assert table.value((2, 3), (1, 1, 1, 1)) == 2  # partition (2,2)


def test_table_orthogonality():
    for n in range(1, 7):
        assert character_table_sn(n).is_orthogonal()


def test_identity_column_is_dimension():
    for n in range(1, 7):
        table = character_table_sn(n)
        identity = tuple([1] * n)
        for beta in table.row_labels:
            assert table.value(beta, identity) >= 1


def test_table_bound():
    with pytest.raises(ValueError):
        character_table_sn(9)
