import random

import pytest

from weylchars.symbols import (
    BiSymbol,
    SignedCycleType,
    bipartition_to_bisymbol,
    bipartitions,
    shift_beta,
    signed_cycle_types,
)
from weylchars.wnchars import (
    centralizer_order_wn,
    character_table_wn,
    chi_value,
    class_representative,
    expand_once,
    mn_trace_wn,
    oracle_trace_wn,
    sp_cycle_type,
    sp_in_type_d,
    trace_dn,
    wn_elements,
)


def test_trivial_character():
    sym = BiSymbol((4,), ())
    for cls in signed_cycle_types(4):
        assert mn_trace_wn(sym, cls) == 1


def test_flip_counting_character():
    # bottom-only symbol of a full row is the flip-counting character
    for n in (1, 2, 3):
        sym = BiSymbol((), (n,))
        for cls in signed_cycle_types(n):
            assert mn_trace_wn(sym, cls) == chi_value(cls)


def test_chi_value_examples():
    assert chi_value(SignedCycleType((3,), ())) == 1
    assert chi_value(SignedCycleType((), (1, 3))) == 1
    assert chi_value(SignedCycleType((1,), (1,))) == -1


def test_chi_multiplicative():
    a = SignedCycleType((2,), (1,))
    b = SignedCycleType((1,), (3, 3))
    union = SignedCycleType(a.pos + b.pos, a.neg + b.neg)
    assert chi_value(union) == chi_value(a) * chi_value(b)


def test_small_closed_form_values():
    assert mn_trace_wn(BiSymbol((0, 1), (2,)), SignedCycleType((), (2,))) == -1
    assert mn_trace_wn(BiSymbol((1,), (0,)), SignedCycleType((), (1,))) == 1
    assert mn_trace_wn(BiSymbol((0,), (1,)), SignedCycleType((), (1,))) == -1


def test_zero_symbol_and_weight_errors():
    assert mn_trace_wn(BiSymbol((1, 1), (0,)), SignedCycleType((), (2,))) == 0
    with pytest.raises(ValueError):
        mn_trace_wn(BiSymbol((2,), ()), SignedCycleType((), (1,)))


def test_oracle_small_group():
    sym = BiSymbol((1,), (0,))
    for cls in signed_cycle_types(1):
        assert oracle_trace_wn(sym, cls) == 1
    assert oracle_trace_wn(BiSymbol((0,), (1,)), SignedCycleType((), (1,))) == -1


def test_oracle_dimension():
    sym = BiSymbol((1, 2), (2,))
    identity = SignedCycleType((1, 1, 1, 1), ())
    assert oracle_trace_wn(sym, identity) == 6


def test_oracle_bound():
    sym = BiSymbol((5,), ())
    with pytest.raises(ValueError):
        oracle_trace_wn(sym, SignedCycleType((5,), ()))


def test_oracle_equivalence_n3():
    for n in range(4):
        for pair in bipartitions(n):
            sym = bipartition_to_bisymbol(pair)
            for cls in signed_cycle_types(n):
                assert mn_trace_wn(sym, cls) == oracle_trace_wn(sym, cls), (pair, cls)


def test_oracle_equivalence_spot_n4():
    # the exhaustive n=4 sweep lives in the acceptance suite
    sym = bipartition_to_bisymbol(((1,), (1, 2)))
    for cls in [
        SignedCycleType((), (1, 1, 2)),
        SignedCycleType((2,), (1, 1)),
        SignedCycleType((), (4,)),
    ]:
        assert mn_trace_wn(sym, cls) == oracle_trace_wn(sym, cls)


def test_removal_order_independence():
    rng = random.Random(7)
    for n in (2, 3):
        for pair in bipartitions(n):
            sym = bipartition_to_bisymbol(pair)
            for cls in signed_cycle_types(n):
                reference = mn_trace_wn(sym, cls)
                cycles = [(False, k) for k in cls.pos] + [(True, k) for k in cls.neg]
                for _ in range(3):
                    rng.shuffle(cycles)
                    assert mn_trace_wn(sym, cls, order=list(cycles)) == reference


def test_single_step_expansion_matches():
    # removing a negative k-cycle when the remainder has no negative k-cycle
    # and no positive 2k-cycle must reproduce the full value
    for n in (3, 4):
        for pair in bipartitions(n):
            sym = bipartition_to_bisymbol(pair)
            for cls in signed_cycle_types(n):
                for k in set(cls.neg):
                    rest = cls.remove(True, k)
                    if k in rest.neg or 2 * k in rest.pos:
                        continue
                    assert expand_once(sym, cls, True, k) == mn_trace_wn(sym, cls)


def test_simultaneous_row_shift_invariance():
    for pair in bipartitions(3):
        sym = bipartition_to_bisymbol(pair)
        for cls in signed_cycle_types(3):
            value = mn_trace_wn(sym, cls)
            for d in (1, 2):
                shifted = BiSymbol(shift_beta(sym.top, d), shift_beta(sym.bottom, d))
                assert mn_trace_wn(shifted, cls) == value


def test_independent_row_shift_is_harmless():
    # rows encode partitions independently, so padding one row only is fine
    sym = BiSymbol((1,), (0,))
    padded = BiSymbol(shift_beta((1,), 2), (0,))
    for cls in signed_cycle_types(1):
        assert mn_trace_wn(sym, cls) == mn_trace_wn(padded, cls)


def test_trace_dn_values_and_errors():
    sym = BiSymbol((0, 1), (2, 3))
    identity = SignedCycleType((1, 1, 1, 1), ())
    assert trace_dn(sym, identity) == mn_trace_wn(sym, identity)
    in_d = SignedCycleType((), (1, 3))
    assert trace_dn(sym, in_d) == mn_trace_wn(sym, in_d)
    with pytest.raises(ValueError):
        trace_dn(BiSymbol((0, 1), (1, 0)), identity)  # rows equal as sets
    with pytest.raises(ValueError):
        trace_dn(sym, SignedCycleType((1,), (3,)))  # one negative cycle


def test_type_d_membership_matches_flips():
    for w in wn_elements(3):
        flips = sum(1 for v in w if v < 0)
        assert sp_in_type_d(w) == (flips % 2 == 0)
        assert sp_cycle_type(w).in_type_d == (flips % 2 == 0)


def test_class_representative_roundtrip():
    for cls in signed_cycle_types(4):
        assert sp_cycle_type(class_representative(cls)) == cls


def test_centralizers_weight_to_group_order():
    from fractions import Fraction
    from math import factorial

    for n in range(1, 5):
        order = 2**n * factorial(n)
        total = sum(
            Fraction(order, centralizer_order_wn(c)) for c in signed_cycle_types(n)
        )
        assert total == order


def test_table_w1():
    table = character_table_wn(1)
    assert len(table.row_labels) == 2
    neg = SignedCycleType((), (1,))
    pos = SignedCycleType((1,), ())
    trivial = BiSymbol((1,), ())
    flip = BiSymbol((), (1,))
    assert table.value(trivial, pos) == 1 and table.value(trivial, neg) == 1
    assert table.value(flip, pos) == 1 and table.value(flip, neg) == -1


def test_table_w2_closed_form_entry():
    table = character_table_wn(2)
    assert len(table.row_labels) == 5
    sym = BiSymbol((0, 1), (2,)).reduced()
    assert table.value(sym, SignedCycleType((), (2,))) == -1


def test_table_orthogonality_and_dimensions():
    for n in range(1, 5):
        table = character_table_wn(n)
        assert table.is_orthogonal()
        identity = SignedCycleType(tuple([1] * n), ())
        for sym in table.row_labels:
            assert table.value(sym, identity) >= 1


def test_table_bound():
    with pytest.raises(ValueError):
        character_table_wn(7)
