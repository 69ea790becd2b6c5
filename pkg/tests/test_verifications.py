import itertools
from fractions import Fraction

import pytest

from weylchars.report import CheckRecord, all_passed, render_report, run_check
from weylchars.symbols import BiSymbol, SignedCycleType
from weylchars.verifications import (
    bc_splits,
    check_lemma26,
    check_lemma27,
    check_lemma29,
    check_lemma210,
    check_lemma217,
    check_prop211,
    check_prop212,
    count_even,
    d_splits,
    even_negative_cycles,
    induced_linear_trace_w4,
    multiplicity_bc,
    multiplicity_d,
    multiplicity_sum_bc,
    multiplicity_sum_d,
    odd_negative_cycles,
    pair_sum_free,
    split_admissible_bc,
    split_admissible_d,
    underlying_order,
)
from weylchars.wnchars import mn_trace_wn


def test_distinguished_classes():
    assert even_negative_cycles(1) == SignedCycleType((), (2,))
    assert even_negative_cycles(0) == SignedCycleType((), ())
    assert even_negative_cycles(3) == SignedCycleType((), (2, 4, 6))
    assert even_negative_cycles(3).weight == 12
    assert odd_negative_cycles(1) == SignedCycleType((), (1,))
    assert odd_negative_cycles(2) == SignedCycleType((), (1, 3))
    assert odd_negative_cycles(2).in_type_d
    assert not odd_negative_cycles(3).in_type_d
    for m in range(6):
        assert even_negative_cycles(m).weight == m * m + m
    for m in range(1, 6):
        assert odd_negative_cycles(m).weight == m * m


def test_admissibility_examples():
    assert split_admissible_bc((0, 1), (2,), 1)
    assert not split_admissible_bc((0, 2), (1,), 1)
    assert split_admissible_d((1,), (0,), 1)  # single entries: vacuous
    assert pair_sum_free((0, 1, 4), 4) is False
    assert pair_sum_free((0, 1, 4), 10) is True


def test_split_enumeration_sizes():
    from math import comb

    for m in range(6):
        assert sum(1 for _ in bc_splits(m)) == comb(2 * m + 1, m)
    for m in range(1, 6):
        assert sum(1 for _ in d_splits(m)) == comb(2 * m, m)


def test_admissible_split_count_is_power_of_two():
    for m in range(6):
        count = sum(
            1 for top, bottom in bc_splits(m) if split_admissible_bc(top, bottom, m)
        )
        assert count == 2**m
    for m in range(1, 6):
        count = sum(
            1 for top, bottom in d_splits(m) if split_admissible_d(top, bottom, m)
        )
        assert count == 2**m


def test_lemma26_m1_values():
    cls = even_negative_cycles(1)
    values = {
        bottom: mn_trace_wn(BiSymbol(top, bottom), cls)
        for top, bottom in bc_splits(1)
    }
    assert values == {(0,): -1, (1,): 0, (2,): -1}


def test_lemma26_m0():
    record = check_lemma26(0)
    assert record.ok
    assert mn_trace_wn(BiSymbol((0,), ()), SignedCycleType((), ())) == 1


def test_lemma_checks_pass_small():
    for m in range(4):
        assert check_lemma26(m).ok
        assert check_lemma27(m).ok
    for m in range(1, 4):
        assert check_lemma29(m).ok
    assert check_lemma210(1).ok


def test_lemma_bounds():
    with pytest.raises(ValueError):
        check_lemma26(7)
    with pytest.raises(ValueError):
        check_lemma210(0)


def test_multiplicity_bc_hand_expansion_m1():
    # three bottom choices: {0} and {2} contribute +1 each, {1} vanishes
    cls = even_negative_cycles(1)
    contributions = {}
    for top, bottom in bc_splits(1):
        sign = (-1) ** count_even(bottom)
        contributions[bottom] = sign * mn_trace_wn(BiSymbol(top, bottom), cls)
    assert contributions == {(0,): 1, (1,): 0, (2,): 1}
    assert multiplicity_sum_bc(1) == 2
    assert multiplicity_bc(1) == 1


def test_multiplicity_values():
    assert multiplicity_bc(1) == Fraction(1)
    assert multiplicity_bc(2) == 1
    assert multiplicity_d(2) == 1


def test_multiplicity_divisibility():
    for m in (1, 2, 3):
        assert multiplicity_sum_bc(m) % 2**m == 0
    assert multiplicity_sum_d(2) % 4 == 0


def test_multiplicity_d_preconditions():
    with pytest.raises(ValueError):
        multiplicity_d(3)
    with pytest.raises(ValueError):
        multiplicity_d(0)
    with pytest.raises(ValueError):
        check_prop212(3)


def test_only_admissible_splits_contribute():
    for m in (1, 2):
        cls = even_negative_cycles(m)
        for top, bottom in bc_splits(m):
            if not split_admissible_bc(top, bottom, m):
                assert mn_trace_wn(BiSymbol(top, bottom), cls) == 0
        cls = odd_negative_cycles(m) if m >= 1 else None
        for top, bottom in d_splits(m):
            if not split_admissible_d(top, bottom, m):
                assert mn_trace_wn(BiSymbol(top, bottom), cls) == 0


def test_complement_symmetry_type_d():
    # swapping a bottom set with its complement leaves the signed summand
    # unchanged (m even)
    m = 2
    cls = odd_negative_cycles(m)
    universe = set(range(2 * m))
    for top, bottom in d_splits(m):
        comp_bottom = tuple(sorted(universe - set(bottom)))
        comp_top = tuple(sorted(universe - set(comp_bottom)))
        lhs = (-1) ** count_even(bottom) * mn_trace_wn(BiSymbol(top, bottom), cls)
        rhs = (-1) ** count_even(comp_bottom) * mn_trace_wn(
            BiSymbol(comp_top, comp_bottom), cls
        )
        assert lhs == rhs


def test_prop_checks_pass():
    assert check_prop211(1).ok
    assert check_prop211(2).ok
    assert check_prop212(2).ok


def test_underlying_order():
    assert underlying_order(SignedCycleType((1, 1, 1, 1), ())) == 1
    assert underlying_order(SignedCycleType((), (1, 1, 1, 1))) == 1
    assert underlying_order(SignedCycleType((2,), (1, 1))) == 2
    assert underlying_order(SignedCycleType((), (4,))) == 4


def test_induced_linear_trace_identity_value():
    identity = SignedCycleType((1, 1, 1, 1), ())
    assert induced_linear_trace_w4((1, 1), (1, 1), identity) == 6


def test_lemma217_passes():
    record = check_lemma217()
    assert record.ok
    assert record.claim == "lemma217"


def test_report_rendering_deterministic():
    ticks = itertools.count()

    def clock():
        return next(ticks) * 0.001

    rec1 = run_check("demo", "m=1", lambda: [], seed=5, clock=clock)
    rec2 = run_check("demo", "m=2", lambda: ["bad thing"], seed=5, clock=clock)
    text = render_report([rec2, rec1])
    assert text.index("m=1") < text.index("m=2")  # sorted by params
    assert "status: fail" in text and "status: pass" in text
    assert "  - bad thing" in text
    assert "seed: 5" in text
    assert render_report([rec2, rec1]) == text  # stable
    untimed = render_report([rec1], include_timing=False)
    assert "elapsed_ms: 0" in untimed
    assert not all_passed([rec1, rec2])
    assert all_passed([rec1])


def test_check_record_fields():
    rec = CheckRecord("x", "p", "pass", (), 3, 1)
    assert rec.ok and rec.elapsed_ms == 3 and rec.seed == 1
