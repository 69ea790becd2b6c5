"""Exhaustive checks of the trace and multiplicity identities.

The distinguished classes here have one negative cycle of each even length
2, 4, ..., 2m (weight m^2 + m) or of each odd length 1, 3, ..., 2m-1
(weight m^2).  Splitting {0, ..., 2m} or {0, ..., 2m-1} into the two rows
of a bi-symbol and evaluating at the matching class gives closed-form
traces; summing them with alternating signs over all splits gives the
multiplicity of the distinguished constituent, which must come out to
exactly 1.  Each check enumerates every split and reports counterexamples
rather than stopping at the first.

Claim ids (lemma26, prop211, ...) are the stable tokens of the CLI verify
interface.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

from .report import CheckRecord, run_check
from .symbols import BiSymbol, SignedCycleType, signed_cycle_types
from .wnchars import (
    chi_value,
    class_representative,
    mn_trace_wn,
    sp_cycle_type,
    sp_inv,
    sp_mul,
    sp_underlying_sign,
    trace_dn,
    wn_elements,
)

LEMMA_M_LIMIT = 6
PROP_BC_M_LIMIT = 5
PROP_D_M_LIMIT = 4


def even_negative_cycles(m: int) -> SignedCycleType:
    """Negative cycles of lengths 2, 4, ..., 2m; weight m^2 + m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return SignedCycleType((), tuple(2 * i for i in range(1, m + 1)))


def odd_negative_cycles(m: int) -> SignedCycleType:
    """Negative cycles of lengths 1, 3, ..., 2m-1; weight m^2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return SignedCycleType((), tuple(2 * i - 1 for i in range(1, m + 1)))


def pair_sum_free(row, total: int) -> bool:
    """No two distinct entries of the row sum to the given total."""
    return all(x + y != total for x, y in itertools.combinations(row, 2))


def bc_splits(m: int):
    """Splits of {0..2m} into a bottom row of size m and its complement."""
    universe = tuple(range(2 * m + 1))
    for bottom in itertools.combinations(universe, m):
        top = tuple(x for x in universe if x not in bottom)
        yield top, bottom


def d_splits(m: int):
    """Splits of {0..2m-1} into two rows of size m (bottom row chosen)."""
    universe = tuple(range(2 * m))
    for bottom in itertools.combinations(universe, m):
        top = tuple(x for x in universe if x not in bottom)
        yield top, bottom


def split_admissible_bc(top, bottom, m: int) -> bool:
    """Both rows avoid entry pairs summing to 2m."""
    return pair_sum_free(top, 2 * m) and pair_sum_free(bottom, 2 * m)


def split_admissible_d(top, bottom, m: int) -> bool:
    """Both rows avoid entry pairs summing to 2m-1."""
    return pair_sum_free(top, 2 * m - 1) and pair_sum_free(bottom, 2 * m - 1)


def count_ge(row, bound: int) -> int:
    return sum(1 for x in row if x >= bound)


def count_even(row) -> int:
    return sum(1 for x in row if x % 2 == 0)


def check_lemma26(m: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    """Every split traces to (-1)^((m^2+m)/2) at the even-cycle class when
    admissible, and to 0 otherwise."""
    if m > LEMMA_M_LIMIT:
        raise ValueError(f"m={m} exceeds bound {LEMMA_M_LIMIT}")
    cls = even_negative_cycles(m)
    expected_good = (-1) ** ((m * m + m) // 2)

    def scan():
        for top, bottom in bc_splits(m):
            expected = expected_good if split_admissible_bc(top, bottom, m) else 0
            got = mn_trace_wn(BiSymbol(top, bottom), cls)
            if got != expected:
                yield f"split top={top} bottom={bottom}: expected {expected}, got {got}"

    return run_check("lemma26", f"m={m}", scan, seed, clock)


def check_lemma27(m: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    """For admissible splits, the count of even bottom entries has the
    parity of (m^2+m)/2."""
    if m > LEMMA_M_LIMIT:
        raise ValueError(f"m={m} exceeds bound {LEMMA_M_LIMIT}")

    def scan():
        for top, bottom in bc_splits(m):
            if not split_admissible_bc(top, bottom, m):
                continue
            if count_even(bottom) % 2 != ((m * m + m) // 2) % 2:
                yield f"split top={top} bottom={bottom}: even-count parity off"

    return run_check("lemma27", f"m={m}", scan, seed, clock)


def check_lemma29(m: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    """Every split traces to (-1)^(N + m(m-1)/2) at the odd-cycle class when
    admissible (N = bottom entries >= m), and to 0 otherwise."""
    if m > LEMMA_M_LIMIT:
        raise ValueError(f"m={m} exceeds bound {LEMMA_M_LIMIT}")
    cls = odd_negative_cycles(m)

    def scan():
        for top, bottom in d_splits(m):
            if split_admissible_d(top, bottom, m):
                n_high = count_ge(bottom, m)
                expected = (-1) ** (n_high + m * (m - 1) // 2)
            else:
                expected = 0
            got = mn_trace_wn(BiSymbol(top, bottom), cls)
            if got != expected:
                yield f"split top={top} bottom={bottom}: expected {expected}, got {got}"

    return run_check("lemma29", f"m={m}", scan, seed, clock)


def check_lemma210(m_prime: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    """Both parity identities for even m = 2m': on admissible splits,
    (a) #{bottom >= m} - #{bottom even} has the parity of m', and
    (b) #{bottom even} has the parity of N + m(m-1)/2."""
    m = 2 * m_prime
    if m_prime < 1 or m > LEMMA_M_LIMIT:
        raise ValueError(f"m'={m_prime} out of range")

    def scan():
        for top, bottom in d_splits(m):
            if not split_admissible_d(top, bottom, m):
                continue
            n_high = count_ge(bottom, m)
            n_even = count_even(bottom)
            if (n_high - n_even) % 2 != m_prime % 2:
                yield f"split top={top} bottom={bottom}: identity (a) fails"
            if n_even % 2 != (n_high + m * (m - 1) // 2) % 2:
                yield f"split top={top} bottom={bottom}: identity (b) fails"

    return run_check("lemma210", f"m'={m_prime}", scan, seed, clock)


def multiplicity_sum_bc(m: int) -> int:
    """Signed sum over all splits of {0..2m}, before dividing by 2^m.

    The sign of a split is -1 to the number of even bottom entries.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    cls = even_negative_cycles(m)
    total = 0
    for top, bottom in bc_splits(m):
        sign = (-1) ** count_even(bottom)
        total += sign * mn_trace_wn(BiSymbol(top, bottom), cls)
    return total


def multiplicity_bc(m: int) -> Fraction:
    """Multiplicity of the distinguished constituent, types B/C; exact."""
    return Fraction(multiplicity_sum_bc(m), 2**m)


def multiplicity_sum_d(m: int) -> int:
    """Signed sum over all splits of {0..2m-1}, before dividing by 2^m."""
    if m < 2 or m % 2:
        raise ValueError("m must be even and >= 2")
    cls = odd_negative_cycles(m)
    total = 0
    for top, bottom in d_splits(m):
        sign = (-1) ** count_even(bottom)
        total += sign * trace_dn(BiSymbol(top, bottom), cls)
    return total


def multiplicity_d(m: int) -> Fraction:
    """Multiplicity of the distinguished constituent, type D; exact."""
    return Fraction(multiplicity_sum_d(m), 2**m)


def check_prop211(m: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    if not 1 <= m <= PROP_BC_M_LIMIT:
        raise ValueError(f"m={m} out of range 1..{PROP_BC_M_LIMIT}")

    def scan():
        value = multiplicity_bc(m)
        if value != 1:
            yield f"multiplicity {value} != 1"

    return run_check("prop211", f"m={m}", scan, seed, clock)


def check_prop212(m: int, seed: int = 0, clock=time.monotonic) -> CheckRecord:
    if m % 2 or not 2 <= m <= PROP_D_M_LIMIT:
        raise ValueError(f"m={m} must be even and within 2..{PROP_D_M_LIMIT}")

    def scan():
        value = multiplicity_d(m)
        if value != 1:
            yield f"multiplicity {value} != 1"

    return run_check("prop212", f"m={m}", scan, seed, clock)


# --- induction from the block subgroup W_2 x W_2 of W_4 ---


def _w2_linear_character(on_perm_sign: int, on_flips: int, w) -> int:
    """One of the four +-1-valued characters of W_2."""
    value = 1
    if on_perm_sign == -1:
        value *= sp_underlying_sign(w)
    if on_flips == -1:
        value *= chi_value(sp_cycle_type(w))
    return value


def induced_linear_trace_w4(kind1, kind2, cls: SignedCycleType) -> int:
    """Trace at cls of the induction to W_4 of a linear character of
    W_2 x W_2, each factor labeled by its values on the two generators."""
    rep = class_representative(cls)
    total = 0
    for x in wn_elements(4):
        h = sp_mul(sp_mul(x, rep), sp_inv(x))
        if any(abs(h[i]) > 2 for i in range(2)):
            continue
        h1 = h[:2]
        h2 = tuple((abs(v) - 2) * (1 if v > 0 else -1) for v in h[2:])
        total += _w2_linear_character(*kind1, h1) * _w2_linear_character(*kind2, h2)
    assert total % 64 == 0
    return total // 64


def underlying_order(cls: SignedCycleType) -> int:
    """Order of the image of the class in the symmetric group."""
    import math

    order = 1
    for k in cls.pos + cls.neg:
        order = math.lcm(order, k)
    return order


def check_lemma217(seed: int = 0, clock=time.monotonic) -> CheckRecord:
    """Every induced linear character of the block subgroup W_2 x W_2 takes
    even values on W_4, the trivial one matching the 6/2/0 pattern of the
    underlying 4-letter permutation; and the bi-symbol ([1,2];[2]) is even
    on every class."""
    kinds = [(a, b) for a in (1, -1) for b in (1, -1)]
    classes = signed_cycle_types(4)

    def scan():
        for kind1 in kinds:
            for kind2 in kinds:
                for cls in classes:
                    value = induced_linear_trace_w4(kind1, kind2, cls)
                    if value % 2:
                        yield (
                            f"epsilon={kind1}x{kind2} class={cls}: odd value {value}"
                        )
                    if kind1 == kind2 == (1, 1):
                        order = underlying_order(cls)
                        expected = 6 if order == 1 else 2 if order == 2 else 0
                        if value != expected:
                            yield (
                                f"trivial epsilon class={cls}: expected"
                                f" {expected}, got {value}"
                            )
        sym = BiSymbol((1, 2), (2,))
        for cls in classes:
            value = mn_trace_wn(sym, cls)
            if value % 2:
                yield f"symbol (1,2);(2) class={cls}: odd value {value}"

    return run_check("lemma217", "n=4", scan, seed, clock)
