"""Virtual characters of symmetric groups from beta-sequences.

Two independent evaluation routes are kept side by side on purpose:

* ``mn_trace_sn`` peels one cycle at a time off the class, subtracting its
  length from each symbol entry in turn (a beta-sequence form of the
  classical border-strip recursion, with the strip signs absorbed by the
  normalization of the sequence);
* ``oracle_trace_sn`` expands the symbol as an alternating sum over
  permutations of Young-subgroup permutation characters, each evaluated by
  counting distributions of cycles into blocks.

The test suite checks the two against each other exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .symbols import (
    beta_weight,
    normalize_beta,
    partition_to_beta,
    partitions,
    perm_sign,
    reduce_beta,
)

# shared memo; plain dict assignment is atomic under CPython, and a lost
# duplicate insert only recomputes the same pure value
_MN_CACHE: dict = {}
_ORACLE_CACHE: dict = {}


def clear_caches():
    _MN_CACHE.clear()
    _ORACLE_CACHE.clear()


def _check_weight(entries, cycles):
    if beta_weight(entries) != sum(cycles):
        raise ValueError(
            f"weight mismatch: symbol {entries} has weight {beta_weight(entries)}"
            f" but class {cycles} has size {sum(cycles)}"
        )


def mn_trace_sn(entries, cycles, *, order=None) -> int:
    """Trace of the virtual character of a beta-sequence at a cycle type.

    ``cycles`` is the multiset of cycle lengths.  The result is independent
    of the removal order; pass ``order`` (a permutation of the cycles) to
    force one, e.g. when testing that independence.  Raises ValueError when
    the symbol weight does not match the class size.
    """
    entries = tuple(int(x) for x in entries)
    cycles = tuple(sorted(int(c) for c in cycles))
    if normalize_beta(entries).is_zero:
        return 0  # the zero character, whatever the class
    _check_weight(entries, cycles)
    if order is None:
        return _mn(entries, cycles)
    order = tuple(int(c) for c in order)
    if tuple(sorted(order)) != cycles:
        raise ValueError("order must be a permutation of the cycle multiset")
    return _mn_ordered(entries, order)


def _mn(entries, cycles) -> int:
    norm = normalize_beta(entries)
    if norm.is_zero:
        return 0
    canon = reduce_beta(norm.entries)
    key = (canon, cycles)
    val = _MN_CACHE.get(key)
    if val is None:
        if not cycles:
            val = 1  # weight 0: the reduced symbol is empty
        else:
            # largest cycle first: entries shrink fastest, most children die
            k, rest = cycles[-1], cycles[:-1]
            val = sum(
                _mn(canon[:i] + (canon[i] - k,) + canon[i + 1 :], rest)
                for i in range(len(canon))
            )
        _MN_CACHE[key] = val
    return norm.sign * val


def _mn_ordered(entries, order) -> int:
    norm = normalize_beta(entries)
    if norm.is_zero:
        return 0
    if not order:
        return norm.sign
    canon, k = norm.entries, order[0]
    total = sum(
        _mn_ordered(canon[:i] + (canon[i] - k,) + canon[i + 1 :], order[1:])
        for i in range(len(canon))
    )
    return norm.sign * total


def young_perm_char(blocks, cycles) -> int:
    """Number of ways to assign each cycle to a block, filling every block.

    ``blocks`` is a composition (labeled block sizes, zeros allowed); a block
    of size b must receive cycles of total length exactly b.  This is the
    value of the permutation character of the Young subgroup with those
    block sizes.
    """
    blocks = tuple(int(b) for b in blocks)
    cycles = tuple(sorted(int(c) for c in cycles))
    if any(b < 0 for b in blocks):
        raise ValueError("block sizes must be non-negative")
    if sum(blocks) != sum(cycles):
        raise ValueError("total block size must equal total cycle length")
    groups = sorted(set(cycles))
    mults = [cycles.count(g) for g in groups]
    memo: dict = {}

    def place(idx, caps):
        if idx == len(groups):
            return 1
        key = (idx, caps)
        if key in memo:
            return memo[key]
        length, mult = groups[idx], mults[idx]
        total = 0

        def spread(j, left, caps_now, ways):
            nonlocal total
            if j == len(caps_now):
                if left == 0:
                    total += ways * place(idx + 1, caps_now)
                return
            for c in range(min(left, caps_now[j] // length) + 1):
                nxt = caps_now[:j] + (caps_now[j] - c * length,) + caps_now[j + 1 :]
                spread(j + 1, left - c, nxt, ways * comb(left, c))

        spread(0, mult, caps, 1)
        memo[key] = total
        return total

    return place(0, blocks)


def oracle_trace_sn(entries, cycles) -> int:
    """Alternating-sum evaluation, independent of the removal recursion.

    Sums sgn(sigma) * young_perm_char over all permutations sigma of the
    entries, with block sizes entry[sigma(i)] - i + 1 (terms with a negative
    block vanish).  The zero, sign and sorting rules of the symbol calculus
    all fall out of the sum, so raw unsorted sequences are fine.
    """
    entries = tuple(int(x) for x in entries)
    cycles = tuple(sorted(int(c) for c in cycles))
    if normalize_beta(entries).is_zero:
        return 0  # zero character; the sum below needs matching weights
    _check_weight(entries, cycles)
    key = (entries, cycles)
    val = _ORACLE_CACHE.get(key)
    if val is not None:
        return val
    a = len(entries)
    total = 0
    for perm in itertools.permutations(range(a)):
        blocks = tuple(entries[perm[i]] - i for i in range(a))
        if any(b < 0 for b in blocks):
            continue
        total += perm_sign(perm) * young_perm_char(blocks, cycles)
    _ORACLE_CACHE[key] = total
    return total


def centralizer_order_sn(cycles) -> int:
    """Order of the centralizer of an element with the given cycle type."""
    z = 1
    for length in set(cycles):
        m = tuple(cycles).count(length)
        z *= length**m * factorial(m)
    return z


@dataclass(frozen=True)
class CharacterTable:
    """Exact character table with per-class centralizer orders.

    Rows are canonical symbols, columns are class labels; entries[i][j] is
    the trace of row i at class j.
    """

    group: str
    row_labels: tuple
    col_labels: tuple
    entries: tuple
    centralizers: tuple

    def row(self, label):
        return self.entries[self.row_labels.index(label)]

    def value(self, row_label, col_label) -> int:
        return self.entries[self.row_labels.index(row_label)][
            self.col_labels.index(col_label)
        ]

    def orthogonality_defect(self):
        """Max deviation of weighted row inner products from the identity."""
        worst = Fraction(0)
        for i, row_i in enumerate(self.entries):
            for j, row_j in enumerate(self.entries):
                s = sum(
                    Fraction(x * y, z)
                    for x, y, z in zip(row_i, row_j, self.centralizers)
                )
                worst = max(worst, abs(s - (1 if i == j else 0)))
        return worst

    def is_orthogonal(self) -> bool:
        return self.orthogonality_defect() == 0


SN_TABLE_LIMIT = 8


def character_table_sn(n: int, limit: int = SN_TABLE_LIMIT) -> CharacterTable:
    """Character table of S_n: rows keyed by minimal beta-sequences."""
    if n > limit:
        raise ValueError(f"n={n} exceeds the S_n table bound {limit}")
    cols = sorted(partitions(n))
    rows = [partition_to_beta(p) for p in sorted(partitions(n))]
    entries = tuple(
        tuple(mn_trace_sn(beta, cls) for cls in cols) for beta in rows
    )
    cents = tuple(centralizer_order_sn(cls) for cls in cols)
    return CharacterTable(f"S{n}", tuple(rows), tuple(cols), entries, cents)
