"""Virtual characters of hyperoctahedral groups from bi-symbols.

W_n is realized as signed permutations: an element maps letter i to a
letter w(i) with a sign, stored as a tuple of nonzero integers in
(-n..-1, 1..n).  A bi-symbol (top row of weight r, bottom row of weight
r') encodes the character obtained by pulling the two symmetric-group
characters back to W_r x W_r', twisting the second factor by the
flip-counting character chi, and inducing up to W_n.

``mn_trace_wn`` evaluates by cycle removal: a negative k-cycle expands with
+ signs on the top row and - signs on the bottom row, a positive k-cycle
with + signs on both.  ``oracle_trace_wn`` evaluates the inducing
construction literally on an explicitly enumerated group (small n only)
and is the correctness reference for the recursion.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from .snchars import CharacterTable, oracle_trace_sn
from .symbols import (
    BiSymbol,
    SignedCycleType,
    beta_weight,
    bipartition_to_bisymbol,
    bipartitions,
    normalize_bisymbol,
    perm_sign,
    reduce_beta,
    signed_cycle_types,
)

_MN_CACHE: dict = {}

WN_ORACLE_LIMIT = 4
WN_TABLE_LIMIT = 6


def clear_caches():
    _MN_CACHE.clear()


def chi_value(cls: SignedCycleType) -> int:
    """The sign-flip counting character: -1 to the number of negative cycles."""
    return -1 if len(cls.neg) % 2 else 1


def _check_weight(sym: BiSymbol, cls: SignedCycleType):
    if sym.weight != cls.weight:
        raise ValueError(
            f"weight mismatch: symbol has weight {sym.weight},"
            f" class has weight {cls.weight}"
        )


def mn_trace_wn(sym: BiSymbol, cls: SignedCycleType, *, order=None) -> int:
    """Trace of the bi-symbol character at a signed cycle type.

    Removal order does not affect the value; ``order`` (a sequence of
    (negative, k) pairs exhausting the class) forces one for testing.
    """
    if normalize_bisymbol(sym.top, sym.bottom).is_zero:
        return 0  # the zero character, whatever the class
    _check_weight(sym, cls)
    if order is None:
        return _mn(sym.top, sym.bottom, cls)
    order = tuple((bool(s), int(k)) for s, k in order)
    got = SignedCycleType(
        tuple(k for s, k in order if not s), tuple(k for s, k in order if s)
    )
    if got != cls:
        raise ValueError("order must exhaust the signed cycle type")
    return _mn_ordered(sym.top, sym.bottom, order)


def _pick_cycle(cls: SignedCycleType):
    # largest length first; negative wins ties
    if cls.neg and (not cls.pos or cls.neg[-1] >= cls.pos[-1]):
        return True, cls.neg[-1]
    return False, cls.pos[-1]


def _mn(top, bottom, cls) -> int:
    norm = normalize_bisymbol(top, bottom)
    if norm.is_zero:
        return 0
    key = (
        reduce_beta(norm.symbol.top),
        reduce_beta(norm.symbol.bottom),
        cls,
    )
    val = _MN_CACHE.get(key)
    if val is None:
        if cls.weight == 0:
            val = 1
        else:
            negative, k = _pick_cycle(cls)
            val = _expand(key[0], key[1], cls, negative, k)
        _MN_CACHE[key] = val
    return norm.sign * val


def _expand(top, bottom, cls, negative, k) -> int:
    rest = cls.remove(negative, k)
    total = 0
    for i in range(len(top)):
        total += _mn(top[:i] + (top[i] - k,) + top[i + 1 :], bottom, rest)
    bottom_sign = -1 if negative else 1
    for j in range(len(bottom)):
        total += bottom_sign * _mn(
            top, bottom[:j] + (bottom[j] - k,) + bottom[j + 1 :], rest
        )
    return total


def _mn_ordered(top, bottom, order) -> int:
    norm = normalize_bisymbol(top, bottom)
    if norm.is_zero:
        return 0
    if not order:
        return norm.sign
    (negative, k), rest = order[0], order[1:]
    t, b = norm.symbol.top, norm.symbol.bottom
    total = 0
    for i in range(len(t)):
        total += _mn_ordered(t[:i] + (t[i] - k,) + t[i + 1 :], b, rest)
    bottom_sign = -1 if negative else 1
    for j in range(len(b)):
        total += bottom_sign * _mn_ordered(
            t, b[:j] + (b[j] - k,) + b[j + 1 :], rest
        )
    return norm.sign * total


def expand_once(sym: BiSymbol, cls: SignedCycleType, negative: bool, k: int) -> int:
    """One explicit removal step, summing full evaluations of the children.

    Used to check the single-step expansion against a direct evaluation.
    """
    norm = normalize_bisymbol(sym.top, sym.bottom)
    if norm.is_zero:
        return 0
    rest = cls.remove(negative, k)
    t, b = norm.symbol.top, norm.symbol.bottom
    total = 0
    for i in range(len(t)):
        total += _mn(t[:i] + (t[i] - k,) + t[i + 1 :], b, rest)
    bottom_sign = -1 if negative else 1
    for j in range(len(b)):
        total += bottom_sign * _mn(t, b[:j] + (b[j] - k,) + b[j + 1 :], rest)
    return norm.sign * total


# --- explicit signed permutations (oracle route) ---


def sp_mul(u, v):
    """Compose signed permutations: (u*v)(i) = u(v(i))."""
    out = []
    for i in range(len(u)):
        j = v[i]
        out.append(u[j - 1] if j > 0 else -u[-j - 1])
    return tuple(out)


def sp_inv(u):
    out = [0] * len(u)
    for i, j in enumerate(u, start=1):
        if j > 0:
            out[j - 1] = i
        else:
            out[-j - 1] = -i
    return tuple(out)


def sp_cycle_type(u) -> SignedCycleType:
    """Signed cycle type: a cycle is negative when its sign product is -1."""
    n = len(u)
    seen = [False] * n
    pos, neg = [], []
    for i in range(1, n + 1):
        if seen[i - 1]:
            continue
        j, length, sign = i, 0, 1
        while not seen[j - 1]:
            seen[j - 1] = True
            img = u[j - 1]
            if img < 0:
                sign = -sign
            j = abs(img)
            length += 1
        (pos if sign == 1 else neg).append(length)
    return SignedCycleType(tuple(pos), tuple(neg))


def sp_underlying_sign(u) -> int:
    """Sign of the underlying (unsigned) permutation."""
    return perm_sign(tuple(abs(j) - 1 for j in u))


def sp_in_type_d(u) -> bool:
    """Index-2 subgroup test: an even number of letters change sign."""
    return sum(1 for j in u if j < 0) % 2 == 0


def class_representative(cls: SignedCycleType):
    """A signed permutation with the given cycle type, on consecutive letters."""
    n = cls.weight
    img = [0] * n
    at = 1
    for negative, lengths in ((False, cls.pos), (True, cls.neg)):
        for k in lengths:
            for i in range(k - 1):
                img[at + i - 1] = at + i + 1
            img[at + k - 2] = -at if negative else at
            at += k
    return tuple(img)


@lru_cache(maxsize=None)
def wn_elements(n: int):
    """All 2^n n! signed permutations of n letters."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(tuple(s * p for s, p in zip(signs, perm)))
    return tuple(out)


@lru_cache(maxsize=None)
def _induction_profile(n: int, rep, r: int):
    """Conjugates of rep landing in the block subgroup W_r x W_{n-r}.

    Returns (cycle type of first block as plain cycles, same for second
    block, chi of second block) with multiplicities; shared by every symbol
    with the same split, which keeps the oracle affordable.
    """
    profile: dict = {}
    for x in wn_elements(n):
        h = sp_mul(sp_mul(x, rep), sp_inv(x))
        if any(abs(h[i]) > r for i in range(r)):
            continue
        h1 = h[:r]
        h2 = tuple((abs(v) - r) * (1 if v > 0 else -1) for v in h[r:])
        t1 = sp_cycle_type(h1)
        t2 = sp_cycle_type(h2)
        key = (
            tuple(sorted(t1.pos + t1.neg)),
            tuple(sorted(t2.pos + t2.neg)),
            chi_value(t2),
        )
        profile[key] = profile.get(key, 0) + 1
    return tuple(sorted(profile.items()))


def oracle_trace_wn(sym: BiSymbol, cls: SignedCycleType, limit: int = WN_ORACLE_LIMIT) -> int:
    """Literal evaluation of the inducing construction on the full group.

    Builds W_n explicitly, conjugates a class representative over the whole
    group, and sums the block-subgroup class function (product of two
    symmetric-group characters, the second twisted by chi).  The two
    symmetric-group values come from oracle_trace_sn, so no step here shares
    code with the removal recursion.
    """
    if normalize_bisymbol(sym.top, sym.bottom).is_zero:
        return 0
    _check_weight(sym, cls)
    n = cls.weight
    if n > limit:
        raise ValueError(f"oracle bound exceeded: n={n} > {limit}")
    r, rt = beta_weight(sym.top), beta_weight(sym.bottom)
    rep = class_representative(cls)
    h_order = 2**r * factorial(r) * 2**rt * factorial(rt)
    total = 0
    for (c1, c2, chi2), count in _induction_profile(n, rep, r):
        term = oracle_trace_sn(sym.top, c1) * oracle_trace_sn(sym.bottom, c2)
        total += count * term * chi2
    if total % h_order:
        raise ArithmeticError("induced sum not divisible by the subgroup order")
    return total // h_order


def trace_dn(sym: BiSymbol, cls: SignedCycleType) -> int:
    """Trace of the restriction to the index-2 subgroup of W_n.

    Valid only when the two rows differ as sets (the restriction stays
    irreducible) and the class lies in the subgroup; the value then equals
    the full-group trace.
    """
    if set(sym.top) == set(sym.bottom):
        raise ValueError("rows equal as sets: the restriction splits")
    if not cls.in_type_d:
        raise ValueError("class has an odd number of negative cycles")
    return mn_trace_wn(sym, cls)


def centralizer_order_wn(cls: SignedCycleType) -> int:
    """Centralizer order in W_n: product of (2k)^m m! over both cycle kinds."""
    z = 1
    for row in (cls.pos, cls.neg):
        for length in set(row):
            m = row.count(length)
            z *= (2 * length) ** m * factorial(m)
    return z


def character_table_wn(n: int, limit: int = WN_TABLE_LIMIT) -> CharacterTable:
    """Character table of W_n: rows keyed by minimal canonical bi-symbols."""
    if n > limit:
        raise ValueError(f"n={n} exceeds the W_n table bound {limit}")
    cols = signed_cycle_types(n)
    rows = [bipartition_to_bisymbol(bp) for bp in sorted(bipartitions(n))]
    entries = tuple(
        tuple(mn_trace_wn(sym, cls) for cls in cols) for sym in rows
    )
    cents = tuple(centralizer_order_wn(cls) for cls in cols)
    return CharacterTable(f"W{n}", tuple(rows), tuple(cols), entries, cents)
