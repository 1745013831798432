"""Enumeration of generalized integers (the free commutative monoid on P).

The generator scheme is a min-heap seeded with the unit: popping n emits it
and pushes n * p_j for every prime index j >= max_prime_index(n) whose product
stays below the bound.  Every exponent vector is produced exactly once, in
non-decreasing order of value; coincident prime values at distinct indices
yield distinct generalized integers (multiset semantics).

Two routes are provided:

* :func:`iter_integers` / :func:`enumerate_integers` -- full
  :class:`GenInteger` objects carrying sparse exponent vectors, with
  deterministic lexicographic tie-breaking.  Use for dumps, inspection and
  small systems.
* :func:`jump_arrays` -- a lean variant of the same heap scheme that tracks
  only (log value, von Mangoldt weight).  It is several times faster and is
  what the counting-table builder consumes for large bounds.  Within a group
  of exactly equal log values the two routes may order elements differently;
  prefix counts and prefix Lambda sums are unaffected because strict-inequality
  queries never split such a group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush

import numpy as np

from .errors import CapacityError
from .systems import PrimeSequence

DEFAULT_MAX_INTEGERS = 10**8

LOG_ROUNDING_TOL = 1e-12  # relative slack between log_value and the exponent sum


class GenInteger:
    """One generalized integer: log-value plus sparse exponent vector.

    ``exponents`` is a tuple of (prime_index, exponent) pairs with ascending
    indices and positive exponents; the unit is the empty tuple with
    log_value 0.
    """

    __slots__ = ("log_value", "exponents")

    def __init__(self, log_value: float, exponents: tuple):
        self.log_value = log_value
        self.exponents = exponents

    @property
    def value(self) -> float:
        return math.exp(self.log_value)

    @property
    def max_prime_index(self) -> int:
        return self.exponents[-1][0] if self.exponents else -1

    @property
    def prime_power(self) -> bool:
        return len(self.exponents) == 1

    def __repr__(self):
        return f"GenInteger(value={self.value:.6g}, exponents={self.exponents})"

    def __eq__(self, other):
        return (
            isinstance(other, GenInteger)
            and self.log_value == other.log_value
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.log_value, self.exponents))


class _LexKey:
    """Dense-lexicographic order on sparse exponent vectors, for value ties.

    Comparing position by position from prime index 0, a missing entry counts
    as exponent 0, and the smaller exponent at the first differing position
    wins.  Only consulted by the heap when two log values compare equal.
    """

    __slots__ = ("exps",)

    def __init__(self, exps: tuple):
        self.exps = exps

    def __eq__(self, other):
        return self.exps == other.exps

    def __lt__(self, other):
        a, b = self.exps, other.exps
        i = j = 0
        while i < len(a) and j < len(b):
            ia, ea = a[i]
            ib, eb = b[j]
            if ia < ib:
                return False  # a positive where b is 0
            if ib < ia:
                return True
            if ea != eb:
                return ea < eb
            i += 1
            j += 1
        return i == len(a) and j < len(b)


@dataclass(frozen=True)
class EnumerationResult:
    """All generalized integers below ``bound``, sorted by log value."""

    integers: list
    bound: float

    def __len__(self):
        return len(self.integers)

    def __iter__(self):
        return iter(self.integers)


def iter_integers(primes: PrimeSequence, bound: float, max_count: int = DEFAULT_MAX_INTEGERS):
    """Yield every generalized integer with value < bound, sorted ascending.

    Emits the unit first.  Ties in value are ordered by lexicographically
    smaller exponent vector.  Raises :class:`CapacityError` past ``max_count``.
    """
    if not math.isfinite(bound) or bound <= 1.0:
        raise ValueError(f"bound must be finite and > 1, got {bound}")
    logs = primes.logs.tolist()
    n = len(logs)
    log_bound = math.log(bound)
    heap = [(0.0, _LexKey(()), ())]
    count = 0
    while heap:
        lv, _, exps = heappop(heap)
        count += 1
        if count > max_count:
            raise CapacityError(f"enumeration exceeded max_count={max_count}")
        yield GenInteger(lv, exps)
        start = exps[-1][0] if exps else 0
        for j in range(start, n):
            clv = lv + logs[j]
            if clv >= log_bound:
                break  # logs are non-decreasing
            if exps and exps[-1][0] == j:
                cexps = exps[:-1] + ((j, exps[-1][1] + 1),)
            else:
                cexps = exps + ((j, 1),)
            heappush(heap, (clv, _LexKey(cexps), cexps))


def enumerate_integers(
    primes: PrimeSequence, bound: float, max_count: int = DEFAULT_MAX_INTEGERS
) -> EnumerationResult:
    """Materialized form of :func:`iter_integers`."""
    return EnumerationResult(list(iter_integers(primes, bound, max_count)), float(bound))


def von_mangoldt(n: GenInteger, primes: PrimeSequence) -> float:
    """log p_j when n = p_j^m (m >= 1), else 0 (including the unit)."""
    if n.prime_power:
        return float(primes.logs[n.exponents[0][0]])
    return 0.0


def jump_arrays(
    primes: PrimeSequence, bound: float, max_count: int = DEFAULT_MAX_INTEGERS
):
    """Sorted log values and Lambda weights of all generalized integers < bound.

    Same heap scheme as :func:`iter_integers` but carrying only (log value,
    max prime index, prime-power base index), so no exponent tuples are built.
    Returns ``(logs, lambdas)`` as float arrays of equal length.
    """
    if not math.isfinite(bound) or bound <= 1.0:
        raise ValueError(f"bound must be finite and > 1, got {bound}")
    logs = primes.logs.tolist()
    n = len(logs)
    log_bound = math.log(bound)
    # entry: (log_value, start_index, base); base = -1 unit, -2 composite,
    # j >= 0 for the prime power p_j^m
    heap = [(0.0, 0, -1)]
    out_logs: list = []
    out_lam: list = []
    count = 0
    while heap:
        lv, start, base = heappop(heap)
        count += 1
        if count > max_count:
            raise CapacityError(f"enumeration exceeded max_count={max_count}")
        out_logs.append(lv)
        out_lam.append(logs[base] if base >= 0 else 0.0)
        j = start
        while j < n:
            clv = lv + logs[j]
            if clv >= log_bound:
                break
            cbase = j if (base == -1 or base == j) else -2
            heappush(heap, (clv, j, cbase))
            j += 1
    return np.asarray(out_logs), np.asarray(out_lam)


def write_dump(en, primes: PrimeSequence, path) -> None:
    """Raw text dump, one record per integer: value<TAB>exponents<TAB>lambda.

    The exponent vector is serialized as ``i:a,j:b`` pairs with ascending
    prime index; the unit has an empty exponent field.
    """
    with open(path, "w") as fh:
        for g in en:
            exps = ",".join(f"{i}:{e}" for i, e in g.exponents)
            lam = von_mangoldt(g, primes)
            fh.write(f"{g.value:.17g}\t{exps}\t{lam:.17g}\n")
