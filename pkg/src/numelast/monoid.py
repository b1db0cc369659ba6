"""Numerical monoids: validated generating sets and basic membership arithmetic.

A numerical monoid is a co-finite additive submonoid of the nonnegative
integers, stored here by its minimal generating set g_1 < ... < g_k with
gcd 1.  Membership is decided by a bottom-up reachability table; large
queries are answered by comparison with the Frobenius number (the largest
integer outside the monoid), so tables never grow past a fixed window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import EmptyInput, GeneratorTooLarge, NonCoprime, ZeroGenerator

#: Default cap on the largest generator so reachability tables stay in memory.
MAX_GENERATOR = 10**6


@dataclass(frozen=True)
class NumericalMonoid:
    """Additive submonoid of N with minimal generators ``g_1 < ... < g_k``.

    Instances are assumed minimal.  Use :func:`new_monoid` to normalize raw
    input (sorting, deduplication, removal of redundant generators).
    """

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise EmptyInput("need at least one generator")
        if any(g < 1 for g in gens):
            raise ZeroGenerator(f"generators must be positive: {gens}")
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise ValueError(f"generators must be strictly increasing: {gens}")
        if gcd(*gens) != 1:
            raise NonCoprime(f"gcd of {gens} is {gcd(*gens)}, expected 1")

    @property
    def g1(self) -> int:
        return self.generators[0]

    @property
    def gk(self) -> int:
        return self.generators[-1]

    def __contains__(self, n) -> bool:
        return isinstance(n, int) and contains(self, n)

    def __str__(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


@dataclass(frozen=True)
class ArithmeticalParams:
    """Parameters (a, d, k) of the monoid generated by a, a+d, ..., a+kd.

    Requires gcd(a, d) = 1 and 1 <= k < a, the standing assumptions under
    which the progression is a minimal generating set.
    """

    a: int
    d: int
    k: int

    def __post_init__(self):
        if min(self.a, self.d, self.k) < 1:
            raise ValueError("a, d and k must be positive")
        if gcd(self.a, self.d) != 1:
            raise ValueError(f"gcd(a={self.a}, d={self.d}) must be 1")
        if not self.k < self.a:
            raise ValueError(f"need k < a, got k={self.k}, a={self.a}")

    def generators(self) -> tuple[int, ...]:
        return tuple(self.a + i * self.d for i in range(self.k + 1))

    def monoid(self) -> NumericalMonoid:
        S = new_monoid(self.generators())
        assert S.generators == self.generators(), "progression was not minimal"
        return S

    def step_bound(self) -> Fraction:
        """Supremum of the elasticity set, (a + kd)/a."""
        return Fraction(self.a + self.k * self.d, self.a)


def new_monoid(raw, *, max_generator: int = MAX_GENERATOR) -> NumericalMonoid:
    """Build the monoid generated by ``raw``.

    Sorts, deduplicates, and drops generators representable over the smaller
    ones, so the result carries the minimal generating set.
    """
    entries = [int(g) for g in raw]
    if not entries:
        raise EmptyInput("no generators given")
    if any(g < 1 for g in entries):
        raise ZeroGenerator(f"generators must be >= 1, got {sorted(entries)}")
    gens = sorted(set(entries))
    if gens[-1] > max_generator:
        raise GeneratorTooLarge(
            f"largest generator {gens[-1]} exceeds the cap {max_generator}"
        )
    if gcd(*gens) != 1:
        raise NonCoprime(f"gcd of {tuple(gens)} is {gcd(*gens)}, expected 1")
    kept: list[int] = []
    for g in gens:
        if not _representable(kept, g):
            kept.append(g)
    return NumericalMonoid(tuple(kept))


def _representable(gens: list[int], target: int) -> bool:
    # bottom-up reachability over [0, target]; gens are sorted and <= target
    if not gens:
        return False
    reach = bytearray(target + 1)
    reach[0] = 1
    for n in range(gens[0], target + 1):
        for g in gens:
            if g > n:
                break
            if reach[n - g]:
                reach[n] = 1
                break
    return bool(reach[target])


class _Membership:
    """Growable reachability table for one generating set."""

    __slots__ = ("gens", "reach", "_frobenius")

    def __init__(self, gens: tuple[int, ...]):
        self.gens = gens
        self.reach = bytearray([1])
        self._frobenius: int | None = None

    def extend(self, limit: int) -> None:
        reach = self.reach
        gens = self.gens
        for n in range(len(reach), limit + 1):
            hit = 0
            for g in gens:
                if g > n:
                    break
                if reach[n - g]:
                    hit = 1
                    break
            reach.append(hit)

    def frobenius(self) -> int:
        """Largest integer outside the monoid (-1 when there is none).

        Scans upward until g_1 consecutive members appear; from that point
        on every integer is a member, so the last gap seen is the answer.
        """
        if self._frobenius is not None:
            return self._frobenius
        g1, gk = self.gens[0], self.gens[-1]
        if g1 == 1:
            self._frobenius = -1
            return -1
        limit = (g1 - 1) * (gk - 1) + g1
        while True:
            self.extend(limit)
            last_gap = -1
            run = 0
            for n, member in enumerate(self.reach):
                if member:
                    run += 1
                    if run >= g1:
                        self._frobenius = last_gap
                        return last_gap
                else:
                    last_gap = n
                    run = 0
            limit *= 2


_MEMBERSHIP: dict[tuple[int, ...], _Membership] = {}


def _membership(S: NumericalMonoid) -> _Membership:
    table = _MEMBERSHIP.get(S.generators)
    if table is None:
        table = _Membership(S.generators)
        _MEMBERSHIP[S.generators] = table
    return table


def clear_membership_cache() -> None:
    _MEMBERSHIP.clear()


def contains(S: NumericalMonoid, n: int) -> bool:
    """True iff ``n`` is a nonnegative integer combination of the generators."""
    if n < 0:
        return False
    if S.g1 == 1:
        return True
    table = _membership(S)
    if table._frobenius is not None and n > table._frobenius:
        return True
    if n >= len(table.reach):
        if n > (S.g1 - 1) * (S.gk - 1):
            # settle the Frobenius number once instead of growing the table
            return n > table.frobenius()
        table.extend(n)
    return bool(table.reach[n])


def frobenius(S: NumericalMonoid) -> int:
    """Largest integer not in ``S``; -1 for <1> by convention."""
    return _membership(S).frobenius()


def max_elasticity(S: NumericalMonoid) -> Fraction:
    """Supremum of the elasticity set, g_k/g_1 (attained by some element)."""
    return Fraction(S.gk, S.g1)


def detect_arithmetical(S: NumericalMonoid) -> ArithmeticalParams | None:
    """Return (a, d, k) iff the generators are a, a+d, ..., a+kd.

    Single-generator monoids are never arithmetical here (k >= 1 required).
    """
    gens = S.generators
    if len(gens) < 2:
        return None
    d = gens[1] - gens[0]
    if any(b - a != d for a, b in zip(gens, gens[1:])):
        return None
    a, k = gens[0], len(gens) - 1
    if gcd(a, d) != 1 or not 1 <= k < a:
        return None
    return ArithmeticalParams(a, d, k)
