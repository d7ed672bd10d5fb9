"""Classify ring elements into the special classes the decompositions use:
nilpotents, idempotents, tripotents, 5-potents, involutions, units, squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import RingTable


@dataclass(frozen=True)
class ElementClassification:
    nilpotents: frozenset[int]
    idempotents: frozenset[int]
    tripotents: frozenset[int]
    five_potents: frozenset[int]
    involutions: frozenset[int]
    units: frozenset[int]
    squares: frozenset[int]


def is_nilpotent(ring: RingTable, a: int) -> bool:
    """Whether some power of a is zero.

    Walks the power orbit a, a^2, a^3, ... until a repeat; in a finite ring
    the orbit has at most ``order`` distinct values, so no exponent bound is
    needed.
    """
    return nilpotency_index(ring, a) is not None


def nilpotency_index(ring: RingTable, a: int) -> int | None:
    """Least m >= 1 with a**m = 0, or None when a is not nilpotent."""
    mul, zero = ring.mul, ring.zero
    seen = set()
    x, m = a, 1
    while x not in seen:
        if x == zero:
            return m
        seen.add(x)
        x = mul[x][a]
        m += 1
    return None


def classify(ring: RingTable) -> ElementClassification:
    """Exhaustive scan of every element class; cached per ring."""
    cached = ring._cache.get("classification")
    if cached is None:
        mul, one = ring.mul, ring.one
        rng = ring.elements
        idempotents, tripotents, five_potents, involutions, units = (
            [],
            [],
            [],
            [],
            [],
        )
        for x in rng:
            x2 = mul[x][x]
            x3 = mul[x2][x]
            if x2 == x:
                idempotents.append(x)
            if x3 == x:
                tripotents.append(x)
            if mul[mul[x3][x]][x] == x:
                five_potents.append(x)
            if x2 == one:
                involutions.append(x)
            if any(mul[x][y] == one and mul[y][x] == one for y in rng):
                units.append(x)
        cached = ElementClassification(
            nilpotents=frozenset(x for x in rng if is_nilpotent(ring, x)),
            idempotents=frozenset(idempotents),
            tripotents=frozenset(tripotents),
            five_potents=frozenset(five_potents),
            involutions=frozenset(involutions),
            units=frozenset(units),
            squares=frozenset(mul[x][x] for x in rng),
        )
        ring._cache["classification"] = cached
    return cached


def commute(ring: RingTable, a: int, b: int) -> bool:
    return ring.mul[a][b] == ring.mul[b][a]


def commutants(ring: RingTable) -> tuple[frozenset[int], ...]:
    """For each element, the set of elements it commutes with; cached."""
    cached = ring._cache.get("commutants")
    if cached is None:
        mul = ring.mul
        rng = ring.elements
        cached = tuple(
            frozenset(y for y in rng if mul[x][y] == mul[y][x]) for x in rng
        )
        ring._cache["commutants"] = cached
    return cached
