"""Constructive lifting along nilpotents.

Given an element whose idempotency (or tripotency) defect is nilpotent,
produce an exact idempotent (or tripotent) inside the subring generated by
that element, differing from it by a nilpotent.  Also splits a tripotent
into a difference of orthogonal idempotents when 2 is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import is_nilpotent
from .rings import PreconditionFailedError, RingTable


@dataclass(frozen=True)
class GeneratedSubring:
    """Closure of {a, 1} under +, -, and *; commutative by construction."""

    ring: RingTable
    generator: int
    elements: frozenset[int]


@dataclass(frozen=True)
class LiftResult:
    lifted: int
    difference: int
    iterations: int


def generated_subring(ring: RingTable, a: int) -> GeneratedSubring:
    """Worklist saturation of {a, 1} under addition, negation and
    multiplication (so all integer multiples of 1 are included)."""
    add, mul, neg = ring.add, ring.mul, ring.neg
    members = {a, ring.one}
    frontier = list(members)
    while frontier:
        fresh = set()
        for x in frontier:
            if neg[x] not in members:
                fresh.add(neg[x])
            for y in members:
                for z in (add[x][y], mul[x][y], mul[y][x]):
                    if z not in members:
                        fresh.add(z)
        members |= fresh
        frontier = list(fresh)
    return GeneratedSubring(ring, a, frozenset(members))


def lift_idempotent(ring: RingTable, a: int) -> LiftResult:
    """Newton iteration e -> 3e^2 - 2e^3 starting from a.

    Requires a - a^2 nilpotent.  Each step squares the idempotency defect
    (up to a unit factor), so the loop ends within ceil(log2(order)) + 1
    steps with an exact idempotent e such that a - e is nilpotent and e
    lies in the subring generated by a (hence commutes with a).
    """
    add, mul = ring.add, ring.mul
    defect = ring.sub(a, mul[a][a])
    if not is_nilpotent(ring, defect):
        raise PreconditionFailedError(
            f"a - a^2 = {defect} is not nilpotent (a = {a})"
        )
    e, iterations = a, 0
    limit = max(1, ring.order.bit_length() + 1)
    while mul[e][e] != e:
        e2 = mul[e][e]
        e3 = mul[e2][e]
        three_e2 = add[add[e2][e2]][e2]
        two_e3 = add[e3][e3]
        e = ring.sub(three_e2, two_e3)
        iterations += 1
        if iterations > limit:
            raise AssertionError("Newton iteration failed to converge")
    return LiftResult(e, ring.sub(a, e), iterations)


def lift_tripotent(ring: RingTable, a: int) -> LiftResult:
    """Smallest-index tripotent p in the subring generated by a with a - p
    nilpotent.  Requires 2 invertible and a - a^3 nilpotent; existence is
    then guaranteed, so an empty search signals a bug."""
    inv2 = inverse_of_two(ring)
    if inv2 is None:
        raise PreconditionFailedError("2 is not a unit in this ring")
    mul = ring.mul
    a3 = mul[mul[a][a]][a]
    defect = ring.sub(a, a3)
    if not is_nilpotent(ring, defect):
        raise PreconditionFailedError(
            f"a - a^3 = {defect} is not nilpotent (a = {a})"
        )
    span = generated_subring(ring, a)
    for p in sorted(span.elements):
        if mul[mul[p][p]][p] == p and is_nilpotent(ring, ring.sub(a, p)):
            return LiftResult(p, ring.sub(a, p), 0)
    raise AssertionError("no tripotent lift found despite valid preconditions")


def tripotent_split(ring: RingTable, p: int) -> tuple[int, int]:
    """Split a tripotent p as e - f with e = (p^2+p)/2, f = (p^2-p)/2.

    Requires 2 invertible and p^3 = p; then e and f are orthogonal
    idempotents with e + f = p^2.
    """
    inv2 = inverse_of_two(ring)
    if inv2 is None:
        raise PreconditionFailedError("2 is not a unit in this ring")
    mul = ring.mul
    p2 = mul[p][p]
    if mul[p2][p] != p:
        raise PreconditionFailedError(f"element {p} is not tripotent")
    e = mul[inv2][ring.add[p2][p]]
    f = mul[inv2][ring.sub(p2, p)]
    return e, f


def inverse_of_two(ring: RingTable) -> int | None:
    """Inverse of 1 + 1, found by scanning, or None when 2 is not a unit."""
    cached = ring._cache.get("inverse_of_two", -1)
    if cached == -1:
        mul = ring.mul
        two = ring.add[ring.one][ring.one]
        cached = next(
            (
                y
                for y in ring.elements
                if mul[two][y] == ring.one and mul[y][two] == ring.one
            ),
            None,
        )
        ring._cache["inverse_of_two"] = cached
    return cached
