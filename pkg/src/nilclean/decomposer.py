"""Search for commuting additive decompositions.

A *shape* is an ordered tuple of part kinds (idempotent, tripotent,
5-potent, involution); every shape carries one implicit trailing nilpotent
slot.  ``find_decomposition`` looks for parts of the requested kinds that
pairwise commute (with each other, with the target, and with the leftover
nilpotent) and sum to the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .elements import classify, commutants, is_nilpotent
from .lifting import lift_idempotent, lift_tripotent, tripotent_split
from .rings import PreconditionFailedError, RingTable


class Kind(str, Enum):
    IDEMPOTENT = "idempotent"
    TRIPOTENT = "tripotent"
    FIVE_POTENT = "five-potent"
    INVOLUTION = "involution"


Shape = tuple[Kind, ...]


@dataclass(frozen=True)
class DecompositionWitness:
    """Concrete parts realizing a shape: parts[i] has kind kinds[i], the
    nilpotent fills the implicit final slot, and everything pairwise
    commutes and sums to the target."""

    kinds: tuple[Kind, ...]
    parts: tuple[int, ...]
    nilpotent: int


def _kind_pool(ring: RingTable, kind: Kind) -> tuple[int, ...]:
    cls = classify(ring)
    members = {
        Kind.IDEMPOTENT: cls.idempotents,
        Kind.TRIPOTENT: cls.tripotents,
        Kind.FIVE_POTENT: cls.five_potents,
        Kind.INVOLUTION: cls.involutions,
    }[kind]
    return tuple(sorted(members))


def find_decomposition(
    ring: RingTable, a: int, shape: Shape
) -> DecompositionWitness | None:
    """Depth-first search in shape order for the lexicographically least
    witness (by part indices), or None when no decomposition exists.

    Candidates are pruned to the commutant of the target and of all parts
    chosen so far; runs of equal kinds are searched with non-decreasing
    indices, which preserves lexicographic minimality because witnesses are
    closed under permuting equal-kind slots.  The empty shape asks whether
    the target itself is nilpotent.
    """
    shape = tuple(Kind(k) for k in shape)
    comm = commutants(ring)
    nilpotents = classify(ring).nilpotents
    pools = [_kind_pool(ring, kind) for kind in shape]
    add, sub = ring.add, ring.sub
    chosen: list[int] = []

    def descend(slot: int, partial_sum: int, allowed: frozenset[int]) -> int | None:
        if slot == len(shape):
            w = sub(a, partial_sum)
            return w if w in nilpotents and w in allowed else None
        floor = 0
        for earlier in range(slot - 1, -1, -1):
            if shape[earlier] == shape[slot]:
                floor = chosen[earlier]
                break
        for cand in pools[slot]:
            if cand < floor or cand not in allowed:
                continue
            chosen.append(cand)
            found = descend(slot + 1, add[partial_sum][cand], allowed & comm[cand])
            if found is not None:
                return found
            chosen.pop()
        return None

    w = descend(0, ring.zero, comm[a])
    if w is None:
        return None
    witness = DecompositionWitness(shape, tuple(chosen), w)
    assert verify_witness(ring, a, witness), "search produced an unsound witness"
    return witness


def verify_witness(ring: RingTable, a: int, witness: DecompositionWitness) -> bool:
    """Re-check a witness from the raw tables: part kinds, pairwise
    commutation (including the nilpotent and the target), and the sum."""
    mul, one = ring.mul, ring.one
    for kind, x in zip(witness.kinds, witness.parts):
        x2 = mul[x][x]
        if kind is Kind.IDEMPOTENT and x2 != x:
            return False
        if kind is Kind.TRIPOTENT and mul[x2][x] != x:
            return False
        if kind is Kind.FIVE_POTENT and mul[mul[mul[x2][x]][x]][x] != x:
            return False
        if kind is Kind.INVOLUTION and x2 != one:
            return False
    if not is_nilpotent(ring, witness.nilpotent):
        return False
    everyone = (*witness.parts, witness.nilpotent, a)
    for i, x in enumerate(everyone):
        for y in everyone[i + 1 :]:
            if mul[x][y] != mul[y][x]:
                return False
    return ring.sum_elements((*witness.parts, witness.nilpotent)) == a


def all_squares(ring: RingTable) -> frozenset[int]:
    """The image {x^2 : x in R}."""
    return classify(ring).squares


def decompose_constructively(ring: RingTable, a: int) -> DecompositionWitness:
    """Build a decomposition by lifting instead of search.

    With 2 invertible and a - a^3 nilpotent: lift a to a tripotent p, split
    p = e - f, and return a = [(1-e) - f] + (2e - 1) + (a - p) with shape
    (tripotent, involution).  Otherwise, with a - a^2 nilpotent: lift a to
    an idempotent e and return a = (1 - e) + (2e - 1) + (a - e) with shape
    (idempotent, involution).
    """
    add, mul, sub, one = ring.add, ring.mul, ring.sub, ring.one
    try:
        lift = lift_tripotent(ring, a)
    except PreconditionFailedError as tripotent_failure:
        defect = sub(a, mul[a][a])
        if not is_nilpotent(ring, defect):
            raise PreconditionFailedError(
                f"no constructive route for element {a}: {tripotent_failure}; "
                f"and a - a^2 = {defect} is not nilpotent"
            ) from None
        e = lift_idempotent(ring, a).lifted
        witness = DecompositionWitness(
            (Kind.IDEMPOTENT, Kind.INVOLUTION),
            (sub(one, e), sub(add[e][e], one)),
            sub(a, e),
        )
    else:
        e, f = tripotent_split(ring, lift.lifted)
        witness = DecompositionWitness(
            (Kind.TRIPOTENT, Kind.INVOLUTION),
            (sub(sub(one, e), f), sub(add[e][e], one)),
            lift.difference,
        )
    assert verify_witness(ring, a, witness), "constructive route produced an unsound witness"
    return witness
