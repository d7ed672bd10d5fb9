"""Ring-class predicates and the equivalence cross-check.

Sixteen characterization predicates are evaluated independently by brute
force.  Seven of them form the strongly-2-nil-clean equivalence class and
seven the Zhou-nil-clean class; ``cross_check`` verifies that the members
of each class really agree on a given ring and reports any disagreement,
plus whether the two documented strictly-weaker predicates (four
idempotents / one 5-potent over squares) exceed their class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .decomposer import Kind, find_decomposition
from .elements import classify, is_nilpotent
from .rings import RingError, RingTable, int_embed


class UnknownIdError(RingError):
    pass


class CharacterizationId(str, Enum):
    S2NC_DEF = "S2NC-DEF"
    S2NC_A3 = "S2NC-A3"
    S2NC_TRIP_NIL = "S2NC-TRIP-NIL"
    S2NC_SQ_1E = "S2NC-SQ-1E"
    S2NC_SQ_2E = "S2NC-SQ-2E"
    S2NC_SQ_3E = "S2NC-SQ-3E"
    S2NC_SQ_4E = "S2NC-SQ-4E"
    S2NC_SQ_E_INV = "S2NC-SQ-E-INV"
    ZNC_DEF = "ZNC-DEF"
    ZNC_A5 = "ZNC-A5"
    ZNC_5P_NIL = "ZNC-5P-NIL"
    ZNC_SQ_1T = "ZNC-SQ-1T"
    ZNC_SQ_2T = "ZNC-SQ-2T"
    ZNC_SQ_T_INV = "ZNC-SQ-T-INV"
    ZNC_7INV_SQ_4E = "ZNC-7INV-SQ-4E"
    ZNC_SQ_5P = "ZNC-SQ-5P"


S2NC_CLASS = frozenset(
    {
        CharacterizationId.S2NC_DEF,
        CharacterizationId.S2NC_A3,
        CharacterizationId.S2NC_TRIP_NIL,
        CharacterizationId.S2NC_SQ_1E,
        CharacterizationId.S2NC_SQ_2E,
        CharacterizationId.S2NC_SQ_3E,
        CharacterizationId.S2NC_SQ_E_INV,
    }
)

ZNC_CLASS = frozenset(
    {
        CharacterizationId.ZNC_DEF,
        CharacterizationId.ZNC_A5,
        CharacterizationId.ZNC_5P_NIL,
        CharacterizationId.ZNC_SQ_1T,
        CharacterizationId.ZNC_SQ_2T,
        CharacterizationId.ZNC_SQ_T_INV,
        CharacterizationId.ZNC_7INV_SQ_4E,
    }
)

NON_EQUIVALENT = frozenset(
    {CharacterizationId.S2NC_SQ_4E, CharacterizationId.ZNC_SQ_5P}
)

DESCRIPTIONS = {
    CharacterizationId.S2NC_DEF: "every element = idempotent + idempotent + nilpotent (commuting)",
    CharacterizationId.S2NC_A3: "a - a^3 is nilpotent for every a",
    CharacterizationId.S2NC_TRIP_NIL: "every element = tripotent + nilpotent (commuting)",
    CharacterizationId.S2NC_SQ_1E: "every square = idempotent + nilpotent (commuting)",
    CharacterizationId.S2NC_SQ_2E: "every square = 2 idempotents + nilpotent (commuting)",
    CharacterizationId.S2NC_SQ_3E: "every square = 3 idempotents + nilpotent (commuting)",
    CharacterizationId.S2NC_SQ_4E: "every square = 4 idempotents + nilpotent (commuting)",
    CharacterizationId.S2NC_SQ_E_INV: "every square = idempotent + involution + nilpotent (commuting)",
    CharacterizationId.ZNC_DEF: "every element = 2 tripotents + nilpotent (commuting)",
    CharacterizationId.ZNC_A5: "a - a^5 is nilpotent for every a",
    CharacterizationId.ZNC_5P_NIL: "every element = 5-potent + nilpotent (commuting)",
    CharacterizationId.ZNC_SQ_1T: "every square = tripotent + nilpotent (commuting)",
    CharacterizationId.ZNC_SQ_2T: "every square = 2 tripotents + nilpotent (commuting)",
    CharacterizationId.ZNC_SQ_T_INV: "every square = tripotent + involution + nilpotent (commuting)",
    CharacterizationId.ZNC_7INV_SQ_4E: "7 is a unit and every square = 4 idempotents + nilpotent (commuting)",
    CharacterizationId.ZNC_SQ_5P: "every square = 5-potent + nilpotent (commuting)",
}

_E = Kind.IDEMPOTENT
_T = Kind.TRIPOTENT
_P5 = Kind.FIVE_POTENT
_V = Kind.INVOLUTION

# (quantify over squares only?, shape) for the decomposition-shaped predicates
_SHAPED = {
    CharacterizationId.S2NC_DEF: (False, (_E, _E)),
    CharacterizationId.S2NC_TRIP_NIL: (False, (_T,)),
    CharacterizationId.S2NC_SQ_1E: (True, (_E,)),
    CharacterizationId.S2NC_SQ_2E: (True, (_E, _E)),
    CharacterizationId.S2NC_SQ_3E: (True, (_E, _E, _E)),
    CharacterizationId.S2NC_SQ_4E: (True, (_E, _E, _E, _E)),
    CharacterizationId.S2NC_SQ_E_INV: (True, (_E, _V)),
    CharacterizationId.ZNC_DEF: (False, (_T, _T)),
    CharacterizationId.ZNC_5P_NIL: (False, (_P5,)),
    CharacterizationId.ZNC_SQ_1T: (True, (_T,)),
    CharacterizationId.ZNC_SQ_2T: (True, (_T, _T)),
    CharacterizationId.ZNC_SQ_T_INV: (True, (_T, _V)),
    CharacterizationId.ZNC_SQ_5P: (True, (_P5,)),
}


@dataclass(frozen=True)
class PredicateResult:
    """Truth value plus, when false, the least counterexample element."""

    holds: bool
    witness: int | None


def _power_gap_nilpotent(ring: RingTable, exponent: int) -> PredicateResult:
    # a - a^exponent nilpotent for every a; least failing a otherwise
    for a in ring.elements:
        if not is_nilpotent(ring, ring.sub(a, ring.power(a, exponent))):
            return PredicateResult(False, a)
    return PredicateResult(True, None)


def is_strongly_2_nil_clean(ring: RingTable) -> PredicateResult:
    """a - a^3 nilpotent for every a (the tightest equivalent test)."""
    return _power_gap_nilpotent(ring, 3)


def is_zhou_nil_clean(ring: RingTable) -> PredicateResult:
    """a - a^5 nilpotent for every a."""
    return _power_gap_nilpotent(ring, 5)


def check_characterization(
    ring: RingTable, cid: CharacterizationId | str
) -> PredicateResult:
    """Evaluate one predicate literally by brute force.

    Universal forms scan every element; square forms scan the image
    {x^2}; decomposition existence is delegated to the search engine.
    The witness is the least element failing the quantified clause (for
    the 7-invertibility condition, the element 7*1 itself).
    """
    try:
        cid = CharacterizationId(cid)
    except ValueError:
        known = ", ".join(c.value for c in CharacterizationId)
        raise UnknownIdError(f"unknown characterization {cid!r}; known: {known}") from None
    if cid is CharacterizationId.S2NC_A3:
        return _power_gap_nilpotent(ring, 3)
    if cid is CharacterizationId.ZNC_A5:
        return _power_gap_nilpotent(ring, 5)
    if cid is CharacterizationId.ZNC_7INV_SQ_4E:
        seven = int_embed(ring, 7)
        if seven not in classify(ring).units:
            return PredicateResult(False, seven)
        return _all_decompose(ring, True, (_E, _E, _E, _E))
    squares_only, shape = _SHAPED[cid]
    return _all_decompose(ring, squares_only, shape)


def _all_decompose(ring: RingTable, squares_only: bool, shape) -> PredicateResult:
    domain = sorted(classify(ring).squares) if squares_only else ring.elements
    for a in domain:
        if find_decomposition(ring, a, shape) is None:
            return PredicateResult(False, a)
    return PredicateResult(True, None)


@dataclass(frozen=True)
class CharacterizationReport:
    """All predicate outcomes for one ring plus class-agreement verdicts."""

    ring: str
    predicates: dict[CharacterizationId, PredicateResult]
    s2nc_consistent: bool
    znc_consistent: bool
    s2nc_disagreeing: tuple[CharacterizationId, ...]
    znc_disagreeing: tuple[CharacterizationId, ...]
    sq_4e_exceeds_s2nc: bool
    sq_5p_exceeds_znc: bool

    @property
    def consistent(self) -> bool:
        return self.s2nc_consistent and self.znc_consistent

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "predicates": {
                cid.value: {"holds": res.holds, "witness": res.witness}
                for cid, res in self.predicates.items()
            },
            "equivalences": {
                "S2NC": "consistent" if self.s2nc_consistent else "inconsistent",
                "ZNC": "consistent" if self.znc_consistent else "inconsistent",
            },
            "separations": {
                CharacterizationId.S2NC_SQ_4E.value: self.sq_4e_exceeds_s2nc,
                CharacterizationId.ZNC_SQ_5P.value: self.sq_5p_exceeds_znc,
            },
        }

    @staticmethod
    def from_json(data: dict) -> CharacterizationReport:
        predicates = {
            CharacterizationId(key): PredicateResult(val["holds"], val["witness"])
            for key, val in data["predicates"].items()
        }
        return _assemble_report(data["ring"], predicates)


def _assemble_report(
    label: str, predicates: dict[CharacterizationId, PredicateResult]
) -> CharacterizationReport:
    s2nc = predicates[CharacterizationId.S2NC_A3].holds
    znc = predicates[CharacterizationId.ZNC_A5].holds
    s2nc_disagreeing = tuple(
        sorted(
            (cid for cid in S2NC_CLASS if predicates[cid].holds != s2nc),
            key=lambda cid: cid.value,
        )
    )
    znc_disagreeing = tuple(
        sorted(
            (cid for cid in ZNC_CLASS if predicates[cid].holds != znc),
            key=lambda cid: cid.value,
        )
    )
    return CharacterizationReport(
        ring=label,
        predicates=predicates,
        s2nc_consistent=not s2nc_disagreeing,
        znc_consistent=not znc_disagreeing,
        s2nc_disagreeing=s2nc_disagreeing,
        znc_disagreeing=znc_disagreeing,
        sq_4e_exceeds_s2nc=predicates[CharacterizationId.S2NC_SQ_4E].holds
        and not s2nc,
        sq_5p_exceeds_znc=predicates[CharacterizationId.ZNC_SQ_5P].holds and not znc,
    )


def cross_check(ring: RingTable) -> CharacterizationReport:
    """Evaluate all sixteen predicates and compare each equivalence class
    against its reference member (the power-gap form); disagreements are
    reported, not raised."""
    predicates = {cid: check_characterization(ring, cid) for cid in CharacterizationId}
    return _assemble_report(ring.label, predicates)
