"""nilclean: a computational laboratory for finite unital rings.

Build small rings as explicit Cayley tables, classify their elements
(nilpotents, idempotents, tripotents, 5-potents, involutions, units,
squares), search for commuting additive decompositions, and cross-check
the equivalence of the strongly-2-nil-clean and Zhou-nil-clean
characterizations by exhaustive computation.
"""

from .catalog import CatalogEntry, UnknownNameError, get_ring, survey_set
from .classifier import (
    NON_EQUIVALENT,
    S2NC_CLASS,
    ZNC_CLASS,
    CharacterizationId,
    CharacterizationReport,
    PredicateResult,
    UnknownIdError,
    check_characterization,
    cross_check,
    is_strongly_2_nil_clean,
    is_zhou_nil_clean,
)
from .decomposer import (
    DecompositionWitness,
    Kind,
    all_squares,
    decompose_constructively,
    find_decomposition,
    verify_witness,
)
from .elements import (
    ElementClassification,
    classify,
    commute,
    is_nilpotent,
    nilpotency_index,
)
from .lifting import (
    GeneratedSubring,
    LiftResult,
    generated_subring,
    inverse_of_two,
    lift_idempotent,
    lift_tripotent,
    tripotent_split,
)
from .rings import (
    DEFAULT_ORDER_CAP,
    AxiomViolation,
    Corner,
    InvalidRingError,
    NotCentralError,
    NotIdempotentError,
    NotPrimeError,
    OrderCapExceededError,
    PreconditionFailedError,
    PrimaryDecomposition,
    PrimaryFactor,
    RingError,
    RingTable,
    characteristic,
    corner_ring,
    find_isomorphism,
    int_embed,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zn,
    primary_decomposition,
    ring_from_json,
    ring_to_json,
    validate_ring,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "CatalogEntry",
    "CharacterizationId",
    "CharacterizationReport",
    "Corner",
    "DecompositionWitness",
    "DEFAULT_ORDER_CAP",
    "ElementClassification",
    "GeneratedSubring",
    "InvalidRingError",
    "Kind",
    "LiftResult",
    "NON_EQUIVALENT",
    "NotCentralError",
    "NotIdempotentError",
    "NotPrimeError",
    "OrderCapExceededError",
    "PreconditionFailedError",
    "PredicateResult",
    "PrimaryDecomposition",
    "PrimaryFactor",
    "RingError",
    "RingTable",
    "S2NC_CLASS",
    "UnknownIdError",
    "UnknownNameError",
    "ZNC_CLASS",
    "all_squares",
    "characteristic",
    "check_characterization",
    "classify",
    "commute",
    "corner_ring",
    "cross_check",
    "decompose_constructively",
    "find_decomposition",
    "find_isomorphism",
    "generated_subring",
    "get_ring",
    "int_embed",
    "inverse_of_two",
    "is_nilpotent",
    "is_strongly_2_nil_clean",
    "is_zhou_nil_clean",
    "lift_idempotent",
    "lift_tripotent",
    "make_gf",
    "make_matrix_ring",
    "make_product",
    "make_zn",
    "nilpotency_index",
    "primary_decomposition",
    "ring_from_json",
    "ring_to_json",
    "survey_set",
    "tripotent_split",
    "validate_ring",
    "verify_witness",
]
