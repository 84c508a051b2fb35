"""Rowmotion on antichains of root posets.

A pure-integer engine for finite posets and the rowmotion operator
(antichain -> maximal elements of the complement of its upper ideal),
with constructors for the positive-root posets of the irreducible root
systems, the type-A oy invariant and duality, and an exhaustive verifier
for a catalogue of orbit-structure claims.
"""

from .poset import (
    Antichain,
    CycleDetected,
    FileFormatError,
    Grading,
    HypothesesNotMet,
    NotAMember,
    NotAnAntichain,
    Orbit,
    Poset,
    PosetError,
    SizeLimitExceeded,
    UnknownLabel,
    from_cover_relations,
    isomorphism,
    load_poset_file,
    parse_poset_text,
    size_limit,
)
from .roots import (
    FULL,
    NO_SIMPLE,
    SHORT,
    SHORT_NO_SIMPLE,
    ConventionMismatch,
    InvalidRank,
    NoShortRoots,
    RootPoset,
    RootSystem,
    RootSystemError,
    UnsupportedVariant,
    Variant,
    build,
    height_geq,
    parabolic,
    parse_variant,
)
from .typea import (
    NotTypeA,
    TwoRowArray,
    ambient,
    from_array,
    inverse_rowmotion_array,
    oy_difference_form,
    oy_ideal_form,
    rowmotion_array,
    star,
    to_array,
)
from .checks import (
    REGISTRY,
    Report,
    claim_ids,
    run_claims,
)

__version__ = "0.1.0"

__all__ = [
    "Antichain",
    "ConventionMismatch",
    "CycleDetected",
    "FileFormatError",
    "FULL",
    "Grading",
    "HypothesesNotMet",
    "InvalidRank",
    "NO_SIMPLE",
    "NoShortRoots",
    "NotAMember",
    "NotAnAntichain",
    "NotTypeA",
    "Orbit",
    "Poset",
    "PosetError",
    "REGISTRY",
    "Report",
    "RootPoset",
    "RootSystem",
    "RootSystemError",
    "SHORT",
    "SHORT_NO_SIMPLE",
    "SizeLimitExceeded",
    "TwoRowArray",
    "UnknownLabel",
    "UnsupportedVariant",
    "Variant",
    "ambient",
    "build",
    "claim_ids",
    "from_array",
    "from_cover_relations",
    "height_geq",
    "inverse_rowmotion_array",
    "isomorphism",
    "load_poset_file",
    "oy_difference_form",
    "oy_ideal_form",
    "parabolic",
    "parse_poset_text",
    "parse_variant",
    "rowmotion_array",
    "run_claims",
    "size_limit",
    "star",
    "to_array",
]
