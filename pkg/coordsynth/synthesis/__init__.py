from .supervisor import closed_loop, sup_c
from .alphabets import ExtensionStep, build_group_alphabet, build_high_level_alphabet, build_plan
from .coordinator import CoordinatorSpec, build_coordinator
from .pipeline import (
    SAFE_ONLY_CAVEAT,
    GroupResult,
    SupremalResult,
    SynthesisResult,
    Tier,
    check_inclusion_lemma,
    composed_closed_loops,
    sup_two_cc,
    synthesize_two_level,
    verify_optimality,
)

__all__ = (
    "closed_loop",
    "sup_c",
    "ExtensionStep",
    "build_group_alphabet",
    "build_high_level_alphabet",
    "build_plan",
    "CoordinatorSpec",
    "build_coordinator",
    "SAFE_ONLY_CAVEAT",
    "GroupResult",
    "SupremalResult",
    "SynthesisResult",
    "Tier",
    "check_inclusion_lemma",
    "composed_closed_loops",
    "sup_two_cc",
    "synthesize_two_level",
    "verify_optimality",
)
