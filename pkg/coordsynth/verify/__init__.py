from .types import (
    HOLDS,
    AgentAlphabet,
    CheckKind,
    Counterexample,
    GroupingPlan,
    Verdict,
    format_groups,
    parse_groups,
    shared_events,
)
from .controllability import is_controllable
from .observer import is_lcc, is_observer
from .decomposability import (
    group_specification,
    is_conditionally_decomposable,
    is_decomposable,
    is_separable,
    is_two_level_decomposable,
)
from .conditional import is_conditionally_controllable, is_two_level_conditionally_controllable
from .coobservability import DEFAULT_MAX_AGENTS, check_shared_consistency, is_coobservable, lookalike_ok

__all__ = (
    "HOLDS",
    "AgentAlphabet",
    "CheckKind",
    "Counterexample",
    "GroupingPlan",
    "Verdict",
    "format_groups",
    "parse_groups",
    "shared_events",
    "is_controllable",
    "is_lcc",
    "is_observer",
    "group_specification",
    "is_conditionally_decomposable",
    "is_decomposable",
    "is_separable",
    "is_two_level_decomposable",
    "is_conditionally_controllable",
    "is_two_level_conditionally_controllable",
    "DEFAULT_MAX_AGENTS",
    "check_shared_consistency",
    "is_coobservable",
    "lookalike_ok",
)
