from .generator import EVENT_PATTERN, Alphabet, Event, Generator, Word, alphabet, build, check_event, show_word, trim, word
from .operations import (
    Inclusion,
    InclusionMode,
    empty,
    enumerate_bounded,
    epsilon,
    from_words,
    inverse_project,
    language_equal,
    language_includes,
    minimize,
    project,
    shortlex,
    trace_path,
    sync_product,
    union,
    universal,
    widen,
)

__all__ = (
    "EVENT_PATTERN",
    "Alphabet",
    "Event",
    "Generator",
    "Word",
    "alphabet",
    "build",
    "check_event",
    "show_word",
    "trim",
    "word",
    "Inclusion",
    "InclusionMode",
    "empty",
    "enumerate_bounded",
    "epsilon",
    "from_words",
    "inverse_project",
    "language_equal",
    "language_includes",
    "minimize",
    "project",
    "shortlex",
    "trace_path",
    "sync_product",
    "union",
    "universal",
    "widen",
)
