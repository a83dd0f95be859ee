"""Paths and loaders for the automata under ``fixtures/``."""
from __future__ import annotations

import os

from automata import Generator
from formats import read_automaton, read_composed
from verify import AgentAlphabet, GroupingPlan

FIXTURES: str = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def fixture(*parts: str) -> str:
    return os.path.join(FIXTURES, *parts)


def example_plant() -> Generator:
    """L = M1 ‖ M2."""
    return read_composed([fixture("example", "M1.aut"), fixture("example", "M2.aut")])


def example_spec() -> Generator:
    """K = M1 ‖ K2."""
    return read_composed([fixture("example", "M1.aut"), fixture("example", "K2.aut")])


def f1() -> tuple[Generator, Generator]:
    """(L, K) with L = pref{a b, a u b} and K = pref{a b}."""
    return read_automaton(fixture("f1", "L.aut")), read_automaton(fixture("f1", "K.aut"))


# controllable sets already restricted to the plant's controllable events
EXAMPLE_AGENTS: tuple[AgentAlphabet, ...] = (
    AgentAlphabet.of("a b u1 u", "a", "agent1"),
    AgentAlphabet.of("a b u2 u", "a", "agent2"),
    AgentAlphabet.of("v b v1 b1", "v v1 b1", "agent3"),
    AgentAlphabet.of("v b v2 b2", "v v2 b2", "agent4"),
)

EXAMPLE_PLAN: GroupingPlan = GroupingPlan(
    ((1, 2), (3, 4)),
    (frozenset({"a", "u", "b"}), frozenset({"v1", "b2", "v", "b"})),
    frozenset({"b"}),
)
