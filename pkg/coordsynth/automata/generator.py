from __future__ import annotations

import re
from collections import deque
from typing import Iterable, Iterator, Mapping, Sequence

from utils.errors import InvalidRequestError

EVENT_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")

Event = str
Word = tuple[str, ...]
Alphabet = frozenset[str]


def check_event(name: str) -> str:
    if not isinstance(name, str) or not EVENT_PATTERN.match(name):
        raise InvalidRequestError(f"Invalid event name {name!r}")
    return name


def alphabet(events: Iterable[str] | str = ()) -> Alphabet:
    """Build an alphabet from names; a string is split on commas and whitespace."""
    if isinstance(events, str):
        events = [e for e in re.split(r"[,\s]+", events) if e]
    return frozenset(check_event(e) for e in events)


def word(events: Iterable[str] | str = ()) -> Word:
    if isinstance(events, str):
        events = events.split()
    return tuple(check_event(e) for e in events)


def show_word(w: Sequence[str]) -> str:
    return " ".join(w)


class Generator:
    """Deterministic finite automaton whose states are all accepting.

    The language is prefix-closed by construction. A generator with no states
    stands for the empty language (not even the empty word). Instances are
    never mutated after construction; operations return new generators in
    canonical form (see ``trim``).
    """

    __slots__ = ("_alphabet", "_controllable", "_succ", "_initial")

    def __init__(
        self,
        events: Iterable[str],
        transitions: Iterable[tuple[int, str, int]],
        num_states: int,
        initial: int = 0,
        controllable: Iterable[str] = (),
    ):
        self._alphabet: Alphabet = alphabet(events)
        self._controllable: Alphabet = alphabet(controllable)
        if not self._controllable <= self._alphabet:
            raise InvalidRequestError(
                f"Controllable events {sorted(self._controllable - self._alphabet)} not in alphabet"
            )
        if num_states < 0:
            raise InvalidRequestError("Number of states must be nonnegative")
        if num_states and not 0 <= initial < num_states:
            raise InvalidRequestError(f"Initial state {initial} out of range 0..{num_states - 1}")

        succ: list[dict[str, int]] = [{} for _ in range(num_states)]
        for src, event, dst in transitions:
            if not (0 <= src < num_states and 0 <= dst < num_states):
                raise InvalidRequestError(f"Transition {src} {event} {dst} uses an unknown state")
            if event not in self._alphabet:
                raise InvalidRequestError(f"Transition {src} {event} {dst} uses undeclared event {event!r}")
            if event in succ[src]:
                raise InvalidRequestError(f"Nondeterministic transitions on ({src}, {event})")
            succ[src][event] = dst
        self._succ: tuple[dict[str, int], ...] = tuple(succ)
        self._initial: int = initial if num_states else 0

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def controllable(self) -> Alphabet:
        return self._controllable

    @property
    def uncontrollable(self) -> Alphabet:
        return self._alphabet - self._controllable

    @property
    def initial(self) -> int:
        return self._initial

    @property
    def num_states(self) -> int:
        return len(self._succ)

    @property
    def num_transitions(self) -> int:
        return sum(len(s) for s in self._succ)

    @property
    def is_empty(self) -> bool:
        return not self._succ

    def successors(self, state: int) -> Mapping[str, int]:
        return self._succ[state]

    def step(self, state: int, event: str) -> int | None:
        return self._succ[state].get(event)

    def enabled(self, state: int) -> frozenset[str]:
        return frozenset(self._succ[state])

    def transitions(self) -> Iterator[tuple[int, str, int]]:
        for src, succ in enumerate(self._succ):
            for event in sorted(succ):
                yield src, event, succ[event]

    def run(self, w: Iterable[str]) -> int | None:
        """State reached by ``w`` from the initial state, ``None`` when ``w`` is not generated."""
        if self.is_empty:
            return None
        state: int | None = self._initial
        for event in w:
            state = self._succ[state].get(event)
            if state is None:
                return None
        return state

    def accepts(self, w: Iterable[str]) -> bool:
        return self.run(w) is not None

    def with_controllable(self, controllable: Iterable[str]) -> Generator:
        return Generator(
            self._alphabet,
            self.transitions(),
            self.num_states,
            self._initial,
            alphabet(controllable) & self._alphabet,
        )

    def is_canonical(self) -> bool:
        return self == trim(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Generator):
            return NotImplemented
        return (
            self._alphabet == other._alphabet
            and self._controllable == other._controllable
            and self._initial == other._initial
            and self._succ == other._succ
        )

    def __hash__(self) -> int:
        return hash((self._alphabet, self.num_states, self.num_transitions, self._initial))

    def __repr__(self) -> str:
        return (
            f"Generator(states={self.num_states}, transitions={self.num_transitions}, "
            f"alphabet={{{', '.join(sorted(self._alphabet))}}})"
        )


def trim(g: Generator) -> Generator:
    """Reachable part of ``g``, renumbered by breadth-first discovery with events taken in name order."""
    if g.is_empty:
        return g
    order = {g.initial: 0}
    queue = deque([g.initial])
    transitions = []
    while queue:
        q = queue.popleft()
        succ = g.successors(q)
        for event in sorted(succ):
            dst = succ[event]
            if dst not in order:
                order[dst] = len(order)
                queue.append(dst)
            transitions.append((order[q], event, order[dst]))
    return Generator(g.alphabet, transitions, len(order), 0, g.controllable)


def build(
    events: Iterable[str],
    states: Mapping[object, Mapping[str, object]],
    initial: object,
    controllable: Iterable[str] = (),
) -> Generator:
    """Canonical generator from a transition map keyed by arbitrary hashable state labels.

    Only states reachable from ``initial`` are kept.
    """
    events = alphabet(events)
    order = {initial: 0}
    queue = deque([initial])
    transitions = []
    while queue:
        q = queue.popleft()
        succ = states.get(q, {})
        for event in sorted(succ):
            dst = succ[event]
            if dst not in order:
                order[dst] = len(order)
                queue.append(dst)
            transitions.append((order[q], event, order[dst]))
    return Generator(events, transitions, len(order), 0, alphabet(controllable) & events)
