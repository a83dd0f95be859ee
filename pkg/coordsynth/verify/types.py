from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from automata import Alphabet, Word, alphabet, show_word
from utils.errors import InvalidRequestError


class CheckKind(str, Enum):
    CONTROLLABILITY = "controllability"
    OBSERVER = "observer"
    LCC = "lcc"
    OCC = "occ"
    DECOMPOSABILITY = "decomposability"
    COOBSERVABILITY = "coobservability"
    CC_ITEM1 = "cond-controllability-item1"
    CC_ITEM2 = "cond-controllability-item2"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Counterexample:
    """Witness of a failed check.

    ``agent`` and ``group`` are 1-based numbers; group 0 denotes the top level.
    ``lookalikes`` lists, per agent able to control ``event``, a word it
    cannot tell apart from ``word`` after which ``event`` is legal.
    """

    kind: CheckKind
    word: Word
    event: str | None = None
    agent: int | None = None
    group: int | None = None
    lookalikes: tuple[tuple[int, Word], ...] = ()

    def __str__(self) -> str:
        text = f"{self.kind.value}: '{show_word(self.word)}'"
        if self.event is not None:
            text += f" then {self.event}"
        if self.agent is not None:
            text += f" (agent {self.agent})"
        if self.group is not None:
            text += f" (group {self.group})"
        return text


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: Counterexample | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds


HOLDS = Verdict(True)


@dataclass(frozen=True)
class AgentAlphabet:
    observable: Alphabet
    controllable: Alphabet
    name: str = ""

    @classmethod
    def of(cls, observable: Iterable[str] | str, controllable: Iterable[str] | str, name: str = "") -> AgentAlphabet:
        return cls(alphabet(observable), alphabet(controllable), name)


@dataclass(frozen=True)
class GroupingPlan:
    """Two-level organisation of agents 1..n.

    ``groups[j]`` holds the agent numbers of group j+1 and
    ``group_coordinator_alphabets[j]`` its coordinator alphabet; ``high_level_shared``
    is the alphabet of the top level.
    """

    groups: tuple[tuple[int, ...], ...]
    group_coordinator_alphabets: tuple[Alphabet, ...]
    high_level_shared: Alphabet = field(default_factory=frozenset)

    @property
    def agents(self) -> tuple[int, ...]:
        return tuple(sorted(i for g in self.groups for i in g))

    def group_of(self, agent: int) -> int:
        for j, members in enumerate(self.groups, start=1):
            if agent in members:
                return j
        raise InvalidRequestError(f"Agent {agent} is in no group")

    def coordinator_alphabet(self, group: int) -> Alphabet:
        return self.group_coordinator_alphabets[group - 1]

    def validate(self, alphabets: Sequence[Alphabet]) -> None:
        """Check the plan against the agents' alphabets (agent i has ``alphabets[i-1]``)."""
        n = len(alphabets)
        if sorted(i for g in self.groups for i in g) != list(range(1, n + 1)):
            raise InvalidRequestError(f"Groups {format_groups(self.groups)} do not partition agents 1..{n}")
        if any(not g for g in self.groups):
            raise InvalidRequestError("Empty group in grouping plan")
        if len(self.group_coordinator_alphabets) != len(self.groups):
            raise InvalidRequestError("One coordinator alphabet per group is required")
        for j, (members, coord) in enumerate(zip(self.groups, self.group_coordinator_alphabets), start=1):
            if not self.high_level_shared <= coord:
                raise InvalidRequestError(f"Coordinator alphabet of group {j} misses high-level events")
            missing = shared_events([alphabets[i - 1] for i in members]) - coord
            if missing:
                raise InvalidRequestError(
                    f"Coordinator alphabet of group {j} misses shared events {' '.join(sorted(missing))}"
                )
        between = shared_events([frozenset().union(*(alphabets[i - 1] for i in g)) for g in self.groups])
        if not between <= self.high_level_shared:
            raise InvalidRequestError(
                f"High-level alphabet misses inter-group events {' '.join(sorted(between - self.high_level_shared))}"
            )


def shared_events(alphabets: Sequence[Alphabet]) -> Alphabet:
    """Events belonging to at least two of the alphabets."""
    seen: set[str] = set()
    shared: set[str] = set()
    for a in alphabets:
        shared |= seen & a
        seen |= a
    return frozenset(shared)


def format_groups(groups: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(i) for i in g) for g in groups)


def parse_groups(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(i) for i in part.split(",") if i.strip()) for part in text.split(";") if part.strip())
    except ValueError as e:
        raise InvalidRequestError(f"Malformed group list {text!r}") from e
