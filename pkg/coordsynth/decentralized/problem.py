from __future__ import annotations

from dataclasses import dataclass, field

from automata import Alphabet, Generator
from synthesis import ExtensionStep, SynthesisResult
from verify import AgentAlphabet, Verdict


@dataclass(frozen=True)
class DecentralizedProblem:
    """Global plant L over Σ, specification K ⊆ L and the agents' sensing and actuation.

    ``groups``, ``coordinator_alphabets`` and ``high_level`` are optional
    overrides of what ``solve`` would otherwise compute.
    """

    plant: Generator
    spec: Generator
    agents: tuple[AgentAlphabet, ...]
    groups: tuple[tuple[int, ...], ...] | None = None
    coordinator_alphabets: tuple[Alphabet, ...] | None = None
    high_level: Alphabet | None = None


@dataclass(frozen=True)
class Translation:
    """The decentralized problem restated as a coordination problem over A_i = Σ_{o,i}."""

    plants: tuple[Generator, ...]
    spec: Generator
    alphabets: tuple[Alphabet, ...]
    controllable: tuple[Alphabet, ...]
    agents: tuple[AgentAlphabet, ...]
    uncontrollable: Alphabet


@dataclass(frozen=True)
class CommunicationMap:
    receive: dict[int, Alphabet]
    coordinator_alphabets: dict[int, Alphabet]
    group_of: dict[int, int]

    def to_text(self) -> str:
        lines = []
        for j in sorted(self.coordinator_alphabets):
            lines.append(f"coordinator {j}: {' '.join(sorted(self.coordinator_alphabets[j]))}".rstrip())
        for i in sorted(self.receive):
            lines.append(f"agent {i} group {self.group_of[i]} receives: {' '.join(sorted(self.receive[i]))}".rstrip())
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Solution:
    supervisors: dict[int, Generator]
    communication: CommunicationMap
    result: SynthesisResult
    enriched: tuple[AgentAlphabet, ...]
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    provenance: tuple[ExtensionStep, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return all(self.verdicts.values()) and self.result.tier.optimal
