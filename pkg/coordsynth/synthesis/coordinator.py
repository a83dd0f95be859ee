from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from automata import Alphabet, Generator, epsilon, project, sync_product
from synthesis.alphabets import ExtensionStep


@dataclass(frozen=True)
class CoordinatorSpec:
    group: int
    alphabet: Alphabet
    coordinator: Generator
    provenance: tuple[ExtensionStep, ...] = field(default=())


def build_coordinator(
    plants: Sequence[Generator],
    events: Iterable[str],
    group: int = 1,
    provenance: Iterable[ExtensionStep] = (),
    minimize: bool = False,
) -> CoordinatorSpec:
    """G_{k_j}: product of the projections of all plants onto the coordinator alphabet."""
    events = frozenset(events)
    parts = [project(p, events & p.alphabet, minimize) for p in plants]
    controllable = frozenset().union(*(p.controllable for p in plants)) & events
    # events no plant owns never occur but stay in the coordinator alphabet
    covered = frozenset().union(*(p.alphabet for p in parts))
    parts.append(epsilon(events - covered, controllable))
    coordinator = sync_product(parts)
    return CoordinatorSpec(group, events, coordinator, tuple(provenance))
