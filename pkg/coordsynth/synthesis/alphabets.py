from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from automata import Alphabet, Generator, Word, show_word
from utils.errors import InvalidRequestError
from verify import GroupingPlan, Verdict, group_specification, is_decomposable, is_observer, shared_events

logger: logging.Logger = logging.getLogger("synthesis")


@dataclass(frozen=True)
class ExtensionStep:
    """One event added to a coordinator alphabet (group 0 is the high level)."""

    group: int
    event: str
    reason: str
    witness: Word

    def __str__(self) -> str:
        return f"{self.event} ({self.reason}: '{show_word(self.witness)}')"


def _pick(witness: Word, current: Alphabet, fallback: Iterable[str]) -> tuple[str, str]:
    candidates = sorted(set(witness) - current)
    if candidates:
        return candidates[0], "witness"
    rest = sorted(set(fallback) - current)
    return rest[0], "fallback"


def _extend(
    seed: Alphabet,
    universe: Alphabet,
    check: Callable[[Alphabet], Verdict],
    group: int,
    reason: str,
) -> tuple[Alphabet, list[ExtensionStep]]:
    current = frozenset(seed)
    steps: list[ExtensionStep] = []
    while True:
        verdict = check(current)
        if verdict:
            return current, steps
        assert verdict.counterexample is not None
        witness = verdict.counterexample.word
        if verdict.counterexample.event is not None:
            witness = witness + (verdict.counterexample.event,)
        if universe <= current:
            return current, steps
        event, how = _pick(witness, current, universe)
        step = ExtensionStep(group, event, reason if how == "witness" else f"{reason}, fallback", witness)
        logger.warning("Extending %s alphabet with %s", "high-level" if group == 0 else f"group {group}", step)
        steps.append(step)
        current = current | {event}


def build_group_alphabet(
    spec: Generator,
    group_plants: Sequence[Generator],
    seed: Iterable[str],
    ensure_observer: bool = False,
    group: int = 1,
) -> tuple[Alphabet, list[ExtensionStep]]:
    """Smallest greedy extension of ``seed`` making ``spec`` conditionally decomposable over the group.

    ``spec`` is the group specification P_{I_r+k}(K). Each round adds the
    alphabetically first event of the decomposability witness that is not
    yet in the alphabet. With ``ensure_observer`` the projection onto the
    result is then also made an observer of every group plant.
    """
    alphabets = [p.alphabet for p in group_plants]
    universe = spec.alphabet | frozenset().union(*alphabets) if alphabets else spec.alphabet
    current, steps = _extend(
        frozenset(seed),
        universe,
        lambda a: is_decomposable(spec, [x | a for x in alphabets]),
        group,
        "decomposability",
    )
    if ensure_observer:
        # repeat until a full pass over the plants adds nothing
        changed = True
        while changed:
            changed = False
            for plant in group_plants:
                current, added = _extend(
                    current,
                    plant.alphabet,
                    lambda a, p=plant: is_observer(p, a & p.alphabet),
                    group,
                    "observer",
                )
                steps.extend(added)
                changed = changed or bool(added)
    return current, steps


def build_high_level_alphabet(
    spec: Generator, group_alphabets: Sequence[Alphabet], seed: Iterable[str] | None = None
) -> tuple[Alphabet, list[ExtensionStep]]:
    seed = frozenset(seed) if seed is not None else shared_events(group_alphabets)
    return _extend(
        seed,
        spec.alphabet | frozenset().union(*group_alphabets),
        lambda a: is_decomposable(spec, [g | a for g in group_alphabets]),
        0,
        "decomposability",
    )


def build_plan(
    spec: Generator,
    plants: Sequence[Generator],
    groups: Sequence[Sequence[int]],
    coordinator_alphabets: Sequence[Iterable[str]] | None = None,
    high_level: Iterable[str] | None = None,
    extend: bool = True,
    ensure_observer: bool = False,
) -> tuple[GroupingPlan, list[ExtensionStep]]:
    """Validated grouping plan for agents 1..n with alphabets taken from ``plants``.

    User-supplied alphabets are taken as given (merged with A_k); missing
    ones start from the shared events and are extended greedily unless
    ``extend`` is off.
    """
    alphabets = [p.alphabet for p in plants]
    groups = tuple(tuple(sorted(g)) for g in groups)
    group_alphabets = [frozenset().union(*(alphabets[i - 1] for i in g)) for g in groups]
    steps: list[ExtensionStep] = []
    if coordinator_alphabets is not None and len(coordinator_alphabets) != len(groups):
        raise InvalidRequestError(
            f"Expected one coordinator alphabet per group: {len(groups)} groups, "
            f"{len(coordinator_alphabets)} alphabets given"
        )

    if high_level is not None:
        a_k = frozenset(high_level)
    elif extend:
        a_k, added = build_high_level_alphabet(spec, group_alphabets)
        steps.extend(added)
    else:
        a_k = shared_events(group_alphabets)

    coords = []
    for j, members in enumerate(groups, start=1):
        if coordinator_alphabets is not None:
            coords.append(frozenset(coordinator_alphabets[j - 1]) | a_k)
            continue
        seed = shared_events([alphabets[i - 1] for i in members]) | a_k
        if not extend:
            coords.append(seed)
            continue
        partial = GroupingPlan(groups, tuple(frozenset() for _ in groups), a_k)
        local = group_specification(spec, partial, alphabets, j)
        coord, added = build_group_alphabet(local, [plants[i - 1] for i in members], seed, ensure_observer, j)
        coords.append(coord)
        steps.extend(added)

    plan = GroupingPlan(groups, tuple(coords), a_k)
    plan.validate(alphabets)
    return plan, steps
