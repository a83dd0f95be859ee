from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Sequence

from automata import Alphabet, Generator, alphabet, project, sync_product
from utils.errors import InvalidRequestError
from verify.controllability import is_controllable
from verify.types import HOLDS, CheckKind, GroupingPlan, Verdict


def _check_items(
    spec: Generator,
    plants: Sequence[Generator],
    members: Sequence[int],
    coordinator: Generator,
    coord_alphabet: Alphabet,
    uncontrollable: Alphabet,
    group: int | None,
) -> Verdict:
    coord_spec = project(spec, coord_alphabet & spec.alphabet)
    verdict = is_controllable(coord_spec, coordinator, uncontrollable & coord_alphabet, CheckKind.CC_ITEM1)
    if not verdict:
        assert verdict.counterexample is not None
        return replace(verdict, counterexample=replace(verdict.counterexample, group=group))
    for i in members:
        local = plants[i - 1].alphabet | coord_alphabet
        local_spec = project(spec, local & spec.alphabet)
        local_plant = sync_product([plants[i - 1], coord_spec])
        verdict = is_controllable(local_spec, local_plant, uncontrollable & local, CheckKind.CC_ITEM2)
        if not verdict:
            assert verdict.counterexample is not None
            return replace(verdict, counterexample=replace(verdict.counterexample, agent=i, group=group))
    return HOLDS


def is_conditionally_controllable(
    spec: Generator,
    plants: Sequence[Generator],
    coordinator: Generator,
    coord_alphabet: Iterable[str],
    uncontrollable: Iterable[str],
) -> Verdict:
    """Item 1: P_k(K) controllable w.r.t. the coordinator. Item 2: each P_{i+k}(K) w.r.t. L(G_i) ‖ P_k(K)."""
    return _check_items(
        spec,
        plants,
        range(1, len(plants) + 1),
        coordinator,
        alphabet(coord_alphabet),
        alphabet(uncontrollable),
        None,
    )


def is_two_level_conditionally_controllable(
    spec: Generator,
    plants: Sequence[Generator],
    plan: GroupingPlan,
    coordinators: Sequence[Generator],
    uncontrollable: Iterable[str],
) -> Verdict:
    """Both items per group, with group j using its own coordinator and alphabet; first failure wins."""
    if len(coordinators) != len(plan.groups):
        raise InvalidRequestError("One coordinator per group is required")
    uncontrollable = alphabet(uncontrollable)
    for j, members in enumerate(plan.groups, start=1):
        verdict = _check_items(
            spec, plants, members, coordinators[j - 1], plan.coordinator_alphabet(j), uncontrollable, j
        )
        if not verdict:
            return verdict
    return HOLDS
