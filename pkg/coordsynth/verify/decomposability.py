from __future__ import annotations

from typing import Iterable, Sequence

from automata import Alphabet, Generator, alphabet, language_includes, project, sync_product
from utils.errors import InvalidRequestError
from verify.types import HOLDS, CheckKind, Counterexample, GroupingPlan, Verdict


def is_decomposable(spec: Generator, pieces: Sequence[Iterable[str]], group: int | None = None) -> Verdict:
    """L(spec) equals the product of its projections onto ``pieces``.

    Only ‖ P_i(K) ⊆ K is tested, the other inclusion always holds. The
    witness is the shortest word of the product outside L(spec).
    """
    pieces = [alphabet(p) for p in pieces]
    if not pieces:
        raise InvalidRequestError("Decomposability needs at least one alphabet")
    covered = frozenset().union(*pieces)
    if not spec.alphabet <= covered:
        raise InvalidRequestError(
            f"Alphabets do not cover the specification events {' '.join(sorted(spec.alphabet - covered))}"
        )
    composed = sync_product([project(spec, p & spec.alphabet) for p in pieces])
    inclusion = language_includes(spec, composed)
    if inclusion.holds:
        return HOLDS
    assert inclusion.witness is not None
    return Verdict(False, Counterexample(CheckKind.DECOMPOSABILITY, inclusion.witness, group=group))


def is_conditionally_decomposable(spec: Generator, alphabets: Sequence[Alphabet], coordinator: Alphabet) -> Verdict:
    return is_decomposable(spec, [a | coordinator for a in alphabets])


def is_separable(spec: Generator, observations: Sequence[Alphabet]) -> Verdict:
    """Decomposability w.r.t. the agents' observation sets (events nobody observes stay with the spec)."""
    rest = spec.alphabet - frozenset().union(*observations) if observations else spec.alphabet
    pieces = list(observations) + ([rest] if rest else [])
    return is_decomposable(spec, pieces)


def group_specification(spec: Generator, plan: GroupingPlan, alphabets: Sequence[Alphabet], group: int) -> Generator:
    members = frozenset().union(*(alphabets[i - 1] for i in plan.groups[group - 1]))
    return project(spec, (members | plan.high_level_shared) & spec.alphabet)


def is_two_level_decomposable(spec: Generator, plan: GroupingPlan, alphabets: Sequence[Alphabet]) -> Verdict:
    """Two-level conditional decomposability: the top-level split over groups, then each group's split."""
    top = [
        frozenset().union(*(alphabets[i - 1] for i in members)) | plan.high_level_shared for members in plan.groups
    ]
    verdict = is_decomposable(spec, top, group=0)
    if not verdict:
        return verdict
    for j, members in enumerate(plan.groups, start=1):
        local = group_specification(spec, plan, alphabets, j)
        coord = plan.coordinator_alphabet(j) | plan.high_level_shared
        verdict = is_decomposable(local, [alphabets[i - 1] | coord for i in members], group=j)
        if not verdict:
            return verdict
    return HOLDS
