from __future__ import annotations

import logging
from concurrent.futures import Executor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Sequence

from automata import (
    Alphabet,
    Generator,
    InclusionMode,
    alphabet,
    inverse_project,
    language_includes,
    project,
    sync_product,
)
from synthesis.alphabets import ExtensionStep
from synthesis.coordinator import CoordinatorSpec, build_coordinator
from synthesis.supervisor import closed_loop, sup_c
from utils.errors import DecompositionError, GeneralError
from utils.logging_setup import IMPORTANT
from verify import (
    HOLDS,
    CheckKind,
    Counterexample,
    GroupingPlan,
    Verdict,
    is_controllable,
    is_lcc,
    is_observer,
    is_two_level_decomposable,
)

logger: logging.Logger = logging.getLogger("synthesis")

SAFE_ONLY_CAVEAT: str = (
    "no optimality condition verified: the result is controllable and within the specification, "
    "but maximal permissiveness cannot be guaranteed"
)


class Tier(str, Enum):
    OPTIMAL_THM3 = "OPTIMAL_THM3"
    OPTIMAL_COR1 = "OPTIMAL_COR1"
    OPTIMAL_LCC = "OPTIMAL_LCC"
    SAFE_ONLY = "SAFE_ONLY"

    @property
    def optimal(self) -> bool:
        return self is not Tier.SAFE_ONLY


@dataclass(frozen=True)
class GroupResult:
    group: int
    coordinator: CoordinatorSpec
    supervisor: Generator
    agents: tuple[tuple[int, Generator], ...]


@dataclass(frozen=True)
class SynthesisResult:
    plan: GroupingPlan
    groups: tuple[GroupResult, ...]
    global_language: Generator
    tier: Tier = Tier.SAFE_ONLY
    condition_report: dict[str, Verdict] = field(default_factory=dict)
    provenance: tuple[ExtensionStep, ...] = ()

    @property
    def coordinators(self) -> tuple[Generator, ...]:
        return tuple(g.coordinator.coordinator for g in self.groups)

    @property
    def sup_coordinators(self) -> tuple[Generator, ...]:
        return tuple(g.supervisor for g in self.groups)

    @property
    def supervisors(self) -> dict[int, Generator]:
        return {i: sup for g in self.groups for i, sup in g.agents}


def _suggestion(witness: Sequence[str], current: Alphabet) -> str | None:
    candidates = sorted(set(witness) - current)
    return candidates[0] if candidates else None


def _synthesize_group(
    group: int,
    plants: Sequence[Generator],
    spec: Generator,
    plan: GroupingPlan,
    uncontrollable: Alphabet,
    provenance: tuple[ExtensionStep, ...],
    minimize: bool,
) -> GroupResult:
    logger.log(IMPORTANT, "SYNTHESIZING GROUP %d", group)
    events = plan.coordinator_alphabet(group)
    coordinator = build_coordinator(plants, events, group, (s for s in provenance if s.group == group), minimize)
    coord_spec = project(spec, events & spec.alphabet, minimize)
    supervisor = sup_c(coord_spec, coordinator.coordinator, uncontrollable & events)

    agents = []
    for i in plan.groups[group - 1]:
        local = plants[i - 1].alphabet | events
        local_spec = project(spec, local & spec.alphabet, minimize)
        local_plant = sync_product([plants[i - 1], supervisor])
        agents.append((i, sup_c(local_spec, local_plant, uncontrollable & local)))
        logger.info("Group %d agent %d supervisor: %r", group, i, agents[-1][1])
    return GroupResult(group, coordinator, supervisor, tuple(agents))


def synthesize_two_level(
    plants: Sequence[Generator],
    spec: Generator,
    plan: GroupingPlan,
    uncontrollable: Iterable[str],
    executor: Executor | None = None,
    provenance: Iterable[ExtensionStep] = (),
    minimize: bool = False,
) -> SynthesisResult:
    """Coordinator supervisors per group, then one supervisor per agent against its plant and coordinator.

    Raises ``DecompositionError`` when the specification is not two-level
    conditionally decomposable for ``plan``. Groups are independent and run
    on ``executor`` when one is given.
    """
    uncontrollable = alphabet(uncontrollable)
    provenance = tuple(provenance)
    alphabets = [p.alphabet for p in plants]
    plan.validate(alphabets)

    verdict = is_two_level_decomposable(spec, plan, alphabets)
    if not verdict:
        cex = verdict.counterexample
        assert cex is not None
        current = plan.high_level_shared if not cex.group else plan.coordinator_alphabet(cex.group)
        level = "high level" if not cex.group else f"group {cex.group}"
        raise DecompositionError(
            f"Specification is not conditionally decomposable at the {level}: '{' '.join(cex.word)}'",
            witness=cex.word,
            group=cex.group or 0,
            suggestion=_suggestion(cex.word, current),
        )

    group_ids = range(1, len(plan.groups) + 1)

    def run(j: int) -> GroupResult:
        return _synthesize_group(j, plants, spec, plan, uncontrollable, provenance, minimize)

    if executor is not None:
        groups = tuple(executor.map(run, group_ids))
    else:
        groups = tuple(run(j) for j in group_ids)

    local = [sup for g in groups for _, sup in sorted(g.agents, key=lambda item: item[0])]
    global_language = sync_product(local)
    result = SynthesisResult(plan, groups, global_language, provenance=provenance)

    report: dict[str, Verdict] = {}
    inside = language_includes(spec, global_language)
    report["safety.within_spec"] = (
        HOLDS if inside else Verdict(False, Counterexample(CheckKind.INCLUSION, inside.witness or ()))
    )
    report["safety.controllable"] = is_controllable(global_language, sync_product(plants), uncontrollable)
    for key in ("safety.within_spec", "safety.controllable"):
        if not report[key]:
            raise GeneralError(f"Two-level supervisor violates {key}: {report[key].counterexample}")

    tier, conditions = verify_optimality(result, plants, plan, uncontrollable)
    report.update(conditions)
    logger.log(IMPORTANT, "SYNTHESIS DONE, TIER %s", tier.value)
    return replace(result, tier=tier, condition_report=report)


def _high_level_hypothesis(
    group: GroupResult, plan: GroupingPlan, uncontrollable: Alphabet, projected: Generator
) -> Verdict:
    if len(plan.groups) == 1:
        return Verdict(True, note="single group")
    coordinator = group.coordinator.coordinator
    a_k = plan.high_level_shared & coordinator.alphabet
    observer = is_observer(coordinator, a_k)
    occ = is_lcc(coordinator, a_k, uncontrollable, strict_occ=True)
    if observer and occ:
        return Verdict(True, note="observer and occ")
    direct = is_controllable(project(projected, a_k), project(coordinator, a_k), uncontrollable & a_k)
    if direct:
        return Verdict(True, note="high-level projection controllable")
    failed = observer if not observer else occ
    return Verdict(False, failed.counterexample, note="observer/occ and direct check both fail")


def verify_optimality(
    result: SynthesisResult,
    plants: Sequence[Generator],
    plan: GroupingPlan,
    uncontrollable: Iterable[str],
) -> tuple[Tier, dict[str, Verdict]]:
    """Evaluate the three sufficient conditions for maximal permissiveness; all verdicts are reported."""
    uncontrollable = alphabet(uncontrollable)
    report: dict[str, Verdict] = {}
    passes = {Tier.OPTIMAL_THM3: True, Tier.OPTIMAL_COR1: True, Tier.OPTIMAL_LCC: True}

    for group in result.groups:
        j = group.group
        events = plan.coordinator_alphabet(j)
        coordinator = group.coordinator.coordinator
        projections = {i: project(sup, events & sup.alphabet) for i, sup in group.agents}
        joint = sync_product(list(projections.values()))

        high = _high_level_hypothesis(group, plan, uncontrollable, joint)
        report[f"group.{j}.high_level"] = high

        thm3 = is_controllable(joint, coordinator, uncontrollable & events)
        report[f"group.{j}.thm3"] = thm3
        passes[Tier.OPTIMAL_THM3] &= bool(high) and bool(thm3)

        cor1 = bool(high)
        lcc_ok = bool(high)
        for i, sup in group.agents:
            same = language_includes(group.supervisor, projections[i], InclusionMode.EQUAL)
            verdict = HOLDS if same else Verdict(False, Counterexample(CheckKind.INCLUSION, same.witness or (), agent=i))
            report[f"group.{j}.cor1.agent.{i}"] = verdict
            cor1 &= bool(verdict)

            local = plants[i - 1].alphabet | events
            lifted = inverse_project(plants[i - 1], local)
            observer = is_observer(lifted, events)
            lcc = is_lcc(lifted, events, uncontrollable & local)
            report[f"group.{j}.lcc.agent.{i}.observer"] = observer
            report[f"group.{j}.lcc.agent.{i}.lcc"] = lcc
            lcc_ok &= bool(observer) and bool(lcc)
        passes[Tier.OPTIMAL_COR1] &= cor1
        passes[Tier.OPTIMAL_LCC] &= lcc_ok

    for tier in (Tier.OPTIMAL_THM3, Tier.OPTIMAL_COR1, Tier.OPTIMAL_LCC):
        report[f"tier.{tier.value}"] = Verdict(passes[tier])
    for tier in (Tier.OPTIMAL_THM3, Tier.OPTIMAL_COR1, Tier.OPTIMAL_LCC):
        if passes[tier]:
            return tier, report
    logger.warning("Optimality not verified: %s", SAFE_ONLY_CAVEAT)
    report["tier.SAFE_ONLY"] = Verdict(True, note=SAFE_ONLY_CAVEAT)
    return Tier.SAFE_ONLY, report


def composed_closed_loops(result: SynthesisResult, plants: Sequence[Generator]) -> Generator:
    """‖ over all agents of the closed loop of supC_{i+k_j} with G_i and its coordinator's closed loop."""
    loops = []
    for group in result.groups:
        coordinator_loop = closed_loop(group.supervisor, group.coordinator.coordinator)
        for i, sup in group.agents:
            loops.append(closed_loop(sup, sync_product([plants[i - 1], coordinator_loop])))
    return sync_product(loops)


def check_inclusion_lemma(result: SynthesisResult) -> bool:
    """P_{k_j}(supC_{i+k_j}) ⊆ supC_{k_j} for every agent; false means a bug, the inclusion is unconditional."""
    for group in result.groups:
        events = group.coordinator.alphabet
        for _, sup in group.agents:
            if not language_includes(group.supervisor, project(sup, events & sup.alphabet)):
                return False
    return True


@dataclass(frozen=True)
class SupremalResult:
    language: Generator
    optimal: bool
    result: SynthesisResult


def sup_two_cc(
    plants: Sequence[Generator],
    spec: Generator,
    plan: GroupingPlan,
    uncontrollable: Iterable[str],
    executor: Executor | None = None,
) -> SupremalResult:
    """The supremal two-level conditionally controllable sublanguage, exact when a tier is verified.

    Otherwise the returned language is still safe and flagged as possibly smaller.
    """
    result = synthesize_two_level(plants, spec, plan, uncontrollable, executor)
    return SupremalResult(result.global_language, result.tier.optimal, result)
