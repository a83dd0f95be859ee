from __future__ import annotations

import logging
from concurrent.futures import Executor

from automata import Alphabet, Generator, language_includes, project
from decentralized.grouping import group_agents
from decentralized.problem import CommunicationMap, DecentralizedProblem, Solution, Translation
from synthesis import build_plan, synthesize_two_level
from utils.decorators import stage
from utils.errors import InvalidRequestError
from utils.logging_setup import IMPORTANT
from verify import (
    DEFAULT_MAX_AGENTS,
    HOLDS,
    AgentAlphabet,
    CheckKind,
    Counterexample,
    GroupingPlan,
    Verdict,
    check_shared_consistency,
    is_controllable,
    is_coobservable,
    is_decomposable,
)

logger: logging.Logger = logging.getLogger("coordsynth")

ENRICHED_CONTROL_MODES: tuple[str, ...] = ("coordinator", "observation-only")


def global_controllable(problem: DecentralizedProblem) -> Alphabet:
    """Σ_c: the plant's declared controllable events, else everything some agent controls."""
    if problem.plant.controllable:
        return problem.plant.controllable
    return frozenset().union(*(a.controllable for a in problem.agents))


def _validate(problem: DecentralizedProblem) -> None:
    sigma = problem.plant.alphabet
    if not problem.agents:
        raise InvalidRequestError("At least one agent is required")
    for i, agent in enumerate(problem.agents, start=1):
        outside = (agent.observable | agent.controllable) - sigma
        if outside:
            raise InvalidRequestError(f"Agent {i} uses events outside the plant alphabet: {' '.join(sorted(outside))}")
    unseen = sigma - frozenset().union(*(a.observable for a in problem.agents))
    if unseen:
        raise InvalidRequestError(f"Plant events observed by no agent: {' '.join(sorted(unseen))}")
    inside = language_includes(problem.plant, problem.spec)
    if not inside:
        raise InvalidRequestError(f"Specification is not contained in the plant: '{' '.join(inside.witness or ())}'")


@stage("translate")
def translate(problem: DecentralizedProblem) -> Translation:
    """Restate the problem over A_i = Σ_{o,i}, with plants P_i(L) and A_{c,i} = Σ_{o,i} ∩ Σ_{c,i}.

    Each agent's controllable set is first cut down to the plant's
    controllable events; the shared-event consistency check then runs on
    these normalized sets, so dropped events never count as a violation.
    """
    _validate(problem)
    sigma_c = global_controllable(problem)
    agents = []
    for i, agent in enumerate(problem.agents, start=1):
        dropped = agent.controllable - sigma_c
        if dropped:
            logger.warning("Agent %d cannot control uncontrollable events %s", i, " ".join(sorted(dropped)))
        agents.append(AgentAlphabet(agent.observable, agent.controllable & sigma_c, agent.name))

    consistent, violation = check_shared_consistency(agents)
    if not consistent:
        assert violation is not None
        i, j, event = violation
        logger.warning(
            "Agent %d observes %s, controlled by agent %d but not by itself; coobservability is not guaranteed",
            i,
            event,
            j,
        )

    plant = problem.plant.with_controllable(sigma_c)
    plants = tuple(project(plant, a.observable) for a in agents)
    return Translation(
        plants=plants,
        spec=problem.spec,
        alphabets=tuple(a.observable for a in agents),
        controllable=tuple(a.observable & a.controllable for a in agents),
        agents=tuple(agents),
        uncontrollable=plant.alphabet - sigma_c,
    )


def communication_map(plan: GroupingPlan, agents: tuple[AgentAlphabet, ...] | list[AgentAlphabet]) -> CommunicationMap:
    """Events coordinator j forwards to each agent of its group: A_{k_j} minus what the agent observes."""
    receive = {}
    group_of = {}
    for j, members in enumerate(plan.groups, start=1):
        for i in members:
            receive[i] = plan.coordinator_alphabet(j) - agents[i - 1].observable
            group_of[i] = j
    coordinators = {j: plan.coordinator_alphabet(j) for j in range(1, len(plan.groups) + 1)}
    return CommunicationMap(receive, coordinators, group_of)


def enrich(
    plan: GroupingPlan, agents: tuple[AgentAlphabet, ...], sigma_c: Alphabet, mode: str = "coordinator"
) -> tuple[AgentAlphabet, ...]:
    """Agents after communication: agent i observes A_{i+k_j}.

    In ``coordinator`` mode it may disable every controllable event it now
    sees; in ``observation-only`` mode only its own Σ_{c,i} events.
    """
    if mode not in ENRICHED_CONTROL_MODES:
        raise InvalidRequestError(f"Unknown enriched control mode {mode!r}")
    enriched = []
    for i, agent in enumerate(agents, start=1):
        observable = agent.observable | plan.coordinator_alphabet(plan.group_of(i))
        controls = observable & sigma_c if mode == "coordinator" else agent.controllable & observable
        enriched.append(AgentAlphabet(observable, controls, agent.name))
    return tuple(enriched)


@stage("grouping")
def _plan(
    problem: DecentralizedProblem, translation: Translation, extend: bool, ensure_observer: bool
) -> tuple[GroupingPlan, list]:
    groups = problem.groups if problem.groups is not None else group_agents(translation.agents)
    logger.info("Agent groups: %s", groups)
    return build_plan(
        translation.spec,
        translation.plants,
        groups,
        problem.coordinator_alphabets,
        problem.high_level,
        extend=extend,
        ensure_observer=ensure_observer,
    )


@stage("synthesis")
def _synthesize(translation: Translation, plan: GroupingPlan, provenance: list, executor: Executor | None, minimize: bool):
    return synthesize_two_level(
        translation.plants,
        translation.spec,
        plan,
        translation.uncontrollable,
        executor,
        provenance,
        minimize,
    )


@stage("verification")
def _verify(
    problem: DecentralizedProblem,
    global_language: Generator,
    enriched: tuple[AgentAlphabet, ...],
    uncontrollable: Alphabet,
    max_agents: int,
) -> dict[str, Verdict]:
    verdicts: dict[str, Verdict] = {}
    inside = language_includes(problem.spec, global_language)
    verdicts["within_spec"] = (
        HOLDS if inside else Verdict(False, Counterexample(CheckKind.INCLUSION, inside.witness or ()))
    )
    verdicts["controllable"] = is_controllable(global_language, problem.plant, uncontrollable)
    verdicts["coobservable"] = is_coobservable(global_language, problem.plant, enriched, max_agents)
    verdicts["separable"] = is_decomposable(global_language, [a.observable for a in enriched])
    return verdicts


def solve(
    problem: DecentralizedProblem,
    executor: Executor | None = None,
    extend: bool = True,
    ensure_observer: bool = False,
    enriched_control: str = "coordinator",
    max_agents: int = DEFAULT_MAX_AGENTS,
    minimize: bool = False,
) -> Solution:
    """Decentralized supervisors communicating through group coordinators.

    Errors from any stage carry the stage name in their ``stage`` attribute.
    """
    logger.log(IMPORTANT, "SOLVING DECENTRALIZED PROBLEM WITH %d AGENTS", len(problem.agents))
    translation = translate(problem)
    plan, provenance = _plan(problem, translation, extend, ensure_observer)
    result = _synthesize(translation, plan, provenance, executor, minimize)

    sigma_c = global_controllable(problem)
    enriched = enrich(plan, translation.agents, sigma_c, enriched_control)
    verdicts = _verify(problem, result.global_language, enriched, translation.uncontrollable, max_agents)

    notes = []
    if len(plan.groups) == 1:
        notes.append("single group: the scheme reduces to centralized coordination")
    consistent, violation = check_shared_consistency(translation.agents)
    if not consistent:
        assert violation is not None
        notes.append(f"shared-event hypothesis fails: agent {violation[0]} observes {violation[2]} "
                     f"controlled by agent {violation[1]}")
    for key, verdict in verdicts.items():
        if not verdict:
            logger.warning("Decentralized solution is not %s: %s", key, verdict.counterexample)

    logger.log(IMPORTANT, "SOLVED, TIER %s", result.tier.value)
    return Solution(
        supervisors=result.supervisors,
        communication=communication_map(plan, translation.agents),
        result=result,
        enriched=enriched,
        verdicts=verdicts,
        provenance=tuple(provenance),
        notes=tuple(notes),
    )
