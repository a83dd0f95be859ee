from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from automata import (
    Alphabet,
    Generator,
    enumerate_bounded,
    project,
    show_word,
    sync_product,
)
from decentralized import DecentralizedProblem, solve
from formats import Report, write_automaton
from synthesis import SAFE_ONLY_CAVEAT, Tier, build_coordinator, build_plan, sup_c, synthesize_two_level
from utils.config import DEFAULT_CONFIG
from utils.decorators import decorate_all_functions, log
from utils.errors import DecompositionError, InvalidRequestError
from verify import (
    AgentAlphabet,
    GroupingPlan,
    Verdict,
    check_shared_consistency,
    is_conditionally_decomposable,
    is_controllable,
    is_coobservable,
    is_decomposable,
    is_lcc,
    is_observer,
    is_two_level_conditionally_controllable,
)


@dataclass
class Outcome:
    """Result of one toolkit operation: a verdict, its report and any produced automata or text."""

    holds: bool
    report: Report
    automata: dict[str, Generator] = field(default_factory=dict)
    texts: dict[str, str] = field(default_factory=dict)

    def automaton_texts(self) -> dict[str, str]:
        return {name: write_automaton(g) for name, g in sorted(self.automata.items())}


def _check(name: str, verdict: Verdict) -> Outcome:
    report = Report()
    report.set("check", name)
    report.add_verdict(name, verdict, primary=True)
    return Outcome(verdict.holds, report)


def _decomposition_failure(report: Report, e: DecompositionError) -> Outcome:
    report.set("decomposable", False)
    report.set("decomposable.group", e.group)
    report.set("witness.s", show_word(e.witness))
    if e.stage:
        report.set("decomposable.stage", e.stage)
    if e.suggestion:
        report.set("decomposable.suggestion", e.suggestion)
    return Outcome(False, report)


@decorate_all_functions(log, logging.getLogger("coordsynth"))
class Toolkit:
    """Entry point shared by the CLI and the HTTP service; owns the configuration and worker pool."""

    def __init__(self, config: dict | None = None):
        self.logger: logging.Logger = logging.getLogger("coordsynth")
        self.config: dict = config or DEFAULT_CONFIG
        self.executor: ThreadPoolExecutor = ThreadPoolExecutor(
            max_workers=max(1, int(self.config["synthesis"]["workers"])), thread_name_prefix="SynthesisGroup"
        )

    def close(self) -> None:
        self.executor.shutdown(wait=True)

    def __enter__(self) -> Toolkit:
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # Automata

    def product(self, parts: Sequence[Generator]) -> Outcome:
        res = sync_product(parts)
        report = Report({"states": str(res.num_states), "transitions": str(res.num_transitions)})
        return Outcome(True, report, {"result": res})

    def project(self, g: Generator, onto: Iterable[str], minimize: bool | None = None) -> Outcome:
        if minimize is None:
            minimize = bool(self.config["synthesis"]["minimize_projections"])
        res = project(g, onto, minimize)
        report = Report({"states": str(res.num_states), "transitions": str(res.num_transitions)})
        return Outcome(True, report, {"result": res})

    def supc(self, spec: Generator, plant: Generator, uncontrollable: Iterable[str]) -> Outcome:
        res = sup_c(spec, plant, uncontrollable)
        report = Report({"states": str(res.num_states), "transitions": str(res.num_transitions)})
        report.set("empty", res.is_empty)
        return Outcome(True, report, {"result": res})

    def enumerate_words(self, g: Generator, maxlen: int) -> Outcome:
        if maxlen < 0:
            raise InvalidRequestError("maxlen must be nonnegative")
        words = enumerate_bounded(g, maxlen)
        report = Report({"words": str(len(words)), "maxlen": str(maxlen)})
        return Outcome(True, report, texts={"words": "".join(show_word(w) + "\n" for w in words)})

    # Checks

    def check_controllable(self, spec: Generator, plant: Generator, uncontrollable: Iterable[str]) -> Outcome:
        return _check("controllable", is_controllable(spec, plant, uncontrollable))

    def check_observer(self, plant: Generator, onto: Iterable[str]) -> Outcome:
        return _check("observer", is_observer(plant, onto))

    def check_lcc(
        self, plant: Generator, onto: Iterable[str], uncontrollable: Iterable[str], strict_occ: bool = False
    ) -> Outcome:
        return _check("occ" if strict_occ else "lcc", is_lcc(plant, onto, uncontrollable, strict_occ))

    def check_cd(
        self,
        spec: Generator,
        pieces: Sequence[Alphabet] | None = None,
        plants: Sequence[Generator] = (),
        coordinator: Alphabet | None = None,
    ) -> Outcome:
        """Decomposability over ``pieces``, or conditional decomposability over the plants and a coordinator."""
        if pieces is not None:
            return _check("decomposable", is_decomposable(spec, pieces))
        if coordinator is None or not plants:
            raise InvalidRequestError("Either pieces or plants with a coordinator alphabet are required")
        return _check(
            "decomposable", is_conditionally_decomposable(spec, [p.alphabet for p in plants], coordinator)
        )

    def check_coobservable(
        self, spec: Generator, plant: Generator, agents: Sequence[AgentAlphabet], max_agents: int | None = None
    ) -> Outcome:
        if max_agents is None:
            max_agents = int(self.config["verifier"]["max_agents"])
        return _check("coobservable", is_coobservable(spec, plant, agents, max_agents))

    def check_cc2(
        self,
        spec: Generator,
        plants: Sequence[Generator],
        groups: Sequence[Sequence[int]],
        coordinators: Sequence[Alphabet] | None,
        high_level: Alphabet | None,
        uncontrollable: Iterable[str],
    ) -> Outcome:
        plan, _ = build_plan(spec, plants, groups, coordinators, high_level, extend=False)
        built = [
            build_coordinator(plants, plan.coordinator_alphabet(j), j).coordinator
            for j in range(1, len(plan.groups) + 1)
        ]
        outcome = _check(
            "cond_controllable", is_two_level_conditionally_controllable(spec, plants, plan, built, uncontrollable)
        )
        self._describe_plan(outcome.report, plan)
        return outcome

    def check_shared(self, agents: Sequence[AgentAlphabet]) -> Outcome:
        consistent, violation = check_shared_consistency(agents)
        report = Report({"check": "shared", "shared": str(consistent).lower()})
        if violation is not None:
            i, j, event = violation
            report.update({"witness.agent": i, "witness.controller": j, "witness.event": event})
        return Outcome(consistent, report)

    # Synthesis

    def _describe_plan(self, report: Report, plan: GroupingPlan) -> None:
        report.set("plan.groups", ";".join(",".join(str(i) for i in g) for g in plan.groups))
        report.set("plan.highcoord", " ".join(sorted(plan.high_level_shared)))
        for j in range(1, len(plan.groups) + 1):
            report.set(f"plan.coord.{j}", " ".join(sorted(plan.coordinator_alphabet(j))))

    def _describe_tier(self, report: Report, tier: Tier, conditions: dict[str, Verdict]) -> None:
        report.set("tier", tier.value)
        for key, verdict in conditions.items():
            report.add_verdict(key, verdict)
        if tier is Tier.SAFE_ONLY:
            report.set("caveat", SAFE_ONLY_CAVEAT)

    def synth_two_level(
        self,
        spec: Generator,
        plants: Sequence[Generator],
        groups: Sequence[Sequence[int]],
        uncontrollable: Iterable[str],
        coordinators: Sequence[Alphabet] | None = None,
        high_level: Alphabet | None = None,
        extend: bool = True,
        ensure_observer: bool | None = None,
    ) -> Outcome:
        if ensure_observer is None:
            ensure_observer = bool(self.config["synthesis"]["ensure_observer"])
        report = Report()
        plan, steps = build_plan(spec, plants, groups, coordinators, high_level, extend, ensure_observer)
        self._describe_plan(report, plan)
        report.add_provenance(steps)
        try:
            result = synthesize_two_level(
                plants,
                spec,
                plan,
                uncontrollable,
                self.executor,
                steps,
                bool(self.config["synthesis"]["minimize_projections"]),
            )
        except DecompositionError as e:
            return _decomposition_failure(report, e)
        report.set("decomposable", True)
        self._describe_tier(report, result.tier, result.condition_report)

        automata = {"global": result.global_language}
        for group in result.groups:
            automata[f"coordinator_{group.group}"] = group.coordinator.coordinator
            automata[f"supervisor_k{group.group}"] = group.supervisor
        for i, sup in result.supervisors.items():
            automata[f"supervisor_{i}"] = sup
        return Outcome(result.tier.optimal, report, automata)

    def solve_decentralized(
        self,
        problem: DecentralizedProblem,
        extend: bool = True,
        ensure_observer: bool | None = None,
        enriched_control: str | None = None,
    ) -> Outcome:
        if ensure_observer is None:
            ensure_observer = bool(self.config["synthesis"]["ensure_observer"])
        if enriched_control is None:
            enriched_control = str(self.config["decentralized"]["enriched_control"])
        report = Report()
        try:
            solution = solve(
                problem,
                self.executor,
                extend=extend,
                ensure_observer=ensure_observer,
                enriched_control=enriched_control,
                max_agents=int(self.config["verifier"]["max_agents"]),
                minimize=bool(self.config["synthesis"]["minimize_projections"]),
            )
        except DecompositionError as e:
            return _decomposition_failure(report, e)

        report.set("decomposable", True)
        report.set("enriched_control", enriched_control)
        self._describe_plan(report, solution.result.plan)
        report.add_provenance(solution.provenance)
        self._describe_tier(report, solution.result.tier, solution.result.condition_report)
        for key, verdict in solution.verdicts.items():
            report.add_verdict(key, verdict)
        for n, note in enumerate(solution.notes, start=1):
            report.set(f"note.{n}", note)
        for i, received in solution.communication.receive.items():
            report.set(f"communication.{i}", " ".join(sorted(received)))

        automata = {f"supervisor_{i}": sup for i, sup in solution.supervisors.items()}
        automata["global"] = solution.result.global_language
        texts = {"communication": solution.communication.to_text()}
        return Outcome(solution.holds, report, automata, texts)
