from __future__ import annotations

import argparse
import copy
import logging
import os
import sys
import time
from typing import Sequence

from automata import Alphabet, Generator, alphabet
from decentralized import DecentralizedProblem
from formats import emit_report, load_problem, read_automaton, read_composed, save_automaton
from toolkit import Outcome, Toolkit
from utils.config import load_config
from utils.errors import InvalidRequestError, InvalidStateError
from utils.logging_setup import configure
from verify import AgentAlphabet, parse_groups

logger: logging.Logger = logging.getLogger("coordsynth")

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2

CHECKS: tuple[str, ...] = ("controllable", "observer", "lcc", "cd", "coobservable", "cc2", "shared")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", help="output automaton file, or directory for multi-output commands")
    parser.add_argument("--report", help="write the report here instead of standard output")
    parser.add_argument("--timing", action="store_true", help="add elapsed time to the report")
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")


def _automata(parser: argparse.ArgumentParser, spec: bool = True) -> None:
    parser.add_argument("--plant", nargs="+", default=[], help="plant automaton files, composed by product")
    if spec:
        parser.add_argument("--spec", nargs="+", default=[], help="specification automaton files, composed by product")
    parser.add_argument("--unctrl", help="uncontrollable events (default: the plant's non-controllable events)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coordsynth", description="Coordination control synthesis toolkit")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("product", help="synchronous product of the plant automata")
    _automata(p, spec=False)
    _common(p)

    p = commands.add_parser("project", help="natural projection of the plant")
    _automata(p, spec=False)
    p.add_argument("--onto", required=True, help="target alphabet e1,e2,...")
    p.add_argument("--minimize", action="store_true")
    _common(p)

    p = commands.add_parser("supc", help="supremal controllable sublanguage")
    _automata(p)
    _common(p)

    p = commands.add_parser("enumerate", help="all words of the plant up to a length")
    _automata(p, spec=False)
    p.add_argument("--maxlen", type=int, required=True)
    _common(p)

    p = commands.add_parser("check", help="verify a property")
    p.add_argument("property", choices=CHECKS)
    _automata(p)
    p.add_argument("--onto", help="projection alphabet e1,e2,...")
    p.add_argument("--strict-occ", action="store_true", help="check output control consistency instead of LCC")
    p.add_argument("--pieces", help="alphabets 'a,b;c,d' for decomposability")
    p.add_argument("--coord", help="coordinator alphabets, one per group separated by ';'")
    p.add_argument("--highcoord", help="high-level coordinator alphabet")
    p.add_argument("--groups", help="agent groups '1,2;3,4'")
    p.add_argument("--problem", help="problem file providing the agents")
    p.add_argument("--agent", action="append", default=[], metavar="OBS:CTRL", help="agent alphabets, repeatable")
    p.add_argument("--max-agents-verifier", type=int, help="coobservability verifier agent limit")
    _common(p)

    p = commands.add_parser("synth", help="coordination control synthesis")
    p.add_argument("mode", choices=("two-level",))
    _automata(p)
    p.add_argument("--groups", help="agent groups '1,2;3,4' (default: one group)")
    p.add_argument("--coord", help="coordinator alphabets, one per group separated by ';'")
    p.add_argument("--highcoord", help="high-level coordinator alphabet")
    p.add_argument("--no-extend", action="store_true", help="do not extend coordinator alphabets")
    p.add_argument("--ensure-observer", action="store_true", help="extend coordinator alphabets to observers")
    _common(p)

    p = commands.add_parser("solve", help="decentralized control with communicating supervisors")
    p.add_argument("mode", choices=("decentralized",))
    p.add_argument("--problem", required=True, help="problem file")
    p.add_argument("--groups", help="override the problem's agent groups")
    p.add_argument("--no-extend", action="store_true", help="do not extend coordinator alphabets")
    p.add_argument("--ensure-observer", action="store_true", help="extend coordinator alphabets to observers")
    p.add_argument("--observation-only", action="store_true", help="communicated events are never controlled")
    p.add_argument("--max-agents-verifier", type=int, help="coobservability verifier agent limit")
    _common(p)
    return parser


def _one(paths: Sequence[str], what: str) -> Generator:
    if not paths:
        raise InvalidRequestError(f"--{what} is required")
    return read_composed(paths)


def _plants(paths: Sequence[str]) -> list[Generator]:
    if not paths:
        raise InvalidRequestError("--plant is required")
    return [read_automaton(p) for p in paths]


def _uncontrollable(args: argparse.Namespace, plant: Generator) -> Alphabet:
    return alphabet(args.unctrl) if args.unctrl is not None else plant.uncontrollable


def _coordinators(text: str | None) -> tuple[Alphabet, ...] | None:
    return None if text is None else tuple(alphabet(part) for part in text.split(";"))


def _agents(args: argparse.Namespace) -> list[AgentAlphabet]:
    if args.problem:
        return list(load_problem(args.problem).agents)
    agents = []
    for spec in args.agent:
        observable, sep, controllable = spec.partition(":")
        if not sep:
            raise InvalidRequestError(f"--agent expects OBS:CTRL, got {spec!r}")
        agents.append(AgentAlphabet.of(observable, controllable, f"agent{len(agents) + 1}"))
    if not agents:
        raise InvalidRequestError("Agents are required: use --problem or --agent")
    return agents


def _check(toolkit: Toolkit, args: argparse.Namespace) -> Outcome:
    prop = args.property
    if prop == "shared":
        return toolkit.check_shared(_agents(args))
    if prop in ("observer", "lcc"):
        plant = _one(args.plant, "plant")
        if args.onto is None:
            raise InvalidRequestError("--onto is required")
        if prop == "observer":
            return toolkit.check_observer(plant, alphabet(args.onto))
        return toolkit.check_lcc(plant, alphabet(args.onto), _uncontrollable(args, plant), args.strict_occ)

    spec = _one(args.spec, "spec")
    if prop == "cd":
        if args.pieces is not None:
            return toolkit.check_cd(spec, pieces=[alphabet(part) for part in args.pieces.split(";")])
        coordinators = _coordinators(args.coord)
        return toolkit.check_cd(spec, plants=_plants(args.plant), coordinator=coordinators[0] if coordinators else None)
    if prop == "cc2":
        plants = _plants(args.plant)
        groups = parse_groups(args.groups) if args.groups else (tuple(range(1, len(plants) + 1)),)
        high = alphabet(args.highcoord) if args.highcoord is not None else None
        composed = read_composed(args.plant)
        return toolkit.check_cc2(
            spec, plants, groups, _coordinators(args.coord), high, _uncontrollable(args, composed)
        )

    plant = _one(args.plant, "plant")
    if prop == "controllable":
        return toolkit.check_controllable(spec, plant, _uncontrollable(args, plant))
    return toolkit.check_coobservable(spec, plant, _agents(args), args.max_agents_verifier)


def _dispatch(toolkit: Toolkit, args: argparse.Namespace) -> Outcome:
    if args.command == "product":
        return toolkit.product(_plants(args.plant))
    if args.command == "project":
        return toolkit.project(_one(args.plant, "plant"), alphabet(args.onto), args.minimize or None)
    if args.command == "supc":
        plant = _one(args.plant, "plant")
        return toolkit.supc(_one(args.spec, "spec"), plant, _uncontrollable(args, plant))
    if args.command == "enumerate":
        return toolkit.enumerate_words(_one(args.plant, "plant"), args.maxlen)
    if args.command == "check":
        return _check(toolkit, args)
    if args.command == "synth":
        plants = _plants(args.plant)
        groups = parse_groups(args.groups) if args.groups else (tuple(range(1, len(plants) + 1)),)
        return toolkit.synth_two_level(
            _one(args.spec, "spec"),
            plants,
            groups,
            _uncontrollable(args, read_composed(args.plant)),
            _coordinators(args.coord),
            alphabet(args.highcoord) if args.highcoord is not None else None,
            extend=not args.no_extend,
            ensure_observer=args.ensure_observer or None,
        )

    problem = load_problem(args.problem)
    if args.groups:
        problem = DecentralizedProblem(
            problem.plant, problem.spec, problem.agents, parse_groups(args.groups), None, problem.high_level
        )
    return toolkit.solve_decentralized(
        problem,
        extend=not args.no_extend,
        ensure_observer=args.ensure_observer or None,
        enriched_control="observation-only" if args.observation_only else None,
    )


def _write_outputs(outcome: Outcome, args: argparse.Namespace) -> None:
    single = args.command in ("product", "project", "supc")
    if single:
        if args.output:
            save_automaton(outcome.automata["result"], args.output)
        else:
            sys.stdout.write(outcome.automaton_texts()["result"])
    elif args.command == "enumerate":
        text = outcome.texts["words"]
        if args.output:
            try:
                with open(args.output, "w", encoding="utf-8", newline="\n") as file:
                    file.write(text)
            except OSError as e:
                raise InvalidRequestError(f"Cannot write {args.output}: {e}") from e
        else:
            sys.stdout.write(text)
    elif args.output and args.command in ("synth", "solve"):
        try:
            os.makedirs(args.output, exist_ok=True)
        except OSError as e:
            raise InvalidRequestError(f"Cannot create output directory {args.output}: {e}") from e
        for name, g in outcome.automata.items():
            save_automaton(g, os.path.join(args.output, f"{name}.aut"))
        for name, text in outcome.texts.items():
            try:
                with open(os.path.join(args.output, f"{name}.txt"), "w", encoding="utf-8", newline="\n") as file:
                    file.write(text)
            except OSError as e:
                raise InvalidRequestError(f"Cannot write {name}.txt: {e}") from e

    if args.report:
        emit_report(outcome.report, args.report)
    elif args.output and args.command in ("synth", "solve"):
        emit_report(outcome.report, os.path.join(args.output, "report.txt"))
    elif not single and args.command != "enumerate":
        sys.stdout.write(outcome.report.to_text())


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns 0 when the property holds, 1 when it fails, 2 on bad input."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_HOLDS if e.code in (0, None) else EXIT_INPUT

    try:
        config = load_config(args.config)
    except InvalidRequestError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    config = copy.deepcopy(config)
    if args.verbose:
        config["logging"]["level"] = "DEBUG"
    if getattr(args, "max_agents_verifier", None) is not None:
        config["verifier"]["max_agents"] = args.max_agents_verifier
    configure(config)

    started = time.perf_counter()
    try:
        with Toolkit(config) as toolkit:
            outcome = _dispatch(toolkit, args)
        if args.timing:
            outcome.report.set("timing.seconds", f"{time.perf_counter() - started:.3f}")
        _write_outputs(outcome, args)
    except (InvalidRequestError, InvalidStateError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    return EXIT_HOLDS if outcome.holds else EXIT_FAILS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
