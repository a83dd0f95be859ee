from __future__ import annotations

import os
from dataclasses import dataclass, field

from automata import Alphabet, Generator, alphabet
from decentralized import DecentralizedProblem
from formats.automaton_file import content_lines, read_composed
from utils.errors import InvalidRequestError, ParseError
from verify import AgentAlphabet, parse_groups


@dataclass
class _AgentBlock:
    line: int
    name: str
    observable: tuple[int, Alphabet] | None = None
    controllable: tuple[int, Alphabet] | None = None


@dataclass
class _Sections:
    plant: tuple[int, list[str]] | None = None
    spec: tuple[int, list[str]] | None = None
    agents: list[_AgentBlock] = field(default_factory=list)
    groups: tuple[int, str] | None = None
    coord: tuple[int, str] | None = None
    highcoord: tuple[int, str] | None = None


def _alphabet(value: str, number: int, source: str) -> Alphabet:
    try:
        return alphabet(value)
    except InvalidRequestError as e:
        raise ParseError(str(e), number, source) from e


def _sections(text: str, source: str) -> _Sections:
    res = _Sections()
    for number, line in content_lines(text):
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", number, source)
        if key in ("plant", "spec"):
            if getattr(res, key) is not None:
                raise ParseError(f"section {key!r} given twice", number, source)
            if not value:
                raise ParseError(f"section {key!r} needs at least one automaton file", number, source)
            setattr(res, key, (number, value.split()))
        elif key == "agent":
            res.agents.append(_AgentBlock(number, value or f"agent{len(res.agents) + 1}"))
        elif key in ("obs", "ctrl"):
            if not res.agents:
                raise ParseError(f"{key!r} outside an agent block", number, source)
            block = res.agents[-1]
            attr = "observable" if key == "obs" else "controllable"
            if getattr(block, attr) is not None:
                raise ParseError(f"{key!r} given twice for agent {len(res.agents)}", number, source)
            setattr(block, attr, (number, _alphabet(value, number, source)))
        elif key in ("groups", "coord", "highcoord"):
            if getattr(res, key) is not None:
                raise ParseError(f"{key!r} given twice", number, source)
            setattr(res, key, (number, value))
        else:
            raise ParseError(f"unknown key {key!r}", number, source)
    return res


def parse_problem(text: str, base_dir: str = ".", source: str = "<string>") -> DecentralizedProblem:
    """Read a ProblemFile; automaton paths are relative to ``base_dir`` and composed by product."""
    sections = _sections(text, source)
    for key in ("plant", "spec"):
        if getattr(sections, key) is None:
            raise ParseError(f"missing section {key!r}", 0, source)
    if not sections.agents:
        raise ParseError("no agent blocks", 0, source)

    def load(entry: tuple[int, list[str]]) -> Generator:
        number, paths = entry
        try:
            return read_composed(os.path.join(base_dir, p) for p in paths)
        except ParseError:
            raise
        except InvalidRequestError as e:
            raise ParseError(str(e), number, source) from e

    assert sections.plant is not None and sections.spec is not None
    plant = load(sections.plant)
    spec = load(sections.spec)

    agents = []
    for i, block in enumerate(sections.agents, start=1):
        if block.observable is None:
            raise ParseError(f"agent {i} has no 'obs:' line", block.line, source)
        obs_line, observable = block.observable
        ctrl_line, controllable = block.controllable or (block.line, frozenset())
        for number, events in ((obs_line, observable), (ctrl_line, controllable)):
            outside = events - plant.alphabet
            if outside:
                raise ParseError(f"events not in the plant alphabet: {' '.join(sorted(outside))}", number, source)
        agents.append(AgentAlphabet(observable, controllable, block.name))

    groups = None
    if sections.groups is not None:
        number, value = sections.groups
        try:
            groups = parse_groups(value)
        except InvalidRequestError as e:
            raise ParseError(str(e), number, source) from e
        if sorted(i for g in groups for i in g) != list(range(1, len(agents) + 1)):
            raise ParseError(f"groups do not partition agents 1..{len(agents)}", number, source)

    coordinators = None
    if sections.coord is not None:
        number, value = sections.coord
        coordinators = tuple(_alphabet(part, number, source) for part in value.split(";"))
        if groups is not None and len(coordinators) != len(groups):
            raise ParseError("one coordinator alphabet per group is required", number, source)

    high_level = None
    if sections.highcoord is not None:
        number, value = sections.highcoord
        high_level = _alphabet(value, number, source)

    return DecentralizedProblem(plant, spec, tuple(agents), groups, coordinators, high_level)


def load_problem(path: str) -> DecentralizedProblem:
    try:
        with open(path, "r", encoding="utf-8") as file:
            text = file.read()
    except OSError as e:
        raise InvalidRequestError(f"Cannot read problem file {path}: {e}") from e
    return parse_problem(text, os.path.dirname(path) or ".", path)
