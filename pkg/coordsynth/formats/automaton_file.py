from __future__ import annotations

from typing import Iterable

from automata import EVENT_PATTERN, Generator, sync_product, trim
from utils.errors import InvalidRequestError, ParseError

HEADERS: tuple[str, ...] = ("alphabet", "controllable", "states", "initial")


def content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _events(value: str, number: int, source: str) -> list[str]:
    events = value.split()
    for e in events:
        if not EVENT_PATTERN.match(e):
            raise ParseError(f"invalid event name {e!r}", number, source)
    if len(set(events)) != len(events):
        raise ParseError("event listed twice", number, source)
    return events


def _number(value: str, what: str, number: int, source: str) -> int:
    try:
        res = int(value)
    except ValueError as e:
        raise ParseError(f"{what} must be an integer, got {value!r}", number, source) from e
    if res < 0:
        raise ParseError(f"{what} must be nonnegative", number, source)
    return res


def _header_values(
    header: dict[str, tuple[int, str]], number: int, source: str
) -> tuple[list[str], list[str], int, int]:
    for key in ("alphabet", "states", "initial"):
        if key not in header:
            raise ParseError(f"missing header {key!r} before 'trans:'", number, source)
    line, value = header["alphabet"]
    events = _events(value, line, source)
    controllable: list[str] = []
    if "controllable" in header:
        line, value = header["controllable"]
        controllable = _events(value, line, source)
        undeclared = sorted(set(controllable) - set(events))
        if undeclared:
            raise ParseError(f"controllable event {undeclared[0]!r} not in alphabet", line, source)
    num_states = _number(header["states"][1], "states", header["states"][0], source)
    line, value = header["initial"]
    initial = _number(value, "initial", line, source)
    if num_states and initial >= num_states:
        raise ParseError(f"initial state {initial} out of range 0..{num_states - 1}", line, source)
    if not num_states and initial:
        raise ParseError("the empty automaton has initial: 0", line, source)
    return events, controllable, num_states, initial


def parse_automaton(text: str, source: str = "<string>") -> Generator:
    """Read an AutomatonFile; the result is trimmed to its reachable part and canonically numbered.

    ``#`` starts a comment. ``controllable:`` may be omitted, the other
    headers are required and all of them precede ``trans:``.
    """
    header: dict[str, tuple[int, str]] = {}
    transitions: list[tuple[int, str, int]] = []
    seen: dict[tuple[int, str], int] = {}
    in_trans = False

    for number, line in content_lines(text):
        if not in_trans:
            key, sep, value = line.partition(":")
            key = key.strip()
            if not sep:
                raise ParseError(f"expected a header line, got {line!r}", number, source)
            if key == "trans":
                if value.strip():
                    raise ParseError("transitions start on the line after 'trans:'", number, source)
                events, controllable, num_states, initial = _header_values(header, number, source)
                in_trans = True
                continue
            if key not in HEADERS:
                raise ParseError(f"unknown header {key!r}", number, source)
            if key in header:
                raise ParseError(f"header {key!r} given twice", number, source)
            header[key] = (number, value.strip())
            continue

        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'src event dst', got {line!r}", number, source)
        src = _number(parts[0], "source state", number, source)
        dst = _number(parts[2], "target state", number, source)
        event = parts[1]
        if event not in events:
            raise ParseError(f"undeclared event {event!r}", number, source)
        if src >= num_states or dst >= num_states:
            raise ParseError(f"state out of range 0..{num_states - 1}", number, source)
        if (src, event) in seen:
            raise ParseError(
                f"duplicate transition ({src}, {event}), first given on line {seen[src, event]}", number, source
            )
        seen[src, event] = number
        transitions.append((src, event, dst))

    if not in_trans:
        raise ParseError("missing 'trans:' section", 0, source)
    return trim(Generator(events, transitions, num_states, initial, controllable))


def write_automaton(g: Generator) -> str:
    """Canonical AutomatonFile text: headers in fixed order, transitions sorted by source then event."""
    g = trim(g)
    lines = [
        f"alphabet: {' '.join(sorted(g.alphabet))}".rstrip(),
        f"controllable: {' '.join(sorted(g.controllable))}".rstrip(),
        f"states: {g.num_states}",
        f"initial: {g.initial}",
        "trans:",
    ]
    lines.extend(f"{src} {event} {dst}" for src, event, dst in g.transitions())
    return "\n".join(lines) + "\n"


def read_automaton(path: str) -> Generator:
    try:
        with open(path, "r", encoding="utf-8") as file:
            text = file.read()
    except OSError as e:
        raise InvalidRequestError(f"Cannot read automaton file {path}: {e}") from e
    return parse_automaton(text, path)


def read_composed(paths: Iterable[str]) -> Generator:
    """Synchronous product of the automata in ``paths``."""
    parts = [read_automaton(p) for p in paths]
    if not parts:
        raise InvalidRequestError("No automaton files given")
    return parts[0] if len(parts) == 1 else sync_product(parts)


def save_automaton(g: Generator, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as file:
            file.write(write_automaton(g))
    except OSError as e:
        raise InvalidRequestError(f"Cannot write automaton file {path}: {e}") from e
