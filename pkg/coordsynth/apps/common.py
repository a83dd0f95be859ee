from __future__ import annotations

from typing import Any

from flask import request

from automata import Alphabet, Generator, alphabet, sync_product
from formats import parse_automaton
from toolkit import Outcome
from utils.errors import InvalidRequestError
from verify import AgentAlphabet, parse_groups


def body() -> dict:
    f = request.get_json(silent=True)
    if not isinstance(f, dict):
        raise InvalidRequestError("Request body must be a JSON object")
    return f


def require(f: dict, *fields: str) -> None:
    if not all(field in f for field in fields):
        raise InvalidRequestError(f"Missing required fields in request: {', '.join(fields)}")


def automata_list(f: dict, key: str) -> list[Generator]:
    """AutomatonFile texts under ``key``, a single string or a list of them."""
    texts = f.get(key)
    if isinstance(texts, str):
        texts = [texts]
    if not isinstance(texts, list) or not texts or not all(isinstance(t, str) for t in texts):
        raise InvalidRequestError(f"Field {key!r} must hold one or more automaton texts")
    return [parse_automaton(t, f"{key}[{n}]") for n, t in enumerate(texts)]


def composed(f: dict, key: str) -> Generator:
    parts = automata_list(f, key)
    return parts[0] if len(parts) == 1 else sync_product(parts)


def events(f: dict, key: str) -> Alphabet:
    value = f.get(key, "")
    if isinstance(value, list):
        value = ",".join(str(v) for v in value)
    if not isinstance(value, str):
        raise InvalidRequestError(f"Field {key!r} must be an event list")
    return alphabet(value)


def uncontrollable(f: dict, plant: Generator) -> Alphabet:
    return events(f, "unctrl") if "unctrl" in f else plant.uncontrollable


def agents(f: dict) -> list[AgentAlphabet]:
    require(f, "agents")
    if not isinstance(f["agents"], list):
        raise InvalidRequestError("Field 'agents' must be a list")
    res = []
    for n, a in enumerate(f["agents"], start=1):
        if not isinstance(a, dict):
            raise InvalidRequestError("Each agent must be an object with 'obs' and 'ctrl'")
        res.append(AgentAlphabet(events(a, "obs"), events(a, "ctrl"), str(a.get("name", f"agent{n}"))))
    return res


def groups(f: dict, default_size: int) -> tuple[tuple[int, ...], ...]:
    if "groups" not in f:
        return (tuple(range(1, default_size + 1)),)
    return parse_groups(str(f["groups"]))


def optional_groups(f: dict) -> tuple[tuple[int, ...], ...] | None:
    return parse_groups(str(f["groups"])) if "groups" in f else None


def coordinators(f: dict) -> tuple[Alphabet, ...] | None:
    if "coord" not in f:
        return None
    value = f["coord"]
    if isinstance(value, str):
        value = value.split(";")
    if not isinstance(value, list):
        raise InvalidRequestError("Field 'coord' must be a list of alphabets or a ';'-separated string")
    return tuple(events({"c": part}, "c") for part in value)


def high_level(f: dict) -> Alphabet | None:
    return events(f, "highcoord") if "highcoord" in f else None


def outcome_json(outcome: Outcome) -> dict[str, Any]:
    return {
        "result": {
            "holds": outcome.holds,
            "report": {key: outcome.report[key] for key in outcome.report},
            "automata": outcome.automaton_texts(),
            "texts": dict(outcome.texts),
        }
    }
