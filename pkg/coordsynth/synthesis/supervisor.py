from __future__ import annotations

import logging
from collections import deque
from typing import Iterable

from automata import Generator, alphabet, build, empty, sync_product
from utils.errors import InvalidRequestError

logger: logging.Logger = logging.getLogger("synthesis")


def sup_c(spec: Generator, plant: Generator, uncontrollable: Iterable[str]) -> Generator:
    """Supremal controllable sublanguage of L(spec) ∩ L(plant).

    Works on the reachable part of the spec/plant product: states where the
    plant allows an uncontrollable event that the spec forbids, or that lead
    by an uncontrollable event into such a state, are removed until nothing
    changes. Result alphabet is the union of both alphabets.
    """
    uncontrollable = alphabet(uncontrollable)
    events = spec.alphabet | plant.alphabet
    controllable = spec.controllable | plant.controllable
    if spec.is_empty or plant.is_empty:
        return empty(events, controllable)

    start = (spec.initial, plant.initial)
    succ: dict[tuple[int, int], dict[str, tuple[int, int]]] = {start: {}}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        qs, qp = pair
        for e, dp in plant.successors(qp).items():
            ds = spec.step(qs, e)
            if ds is None:
                continue
            target = (ds, dp)
            succ[pair][e] = target
            if target not in succ:
                succ[target] = {}
                queue.append(target)

    bad = set()
    for pair in succ:
        qs, qp = pair
        if any(spec.step(qs, e) is None for e in plant.enabled(qp) & uncontrollable):
            bad.add(pair)

    # backward propagation along uncontrollable transitions
    preds: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for pair, moves in succ.items():
        for e, target in moves.items():
            if e in uncontrollable:
                preds.setdefault(target, []).append(pair)
    stack = list(bad)
    while stack:
        pair = stack.pop()
        for prev in preds.get(pair, ()):
            if prev not in bad:
                bad.add(prev)
                stack.append(prev)

    if start in bad:
        logger.info("Supremal controllable sublanguage is empty")
        return empty(events, controllable)
    kept = {pair: {e: t for e, t in moves.items() if t not in bad} for pair, moves in succ.items() if pair not in bad}
    return build(events, kept, start, controllable)


def closed_loop(supervisor: Generator, plant: Generator) -> Generator:
    if not supervisor.alphabet <= plant.alphabet:
        raise InvalidRequestError(
            f"Supervisor uses events outside the plant: {' '.join(sorted(supervisor.alphabet - plant.alphabet))}"
        )
    return sync_product([supervisor, plant])
