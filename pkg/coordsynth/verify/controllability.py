from __future__ import annotations

from collections import deque
from typing import Iterable

from automata import Generator, alphabet, trace_path
from verify.types import HOLDS, CheckKind, Counterexample, Verdict


def is_controllable(
    spec: Generator, plant: Generator, uncontrollable: Iterable[str], kind: CheckKind = CheckKind.CONTROLLABILITY
) -> Verdict:
    """No uncontrollable plant event may leave L(spec).

    Words of L(spec) outside L(plant) are irrelevant; the witness is the
    shortest violating word ``su`` (ties by event names).
    """
    uncontrollable = alphabet(uncontrollable)
    if spec.is_empty or plant.is_empty:
        return HOLDS
    start = (spec.initial, plant.initial)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        qs, qp = pair
        succ = plant.successors(qp)
        for e in sorted(succ):
            ds = spec.step(qs, e)
            if ds is None:
                if e in uncontrollable:
                    s = trace_path(parent, pair)
                    return Verdict(False, Counterexample(kind, s + (e,), event=e))
                continue
            target = (ds, succ[e])
            if target not in parent:
                parent[target] = (pair, e)
                queue.append(target)
    return HOLDS
