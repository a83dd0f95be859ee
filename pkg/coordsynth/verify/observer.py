from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Callable, Iterable

from automata import Generator, alphabet, project, trace_path
from utils.errors import InvalidRequestError
from verify.types import HOLDS, CheckKind, Counterexample, Verdict


def _check_onto(plant: Generator, onto: frozenset[str]) -> None:
    if not onto <= plant.alphabet:
        raise InvalidRequestError(
            f"Projection alphabet has events outside the plant: {' '.join(sorted(onto - plant.alphabet))}"
        )


class _Silent:
    def __init__(self, plant: Generator, onto: frozenset[str], uncontrollable: frozenset[str]):
        self.plant = plant
        self.onto = onto
        self.uncontrollable = uncontrollable
        self.closure = lru_cache(maxsize=None)(self._closure)

    def _closure(self, start: int, only_uncontrollable: bool) -> frozenset[int]:
        seen = {start}
        stack = [start]
        while stack:
            q = stack.pop()
            for e, dst in self.plant.successors(q).items():
                if e in self.onto or dst in seen:
                    continue
                if only_uncontrollable and e not in self.uncontrollable:
                    continue
                seen.add(dst)
                stack.append(dst)
        return frozenset(seen)

    def observable_ahead(self, start: int, only_uncontrollable: bool = False) -> frozenset[str]:
        """Projection-alphabet events enabled somewhere on a silent path from ``start``."""
        events: set[str] = set()
        for q in self.closure(start, only_uncontrollable):
            events |= self.plant.enabled(q) & self.onto
        return frozenset(events)

    def observable_after_controllable(self, start: int) -> frozenset[str]:
        """Projection-alphabet events enabled after a silent path that contains a controllable event."""
        events: set[str] = set()
        for q in self.closure(start, False):
            for e, dst in self.plant.successors(q).items():
                if e in self.onto or e in self.uncontrollable:
                    continue
                for r in self.closure(dst, False):
                    events |= self.plant.enabled(r) & self.onto
        return frozenset(events)


def _search(
    plant: Generator, onto: frozenset[str], violation: Callable[[int, frozenset[str]], str | None], kind: CheckKind
) -> Verdict:
    if plant.is_empty:
        return HOLDS
    observed = project(plant, onto)
    start = (plant.initial, observed.initial)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        q, x = pair
        event = violation(q, observed.enabled(x))
        if event is not None:
            return Verdict(False, Counterexample(kind, trace_path(parent, pair), event=event))
        succ = plant.successors(q)
        for e in sorted(succ):
            if e in onto:
                dx = observed.step(x, e)
                assert dx is not None
                target = (succ[e], dx)
            else:
                target = (succ[e], x)
            if target not in parent:
                parent[target] = (pair, e)
                queue.append(target)
    return HOLDS


def is_observer(plant: Generator, onto: Iterable[str]) -> Verdict:
    """Projection onto ``onto`` is an L(plant)-observer.

    Checked one observable step at a time: every event the projected
    language allows next must be reachable from the current plant state
    through events outside ``onto``.
    """
    onto = alphabet(onto)
    _check_onto(plant, onto)
    silent = _Silent(plant, onto, frozenset())

    def violation(q: int, expected: frozenset[str]) -> str | None:
        missing = expected - silent.observable_ahead(q)
        return min(missing) if missing else None

    return _search(plant, onto, violation, CheckKind.OBSERVER)


def is_lcc(plant: Generator, onto: Iterable[str], uncontrollable: Iterable[str], strict_occ: bool = False) -> Verdict:
    """Local control consistency of the projection onto ``onto``.

    For every uncontrollable observable event that can occur next, some silent
    path of uncontrollable events must lead to it whenever any silent path does.
    With ``strict_occ`` every silent path leading to it must be uncontrollable.
    """
    onto = alphabet(onto)
    uncontrollable = alphabet(uncontrollable)
    _check_onto(plant, onto)
    silent = _Silent(plant, onto, uncontrollable)

    def violation(q: int, expected: frozenset[str]) -> str | None:
        candidates = expected & uncontrollable & silent.observable_ahead(q)
        if not candidates:
            return None
        if strict_occ:
            bad = candidates & silent.observable_after_controllable(q)
        else:
            bad = candidates - silent.observable_ahead(q, only_uncontrollable=True)
        return min(bad) if bad else None

    return _search(plant, onto, violation, CheckKind.OCC if strict_occ else CheckKind.LCC)
