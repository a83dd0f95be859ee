from __future__ import annotations

import logging
from collections import deque
from typing import Sequence

from automata import Generator, Word, language_includes, shortlex
from utils.errors import InvalidRequestError
from verify.types import HOLDS, AgentAlphabet, CheckKind, Counterexample, Verdict

logger: logging.Logger = logging.getLogger("verify")

DEFAULT_MAX_AGENTS: int = 6


def check_shared_consistency(agents: Sequence[AgentAlphabet]) -> tuple[bool, tuple[int, int, str] | None]:
    """Σ_{o,i} ∩ Σ_{c,j} ⊆ Σ_{c,i} for all agents; the first violation is returned as (i, j, event)."""
    for i, a in enumerate(agents, start=1):
        for j, b in enumerate(agents, start=1):
            bad = (a.observable & b.controllable) - a.controllable
            if bad:
                return False, (i, j, min(bad))
    return True, None


def _violation_for(
    spec: Generator, plant: Generator, agents: Sequence[AgentAlphabet], controllers: tuple[int, ...], events: frozenset[str]
) -> Counterexample | None:
    """Search for an illegal step on one of ``events``, all controlled by exactly ``controllers``.

    A verifier state is the real (spec, plant) pair plus one spec state per
    controller, tracking a word that controller cannot tell apart from the
    real one.
    """
    observable = [agents[i - 1].observable for i in controllers]
    start = (spec.initial, plant.initial) + tuple(spec.initial for _ in controllers)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        qk, ql, looks = node[0], node[1], node[2:]
        exits = sorted((plant.enabled(ql) - spec.enabled(qk)) & events)
        for e in exits:
            if all(spec.step(q, e) is not None for q in looks):
                return _witness(parent, node, e, controllers, observable)

        for e in sorted(spec.enabled(qk) & plant.enabled(ql)):
            moved = []
            for q, obs in zip(looks, observable):
                if e in obs:
                    dq = spec.step(q, e)
                    if dq is None:
                        break
                    moved.append(dq)
                else:
                    moved.append(q)
            else:
                target = (spec.step(qk, e), plant.step(ql, e)) + tuple(moved)
                if target not in parent:
                    parent[target] = (node, (0, e))
                    queue.append(target)
        for k, (q, obs) in enumerate(zip(looks, observable)):
            for e in sorted(spec.enabled(q) - obs):
                moved = list(looks)
                moved[k] = spec.step(q, e)
                target = (qk, ql) + tuple(moved)
                if target not in parent:
                    parent[target] = (node, (k + 1, e))
                    queue.append(target)
    return None


def _witness(
    parent: dict, node: tuple, event: str, controllers: tuple[int, ...], observable: list[frozenset[str]]
) -> Counterexample:
    moves = []
    while parent[node] is not None:
        node, move = parent[node]
        moves.append(move)
    moves.reverse()
    real: list[str] = [e for who, e in moves if who == 0]
    lookalikes = []
    for k, agent in enumerate(controllers, start=1):
        seen = [e for who, e in moves if (who == 0 and e in observable[k - 1]) or who == k]
        lookalikes.append((agent, tuple(seen)))
    return Counterexample(CheckKind.COOBSERVABILITY, tuple(real), event=event, lookalikes=tuple(lookalikes))


def is_coobservable(
    spec: Generator, plant: Generator, agents: Sequence[AgentAlphabet], max_agents: int = DEFAULT_MAX_AGENTS
) -> Verdict:
    """C&P coobservability of L(spec) w.r.t. L(plant) and the agents' observations.

    Each illegal controllable step must be disabled by some agent that
    controls it and sees no legal continuation by it among the words it
    confuses with the real one. Events with the same set of controllers are
    checked together; the verifier grows exponentially with that set.
    """
    if len(agents) > max_agents:
        raise InvalidRequestError(f"Coobservability verifier limited to {max_agents} agents, got {len(agents)}")
    inclusion = language_includes(plant, spec)
    if not inclusion.holds:
        raise InvalidRequestError(
            f"Specification is not contained in the plant: '{' '.join(inclusion.witness or ())}'"
        )
    if spec.is_empty:
        return HOLDS

    by_controllers: dict[tuple[int, ...], set[str]] = {}
    for e in spec.alphabet | plant.alphabet:
        controllers = tuple(i for i, a in enumerate(agents, start=1) if e in a.controllable)
        if controllers:
            by_controllers.setdefault(controllers, set()).add(e)

    best: Counterexample | None = None
    for controllers in sorted(by_controllers):
        found = _violation_for(spec, plant, agents, controllers, frozenset(by_controllers[controllers]))
        if found is not None and (best is None or _order(found) < _order(best)):
            best = found
    if best is None:
        return HOLDS
    logger.info("Coobservability fails: %s", best)
    return Verdict(False, best)


def _order(c: Counterexample) -> tuple:
    return shortlex(c.word), c.event or ""


def lookalike_ok(spec: Generator, observable: frozenset[str], real: Word, lookalike: Word) -> bool:
    seen = tuple(e for e in real if e in observable)
    return spec.accepts(lookalike) and tuple(e for e in lookalike if e in observable) == seen
