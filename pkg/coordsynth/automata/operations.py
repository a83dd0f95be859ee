from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from automata.generator import Alphabet, Generator, Word, alphabet, build, trim
from utils.errors import InvalidRequestError

logger: logging.Logger = logging.getLogger("coordsynth")


class InclusionMode(str, Enum):
    SUBSET = "subset"
    EQUAL = "equal"


@dataclass(frozen=True)
class Inclusion:
    holds: bool
    witness: Word | None = None

    def __bool__(self) -> bool:
        return self.holds


def empty(events: Iterable[str] = (), controllable: Iterable[str] = ()) -> Generator:
    events = alphabet(events)
    return Generator(events, (), 0, 0, alphabet(controllable) & events)


def epsilon(events: Iterable[str] = (), controllable: Iterable[str] = ()) -> Generator:
    events = alphabet(events)
    return Generator(events, (), 1, 0, alphabet(controllable) & events)


def universal(events: Iterable[str], controllable: Iterable[str] = ()) -> Generator:
    events = alphabet(events)
    return Generator(events, ((0, e, 0) for e in sorted(events)), 1, 0, alphabet(controllable) & events)


def from_words(
    words: Iterable[Sequence[str]], events: Iterable[str] | None = None, controllable: Iterable[str] = ()
) -> Generator:
    """Prefix-tree generator of the prefix closure of ``words``.

    No words at all gives the empty language; ``[()]`` gives ``{ε}``.
    """
    words = [tuple(w) for w in words]
    events = alphabet(events) if events is not None else alphabet(e for w in words for e in w)
    if not words:
        return empty(events, controllable)
    states: dict[Word, dict[str, Word]] = {(): {}}
    for w in words:
        for i, e in enumerate(w):
            if e not in events:
                raise InvalidRequestError(f"Word {' '.join(w)!r} uses event {e!r} outside the alphabet")
            states.setdefault(w[:i], {})[e] = w[: i + 1]
            states.setdefault(w[: i + 1], {})
    return build(events, states, (), controllable)


def sync_product(parts: Sequence[Generator]) -> Generator:
    """Synchronous product: shared events move all parts owning them, private events interleave."""
    if not parts:
        raise InvalidRequestError("Synchronous product of an empty list of generators")
    events = frozenset().union(*(p.alphabet for p in parts))
    controllable = frozenset().union(*(p.controllable for p in parts))
    if any(p.is_empty for p in parts):
        return empty(events, controllable)
    if len(parts) == 1:
        return trim(parts[0])

    owners = {e: [i for i, p in enumerate(parts) if e in p.alphabet] for e in events}
    start = tuple(p.initial for p in parts)
    states: dict[tuple[int, ...], dict[str, tuple[int, ...]]] = {}
    queue = deque([start])
    states[start] = {}
    while queue:
        state = queue.popleft()
        candidates = sorted(set().union(*(parts[i].successors(q) for i, q in enumerate(state))))
        for e in candidates:
            nxt = list(state)
            for i in owners[e]:
                dst = parts[i].step(state[i], e)
                if dst is None:
                    break
                nxt[i] = dst
            else:
                target = tuple(nxt)
                states[state][e] = target
                if target not in states:
                    states[target] = {}
                    queue.append(target)
    return build(events, states, start, controllable)


def _closure(g: Generator, states: Iterable[int], silent: frozenset[str]) -> frozenset[int]:
    seen = set(states)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for e, dst in g.successors(q).items():
            if e in silent and dst not in seen:
                seen.add(dst)
                stack.append(dst)
    return frozenset(seen)


def project(g: Generator, onto: Iterable[str], minimize: bool = False) -> Generator:
    """Natural projection by subset construction, events outside ``onto`` being silent."""
    onto = alphabet(onto)
    dropped = onto - g.alphabet
    if dropped:
        logger.warning("Projection ignores events outside the alphabet: %s", " ".join(sorted(dropped)))
    onto = onto & g.alphabet
    if g.is_empty:
        return empty(onto, g.controllable)
    silent = g.alphabet - onto

    start = _closure(g, [g.initial], silent)
    states: dict[frozenset[int], dict[str, frozenset[int]]] = {start: {}}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        moves: dict[str, set[int]] = {}
        for q in subset:
            for e, dst in g.successors(q).items():
                if e in onto:
                    moves.setdefault(e, set()).add(dst)
        for e in sorted(moves):
            target = _closure(g, moves[e], silent)
            states[subset][e] = target
            if target not in states:
                states[target] = {}
                queue.append(target)
    res = build(onto, states, start, g.controllable)
    return _partition_refine(res) if minimize else res


def inverse_project(g: Generator, ambient: Iterable[str]) -> Generator:
    ambient = alphabet(ambient)
    if not g.alphabet <= ambient:
        raise InvalidRequestError(
            f"Inverse projection target misses events {' '.join(sorted(g.alphabet - ambient))}"
        )
    if g.is_empty:
        return empty(ambient, g.controllable)
    extra = sorted(ambient - g.alphabet)
    transitions = list(g.transitions())
    transitions.extend((q, e, q) for q in range(g.num_states) for e in extra)
    return trim(Generator(ambient, transitions, g.num_states, g.initial, g.controllable))


def _missing(a: Generator, b: Generator) -> Word | None:
    """Shortest word of L(b) outside L(a), ties broken by event names; ``None`` when L(b) ⊆ L(a)."""
    if b.is_empty:
        return None
    if a.is_empty:
        return ()
    start = (a.initial, b.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        qa, qb = pair
        succ = b.successors(qb)
        for e in sorted(succ):
            da = a.step(qa, e)
            if da is None:
                return trace_path(parent, pair) + (e,)
            target = (da, succ[e])
            if target not in parent:
                parent[target] = (pair, e)
                queue.append(target)
    return None


def trace_path(parent: dict, node: object) -> Word:
    """Word leading to ``node`` in a breadth-first parent map of ``(predecessor, event)`` entries."""
    events = []
    while parent[node] is not None:
        node, e = parent[node]
        events.append(e)
    return tuple(reversed(events))


def shortlex(w: Sequence[str]) -> tuple[int, tuple[str, ...]]:
    return len(w), tuple(w)


def language_includes(a: Generator, b: Generator, mode: InclusionMode | str = InclusionMode.SUBSET) -> Inclusion:
    """``subset``: L(b) ⊆ L(a). ``equal``: L(a) = L(b). Failures carry a shortest witness."""
    mode = InclusionMode(mode)
    witness = _missing(a, b)
    if mode is InclusionMode.EQUAL:
        other = _missing(b, a)
        if witness is None or (other is not None and shortlex(other) < shortlex(witness)):
            witness = other
    return Inclusion(witness is None, witness)


def language_equal(a: Generator, b: Generator) -> bool:
    return language_includes(a, b, InclusionMode.EQUAL).holds


def enumerate_bounded(g: Generator, maxlen: int) -> list[Word]:
    """All words of L(g) up to ``maxlen`` events, ordered by length then event names."""
    if maxlen < 0:
        raise InvalidRequestError("maxlen must be nonnegative")
    if g.is_empty:
        return []
    res: list[Word] = [()]
    layer: list[tuple[Word, int]] = [((), g.initial)]
    for _ in range(maxlen):
        nxt = []
        for w, q in layer:
            succ = g.successors(q)
            for e in sorted(succ):
                nxt.append((w + (e,), succ[e]))
        if not nxt:
            break
        nxt.sort(key=lambda item: item[0])
        res.extend(w for w, _ in nxt)
        layer = nxt
    return res


def minimize(g: Generator) -> Generator:
    return _partition_refine(g)


def _partition_refine(g: Generator) -> Generator:
    # every state is accepting, so the initial partition is a single block
    g = trim(g)
    if g.is_empty:
        return g
    events = sorted(g.alphabet)
    block = [0] * g.num_states
    count = 1
    while True:
        signatures: dict[tuple, int] = {}
        refined = []
        for q in range(g.num_states):
            sig = (block[q],) + tuple(
                block[d] if (d := g.step(q, e)) is not None else -1 for e in events
            )
            refined.append(signatures.setdefault(sig, len(signatures)))
        if len(signatures) == count:
            break
        block, count = refined, len(signatures)
    transitions = {(block[q], e, block[d]) for q, e, d in g.transitions()}
    return trim(Generator(g.alphabet, transitions, count, block[g.initial], g.controllable))


def union(a: Generator, b: Generator) -> Generator:
    events = a.alphabet | b.alphabet
    controllable = a.controllable | b.controllable
    if a.is_empty:
        return trim(widen(b, events, controllable))
    if b.is_empty:
        return trim(widen(a, events, controllable))
    start = (a.initial, b.initial)
    states: dict[tuple[int | None, int | None], dict[str, tuple[int | None, int | None]]] = {start: {}}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        qa, qb = pair
        succ_a = a.successors(qa) if qa is not None else {}
        succ_b = b.successors(qb) if qb is not None else {}
        for e in sorted(set(succ_a) | set(succ_b)):
            target = (succ_a.get(e), succ_b.get(e))
            states[pair][e] = target
            if target not in states:
                states[target] = {}
                queue.append(target)
    return build(events, states, start, controllable)


def widen(g: Generator, events: Alphabet, controllable: Alphabet) -> Generator:
    """``g`` with a larger declared alphabet but the same words (no self-loops added)."""
    return Generator(events, g.transitions(), g.num_states, g.initial, controllable & events)
