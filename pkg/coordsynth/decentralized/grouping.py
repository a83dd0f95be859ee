from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from utils.errors import InvalidRequestError
from verify import AgentAlphabet

logger: logging.Logger = logging.getLogger("coordsynth")


def incidence(agents: Sequence[AgentAlphabet]) -> tuple[np.ndarray, list[str]]:
    events = sorted(frozenset().union(*(a.observable for a in agents))) if agents else []
    matrix = np.zeros((len(agents), len(events)), dtype=np.int64)
    column = {e: k for k, e in enumerate(events)}
    for i, a in enumerate(agents):
        for e in a.observable:
            matrix[i, column[e]] = 1
    return matrix, events


def shared_matrix(agents: Sequence[AgentAlphabet]) -> np.ndarray:
    """M[i][j] = |Σ_{o,i} ∩ Σ_{o,j}| off the diagonal, 0 on it."""
    matrix, _ = incidence(agents)
    shared = matrix @ matrix.T
    np.fill_diagonal(shared, 0)
    return shared


def group_agents(agents: Sequence[AgentAlphabet], target_groups: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Agglomerative grouping by shared observations.

    Clusters are merged pairwise, always the pair sharing the most observed
    events (ties go to the pair with the smallest agent numbers). Without
    ``target_groups`` merging stops once the best pair shares no more events
    than every agent observes, which is zero when nothing is observed by all.
    """
    n = len(agents)
    if n == 0:
        return ()
    if target_groups is not None and not 1 <= target_groups <= n:
        raise InvalidRequestError(f"target_groups must be between 1 and {n}")
    matrix, _ = incidence(agents)
    floor = int(matrix.all(axis=0).sum()) if n > 1 else 0
    clusters: list[list[int]] = [[i] for i in range(n)]

    while len(clusters) > 1:
        if target_groups is not None and len(clusters) <= target_groups:
            break
        rows = np.array([matrix[c].max(axis=0) for c in clusters])
        shared = rows @ rows.T
        np.fill_diagonal(shared, -1)
        best = int(shared.max())
        if target_groups is None and best <= floor:
            break
        a, b = (int(x) for x in np.argwhere(shared == best)[0])
        logger.debug("Merging agent clusters %s and %s (%d shared events)", clusters[a], clusters[b], best)
        clusters[a] = sorted(clusters[a] + clusters[b])
        del clusters[b]
        clusters.sort(key=lambda c: c[0])

    return tuple(tuple(i + 1 for i in c) for c in clusters)
