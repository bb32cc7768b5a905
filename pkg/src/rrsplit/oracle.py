"""Exhaustive reference for tiny instances, independent of the solver."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph

MAX_ORACLE_VERTICES = 8


def verify_mapping(Q: Graph, G: Graph, pairs: Sequence[tuple[int, int]]) -> bool:
    """True iff ``pairs`` is injective on both sides and preserves adjacency and non-adjacency."""
    try:
        us = [int(u) for u, _ in pairs]
        vs = [int(v) for _, v in pairs]
    except (TypeError, ValueError):
        return False
    if len(set(us)) != len(us) or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= u < Q.n for u in us) or any(not 0 <= v < G.n for v in vs):
        return False
    for i in range(len(us)):
        for j in range(i + 1, len(us)):
            if Q.adjacent(us[i], us[j]) != G.adjacent(vs[i], vs[j]):
                return False
    return True


def brute_force_mcs(Q: Graph, G: Graph, cap: int = MAX_ORACLE_VERTICES) -> tuple[int, list[tuple[int, int]]]:
    """Largest common induced subgraph by enumerating Q-subsets (largest first) and injections."""
    if Q.n > cap or G.n > cap:
        raise ValueError(f"oracle limited to {cap} vertices per graph, got {Q.n} and {G.n}")
    for k in range(min(Q.n, G.n), 0, -1):
        for subset in combinations(range(Q.n), k):
            found = _inject(Q, G, subset, [], set())
            if found is not None:
                return k, list(zip(subset, found))
    return 0, []


def _inject(Q: Graph, G: Graph, subset, image: list[int], used: set[int]):
    i = len(image)
    if i == len(subset):
        return list(image)
    u = subset[i]
    for v in range(G.n):
        if v in used:
            continue
        if all(Q.adjacent(u, subset[j]) == G.adjacent(v, image[j]) for j in range(i)):
            image.append(v)
            used.add(v)
            found = _inject(Q, G, subset, image, used)
            if found is not None:
                return found
            image.pop()
            used.discard(v)
    return None
