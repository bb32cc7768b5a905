"""Branch state: partial solution S, candidate partition C, exclusion set D.

``C`` is a tuple of ``(X, Y)`` bitset pairs, one per label class; a class with
an empty side is never stored. ``D`` is a mapping ``u -> A_u`` (bitset over G)
holding the pairs ``{u} x A_u`` that are forbidden inside the branch.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .graph import EquivalenceClasses, Graph, iter_members

Pair = tuple[int, int]
LabelClass = tuple[int, int]
Partition = tuple[LabelClass, ...]
Exclusion = Mapping[int, int]

EMPTY_EXCLUSION: Exclusion = MappingProxyType({})


class StateError(ValueError):
    pass


@dataclass(frozen=True)
class Branch:
    S: tuple[Pair, ...]
    C: Partition
    D: Exclusion = field(default=EMPTY_EXCLUSION)

    @property
    def size(self) -> int:
        return len(self.S)


def initial_branch(Q: Graph, G: Graph) -> Branch:
    if Q.n == 0 or G.n == 0:
        raise StateError("both graphs must have at least one vertex")
    return Branch((), ((Q.all_vertices, G.all_vertices),), EMPTY_EXCLUSION)


def find_class(C: Partition, u: int) -> int:
    """Index of the class whose X side contains ``u``, or -1."""
    bit = 1 << u
    for i, (X, _) in enumerate(C):
        if X & bit:
            return i
    return -1


def refine_include(C: Partition, pair: Pair, Q: Graph, G: Graph) -> Partition:
    """Candidate partition after moving ``pair`` into the solution.

    Every class splits into its neighbour half and its non-neighbour half
    (relative to ``u`` in Q and ``v`` in G); halves with an empty side vanish.
    """
    u, v = pair
    k = find_class(C, u)
    if k < 0 or not C[k][1] >> v & 1:
        raise StateError(f"pair {pair} is not a candidate pair")
    adj_u, adj_v = Q.adj[u], G.adj[v]
    keep_u, keep_v = ~(1 << u), ~(1 << v)
    out = []
    for X, Y in C:
        nx_, ny_ = X & adj_u, Y & adj_v
        if nx_ and ny_:
            out.append((nx_, ny_))
        fx, fy = X & ~adj_u & keep_u, Y & ~adj_v & keep_v
        if fx and fy:
            out.append((fx, fy))
    return tuple(out)


def exclude_vertex(C: Partition, u: int) -> Partition:
    return exclude_mask(C, 1 << u)


def exclude_mask(C: Partition, mask: int) -> Partition:
    out = []
    for X, Y in C:
        X &= ~mask
        if X:
            out.append((X, Y))
    return tuple(out)


def exclude_equivalents(C: Partition, u: int, psi: EquivalenceClasses) -> Partition:
    """Drop every vertex structurally equivalent to ``u`` (``u`` included) from C."""
    return exclude_mask(C, psi.psi(u))


def extend_exclusion(D: Exclusion, u: int, tried: int) -> Exclusion:
    if not tried:
        return D
    rows = dict(D)
    rows[u] = rows.get(u, 0) | tried
    return MappingProxyType(rows)


def covered_by_equivalents(D: Exclusion, u: int, psi: EquivalenceClasses) -> int:
    """Union of the rows ``A_w`` over row keys ``w`` equivalent to ``u``."""
    cid = psi.class_of[u]
    cover = 0
    for w, row in D.items():
        if psi.class_of[w] == cid:
            cover |= row
    return cover


def flat_pairs(C: Partition) -> set[Pair]:
    """Materialise the candidate pairs of a partition (for tests and oracles)."""
    return {(u, v) for X, Y in C for u in iter_members(X) for v in iter_members(Y)}
