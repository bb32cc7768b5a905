"""Undirected simple graphs backed by per-vertex adjacency bitsets.

Vertex sets throughout the package are plain Python ints used as bitsets:
bit ``i`` set means vertex ``i`` is a member.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


def bitset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    """Vertices of a bitset in ascending order."""
    return list(iter_members(mask))


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "degrees", "_degeneracy")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.degrees = tuple(a.bit_count() for a in self.adj)
        self._degeneracy: int | None = None

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def degeneracy(self) -> int:
        if self._degeneracy is None:
            self._degeneracy = _degeneracy(self)
        return self._degeneracy

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbors_in(self, u: int, X: int) -> int:
        """N(u, X): members of ``X`` adjacent to ``u``."""
        return self.adj[u] & X

    def non_neighbors_in(self, u: int, X: int) -> int:
        """Members of ``X`` other than ``u`` that are not adjacent to ``u``."""
        return X & ~self.adj[u] & ~(1 << u)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting out-of-range endpoints, self-loops and repeated edges."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        if adj[a] >> b & 1:
            raise GraphError(f"duplicate edge ({a}, {b})")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n, adj)


def _degeneracy(g: Graph) -> int:
    # repeated min-degree peeling; quadratic, only used for reporting
    remaining = g.all_vertices
    deg = list(g.degrees)
    best = 0
    for _ in range(g.n):
        u = min(iter_members(remaining), key=lambda w: deg[w])
        best = max(best, deg[u])
        remaining &= ~(1 << u)
        for w in iter_members(g.adj[u] & remaining):
            deg[w] -= 1
    return best


@dataclass(frozen=True)
class EquivalenceClasses:
    """Partition of a graph's vertices by identical open neighbourhood.

    ``class_of[u]`` is the class id of ``u``; ``members[c]`` is the bitset of
    class ``c``. Class ids are assigned in order of each class's smallest vertex.
    """

    class_of: tuple[int, ...]
    members: tuple[int, ...]

    def psi(self, u: int) -> int:
        """Bitset of the vertices structurally equivalent to ``u`` (``u`` included)."""
        return self.members[self.class_of[u]]

    def equivalent(self, u: int, w: int) -> bool:
        return self.class_of[u] == self.class_of[w]

    def __len__(self) -> int:
        return len(self.members)


def equivalence_classes(g: Graph) -> EquivalenceClasses:
    # the adjacency bitset is itself an exact canonical key for N(u)
    by_key: dict[int, int] = {}
    class_of = []
    groups: list[int] = []
    for u in range(g.n):
        cid = by_key.get(g.adj[u])
        if cid is None:
            cid = by_key[g.adj[u]] = len(groups)
            groups.append(0)
        groups[cid] |= 1 << u
        class_of.append(cid)
    return EquivalenceClasses(tuple(class_of), tuple(groups))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) graph drawn from ``rng``."""
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
