"""Backtracking search for a maximum common induced subgraph.

Two procedures share the same skeleton:

``mcsplit``
    partition backtracking with the ``|S| + sum min(|X|, |Y|)`` bound;
``rrsplit``
    the same search carrying an exclusion set, with vertex-equivalence
    pruning of both child groups, the maximality shortcut and the
    exclusion-aware bound. Each of the three can be switched off for ablation.

Every entry into the recursion counts as one branch. A second-group child
whose candidate set would be empty is not formed.
"""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bounds import RepPolicy, random_rep, smallest_rep, ub_existing, ub_ve
from .graph import Graph, equivalence_classes, iter_members
from .reductions import apply_maximality, first_group_prunable, maximality_pair
from .state import (
    Branch,
    Pair,
    Partition,
    StateError,
    exclude_equivalents,
    exclude_vertex,
    extend_exclusion,
    initial_branch,
    refine_include,
)

DEFAULT_TIME_LIMIT = 1800.0

OPTIMAL = "optimal"
TIME_LIMIT = "time_limit"
BRANCH_LIMIT = "branch_limit"

# name -> (algorithm, ve_reductions, maximality, ve_bound)
VARIANTS = {
    "mcsplit": ("mcsplit", False, False, False),
    "rrsplit": ("rrsplit", True, True, True),
    "rrsplit-ve": ("rrsplit", False, True, True),
    "rrsplit-mb": ("rrsplit", True, False, True),
    "rrsplit-ub": ("rrsplit", True, True, False),
}


@dataclass
class SolverConfig:
    algorithm: str = "rrsplit"
    ve_reductions: bool = True
    maximality: bool = True
    ve_bound: bool = True
    time_limit: float | None = DEFAULT_TIME_LIMIT
    branch_limit: int | None = None
    rep_policy: str = "smallest"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.algorithm not in ("mcsplit", "rrsplit"):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.branch_limit is not None and self.branch_limit <= 0:
            raise ValueError("branch_limit must be positive")
        if self.rep_policy not in ("smallest", "random"):
            raise ValueError(f"unknown rep_policy {self.rep_policy!r}")

    @classmethod
    def variant(cls, name: str, **kwargs) -> "SolverConfig":
        """Config for one of the named variants, e.g. ``"rrsplit-mb"``."""
        try:
            algorithm, ve, mb, ub = VARIANTS[name]
        except KeyError:
            raise ValueError(f"unknown variant {name!r}; choose from {', '.join(VARIANTS)}") from None
        return cls(algorithm=algorithm, ve_reductions=ve, maximality=mb, ve_bound=ub, **kwargs)

    def make_rep_policy(self) -> RepPolicy:
        return random_rep(self.seed) if self.rep_policy == "random" else smallest_rep


@dataclass
class SolveReport:
    best_size: int
    best_mapping: list[Pair]
    branches: int
    elapsed: float
    terminated: str
    similarity: Fraction | None = None
    improvements: list[int] = field(default_factory=list)

    @property
    def optimal(self) -> bool:
        return self.terminated == OPTIMAL


Observer = Callable[[Branch], None]


def select_branch(C: Partition, Q: Graph) -> tuple[int, int]:
    """Class with the smallest ``max(|X|, |Y|)`` and its highest-degree vertex."""
    if not C:
        raise StateError("cannot branch on an empty candidate set")
    best_k, best_key = 0, None
    for k, (X, Y) in enumerate(C):
        key = max(X.bit_count(), Y.bit_count())
        if best_key is None or key < best_key:
            best_k, best_key = k, key
    deg = Q.degrees
    u = max(iter_members(C[best_k][0]), key=lambda w: (deg[w], -w))
    return best_k, u


def order_values(Y: int, G: Graph) -> list[int]:
    deg = G.degrees
    return sorted(iter_members(Y), key=lambda v: (-deg[v], v))


class _Stop(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Search:
    def __init__(self, Q: Graph, G: Graph, cfg: SolverConfig, observer: Observer | None):
        self.Q, self.G, self.cfg = Q, G, cfg
        self.observer = observer
        self.rr = cfg.algorithm == "rrsplit"
        self.use_ve = self.rr and cfg.ve_reductions
        self.use_mb = self.rr and cfg.maximality
        self.use_ub = self.rr and cfg.ve_bound
        self.psi = equivalence_classes(Q)
        self.rep = cfg.make_rep_policy()
        self.best: tuple[Pair, ...] = ()
        self.improvements: list[int] = []
        self.branches = 0
        self.deadline = None if cfg.time_limit is None else time.perf_counter() + cfg.time_limit

    def run(self) -> str:
        try:
            self.rec(initial_branch(self.Q, self.G))
        except _Stop as stop:
            return stop.reason
        return OPTIMAL

    def rec(self, b: Branch) -> None:
        self.branches += 1
        if self.cfg.branch_limit is not None and self.branches > self.cfg.branch_limit:
            self.branches -= 1
            raise _Stop(BRANCH_LIMIT)
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Stop(TIME_LIMIT)

        S, C, D = b.S, b.C, b.D
        if len(S) > len(self.best):
            self.best = S
            self.improvements.append(len(S))
        if self.observer is not None:
            self.observer(b)
        if not C:
            return
        if self.use_ub:
            bound = ub_ve(S, C, D, self.psi, self.rep)
        else:
            bound = ub_existing(S, C)
        if bound <= len(self.best):
            return

        Q, G = self.Q, self.G
        k, u = select_branch(C, Q)
        Y = C[k][1]
        values = order_values(Y, G)

        if self.use_mb:
            v = maximality_pair(C, u, values, Q, G)
            if v is not None:
                self.rec(apply_maximality(b, u, v, Y, Q, G, record_siblings=False))
                return

        tried = 0
        for v in values:
            if self.use_ve and first_group_prunable(u, v, D, self.psi):
                continue
            child_D = extend_exclusion(D, u, tried) if self.use_ve else D
            self.rec(Branch(S + ((u, v),), refine_include(C, (u, v), Q, G), child_D))
            tried |= 1 << v

        if self.use_ve:
            rest = exclude_equivalents(C, u, self.psi)
        else:
            rest = exclude_vertex(C, u)
        # an empty remainder would only repeat S, which this branch already offered
        if rest:
            self.rec(Branch(S, rest, D))


def solve(Q: Graph, G: Graph, cfg: SolverConfig | None = None, observer: Observer | None = None) -> SolveReport:
    """Find a maximum common induced subgraph of ``Q`` and ``G``.

    The mapping in the report always pairs vertices of ``Q`` (first) with
    vertices of ``G`` (second), even though the search internally puts the
    smaller graph first. ``observer``, if given, is called with every branch
    the search enters (in the internal orientation).
    """
    cfg = cfg or SolverConfig()
    if Q.n == 0 or G.n == 0:
        raise StateError("both graphs must have at least one vertex")
    swapped = Q.n > G.n
    if swapped:
        Q, G = G, Q

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * (Q.n + G.n) + 1000))
    start = time.perf_counter()
    try:
        search = _Search(Q, G, cfg, observer)
        terminated = search.run()
    finally:
        sys.setrecursionlimit(old_limit)
    elapsed = time.perf_counter() - start

    mapping = [(v, u) if swapped else (u, v) for u, v in search.best]
    mapping.sort()
    size = len(mapping)
    similarity = Fraction(size, min(Q.n, G.n)) if terminated == OPTIMAL else None
    return SolveReport(size, mapping, search.branches, elapsed, terminated, similarity, search.improvements)


def solve_mcsplit(Q: Graph, G: Graph, cfg: SolverConfig | None = None, observer: Observer | None = None) -> SolveReport:
    cfg = cfg or SolverConfig.variant("mcsplit")
    if cfg.algorithm != "mcsplit":
        raise ValueError("solve_mcsplit needs an mcsplit config")
    return solve(Q, G, cfg, observer)


def solve_rrsplit(Q: Graph, G: Graph, cfg: SolverConfig | None = None, observer: Observer | None = None) -> SolveReport:
    cfg = cfg or SolverConfig()
    if cfg.algorithm != "rrsplit":
        raise ValueError("solve_rrsplit needs an rrsplit config")
    return solve(Q, G, cfg, observer)
