"""Pruning rules layered on top of plain partition backtracking.

* first-group pruning: skip ``<u, v>`` when a pair ``<u', v>`` with ``u'``
  equivalent to ``u`` is already excluded;
* second-group pruning: see :func:`rrsplit.state.exclude_equivalents`;
* maximality: when some ``<u, v>`` agrees with every class wholesale, a single
  child suffices.
"""
from __future__ import annotations

from typing import Iterable

from .graph import EquivalenceClasses, Graph, iter_members
from .state import (
    Branch,
    Exclusion,
    Partition,
    StateError,
    covered_by_equivalents,
    extend_exclusion,
    find_class,
    refine_include,
)


def first_group_prunable(u: int, v: int, D: Exclusion, psi: EquivalenceClasses) -> bool:
    cid = psi.class_of[u]
    class_of = psi.class_of
    for w, row in D.items():
        if class_of[w] == cid and row >> v & 1:
            return True
    return False


def _agrees_everywhere(C: Partition, adj_u: int, u_bit: int, adj_v: int, v_bit: int) -> bool:
    for X, Y in C:
        nu, nv = X & adj_u, Y & adj_v
        if nu == X & ~u_bit and nv == Y & ~v_bit:
            continue
        if not nu and not nv:
            continue
        return False
    return True


def maximality_pair(
    C: Partition,
    u: int,
    Y_of_u: int | Iterable[int],
    Q: Graph,
    G: Graph,
) -> int | None:
    """First ``v`` (in the given order) such that ``<u, v>`` satisfies the maximality condition.

    ``Y_of_u`` is either the class's Y bitset (scanned in ascending id order)
    or an explicit ordering of its vertices.
    """
    if find_class(C, u) < 0:
        raise StateError(f"vertex {u} is not a candidate")
    order = iter_members(Y_of_u) if isinstance(Y_of_u, int) else Y_of_u
    adj_u, u_bit = Q.adj[u], 1 << u
    for v in order:
        if _agrees_everywhere(C, adj_u, u_bit, G.adj[v], 1 << v):
            return v
    return None


def apply_maximality(
    branch: Branch,
    u: int,
    v: int,
    Y: int,
    Q: Graph,
    G: Graph,
    psi: EquivalenceClasses | None = None,
    record_siblings: bool = True,
) -> Branch:
    """The single child ``(S + <u,v>, C \\ u \\ v, D + {u} x (Y - {v}))``.

    ``record_siblings=False`` leaves ``D`` untouched. The solver uses that
    form: the skipped siblings ``<u, w>`` were never searched, so listing them
    as excluded lets first-group pruning and the exclusion-aware bound discard
    ``<u', w>`` for a twin ``u'`` of ``u`` inside this very child, which can
    lose the optimum (two isolated vertices against two isolated vertices
    already shows it).

    With ``psi`` given, values already excluded through a row equivalent to
    ``u`` are not repeated in ``u``'s row; which pairs end up excluded is the
    same either way.
    """
    C = refine_include(branch.C, (u, v), Q, G)
    D = branch.D
    if record_siblings:
        extra = Y & ~(1 << v)
        if psi is not None:
            extra &= ~covered_by_equivalents(D, u, psi)
        D = extend_exclusion(D, u, extra)
    return Branch(branch.S + ((u, v),), C, D)
