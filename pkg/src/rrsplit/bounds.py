"""Upper bounds on the largest common subgraph reachable from a branch."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sized

from .graph import EquivalenceClasses, iter_members
from .state import Exclusion, Partition, covered_by_equivalents

RepPolicy = Callable[[int], int]


def smallest_rep(X: int) -> int:
    return (X & -X).bit_length() - 1


def random_rep(seed: int | None = None) -> RepPolicy:
    """Representative picker that draws uniformly from the class, reproducibly."""
    rng = random.Random(seed)

    def pick(X: int) -> int:
        return rng.choice(list(iter_members(X)))

    return pick


@dataclass(frozen=True)
class ClassSplit:
    x_left: int
    x_right: int
    y_left: int
    y_right: int


def ub_existing(S: Sized, C: Partition) -> int:
    return len(S) + sum(min(X.bit_count(), Y.bit_count()) for X, Y in C)


def split_class(X: int, Y: int, D: Exclusion, psi: EquivalenceClasses, rep: int) -> ClassSplit:
    if not X >> rep & 1:
        raise ValueError(f"representative {rep} is not in the class")
    x_left = X & psi.psi(rep)
    y_left = Y & covered_by_equivalents(D, rep, psi)
    return ClassSplit(x_left, X & ~x_left, y_left, Y & ~y_left)


def ub_class_ve(split: ClassSplit, y_size: int) -> int:
    xl, xr = split.x_left.bit_count(), split.x_right.bit_count()
    yr = split.y_right.bit_count()
    return min(xr, y_size) + min(xl, yr, max(y_size - xr, 0))


def ub_ve(
    S: Sized,
    C: Partition,
    D: Exclusion,
    psi: EquivalenceClasses,
    rep_policy: RepPolicy = smallest_rep,
) -> int:
    total = len(S)
    for X, Y in C:
        if not D:
            total += min(X.bit_count(), Y.bit_count())
            continue
        split = split_class(X, Y, D, psi, rep_policy(X))
        total += ub_class_ve(split, Y.bit_count())
    return total
