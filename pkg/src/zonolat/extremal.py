"""Largest diameter of a lattice zonotope inside the box [0, k]^d.

Two routes:

  * `special_box_optimum(d, p)`: at the box sizes realized by the 1-norm
    primitive zonotope family the optimum is known exactly and is achieved
    by that zonotope alone, so it reduces to two counts.
  * `brute_force_max_diameter(d, k)`: an independent exhaustive search over
    generator sets, used to certify the special values and the small cases
    at desk scale.

The search runs over canonical primitive candidate vectors only; replacing
any generator by the primitive vector of its direction keeps the generator
count and never increases a coordinate width, so a primitive optimum always
exists. Its state is the per-coordinate width budget: a set of generators
fits in [0, k]^d iff every coordinate width is at most k, and consequently
the generator 1-norms sum to at most k*d, which powers the bound.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError
from .primitive import DEFAULT_ENUM_CAP, Region, Vector, enumerate_primitive
from .zonotope import GeneratorSet, counted_metrics

__all__ = [
    "DEFAULT_NODE_CAP",
    "ExtremalResult",
    "special_box_optimum",
    "brute_force_max_diameter",
]

DEFAULT_NODE_CAP = 10**9
_DEFAULT_DIMENSION = 2
_DEFAULT_BOX_MAX = 9


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of the exhaustive box-constrained diameter search."""

    d: int
    k: int
    best_count: int
    optimal_sets: tuple[GeneratorSet, ...]
    search_exhaustive: bool
    nodes: int

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "best_count": self.best_count,
            "optimal_sets": [g.as_dict() for g in self.optimal_sets],
            "search_exhaustive": self.search_exhaustive,
        }


def special_box_optimum(d: int, p: int) -> tuple[int, int]:
    """(k, diameter) of the 1-norm primitive zonotope of radius p.

    At this particular k the returned diameter is the exact maximum over
    all lattice zonotopes in [0, k]^d, and the maximizer is unique.
    """
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    if p < 1:
        raise DomainError(f"radius must be >= 1, got {p}")
    m = counted_metrics(d, p)
    return m.k, m.diameter


def _candidate_pool(d: int, k: int, cap: int) -> list[Vector]:
    """Canonical primitive vectors that could join a width-k feasible set.

    1-norm at most k*d (the total width budget) and every coordinate at
    most k in absolute value; sorted by (1-norm, coordinates) so that the
    greedy bound and the search order are deterministic.
    """
    pool = [
        v
        for v in enumerate_primitive(d, k * d, 1, Region.CANONICAL_HALF, cap)
        if max(abs(c) for c in v) <= k
    ]
    pool.sort(key=lambda v: (sum(abs(c) for c in v), v))
    return pool


class _SearchCapReached(Exception):
    pass


def brute_force_max_diameter(
    d: int,
    k: int,
    node_cap: int = DEFAULT_NODE_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
    force: bool = False,
) -> ExtremalResult:
    """Exhaustive branch-and-bound for the box-constrained diameter maximum.

    Explores include/exclude decisions over the candidate pool in 1-norm
    order. A node is cut only when even the greedy 1-norm packing of the
    remaining candidates cannot beat the incumbent, so every optimal set
    is found; all of them are returned, canonically sorted. If the node
    cap is hit the incumbent is returned with search_exhaustive=False.

    The default envelope is the plane with k <= 9; pass force=True
    (with a suitable node cap) to go beyond it.
    """
    if d < 1 or k < 1:
        raise DomainError(f"need d >= 1 and k >= 1, got d={d}, k={k}")
    if not force and (d != _DEFAULT_DIMENSION or k > _DEFAULT_BOX_MAX):
        raise DomainError(
            f"search defaults cover d = {_DEFAULT_DIMENSION}, k <= {_DEFAULT_BOX_MAX};"
            " pass force=True to override"
        )
    pool = _candidate_pool(d, k, enum_cap)
    norms = [sum(abs(c) for c in v) for v in pool]
    n = len(pool)
    budget_total = k * d
    if sys.getrecursionlimit() < n + 64:
        sys.setrecursionlimit(n + 64)

    best = 0
    optima: list[tuple[Vector, ...]] = []
    nodes = 0
    chosen: list[Vector] = []
    widths = [0] * d

    def greedy_extra(idx: int, budget: int) -> int:
        extra = 0
        for j in range(idx, n):
            if norms[j] > budget:
                break
            budget -= norms[j]
            extra += 1
        return extra

    def walk(idx: int, consumed: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_cap:
            raise _SearchCapReached
        if len(chosen) + greedy_extra(idx, budget_total - consumed) < best:
            return
        if idx == n:
            if len(chosen) > best:
                best = len(chosen)
                optima.clear()
                optima.append(tuple(chosen))
            elif len(chosen) == best:
                optima.append(tuple(chosen))
            return
        v = pool[idx]
        if all(w + abs(c) <= k for w, c in zip(widths, v)):
            for j, c in enumerate(v):
                widths[j] += abs(c)
            chosen.append(v)
            walk(idx + 1, consumed + norms[idx])
            chosen.pop()
            for j, c in enumerate(v):
                widths[j] -= abs(c)
        walk(idx + 1, consumed)

    exhaustive = True
    try:
        walk(0, 0)
    except _SearchCapReached:
        exhaustive = False
    except RecursionError:
        raise ResourceLimitError(
            f"candidate pool of {n} vectors exceeds the recursion depth; raise it"
            " or shrink the box"
        ) from None

    sets = tuple(
        GeneratorSet(d=d, generators=tuple(sorted(s)))
        for s in sorted(tuple(sorted(s)) for s in optima)
    )
    return ExtremalResult(
        d=d,
        k=k,
        best_count=best,
        optimal_sets=sets,
        search_exhaustive=exhaustive,
        nodes=nodes,
    )
