"""Vertex-edge graph of a small zonotope via sign-vector feasibility.

Each vertex of the zonotope sum([0, g_i]) is picked out by a sign vector
s in {+1, -1}^m: the vertex maximizing a generic direction c sits at
sum of the g_i with s_i = +1, where s_i = sign(c . g_i). A sign vector is
feasible exactly when the strict homogeneous system { s_i (g_i . c) > 0 }
has a solution, which is decided here by exact integer Fourier-Motzkin
elimination. Two vertices are adjacent iff their sign vectors differ in
one position: flipping s_i crosses only the hyperplane normal to g_i.

Deliberately a small-scale instrument (m <= 12 by default): it certifies
that the graph diameter equals the generator count, it is not a vertex
enumerator for large zonotopes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd

from .errors import DomainError, InvariantViolationError, ResourceLimitError
from .zonotope import GeneratorSet

__all__ = [
    "DEFAULT_GENERATOR_CAP",
    "SignVector",
    "ZonotopeGraph",
    "feasible_sign_vectors",
    "build_graph",
    "graph_diameter",
    "signs_text",
]

SignVector = tuple[int, ...]

DEFAULT_GENERATOR_CAP = 12
_MAX_DIMENSION = 6


def signs_text(signs: SignVector) -> str:
    """Compact '+-' rendering of a sign vector."""
    return "".join("+" if s > 0 else "-" for s in signs)


def _normalized(row: tuple[int, ...]) -> tuple[int, ...]:
    g = reduce(gcd, row, 0)
    return row if g <= 1 else tuple(c // g for c in row)


def _strictly_feasible(rows: list[tuple[int, ...]], d: int) -> bool:
    """Does some c satisfy row . c > 0 for every row? Exact Fourier-Motzkin.

    Eliminating a variable combines each (positive, negative) coefficient
    pair into a new strict inequality with integer coefficients; a derived
    all-zero row reads 0 > 0 and kills feasibility. A system with every
    variable eliminated and no rows left is feasible.
    """
    work = {_normalized(r) for r in rows}
    for var in range(d):
        pos = [r for r in work if r[var] > 0]
        neg = [r for r in work if r[var] < 0]
        work = {r for r in work if r[var] == 0}
        for rp in pos:
            a = rp[var]
            for rn in neg:
                b = rn[var]
                combined = tuple(a * y - b * x for x, y in zip(rp, rn))
                if not any(combined):
                    return False
                work.add(_normalized(combined))
    return not work


def feasible_sign_vectors(
    zono: GeneratorSet, max_generators: int = DEFAULT_GENERATOR_CAP
) -> list[SignVector]:
    """All sign vectors whose strict system is solvable, in lexicographic order.

    Feasibility is symmetric under global negation (send c to -c), so only
    vectors with leading +1 are tested and mirrored.
    """
    m = len(zono.generators)
    if m > max_generators:
        raise ResourceLimitError(
            f"{m} generators exceed the sign-vector cap of {max_generators}"
        )
    if zono.d > _MAX_DIMENSION:
        raise DomainError(
            f"sign-vector feasibility supports dimension <= {_MAX_DIMENSION}, got {zono.d}"
        )
    if m == 0:
        return [()]
    gens = zono.generators
    found: list[SignVector] = []
    for tail in product((-1, 1), repeat=m - 1):
        signs = (1,) + tail
        rows = [tuple(s * c for c in g) for s, g in zip(signs, gens)]
        if _strictly_feasible(rows, zono.d):
            found.append(signs)
            found.append(tuple(-s for s in signs))
    found.sort()
    return found


@dataclass(frozen=True)
class ZonotopeGraph:
    """Vertices (sign vector plus coordinates) and edges of a zonotope graph."""

    d: int
    sign_vectors: tuple[SignVector, ...]
    coords: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.sign_vectors)

    def as_dict(self) -> dict:
        return {
            "vertices": [
                {"signs": signs_text(s), "coords": list(c)}
                for s, c in zip(self.sign_vectors, self.coords)
            ],
            "edges": [list(e) for e in self.edges],
        }


def build_graph(
    zono: GeneratorSet, max_generators: int = DEFAULT_GENERATOR_CAP
) -> ZonotopeGraph:
    """Graph of the zonotope sum([0, g_i]): vertices, coordinates, edges.

    The vertex of a sign vector s sits at sum of the g_i with s_i = +1;
    every coordinate is checked against the bounding box
    [sum min(0, g), sum max(0, g)] as a sanity invariant.
    """
    svs = feasible_sign_vectors(zono, max_generators)
    gens = zono.generators
    d = zono.d
    low = tuple(sum(min(0, g[j]) for g in gens) for j in range(d))
    high = tuple(sum(max(0, g[j]) for g in gens) for j in range(d))
    coords = []
    for s in svs:
        v = [0] * d
        for si, g in zip(s, gens):
            if si > 0:
                for j, c in enumerate(g):
                    v[j] += c
        if any(not lo <= x <= hi for x, lo, hi in zip(v, low, high)):
            raise InvariantViolationError(f"vertex {v} escapes the bounding box")
        coords.append(tuple(v))
    index = {s: i for i, s in enumerate(svs)}
    edges = []
    for s, i in index.items():
        for pos in range(len(s)):
            flipped = s[:pos] + (-s[pos],) + s[pos + 1 :]
            j = index.get(flipped)
            if j is not None and i < j:
                edges.append((i, j))
    edges.sort()
    return ZonotopeGraph(
        d=d, sign_vectors=tuple(svs), coords=tuple(coords), edges=tuple(edges)
    )


def graph_diameter(graph: ZonotopeGraph) -> int:
    """Largest BFS eccentricity over all vertices; errors if disconnected."""
    n = len(graph.sign_vectors)
    if n == 0:
        return 0
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    best = 0
    for src in range(n):
        dist = [-1] * n
        dist[src] = 0
        queue = deque([src])
        reached = 1
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    reached += 1
                    queue.append(w)
        if reached != n:
            raise InvariantViolationError("zonotope graph is disconnected")
        best = max(best, max(dist))
    return best
