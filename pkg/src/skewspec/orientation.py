"""Orientations, skew adjacency matrices and switching.

An orientation stores one sign per canonical edge ``(u, v)``, ``u < v``:
``+1`` is the arc ``u -> v`` and ``-1`` the arc ``v -> u``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import OrientationError, SizeGuardError
from .graph import Graph, bfs_spanning_tree, components, is_connected, theorem1_graph

MAX_ENUM_EDGES = 30
MAX_CYCLOMATIC = 20


@dataclass(frozen=True)
class Orientation:
    host: Graph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.host.m:
            raise OrientationError(
                f"{len(self.signs)} signs given for a graph with {self.host.m} edges"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise OrientationError("every sign must be +1 or -1")

    @classmethod
    def from_text(cls, host: Graph, text: str) -> "Orientation":
        bad = set(text) - {"+", "-"}
        if bad:
            raise OrientationError(f"orientation text may only contain '+'/'-', got {sorted(bad)}")
        return cls(host, tuple(1 if ch == "+" else -1 for ch in text))

    @classmethod
    def all_plus(cls, host: Graph) -> "Orientation":
        return cls(host, (1,) * host.m)

    @classmethod
    def from_arcs(cls, host: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        """Orientation from a list of arcs ``a -> b``, one per edge."""
        signs = [0] * host.m
        for a, b in arcs:
            key = (a, b) if a < b else (b, a)
            if key not in host.edge_index:
                raise OrientationError(f"arc {a}->{b} is not an edge")
            signs[host.edge_index[key]] = 1 if a < b else -1
        if 0 in signs:
            raise OrientationError("arc list does not cover every edge")
        return cls(host, tuple(signs))

    def text(self) -> str:
        return "".join("+" if s == 1 else "-" for s in self.signs)

    def sigma(self, i: int, j: int) -> int:
        """sigma(i, j): +1 if the arc is i -> j, -1 if j -> i."""
        if i < j:
            return self.signs[self.host.edge_index[(i, j)]]
        return -self.signs[self.host.edge_index[(j, i)]]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if s == 1 else (v, u) for (u, v), s in zip(self.host.edges, self.signs)]


@dataclass(frozen=True)
class SkewMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise OrientationError("nonzero diagonal in skew matrix")
            for j in range(i + 1, self.n):
                a = self.entries[i][j]
                if a not in (-1, 0, 1) or self.entries[j][i] != -a:
                    raise OrientationError(f"entries ({i},{j}) break skew-symmetry")

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class Switching:
    """A +-1 diagonal matrix D, recorded by the vertices where D is -1."""

    flipped: frozenset[int] = frozenset()

    def diagonal(self, n: int) -> list[int]:
        for v in self.flipped:
            if not 0 <= v < n:
                raise OrientationError(f"switching vertex {v} outside 0..{n - 1}")
        return [-1 if v in self.flipped else 1 for v in range(n)]


def skew_matrix(o: Orientation) -> SkewMatrix:
    n = o.host.n
    s = [[0] * n for _ in range(n)]
    for (u, v), sign in zip(o.host.edges, o.signs):
        s[u][v] = sign
        s[v][u] = -sign
    return SkewMatrix(n, tuple(tuple(r) for r in s))


def apply_switching(o: Orientation, d: Switching) -> Orientation:
    """Orientation whose skew matrix is ``D S D``.

    An edge sign flips exactly when one endpoint lies in ``d.flipped``.
    """
    diag = d.diagonal(o.host.n)
    signs = tuple(s * diag[u] * diag[v] for (u, v), s in zip(o.host.edges, o.signs))
    return Orientation(o.host, signs)


def reverse(o: Orientation) -> Orientation:
    return Orientation(o.host, tuple(-s for s in o.signs))


def enumerate_orientations(g: Graph) -> Iterator[Orientation]:
    """All ``2**m`` orientations in binary-counter order.

    ``+`` is bit 0 and the first edge is the most significant bit, so the
    sequence starts with all-``+`` and ends with all-``-``.
    """
    if g.m > MAX_ENUM_EDGES:
        raise SizeGuardError(f"{g.m} edges exceeds the enumeration guard of {MAX_ENUM_EDGES}")
    for signs in product((1, -1), repeat=g.m):
        yield Orientation(g, signs)


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + len(components(g))


def switching_class_representatives(g: Graph) -> list[Orientation]:
    """One orientation per switching class of a connected graph.

    Edges of the breadth-first spanning tree rooted at 0 get sign +1; the
    co-tree edges run through all sign patterns in binary-counter order.
    """
    if not is_connected(g):
        raise OrientationError("switching class representatives need a connected graph")
    tree = set(bfs_spanning_tree(g))
    cotree = [i for i, e in enumerate(g.edges) if e not in tree]
    if len(cotree) > MAX_CYCLOMATIC:
        raise SizeGuardError(
            f"cyclomatic number {len(cotree)} exceeds the guard of {MAX_CYCLOMATIC}"
        )
    reps = []
    for pattern in product((1, -1), repeat=len(cotree)):
        signs = [1] * g.m
        for idx, s in zip(cotree, pattern):
            signs[idx] = s
        reps.append(Orientation(g, tuple(signs)))
    return reps


def normalizing_switching(o: Orientation) -> Switching:
    """The switching that makes every spanning-tree edge positive.

    Requires a connected host; vertex 0 is never flipped.
    """
    g = o.host
    if not is_connected(g):
        raise OrientationError("normalizing switching needs a connected graph")
    diag = {0: 1} if g.n else {}
    # walk in BFS order so every tree edge is reached from its parent
    tree = set(bfs_spanning_tree(g))
    queue = deque([0] if g.n else [])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            key = (u, w) if u < w else (w, u)
            if w in diag or key not in tree:
                continue
            # want sign * d_u * d_w == +1
            diag[w] = o.signs[g.edge_index[key]] * diag[u]
            queue.append(w)
    return Switching(frozenset(v for v, dv in diag.items() if dv == -1))


def switching_representative(o: Orientation) -> Orientation:
    return apply_switching(o, normalizing_switching(o))


def switching_equivalent(a: Orientation, b: Orientation) -> bool:
    if a.host != b.host:
        return False
    return switching_representative(a) == switching_representative(b)


def canonical_bipartite_orientation(
    g: Graph, partition: tuple[Sequence[int], Sequence[int]]
) -> Orientation:
    """Orient every edge from the first side of ``partition`` to the second."""
    first, second = set(partition[0]), set(partition[1])
    if first & second or first | second != set(range(g.n)):
        raise OrientationError("partition must split the vertex set into two disjoint sides")
    signs = []
    for u, v in g.edges:
        if u in first and v in second:
            signs.append(1)
        elif v in first and u in second:
            signs.append(-1)
        else:
            raise OrientationError(f"edge ({u},{v}) lies inside one side of the partition")
    return Orientation(g, tuple(signs))


def theorem1_orientation(m: int) -> tuple[Graph, Orientation]:
    """The oriented two-cycle graph with one positive and one negative cycle.

    The first cycle 0 -> 1 -> ... -> 2m-1 -> 0 is directed all the way round
    (routing sign +1). The second cycle 0 -> 2m -> ... -> 4m-2 -> 0 is the
    same except that the arc between 4m-3 and 4m-2 is reversed (routing
    sign -1). For m = 2 this is the 7-vertex drawing with arcs
    0->4, 4->5, 6->5, 6->0.
    """
    g = theorem1_graph(m)
    L = 2 * m
    first = [0] + list(range(1, L))
    second = [0] + list(range(L, 2 * L - 1))
    arcs = [(first[i], first[(i + 1) % L]) for i in range(L)]
    for i in range(L):
        a, b = second[i], second[(i + 1) % L]
        if (a, b) == (4 * m - 3, 4 * m - 2):
            a, b = b, a
        arcs.append((a, b))
    return g, Orientation.from_arcs(g, arcs)
