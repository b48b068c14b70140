"""Simple undirected graphs with a canonical edge order.

Vertices are ``0..n-1``; edges are stored as ``(u, v)`` pairs with ``u < v``
sorted lexicographically, so two graphs built from the same edge set in any
order compare equal and hash identically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    Graph6CharacterError,
    Graph6HeaderError,
    Graph6LengthError,
    GraphError,
)

Edge = tuple[int, int]

FAMILIES = ("path", "cycle", "complete_bipartite", "theorem1", "bowtie_odd")


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {e} is not canonical for n={self.n}")
            if prev is not None and not prev < e:
                raise GraphError(f"edges not strictly increasing at {prev}, {e}")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from edges in any order/orientation.

        Duplicates and loops are rejected rather than silently dropped.
        """
        normed = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            normed.append(_norm_edge(int(u), int(v)))
        ordered = sorted(normed)
        if len(set(ordered)) != len(ordered):
            raise GraphError("duplicate edge")
        return cls(n, tuple(ordered))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def adjacency_matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle stored in canonical form.

    The smallest vertex comes first and its smaller cycle-neighbour second,
    which picks one of the 2*length rotations/reflections.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError(f"not a simple cycle: {vs}")
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            raise GraphError(f"cycle {vs} is not in canonical form")

    @classmethod
    def canonical(cls, vertices: Sequence[int]) -> "Cycle":
        vs = list(vertices)
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[1] > vs[-1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[Edge]:
        """Consecutive ``(v_i, v_{i+1})`` pairs, closing back to the start."""
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edges(self) -> list[Edge]:
        return sorted(_norm_edge(u, v) for u, v in self.arcs())


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise GraphError("complete_bipartite needs r, s >= 1")
    return Graph(r + s, tuple((i, r + j) for i in range(r) for j in range(s)))


def _two_cycles_at_zero(length: int) -> Graph:
    # vertex 0 shared; first cycle 1..length-1, second length..2*length-2
    first = [0] + list(range(1, length))
    second = [0] + list(range(length, 2 * length - 1))
    edges = []
    for cyc in (first, second):
        edges += [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
    return Graph.from_edges(2 * length - 1, edges)


def theorem1_graph(m: int) -> Graph:
    """Two 2m-cycles glued at vertex 0 (n = 4m-1, 4m edges)."""
    if m < 2:
        raise GraphError("theorem1 family needs m >= 2")
    return _two_cycles_at_zero(2 * m)


def bowtie_odd_graph(length: int) -> Graph:
    if length < 3 or length % 2 == 0:
        raise GraphError("bowtie_odd needs an odd cycle length >= 3")
    return _two_cycles_at_zero(length)


def generate(family: str, params: Sequence[int]) -> Graph:
    """Build a member of one of the named families in ``FAMILIES``."""
    arity = {"path": 1, "cycle": 1, "complete_bipartite": 2, "theorem1": 1, "bowtie_odd": 1}
    if family not in arity:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != arity[family]:
        raise GraphError(f"family {family} takes {arity[family]} parameter(s), got {len(params)}")
    p = [int(x) for x in params]
    if family == "path":
        return path_graph(p[0])
    if family == "cycle":
        return cycle_graph(p[0])
    if family == "complete_bipartite":
        return complete_bipartite_graph(p[0], p[1])
    if family == "theorem1":
        return theorem1_graph(p[0])
    return bowtie_odd_graph(p[0])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

def enumerate_cycles(g: Graph) -> list[Cycle]:
    """All simple cycles of ``g``, each once, sorted by (length, vertices).

    Backtracking from each root over strictly larger vertices; a closed walk
    is kept only when its second vertex is smaller than its last, which
    removes the mirrored copy.
    """
    adj = g.adjacency
    found: list[Cycle] = []

    for root in range(g.n):
        path = [root]
        on_path = [False] * g.n
        on_path[root] = True
        # iterative DFS: stack of neighbour iterators
        stack = [iter(adj[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if nxt == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(Cycle(tuple(path)))
                continue
            if nxt < root or on_path[nxt]:
                continue
            path.append(nxt)
            on_path[nxt] = True
            stack.append(iter(adj[nxt]))
    found.sort(key=lambda c: (c.length, c.vertices))
    return found


def is_odd_cycle_graph(g: Graph) -> bool:
    """True iff ``g`` has no cycle of even length."""
    return all(c.length % 2 for c in enumerate_cycles(g))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # the null graph counts as connected by convention
    return len(components(g)) <= 1


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Return a 2-colouring ``(first, second)`` or ``None``.

    In every component the smallest vertex goes to the first side.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    first = tuple(v for v in range(g.n) if color[v] == 0)
    second = tuple(v for v in range(g.n) if color[v] == 1)
    return first, second


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bfs_spanning_tree(g: Graph, root: int = 0) -> list[Edge]:
    """Breadth-first tree edges, neighbours visited in ascending order."""
    if g.n == 0:
        return []
    seen = [False] * g.n
    seen[root] = True
    tree = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                tree.append(_norm_edge(u, w))
                queue.append(w)
    return sorted(tree)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    key = _norm_edge(*e)
    if key not in g.edge_index:
        raise GraphError(f"edge {tuple(e)} not in graph")
    return Graph(g.n, tuple(x for x in g.edges if x != key))


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    """Remove ``vs`` and compact the remaining labels in order."""
    drop = set(vs)
    for v in drop:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph")
    if not drop:
        return g
    relabel = {}
    for v in range(g.n):
        if v not in drop:
            relabel[v] = len(relabel)
    edges = tuple(
        (relabel[u], relabel[v]) for u, v in g.edges if u not in drop and v not in drop
    )
    return Graph(len(relabel), edges)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62) and edge lists
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("only the short graph6 form (n <= 62) is supported")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edge_index else 0)
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(line: str) -> Graph:
    """Parse one short-form graph6 line (trailing newline tolerated)."""
    text = line.rstrip("\r\n")
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise Graph6HeaderError("empty graph6 string")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"byte {ord(ch)} at position {pos} is outside 63..126")
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6HeaderError("long-form size header (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = text[1:]
    if len(body) < nchars:
        raise Graph6LengthError(f"expected {nchars} data bytes for n={n}, got {len(body)}")
    if len(body) > nchars:
        raise Graph6LengthError(f"{len(body) - nchars} trailing byte(s) after graph data")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6LengthError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs a 'n m' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise GraphError(f"header announces {m} edges but {len(body) / 2:g} were given")
    return Graph.from_edges(n, zip(body[0::2], body[1::2]))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
