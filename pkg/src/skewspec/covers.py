"""Covers by disjoint edges and even cycles, and the cover expansion of s_k.

A cover of size k is a vertex-disjoint collection of edges and even cycles
touching exactly k vertices. Summing ``(-1)^{c+} 2^{c}`` over the covers of
size k (c = number of cycles, c+ = number routed positively) reproduces the
coefficient of ``x^(n-k)`` in ``det(xI - S)``; this module evaluates that sum
directly and serves as an oracle for the determinant path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import SkewSpecError
from .graph import Cycle, Edge, Graph, enumerate_cycles
from .orientation import Orientation, theorem1_orientation


@dataclass(frozen=True)
class Cover:
    edges: tuple[Edge, ...]
    cycles: tuple[Cycle, ...]
    covered: int = field(default=-1)

    def __post_init__(self):
        size = 2 * len(self.edges) + sum(c.length for c in self.cycles)
        if self.covered == -1:
            object.__setattr__(self, "covered", size)
        elif self.covered != size:
            raise SkewSpecError(f"covered={self.covered} disagrees with constituents ({size})")
        seen: set[int] = set()
        for part in list(self.edges) + [c.vertices for c in self.cycles]:
            if seen.intersection(part):
                raise SkewSpecError("cover constituents overlap")
            seen.update(part)
        for c in self.cycles:
            if c.length % 2:
                raise SkewSpecError(f"odd cycle {c.vertices} in cover")

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def describe(self) -> str:
        parts = [f"{u}-{v}" for u, v in self.edges]
        parts += ["(" + " ".join(map(str, c.vertices)) + ")" for c in self.cycles]
        return " ".join(parts) if parts else "(empty)"


@lru_cache(maxsize=4096)
def _covers(g: Graph, k: int) -> tuple[Cover, ...]:
    # candidate list: edges in canonical order, then even cycles
    cands: list[tuple[int, int, object]] = []  # (vertex mask, size, constituent)
    for e in g.edges:
        cands.append(((1 << e[0]) | (1 << e[1]), 2, e))
    for c in enumerate_cycles(g):
        if c.length % 2 == 0:
            mask = 0
            for v in c.vertices:
                mask |= 1 << v
            cands.append((mask, c.length, c))

    out: list[Cover] = []
    chosen: list[object] = []

    def extend(start: int, used: int, budget: int) -> None:
        if budget == 0:
            edges = tuple(x for x in chosen if not isinstance(x, Cycle))
            cycles = tuple(x for x in chosen if isinstance(x, Cycle))
            out.append(Cover(edges, cycles, k))
            return
        for i in range(start, len(cands)):
            mask, size, item = cands[i]
            if size > budget or mask & used:
                continue
            chosen.append(item)
            extend(i + 1, used | mask, budget - size)
            chosen.pop()

    extend(0, 0, k)
    return tuple(out)


def enumerate_covers(g: Graph, k: int) -> list[Cover]:
    """Every cover of exactly ``k`` vertices, each once, in a fixed order."""
    if k % 2:
        raise SkewSpecError(f"covers only exist for even k, got {k}")
    if not 0 <= k <= g.n:
        raise SkewSpecError(f"k={k} outside 0..{g.n}")
    return list(_covers(g, k))


def cover_routing_sign(o: Orientation, c: Cycle) -> int:
    """Product of sigma along the cycle traversed in canonical direction.

    For even cycles the product is unchanged by reversing the traversal
    (each of the even number of factors flips sign); that is checked here.
    """
    if c.length % 2:
        raise SkewSpecError(f"routing sign is not well defined on odd cycle {c.vertices}")
    fwd = 1
    back = 1
    for a, b in c.arcs():
        fwd *= o.sigma(a, b)
        back *= o.sigma(b, a)
    assert fwd == back, "even-cycle routing sign depends on direction"
    return fwd


def cover_term(o: Orientation, u: Cover) -> int:
    """``(-1)^{c+} * 2^{c}`` for the cycles of ``u``; 1 when there are none."""
    positive = sum(1 for c in u.cycles if cover_routing_sign(o, c) == 1)
    return (-1) ** positive * 2 ** len(u.cycles)


def coefficient_via_lemma21(g: Graph, o: Orientation, k: int) -> int:
    """Coefficient of ``x^(n-k)`` in ``det(xI - S)`` from the cover expansion.

    Cycle-free covers are the matchings and each contributes 1, so the sum
    over all covers equals ``m_k`` plus the signed cycle terms.
    """
    if o.host != g:
        raise SkewSpecError("orientation belongs to a different graph")
    if not 0 <= k <= g.n:
        raise SkewSpecError(f"k={k} outside 0..{g.n}")
    if k % 2:
        return 0
    return sum(cover_term(o, u) for u in _covers(g, k))


def charpoly_via_lemma21(o: Orientation) -> list[int]:
    """All coefficients, descending from ``x^n``, via cover expansion."""
    g = o.host
    return [coefficient_via_lemma21(g, o, k) for k in range(g.n + 1)]


# ---------------------------------------------------------------------------
# the two-cycle construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CancellationReport:
    m: int
    k: int
    count1: int
    count2: int
    sum: int

    def to_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "count1": self.count1, "count2": self.count2, "sum": self.sum}

    @property
    def ok(self) -> bool:
        return self.count1 == self.count2 and self.sum == 0


def theorem1_cycles(m: int) -> tuple[Cycle, Cycle]:
    L = 2 * m
    first = Cycle.canonical([0] + list(range(1, L)))
    second = Cycle.canonical([0] + list(range(L, 2 * L - 1)))
    return first, second


def _check_theorem1_range(m: int, k: int) -> None:
    if m < 2:
        raise SkewSpecError("m must be at least 2")
    if k % 2 or not 2 * m <= k <= 4 * m - 2:
        raise SkewSpecError(f"k must be even with {2 * m} <= k <= {4 * m - 2}, got {k}")


def theorem1_split(m: int, k: int) -> tuple[list[Cover], list[Cover]]:
    """Cycle-containing covers of size k, split by which cycle they use.

    Raises if some cycle-containing cover uses neither or both cycles.
    """
    _check_theorem1_range(m, k)
    g, _ = theorem1_orientation(m)
    c1, c2 = theorem1_cycles(m)
    first, second = [], []
    for u in _covers(g, k):
        if not u.cycles:
            continue
        if u.cycles == (c1,):
            first.append(u)
        elif u.cycles == (c2,):
            second.append(u)
        else:
            raise AssertionError(f"unexpected cycle content {u.describe()}")
    return first, second


def theorem1_bijection(m: int, k: int) -> dict[Cover, Cover]:
    """Map each cover (first cycle + edges on the second) to its mirror.

    An edge ``v'_i v'_{i+1}`` on the second cycle is sent to ``v_i v_{i+1}``
    on the first; in vertex labels that is ``x -> x - 2m + 1``.
    """
    first, second = theorem1_split(m, k)
    c2 = theorem1_cycles(m)[1]
    shift = 2 * m - 1
    images = {}
    for u in first:
        edges = tuple(sorted((a - shift, b - shift) for a, b in u.edges))
        images[u] = Cover(edges, (c2,), k)
    if len(set(images.values())) != len(images) or set(images.values()) != set(second):
        raise AssertionError("edge-mirroring map is not a bijection between the two families")
    return images


def verify_theorem1_cancellation(m: int, k: int) -> CancellationReport:
    _check_theorem1_range(m, k)
    g, o = theorem1_orientation(m)
    first, second = theorem1_split(m, k)
    total = sum(cover_term(o, u) for u in first + second)
    return CancellationReport(m, k, len(first), len(second), total)
