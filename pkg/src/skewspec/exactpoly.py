"""Exact integer polynomials: skew characteristic and matching polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import SizeGuardError
from .graph import Graph, delete_edge, delete_vertices
from .orientation import (
    MAX_CYCLOMATIC,
    Orientation,
    SkewMatrix,
    cyclomatic_number,
    skew_matrix,
    switching_class_representatives,
)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The top coefficient is never zero; the zero polynomial has no coefficients.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(tuple(reversed(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                mono = "x" if p == 1 else f"x^{p}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def integer_charpoly(a: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - A) for a square integer matrix, by Faddeev-LeVerrier.

    Each step divides an integer trace by k; the division is exact in exact
    arithmetic, so a nonzero remainder means an arithmetic bug.
    """
    n = len(a)
    rows = [list(map(int, r)) for r in a]
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    desc = [1] + [0] * n  # desc[k] multiplies x^(n-k)
    m_prev = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        m_k = [[0] * n for _ in range(n)]
        for i in range(n):
            ai = rows[i]
            out = m_k[i]
            for l in range(n):
                x = ai[l]
                if x:
                    ml = m_prev[l]
                    for j in range(n):
                        out[j] += x * ml[j]
            out[i] += desc[k - 1]
        trace = 0
        for i in range(n):
            ai = rows[i]
            trace += sum(ai[l] * m_k[l][i] for l in range(n) if ai[l])
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError(f"non-integral coefficient {-trace}/{k} at step {k}")
        desc[k] = q
        m_prev = m_k
    return IntPoly.from_descending(desc)


def charpoly(s: SkewMatrix) -> IntPoly:
    return integer_charpoly(s.entries)


def adjacency_charpoly(g: Graph) -> IntPoly:
    return integer_charpoly(g.adjacency_matrix())


@lru_cache(maxsize=65536)
def _matching_counts_cached(g: Graph) -> tuple[int, ...]:
    if not g.edges:
        return (1,) + (0,) * g.n
    u, v = g.edges[-1]
    without = _matching_counts_cached(delete_edge(g, (u, v)))
    inner = _matching_counts_cached(delete_vertices(g, (u, v)))
    out = list(without)
    for k, c in enumerate(inner):
        out[k + 2] += c
    return tuple(out)


def matching_counts(g: Graph) -> list[int]:
    """``[m_0, ..., m_n]``: number of matchings covering k vertices.

    Deletion recursion on the last canonical edge ``uv``:
    ``m_k(G) = m_k(G - uv) + m_{k-2}(G - u - v)``, memoized on the graph.
    """
    return list(_matching_counts_cached(g))


def matching_polynomial(g: Graph) -> IntPoly:
    counts = matching_counts(g)
    desc = [(-1) ** (k // 2) * c if k % 2 == 0 else 0 for k, c in enumerate(counts)]
    return IntPoly.from_descending(desc)


def holds_problem1_identity(g: Graph, o: Orientation) -> bool:
    """Whether ``det(xI - S) == (-i)^n m(G, ix)``, decided over the integers.

    Expanding the right side, the coefficient of ``x^(n-k)`` is
    ``(-i)^n i^(n-k) (-1)^(k/2) m_k = m_k`` for even k, so the identity is
    exactly ``s_k == m_k`` for every k (both vanish for odd k).
    """
    if o.host != g:
        raise ValueError("orientation belongs to a different graph")
    p = charpoly(skew_matrix(o))
    counts = matching_counts(g)
    return all(p.coeff(g.n - k) == counts[k] for k in range(g.n + 1))


def cospectrality_classes(g: Graph) -> list[tuple[IntPoly, list[Orientation]]]:
    """Switching-class representatives grouped by exact charpoly.

    Groups are listed in order of first appearance among the representatives.
    """
    if cyclomatic_number(g) > MAX_CYCLOMATIC:
        raise SizeGuardError(f"cyclomatic number exceeds the guard of {MAX_CYCLOMATIC}")
    groups: dict[IntPoly, list[Orientation]] = {}
    for rep in switching_class_representatives(g):
        groups.setdefault(charpoly(skew_matrix(rep)), []).append(rep)
    return list(groups.items())
