"""Spectral radii of skew and ordinary adjacency matrices.

Skew matrices have purely imaginary spectrum, so rho(S) is read off the
symmetric positive semidefinite matrix -S^2 (eigenvalues are |lambda|^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, SkewSpecError
from .graph import (
    Graph,
    components,
    delete_edge,
    delete_vertices,
    is_bipartite,
    is_connected,
    is_tree,
)
from .orientation import Orientation, SkewMatrix, skew_matrix, switching_class_representatives

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
POWER_TOL = 1e-13
POWER_MAX_ITER = 1_000_000
TAU_GROUP = 1e-8
TAU_STRICT = 1e-9


def jacobi_eigenvalues(
    a, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops to ``tol``
    (floored at a few ulps of the matrix norm). Returned sorted ascending.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix is not square")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    if n < 2:
        return np.diag(a).copy()
    floor = 8 * np.finfo(float).eps * max(np.linalg.norm(a), 1.0)
    target = max(tol, floor)

    def off_norm() -> float:
        # summed directly; total minus diagonal cancels to ~sqrt(eps) * |A|
        return float(np.linalg.norm(a - np.diag(np.diag(a))))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                h = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(h):
                    # theta would overflow; t ~ 1 / (2 theta)
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) rotation
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    if off_norm() <= target:
        return np.sort(np.diag(a))
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def spectral_radius_skew(s: SkewMatrix, tol: float = JACOBI_TOL) -> float:
    """rho(S) = sqrt(lambda_max(-S^2)) for a real skew-symmetric S."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if s.n == 0:
        return 0.0
    mat = np.array(s.entries, dtype=np.int64)
    gram = -(mat @ mat)  # exact in integers, symmetric PSD
    lam = jacobi_eigenvalues(gram, tol=tol)
    top = float(lam[-1])
    assert top >= -1e-9, f"-S^2 has a negative top eigenvalue {top}"
    return math.sqrt(max(top, 0.0))


def spectral_radius_adjacency(
    g: Graph, tol: float = POWER_TOL, max_iter: int = POWER_MAX_ITER
) -> float:
    """Largest adjacency eigenvalue of a connected graph by power iteration.

    Iterates on ``A + Delta*I`` (Delta = max degree) so bipartite graphs do not
    oscillate, starting from the all-ones vector, and stops once successive
    Rayleigh quotients agree to ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_connected(g):
        raise SkewSpecError("adjacency spectral radius needs a connected graph")
    if g.m == 0:
        return 0.0
    shift = float(g.max_degree())
    a = np.array(g.adjacency_matrix(), dtype=float) + shift * np.eye(g.n)
    x = np.ones(g.n) / math.sqrt(g.n)
    rq = float(x @ a @ x)
    for _ in range(max_iter):
        y = a @ x
        x = y / np.linalg.norm(y)
        new = float(x @ a @ x)
        if abs(new - rq) <= tol:
            return new - shift
        rq = new
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def adjacency_radius_any(g: Graph, tol: float = POWER_TOL) -> float:
    """Spectral radius of possibly disconnected ``g``: max over components."""
    best = 0.0
    for comp in components(g):
        drop = set(range(g.n)) - set(comp)
        best = max(best, spectral_radius_adjacency(delete_vertices(g, drop), tol))
    return best


@dataclass
class SpectralReport:
    rho_adjacency: float
    rho_max_skew: float
    argmax_orientation: Orientation
    rho_profile: list[float]
    tol_group: float = TAU_GROUP
    tol_solver: float = JACOBI_TOL
    tol_power: float = POWER_TOL
    max_group_spread: float = 0.0
    class_radii: list[float] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "rho_adjacency": fmt_float(self.rho_adjacency),
            "rho_max_skew": fmt_float(self.rho_max_skew),
            "argmax_orientation": self.argmax_orientation.text(),
            "rho_profile": [fmt_float(r) for r in self.rho_profile],
            "max_group_spread": fmt_float(self.max_group_spread),
            "tolerances": {
                "group": self.tol_group,
                "jacobi": self.tol_solver,
                "power": self.tol_power,
            },
        }


def fmt_float(x: float) -> float:
    """Round to 12 significant digits for reproducible output."""
    return float(f"{x:.12g}")


def group_values(values: list[float], tol_group: float) -> tuple[list[float], float]:
    """Merge sorted values whose successive gap is at most ``tol_group``.

    Each group is represented by its largest member. Also returns the widest
    spread of any merged group so near-ties are visible.
    """
    if not values:
        return [], 0.0
    vals = sorted(values)
    groups = [[vals[0]]]
    for v in vals[1:]:
        if v - groups[-1][-1] <= tol_group:
            groups[-1].append(v)
        else:
            groups.append([v])
    spread = max(gr[-1] - gr[0] for gr in groups)
    return [gr[-1] for gr in groups], spread


def max_skew_spectral_radius(
    g: Graph, tol_group: float = TAU_GROUP, tol: float = JACOBI_TOL
) -> SpectralReport:
    """rho over every switching class, with the maximum and its argmax."""
    reps = switching_class_representatives(g)
    radii = [spectral_radius_skew(skew_matrix(o), tol) for o in reps]
    top = max(radii)
    # first representative within the grouping tolerance of the maximum
    best = next(i for i, r in enumerate(radii) if r >= top - tol_group)
    profile, spread = group_values(radii, tol_group)
    return SpectralReport(
        rho_adjacency=spectral_radius_adjacency(g),
        rho_max_skew=profile[-1],
        argmax_orientation=reps[best],
        rho_profile=profile,
        tol_group=tol_group,
        tol_solver=tol,
        max_group_spread=spread,
        class_radii=radii,
    )


def check_bipartite_radius_equality(g: Graph, tol: float = TAU_GROUP) -> bool:
    if is_bipartite(g) is None:
        raise SkewSpecError("graph is not bipartite")
    rep = max_skew_spectral_radius(g)
    return abs(rep.rho_max_skew - rep.rho_adjacency) <= tol


def check_radius_constant(g: Graph, tol_group: float = TAU_GROUP) -> bool:
    return len(max_skew_spectral_radius(g, tol_group).rho_profile) == 1


def path_radius(n: int) -> float:
    """rho(P_n) = 2 cos(pi / (n + 1))."""
    return 2.0 * math.cos(math.pi / (n + 1))


def is_balanced_complete_bipartite(g: Graph) -> bool:
    part = is_bipartite(g)
    if part is None or not is_connected(g):
        return False
    a, b = len(part[0]), len(part[1])
    return sorted((a, b)) == [g.n // 2, g.n - g.n // 2] and g.m == a * b


def is_path(g: Graph) -> bool:
    if g.n == 1:
        return g.m == 0
    degs = sorted(g.degree(v) for v in range(g.n))
    return is_tree(g) and degs[-1] <= 2


@dataclass
class BoundsReport:
    rho_s: float
    upper_bound: float | None
    lower_bound: float
    upper_ok: bool | None
    lower_ok: bool
    upper_tight: bool | None
    lower_tight: bool
    balanced_complete_bipartite: bool
    path: bool

    @property
    def consistent(self) -> bool:
        """Inequalities hold and tightness occurs exactly at the extremal graphs."""
        ok = self.lower_ok and self.lower_tight == self.path
        if self.upper_ok is not None:
            ok = ok and self.upper_ok and self.upper_tight == self.balanced_complete_bipartite
        return ok

    def to_dict(self) -> dict:
        return {
            "rho_s": fmt_float(self.rho_s),
            "upper_bound": None if self.upper_bound is None else fmt_float(self.upper_bound),
            "lower_bound": fmt_float(self.lower_bound),
            "upper_ok": self.upper_ok,
            "lower_ok": self.lower_ok,
            "upper_tight": self.upper_tight,
            "lower_tight": self.lower_tight,
            "balanced_complete_bipartite": self.balanced_complete_bipartite,
            "path": self.path,
        }


def check_extremal_bounds(g: Graph, tol: float = TAU_GROUP) -> BoundsReport:
    """Compare rho_s(g) with sqrt(floor(n/2) ceil(n/2)) and with rho(P_n).

    The upper bound is only evaluated for bipartite ``g``.
    """
    if not is_connected(g):
        raise SkewSpecError("extremal bounds are stated for connected graphs")
    rho_s = max_skew_spectral_radius(g).rho_max_skew
    low = path_radius(g.n)
    lower_ok = rho_s >= low - tol
    lower_tight = abs(rho_s - low) <= tol
    up = up_ok = up_tight = None
    if is_bipartite(g) is not None:
        up = math.sqrt((g.n // 2) * (g.n - g.n // 2))
        up_ok = rho_s <= up + tol
        up_tight = abs(rho_s - up) <= tol
    return BoundsReport(
        rho_s=rho_s,
        upper_bound=up,
        lower_bound=low,
        upper_ok=up_ok,
        lower_ok=lower_ok,
        upper_tight=up_tight,
        lower_tight=lower_tight,
        balanced_complete_bipartite=is_balanced_complete_bipartite(g),
        path=is_path(g),
    )


def check_edge_monotonicity(g: Graph, e, strict: float = TAU_STRICT) -> bool:
    """rho_s(g) > rho_s(g - e) + strict, for connected g and g - e."""
    h = delete_edge(g, e)
    if not is_connected(g) or not is_connected(h):
        raise SkewSpecError("edge monotonicity check needs g and g - e connected")
    return max_skew_spectral_radius(g).rho_max_skew > max_skew_spectral_radius(h).rho_max_skew + strict
