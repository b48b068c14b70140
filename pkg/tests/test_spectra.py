import math
import random

import numpy as np
import pytest
import sympy

from skewspec.errors import SkewSpecError
from skewspec.exactpoly import charpoly
from skewspec.graph import Graph, generate, is_bipartite, is_tree, path_graph
from skewspec.orientation import (
    Orientation,
    Switching,
    apply_switching,
    canonical_bipartite_orientation,
    skew_matrix,
    switching_class_representatives,
)
from skewspec.spectra import (
    adjacency_radius_any,
    check_bipartite_radius_equality,
    check_edge_monotonicity,
    check_extremal_bounds,
    check_radius_constant,
    group_values,
    jacobi_eigenvalues,
    max_skew_spectral_radius,
    spectral_radius_adjacency,
    spectral_radius_skew,
)

from oracles import load_catalog


def _radius_from_charpoly(p, n):
    """Largest |root| from the exact polynomial in y = -x^2 (eigenvalues are +-i sqrt(y))."""
    y = sympy.symbols("y")
    desc = p.descending()
    # only even k survive: x^(n-k) = x^(n mod 2) * (-y)^((n-k)//2)
    q = sum(desc[k] * (-y) ** ((n - k) // 2) for k in range(0, n + 1, 2))
    roots = sympy.Poly(q, y).real_roots() if q != 0 else []
    return math.sqrt(max(float(r) for r in roots)) if roots else 0.0


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    for n in (1, 2, 3, 7, 12):
        a = rng.standard_normal((n, n))
        a = a + a.T
        assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)


def test_jacobi_rejects_asymmetric():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0, 1], [0, 0]])


def test_skew_radius_examples():
    c4 = generate("cycle", [4])
    assert spectral_radius_skew(skew_matrix(Orientation.from_text(c4, "+++-"))) == pytest.approx(2.0, abs=1e-12)
    assert spectral_radius_skew(skew_matrix(Orientation.from_text(c4, "++++"))) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert spectral_radius_skew(skew_matrix(Orientation.all_plus(Graph(3, ())))) == 0.0


def test_adjacency_radius_examples():
    assert spectral_radius_adjacency(generate("complete_bipartite", [3, 4])) == pytest.approx(math.sqrt(12), abs=1e-10)
    p7 = spectral_radius_adjacency(path_graph(7))
    ref = max(np.linalg.eigvalsh(np.array(path_graph(7).adjacency_matrix(), float)))
    assert p7 == pytest.approx(ref, abs=1e-10)
    assert p7 == pytest.approx(2 * math.cos(math.pi / 8), abs=1e-10)
    assert spectral_radius_adjacency(generate("cycle", [4])) == pytest.approx(2.0, abs=1e-10)
    assert spectral_radius_adjacency(path_graph(1)) == 0.0
    with pytest.raises(SkewSpecError):
        spectral_radius_adjacency(Graph(2, ()))


def test_adjacency_radius_catalog_vs_numpy():
    for g in load_catalog(7)[::3]:
        ref = max(np.linalg.eigvalsh(np.array(g.adjacency_matrix(), float)))
        assert spectral_radius_adjacency(g) == pytest.approx(ref, abs=1e-9)


def test_adjacency_radius_disconnected_helper():
    g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 2)])
    assert adjacency_radius_any(g) == pytest.approx(2.0, abs=1e-10)


def test_exact_and_floating_radii_agree_n6():
    for g in load_catalog(6):
        for o in switching_class_representatives(g):
            s = skew_matrix(o)
            rho = spectral_radius_skew(s)
            assert rho == pytest.approx(_radius_from_charpoly(charpoly(s), g.n), abs=1e-8)
            assert rho == pytest.approx(max(abs(np.linalg.eigvals(s.to_numpy()))), abs=1e-10)


def test_gram_matrix_is_psd():
    rng = random.Random(1)
    for g in load_catalog(7)[::11]:
        o = Orientation(g, tuple(rng.choice((1, -1)) for _ in range(g.m)))
        s = np.array(skew_matrix(o).entries)
        assert min(jacobi_eigenvalues(-(s @ s))) >= -1e-9


def test_switching_preserves_radius():
    rng = random.Random(9)
    for g in load_catalog(7)[::13]:
        o = Orientation(g, tuple(rng.choice((1, -1)) for _ in range(g.m)))
        d = Switching(frozenset(v for v in range(g.n) if rng.random() < 0.5))
        a = spectral_radius_skew(skew_matrix(o))
        b = spectral_radius_skew(skew_matrix(apply_switching(o, d)))
        assert abs(a - b) <= 1e-10


def test_group_values():
    assert group_values([2.0, 1.0, 1.0 + 5e-9, 2.0 + 1e-9], 1e-8) == ([1.0 + 5e-9, 2.0 + 1e-9], pytest.approx(5e-9))
    assert group_values([], 1e-8) == ([], 0.0)


def test_max_radius_report_examples():
    t = generate("complete_bipartite", [1, 4])
    rep = max_skew_spectral_radius(t)
    assert len(rep.rho_profile) == 1
    assert rep.rho_max_skew == pytest.approx(rep.rho_adjacency, abs=1e-9)

    rep = max_skew_spectral_radius(generate("cycle", [4]))
    assert rep.rho_profile == pytest.approx([math.sqrt(2), 2.0], abs=1e-10)
    assert rep.rho_max_skew == rep.rho_profile[-1]
    assert rep.argmax_orientation.text() == "+++-"

    rep = max_skew_spectral_radius(generate("complete_bipartite", [3, 4]))
    assert rep.rho_max_skew == pytest.approx(math.sqrt(12), abs=1e-9)
    assert rep.rho_max_skew == pytest.approx(rep.rho_adjacency, abs=1e-9)
    d = rep.to_dict()
    assert d["tolerances"]["group"] == 1e-8


def test_profile_strictly_increasing():
    for g in load_catalog(6)[::5]:
        prof = max_skew_spectral_radius(g).rho_profile
        assert all(b - a > 1e-8 for a, b in zip(prof, prof[1:]))


def test_block_orientation_attains_adjacency_radius():
    # the first-side-to-second-side orientation reaches rho(A) on every bipartite graph tried
    for g in [generate("cycle", [4]), generate("cycle", [6]), generate("complete_bipartite", [3, 4]), path_graph(5)]:
        o = canonical_bipartite_orientation(g, is_bipartite(g))
        assert spectral_radius_skew(skew_matrix(o)) == pytest.approx(spectral_radius_adjacency(g), abs=1e-9)


def test_bipartite_equality_examples():
    assert check_bipartite_radius_equality(generate("cycle", [4]))
    assert check_bipartite_radius_equality(path_graph(5))
    k23 = generate("complete_bipartite", [2, 3])
    assert check_bipartite_radius_equality(k23)
    assert max_skew_spectral_radius(k23).rho_max_skew == pytest.approx(math.sqrt(6), abs=1e-9)
    with pytest.raises(SkewSpecError):
        check_bipartite_radius_equality(generate("cycle", [3]))


def test_radius_constant_examples():
    assert check_radius_constant(path_graph(6))
    assert not check_radius_constant(generate("cycle", [4]))
    assert check_radius_constant(generate("bowtie_odd", [3]))


def test_bounds_examples():
    b = check_extremal_bounds(generate("complete_bipartite", [3, 4]))
    assert b.upper_ok and b.upper_tight and b.consistent
    b = check_extremal_bounds(path_graph(7))
    assert b.lower_ok and b.lower_tight and b.consistent
    b = check_extremal_bounds(generate("cycle", [6]))
    assert b.upper_ok and not b.upper_tight and b.lower_ok and not b.lower_tight
    assert b.rho_s == pytest.approx(2.0, abs=1e-9) and b.upper_bound == 3.0
    b = check_extremal_bounds(generate("cycle", [5]))
    assert b.upper_ok is None and b.lower_ok


def test_edge_monotonicity_examples():
    c4 = generate("cycle", [4])
    assert check_edge_monotonicity(c4, (0, 1))
    # rho_s(P4) is the golden ratio
    assert max_skew_spectral_radius(path_graph(4)).rho_max_skew == pytest.approx((1 + 5 ** 0.5) / 2, abs=1e-10)
    t1 = generate("theorem1", [2])
    assert check_edge_monotonicity(t1, (4, 5))
    assert check_edge_monotonicity(generate("complete_bipartite", [2, 2]), (0, 2))
    with pytest.raises(SkewSpecError):
        check_edge_monotonicity(path_graph(3), (0, 1))


def test_trees_have_single_radius_equal_to_adjacency():
    for g in load_catalog(7):
        if is_tree(g):
            rep = max_skew_spectral_radius(g)
            assert len(rep.rho_profile) == 1
            assert rep.rho_max_skew == pytest.approx(rep.rho_adjacency, abs=1e-9)
