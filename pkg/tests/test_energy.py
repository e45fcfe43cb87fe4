import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exen.energy import (
    adjacency_matrix,
    component_locality_check,
    degree_matrix,
    energy_report,
    extended_adjacency_matrix,
    vertex_weight_decomposition,
)
from exen.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    matching,
    path,
    star,
)
from exen.linalg import matrix_abs

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


class TestMatrices:
    def test_adjacency_k2(self):
        assert np.array_equal(adjacency_matrix(path(2)), [[0.0, 1.0], [1.0, 0.0]])

    def test_adjacency_empty(self):
        assert np.array_equal(adjacency_matrix(empty(3)), np.zeros((3, 3)))

    def test_adjacency_p3_tridiagonal(self):
        a = adjacency_matrix(path(3))
        assert np.array_equal(a, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])

    def test_extended_equals_adjacency_on_regular(self):
        g = cycle(4)
        assert np.array_equal(extended_adjacency_matrix(g), adjacency_matrix(g))

    def test_extended_p3_entries(self):
        a = extended_adjacency_matrix(path(3))
        nz = a[a != 0.0]
        assert np.allclose(nz, 1.25)

    def test_extended_star_entries(self):
        a = extended_adjacency_matrix(star(4))
        nz = a[a != 0.0]
        assert np.allclose(nz, 5.0 / 3.0)

    def test_degree_matrix(self):
        assert np.array_equal(degree_matrix(complete(3)), 2.0 * np.eye(3))
        assert np.array_equal(degree_matrix(path(3)), np.diag([1.0, 2.0, 1.0]))
        assert np.array_equal(degree_matrix(empty(2)), np.zeros((2, 2)))

    def test_isolated_vertex_row_is_zero(self):
        g = disjoint_union(path(2), empty(1))
        a = extended_adjacency_matrix(g)
        assert np.array_equal(a[2], np.zeros(3))


class TestEnergyReport:
    def test_k2(self):
        r = energy_report(path(2))
        assert abs(r.ordinary_energy - 2.0) <= 1e-9
        assert abs(r.extended_energy - 2.0) <= 1e-9
        assert np.allclose(r.vertex_energies, [1.0, 1.0], atol=1e-9)

    def test_p3(self):
        r = energy_report(path(3))
        assert abs(r.ordinary_energy - 2.0 * SQRT2) <= 1e-6
        assert abs(r.extended_energy - 2.5 * SQRT2) <= 1e-6
        assert abs(r.extended_vertex_energies[1] - 1.25 * SQRT2) <= 1e-6

    def test_star4(self):
        r = energy_report(star(4))
        assert abs(r.ordinary_energy - 2.0 * SQRT3) <= 1e-6
        assert abs(r.extended_energy - (10.0 / 3.0) * SQRT3) <= 1e-6
        assert abs(r.extended_vertex_energies[0] - (5.0 / 3.0) * SQRT3) <= 1e-6

    def test_p4(self):
        r = energy_report(path(4))
        assert abs(r.ordinary_energy - 2.0 * math.sqrt(5.0)) <= 1e-6
        assert abs(r.extended_energy - 2.0 * math.sqrt(7.25)) <= 1e-6

    def test_radii(self):
        r = energy_report(path(4))
        assert abs(r.adjacency_spectral_radius - 2.0 * math.cos(math.pi / 5.0)) <= 1e-9
        assert abs(r.extended_spectral_radius - 1.8462912017836262) <= 1e-6

    def test_vertex_energies_match_matrix_abs_diagonal(self):
        # independent route: diagonal of the explicitly formed |A_ex|
        g = star(5)
        r = energy_report(g)
        diag = np.diag(matrix_abs(extended_adjacency_matrix(g)))
        assert np.allclose(r.extended_vertex_energies, diag, atol=1e-9)

    @given(graphs())
    def test_report_invariants(self, g):
        r = energy_report(g)
        assert abs(r.ordinary_energy - np.sum(np.abs(r.spectrum))) <= 1e-9
        assert abs(r.extended_energy - np.sum(np.abs(r.extended_spectrum))) <= 1e-9
        assert abs(np.sum(r.vertex_energies) - r.ordinary_energy) <= 1e-9
        assert abs(np.sum(r.extended_vertex_energies) - r.extended_energy) <= 1e-9
        assert np.min(r.vertex_energies) >= -1e-12
        assert np.min(r.extended_vertex_energies) >= -1e-12

    @given(graphs())
    def test_regular_collapse(self, g):
        d = g.degrees()
        if min(d) != max(d):
            return
        assert np.max(np.abs(extended_adjacency_matrix(g) - adjacency_matrix(g))) == 0.0
        r = energy_report(g)
        assert abs(r.extended_energy - r.ordinary_energy) <= 1e-9

    def test_block_diagonality(self):
        g1, g2 = star(4), cycle(5)
        both = energy_report(disjoint_union(g1, g2))
        apart = energy_report(g1).extended_energy + energy_report(g2).extended_energy
        assert abs(both.extended_energy - apart) <= 1e-9


class TestBiDegreeScaling:
    @pytest.mark.parametrize("g,a,b", [
        (star(4), 3, 1),
        (star(7), 6, 1),
        (complete_bipartite(2, 3), 3, 2),
        (complete_bipartite(2, 2), 2, 2),
        (path(3), 2, 1),
        (disjoint_union(path(3), path(3)), 2, 1),
    ])
    def test_scaling(self, g, a, b):
        factor = 0.5 * (a / b + b / a)
        assert np.allclose(
            extended_adjacency_matrix(g), factor * adjacency_matrix(g), atol=0.0
        )
        r = energy_report(g)
        assert abs(r.extended_energy - factor * r.ordinary_energy) <= 1e-9


class TestWeights:
    def test_k2_weights(self):
        q = vertex_weight_decomposition(path(2)).weights
        assert np.allclose(q, 0.25 + np.zeros((2, 2)) + 0.25, atol=1e-12)

    def test_star4_center_weights(self):
        dec = vertex_weight_decomposition(star(4))
        # center loads 1/2 on each of the two nonzero eigenvalues
        nonzero = np.abs(dec.abs_eigenvalues) > 1e-9
        assert np.allclose(dec.weights[0][nonzero], 0.5, atol=1e-9)
        assert np.allclose(dec.weights[0][~nonzero], 0.0, atol=1e-9)

    @given(graphs())
    def test_doubly_stochastic_and_reproduces_energy(self, g):
        dec = vertex_weight_decomposition(g)
        q = dec.weights
        assert np.min(q) >= 0.0
        assert np.allclose(q.sum(axis=0), 1.0, atol=1e-9)
        assert np.allclose(q.sum(axis=1), 1.0, atol=1e-9)
        recon = q @ dec.abs_eigenvalues
        expected = energy_report(g).extended_vertex_energies
        assert np.allclose(recon, expected, atol=1e-9)


class TestLocality:
    def test_two_k2(self):
        g = matching(4)
        assert component_locality_check(g)
        assert np.allclose(energy_report(g).extended_vertex_energies, 1.0, atol=1e-9)

    def test_p3_plus_isolated(self):
        g = disjoint_union(path(3), empty(1))
        assert component_locality_check(g)
        assert abs(energy_report(g).extended_vertex_energies[3]) <= 1e-12

    def test_k3_plus_star(self):
        assert component_locality_check(disjoint_union(complete(3), star(4)))

    @given(graphs(max_n=7))
    def test_locality_everywhere(self, g):
        assert component_locality_check(g)


class TestRelabelingConsistency:
    @given(graphs(max_n=7), st.integers(min_value=0, max_value=2**32 - 1))
    def test_isomorphic_labelings_equal_energy(self, g, seed):
        rng = np.random.default_rng(seed)
        perm = rng.permutation(g.n)
        relabeled = Graph.from_edges(g.n, [(perm[i], perm[j]) for i, j in g.edges])
        r1, r2 = energy_report(g), energy_report(relabeled)
        assert abs(r1.extended_energy - r2.extended_energy) <= 1e-8
        assert abs(r1.ordinary_energy - r2.ordinary_energy) <= 1e-8
