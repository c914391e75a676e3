"""Eccentricity, exact diameter, and the double-sweep lower bound."""

import numpy as np
import pytest

from gensemble.diameter import bfs_eccentricity, double_sweep_estimate, exact_diameter
from gensemble.graph import Graph

from conftest import connected_er_graph, er_graph, floyd_warshall, prufer_tree


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n):
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


class TestEccentricity:
    def test_path_endpoint(self):
        res = bfs_eccentricity(path_graph(5), 0)
        assert res.ecc == 4 and res.farthest == 4 and res.reached == 5

    def test_star_center(self):
        assert bfs_eccentricity(star_graph(6), 0).ecc == 1

    def test_disconnection_signal(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert bfs_eccentricity(g, 0).reached == 2

    def test_farthest_ties_break_to_smallest_label(self):
        res = bfs_eccentricity(star_graph(5), 0)
        assert res.farthest == 1


class TestExactDiameter:
    def test_cycle(self):
        assert exact_diameter(cycle_graph(6)).exact == 3

    def test_path(self):
        for n in (2, 5, 11):
            assert exact_diameter(path_graph(n)).exact == n - 1

    def test_disconnected_reported(self):
        est = exact_diameter(Graph.from_edges(4, [(0, 1), (2, 3)]))
        assert not est.connected and est.exact is None and est.lower is None
        with pytest.raises(ValueError):
            est.value

    def test_matches_floyd_warshall(self, rng):
        for _ in range(40):
            n = 20
            m = int(rng.integers(n - 1, 60))
            g = connected_er_graph(n, m, rng)
            dist = floyd_warshall(g)
            assert exact_diameter(g).exact == int(dist.max())


class TestDoubleSweep:
    def test_path_any_start(self, rng):
        g = path_graph(10)
        for _ in range(10):
            assert double_sweep_estimate(g, rng).lower == 9

    def test_exact_on_trees(self, rng):
        for _ in range(60):
            n = int(rng.integers(2, 60))
            t = prufer_tree(n, rng)
            assert double_sweep_estimate(t, rng).lower == exact_diameter(t).exact

    def test_bracket_on_random_connected_graphs(self, rng):
        for _ in range(200):
            g = connected_er_graph(40, int(rng.integers(39, 180)), rng)
            exact = exact_diameter(g).exact
            lower = double_sweep_estimate(g, rng).lower
            assert lower <= exact <= 2 * lower

    def test_eccentricity_bracket(self, rng):
        g = connected_er_graph(25, 50, rng)
        diam = exact_diameter(g).exact
        for v in range(g.n):
            ecc = bfs_eccentricity(g, v).ecc
            assert ecc <= diam <= 2 * ecc

    def test_disconnected(self, rng):
        g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
        est = double_sweep_estimate(g, rng)
        assert not est.connected and est.lower is None

    def test_deterministic_under_fixed_seed(self):
        g = connected_er_graph(30, 70, np.random.default_rng(7))
        a = [double_sweep_estimate(g, np.random.default_rng(99)).lower for _ in range(3)]
        b = [double_sweep_estimate(g, np.random.default_rng(99)).lower for _ in range(3)]
        assert a == b
