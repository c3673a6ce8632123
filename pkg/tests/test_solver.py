import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bddkernel.errors import DomainError, ScaleError
from bddkernel.graph import Graph, is_bdd_set
from bddkernel.solver import (all_bdd_sets, brute_force_min_bdd, fpt_solve, is_splex,
                              splex_max)

from builders import complete_graph, cycle_graph, graphs, path_graph, star_graph
from oracles import (max_splex_size, min_vertex_cover_size_nx,
                     naive_min_bdd_size, random_graph)


class TestBruteForce:
    def test_path(self):
        assert brute_force_min_bdd(path_graph(3), 0) == {1}

    def test_k5_lexicographic(self):
        assert brute_force_min_bdd(complete_graph(5), 2) == {0, 1}
        assert not any(is_bdd_set(complete_graph(5), {v}, 2) for v in range(5))

    def test_already_bounded(self):
        assert brute_force_min_bdd(cycle_graph(6), 2) == set()

    def test_refuses_above_limit(self):
        with pytest.raises(ScaleError):
            brute_force_min_bdd(Graph(range(17)), 0)
        assert brute_force_min_bdd(Graph(range(17)), 0, limit=20) == set()

    def test_hard_limit(self):
        with pytest.raises(ScaleError):
            brute_force_min_bdd(Graph(range(25)), 0, limit=100)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=9), st.integers(0, 2))
    def test_matches_naive(self, g, d):
        s = brute_force_min_bdd(g, d)
        assert is_bdd_set(g, s, d)
        assert len(s) == naive_min_bdd_size(g, d)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=12))
    def test_vertex_cover_matches_networkx(self, g):
        assert len(brute_force_min_bdd(g, 0)) == min_vertex_cover_size_nx(g)

    def test_all_bdd_sets_count(self):
        # path 0-1-2 with d=0: covers are {1}, {0,1}, {1,2}, {0,2}, {0,1,2}
        assert sorted(map(sorted, all_bdd_sets(path_graph(3), 0))) == \
            [[0, 1], [0, 1, 2], [0, 2], [1], [1, 2]]


class TestFpt:
    def test_star(self, k15):
        out = fpt_solve(k15, 0, 1)
        assert out.feasible and out.solution == {0}

    def test_k5_infeasible(self):
        out = fpt_solve(complete_graph(5), 2, 1)
        assert not out.feasible and out.solution is None
        assert out.nodes_explored >= 1

    @given(graphs(max_n=10), st.integers(0, 2))
    def test_budget_n_always_feasible(self, g, d):
        assert fpt_solve(g, d, g.n).feasible

    def test_negative_budget(self):
        with pytest.raises(DomainError):
            fpt_solve(path_graph(3), 0, -1)

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=12), st.integers(0, 2), st.booleans())
    def test_agrees_with_brute_force(self, g, d, kernelize):
        opt = len(brute_force_min_bdd(g, d))
        for k in range(g.n + 1):
            out = fpt_solve(g, d, k, kernelize=kernelize)
            assert out.feasible == (opt <= k)
            if out.feasible:
                assert len(out.solution) <= k and is_bdd_set(g, out.solution, d)

    def test_kernelization_shrinks_search(self):
        rng = random.Random(4)
        with_k = without = 0
        for _ in range(30):
            g = random_graph(rng, 14, 0.3)
            opt = len(brute_force_min_bdd(g, 1))
            with_k += fpt_solve(g, 1, opt - 1).nodes_explored if opt else 0
            without += fpt_solve(g, 1, opt - 1, kernelize=False).nodes_explored if opt else 0
        assert with_k < without

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=8), st.integers(0, 2))
    def test_bdd_sets_hit_every_star(self, g, d):
        need = d + 1
        stars = [(c, leaves) for c in g.vertices
                 for leaves in combinations(g.neighbors(c), need)]
        for s in all_bdd_sets(g, d):
            assert all(c in s or s & set(leaves) for c, leaves in stars)


class TestSplex:
    def test_clique(self):
        assert splex_max(complete_graph(4), 1) == {0, 1, 2, 3}

    def test_c5(self):
        best = splex_max(cycle_graph(5), 2)
        assert len(best) == 3 and is_splex(cycle_graph(5), best, 2)
        assert max_splex_size(cycle_graph(5), 2) == 3

    @pytest.mark.parametrize("n", [1, 4, 6])
    def test_edgeless(self, n):
        assert splex_max(Graph(range(n)), n) == set(range(n))

    def test_bad_s(self):
        with pytest.raises(DomainError):
            splex_max(path_graph(3), 0)

    def test_scale_refusal(self):
        with pytest.raises(ScaleError):
            splex_max(Graph(range(41)), 2)

    def test_is_splex(self):
        assert is_splex(star_graph(3), {0, 1, 2, 3}, 3)
        assert not is_splex(star_graph(3), {0, 1, 2, 3}, 2)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9), st.integers(1, 3))
    def test_matches_brute_force(self, g, s):
        best = splex_max(g, s)
        assert is_splex(g, best, s)
        assert len(best) == max_splex_size(g, s)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=12), st.integers(1, 3))
    def test_duality(self, g, s):
        assert len(splex_max(g, s)) == g.n - len(brute_force_min_bdd(g.complement(), s - 1))
