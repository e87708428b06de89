import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorkit.graph import (Graph, add_clique, canonical_form, clique_number,
                            common_neighbors, complement, complete_graph,
                            complete_multipartite, contract_edge, cycle_graph,
                            delete_edge, delete_vertex, enumerate_separations,
                            independence_number, induced_subgraph, is_connected,
                            is_internally_k_connected, is_k_connected, isomorphic,
                            path_graph)
from minorkit.patterns import kt_minus_cherry, kt_minus_matching, moser_spindle

from oracles import oracle_is_k_connected, oracle_separations, random_graph


def octahedron():
    return complete_multipartite(2, 2, 2)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


class TestBasicOps:
    def test_contract_k2222_gives_k7_minus_matching(self):
        g = complete_multipartite(2, 2, 2, 2)
        for u, v in g.edges():
            h = contract_edge(g, u, v)
            assert h.n == 7 and h.edge_count() == 19
            assert isomorphic(h, kt_minus_matching(7))

    def test_contract_k3_gives_k2(self):
        h = contract_edge(complete_graph(3), 0, 1)
        assert h.n == 2 and h.edge_count() == 1

    def test_contract_edge_count_law_on_k5(self):
        g = complete_graph(5)
        assert contract_edge(g, 0, 1).edge_count() == 10 - 1 - 3 == 6

    def test_contract_requires_edge(self):
        with pytest.raises(ValueError):
            contract_edge(cycle_graph(5), 0, 2)

    def test_induced_k7_five_vertices_is_k5(self):
        assert isomorphic(induced_subgraph(complete_graph(7), [0, 2, 3, 5, 6]),
                          complete_graph(5))

    def test_delete_edge_k7(self):
        assert delete_edge(complete_graph(7), 0, 1).edge_count() == 20

    def test_delete_vertex_c5_gives_p4(self):
        assert isomorphic(delete_vertex(cycle_graph(5), 2), path_graph(4))

    def test_delete_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            delete_vertex(complete_graph(3), 3)

    def test_common_neighbors_k2222(self):
        g = complete_multipartite(2, 2, 2, 2)
        for u, v in g.edges():
            assert len(common_neighbors(g, u, v)) == 4

    def test_clique_number_k7v(self):
        assert clique_number(kt_minus_cherry(7)) == 6

    def test_independence_number_spindle(self):
        assert independence_number(moser_spindle()) == 2

    @given(graphs(max_n=7))
    @settings(max_examples=150, deadline=None)
    def test_contraction_edge_count_law(self, g):
        for u, v in g.edges():
            assert (contract_edge(g, u, v).edge_count()
                    == g.edge_count() - 1 - len(common_neighbors(g, u, v)))

    @given(graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_operations_keep_adjacency_symmetric(self, g):
        candidates = [complement(g)]
        if g.edges():
            u, v = g.edges()[0]
            candidates += [contract_edge(g, u, v), delete_edge(g, u, v)]
        if g.n:
            candidates.append(delete_vertex(g, g.n - 1))
        for h in candidates:
            for a in range(h.n):
                assert not h.adj[a] >> h.n
                assert not h.adj[a] >> a & 1
                for b in range(h.n):
                    assert (h.adj[a] >> b & 1) == (h.adj[b] >> a & 1)


class TestConnectivity:
    def test_complete_graphs(self):
        assert is_k_connected(complete_graph(5), 4)
        assert not is_k_connected(complete_graph(5), 5)

    def test_k2222(self):
        g = complete_multipartite(2, 2, 2, 2)
        assert is_k_connected(g, 6)
        assert not is_k_connected(g, 7)

    def test_c5_not_3_connected(self):
        assert not is_k_connected(cycle_graph(5), 3)
        assert is_k_connected(cycle_graph(5), 2)

    def test_against_cut_oracle_random(self):
        rng = random.Random(11)
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 7), rng.choice([0.2, 0.4, 0.6, 0.9]))
            for k in range(0, g.n + 2):
                if k == 0:
                    assert is_k_connected(g, 0) == (g.n >= 1)
                else:
                    assert is_k_connected(g, k) == oracle_is_k_connected(g, k), (g.edges(), k)


class TestInternalConnectivity:
    def test_k4_full_roots_any_k(self):
        g = complete_graph(4)
        for k in range(0, 9):
            assert is_internally_k_connected(g, range(4), k)

    def test_octahedron_any_four(self):
        g = octahedron()
        for z in combinations(range(6), 4):
            assert is_internally_k_connected(g, z, 4)

    def test_two_k4s_sharing_two_vertices(self):
        g = Graph.from_edges(6, list(combinations([0, 1, 2, 3], 2))
                             + list(combinations([2, 3, 4, 5], 2)))
        assert not is_internally_k_connected(g, [0, 1, 2, 3], 4)

    def test_matches_clique_completion_when_roots_large_enough(self):
        # adding all edges inside Z and asking for k-connectivity is the same
        # question whenever n >= k+1 and |Z| >= k
        rng = random.Random(5)
        for _ in range(150):
            n = rng.randint(3, 7)
            g = random_graph(rng, n, rng.choice([0.3, 0.5, 0.8]))
            k = rng.randint(1, 4)
            if n < k + 1:
                continue
            size = rng.randint(k, n)
            z = rng.sample(range(n), size)
            assert (is_internally_k_connected(g, z, k)
                    == is_k_connected(add_clique(g, z), k)), (g.edges(), z, k)

    def test_separation_tail_is_internally_connected(self):
        # in a k-connected graph, the far side of any separation of order >= k
        # together with its boundary forms an internally k-connected pair
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng, rng.randint(4, 6), 0.7)
            for k in (2, 3):
                if not is_k_connected(g, k):
                    continue
                for sep in enumerate_separations(g, g.n, ()):
                    if sep.order >= k:
                        inside = sorted(sep.B)
                        relabel = {v: i for i, v in enumerate(inside)}
                        sub = induced_subgraph(g, inside)
                        boundary = [relabel[v] for v in sep.A & sep.B]
                        assert is_internally_k_connected(sub, boundary, k)


class TestSeparations:
    def test_k4_empty_stream(self):
        assert list(enumerate_separations(complete_graph(4), 3, ())) == []

    def test_p3_with_root(self):
        seps = list(enumerate_separations(path_graph(3), 1, [0]))
        as_sets = {(frozenset(s.A), frozenset(s.B)) for s in seps}
        assert (frozenset({0, 1}), frozenset({1, 2})) in as_sets
        for s in seps:
            assert 0 in s.A and s.order <= 1 and s.B - s.A

    def test_count_matches_bruteforce_on_c5(self):
        got = list(enumerate_separations(cycle_graph(5), 2, ()))
        want = oracle_separations(cycle_graph(5), 2, ())
        assert len(got) == len(want)

    def test_matches_bruteforce_random(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 5), rng.choice([0.3, 0.6]))
            z = rng.sample(range(g.n), rng.randint(0, g.n)) if g.n else []
            max_order = rng.randint(0, g.n)
            got = {frozenset((sum(1 << v for v in s.A), sum(1 << v for v in s.B)))
                   for s in enumerate_separations(g, max_order, z)}
            assert got == oracle_separations(g, max_order, z), (g.edges(), z, max_order)

    def test_max_order_bound(self):
        with pytest.raises(ValueError):
            list(enumerate_separations(complete_graph(3), 4, ()))


class TestCanonicalForms:
    def test_relabeling_invariance(self):
        rng = random.Random(23)
        zoo = [complete_multipartite(2, 2, 2, 2), moser_spindle(), cycle_graph(7),
               kt_minus_cherry(7), path_graph(6), complete_graph(8)]
        for g in zoo:
            want = canonical_form(g)
            for _ in range(1000):
                perm = list(range(g.n))
                rng.shuffle(perm)
                h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
                assert canonical_form(h) == want

    def test_k33_permuted(self):
        g = complete_multipartite(3, 3)
        h = Graph.from_edges(6, [(5 - u, 5 - v) for u, v in g.edges()])
        assert isomorphic(g, h)

    def test_cherry_vs_matching_never_isomorphic(self):
        for t in range(4, 10):
            assert not isomorphic(kt_minus_cherry(t), kt_minus_matching(t))

    def test_c6_vs_two_triangles(self):
        from minorkit.graph import disjoint_union
        assert not isomorphic(cycle_graph(6),
                              disjoint_union(cycle_graph(3), cycle_graph(3)))

    def test_distinguishes_same_degree_sequence(self):
        # C3+C3 and C6 share the degree sequence; forms must differ
        from minorkit.graph import disjoint_union
        a = canonical_form(cycle_graph(6))
        b = canonical_form(disjoint_union(cycle_graph(3), cycle_graph(3)))
        assert a != b
