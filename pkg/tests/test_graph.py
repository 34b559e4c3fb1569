import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_chordal, brute_chromatic, brute_col
from dpcolor.graph import (
    Graph,
    JoinC5Complete,
    NotApplicable,
    TwoVertexComplete,
    all_labeled_graphs,
    canonical_form,
    chordal_peo,
    chromatic_number,
    classify_chi_n_minus_2,
    coloring_number,
    degeneracy_ordering,
    delete_vertex,
    find_isomorphism,
    induced_subgraph,
    is_isomorphic,
    is_perfect_elimination_ordering,
    is_proper_coloring,
    is_simplicial,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    max_clique,
    nonisomorphic_graphs,
    optimal_coloring,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


W = join(make_cycle(4), make_complete(1))


class TestConstructors:
    def test_cycle_4(self):
        g = make_cycle(4)
        assert g.degrees() == [2, 2, 2, 2]
        assert g.num_edges == 4

    def test_cycle_3_is_k3(self):
        assert make_cycle(3) == make_complete(3)

    def test_cycle_5(self):
        assert chromatic_number(make_cycle(5)) == 3

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            make_cycle(2)

    @pytest.mark.parametrize("n,edges", [(0, 0), (1, 0), (4, 6), (7, 21)])
    def test_complete(self, n, edges):
        g = make_complete(n)
        assert g.n == n and g.num_edges == edges
        assert all(d == n - 1 for d in g.degrees())

    def test_join_counts(self):
        g = join(make_cycle(4), make_complete(1))
        assert g.n == 5 and g.num_edges == 8

    def test_join_identity(self):
        g = make_path(5)
        assert join(make_complete(0), g) == g
        assert join(g, make_complete(0)) == g

    def test_join_labels(self):
        g = join(make_path(2), make_path(3))
        assert g.has_edge(0, 1) and g.has_edge(2, 3) and g.has_edge(3, 4)
        assert not g.has_edge(2, 4)
        assert g.num_edges == 1 + 2 + 2 * 3

    @pytest.mark.parametrize("s", [0, 1, 2, 3])
    def test_c5_join_has_chi_n_minus_2(self, s):
        g = join(make_cycle(5), make_complete(s))
        assert chromatic_number(g) == g.n - 2

    def test_induced_p3(self):
        assert induced_subgraph(make_cycle(4), {0, 1, 2}) == make_path(3)

    def test_delete_apex(self):
        assert delete_vertex(W, 4) == make_cycle(4)

    @given(graphs())
    def test_induced_identity(self, g):
        assert induced_subgraph(g, range(g.n)) == g

    def test_rejects_bad_adjacency(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))
        with pytest.raises(ValueError):
            Graph(1, (1,))
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    @given(graphs())
    def test_degree_is_popcount(self, g):
        h = to_nx(g)
        assert g.degrees() == [h.degree(v) for v in range(g.n)]
        assert g.num_edges == h.number_of_edges()

    @given(graphs())
    def test_cycle_rank(self, g):
        h = to_nx(g)
        assert g.cycle_rank == g.num_edges - g.n + nx.number_connected_components(h)


class TestColoring:
    def test_examples(self):
        assert chromatic_number(make_cycle(4)) == 2
        assert chromatic_number(make_complete(5)) == 5
        assert chromatic_number(W) == 3
        assert chromatic_number(make_complete(0)) == 0

    @given(graphs(max_n=6))
    def test_chromatic_matches_brute_force(self, g):
        k, coloring = optimal_coloring(g)
        assert k == brute_chromatic(g)
        assert is_proper_coloring(g, coloring)
        assert set(coloring) <= set(range(1, k + 1))

    @given(graphs(max_n=7))
    def test_max_clique(self, g):
        clique = max_clique(g)
        assert g.is_clique(sum(1 << v for v in clique))
        expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
        assert len(clique) == expected

    def test_coloring_number_examples(self):
        assert coloring_number(W) == 4
        assert coloring_number(make_complete(6)) == 6
        assert coloring_number(make_path(5)) == 2
        assert coloring_number(make_complete(0)) == 0
        tree = Graph.from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
        assert coloring_number(tree) == 2

    @given(graphs(max_n=6))
    def test_coloring_number_matches_brute_force(self, g):
        col, order = degeneracy_ordering(g)
        assert col == brute_col(g)
        assert sorted(order) == list(range(g.n))
        for i, v in enumerate(order):
            assert sum(g.has_edge(v, w) for w in order[:i]) <= col - 1

    def test_chi_at_most_col_exhaustive(self):
        for n in range(7):
            for g in nonisomorphic_graphs(n):
                assert chromatic_number(g) <= coloring_number(g)

    @pytest.mark.parametrize("s", [0, 1, 2, 3])
    @pytest.mark.parametrize("g", [make_cycle(4), make_cycle(5), make_path(4), make_cycle(7)])
    def test_join_adds_s(self, g, s):
        assert chromatic_number(join(g, make_complete(s))) == chromatic_number(g) + s


class TestChordal:
    def test_simplicial(self):
        p3 = make_path(3)
        assert is_simplicial(p3, 0)
        assert not is_simplicial(p3, 1)
        assert not any(is_simplicial(make_cycle(4), v) for v in range(4))
        assert is_simplicial(make_empty(2), 0)
        with pytest.raises(ValueError):
            is_simplicial(p3, 3)

    def test_peo_examples(self):
        assert chordal_peo(make_complete(4)) is not None
        assert chordal_peo(make_cycle(4)) is None
        assert chordal_peo(W) is None

    @given(graphs(max_n=7))
    def test_peo_iff_chordal(self, g):
        peo = chordal_peo(g)
        assert (peo is not None) == brute_chordal(g) == nx.is_chordal(to_nx(g))
        if peo is not None:
            assert is_perfect_elimination_ordering(g, peo)

    @given(graphs(max_n=7))
    def test_chordal_equalities(self, g):
        peo = chordal_peo(g)
        if peo is None:
            return
        pos = {v: i for i, v in enumerate(peo)}
        along = max((1 + sum(pos[w] < pos[v] for w in g.neighbors(v)) for v in peo), default=0)
        assert chromatic_number(g) == coloring_number(g) == along

    def test_high_chi_implies_big_clique_and_chordal(self):
        for n in range(1, 7):
            for g in nonisomorphic_graphs(n):
                if chromatic_number(g) >= n - 1:
                    assert len(max_clique(g)) >= n - 1
                    assert chordal_peo(g) is not None


class TestIsomorphism:
    @given(graphs(max_n=7), st.randoms())
    def test_relabelled_copy(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        phi = find_isomorphism(g, h)
        assert phi is not None
        assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())
        assert canonical_form(g) == canonical_form(h)

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_against_networkx(self, g, h):
        expected = nx.is_isomorphic(to_nx(g), to_nx(h))
        assert is_isomorphic(g, h) == expected
        assert (canonical_form(g) == canonical_form(h)) == expected

    def test_class_counts(self):
        # OEIS A000088
        assert [len(nonisomorphic_graphs(n)) for n in range(8)] == [1, 1, 2, 4, 11, 34, 156, 1044]

    def test_classes_are_distinct(self):
        reps = nonisomorphic_graphs(5)
        assert all(not is_isomorphic(a, b) for i, a in enumerate(reps) for b in reps[i + 1 :])


class TestChiNMinus2:
    def test_c4(self):
        # removing an adjacent pair leaves K2; removing the antipodal pair leaves two isolated vertices
        cls = classify_chi_n_minus_2(make_cycle(4))
        assert cls == TwoVertexComplete(0, 1)
        rest = induced_subgraph(make_cycle(4), {2, 3})
        assert rest == make_complete(2)
        assert induced_subgraph(make_cycle(4), {1, 3}).num_edges == 0

    def test_c5(self):
        assert classify_chi_n_minus_2(make_cycle(5)) == JoinC5Complete(0)

    def test_c5_join(self):
        assert classify_chi_n_minus_2(join(make_cycle(5), make_complete(2))) == JoinC5Complete(2)

    def test_not_applicable(self):
        assert classify_chi_n_minus_2(make_complete(4)) == NotApplicable()

    def test_needs_three_vertices(self):
        with pytest.raises(ValueError):
            classify_chi_n_minus_2(make_complete(2))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_exhaustive(self, n):
        for g in all_labeled_graphs(n):
            if brute_chromatic(g) == n - 2:
                cls = classify_chi_n_minus_2(g)
                assert not isinstance(cls, NotApplicable)
                if isinstance(cls, TwoVertexComplete):
                    rest = [v for v in range(n) if v not in (cls.u, cls.v)]
                    assert all(g.has_edge(a, b) for i, a in enumerate(rest) for b in rest[i + 1 :])
                else:
                    target = join(make_cycle(5), make_complete(cls.s))
                    assert nx.is_isomorphic(to_nx(g), to_nx(target))
