from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_transversal
from dpcolor.cover import (
    Cover,
    ResourceLimitExceeded,
    SearchStats,
    bfs_forest,
    cover_from_ranks,
    cover_from_text,
    cover_to_text,
    enumerate_covers,
    find_coloring,
    h0_cover,
    is_coloring,
    normalize,
    perm_rank,
    perm_unrank,
    validate_cover,
)
from dpcolor.formats import ParseError
from dpcolor.graph import Graph, join, make_complete, make_cycle, make_path
from test_graph import graphs

C4 = make_cycle(4)


@st.composite
def full_covers(draw, max_n=6, max_m=3):
    g = draw(graphs(max_n=max_n))
    m = draw(st.integers(1, max_m))
    perms = {e: draw(st.permutations(range(m))) for e in g.edges()}
    return Cover.from_permutations(g, m, perms)


@st.composite
def partial_covers(draw, max_n=6, max_m=3):
    full = draw(full_covers(max_n, max_m))
    matches = {e: [p for p in sorted(pairs) if draw(st.booleans())] for e, pairs in full.matches.items()}
    return Cover.build(full.base, full.m, matches), full


class TestValidate:
    def test_h0_valid(self):
        assert validate_cover(h0_cover()) == []

    def test_h0_shape(self):
        c = h0_cover()
        assert c.cross_edge_count() == 8
        assert c.match(2, 3) == {(1, 2), (2, 1)}
        assert c.match(3, 2) == {(2, 1), (1, 2)}
        for e in [(0, 1), (1, 2), (0, 3)]:
            assert c.match(*e) == {(1, 1), (2, 2)}

    def test_repeated_first_coordinate(self):
        c = Cover.build(C4, 2, {(0, 1): [(1, 1), (1, 2)]})
        problems = validate_cover(c)
        assert [p.condition for p in problems] == ["not a matching"]
        assert problems[0].edge == (0, 1)

    def test_match_on_non_edge(self):
        c = Cover.build(C4, 2, {(0, 2): [(1, 1)]})
        assert [p.condition for p in validate_cover(c)] == ["condition 3"]

    def test_index_outside_list(self):
        c = Cover.build(C4, 2, {(0, 1): [(3, 1)]})
        assert [p.condition for p in validate_cover(c)] == ["condition 1"]

    def test_non_uniform_ingest(self):
        c = Cover.build(make_path(3), [1, 2, 3], {(0, 1): [(1, 2)], (1, 2): [(1, 3), (2, 1)]})
        assert validate_cover(c) == []
        assert c.fold is None
        assert find_coloring(c) == brute_transversal(c)

    def test_flipped_key(self):
        c = Cover.build(C4, 2, {(1, 0): [(1, 2)]})
        assert c.match(0, 1) == {(2, 1)}

    def test_find_coloring_rejects_invalid(self):
        with pytest.raises(ValueError):
            find_coloring(Cover.build(C4, 2, {(0, 2): [(1, 1)]}))

    @given(full_covers())
    def test_full_covers_valid(self, c):
        assert validate_cover(c) == []
        assert c.is_full()


class TestFindColoring:
    def test_h0_uncolorable(self):
        assert find_coloring(h0_cover()) is None
        assert brute_transversal(h0_cover()) is None

    def test_k1(self):
        assert find_coloring(Cover.build(make_complete(1), 1)) == (1,)

    def test_identity_c4(self):
        c = Cover.from_permutations(C4, 2, {})
        assert find_coloring(c) == (1, 2, 1, 2)

    @given(full_covers())
    def test_matches_brute_force(self, c):
        stats = SearchStats()
        w = find_coloring(c, stats)
        assert w == brute_transversal(c)
        if w is not None:
            assert is_coloring(c, w)

    @given(partial_covers())
    def test_partial_matches_brute_force(self, pc):
        c, _ = pc
        assert find_coloring(c) == brute_transversal(c)

    @given(partial_covers())
    def test_extension_only_removes_witnesses(self, pc):
        partial, full = pc
        w = find_coloring(full)
        if w is not None:
            assert is_coloring(partial, w)

    @pytest.mark.parametrize("g", [make_cycle(4), make_cycle(5), make_complete(4)])
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_all_normalized_covers_agree_with_brute_force(self, g, m):
        for nc in enumerate_covers(g, m):
            assert find_coloring(nc.cover) == brute_transversal(nc.cover)


class TestPermutations:
    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_rank_is_lexicographic_position(self, m):
        for i, p in enumerate(permutations(range(m))):
            assert perm_rank(p) == i
            assert perm_unrank(i, m) == p

    def test_unrank_range(self):
        with pytest.raises(ValueError):
            perm_unrank(6, 3)


class TestNormalize:
    def test_identity_fixed_point(self):
        c = Cover.from_permutations(C4, 3, {})
        assert normalize(c).cover == c

    def test_h0(self):
        nc = normalize(h0_cover())
        assert nc.forest == ((0, 1), (0, 3), (1, 2))
        assert nc.non_forest_edges == [(2, 3)]
        assert nc.cover.permutation(2, 3) == (1, 0)
        for e in nc.forest:
            assert nc.cover.permutation(*e) == (0, 1)

    def test_rejects_partial(self):
        with pytest.raises(ValueError):
            normalize(Cover.build(C4, 2, {(0, 1): [(1, 1)]}))

    @given(full_covers())
    def test_idempotent(self, c):
        once = normalize(c)
        assert normalize(once.cover) == once
        for e in once.forest:
            assert once.cover.permutation(*e) == tuple(range(c.m))

    @given(full_covers())
    def test_preserves_colorability(self, c):
        assert (find_coloring(c) is None) == (find_coloring(normalize(c).cover) is None)


class TestEnumerate:
    @pytest.mark.parametrize("m,count", [(2, 2), (3, 6)])
    def test_c4_counts(self, m, count):
        covers = list(enumerate_covers(C4, m))
        assert len(covers) == count
        assert covers[0].cover == Cover.from_permutations(C4, m, {})

    def test_c4_m2_is_identity_then_swap(self):
        first, second = enumerate_covers(C4, 2)
        assert second == normalize(h0_cover())
        assert [first.ranks(), second.ranks()] == [(0,), (1,)]

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_tree_single_cover(self, m):
        tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        (only,) = enumerate_covers(tree, m)
        assert only.cover == Cover.from_permutations(tree, m, {})

    @pytest.mark.parametrize("g", [make_cycle(5), join(C4, make_complete(1)), make_complete(4)])
    @pytest.mark.parametrize("m", [2, 3])
    def test_count_order_and_validity(self, g, m):
        covers = list(enumerate_covers(g, m))
        assert len(covers) == factorial(m) ** g.cycle_rank
        ranks = [c.ranks() for c in covers]
        assert ranks == sorted(ranks) == list(product(range(factorial(m)), repeat=g.cycle_rank))
        assert all(validate_cover(c.cover) == [] for c in covers)
        assert covers[5 % len(covers)] == cover_from_ranks(g, m, ranks[5 % len(covers)])

    @pytest.mark.parametrize("g,m", [(C4, 2), (C4, 3), (make_complete(3), 3), (make_path(3), 3)])
    def test_every_full_cover_is_represented(self, g, m):
        yielded = {c.ranks() for c in enumerate_covers(g, m)}
        edges = g.edges()
        for combo in product(permutations(range(m)), repeat=len(edges)):
            c = Cover.from_permutations(g, m, dict(zip(edges, combo)))
            assert normalize(c).ranks() in yielded

    def test_prefix_partition(self):
        g = join(C4, make_complete(1))
        everything = [c.ranks() for c in enumerate_covers(g, 3)]
        parts = [c.ranks() for p in range(6) for c in enumerate_covers(g, 3, prefix=(p,))]
        assert parts == everything

    def test_rank_cap(self):
        with pytest.raises(ResourceLimitExceeded) as err:
            next(enumerate_covers(make_complete(6), 2, max_rank=8))
        assert err.value.required_rank == 10

    def test_forest_is_bfs_from_zero(self):
        assert bfs_forest(C4) == [(0, 1), (0, 3), (1, 2)]
        two = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
        assert bfs_forest(two) == [(0, 1), (2, 3), (2, 4)]


class TestText:
    def test_h0_text(self):
        text = cover_to_text(h0_cover())
        assert text == "cover n=4 m=2\n0 1 : 1 2\n0 3 : 1 2\n1 2 : 1 2\n2 3 : 2 1\n"
        assert cover_from_text(text, C4) == h0_cover()

    def test_unmatched_dash(self):
        c = Cover.build(C4, 3, {(0, 1): [(2, 3)]})
        text = cover_to_text(c)
        assert "0 1 : - 3 -" in text
        assert "1 2 : - - -" in text
        assert cover_from_text(text, C4) == c

    def test_reversed_line(self):
        c = cover_from_text("cover n=4 m=2\n1 0 : 2 -\n", C4)
        assert c.match(1, 0) == {(1, 2)}

    @given(partial_covers(max_n=6, max_m=4))
    def test_roundtrip_modulo_comments(self, pc):
        c, _ = pc
        text = cover_to_text(c, comments=["a note"])
        parsed = cover_from_text(text, c.base)
        assert parsed == c
        assert cover_to_text(parsed, comments=["a note"]) == text
        stripped = "".join(ln + "\n" for ln in text.splitlines() if not ln.startswith("#"))
        assert cover_to_text(cover_from_text(stripped, c.base)) == stripped

    @pytest.mark.parametrize(
        "text,line",
        [
            ("cover n=4\n", 1),
            ("cover n=5 m=2\n", 1),
            ("cover n=4 m=2\n0 1 : 1\n", 2),
            ("cover n=4 m=2\n0 1 : 1 3\n", 2),
            ("cover n=4 m=2\n# c\n0 1 1 2\n", 3),
            ("cover n=4 m=2\n0 1 : 1 2\n1 0 : 1 2\n", 3),
            ("cover n=4 m=2\n0 9 : 1 2\n", 2),
        ],
    )
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as err:
            cover_from_text(text, C4)
        assert err.value.line == line

    def test_duplicate_partner_is_a_violation_not_a_parse_error(self):
        c = cover_from_text("cover n=4 m=2\n0 1 : 1 1\n", C4)
        assert [p.condition for p in validate_cover(c)] == ["not a matching"]
