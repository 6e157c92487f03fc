import math
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kforest.generators import (
    FamilySpec,
    complete,
    cycle,
    generate,
    path,
    petersen,
    random_tree,
    star,
    subdivision,
)
from kforest.graph import (
    DuplicateEdgeWarning,
    Graph,
    GraphFormatError,
    girth,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

from corpus import family_corpus, mad_corpus, to_nx
from oracles import graph6_reference


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


class TestGraph6:
    def test_examples_against_reference(self):
        assert graph6_reference(1, []) == "@"
        assert graph6_reference(2, [(0, 1)]) == "A_"
        assert graph6_reference(2, []) == "A?"

    @pytest.mark.parametrize("text,n,m", [("@", 1, 0), ("A_", 2, 1), ("A?", 2, 0)])
    def test_parse_examples(self, text, n, m):
        g = parse_graph6(text)
        assert (g.n, g.m) == (n, m)

    def test_encode_examples(self):
        assert to_graph6(Graph.empty(1)) == "@"
        assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_\n").m == 1

    def test_corpus_matches_reference_and_networkx(self):
        for g in family_corpus() + mad_corpus():
            s = to_graph6(g)
            assert s == graph6_reference(g.n, g.edges())
            assert s.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
            assert parse_graph6(s) == g

    def test_long_form(self):
        g = cycle(100)
        s = to_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g
        assert s.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()

    @pytest.mark.parametrize("bad", ["", "A", "A_?", "B\x01", "A`"])
    def test_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_graph6(bad)

    def test_error_names_offset(self):
        with pytest.raises(GraphFormatError, match="offset 1"):
            parse_graph6("A\x07")

    @given(graphs(max_n=14))
    def test_roundtrip(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("0 1\n1 2")
        assert g == path(3)

    def test_declared_n(self):
        g = parse_edge_list("n 4\n0 1")
        assert (g.n, g.m) == (4, 1)

    def test_comments_and_blanks(self):
        g = parse_edge_list("# header\n\n0 1  # edge\n")
        assert g.m == 1

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_edge_list("0 0")

    @pytest.mark.parametrize("bad", ["0 -1", "a b", "0 1 2", "n 1\n0 3"])
    def test_bad_tokens(self, bad):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)

    def test_duplicates_warn(self):
        with pytest.warns(DuplicateEdgeWarning):
            g = parse_edge_list("0 1\n1 0\n0 1")
        assert g.m == 1

    def test_roundtrip(self):
        for g in family_corpus():
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                assert parse_edge_list(to_edge_list(g)) == g


class TestInvariants:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            Graph(2, ((1,), ()))

    def test_rejects_loops_and_duplicates(self):
        with pytest.raises(ValueError):
            Graph(1, ((0,),))
        with pytest.raises(ValueError):
            Graph(2, ((1, 1), (0,)))

    @given(graphs())
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.m

    def test_degrees(self):
        assert all(petersen().degree(v) == 3 for v in range(10))
        assert star(6).degree(0) == 6
        assert complete(4).max_degree() == 3
        assert Graph.empty(3).max_degree() == 0

    def test_degree_errors(self):
        with pytest.raises(IndexError):
            cycle(5).degree(5)
        with pytest.raises(ValueError):
            Graph.empty(0).max_degree()
        with pytest.raises(ValueError):
            Graph.empty(0).min_degree()


class TestGirth:
    def test_examples(self):
        assert girth(cycle(5)) == 5
        assert girth(complete(4)) == 3
        assert girth(random_tree(12, 1)) == math.inf
        assert girth(petersen()) == 5

    @pytest.mark.parametrize("t", [0, 1, 2, 3])
    def test_subdivision_scales(self, t):
        for g in (cycle(3), cycle(4), cycle(7), complete(4)):
            assert girth(subdivision(g, t)) == (t + 1) * girth(g)

    @settings(max_examples=150)
    @given(graphs(max_n=9))
    def test_matches_networkx(self, g):
        assert girth(g) == nx.girth(to_nx(g))


class TestInducedSubgraph:
    def test_k3_in_k4(self):
        h, ids = induced_subgraph(complete(4), [0, 2, 3])
        assert h == complete(3)
        assert ids == [0, 2, 3]

    def test_identity(self):
        g = petersen()
        h, ids = induced_subgraph(g, range(g.n))
        assert h == g and ids == list(range(10))

    def test_path_in_cycle(self):
        h, _ = induced_subgraph(cycle(5), [1, 2, 3])
        assert h == path(3)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            induced_subgraph(cycle(5), [7])


class TestGenerators:
    def test_cycle(self):
        g = generate(FamilySpec("cycle", (5,)))
        assert (g.n, g.m, girth(g)) == (5, 5, 5)

    def test_subdivided_k4(self):
        g = generate(FamilySpec("subdivision", base=FamilySpec("complete", (4,)), subdivide=1))
        assert (g.n, g.m) == (10, 12)

    def test_star(self):
        g = generate(FamilySpec("star", (6,)))
        assert g.n == 7 and g.degree(0) == 6 and g.m == 6

    def test_petersen(self):
        g = generate(FamilySpec("petersen"))
        assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())

    def test_bipartite(self):
        g = generate(FamilySpec("complete_bipartite", (2, 3)))
        assert (g.n, g.m) == (5, 6)

    def test_random_tree_deterministic(self):
        a = generate(FamilySpec("random_tree", (15,), seed=7))
        b = generate(FamilySpec("random_tree", (15,), seed=7))
        assert a == b
        assert a.m == 14 and a.is_connected()

    @pytest.mark.parametrize("spec", [
        FamilySpec("cycle", (2,)),
        FamilySpec("path", (0,)),
        FamilySpec("star", (1, 2)),
        FamilySpec("cycle", (5,), subdivide=-1),
        FamilySpec("subdivision"),
        FamilySpec("hypercube", (3,)),
    ])
    def test_invalid(self, spec):
        with pytest.raises(ValueError):
            generate(spec)
