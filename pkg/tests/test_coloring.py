import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kforest.coloring import (
    BicoloredCycle,
    FrugalityViolation,
    ImproperEdge,
    c_k_minus_1,
    coloring_from_json,
    coloring_to_json,
    lists_from_json,
    lists_to_json,
    lower_bound,
    neighbor_colors,
    params,
    upper_bound,
    verify,
    verify_partial,
)
from kforest.generators import complete, cycle, star
from kforest.graph import Graph

from corpus import atlas_connected
from oracles import naive_kforested, proper_acyclic
from test_graph import graphs


def _recheck(g, c, k, viol):
    """Each witness must hold up against the graph and coloring."""
    if isinstance(viol, ImproperEdge):
        return g.has_edge(viol.u, viol.v) and c[viol.u] == c[viol.v]
    if isinstance(viol, FrugalityViolation):
        cnt = sum(1 for u in g.neighbors(viol.vertex) if c[u] == viol.color)
        return cnt == viol.count >= k and viol.color != c[viol.vertex]
    cyc = viol.cycle
    return (len(cyc) >= 3 and len(set(cyc)) == len(cyc)
            and all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
            and {c[v] for v in cyc} == set(viol.colors))


class TestVerify:
    def test_c5_valid(self):
        c = [1, 2, 1, 2, 3]
        assert naive_kforested(cycle(5), c, 4)
        assert verify(cycle(5), c, 4).valid

    def test_star_frugality(self):
        rep = verify(star(3), [1, 2, 2, 2], 3)
        assert not rep.valid
        assert rep.violations == [FrugalityViolation(0, 2, 3)]

    def test_improper(self):
        for k in (2, 3, 7):
            rep = verify(complete(2), [1, 1], k)
            assert rep.violations == [ImproperEdge(0, 1)]

    def test_bicolored_cycle(self):
        rep = verify(cycle(4), [1, 2, 1, 2], 3)
        assert len(rep.violations) == 1
        viol = rep.violations[0]
        assert isinstance(viol, BicoloredCycle) and viol.colors == (1, 2)
        assert _recheck(cycle(4), [1, 2, 1, 2], 3, viol)

    def test_partial_rejected(self):
        with pytest.raises(ValueError):
            verify(cycle(3), [1, 2, None], 3)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            verify(cycle(3), [1, 2, 3], 1)

    def test_bad_color(self):
        with pytest.raises(ValueError):
            verify(cycle(3), [1, 2, 0], 3)

    def test_report_dict(self):
        d = verify(star(3), [1, 2, 2, 2], 3).to_dict()
        assert d == {"valid": False, "violations": [
            {"kind": "frugality", "vertex": 0, "color": 2, "count": 3}]}

    def test_witnesses_recheck(self):
        rng = random.Random(3)
        for g in atlas_connected(6)[::4]:
            for _ in range(5):
                c = [rng.randint(1, 3) for _ in range(g.n)]
                for viol in verify(g, c, 3).violations:
                    assert _recheck(g, c, 3, viol)

    @settings(max_examples=300)
    @given(graphs(max_n=8), st.integers(2, 6), st.randoms(use_true_random=False))
    def test_agrees_with_naive(self, g, k, rnd):
        t = rnd.randint(1, max(1, g.n))
        c = [rnd.randint(1, t) for _ in range(g.n)]
        assert verify(g, c, k).valid == naive_kforested(g, c, k)

    @settings(max_examples=200)
    @given(graphs(max_n=8), st.integers(2, 5), st.randoms(use_true_random=False))
    def test_monotone_in_k(self, g, k, rnd):
        c = [rnd.randint(1, 4) for _ in range(g.n)]
        if verify(g, c, k).valid:
            assert all(verify(g, c, k2).valid for k2 in range(k + 1, k + 4))

    @settings(max_examples=200)
    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    def test_large_k_is_acyclic_coloring(self, g, rnd):
        if g.n == 0:
            return
        k = g.max_degree() + 1
        c = [rnd.randint(1, 4) for _ in range(g.n)]
        assert verify(g, c, max(k, 2)).valid == proper_acyclic(g, c)


class TestVerifyPartial:
    def test_empty(self):
        assert verify_partial(cycle(6), [None] * 6, 3).valid

    def test_c5_two_adjacent(self):
        assert not verify_partial(cycle(5), [1, 1, None, None, None], 4).valid

    def test_c4_opposite(self):
        assert verify_partial(cycle(4), [1, None, 1, None], 3).valid


class TestNeighborStats:
    def test_neighbor_colors(self):
        c = [None, 2, 2, 3]
        assert neighbor_colors(star(3), c, 0) == Counter({2: 2, 3: 1})
        assert neighbor_colors(Graph.empty(1), [1], 0) == Counter()
        assert neighbor_colors(star(3), [1, None, None, None], 0) == Counter()

    def test_ck(self):
        g = star(4)
        assert c_k_minus_1(g, [None, 1, 1, 1, 2], 0, 4) == {1}
        g5 = star(5)
        assert c_k_minus_1(g5, [None, 1, 1, 2, 2, None], 0, 4) == set()

    def test_ck_bound_degree_seven(self):
        g = star(7)
        rng = random.Random(0)
        for _ in range(500):
            c = [None] + [rng.choice([None, 1, 2, 3]) for _ in range(7)]
            if None not in c[1:]:
                c[rng.randint(1, 7)] = None
            assert len(c_k_minus_1(g, c, 0, 4)) <= 2

    @settings(max_examples=300)
    @given(graphs(max_n=10), st.integers(2, 6), st.randoms(use_true_random=False))
    def test_ck_bound(self, g, k, rnd):
        for v in range(g.n):
            nbrs = g.neighbors(v)
            if not nbrs:
                continue
            c = [rnd.choice([None, 1, 2, 3]) for _ in range(g.n)]
            c[rnd.choice(nbrs)] = None
            assert len(c_k_minus_1(g, c, v, k)) <= (g.degree(v) - 1) // (k - 1)


class TestParams:
    def test_examples(self):
        p = params(6, 4, 1)
        assert (p.Q, p.q) == (2, 3)
        p = params(7, 4, 3)
        assert (p.Q, p.q) == (3, 6)
        for k in range(4, 10):
            assert params(k, k, 2).Q == 2

    def test_relaxed(self):
        assert params(2, 3, 1, relaxed=True).Q == 1
        assert params(3, 2, 1, relaxed=True).Q == 3

    @pytest.mark.parametrize("M,k,p", [(3, 4, 1), (6, 3, 1), (6, 4, 4)])
    def test_theorem_mode_errors(self, M, k, p):
        with pytest.raises(ValueError):
            params(M, k, p)

    @given(st.integers(4, 30), st.integers(0, 40), st.sampled_from([1, 2, 3]))
    def test_eq1(self, k, extra, p):
        prm = params(k + extra, k, p)
        assert prm.Q >= 2 and prm.q == prm.Q + p >= p + 2


class TestBounds:
    def test_lower(self):
        assert lower_bound(6, 4) == 3
        assert lower_bound(0, 4) == 1
        assert lower_bound(5, 4) == 3

    def test_upper(self):
        assert upper_bound(Fraction(2), 6, 4) == 3
        assert upper_bound(Fraction(14, 5), 6, 4) == 5
        assert upper_bound(Fraction(3), 6, 4) is None
        assert upper_bound(Fraction(12, 5), 6, 4) == 4
        assert upper_bound(Fraction(8, 3), 6, 4) == 5


class TestJson:
    def test_coloring_roundtrip(self):
        c = [1, None, 3]
        assert coloring_from_json(coloring_to_json(c)) == c
        assert coloring_from_json('{"colors": [2, null]}') == [2, None]

    @pytest.mark.parametrize("bad", ['{"colors": [0]}', '{"colors": ["a"]}', '{"colors": 3}'])
    def test_coloring_invalid(self, bad):
        with pytest.raises(ValueError):
            coloring_from_json(bad)

    def test_lists_roundtrip(self):
        lists = [frozenset({1, 2}), frozenset({3})]
        assert lists_from_json(lists_to_json(lists)) == lists

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            lists_from_json({"lists": [[1], []]})
