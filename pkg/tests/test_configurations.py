import json

import pytest

from kforest.configurations import (
    Configuration,
    applicable,
    check_configuration,
    deletion_set,
    find_configuration,
)
from kforest.generators import complete, cycle, path, random_tree, star, subdivision
from kforest.graph import Graph

from corpus import atlas_connected, family_corpus


def c4_graph():
    # v=0 with 2-neighbours 1,2,3 (outer 5,6,7) and fourth neighbour 4
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7),
             (4, 5), (4, 6), (4, 7), (5, 6), (6, 7), (5, 7)]
    return Graph.from_edges(8, edges)


def c5_graph():
    # v=0 with 2-neighbours 1..5 whose other neighbours 6..10 form K5
    edges = [(0, i) for i in range(1, 6)] + [(i, i + 5) for i in range(1, 6)]
    edges += [(a, b) for a in range(6, 11) for b in range(a + 1, 11)]
    return Graph.from_edges(11, edges)


class TestApplicable:
    @pytest.mark.parametrize("kind,p,k,expected", [
        ("C3", 1, 4, True), ("C4", 1, 4, False), ("C2", 3, 4, True),
        ("C1", 3, 2, True), ("C2", 3, 3, False), ("C3", 3, 4, False),
        ("C3", 3, 5, True), ("C3", 2, 4, True), ("C3", 1, 3, False),
        ("C4", 3, 3, True), ("C5", 3, 3, False), ("C5", 3, 4, True), ("C5", 2, 9, False),
    ])
    def test_table(self, kind, p, k, expected):
        assert applicable(kind, p, k) is expected

    def test_unknown(self):
        with pytest.raises(ValueError):
            applicable("C9", 1, 4)


class TestFind:
    def test_single_edge(self):
        cfg = find_configuration(path(2), 1, 4)
        assert cfg.kind == "C1" and cfg["v"] == 0 and cfg["u"] == 1

    def test_c5_cycle(self):
        cfg = find_configuration(cycle(5), 1, 4)
        assert cfg.kind == "C3" and cfg["v"] == 0
        assert {cfg["u"], cfg["w"]} == {1, 4}

    def test_k4_none(self):
        assert find_configuration(complete(4), 3, 4) is None

    def test_isolated_vertex(self):
        cfg = find_configuration(Graph.empty(1), 1, 4)
        assert cfg.kind == "C1" and cfg["u"] is None

    def test_c2(self):
        # 2-vertex 0 between 2-vertex 1 and a 3-vertex
        cfg = find_configuration(cycle(6), 2, 4)
        assert cfg.kind == "C2" and cfg["v"] == 0 and cfg["u"] == 1

    def test_c4_detected(self):
        g = c4_graph()
        assert find_configuration(g, 2, 4) is None
        cfg = find_configuration(g, 3, 4)
        assert cfg.kind == "C4"
        assert cfg.bindings == {"v": 0, "x": 1, "y": 2, "z": 3, "w": 4,
                                "x_": 5, "y_": 6, "z_": 7}
        assert deletion_set(cfg) == (0, 1, 2, 3)

    def test_c5_detected(self):
        g = c5_graph()
        cfg = find_configuration(g, 3, 4)
        assert cfg.kind == "C5" and cfg["x5"] == 5 and cfg["x5_"] == 10
        assert deletion_set(cfg) == (0, 1, 2, 3, 4)
        assert find_configuration(g, 3, 3) is None  # C5 needs k >= 4

    def test_degenerate_c4_skipped(self):
        # x=1 and y=2 adjacent: x' = y lies in the deletion set
        edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 5), (4, 5), (4, 6), (5, 6),
                 (4, 7), (5, 7), (6, 7)]
        g = Graph.from_edges(8, edges)
        assert find_configuration(g, 3, 3) is None
        assert find_configuration(g, 3, 4).kind == "C2"

    def test_deletion_sizes(self):
        assert len(deletion_set(find_configuration(path(2), 1, 4))) == 1
        assert len(deletion_set(find_configuration(c4_graph(), 3, 4))) == 4
        assert len(deletion_set(find_configuration(c5_graph(), 3, 4))) == 5

    def test_trees_always_c1(self):
        for seed in range(20):
            g = random_tree(15, seed)
            for p in (1, 2, 3):
                assert find_configuration(g, p, 4).kind == "C1"

    def test_bad_p(self):
        with pytest.raises(ValueError):
            find_configuration(cycle(5), 4, 4)

    def test_sound_and_deterministic(self):
        for g in atlas_connected(7)[::2] + family_corpus() + (c4_graph(), c5_graph()):
            for p in (1, 2, 3):
                for k in (3, 4, 5):
                    cfg = find_configuration(g, p, k)
                    if cfg is not None:
                        assert applicable(cfg.kind, p, k)
                        assert check_configuration(g, cfg, p)
                        assert cfg == find_configuration(g, p, k)

    def test_subdivided_k4_clean_for_p1(self):
        assert find_configuration(subdivision(complete(4), 1), 1, 4) is None

    def test_json_roundtrip(self):
        for g in (path(2), cycle(5), c4_graph(), c5_graph(), star(3)):
            cfg = find_configuration(g, 3, 5)
            data = json.loads(json.dumps(cfg.to_dict()))
            assert Configuration.from_dict(data) == cfg
