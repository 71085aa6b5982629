import pytest

from mdgirth.errors import DisconnectedGraphError, NotTwoConnectedError
from mdgirth.generators import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    theta_graph,
)
from mdgirth.graph import from_edge_list
from mdgirth.structure import (
    CycleInfo,
    EarDecomposition,
    cut_vertices,
    ear_decomposition,
    girth_and_witness,
    is_two_connected,
    validate_ear_decomposition,
)
from oracles import all_cycles, brute_cut_vertices, brute_girth, brute_two_connected


def assert_valid_witness(g, info):
    w = info.witness
    assert len(w) == info.girth == len(set(w))
    assert all(g.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))


class TestGirth:
    @pytest.mark.parametrize(
        "g, girth",
        [(complete_graph(4), 3), (cycle_graph(7), 7), (petersen_graph(), 5), (theta_graph(2, 3, 3), 5)],
    )
    def test_values(self, g, girth):
        info = girth_and_witness(g)
        assert info.girth == girth
        assert_valid_witness(g, info)

    def test_petersen_brute_force(self):
        p = petersen_graph()
        assert min(len(c) for c in all_cycles(p.n, p.edges(), max_len=5)) == 5

    def test_forest(self):
        assert girth_and_witness(path_graph(6)) is None
        assert girth_and_witness(from_edge_list(4, [(0, 1), (2, 3)])) is None

    def test_tie_breaking(self):
        # smallest root on a shortest cycle, then the least sequence
        assert girth_and_witness(complete_graph(4)).witness == (0, 1, 2)
        assert girth_and_witness(cycle_graph(6)).witness == (0, 1, 2, 3, 4, 5)
        g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (0, 3)])
        assert girth_and_witness(g).witness == (0, 1, 2, 3)

    def test_disconnected_graph_with_cycle(self):
        g = from_edge_list(6, [(0, 1), (3, 4), (4, 5), (3, 5)])
        assert girth_and_witness(g).witness == (3, 4, 5)

    def test_corpus(self, corpus_list):
        for g in corpus_list:
            info = girth_and_witness(g)
            expected = brute_girth(g.n, g.edges())
            assert (info.girth if info else None) == expected
            if info:
                assert_valid_witness(g, info)


class TestCutVertices:
    def test_examples(self):
        assert cut_vertices(path_graph(3)) == {1}
        assert cut_vertices(bowtie_graph()) == {0}
        assert cut_vertices(cycle_graph(5)) == set()

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            cut_vertices(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_corpus(self, corpus_list):
        for g in corpus_list:
            assert cut_vertices(g) == brute_cut_vertices(g.n, g.edges())


class TestTwoConnected:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (cycle_graph(4), True),
            (bowtie_graph(), False),
            (complete_graph(2), False),
            (complete_graph(1), False),
            (complete_graph(5), True),
        ],
    )
    def test_examples(self, g, expected):
        assert is_two_connected(g) is expected

    def test_corpus(self, corpus_list):
        for g in corpus_list:
            assert is_two_connected(g) == brute_two_connected(g.n, g.edges())


class TestEarDecomposition:
    def test_cycle_has_no_ears(self):
        d = ear_decomposition(cycle_graph(6), girth_and_witness(cycle_graph(6)))
        assert d.ears == ()
        assert validate_ear_decomposition(cycle_graph(6), d)

    def test_k4(self):
        k4 = complete_graph(4)
        d = ear_decomposition(k4, (0, 1, 2))
        assert d.ears == ((0, 3, 1), (2, 3))
        assert validate_ear_decomposition(k4, d)

    def test_theta_one_ear(self):
        t = theta_graph(2, 3, 4)
        d = ear_decomposition(t, girth_and_witness(t))
        assert len(d.ears) == 1
        assert validate_ear_decomposition(t, d)

    def test_petersen(self):
        p = petersen_graph()
        d = ear_decomposition(p, girth_and_witness(p))
        assert validate_ear_decomposition(p, d)
        assert d.edge_total() == p.edge_count
        # cyclomatic number: m - n + 1 = 6 = 1 cycle + 5 ears
        assert len(d.ears) == 5

    def test_not_two_connected(self):
        with pytest.raises(NotTwoConnectedError):
            ear_decomposition(bowtie_graph(), (0, 1, 2))
        pendant = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        with pytest.raises(NotTwoConnectedError):
            ear_decomposition(pendant, (0, 1, 2))

    def test_bad_initial_cycle(self):
        with pytest.raises(ValueError):
            ear_decomposition(cycle_graph(5), (0, 1, 3))

    def test_validator_rejects(self):
        k4 = complete_graph(4)
        # internal vertex 2 already on the initial cycle
        assert not validate_ear_decomposition(k4, EarDecomposition((0, 1, 2), ((0, 2, 3), (1, 3))))
        # missing edge 2-3
        missing = validate_ear_decomposition(k4, EarDecomposition((0, 1, 2), ((0, 3, 1),)))
        assert not missing and "edges" in missing.reason
        assert not validate_ear_decomposition(k4, EarDecomposition((0, 1), ()))
        assert not validate_ear_decomposition(k4, EarDecomposition((0, 1, 2), ((0, 3, 1), (2, 3), (2, 3))))
        assert not validate_ear_decomposition(k4, EarDecomposition((0, 1, 2), ((0, 3, 1), (2, 5))))

    def test_whitney_both_directions(self, corpus_list):
        for g in corpus_list:
            info = girth_and_witness(g)
            two = brute_two_connected(g.n, g.edges())
            if info is None:
                assert not two
                continue
            try:
                d = ear_decomposition(g, info)
            except NotTwoConnectedError:
                assert not two
                continue
            assert two
            assert d.initial_cycle == info.witness
            assert validate_ear_decomposition(g, d)
            assert d.edge_total() == g.edge_count

    def test_every_cycle_is_an_initial_cycle(self, corpus):
        for n in range(3, 7):
            for g in corpus[n]:
                if not is_two_connected(g):
                    continue
                for cyc in all_cycles(g.n, g.edges()):
                    d = ear_decomposition(g, CycleInfo(len(cyc), cyc))
                    assert validate_ear_decomposition(g, d), (g, cyc)
