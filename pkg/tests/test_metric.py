import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdgirth.errors import AcyclicGraphError, DisconnectedGraphError, UnreachableDistanceError
from mdgirth.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from mdgirth.graph import from_edge_list
from mdgirth.metric import (
    LandmarkSet,
    girth_resolving_set,
    is_resolving,
    metric_dimension,
    representation,
    twin_classes,
    upper_bounds,
)
from mdgirth.structure import CycleInfo, girth_and_witness
from oracles import brute_metric_dimension, floyd_warshall, resolves


def test_landmark_set_rejects_duplicates():
    with pytest.raises(ValueError):
        LandmarkSet((1, 1))


class TestRepresentation:
    # C5 labelled v1..v5 as 0..4
    def test_cycle(self):
        dm = cycle_graph(5).distances
        assert representation(dm, 2, (0, 1)) == (2, 1)
        assert representation(dm, 3, (0, 1)) == (2, 2)

    def test_identity(self):
        dm = petersen_graph().distances
        for v in range(10):
            assert representation(dm, v, (v,)) == (0,)

    def test_unreachable(self):
        dm = from_edge_list(4, [(0, 1), (2, 3)]).distances
        with pytest.raises(UnreachableDistanceError):
            representation(dm, 0, (2,))


class TestIsResolving:
    def test_cycle_pair(self):
        assert is_resolving(cycle_graph(5), (0, 1))

    def test_complete_pairs_fail(self):
        k4 = complete_graph(4)
        assert not any(is_resolving(k4, (a, b)) for a in range(4) for b in range(a + 1, 4))

    def test_antipodal_c4(self):
        assert not is_resolving(cycle_graph(4), (0, 2))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            is_resolving(from_edge_list(4, [(0, 1), (2, 3)]), (0,))

    def test_full_and_leave_one_out(self, corpus_list):
        for g in corpus_list:
            assert is_resolving(g, range(g.n))
            for v in range(g.n):
                assert is_resolving(g, [x for x in range(g.n) if x != v])

    def test_superset_monotone(self, corpus):
        rng = random.Random(11)
        for g in corpus[6] + corpus[7]:
            w = list(metric_dimension(g).basis)
            extra = [v for v in range(g.n) if v not in w]
            rng.shuffle(extra)
            for k in range(len(extra) + 1):
                assert is_resolving(g, w + extra[:k])

    def test_agrees_with_reference(self, corpus):
        rng = random.Random(5)
        for g in corpus[5] + corpus[6]:
            d = floyd_warshall(g.n, g.edges())
            for _ in range(6):
                w = rng.sample(range(g.n), rng.randint(1, g.n))
                assert is_resolving(g, w) == resolves(d, w)


class TestMetricDimension:
    @pytest.mark.parametrize(
        "g, beta",
        [
            (cycle_graph(6), 2),
            (complete_graph(5), 4),
            (complete_bipartite(2, 3), 3),
            (path_graph(5), 1),
        ],
    )
    def test_paper_values(self, g, beta):
        assert metric_dimension(g).beta == beta

    def test_petersen_by_brute_force(self):
        p = petersen_graph()
        expected = brute_metric_dimension(p.n, p.edges(), max_k=3)
        assert expected == 3
        res = metric_dimension(p)
        assert res.beta == expected
        assert is_resolving(p, res.basis)

    def test_single_vertex(self):
        res = metric_dimension(from_edge_list(1, []))
        assert res.beta == 0 and res.basis.members == ()

    def test_lexicographic_witness(self):
        assert metric_dimension(cycle_graph(6)).basis.members == (0, 1)
        assert metric_dimension(complete_bipartite(2, 3)).basis.members == (0, 2, 3)

    def test_pruned_matches_unpruned_and_reference(self, corpus):
        for n in range(1, 7):
            for g in corpus[n]:
                a = metric_dimension(g)
                b = metric_dimension(g, prune=False)
                assert a == b
                assert a.beta == brute_metric_dimension(g.n, g.edges())

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            metric_dimension(from_edge_list(3, [(0, 1)]))


class TestTwins:
    def test_examples(self):
        assert twin_classes(complete_graph(4)) == [[0, 1, 2, 3]]
        assert twin_classes(complete_bipartite(2, 3)) == [[0, 1], [2, 3, 4]]
        assert twin_classes(path_graph(3)) == [[0, 2], [1]]

    def test_soundness(self, corpus):
        # every resolving set misses at most one vertex of each twin class
        for n in range(2, 7):
            for g in corpus[n]:
                classes = twin_classes(g)
                d = floyd_warshall(g.n, g.edges())
                for mask in range(1, 1 << g.n):
                    w = [v for v in range(g.n) if mask >> v & 1]
                    if resolves(d, w):
                        assert all(len(set(c) - set(w)) <= 1 for c in classes)


class TestGirthResolvingSet:
    def test_cycle(self):
        c5 = cycle_graph(5)
        w = girth_resolving_set(c5, CycleInfo(5, (0, 1, 2, 3, 4)))
        assert w.members == (0, 1)

    def test_complete(self):
        w = girth_resolving_set(complete_graph(4), CycleInfo(3, (0, 1, 2)))
        assert w.members == (0, 1, 3)

    def test_petersen(self):
        p = petersen_graph()
        w = girth_resolving_set(p)
        assert len(w) == 7 and is_resolving(p, w)

    def test_every_shortest_cycle_orientation(self):
        # any rotation or reflection of a shortest cycle works, not just the canonical witness
        p = petersen_graph()
        base = girth_and_witness(p).witness
        for shift in range(5):
            for seq in (base[shift:] + base[:shift], (base[shift:] + base[:shift])[::-1]):
                assert is_resolving(p, girth_resolving_set(p, CycleInfo(5, seq)))

    def test_acyclic(self):
        with pytest.raises(AcyclicGraphError):
            girth_resolving_set(path_graph(4))

    def test_corpus(self, corpus_list):
        for g in corpus_list:
            cyc = girth_and_witness(g)
            if cyc is None:
                continue
            w = girth_resolving_set(g, cyc)
            assert len(w) == g.n - cyc.girth + 2
            assert is_resolving(g, w)


class TestUpperBounds:
    def test_path(self):
        b = upper_bounds(path_graph(5))
        assert b.diam_bound == 1 and b.girth_bound is None
        assert metric_dimension(path_graph(5)).beta == 1

    def test_complete(self):
        b = upper_bounds(complete_graph(6))
        assert (b.diam_bound, b.girth_bound) == (5, 5)
        assert metric_dimension(complete_graph(6)).beta == 5

    def test_cycle(self):
        assert upper_bounds(cycle_graph(8)).girth_bound == 2
        assert metric_dimension(cycle_graph(8)).beta == 2

    def test_sandwich(self, corpus):
        for n in range(2, 8):
            for g in corpus[n]:
                beta = metric_dimension(g).beta
                b = upper_bounds(g)
                assert 1 <= beta <= b.diam_bound
                if b.girth_bound is not None:
                    assert beta <= b.girth_bound


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10_000))
def test_random_connected_graphs_sandwich(n, seed):
    rng = random.Random(seed)
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    edges += [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
    g = from_edge_list(n, edges)
    res = metric_dimension(g)
    assert is_resolving(g, res.basis)
    assert res.beta == brute_metric_dimension(n, g.edges())
    b = upper_bounds(g)
    assert res.beta <= b.diam_bound
    if b.girth_bound is not None:
        assert res.beta <= b.girth_bound
