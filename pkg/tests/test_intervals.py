import itertools
import random

import pytest

from boxicity.errors import CapacityError, NotIntervalError
from boxicity.generators import (
    complete_graph,
    cycle_graph,
    empty_graph,
    mycielski,
    path_graph,
)
from boxicity.graphs import Graph, complement, disjoint_union, induced_subgraph
from boxicity.intervals import (
    chordal_at_free_oracle,
    interval_representation,
    is_cointerval,
    is_interval,
    maximal_cliques,
)


def reconstruct(rep, n):
    """Intersection graph of an interval representation (test oracle)."""
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if max(rep.intervals[u][0], rep.intervals[v][0])
        <= min(rep.intervals[u][1], rep.intervals[v][1])
    ]
    return Graph.from_edges(n, edges)


class TestMaximalCliques:
    def test_complete(self):
        assert maximal_cliques(complete_graph(4)) == [(0, 1, 2, 3)]

    def test_four_cycle_gives_edges(self):
        assert maximal_cliques(cycle_graph(4)) == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_path(self):
        assert maximal_cliques(path_graph(4)) == [(0, 1), (1, 2), (2, 3)]

    def test_cap(self):
        with pytest.raises(CapacityError, match="MAX_CLIQUES"):
            maximal_cliques(cycle_graph(6), cap=2)


class TestIsInterval:
    def test_path_is_interval(self):
        result = is_interval(path_graph(4))
        assert result.interval and result.verdict == "interval"
        assert result.clique_order == ((0, 1), (1, 2), (2, 3))

    def test_four_cycle_is_not(self):
        result = is_interval(cycle_graph(4))
        assert not result.interval and result.verdict == "not-interval"
        assert result.reason

    def test_mycielski_of_path_is_not(self):
        myc, _ = mycielski(path_graph(4), 2)
        assert not is_interval(myc).interval

    def test_witness_order_is_consecutive(self, graphs_by_n):
        for g in graphs_by_n[5]:
            result = is_interval(g)
            if not result.interval:
                continue
            seen_done = set()
            prev = set()
            for clique in result.clique_order:
                now = set(clique)
                assert not (now & seen_done)
                seen_done |= prev - now
                prev = now


class TestIntervalRepresentation:
    def test_complete_shares_a_point(self):
        rep = interval_representation(complete_graph(5))
        assert rep.intervals == ((0, 0),) * 5

    def test_edgeless_spreads_out(self):
        rep = interval_representation(empty_graph(4))
        assert rep.intervals == ((0, 0), (2, 2), (4, 4), (6, 6))

    def test_path_matches_clique_indices(self):
        rep = interval_representation(path_graph(4))
        assert rep.intervals == ((0, 0), (0, 1), (1, 2), (2, 2))

    def test_reconstruction_exhaustive(self, graphs_by_n):
        for n in range(1, 8):
            for g in graphs_by_n[n]:
                if not is_interval(g).interval:
                    continue
                rep = interval_representation(g)
                assert reconstruct(rep, n) == g
                cliques = maximal_cliques(g)
                for lo, hi in rep.intervals:
                    assert 0 <= lo <= hi <= 2 * len(cliques)

    def test_rejects_non_interval(self):
        with pytest.raises(NotIntervalError):
            interval_representation(cycle_graph(4))

    def test_serialization(self):
        text = interval_representation(path_graph(3)).to_text()
        assert text == "0 0 0\n1 0 1\n2 1 1\n"


class TestHereditary:
    def test_induced_subgraphs_stay_interval(self, graphs_by_n):
        rng = random.Random(23)
        interval_graphs = [g for g in graphs_by_n[6] if is_interval(g).interval]
        for g in interval_graphs[::3]:
            for _ in range(4):
                s = rng.sample(range(6), rng.randint(1, 5))
                assert is_interval(induced_subgraph(g, s)).interval


class TestCointerval:
    def test_edgeless_is_cointerval(self):
        assert is_cointerval(empty_graph(5))

    def test_two_disjoint_edges_are_not(self):
        # Complement of the two disjoint edges is the 4-cycle, not interval.
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert complement(g) == Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        assert not is_cointerval(g)

    def test_isolated_vertices_do_not_matter(self, graphs_by_n):
        for g in graphs_by_n[4]:
            padded = disjoint_union(g, empty_graph(2))
            assert is_cointerval(padded) == is_cointerval(g)


class TestOracle:
    def test_paths_pass(self):
        for n in (1, 2, 5, 8):
            assert chordal_at_free_oracle(path_graph(n))

    def test_four_cycle_fails_chordality(self):
        assert not chordal_at_free_oracle(cycle_graph(4))

    def test_asteroidal_triple_detected(self):
        # The net (a triangle with one pendant vertex per corner) is chordal,
        # but its three leaves form an asteroidal triple.
        net = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
        )
        assert not chordal_at_free_oracle(net)
        assert not is_interval(net).interval

    def test_matches_recognizer_small(self, graphs_by_n):
        for n in range(1, 6):
            for g in graphs_by_n[n]:
                assert chordal_at_free_oracle(g) == is_interval(g).interval
