from fractions import Fraction
from itertools import combinations

import pytest

from boxicity.errors import CapacityError, SelfCheckError
from boxicity.generators import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    focalize,
    mycielski,
    path_graph,
    star_graph,
)
from boxicity.graphs import complement, is_clique
from boxicity.engine import exact_boxicity
from boxicity.bounds import (
    BoundsReport,
    chromatic_boxicity_check,
    chromatic_number,
    compute_bounds_report,
    edge_clique_cover,
    multipartite_mycielski_bounds,
    mycielski_kn_boxicity,
    mycielski_lower_bound,
    mycielski_upper_bound,
    verify_clique_cover,
)


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield [first] + rest


class TestEdgeCliqueCover:
    def test_complete(self):
        theta, cover = edge_clique_cover(complete_graph(6))
        assert theta == 1 and cover.cliques == ((0, 1, 2, 3, 4, 5),)

    def test_triangle_free_needs_all_edges(self):
        theta, _ = edge_clique_cover(path_graph(4))
        assert theta == 3

    def test_edgeless_is_zero(self):
        theta, cover = edge_clique_cover(empty_graph(4))
        assert theta == 0 and cover.cliques == ()

    def test_complement_of_multipartite_identity(self):
        # The complement splits into one clique per part, so the cover number
        # is the number of parts of size at least 2.
        for n in range(2, 7):
            for parts in partitions(n):
                g = complete_multipartite(parts)
                theta, cover = edge_clique_cover(complement(g))
                singles = sum(1 for p in parts if p == 1)
                assert theta == len(parts) - singles
                assert verify_clique_cover(complement(g), cover).ok

    def test_covers_verify(self, graphs_by_n):
        for g in graphs_by_n[5]:
            _, cover = edge_clique_cover(g)
            assert verify_clique_cover(g, cover).ok
            for clique in cover.cliques:
                assert is_clique(g, clique)

    def test_exact_on_corpus(self, graphs_by_n):
        # Independent oracle: try every family of up to theta-1 maximal
        # cliques and confirm none covers all edges.
        from boxicity.intervals import maximal_cliques

        for g in graphs_by_n[5][::3]:
            theta, _ = edge_clique_cover(g)
            if theta <= 1:
                continue
            edges = set(g.edges())
            cliques = maximal_cliques(g)
            clique_edges = [
                {tuple(sorted(p)) for p in combinations(c, 2)} for c in cliques
            ]
            for k in range(1, theta):
                for combo in combinations(clique_edges, k):
                    assert set().union(*combo) != edges

    def test_capacity(self):
        with pytest.raises(CapacityError):
            edge_clique_cover(complete_graph(10), max_edges=40)


class TestChromaticNumber:
    def test_complete(self):
        assert chromatic_number(complete_graph(6)) == 6

    def test_odd_cycle(self):
        assert chromatic_number(cycle_graph(5)) == 3

    def test_bipartite(self):
        assert chromatic_number(complete_multipartite([3, 3])) == 2

    def test_edgeless(self):
        assert chromatic_number(empty_graph(5)) == 1

    def test_exhaustive_oracle_agreement(self, graphs_by_n):
        # Independent check: no proper coloring with chi-1 colors exists, and
        # one with chi colors does.
        import itertools

        def proper_exists(g, k):
            return any(
                all(c[u] != c[v] for u, v in g.edges())
                for c in itertools.product(range(k), repeat=g.n)
            )

        for g in graphs_by_n[4]:
            chi = chromatic_number(g)
            assert proper_exists(g, chi)
            if chi > 1:
                assert not proper_exists(g, chi - 1)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            chromatic_number(empty_graph(17))


class TestMycielskiChromaticStep:
    def test_small_connected(self, connected_by_n):
        for n in range(1, 5):
            for g in connected_by_n[n]:
                myc, _ = mycielski(g, 2)
                assert chromatic_number(myc) == chromatic_number(g) + 1


class TestMycielskiCompleteFormula:
    def test_table(self):
        assert [mycielski_kn_boxicity(n) for n in range(1, 7)] == [1, 2, 2, 3, 3, 4]

    def test_degenerate_single_vertex(self):
        myc, _ = mycielski(complete_graph(1), 2)
        assert exact_boxicity(myc).value == 1 == mycielski_kn_boxicity(1)

    def test_matches_engine(self):
        for n in (2, 3):
            myc, _ = mycielski(complete_graph(n), 2)
            assert exact_boxicity(myc).value == mycielski_kn_boxicity(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            mycielski_kn_boxicity(0)


class TestMycielskiLowerBound:
    def test_no_focal_vertices(self):
        assert mycielski_lower_bound(cycle_graph(4)) == 2

    def test_two_focalizations(self):
        assert mycielski_lower_bound(focalize(cycle_graph(4), 2)) == 3

    def test_star(self):
        assert mycielski_lower_bound(star_graph(3)) == 2

    def test_single_vertex(self):
        assert mycielski_lower_bound(complete_graph(1)) == 1

    def test_holds_for_three_copies(self):
        # The lower bound is independent of the copy count; check it against
        # exact values of three-copy Mycielski graphs of complete graphs.
        for n, cap in [(1, 24), (2, 24), (3, 27)]:
            myc, _ = mycielski(complete_graph(n), 3)
            lb = mycielski_lower_bound(complete_graph(n), 3)
            assert lb <= exact_boxicity(myc, max_complement_edges=cap).value

    def test_rejects_single_copy(self):
        with pytest.raises(ValueError):
            mycielski_lower_bound(cycle_graph(4), 1)


class TestMycielskiUpperBound:
    def test_four_cycle(self):
        assert mycielski_upper_bound(cycle_graph(4)) == 2

    def test_star(self):
        assert mycielski_upper_bound(star_graph(3)) == 2

    def test_complete_four(self):
        assert mycielski_upper_bound(complete_graph(4)) == 3

    def test_sandwich_where_computable(self, graphs_by_n):
        for n in range(1, 5):
            for g in graphs_by_n[n]:
                myc, _ = mycielski(g, 2)
                if complement(myc).num_edges() > 24:
                    continue
                value = exact_boxicity(myc).value
                assert mycielski_lower_bound(g) <= value <= mycielski_upper_bound(g)


class TestMultipartiteBounds:
    def test_balanced_pairs(self):
        b = multipartite_mycielski_bounds([2, 2])
        assert (b.lower, b.upper, b.exact) == (2, 2, 2)

    def test_one_singleton(self):
        b = multipartite_mycielski_bounds([2, 2, 1])
        assert (b.lower, b.upper, b.exact) == (3, 3, 3)

    def test_two_singletons_leave_a_gap(self):
        b = multipartite_mycielski_bounds([1, 1, 2])
        assert (b.lower, b.upper, b.exact) == (2, 3, None)

    def test_exact_values_match_engine_small(self):
        for parts in ([1, 1], [2, 1], [2, 2], [1, 1, 1]):
            b = multipartite_mycielski_bounds(parts)
            if b.exact is None:
                continue
            myc, _ = mycielski(complete_multipartite(parts), 2)
            if complement(myc).num_edges() <= 24:
                assert exact_boxicity(myc).value == b.exact

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            multipartite_mycielski_bounds([])
        with pytest.raises(ValueError):
            multipartite_mycielski_bounds([2, 0])


class TestChromaticBoxicity:
    def test_tight_octahedron(self):
        check = chromatic_boxicity_check(complete_multipartite([2, 2, 2]))
        assert check.ok
        assert check.s == 0 and check.required_chi == 3 and check.chi == 3

    def test_complete(self):
        check = chromatic_boxicity_check(complete_graph(4))
        assert check.ok
        assert check.s == 2 and check.required_chi == Fraction(4, 6)

    def test_small_corpus(self, graphs_by_n):
        for n in range(1, 5):
            for g in graphs_by_n[n]:
                assert chromatic_boxicity_check(g).ok


class TestBoundsReport:
    def test_example_row(self):
        report = compute_bounds_report(complete_multipartite([1, 1, 2]))
        assert max(v for v, _ in report.lower) == 2
        assert min(v for v, _ in report.upper) == 3
        tags = {tag for _, tag in report.lower} | {tag for _, tag in report.upper}
        assert tags == {"cor3.6", "lemma3.3", "thm4.2", "roberts-floor-n/2", "thm1.1"}

    def test_exact_inside_bounds(self, graphs_by_n):
        for g in graphs_by_n[3]:
            report = compute_bounds_report(g, include_exact=True)
            assert report.exact is not None
            lo = max(v for v, _ in report.lower)
            hi = min(v for v, _ in report.upper)
            assert lo <= report.exact <= hi

    def test_crossed_bounds_raise(self):
        with pytest.raises(SelfCheckError):
            BoundsReport("stub", ((3, "a"),), ((2, "b"),), None)

    def test_higher_copy_counts(self):
        report = compute_bounds_report(cycle_graph(4), r=3)
        assert all(tag != "thm4.2" for _, tag in report.upper)
        assert max(v for v, _ in report.lower) <= min(v for v, _ in report.upper)
