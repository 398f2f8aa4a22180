import pytest

from pdhyper.errors import InputError
from pdhyper.generators import (
    GenSpec,
    fig4_abstract_pattern,
    fixture_by_name,
    gen_random_family,
    pairwise_intersecting_circles,
    star_fixture,
)
from pdhyper.geometry import (
    build_intersection_hypergraph,
    circle_crossing_count,
    disks_intersect,
    neighborhood_hypergraph,
)
from pdhyper.hypergraph import count_edges_at_most, find_shattered_subset
from pdhyper.solvers import exact_min_weight_hitting_set


class TestGenRandomFamily:
    def test_single_unit_disk(self):
        fam = gen_random_family(GenSpec(n=1, region=10, rmin=1, rmax=1, seed=7))
        assert len(fam) == 1
        d = fam.elements[0]
        assert d.r == 1.0 and d.weight == 1.0
        assert 0 <= d.cx <= 10 and 0 <= d.cy <= 10

    def test_determinism(self):
        spec = GenSpec(n=50, region=5, seed=7, weights="exponential")
        assert gen_random_family(spec) == gen_random_family(spec)

    def test_dense_square_all_intersect(self):
        fam = gen_random_family(GenSpec(n=100, region=1, rmin=1, rmax=1, seed=1))
        es = fam.elements
        assert all(
            disks_intersect(es[i], es[j])
            for i in range(100)
            for j in range(i + 1, 100)
        )

    def test_invalid_spec(self):
        with pytest.raises(InputError):
            GenSpec(n=0)
        with pytest.raises(InputError):
            GenSpec(rmin=2, rmax=1)
        with pytest.raises(InputError):
            GenSpec(weights="zipf")

    def test_weight_schemes(self):
        u = gen_random_family(GenSpec(n=20, seed=1, weights="uniform01"))
        assert all(0 <= e.weight <= 1 for e in u.elements)
        e = gen_random_family(GenSpec(n=20, seed=1, weights="exponential"))
        assert all(w.weight >= 0 for w in e.elements)


class TestStarFixture:
    def test_intersection_graph_is_star(self):
        fam = star_fixture()
        es = fam.elements
        for i in range(1, 6):
            assert disks_intersect(es[0], es[i])
            for j in range(i + 1, 6):
                assert not disks_intersect(es[i], es[j])

    def test_caption_edges(self):
        h = neighborhood_hypergraph(star_fixture())
        assert set(h.edges) == {(0, 1, 2, 3, 4, 5)} | {(0, i) for i in range(1, 6)}

    def test_min_dominating_weight_one(self):
        h = neighborhood_hypergraph(star_fixture())
        res = exact_min_weight_hitting_set(h)
        assert res.total_weight == 1.0
        assert res.chosen == {0}


class TestCounterexample:
    def test_n2(self):
        p, f = pairwise_intersecting_circles(2, seed=0)
        assert len(f) == 1
        h = build_intersection_hypergraph(p, f)
        assert h.edges == ((0, 1),)

    @pytest.mark.parametrize("n,expected", [(5, 10), (20, 190)])
    def test_quadratic_counts(self, n, expected):
        p, f = pairwise_intersecting_circles(n, seed=3)
        h = build_intersection_hypergraph(p, f)
        assert len(h.edges) == expected
        assert all(len(e) == 2 for e in h.edges)

    def test_construction_properties(self):
        p, f = pairwise_intersecting_circles(8, seed=5)
        es = p.elements
        for i in range(8):
            for j in range(i + 1, 8):
                assert circle_crossing_count(es[i], es[j]) == 2
        for s in f.elements:
            hit = [d.id for d in es if circle_crossing_count(d, s) >= 1]
            assert len(hit) == 2

    def test_determinism(self):
        a = pairwise_intersecting_circles(6, seed=9)
        b = pairwise_intersecting_circles(6, seed=9)
        assert a == b

    def test_n_below_two_rejected(self):
        with pytest.raises(InputError):
            pairwise_intersecting_circles(1)


class TestFig4Pattern:
    def test_shattered_four(self):
        h = fig4_abstract_pattern()
        assert find_shattered_subset(h, 4) == {0, 1, 2, 3}

    def test_no_size_five(self):
        assert find_shattered_subset(fig4_abstract_pattern(), 5) is None

    def test_edge_counts(self):
        h = fig4_abstract_pattern()
        assert len(h.edges) == 15
        assert h.empty_trace
        assert count_edges_at_most(h, 2) == 10


class TestFixtureByName:
    def test_star(self):
        kind, fam, f = fixture_by_name("star")
        assert kind == "family" and len(fam) == 6 and f is None

    def test_counterexample_sized(self):
        kind, p, f = fixture_by_name("counterexample:4", seed=1)
        assert kind == "family" and len(p) == 4 and len(f) == 6

    def test_unknown(self):
        with pytest.raises(InputError):
            fixture_by_name("moebius")
