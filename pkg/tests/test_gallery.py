from pdhyper.gallery import (
    build_good_pair_graph,
    euler_bound_check,
    good_pair_graph_from_hypergraph,
)
from pdhyper.generators import (
    GenSpec,
    gen_random_family,
    pairwise_intersecting_circles,
    star_fixture,
)
from pdhyper.geometry import (
    Disk,
    PseudoDiskFamily,
    build_intersection_hypergraph,
    elements_intersect,
)


class TestBuildGoodPairGraph:
    def test_star(self):
        fam = star_fixture()
        g = build_good_pair_graph(fam, fam)
        assert g.vertices == (0, 1, 2, 3, 4, 5)
        assert g.edge_pairs() == tuple((0, i) for i in range(1, 6))
        # witness of {P1, Pi} is Pi itself (its neighborhood is the pair)
        assert all(wid == pair[1] for pair, wid in g.edges)
        assert len(g.edges) <= 3 * 6 - 6

    def test_disjoint_pair_no_edges(self):
        fam = PseudoDiskFamily("disk", (Disk(0, 0, 0, 1), Disk(1, 5, 0, 1)))
        g = build_good_pair_graph(fam, fam)
        assert g.vertices == (0, 1)
        assert g.edges == ()

    def test_three_mutual_disks_no_edges(self):
        # every neighborhood meets all three, so no range hits exactly two
        elems = (Disk(0, 0, 0, 1), Disk(1, 0.8, 0, 1), Disk(2, 0.4, 0.7, 1))
        fam = PseudoDiskFamily("disk", elems)
        g = build_good_pair_graph(fam, fam)
        assert g.vertices == (0, 1, 2)
        assert g.edges == ()

    def test_witnesses_verify_exactly(self):
        fam = gen_random_family(GenSpec(n=30, region=10.0, seed=8))
        g = build_good_pair_graph(fam, fam)
        kset = set(g.vertices)
        for (a, b), wid in g.edges:
            s = fam.elements[wid]
            hit = {
                d.id
                for d in fam.elements
                if d.id in kset and elements_intersect(d, s, fam.kind, fam.template)
            }
            assert hit == {a, b}


class TestEulerBoundCheck:
    def test_star_passes(self):
        fam = star_fixture()
        g = build_good_pair_graph(fam, fam)
        report = euler_bound_check(g, samples=10, seed=1)
        assert report["edge_count"] == 5
        assert report["bound"] == 12
        assert report["violations"] == []
        assert report["samples_checked"] == 10

    def test_small_k_vacuous(self):
        fam = PseudoDiskFamily("disk", (Disk(0, 0, 0, 1), Disk(1, 5, 0, 1)))
        g = build_good_pair_graph(fam, fam)
        report = euler_bound_check(g, samples=5, seed=0)
        assert report["violations"] == []
        assert report["bound"] is None

    def test_boundary_semantics_violate_bound(self):
        # circle-boundary counterexample fed through the abstract adapter:
        # 190 pair edges on 20 vertices blows 3*20-6 = 54
        p, f = pairwise_intersecting_circles(20, seed=4)
        h = build_intersection_hypergraph(p, f)
        g = good_pair_graph_from_hypergraph(h)
        report = euler_bound_check(g, samples=0)
        assert report["edge_count"] == 190
        assert report["bound"] == 54
        assert len(report["violations"]) >= 1
        assert report["violations"][0]["edge_count"] == 190

    def test_induced_recomputation_monotone(self):
        # an edge survives restriction only if its witness avoids the rest
        fam = gen_random_family(GenSpec(n=40, region=11.0, seed=13))
        g = build_good_pair_graph(fam, fam)
        report = euler_bound_check(g, samples=30, seed=2)
        assert report["violations"] == []

    def test_many_random_instances_zero_violations(self):
        for seed in range(30):
            kind = "disk" if seed % 2 == 0 else "homothet"
            fam = gen_random_family(
                GenSpec(kind=kind, n=20 + seed, region=9.0, seed=seed)
            )
            g = build_good_pair_graph(fam, fam)
            report = euler_bound_check(g, samples=10, seed=seed)
            assert report["violations"] == []
