"""Executable illustrations of the planarity argument: the graph on a
well-behaved subset K whose edges are ranges meeting exactly two K
members, and the Euler edge bound |E| <= 3|K| - 6 it must satisfy."""

from dataclasses import dataclass

from .geometry import elements_intersect, find_private_point
from .generators import rng_from


@dataclass(frozen=True)
class GoodPairGraph:
    vertices: tuple  # ids of the well-behaved subset K
    edges: tuple  # ((a, b), witness_range_id), a < b
    private_points: dict  # id -> (x, y)
    range_traces: tuple  # (range_id, tuple of K ids hit) per range

    def edge_pairs(self):
        return tuple(pair for pair, _ in self.edges)


def build_good_pair_graph(p, f, tol=0.0):
    """K = elements of P with a verified private point against P; edges
    are pairs of K witnessed by a range of F hitting exactly that pair
    inside K (elements outside K may also be hit)."""
    private = {}
    for d in p.elements:
        others = [o for o in p.elements if o.id != d.id]
        pt = find_private_point(d, others, p.kind, p.template, tol)
        if pt is not None:
            private[d.id] = pt
    k = sorted(private)
    kset = set(k)
    traces = []
    for s in f.elements:
        hit = tuple(
            d.id
            for d in p.elements
            if d.id in kset and elements_intersect(d, s, p.kind, p.template, tol)
        )
        traces.append((s.id, hit))
    edges = {}
    for rid, hit in traces:
        if len(hit) == 2 and hit[0] != hit[1]:
            pair = (min(hit), max(hit))
            if pair not in edges or rid < edges[pair]:
                edges[pair] = rid
    return GoodPairGraph(
        vertices=tuple(k),
        edges=tuple(sorted((pair, edges[pair]) for pair in edges)),
        private_points=private,
        range_traces=tuple(traces),
    )


def good_pair_graph_from_hypergraph(h):
    """Abstract adapter: treat every ground element as privately
    witnessed and every edge as a range trace. Used to demonstrate how
    non-pseudo-disk inputs (e.g. boundary-only semantics) break the
    Euler bound."""
    traces = []
    for idx, e in enumerate(h.edges):
        wid = h.witnesses[idx] if h.witnesses is not None else idx
        traces.append((wid, tuple(e)))
    edges = {}
    for rid, hit in traces:
        if len(hit) == 2:
            pair = (hit[0], hit[1])
            if pair not in edges or rid < edges[pair]:
                edges[pair] = rid
    return GoodPairGraph(
        vertices=tuple(range(h.n)),
        edges=tuple(sorted((pair, edges[pair]) for pair in edges)),
        private_points={i: None for i in range(h.n)},
        range_traces=tuple(traces),
    )


def _induced_edges(traces, sub):
    """Recompute good pairs inside a vertex subset: a range trace counts
    only if exactly two of its K members survive the restriction."""
    sub = set(sub)
    edges = {}
    for rid, hit in traces:
        t = [i for i in hit if i in sub]
        if len(t) == 2:
            pair = (t[0], t[1])
            if pair not in edges or rid < edges[pair]:
                edges[pair] = rid
    return edges


def euler_bound_check(g, samples=20, seed=0):
    """Check |E| <= 3|K| - 6 (vacuous for |K| < 3) on the graph itself
    and on random induced subgraphs. Violations are reported, not
    raised: they falsify the planarity consequence and point at an
    implementation bug or a non-pseudo-disk input."""
    violations = []

    def check(vertices, edges, tag):
        kk = len(vertices)
        if kk < 3:
            return
        bound = 3 * kk - 6
        if len(edges) > bound:
            violations.append(
                {
                    "subset": sorted(vertices),
                    "edge_count": len(edges),
                    "bound": bound,
                    "witnesses": sorted(edges.values()),
                    "sample": tag,
                }
            )

    full_edges = {pair: rid for pair, rid in g.edges}
    check(g.vertices, full_edges, "full")
    rng = rng_from(seed)
    kk = len(g.vertices)
    checked = 0
    for s in range(samples):
        if kk < 3:
            break
        size = int(rng.integers(3, kk + 1))
        sub = sorted(rng.choice(g.vertices, size=size, replace=False).tolist())
        check(sub, _induced_edges(g.range_traces, sub), f"induced:{s}")
        checked += 1
    return {
        "k_size": kk,
        "edge_count": len(g.edges),
        "bound": 3 * kk - 6 if kk >= 3 else None,
        "violations": violations,
        "samples_checked": checked,
    }
