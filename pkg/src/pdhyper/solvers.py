"""Weighted hitting-set solvers (exact branch-and-bound, greedy,
LP relaxation + randomized rounding) and the dominating-set pipeline
over the neighborhood hypergraph."""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .errors import InfeasibleError, InputError, ResourceLimitError
from .generators import rng_from
from .geometry import elements_intersect, neighborhood_hypergraph

LP_FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class FractionalSolution:
    x: tuple
    objective: float
    min_coverage: float


@dataclass(frozen=True)
class DomSetResult:
    chosen: frozenset
    total_weight: float
    certificate: tuple  # per canonical edge: id of a chosen hitter
    method: str
    diagnostics: dict = field(default_factory=dict)

    def to_json_dict(self):
        return {
            "method": self.method,
            "chosen": sorted(self.chosen),
            "total_weight": self.total_weight,
            "certificate": list(self.certificate),
            "diagnostics": {
                k: v for k, v in self.diagnostics.items() if v is not None
            },
        }


def verify_hitting_set(h, chosen):
    """True iff every edge contains a chosen element."""
    chosen = set(chosen)
    if chosen and (min(chosen) < 0 or max(chosen) >= h.n):
        raise InputError("chosen id out of range")
    return all(any(i in chosen for i in e) for e in h.edges)


def _certificate(h, chosen):
    cert = []
    for e in h.edges:
        hit = [i for i in e if i in chosen]
        if not hit:
            raise InfeasibleError("certificate requested for a non-hitting set")
        cert.append(hit[0])
    return tuple(cert)


def _result(h, chosen, method, diagnostics):
    chosen = frozenset(chosen)
    return DomSetResult(
        chosen=chosen,
        total_weight=float(sum(h.weights[i] for i in chosen)),
        certificate=_certificate(h, chosen),
        method=method,
        diagnostics=diagnostics,
    )


def _disjoint_edge_bound(edges, weights, excluded, covered):
    """Greedy lower bound: disjoint uncovered edges each force at least
    their cheapest still-allowed element."""
    used = set()
    bound = 0.0
    for idx, e in enumerate(edges):
        if covered[idx]:
            continue
        avail = [i for i in e if i not in excluded]
        if not avail:
            return math.inf
        if any(i in used for i in avail):
            continue
        bound += min(weights[i] for i in avail)
        used.update(avail)
    return bound


def exact_min_weight_hitting_set(h, node_limit=10_000_000, max_n=25):
    """Optimal-weight hitting set by branch and bound.

    Branches on an uncovered edge of minimum undecided size, trying its
    elements in increasing (weight, id) order; prunes with the disjoint-
    edge bound. Raises ResourceLimitError (carrying the incumbent) when
    node_limit is exhausted.
    """
    if h.n > max_n:
        raise InputError(f"exact solver capped at n <= {max_n}")
    edges = [set(e) for e in h.edges]
    weights = h.weights
    best = {"weight": math.inf, "chosen": None}
    nodes = {"count": 0}

    def recurse(chosen, excluded, cost, covered):
        nodes["count"] += 1
        if nodes["count"] > node_limit:
            incumbent = None
            if best["chosen"] is not None:
                incumbent = _result(
                    h, best["chosen"], "exact",
                    {"nodes": nodes["count"], "optimal": False},
                )
            raise ResourceLimitError("node limit exceeded", incumbent)
        if all(covered):
            if cost < best["weight"]:
                best["weight"] = cost
                best["chosen"] = set(chosen)
            return
        bound = _disjoint_edge_bound(edges, weights, excluded, covered)
        if cost + bound >= best["weight"]:
            return
        # uncovered edge with fewest undecided elements, canonical ties
        pick, pick_avail = None, None
        for idx, e in enumerate(edges):
            if covered[idx]:
                continue
            avail = [i for i in e if i not in excluded]
            if pick is None or len(avail) < len(pick_avail):
                pick, pick_avail = idx, avail
        if not pick_avail:
            return
        pick_avail.sort(key=lambda i: (weights[i], i))
        newly_excluded = []
        for el in pick_avail:
            chosen.add(el)
            new_cov = [
                c or (el in edges[idx]) for idx, c in enumerate(covered)
            ]
            recurse(chosen, excluded, cost + weights[el], new_cov)
            chosen.discard(el)
            excluded.add(el)
            newly_excluded.append(el)
        for el in newly_excluded:
            excluded.discard(el)

    recurse(set(), set(), 0.0, [False] * len(edges))
    if best["chosen"] is None:
        raise InfeasibleError("no hitting set exists")
    return _result(
        h, best["chosen"], "exact", {"nodes": nodes["count"], "optimal": True}
    )


def greedy_hitting_set(h):
    """Weighted greedy: repeatedly take the element minimizing
    weight / (unhit edges it would cover), ties by lower id."""
    edges = [set(e) for e in h.edges]
    covered = [False] * len(edges)
    chosen = set()
    iterations = 0
    while not all(covered):
        gain = {}
        for idx, e in enumerate(edges):
            if covered[idx]:
                continue
            for i in e:
                gain[i] = gain.get(i, 0) + 1
        if not gain:
            raise InfeasibleError("uncoverable edge")
        best = min(gain, key=lambda i: (h.weights[i] / gain[i], i))
        chosen.add(best)
        for idx, e in enumerate(edges):
            if best in e:
                covered[idx] = True
        iterations += 1
    m = max(len(edges), 1)
    return _result(
        h,
        chosen,
        "greedy",
        {"iterations": iterations, "approx_bound_factor": 1.0 + math.log(m)},
    )


def solve_lp(h, epsilon=0.05):
    """Fractional covering relaxation: min w.x s.t. every edge's x-mass
    is >= 1, 0 <= x <= 1. Solved with HiGHS, then rescaled so the
    returned solution is feasible outright."""
    if not (0 < epsilon <= 0.5):
        raise InputError("epsilon must be in (0, 0.5]")
    n, m = h.n, h.m
    if m == 0:
        return FractionalSolution(tuple(0.0 for _ in range(n)), 0.0, math.inf)
    a = np.zeros((m, n))
    for idx, e in enumerate(h.edges):
        for i in e:
            a[idx, i] = -1.0
    res = linprog(
        c=np.asarray(h.weights),
        A_ub=a,
        b_ub=-np.ones(m),
        bounds=(0.0, 1.0),
        method="highs",
    )
    if not res.success:
        raise InfeasibleError(f"LP solve failed: {res.message}")
    x = np.clip(res.x, 0.0, 1.0)
    coverage = np.array([sum(x[i] for i in e) for e in h.edges])
    if coverage.min() < 1.0 - LP_FEASIBILITY_TOL:
        raise InfeasibleError("LP solution violates feasibility tolerance")
    if coverage.min() < 1.0:
        x = np.minimum(x / coverage.min(), 1.0)
        coverage = np.array([sum(x[i] for i in e) for e in h.edges])
    return FractionalSolution(
        tuple(float(v) for v in x),
        float(np.dot(h.weights, x)),
        float(coverage.min()),
    )


def round_and_repair(h, frac, seed=0, alpha=None):
    """Independent rounding at probability min(1, alpha * x_i), then a
    deterministic repair pass so the output always hits every edge."""
    m = h.m
    if alpha is None:
        alpha = math.log(2 * m) if m > 0 else 0.0
    rng = rng_from(seed)
    u = rng.random(h.n)
    chosen = {
        i for i in range(h.n) if u[i] < min(1.0, alpha * frac.x[i])
    }
    pre_repair_weight = float(sum(h.weights[i] for i in chosen))
    repaired = 0
    for e in h.edges:
        if not any(i in chosen for i in e):
            chosen.add(min(e, key=lambda i: (h.weights[i], i)))
            repaired += 1
    return _result(
        h,
        chosen,
        "lp_round",
        {
            "seed": int(seed),
            "alpha": float(alpha),
            "lp_value": frac.objective,
            "pre_repair_weight": pre_repair_weight,
            "expected_pre_repair_bound": float(alpha) * frac.objective,
            "repaired_edges": repaired,
        },
    )


METHODS = ("exact", "greedy", "lp_round")


def verify_dominating_set(p, chosen, tol=0.0):
    """Every element is chosen or intersects a chosen element."""
    chosen = set(chosen)
    sel = [p.elements[i] for i in chosen]
    for d in p.elements:
        if d.id in chosen:
            continue
        if not any(
            elements_intersect(d, s, p.kind, p.template, tol) for s in sel
        ):
            return False
    return True


def domset_pipeline(p, method="exact", seed=0, epsilon=0.05, node_limit=10_000_000):
    """Reduce dominating set on the intersection graph to hitting set on
    the neighborhood hypergraph, solve, and verify both readings."""
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}")
    h = neighborhood_hypergraph(p)
    if method == "exact":
        res = exact_min_weight_hitting_set(h, node_limit=node_limit)
    elif method == "greedy":
        res = greedy_hitting_set(h)
    else:
        frac = solve_lp(h, epsilon)
        res = round_and_repair(h, frac, seed=seed)
    assert verify_hitting_set(h, res.chosen)
    assert verify_dominating_set(p, res.chosen)
    diag = dict(res.diagnostics)
    diag.setdefault("seed", int(seed))
    diag["n"] = h.n
    diag["edges"] = h.m
    return DomSetResult(res.chosen, res.total_weight, res.certificate, method, diag)
