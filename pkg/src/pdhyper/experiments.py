"""Empirical harness: growth of small-edge counts, the quadratic
counterexample, shattering scans, k-good pair linearity, and solver
ratio experiments. Emits plot-ready CSV plus a JSON manifest.

Asymptotic statements are checked against pre-registered finite
windows (constants below) rather than fitted after the fact.
"""

import csv
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .generators import RNG_ALGORITHM, GenSpec, gen_random_family, pairwise_intersecting_circles, rng_from
from .geometry import build_intersection_hypergraph, neighborhood_hypergraph
from .hypergraph import (
    count_edges_at_most,
    count_k_good_pairs,
    edge_cardinality_profile,
    find_shattered_subset,
)
from .solvers import (
    exact_min_weight_hitting_set,
    greedy_hitting_set,
    round_and_repair,
    solve_lp,
)

# pre-registered acceptance windows
DOUBLING_WINDOW = (1.5, 2.5)  # "O(n)" at fixed k: median count(2n)/count(n)
LOGLOG_SLOPE_LIMIT = 3.3  # "O(k^3)": slope of log(count/n) vs log(k)
KGOOD_REL_SLOPE_LIMIT = 0.05  # relative median growth per doubling of m
RATIO_SLOPE_LIMIT = 0.1  # slope of median weight/LP* vs log2(n)

DEFAULT_N_GRID = (200, 400, 800, 1600)
DEFAULT_K_MAX = 8
DEFAULT_TRIALS = 10

CSV_COLUMNS = ("experiment", "n", "k", "trial", "seed", "metric", "value")


@dataclass(frozen=True)
class ExperimentRecord:
    experiment: str
    n: int
    k: int  # -1 when not applicable
    trial: int  # -1 when not applicable
    seed: int
    metric: str
    value: float

    def row(self):
        return [
            self.experiment,
            self.n,
            self.k if self.k >= 0 else "",
            self.trial if self.trial >= 0 else "",
            self.seed,
            self.metric,
            repr(self.value),
        ]


def derive_seed(base, *path):
    """Stable 64-bit seed for a derivation path under a base seed."""
    ss = np.random.SeedSequence([int(base) & 0xFFFFFFFF, *(int(p) & 0xFFFFFFFF for p in path)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def experiment_spec(n, seed, kind="disk", weights="unit"):
    """Constant-density random family: region side grows with sqrt(n) so
    neighborhood sizes stay O(1) and linear-in-n growth is observable."""
    return GenSpec(
        kind=kind,
        n=n,
        region=2.2 * math.sqrt(n),
        rmin=0.5,
        rmax=1.0,
        weights=weights,
        seed=seed,
    )


def _run_tasks(tasks, threads):
    """Run callables, in parallel when asked, merging in task order."""
    if threads <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(t) for t in tasks]
        return [f.result() for f in futures]


def _median(values):
    return float(np.median(np.asarray(values, dtype=float)))


def _lstsq_slope(xs, ys):
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 2:
        return 0.0
    return float(np.polyfit(xs, ys, 1)[0])


def shallow_edge_growth(
    n_list=DEFAULT_N_GRID,
    k_max=DEFAULT_K_MAX,
    trials=DEFAULT_TRIALS,
    seed=0,
    kind="disk",
    threads=1,
):
    """count_edges_at_most(H(P), k) over random constant-density
    families; derives doubling ratios per k and the log-log slope of
    count/n versus k."""
    if list(n_list) != sorted(n_list):
        raise ValueError("n_list must be ascending")

    def one(n, t):
        dseed = derive_seed(seed, n, t)
        h = neighborhood_hypergraph(gen_random_family(experiment_spec(n, dseed, kind)))
        return [(n, t, dseed, k, count_edges_at_most(h, k)) for k in range(1, k_max + 1)]

    tasks = [
        (lambda n=n, t=t: one(n, t)) for n in n_list for t in range(trials)
    ]
    records = []
    counts = {}  # (n, k) -> list over trials
    for rows in _run_tasks(tasks, threads):
        for n, t, dseed, k, c in rows:
            records.append(
                ExperimentRecord("shallow_edge_growth", n, k, t, dseed, "count_le_k", float(c))
            )
            counts.setdefault((n, k), []).append(c)

    medians = {nk: _median(v) for nk, v in counts.items()}
    doubling = {}
    for k in range(1, k_max + 1):
        ratios = []
        for a, b in zip(n_list, n_list[1:]):
            lo = medians[(a, k)]
            if lo > 0:
                ratios.append(medians[(b, k)] / lo)
        doubling[k] = _median(ratios) if ratios else float("nan")
    n_top = n_list[-1]
    ks = [k for k in range(1, k_max + 1) if medians[(n_top, k)] > 0]
    slope = _lstsq_slope(
        [math.log(k) for k in ks],
        [math.log(medians[(n_top, k)] / n_top) for k in ks],
    )
    summary = {
        "medians": {f"{n},{k}": medians[(n, k)] for (n, k) in sorted(medians)},
        "doubling_ratio_by_k": doubling,
        "loglog_slope": slope,
        "window_doubling": all(
            DOUBLING_WINDOW[0] <= doubling[k] <= DOUBLING_WINDOW[1]
            for k in range(1, min(4, k_max) + 1)
            if not math.isnan(doubling[k])
        ),
        "window_slope": slope <= LOGLOG_SLOPE_LIMIT,
    }
    return records, summary


def counterexample_growth(n_list=(5, 10, 20), seed=0):
    """Cardinality-2 edge counts of the tiny-circle construction must be
    exactly n(n-1)/2: boundary semantics grow quadratically."""
    records = []
    for n in n_list:
        dseed = derive_seed(seed, n)
        p, f = pairwise_intersecting_circles(n, dseed)
        h = build_intersection_hypergraph(p, f)
        c2 = edge_cardinality_profile(h).counts.get(2, 0)
        expected = n * (n - 1) // 2
        if c2 != expected:
            raise AssertionError(
                f"counterexample n={n}: got {c2} pair edges, expected {expected}"
            )
        records.append(
            ExperimentRecord("counterexample_growth", n, 2, -1, dseed, "count_eq_2", float(c2))
        )
    return records, {"all_exact": True}


def vc_scan(instances, sizes=(4, 5)):
    """Search shattered subsets of the given sizes per (name, H) pair."""
    report = []
    for name, h in instances:
        entry = {"name": name, "n": h.n, "edges": h.m}
        t0 = time.perf_counter()
        for d in sizes:
            key = f"shattered_{d}"
            if d > h.n:
                entry[key] = None
                continue
            found = find_shattered_subset(h, d)
            entry[key] = sorted(found) if found is not None else None
        entry["seconds"] = time.perf_counter() - t0
        report.append(entry)
    return report


def kgood_linearity(
    m_list=(100, 200, 400, 800),
    k_list=(2, 3),
    trials=5,
    seed=0,
    kind="disk",
):
    """count_k_good_pairs / m over random subfamilies of growing size;
    linearity shows as a flat ratio trend.

    Each m gets its own ambient family of size 2m at constant density,
    from which a random m-subset is drawn, so the subfamily's density
    does not drift with m (otherwise the ratio trend measures density,
    not the linearity bound)."""
    records = []
    ratios = {}  # (k, m) -> list
    for t in range(trials):
        for m in m_list:
            n = 2 * m
            dseed = derive_seed(seed, t, m)
            fam = gen_random_family(experiment_spec(n, dseed, kind))
            h = neighborhood_hypergraph(fam)
            rng = rng_from(dseed, 1)
            sub = sorted(rng.choice(n, size=m, replace=False).tolist())
            for k in k_list:
                ratio = count_k_good_pairs(h, sub, k) / m
                records.append(
                    ExperimentRecord("kgood_linearity", m, k, t, dseed, "kgood_per_m", ratio)
                )
                ratios.setdefault((k, m), []).append(ratio)
    summary = {"per_k": {}}
    ok = True
    for k in k_list:
        med = [_median(ratios[(k, m)]) for m in m_list]
        slope = _lstsq_slope([math.log2(m) for m in m_list], med)
        scale = max(_median(med), 1e-12)
        rel = slope / scale
        passed = rel <= KGOOD_REL_SLOPE_LIMIT
        ok = ok and passed
        summary["per_k"][k] = {
            "medians": dict(zip(map(int, m_list), med)),
            "rel_slope_per_doubling": rel,
            "window_pass": passed,
        }
    summary["window_kgood"] = ok
    return records, summary


def ratio_experiment(
    n_list=(50, 100, 200, 400),
    trials=5,
    seed=0,
    kind="disk",
    exact_cap=20,
):
    """Solver weights and ratios per instance; exact runs only at small
    n, LP* is the lower bound everywhere."""
    records = []
    round_over_lp = {}  # n -> list
    errors = []
    for n in n_list:
        for t in range(trials):
            dseed = derive_seed(seed, n, t)
            fam = gen_random_family(experiment_spec(n, dseed, kind, weights="uniform01"))
            h = neighborhood_hypergraph(fam)
            try:
                frac = solve_lp(h)
                greedy = greedy_hitting_set(h)
                rounded = round_and_repair(h, frac, seed=dseed)
            except Exception as exc:  # keep the experiment going
                errors.append({"n": n, "trial": t, "seed": dseed, "error": str(exc)})
                continue
            rows = [
                ("lp_objective", frac.objective),
                ("weight_greedy", greedy.total_weight),
                ("weight_lp_round", rounded.total_weight),
            ]
            if n <= exact_cap:
                exact = exact_min_weight_hitting_set(h)
                rows.append(("weight_exact", exact.total_weight))
                rows.append(("ratio_greedy_exact", greedy.total_weight / exact.total_weight))
            lp = max(frac.objective, 1e-12)
            ratio = rounded.total_weight / lp
            rows.append(("ratio_round_lp", ratio))
            round_over_lp.setdefault(n, []).append(ratio)
            for metric, value in rows:
                records.append(
                    ExperimentRecord("ratio_experiment", n, -1, t, dseed, metric, float(value))
                )
    med = {n: _median(v) for n, v in round_over_lp.items() if v}
    ns = sorted(med)
    slope = _lstsq_slope([math.log2(n) for n in ns], [med[n] for n in ns])
    summary = {
        "median_round_over_lp": med,
        "flatness_slope": slope,
        "window_flatness": slope <= RATIO_SLOPE_LIMIT,
        "errors": errors,
    }
    return records, summary


def write_records_csv(records, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow(r.row())


def manifest(seed, summary, extra=None):
    from . import __version__

    d = {
        "rng": RNG_ALGORITHM,
        "seed": int(seed),
        "version": __version__,
        "summary": summary,
    }
    if extra:
        d.update(extra)
    return d
