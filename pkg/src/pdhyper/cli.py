"""Command-line entry point.

Subcommands: gen, count, vc, goodpairs, domset, gallery, bench.
Exit codes: 0 success, 2 invalid input, 3 infeasible, 4 resource limit.
"""

import argparse
import json
import os
import sys

from . import experiments
from .errors import GenerationError, InfeasibleError, InputError, ResourceLimitError
from .gallery import build_good_pair_graph, euler_bound_check
from .generators import (
    WEIGHT_SCHEMES,
    GenSpec,
    fixture_by_name,
    gen_random_family,
)
from .geometry import (
    build_intersection_hypergraph,
    family_from_json_dict,
    instance_to_json_dict,
    load_instance,
    neighborhood_hypergraph,
)
from .hypergraph import Hypergraph, count_edges_at_most, count_k_good_pairs
from .solvers import METHODS, domset_pipeline

# fixed default so unseeded runs are still reproducible
DEFAULT_SEED = 20150607

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_RESOURCE = 4


def atomic_write_text(path, text):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_json(path, obj):
    atomic_write_text(path, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load_input(args):
    """Resolve --in / --fixture into ('family', P, F) or ('hypergraph', H, None)."""
    if getattr(args, "fixture", None):
        return fixture_by_name(args.fixture, args.seed)
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            doc = json.load(fh)
        if "kind" in doc:
            p = family_from_json_dict(doc)
            f = family_from_json_dict(doc["ranges"]) if "ranges" in doc else None
            return "family", p, f
        return "hypergraph", Hypergraph.from_json_dict(doc), None
    raise InputError("need --in or --fixture")


def _as_hypergraph(args):
    kind, obj, ranges = _load_input(args)
    if kind == "hypergraph":
        return obj, None
    f = ranges if ranges is not None else obj
    return build_intersection_hypergraph(obj, f), obj


def _labels(h, ids):
    if h.labels is not None:
        return [h.labels[i] for i in sorted(ids)]
    return sorted(ids)


def cmd_gen(args):
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        region=args.region,
        rmin=args.rmin,
        rmax=args.rmax,
        weights=args.weights,
        seed=args.seed,
    )
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        fields = dict(
            kind=spec.kind, n=spec.n, region=spec.region, rmin=spec.rmin,
            rmax=spec.rmax, weights=spec.weights, seed=spec.seed,
        )
        fields.update({k: cfg[k] for k in fields if k in cfg})
        spec = GenSpec(**fields)
    fam = gen_random_family(spec)
    doc = instance_to_json_dict(fam)
    if args.out:
        write_json(args.out, doc)
    else:
        print(json.dumps(doc, sort_keys=True))
        return EXIT_OK
    print(f"generated kind={spec.kind} n={spec.n} seed={spec.seed} -> {args.out}")
    return EXIT_OK


def cmd_count(args):
    h, _ = _as_hypergraph(args)
    c = count_edges_at_most(h, args.k)
    print(f"edges<={args.k}: {c}")
    if args.out:
        write_json(args.out, h.to_json_dict())
    return EXIT_OK


def cmd_vc(args):
    h, _ = _as_hypergraph(args)
    report = experiments.vc_scan([("input", h)], sizes=(4, 5))[0]
    s4 = report.get("shattered_4")
    s5 = report.get("shattered_5")
    part4 = f"shattered set of size 4 found: {s4}" if s4 else "size 4: none"
    part5 = f"size 5: {s5}" if s5 else "size 5: none"
    print(f"{part4}; {part5}")
    if args.out:
        write_json(args.out, report)
    return EXIT_OK


def cmd_goodpairs(args):
    h, _ = _as_hypergraph(args)
    c = count_k_good_pairs(h, range(h.n), args.k)
    print(f"{args.k}-good pairs: {c} (ground set {h.n})")
    return EXIT_OK


def cmd_domset(args):
    kind, obj, _ = _load_input(args)
    if kind != "family":
        raise InputError("domset needs a geometric family input")
    res = domset_pipeline(
        obj, method=args.method, seed=args.seed, epsilon=args.epsilon,
        node_limit=args.node_limit,
    )
    h = neighborhood_hypergraph(obj)
    chosen = _labels(h, res.chosen)
    print(f"weight={res.total_weight:g} chosen={chosen} method={args.method}")
    if args.out:
        doc = res.to_json_dict()
        doc["seed"] = args.seed
        write_json(args.out, doc)
    return EXIT_OK


def cmd_gallery(args):
    kind, obj, ranges = _load_input(args)
    if kind != "family":
        raise InputError("gallery needs a geometric family input")
    f = ranges if ranges is not None else obj
    g = build_good_pair_graph(obj, f)
    report = euler_bound_check(g, samples=args.samples, seed=args.seed)
    print(
        f"K={report['k_size']} edges={report['edge_count']} "
        f"bound={report['bound']} violations={len(report['violations'])}"
    )
    if args.out:
        write_json(args.out, report)
    return EXIT_OK


def _bench_instances(count, seed, n_max=40, f_max=200):
    """Random (P, F) pairs for the shattering scan."""
    out = []
    for i in range(count):
        n = 5 + (i * 7) % (n_max - 4)
        m = min(f_max, 5 * n)
        ps = experiments.experiment_spec(n, experiments.derive_seed(seed, i, 0))
        fs = experiments.experiment_spec(m, experiments.derive_seed(seed, i, 1))
        p = gen_random_family(ps)
        f = gen_random_family(fs)
        out.append((f"rand{i}", build_intersection_hypergraph(p, f)))
    return out


def cmd_bench(args):
    if args.exp == "shallow":
        records, summary = experiments.shallow_edge_growth(
            n_list=args.n_list, k_max=args.k, trials=args.trials,
            seed=args.seed, threads=args.threads,
        )
    elif args.exp == "counterexample":
        records, summary = experiments.counterexample_growth(
            n_list=args.n_list, seed=args.seed
        )
    elif args.exp == "kgood":
        records, summary = experiments.kgood_linearity(
            m_list=args.n_list, trials=args.trials, seed=args.seed
        )
    elif args.exp == "ratio":
        records, summary = experiments.ratio_experiment(
            n_list=args.n_list, trials=args.trials, seed=args.seed
        )
    elif args.exp == "vc":
        instances = _bench_instances(args.trials, args.seed)
        report = experiments.vc_scan(instances)
        hits5 = [r["name"] for r in report if r.get("shattered_5")]
        summary = {"instances": len(report), "size5_hits": hits5}
        records = []
        if args.out:
            write_json(args.out, report)
        print(f"vc scan: {len(report)} instances, size-5 hits: {len(hits5)}")
        return EXIT_OK
    else:
        raise InputError(f"unknown experiment {args.exp!r}")
    if args.out:
        if args.format == "csv":
            experiments.write_records_csv(records, args.out + ".tmp")
            os.replace(args.out + ".tmp", args.out)
            write_json(args.out + ".manifest.json", experiments.manifest(args.seed, summary))
        else:
            write_json(
                args.out,
                {
                    "records": [dict(zip(experiments.CSV_COLUMNS, r.row())) for r in records],
                    "manifest": experiments.manifest(args.seed, summary),
                },
            )
    flat = {k: v for k, v in summary.items() if not isinstance(v, dict)}
    print(f"{args.exp}: {json.dumps(flat, sort_keys=True, default=str)}")
    return EXIT_OK


def _int_list(text):
    return tuple(int(v) for v in text.split(","))


def build_parser():
    ap = argparse.ArgumentParser(prog="pdhyper")
    env_threads = int(os.environ.get("PDHYPER_THREADS", "1"))
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, infile=True):
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--threads", type=int, default=env_threads)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out")
        if infile:
            sp.add_argument("--in", dest="infile")
            sp.add_argument("--fixture")

    g = sub.add_parser("gen", help="generate a random instance file")
    common(g, infile=False)
    g.add_argument("--kind", choices=("disk", "circle_boundary", "homothet"), default="disk")
    g.add_argument("--n", type=int, default=100)
    g.add_argument("--region", type=float, default=10.0)
    g.add_argument("--rmin", type=float, default=0.5)
    g.add_argument("--rmax", type=float, default=1.0)
    g.add_argument("--weights", choices=WEIGHT_SCHEMES, default="unit")
    g.add_argument("--config", help="JSON file overriding generator fields")
    g.set_defaults(fn=cmd_gen)

    c = sub.add_parser("count", help="count edges of cardinality <= k")
    common(c)
    c.add_argument("--k", type=int, default=2)
    c.set_defaults(fn=cmd_count)

    v = sub.add_parser("vc", help="search shattered subsets of sizes 4 and 5")
    common(v)
    v.set_defaults(fn=cmd_vc)

    gp = sub.add_parser("goodpairs", help="count k-good pairs")
    common(gp)
    gp.add_argument("--k", type=int, default=2)
    gp.set_defaults(fn=cmd_goodpairs)

    d = sub.add_parser("domset", help="solve weighted dominating set")
    common(d)
    d.add_argument("--method", choices=METHODS, default="exact")
    d.add_argument("--epsilon", type=float, default=0.05)
    d.add_argument("--node-limit", type=int, default=10_000_000)
    d.set_defaults(fn=cmd_domset)

    ga = sub.add_parser("gallery", help="good-pair graph and Euler bound check")
    common(ga)
    ga.add_argument("--samples", type=int, default=20)
    ga.set_defaults(fn=cmd_gallery)

    b = sub.add_parser("bench", help="run an experiment harness")
    common(b, infile=False)
    b.add_argument("--exp", choices=("shallow", "counterexample", "kgood", "ratio", "vc"), required=True)
    b.add_argument("--n-list", type=_int_list, default=(200, 400, 800, 1600))
    b.add_argument("--k", type=int, default=8)
    b.add_argument("--trials", type=int, default=10)
    b.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(json.dumps({"error": "invalid_input", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except (InfeasibleError, GenerationError) as exc:
        print(json.dumps({"error": "infeasible", "message": str(exc)}), file=sys.stderr)
        return EXIT_INFEASIBLE
    except ResourceLimitError as exc:
        doc = {"error": "resource_limit", "message": str(exc)}
        if exc.incumbent is not None:
            doc["incumbent"] = exc.incumbent.to_json_dict()
        print(json.dumps(doc), file=sys.stderr)
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        print(json.dumps({"error": "invalid_input", "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
