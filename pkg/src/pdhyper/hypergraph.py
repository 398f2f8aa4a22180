"""Geometry-free hypergraph core: canonical edges, trace restriction,
shattering search, and k-good pair counting."""

import json
import math
from dataclasses import dataclass, field

from .errors import InputError
from .kernels import all_traces_realized


@dataclass(frozen=True)
class Hypergraph:
    """Ground set [0, n) with canonical (sorted, deduplicated) edges.

    Ranges that meet no ground element are not stored as edges; their
    existence is recorded in empty_trace so shattering semantics keep
    the empty subset available as a trace.
    """

    n: int
    edges: tuple = ()
    weights: tuple = None
    labels: tuple = None
    empty_trace: bool = False
    witnesses: tuple = None  # parallel to edges; one witness id per edge

    def __post_init__(self):
        if self.n < 0:
            raise InputError("n must be non-negative")
        if self.weights is None:
            object.__setattr__(self, "weights", tuple(1.0 for _ in range(self.n)))
        if len(self.weights) != self.n:
            raise InputError("weights length must equal n")
        for w in self.weights:
            if not (w >= 0.0 and math.isfinite(w)):
                raise InputError("weights must be non-negative and finite")
        for e in self.edges:
            if not e:
                raise InputError("empty edges must be flagged, not stored")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise InputError("edge ids must be strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise InputError("edge id out of range")
        if len(set(self.edges)) != len(self.edges):
            raise InputError("duplicate edges")
        if self.witnesses is not None and len(self.witnesses) != len(self.edges):
            raise InputError("witnesses must parallel edges")

    @property
    def m(self):
        return len(self.edges)

    def edge_masks(self):
        masks = []
        for e in self.edges:
            m = 0
            for i in e:
                m |= 1 << i
            masks.append(m)
        return masks

    def to_json_dict(self):
        d = {
            "n": self.n,
            "weights": list(self.weights),
            "edges": [list(e) for e in self.edges],
            "empty_trace": self.empty_trace,
        }
        if self.labels is not None:
            d["labels"] = list(self.labels)
        if self.witnesses is not None:
            d["witnesses"] = list(self.witnesses)
        return d

    @classmethod
    def from_json_dict(cls, d):
        try:
            n = int(d["n"])
            raw = [list(map(int, e)) for e in d["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad hypergraph document: {exc}") from exc
        weights = d.get("weights")
        h = canonicalize(raw, n, weights=weights, labels=d.get("labels"))
        if d.get("empty_trace") and not h.empty_trace:
            h = replace_empty_trace(h, True)
        return h


def replace_empty_trace(h, flag):
    return Hypergraph(h.n, h.edges, h.weights, h.labels, bool(flag), h.witnesses)


def canonicalize(raw_edges, n, weights=None, labels=None, witnesses=None):
    """Sort/dedup raw id lists into a Hypergraph.

    Empty id lists set the empty_trace flag instead of becoming edges.
    When witnesses are given (parallel to raw_edges), each distinct edge
    keeps the smallest witness id among its producers, so the result is
    independent of input order.
    """
    seen = {}
    empty = False
    for idx, e in enumerate(raw_edges):
        if not e:
            empty = True
            continue
        key = tuple(sorted(set(e)))
        if key[0] < 0 or key[-1] >= n:
            raise InputError(f"edge id out of range [0, {n})")
        w = witnesses[idx] if witnesses is not None else None
        if key not in seen:
            seen[key] = w
        elif w is not None and (seen[key] is None or w < seen[key]):
            seen[key] = w
    edges = tuple(sorted(seen))
    wit = tuple(seen[e] for e in edges) if witnesses is not None else None
    return Hypergraph(
        n=n,
        edges=edges,
        weights=tuple(weights) if weights is not None else None,
        labels=tuple(labels) if labels is not None else None,
        empty_trace=empty,
        witnesses=wit,
    )


@dataclass(frozen=True)
class EdgeCardinalityProfile:
    counts: dict = field(default_factory=dict)  # cardinality -> edge count

    def at_most(self, k):
        return sum(c for size, c in self.counts.items() if size <= k)

    def total(self):
        return sum(self.counts.values())


def edge_cardinality_profile(h):
    counts = {}
    for e in h.edges:
        counts[len(e)] = counts.get(len(e), 0) + 1
    return EdgeCardinalityProfile(counts)


def count_edges_at_most(h, k):
    """Number of distinct edges of cardinality in [1, k]."""
    if k < 1:
        raise InputError("k must be >= 1")
    return sum(1 for e in h.edges if len(e) <= k)


def restrict_trace(h, subset):
    """Restrict to a ground subset; edges become deduplicated traces.

    The subset is reindexed in increasing id order. Traces that come out
    empty set the empty_trace flag.
    """
    ids = sorted(set(subset))
    if ids and (ids[0] < 0 or ids[-1] >= h.n):
        raise InputError("subset id out of range")
    remap = {old: new for new, old in enumerate(ids)}
    member = set(ids)
    raw = []
    wit = [] if h.witnesses is not None else None
    empty = h.empty_trace
    for idx, e in enumerate(h.edges):
        t = [remap[i] for i in e if i in member]
        if not t:
            empty = True
            continue
        raw.append(t)
        if wit is not None:
            wit.append(h.witnesses[idx])
    out = canonicalize(
        raw,
        len(ids),
        weights=[h.weights[i] for i in ids],
        labels=[h.labels[i] for i in ids] if h.labels is not None else None,
        witnesses=wit,
    )
    if empty and not out.empty_trace:
        out = replace_empty_trace(out, True)
    return out


def is_shattered(h, subset, masks=None):
    """Direct check that every subset of `subset` occurs as a trace."""
    ids = sorted(set(subset))
    if masks is None:
        masks = h.edge_masks()
    km = 0
    for i in ids:
        km |= 1 << i
    return all_traces_realized(masks, km, ids, h.empty_trace, h.n)


def find_shattered_subset(h, d):
    """Lexicographically smallest shattered d-subset, or None.

    Searches level by level: a shattered set is hereditary, and must be
    contained in some edge (its full trace has to be realized), which
    prunes the enumeration hard.
    """
    if d < 1:
        raise InputError("d must be >= 1")
    if d > h.n:
        return None
    masks = h.edge_masks()
    union = 0
    for m in masks:
        union |= m

    def shat(ids):
        km = 0
        for i in ids:
            km |= 1 << i
        return all_traces_realized(masks, km, ids, h.empty_trace, h.n)

    level = [(i,) for i in range(h.n) if (union >> i) & 1 and shat((i,))]
    t = 1
    while t < d and level:
        cur = set(level)
        nxt = []
        for k in level:
            for x in range(k[-1] + 1, h.n):
                if not (union >> x) & 1:
                    continue
                cand = k + (x,)
                # hereditary prune: every (t)-subset must itself be shattered
                if any(
                    cand[:j] + cand[j + 1 :] not in cur for j in range(len(cand) - 1)
                ):
                    continue
                if shat(cand):
                    nxt.append(cand)
        level = nxt
        t += 1
    if t == d and level:
        return set(min(level))
    return None


def count_k_good_pairs(h, subfamily, k):
    """Unordered pairs of the subfamily co-occurring in an edge whose
    trace on the subfamily has size at most k."""
    if k < 2:
        raise InputError("k must be >= 2")
    member = set(subfamily)
    if member and (min(member) < 0 or max(member) >= h.n):
        raise InputError("subfamily id out of range")
    good = set()
    for e in h.edges:
        t = [i for i in e if i in member]
        if 2 <= len(t) <= k:
            for a in range(len(t)):
                for b in range(a + 1, len(t)):
                    good.add((t[a], t[b]))
    return len(good)


def load_hypergraph(path):
    with open(path) as f:
        return Hypergraph.from_json_dict(json.load(f))


def save_hypergraph(h, path):
    with open(path, "w") as f:
        json.dump(h.to_json_dict(), f)
