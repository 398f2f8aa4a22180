"""Concrete pseudo-disk families (disks, circle boundaries, homothets of
a convex template), exact intersection predicates, and construction of
the intersection hypergraph H(P, F)."""

import json
import math
import statistics
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .hypergraph import canonicalize
from .kernels import disk_hit_lists


@dataclass(frozen=True)
class Disk:
    id: int
    cx: float
    cy: float
    r: float
    weight: float = 1.0

    def __post_init__(self):
        if not (self.r > 0 and math.isfinite(self.r)):
            raise InputError("disk radius must be positive and finite")
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise InputError("disk center must be finite")
        if not (self.weight >= 0 and math.isfinite(self.weight)):
            raise InputError("weight must be non-negative and finite")


@dataclass(frozen=True)
class ConvexTemplate:
    vertices: tuple  # CCW, strictly convex

    def __post_init__(self):
        v = self.vertices
        if len(v) < 3:
            raise InputError("template needs at least 3 vertices")
        if len(set(v)) != len(v):
            raise InputError("template has repeated vertices")
        n = len(v)
        for i in range(n):
            ax, ay = v[i]
            bx, by = v[(i + 1) % n]
            cx, cy = v[(i + 2) % n]
            cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if cross <= 0:
                raise InputError("template must be strictly convex and CCW")

    def diameter(self):
        v = self.vertices
        return max(
            math.hypot(a[0] - b[0], a[1] - b[1]) for a in v for b in v if a != b
        )


@dataclass(frozen=True)
class Homothet:
    id: int
    scale: float
    tx: float
    ty: float
    weight: float = 1.0

    def __post_init__(self):
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise InputError("scale must be positive and finite")
        if not (self.weight >= 0 and math.isfinite(self.weight)):
            raise InputError("weight must be non-negative and finite")


KINDS = ("disk", "circle_boundary", "homothet")


@dataclass(frozen=True)
class PseudoDiskFamily:
    kind: str
    elements: tuple
    template: ConvexTemplate = None
    labels: tuple = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown family kind {self.kind!r}")
        want = Homothet if self.kind == "homothet" else Disk
        for e in self.elements:
            if not isinstance(e, want):
                raise InputError("family elements must all match the kind")
        ids = [e.id for e in self.elements]
        if ids != list(range(len(ids))):
            raise InputError("ids must be contiguous from 0")
        if self.kind == "homothet" and self.template is None:
            raise InputError("homothet family needs a shared template")

    def __len__(self):
        return len(self.elements)

    @property
    def weights(self):
        return tuple(e.weight for e in self.elements)


def disks_intersect(a, b, tol=0.0):
    """Closed disks intersect; tangency counts."""
    dx = a.cx - b.cx
    dy = a.cy - b.cy
    rs = a.r + b.r
    return dx * dx + dy * dy <= rs * rs + tol


def circle_crossing_count(a, b, tol=0.0):
    """Number of proper boundary crossings of two circles: 0, 1, or 2.

    Nested and disjoint circles give 0; tangency gives 1. Identical
    circles are rejected as degenerate.
    """
    dx = a.cx - b.cx
    dy = a.cy - b.cy
    d2 = dx * dx + dy * dy
    if d2 == 0.0 and a.r == b.r:
        raise InputError("identical circles are degenerate")
    lo = (a.r - b.r) ** 2
    hi = (a.r + b.r) ** 2
    if lo + tol < d2 < hi - tol:
        return 2
    if abs(d2 - lo) <= tol or abs(d2 - hi) <= tol:
        return 1
    return 0


def homothet_vertices(h, template):
    return [(h.scale * x + h.tx, h.scale * y + h.ty) for x, y in template.vertices]


def _project(verts, ax, ay):
    dots = [x * ax + y * ay for x, y in verts]
    return min(dots), max(dots)


def homothets_intersect(a, b, template, tol=0.0):
    """Separating-axis test over both polygons' edge normals; touching
    counts as intersecting (closed sets)."""
    va = homothet_vertices(a, template)
    vb = homothet_vertices(b, template)
    for verts in (va, vb):
        n = len(verts)
        for i in range(n):
            ex = verts[(i + 1) % n][0] - verts[i][0]
            ey = verts[(i + 1) % n][1] - verts[i][1]
            ax, ay = -ey, ex
            lo_a, hi_a = _project(va, ax, ay)
            lo_b, hi_b = _project(vb, ax, ay)
            if hi_a < lo_b - tol or hi_b < lo_a - tol:
                return False
    return True


def elements_intersect(a, b, family_kind, template=None, tol=0.0):
    if family_kind == "disk":
        return disks_intersect(a, b, tol)
    if family_kind == "circle_boundary":
        return circle_crossing_count(a, b, tol) >= 1
    return homothets_intersect(a, b, template, tol)


def _bbox(elem, kind, template):
    if kind == "homothet":
        verts = homothet_vertices(elem, template)
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        return min(xs), min(ys), max(xs), max(ys)
    return elem.cx - elem.r, elem.cy - elem.r, elem.cx + elem.r, elem.cy + elem.r


def _grid_cell_size(p, f):
    diams = []
    for fam in (p, f):
        for e in fam.elements:
            x0, y0, x1, y1 = _bbox(e, fam.kind, fam.template)
            diams.append(math.hypot(x1 - x0, y1 - y0))
    cell = statistics.median(diams)
    return cell if cell > 0 else 1.0


def _check_compatible(p, f):
    if p.kind != f.kind:
        raise InputError("P and F must have the same kind")
    if p.kind == "homothet" and p.template != f.template:
        raise InputError("homothet families must share the template")


def build_intersection_hypergraph(p, f, tol=0.0):
    """H(P, F): one edge per range S in F holding the ids of all
    elements of P that S intersects (boundary crossings for the
    circle_boundary kind). Grid-accelerated; order-independent output."""
    _check_compatible(p, f)
    if p.kind in ("disk", "circle_boundary"):
        cell = _grid_cell_size(p, f)
        mode = 1 if p.kind == "circle_boundary" else 0
        pcx = np.array([e.cx for e in p.elements])
        pcy = np.array([e.cy for e in p.elements])
        pr = np.array([e.r for e in p.elements])
        fcx = np.array([e.cx for e in f.elements])
        fcy = np.array([e.cy for e in f.elements])
        fr = np.array([e.r for e in f.elements])
        raw = disk_hit_lists(pcx, pcy, pr, fcx, fcy, fr, cell, mode, tol)
    else:
        raw = []
        boxes = [_bbox(e, p.kind, p.template) for e in p.elements]
        for s in f.elements:
            sx0, sy0, sx1, sy1 = _bbox(s, f.kind, f.template)
            hits = []
            for d, (x0, y0, x1, y1) in zip(p.elements, boxes):
                if x0 > sx1 or sx0 > x1 or y0 > sy1 or sy0 > y1:
                    continue
                if homothets_intersect(d, s, p.template, tol):
                    hits.append(d.id)
            raw.append(hits)
    return canonicalize(
        raw,
        len(p),
        weights=p.weights,
        labels=p.labels,
        witnesses=[s.id for s in f.elements],
    )


def all_pairs_intersection_hypergraph(p, f, tol=0.0):
    """Oracle construction: plain O(|P|*|F|) predicate sweep, no grid."""
    _check_compatible(p, f)
    raw = []
    for s in f.elements:
        raw.append(
            [
                d.id
                for d in p.elements
                if elements_intersect(d, s, p.kind, p.template, tol)
            ]
        )
    return canonicalize(
        raw,
        len(p),
        weights=p.weights,
        labels=p.labels,
        witnesses=[s.id for s in f.elements],
    )


def neighborhood_hypergraph(p, tol=0.0):
    """H(P): the F = P case; each element belongs to its own edge."""
    return build_intersection_hypergraph(p, p, tol)


def _circle_circle_points(c1x, c1y, r1, c2x, c2y, r2):
    """Boundary intersection points of two circles (0, 1, or 2)."""
    dx = c2x - c1x
    dy = c2y - c1y
    d2 = dx * dx + dy * dy
    if d2 == 0.0:
        return []
    if d2 > (r1 + r2) ** 2 or d2 < (r1 - r2) ** 2:
        return []
    d = math.sqrt(d2)
    a = (d2 + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    h = math.sqrt(h2) if h2 > 0 else 0.0
    ux, uy = dx / d, dy / d
    bx, by = c1x + a * ux, c1y + a * uy
    if h == 0.0:
        return [(bx, by)]
    return [(bx - h * uy, by + h * ux), (bx + h * uy, by - h * ux)]


def _point_in_disk(px, py, d):
    return (px - d.cx) ** 2 + (py - d.cy) ** 2 <= d.r * d.r


def _point_in_polygon_closed(px, py, verts):
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        if (bx - ax) * (py - ay) - (by - ay) * (px - ax) < 0:
            return False
    return True


def _disk_private_candidates(d, relevant):
    delta = 1e-6 * d.r
    cands = [(d.cx, d.cy)]
    # arc midpoints between consecutive boundary-boundary crossings
    angles = []
    for o in relevant:
        for px, py in _circle_circle_points(d.cx, d.cy, d.r, o.cx, o.cy, o.r):
            angles.append(math.atan2(py - d.cy, px - d.cx))
    if angles:
        angles.sort()
        rr = d.r - delta
        for i in range(len(angles)):
            a0 = angles[i]
            a1 = angles[(i + 1) % len(angles)] + (2 * math.pi if i + 1 == len(angles) else 0)
            mid = (a0 + a1) / 2.0
            cands.append((d.cx + rr * math.cos(mid), d.cy + rr * math.sin(mid)))
    # crossing vertices of pairs of other boundaries inside D, nudged
    for i in range(len(relevant)):
        for j in range(i + 1, len(relevant)):
            a, b = relevant[i], relevant[j]
            for px, py in _circle_circle_points(a.cx, a.cy, a.r, b.cx, b.cy, b.r):
                if _point_in_disk(px, py, d):
                    cands.extend(
                        [
                            (px + delta, py),
                            (px - delta, py),
                            (px, py + delta),
                            (px, py - delta),
                        ]
                    )
    return cands


def _homothet_private_candidates(d, template):
    verts = homothet_vertices(d, template)
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    delta = 1e-6 * d.scale * template.diameter()
    cands = [(cx, cy)]
    for i in range(len(verts)):
        vx, vy = verts[i]
        wx, wy = verts[(i + 1) % len(verts)]
        for px, py in ((vx, vy), ((vx + wx) / 2.0, (vy + wy) / 2.0)):
            dx, dy = cx - px, cy - py
            norm = math.hypot(dx, dy)
            if norm > 0:
                cands.append((px + delta * dx / norm, py + delta * dy / norm))
    return cands


def find_private_point(d, others, kind, template=None, tol=0.0):
    """A point of d (closed) outside all `others`, or None.

    Candidates are deterministic and every candidate is re-verified with
    exact comparisons, so the search is sound but may be incomplete.
    """
    if kind == "homothet":
        relevant = [o for o in others if homothets_intersect(d, o, template, tol)]
        if not relevant:
            verts = homothet_vertices(d, template)
            return (
                sum(v[0] for v in verts) / len(verts),
                sum(v[1] for v in verts) / len(verts),
            )
        cands = _homothet_private_candidates(d, template)
        d_verts = homothet_vertices(d, template)
        o_verts = [homothet_vertices(o, template) for o in relevant]
        for px, py in cands:
            if not _point_in_polygon_closed(px, py, d_verts):
                continue
            if all(not _point_in_polygon_closed(px, py, ov) for ov in o_verts):
                return (px, py)
        return None
    # disk and circle_boundary kinds use closed-disk coverage
    relevant = [o for o in others if disks_intersect(d, o, tol)]
    if not relevant:
        return (d.cx, d.cy)
    for px, py in _disk_private_candidates(d, relevant):
        if not _point_in_disk(px, py, d):
            continue
        if all((px - o.cx) ** 2 + (py - o.cy) ** 2 > o.r * o.r for o in relevant):
            return (px, py)
    return None


# ---------------------------------------------------------------------------
# instance JSON


def family_to_json_dict(fam):
    d = {"kind": fam.kind, "elements": []}
    if fam.kind == "homothet":
        d["template"] = [list(v) for v in fam.template.vertices]
        for e in fam.elements:
            d["elements"].append(
                {"id": e.id, "scale": e.scale, "tx": e.tx, "ty": e.ty, "weight": e.weight}
            )
    else:
        for e in fam.elements:
            d["elements"].append(
                {"id": e.id, "cx": e.cx, "cy": e.cy, "r": e.r, "weight": e.weight}
            )
    if fam.labels is not None:
        d["labels"] = list(fam.labels)
    return d


def family_from_json_dict(d):
    try:
        kind = d["kind"]
        elems = d["elements"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad instance document: {exc}") from exc
    if kind not in KINDS:
        raise InputError(f"unknown family kind {kind!r}")
    template = None
    out = []
    try:
        if kind == "homothet":
            template = ConvexTemplate(tuple(tuple(v) for v in d["template"]))
            for e in elems:
                out.append(
                    Homothet(
                        int(e["id"]),
                        float(e["scale"]),
                        float(e["tx"]),
                        float(e["ty"]),
                        float(e.get("weight", 1.0)),
                    )
                )
        else:
            for e in elems:
                out.append(
                    Disk(
                        int(e["id"]),
                        float(e["cx"]),
                        float(e["cy"]),
                        float(e["r"]),
                        float(e.get("weight", 1.0)),
                    )
                )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad instance element: {exc}") from exc
    labels = tuple(d["labels"]) if "labels" in d else None
    return PseudoDiskFamily(kind, tuple(out), template, labels)


def instance_to_json_dict(p, f=None):
    d = family_to_json_dict(p)
    if f is not None:
        d["ranges"] = family_to_json_dict(f)
    return d


def load_instance(path):
    """Read an instance file; returns (P, F) with F = None when absent."""
    with open(path) as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    p = family_from_json_dict(d)
    f = family_from_json_dict(d["ranges"]) if "ranges" in d else None
    return p, f
