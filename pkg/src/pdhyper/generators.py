"""Seeded instance generators: random families, the six-disk star
fixture, the pairwise-intersecting-circles construction with one tiny
circle per crossing pair, and the abstract shatter-four pattern."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import GenerationError, InputError
from .geometry import (
    ConvexTemplate,
    Disk,
    Homothet,
    PseudoDiskFamily,
    circle_crossing_count,
)
from .hypergraph import canonicalize, replace_empty_trace

# All randomness in the package comes from numpy's PCG64; the identifier
# is recorded in experiment manifests for cross-run reproducibility.
RNG_ALGORITHM = "numpy-pcg64"

WEIGHT_SCHEMES = ("unit", "uniform01", "exponential")

# regular hexagon, CCW, used as the default homothet template
DEFAULT_TEMPLATE = ConvexTemplate(
    tuple(
        (math.cos(2 * math.pi * i / 6), math.sin(2 * math.pi * i / 6))
        for i in range(6)
    )
)


@dataclass(frozen=True)
class GenSpec:
    kind: str = "disk"
    n: int = 100
    region: float = 10.0  # side of the [0, L]^2 sampling square
    rmin: float = 0.5  # radius (or homothet scale) range
    rmax: float = 1.0
    weights: str = "unit"
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InputError("n must be >= 1")
        if not (0 < self.rmin <= self.rmax):
            raise InputError("need 0 < rmin <= rmax")
        if self.region <= 0:
            raise InputError("region side must be positive")
        if self.weights not in WEIGHT_SCHEMES:
            raise InputError(f"unknown weight scheme {self.weights!r}")


def rng_from(seed, *path):
    """Deterministic generator for a seed plus a derivation path."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), *map(int, path)])))


def _draw_weights(rng, n, scheme):
    if scheme == "unit":
        return np.ones(n)
    if scheme == "uniform01":
        return rng.uniform(0.0, 1.0, n)
    return rng.exponential(1.0, n)


def gen_random_family(spec):
    """Uniform centers in [0, L]^2, radii/scales in [rmin, rmax]; fully
    determined by the spec's seed."""
    rng = rng_from(spec.seed)
    xs = rng.uniform(0.0, spec.region, spec.n)
    ys = rng.uniform(0.0, spec.region, spec.n)
    rs = rng.uniform(spec.rmin, spec.rmax, spec.n)
    ws = _draw_weights(rng, spec.n, spec.weights)
    if spec.kind == "homothet":
        elems = tuple(
            Homothet(i, float(rs[i]), float(xs[i]), float(ys[i]), float(ws[i]))
            for i in range(spec.n)
        )
        return PseudoDiskFamily("homothet", elems, DEFAULT_TEMPLATE)
    if spec.kind not in ("disk", "circle_boundary"):
        raise InputError(f"unknown family kind {spec.kind!r}")
    elems = tuple(
        Disk(i, float(xs[i]), float(ys[i]), float(rs[i]), float(ws[i]))
        for i in range(spec.n)
    )
    return PseudoDiskFamily(spec.kind, elems)


def star_fixture():
    """Six unit-weight disks whose intersection graph is a star: one big
    disk at the origin and five satellites that touch only it."""
    elems = [Disk(0, 0.0, 0.0, 2.0)]
    for i in range(5):
        ang = math.radians(90.0 + 72.0 * i)
        elems.append(Disk(i + 1, 3.5 * math.cos(ang), 3.5 * math.sin(ang), 1.6))
    labels = tuple(f"P{i + 1}" for i in range(6))
    return PseudoDiskFamily("disk", tuple(elems), labels=labels)


def pairwise_intersecting_circles(n, seed=0, max_retries=100):
    """n pairwise-crossing unit circles plus one tiny circle per pair,
    centered at a crossing point so it meets exactly that pair.

    Returns (P, F) as circle_boundary families. Rejects and reseeds when
    the general-position clearance floor (1e-9) is violated.
    """
    if n < 2:
        raise InputError("n must be >= 2")
    for attempt in range(max_retries):
        rng = rng_from(seed, attempt)
        centers = []
        while len(centers) < n:
            x, y = rng.uniform(-0.5, 0.5, 2)
            if x * x + y * y <= 0.25:
                centers.append((float(x), float(y)))
        circles = tuple(Disk(i, cx, cy, 1.0) for i, (cx, cy) in enumerate(centers))
        tiny = _place_tiny_circles(circles)
        if tiny is None:
            continue
        p = PseudoDiskFamily("circle_boundary", circles)
        f = PseudoDiskFamily("circle_boundary", tiny)
        if _validate_counterexample(p, f):
            return p, f
    raise GenerationError(f"no valid construction after {max_retries} reseeds")


def _place_tiny_circles(circles):
    n = len(circles)
    tiny = []
    tid = 0
    for i in range(n):
        for j in range(i + 1, n):
            a, b = circles[i], circles[j]
            dx, dy = b.cx - a.cx, b.cy - a.cy
            d2 = dx * dx + dy * dy
            d = math.sqrt(d2)
            if not (0.0 < d < 2.0):
                return None
            h2 = 1.0 - d2 / 4.0
            if h2 <= 0:
                return None
            h = math.sqrt(h2)
            mx, my = (a.cx + b.cx) / 2.0, (a.cy + b.cy) / 2.0
            ux, uy = dx / d, dy / d
            pts = [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]
            px, py = min(pts)  # lexicographically smaller crossing point
            clearance = 0.5
            for k in range(n):
                if k in (i, j):
                    continue
                c = circles[k]
                dk = math.hypot(px - c.cx, py - c.cy)
                clearance = min(clearance, abs(dk - c.r))
            radius = clearance / 2.0
            if radius < 1e-9:
                return None
            tiny.append(Disk(tid, px, py, radius))
            tid += 1
    return tuple(tiny)


def _validate_counterexample(p, f):
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if circle_crossing_count(p.elements[i], p.elements[j]) != 2:
                return False
    tid = 0
    for i in range(n):
        for j in range(i + 1, n):
            s = f.elements[tid]
            tid += 1
            hit = [
                d.id for d in p.elements if circle_crossing_count(d, s) >= 1
            ]
            if hit != [i, j]:
                return False
    return True


def fig4_abstract_pattern():
    """Abstract 4-element hypergraph whose edges are all 15 non-empty
    subsets, with the empty trace available: a shattered 4-set."""
    raw = []
    for mask in range(1, 16):
        raw.append([i for i in range(4) if (mask >> i) & 1])
    h = canonicalize(raw, 4)
    return replace_empty_trace(h, True)


FIXTURES = ("star", "fig4", "counterexample")


def fixture_by_name(name, seed=0):
    """Resolve a fixture spec like 'star', 'fig4', 'counterexample:8'.

    Returns ('family', P, F-or-None) or ('hypergraph', H, None).
    """
    if name == "star":
        return "family", star_fixture(), None
    if name == "fig4":
        return "hypergraph", fig4_abstract_pattern(), None
    if name.startswith("counterexample"):
        n = 5
        if ":" in name:
            try:
                n = int(name.split(":", 1)[1])
            except ValueError as exc:
                raise InputError(f"bad fixture size in {name!r}") from exc
        p, f = pairwise_intersecting_circles(n, seed)
        return "family", p, f
    raise InputError(f"unknown fixture {name!r}")
