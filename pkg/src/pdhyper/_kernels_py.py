"""Pure-Python/numpy implementations of the hot kernels.

Mirrors the compiled extension in ``_kernels.pyx``; both backends must
produce bit-identical results so either can back the public API.
"""

import numpy as np

NAME = "pure"


def _grid_cells(lo_x, lo_y, hi_x, hi_y, cell):
    ix0 = int(np.floor(lo_x / cell))
    ix1 = int(np.floor(hi_x / cell))
    iy0 = int(np.floor(lo_y / cell))
    iy1 = int(np.floor(hi_y / cell))
    return ix0, ix1, iy0, iy1


def disk_hit_lists(pcx, pcy, pr, fcx, fcy, fr, cell, mode, tol=0.0):
    """For each range circle in F, list indices of P it intersects.

    mode 0: closed-disk intersection; mode 1: boundary crossing (>= 1
    crossing point, so nested or disjoint circles do not count).
    Returns a list of sorted index lists, accelerated by a uniform grid
    over the bounding boxes of P.
    """
    pcx = np.asarray(pcx, dtype=np.float64)
    pcy = np.asarray(pcy, dtype=np.float64)
    pr = np.asarray(pr, dtype=np.float64)
    fcx = np.asarray(fcx, dtype=np.float64)
    fcy = np.asarray(fcy, dtype=np.float64)
    fr = np.asarray(fr, dtype=np.float64)
    n = pcx.shape[0]

    grid = {}
    for i in range(n):
        ix0, ix1, iy0, iy1 = _grid_cells(
            pcx[i] - pr[i], pcy[i] - pr[i], pcx[i] + pr[i], pcy[i] + pr[i], cell
        )
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                grid.setdefault((ix, iy), []).append(i)

    out = []
    for j in range(fcx.shape[0]):
        ix0, ix1, iy0, iy1 = _grid_cells(
            fcx[j] - fr[j], fcy[j] - fr[j], fcx[j] + fr[j], fcy[j] + fr[j], cell
        )
        cand = set()
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                bucket = grid.get((ix, iy))
                if bucket:
                    cand.update(bucket)
        hits = []
        for i in sorted(cand):
            dx = pcx[i] - fcx[j]
            dy = pcy[i] - fcy[j]
            d2 = dx * dx + dy * dy
            rs = pr[i] + fr[j]
            if d2 > rs * rs + tol:
                continue
            if mode == 1:
                rd = pr[i] - fr[j]
                if d2 < rd * rd - tol:
                    continue
            hits.append(i)
        out.append(hits)
    return out


def all_traces_realized(masks, kmask, positions, empty_trace):
    """True iff every subset of the bits in kmask occurs as mask & kmask.

    The empty subset counts as realized when empty_trace is set or some
    mask is disjoint from kmask. Works with arbitrary-width Python ints.
    """
    d = len(positions)
    want = 1 << d
    seen = bytearray(want)
    found = 0
    if empty_trace:
        seen[0] = 1
        found = 1
    for m in masks:
        t = int(m) & kmask
        idx = 0
        for j, p in enumerate(positions):
            idx |= ((t >> p) & 1) << j
        if not seen[idx]:
            seen[idx] = 1
            found += 1
            if found == want:
                return True
    return found == want
