# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: grid-accelerated circle intersection lists and
the bitmask trace-enumeration check behind the shattering search.

Semantics must stay bit-identical to ``_kernels_py``; the test suite
compares the two backends on random inputs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor

NAME = "cython"


cdef inline long _cell(double v, double cell):
    return <long>floor(v / cell)


def disk_hit_lists(pcx, pcy, pr, fcx, fcy, fr, double cell, int mode, double tol=0.0):
    """For each range circle in F, list indices of P it intersects.

    mode 0: closed-disk intersection; mode 1: boundary crossing (>= 1
    crossing point). Returns a list of sorted index lists.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] px = np.ascontiguousarray(pcx, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] py = np.ascontiguousarray(pcy, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] prr = np.ascontiguousarray(pr, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] fx = np.ascontiguousarray(fcx, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] fy = np.ascontiguousarray(fcy, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] frr = np.ascontiguousarray(fr, dtype=np.float64)
    cdef Py_ssize_t n = px.shape[0], m = fx.shape[0]
    cdef Py_ssize_t i, j, k, ncand
    cdef long ix, iy, ix0, ix1, iy0, iy1
    cdef double dx, dy, d2, rs, rd

    grid = {}
    for i in range(n):
        ix0 = _cell(px[i] - prr[i], cell)
        ix1 = _cell(px[i] + prr[i], cell)
        iy0 = _cell(py[i] - prr[i], cell)
        iy1 = _cell(py[i] + prr[i], cell)
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                key = (ix, iy)
                bucket = grid.get(key)
                if bucket is None:
                    grid[key] = [i]
                else:
                    bucket.append(i)

    cdef cnp.ndarray[cnp.int64_t, ndim=1] stamp = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cand = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] stamp_v = stamp
    cdef cnp.int64_t[:] cand_v = cand

    out = []
    for j in range(m):
        ix0 = _cell(fx[j] - frr[j], cell)
        ix1 = _cell(fx[j] + frr[j], cell)
        iy0 = _cell(fy[j] - frr[j], cell)
        iy1 = _cell(fy[j] + frr[j], cell)
        ncand = 0
        for ix in range(ix0, ix1 + 1):
            for iy in range(iy0, iy1 + 1):
                bucket = grid.get((ix, iy))
                if bucket is not None:
                    for idx in bucket:
                        i = <Py_ssize_t>idx
                        if stamp_v[i] != j:
                            stamp_v[i] = j
                            cand_v[ncand] = i
                            ncand += 1
        hits = []
        cand[:ncand].sort()
        for k in range(ncand):
            i = cand_v[k]
            dx = px[i] - fx[j]
            dy = py[i] - fy[j]
            d2 = dx * dx + dy * dy
            rs = prr[i] + frr[j]
            if d2 > rs * rs + tol:
                continue
            if mode == 1:
                rd = prr[i] - frr[j]
                if d2 < rd * rd - tol:
                    continue
            hits.append(i)
        out.append(hits)
    return out


def all_traces_realized(masks, kmask, positions, empty_trace):
    """True iff every subset of the bits in kmask occurs as mask & kmask.

    Requires the ground set to fit in 64 bits; wider hypergraphs use the
    pure backend.
    """
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] mk = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] pos = np.ascontiguousarray(positions, dtype=np.int64)
    cdef cnp.uint64_t km = <cnp.uint64_t>kmask
    cdef Py_ssize_t nm = mk.shape[0], d = pos.shape[0]
    cdef Py_ssize_t i, j
    cdef unsigned long want = 1UL << d
    cdef unsigned long idx, found = 0
    cdef cnp.uint64_t t

    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(want, dtype=np.uint8)
    cdef cnp.uint8_t[:] seen_v = seen
    if empty_trace:
        seen_v[0] = 1
        found = 1
    for i in range(nm):
        t = mk[i] & km
        idx = 0
        for j in range(d):
            idx |= ((t >> pos[j]) & 1UL) << j
        if not seen_v[idx]:
            seen_v[idx] = 1
            found += 1
            if found == want:
                return True
    return found == want
