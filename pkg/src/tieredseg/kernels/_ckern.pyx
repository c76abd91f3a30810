# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels.

Bit-compatible with ``numpy_backend``: same signatures, same tie-breaking,
same floating-point evaluation order.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, fabs
from libc.string cimport memcpy

cnp.import_array()


def im2col(cnp.ndarray[double, ndim=4, mode="c"] x, int k):
    cdef Py_ssize_t b = x.shape[0], c = x.shape[1], hp = x.shape[2], wp = x.shape[3]
    cdef Py_ssize_t ho = hp - k + 1, wo = wp - k + 1
    cdef cnp.ndarray[double, ndim=3, mode="c"] out = np.empty((b, c * k * k, ho * wo))
    cdef double[:, :, :, ::1] xv = x
    cdef double[:, :, ::1] ov = out
    cdef Py_ssize_t ib, ic, ky, kx, y, row
    for ib in range(b):
        for ic in range(c):
            for ky in range(k):
                for kx in range(k):
                    row = (ic * k + ky) * k + kx
                    for y in range(ho):
                        memcpy(&ov[ib, row, y * wo], &xv[ib, ic, y + ky, kx],
                               wo * sizeof(double))
    return out


def maxpool2x2(cnp.ndarray[double, ndim=4, mode="c"] x):
    cdef Py_ssize_t b = x.shape[0], c = x.shape[1], h = x.shape[2], w = x.shape[3]
    cdef Py_ssize_t ho = h // 2, wo = w // 2
    cdef cnp.ndarray[double, ndim=4, mode="c"] out = np.empty((b, c, ho, wo))
    cdef cnp.ndarray[cnp.uint8_t, ndim=4, mode="c"] idx = np.empty((b, c, ho, wo), dtype=np.uint8)
    cdef double[:, :, :, ::1] xv = x
    cdef double[:, :, :, ::1] ov = out
    cdef cnp.uint8_t[:, :, :, ::1] iv = idx
    cdef Py_ssize_t ib, ic, y, z, p
    cdef double best, v
    cdef int bp
    for ib in range(b):
        for ic in range(c):
            for y in range(ho):
                for z in range(wo):
                    best = xv[ib, ic, 2 * y, 2 * z]
                    bp = 0
                    for p in range(1, 4):
                        v = xv[ib, ic, 2 * y + (p >> 1), 2 * z + (p & 1)]
                        if v > best:
                            best = v
                            bp = <int> p
                    ov[ib, ic, y, z] = best
                    iv[ib, ic, y, z] = <cnp.uint8_t> bp
    return out, idx


def maxpool2x2_backward(cnp.ndarray[double, ndim=4, mode="c"] grad,
                        cnp.ndarray[cnp.uint8_t, ndim=4, mode="c"] idx):
    cdef Py_ssize_t b = grad.shape[0], c = grad.shape[1], ho = grad.shape[2], wo = grad.shape[3]
    cdef cnp.ndarray[double, ndim=4, mode="c"] out = np.zeros((b, c, 2 * ho, 2 * wo))
    cdef double[:, :, :, ::1] gv = grad
    cdef double[:, :, :, ::1] ov = out
    cdef cnp.uint8_t[:, :, :, ::1] iv = idx
    cdef Py_ssize_t ib, ic, y, z
    cdef int p
    for ib in range(b):
        for ic in range(c):
            for y in range(ho):
                for z in range(wo):
                    p = <int> iv[ib, ic, y, z]
                    ov[ib, ic, 2 * y + (p >> 1), 2 * z + (p & 1)] = gv[ib, ic, y, z]
    return out


def viterbi_path(cnp.ndarray[double, ndim=2, mode="c"] cost,
                 cnp.ndarray[cnp.int64_t, ndim=1] floor,
                 double lam, int jump):
    cdef Py_ssize_t h = cost.shape[0], w = cost.shape[1]
    cdef cnp.ndarray[double, ndim=2, mode="c"] d = np.empty((h, w))
    cdef cnp.ndarray[cnp.int64_t, ndim=1] path = np.empty(w, dtype=np.int64)
    cdef double[:, ::1] cv = cost
    cdef double[:, ::1] dv = d
    cdef cnp.int64_t[:] fv = floor
    cdef cnp.int64_t[:] pv = path
    cdef Py_ssize_t j, r, lo, hi, step
    cdef double move, nxt_min, best_val, v
    cdef cnp.ndarray[double, ndim=1] best = np.empty(h)
    cdef double[::1] bv = best

    for r in range(h):
        dv[r, w - 1] = INFINITY if r <= fv[w - 1] else cv[r, w - 1]
    for j in range(w - 2, -1, -1):
        nxt_min = INFINITY
        for r in range(h):
            bv[r] = INFINITY
            if dv[r, j + 1] < nxt_min:
                nxt_min = dv[r, j + 1]
        for step in range(-jump, jump + 1):
            lo = -step if step < 0 else 0
            hi = h - step if step > 0 else h
            if lo >= hi:
                continue
            move = lam * fabs(<double> step)
            for r in range(lo, hi):
                v = dv[r + step, j + 1] + move
                if v < bv[r]:
                    bv[r] = v
        v = nxt_min + lam * jump
        for r in range(h):
            if v < bv[r]:
                bv[r] = v
            dv[r, j] = INFINITY if r <= fv[j] else cv[r, j] + bv[r]

    best_val = dv[0, 0]
    pv[0] = 0
    for r in range(1, h):
        if dv[r, 0] < best_val:
            best_val = dv[r, 0]
            pv[0] = r
    for j in range(1, w):
        best_val = INFINITY
        pv[j] = 0
        for r in range(h):
            move = fabs(<double> (r - pv[j - 1]))
            if move > jump:
                move = jump
            v = dv[r, j] + lam * move
            if v < best_val:
                best_val = v
                pv[j] = r
    return path
