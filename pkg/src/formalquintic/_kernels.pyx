# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython kernels for the hot arithmetic loops.

Same algorithms as ``_kernels_py``; coefficients stay generic Python
objects (exact rationals or cyclotomic numbers), the win comes from C
loop/index arithmetic and direct dict calls.
"""


def series_mul(list a, list b, Py_ssize_t n, zero):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t i, j, top
    cdef list out = [zero] * (n + 1)
    for i in range(min(la, n + 1)):
        ai = a[i]
        if not ai:
            continue
        top = lb
        if n + 1 - i < top:
            top = n + 1 - i
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def series_inv(list a, Py_ssize_t n, one):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t k, i, top
    c0 = one / a[0]
    cdef list out = [c0] * (n + 1)
    for k in range(1, n + 1):
        acc = None
        top = k
        if la - 1 < top:
            top = la - 1
        for i in range(1, top + 1):
            ai = a[i]
            if ai:
                t = ai * out[k - i]
                acc = t if acc is None else acc + t
        out[k] = -c0 * acc if acc is not None else (one - one) * c0
    return out


def genpoly_mul(dict a, dict b, offsum):
    cdef dict out = {}
    if len(a) > len(b):
        a, b = b, a
    for ka, ca in a.items():
        base = ka - offsum
        for kb, cb in b.items():
            k = base + kb
            c = ca * cb
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out
