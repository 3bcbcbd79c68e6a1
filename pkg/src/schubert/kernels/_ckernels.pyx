# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; same contract as ``_pykernels``."""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc

BACKEND = "cython"

cdef enum:
    MAXVARS = 64


cdef tuple _pack(int* e, int n):
    cdef int k
    cdef object item
    while n > 0 and e[n - 1] == 0:
        n -= 1
    cdef tuple t = PyTuple_New(n)
    for k in range(n):
        item = e[k]
        Py_INCREF(item)
        PyTuple_SET_ITEM(t, k, item)
    return t


cdef int _load(tuple exps, int* e, int width) except -1:
    cdef Py_ssize_t n = len(exps)
    cdef int k
    if n > MAXVARS or width > MAXVARS:
        raise OverflowError("too many variables for compiled kernel")
    for k in range(n):
        e[k] = exps[k]
    for k in range(n, width):
        e[k] = 0
    return n if n > width else width


def swap(dict terms, int i):
    cdef int e[MAXVARS]
    cdef int w, tmp
    cdef dict out = {}
    for exps, c in terms.items():
        w = _load(<tuple>exps, e, i + 1)
        tmp = e[i - 1]
        e[i - 1] = e[i]
        e[i] = tmp
        out[_pack(e, w)] = c
    return out


def divided_difference(dict terms, int i):
    cdef int e[MAXVARS]
    cdef int w, a, b, lo, hi, p
    cdef dict out = {}
    cdef tuple key
    for exps, c in terms.items():
        w = _load(<tuple>exps, e, i + 1)
        a = e[i - 1]
        b = e[i]
        if a == b:
            continue
        if a > b:
            sign = c
            lo = b
            hi = a - 1
        else:
            sign = -c
            lo = a
            hi = b - 1
        for p in range(lo, hi + 1):
            e[i - 1] = p
            e[i] = lo + hi - p
            key = _pack(e, w)
            v = out.get(key, 0) + sign
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def multiply(dict a, dict b):
    cdef int eb[MAXVARS]
    cdef int es[MAXVARS]
    cdef int* ea
    cdef int* lens
    cdef int la, lb, w, k, j, na
    cdef dict out = {}
    cdef tuple key
    cdef list left_coeffs
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    ea = <int*>malloc(max(na, 1) * MAXVARS * sizeof(int))
    lens = <int*>malloc(max(na, 1) * sizeof(int))
    if ea == NULL or lens == NULL:
        free(ea)
        free(lens)
        raise MemoryError()
    try:
        left_coeffs = []
        j = 0
        for exps, c in a.items():
            lens[j] = _load(<tuple>exps, ea + j * MAXVARS, 0)
            left_coeffs.append(c)
            j += 1
        for exps, cb in b.items():
            lb = _load(<tuple>exps, eb, 0)
            for j in range(na):
                la = lens[j]
                w = la if la > lb else lb
                for k in range(w):
                    es[k] = (ea[j * MAXVARS + k] if k < la else 0) + (eb[k] if k < lb else 0)
                key = _pack(es, w)
                v = out.get(key, 0) + left_coeffs[j] * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
    finally:
        free(ea)
        free(lens)
    return out


def add_scaled(dict a, dict b, scale):
    cdef dict out = dict(a)
    if not scale:
        return out
    for key, c in b.items():
        v = out.get(key, 0) + scale * c
        if v:
            out[key] = v
        else:
            del out[key]
    return out
