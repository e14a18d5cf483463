# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_kernels_py``."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef struct System:
    int npolys
    int *nterms
    long **coeffs
    long **exps


cdef System *_pack(list polys, int nvars) except NULL:
    cdef System *sys = <System *> malloc(sizeof(System))
    if sys == NULL:
        raise MemoryError()
    cdef int n = len(polys)
    sys.npolys = n
    sys.nterms = <int *> malloc(max(n, 1) * sizeof(int))
    sys.coeffs = <long **> malloc(max(n, 1) * sizeof(long *))
    sys.exps = <long **> malloc(max(n, 1) * sizeof(long *))
    if sys.nterms == NULL or sys.coeffs == NULL or sys.exps == NULL:
        raise MemoryError()
    cdef int i, t
    for i in range(n):
        coeffs, exps = polys[i]
        t = len(coeffs)
        sys.nterms[i] = t
        sys.coeffs[i] = <long *> malloc(max(t, 1) * sizeof(long))
        sys.exps[i] = <long *> malloc(max(t * nvars, 1) * sizeof(long))
        if sys.coeffs[i] == NULL or sys.exps[i] == NULL:
            raise MemoryError()
        for k in range(t):
            sys.coeffs[i][k] = coeffs[k]
        for k in range(t * nvars):
            sys.exps[i][k] = exps[k]
    return sys


cdef void _release(System *sys):
    cdef int i
    if sys == NULL:
        return
    for i in range(sys.npolys):
        free(sys.coeffs[i])
        free(sys.exps[i])
    free(sys.nterms)
    free(sys.coeffs)
    free(sys.exps)
    free(sys)


cdef bint _vanishes(System *sys, long *point, long *pow_table,
                    int nvars, int stride, long p) nogil:
    cdef int i, k, v
    cdef long acc, term, e
    cdef long *exps
    for i in range(sys.npolys):
        acc = 0
        exps = sys.exps[i]
        for k in range(sys.nterms[i]):
            term = sys.coeffs[i][k]
            for v in range(nvars):
                e = exps[k * nvars + v]
                if e:
                    term = term * pow_table[point[v] * stride + e] % p
            acc = (acc + term) % p
        if acc:
            return False
    return True


def count_points(p, nvars, ambient, removed=None):
    """See ``_kernels_py.count_points``; identical semantics."""
    cdef long cp = p
    cdef int cn = nvars
    cdef long max_exp = 1
    cdef list all_polys = list(ambient) + (list(removed) if removed else [])
    for _, exps in all_polys:
        for exponent in exps:
            if exponent > max_exp:
                max_exp = exponent

    cdef int stride = max_exp + 1
    cdef long *pow_table = <long *> malloc(cp * stride * sizeof(long))
    cdef long *point = <long *> malloc(max(cn, 1) * sizeof(long))
    if pow_table == NULL or point == NULL:
        raise MemoryError()
    cdef System *amb = NULL
    cdef System *rem = NULL
    cdef long v, e, acc
    cdef long long total = 1, it
    cdef long long count = 0
    cdef int j
    cdef bint has_removed = removed is not None
    try:
        amb = _pack(list(ambient), cn)
        if has_removed:
            rem = _pack(list(removed), cn)
        for v in range(cp):
            acc = 1
            for e in range(stride):
                pow_table[v * stride + e] = acc
                acc = acc * v % cp
        for j in range(cn):
            point[j] = 0
            total *= cp
        with nogil:
            for it in range(total):
                if _vanishes(amb, point, pow_table, cn, stride, cp):
                    if not has_removed or not _vanishes(
                        rem, point, pow_table, cn, stride, cp
                    ):
                        count += 1
                for j in range(cn):
                    point[j] += 1
                    if point[j] < cp:
                        break
                    point[j] = 0
        return count
    finally:
        _release(amb)
        if has_removed:
            _release(rem)
        free(pow_table)
        free(point)
