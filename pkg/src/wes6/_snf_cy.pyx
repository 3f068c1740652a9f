# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith normal form kernel over int64 with overflow detection.

Mirrors the elimination sequence of ``_snf_py.snf_triple`` exactly.  Any
arithmetic that would leave the int64 range raises OverflowError; the
dispatcher in ``backend`` then redoes the whole computation with the
arbitrary-precision Python backend, so results are bit-identical either way.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    /* The pointee type must be spelled exactly like Cython's (long long):
       int64_t aliases plain long on LP64, and writing through a long*
       while reading through a long long* is a strict-aliasing violation
       that lets the optimizer cache values across the write. */
    static int w6_mul(long long a, long long b, long long *r)
        { return __builtin_mul_overflow(a, b, r); }
    static int w6_add(long long a, long long b, long long *r)
        { return __builtin_add_overflow(a, b, r); }
    static int w6_sub(long long a, long long b, long long *r)
        { return __builtin_sub_overflow(a, b, r); }
    """
    int w6_mul(long long a, long long b, long long *r) nogil
    int w6_add(long long a, long long b, long long *r) nogil
    int w6_sub(long long a, long long b, long long *r) nogil


cdef inline long long _floordiv(long long x, long long p) nogil:
    # C division truncates toward zero; match Python's floor division.
    cdef long long q = x / p
    if (x % p != 0) and ((x < 0) != (p < 0)):
        q -= 1
    return q


cdef int _axpy(long long *row_i, long long *row_t, long long q,
               Py_ssize_t start, Py_ssize_t stop) nogil:
    # row_i[k] -= q * row_t[k]; returns nonzero on overflow.
    cdef Py_ssize_t k
    cdef long long prod
    for k in range(start, stop):
        if w6_mul(q, row_t[k], &prod):
            return 1
        if w6_sub(row_i[k], prod, &row_i[k]):
            return 1
    return 0


def snf_triple(entries, Py_ssize_t m, Py_ssize_t n):
    """int64 counterpart of ``_snf_py.snf_triple``.

    Raises OverflowError when the input or any intermediate entry leaves
    the int64 range.
    """
    cdef long long *a = NULL
    cdef long long *u = NULL
    cdef long long *v = NULL
    cdef Py_ssize_t i, j, k, t, pi, pj
    cdef long long x, p, q, best, tmp
    cdef int dirty, folded, err = 0

    a = <long long *> malloc(m * n * sizeof(long long))
    u = <long long *> malloc(m * m * sizeof(long long))
    v = <long long *> malloc(n * n * sizeof(long long))
    if a == NULL or u == NULL or v == NULL:
        free(a); free(u); free(v)
        raise MemoryError()

    try:
        for i in range(m):
            row = entries[i]
            for j in range(n):
                a[i * n + j] = row[j]  # raises OverflowError if too large
        for i in range(m):
            for j in range(m):
                u[i * m + j] = 1 if i == j else 0
        for i in range(n):
            for j in range(n):
                v[i * n + j] = 1 if i == j else 0

        t = 0
        while t < m and t < n and err == 0:
            pi = -1
            pj = -1
            best = 0
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i * n + j]
                    if x != 0:
                        if x < 0:
                            if x == <long long> (-0x7fffffffffffffff - 1):
                                err = 1
                                break
                            x = -x
                        if pi < 0 or x < best:
                            best = x
                            pi = i
                            pj = j
                if err:
                    break
            if err:
                break
            if pi < 0:
                break

            if pi != t:
                for k in range(n):
                    tmp = a[t * n + k]; a[t * n + k] = a[pi * n + k]; a[pi * n + k] = tmp
                for k in range(m):
                    tmp = u[t * m + k]; u[t * m + k] = u[pi * m + k]; u[pi * m + k] = tmp
            if pj != t:
                for k in range(m):
                    tmp = a[k * n + t]; a[k * n + t] = a[k * n + pj]; a[k * n + pj] = tmp
                for k in range(n):
                    tmp = v[k * n + t]; v[k * n + t] = v[k * n + pj]; v[k * n + pj] = tmp

            p = a[t * n + t]

            dirty = 0
            for i in range(t + 1, m):
                x = a[i * n + t]
                if x != 0:
                    q = _floordiv(x, p)
                    if q != 0:
                        if _axpy(a + i * n, a + t * n, q, t, n):
                            err = 1
                            break
                        if _axpy(u + i * m, u + t * m, q, 0, m):
                            err = 1
                            break
                    if a[i * n + t] != 0:
                        dirty = 1
            if err:
                break
            if dirty:
                continue

            for j in range(t + 1, n):
                x = a[t * n + j]
                if x != 0:
                    q = _floordiv(x, p)
                    if q != 0:
                        for i in range(m):
                            if w6_mul(q, a[i * n + t], &tmp):
                                err = 1
                                break
                            if w6_sub(a[i * n + j], tmp, &a[i * n + j]):
                                err = 1
                                break
                        if err == 0:
                            for i in range(n):
                                if w6_mul(q, v[i * n + t], &tmp):
                                    err = 1
                                    break
                                if w6_sub(v[i * n + j], tmp, &v[i * n + j]):
                                    err = 1
                                    break
                        if err:
                            break
                    if a[t * n + j] != 0:
                        dirty = 1
            if err:
                break
            if dirty:
                continue

            folded = 0
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i * n + j] % p != 0:
                        for k in range(t, n):
                            if w6_add(a[t * n + k], a[i * n + k], &a[t * n + k]):
                                err = 1
                                break
                        if err == 0:
                            for k in range(m):
                                if w6_add(u[t * m + k], u[i * m + k], &u[t * m + k]):
                                    err = 1
                                    break
                        folded = 1
                        break
                if folded or err:
                    break
            if err:
                break
            if folded:
                continue

            if p < 0:
                for k in range(t, n):
                    a[t * n + k] = -a[t * n + k]
                for k in range(m):
                    u[t * m + k] = -u[t * m + k]
            t += 1

        if err:
            raise OverflowError("int64 overflow in SNF kernel")

        u_out = [[u[i * m + j] for j in range(m)] for i in range(m)]
        d_out = [[a[i * n + j] for j in range(n)] for i in range(m)]
        v_out = [[v[i * n + j] for j in range(n)] for i in range(n)]
        return u_out, d_out, v_out
    finally:
        free(a)
        free(u)
        free(v)
