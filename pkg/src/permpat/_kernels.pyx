# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matching kernels.

Same contract as ``permpat._kernels_py``; selected at import time by
``permpat.backend`` when available.
"""
from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


cdef inline void _fail_alloc(void* p) except *:
    if p == NULL:
        raise MemoryError()


def count_pattern(pattern, text, bint pin_first=False, long long limit=0):
    """Count order-isomorphic occurrences of pattern in text.

    Backtracking over pattern positions with value-interval pruning;
    pin_first forces the first pattern element onto the first text element;
    a positive limit stops the search early (limit=1 is detection).
    """
    cdef Py_ssize_t k = len(pattern)
    cdef Py_ssize_t n = len(text)
    if k == 0:
        raise ValueError("empty pattern")
    if k > n:
        return 0

    cdef long* pat = <long*> malloc(k * sizeof(long))
    _fail_alloc(pat)
    cdef long* txt = <long*> malloc(n * sizeof(long))
    cdef Py_ssize_t* pred = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    cdef Py_ssize_t* succ = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    cdef long* val = <long*> malloc(k * sizeof(long))
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    if txt == NULL or pred == NULL or succ == NULL or val == NULL or idx == NULL:
        free(pat); free(txt); free(pred); free(succ); free(val); free(idx)
        raise MemoryError()

    cdef Py_ssize_t j, p, i, last
    cdef long lo, hi, v, pj
    cdef long long total = 0
    cdef bint descended, done = False
    try:
        for j in range(k):
            pat[j] = pattern[j]
        for i in range(n):
            txt[i] = text[i]

        for j in range(k):
            pred[j] = -1
            succ[j] = -1
            lo = 0
            hi = k + 1
            pj = pat[j]
            for p in range(j):
                if lo < pat[p] < pj:
                    lo = pat[p]
                    pred[j] = p
                elif pj < pat[p] < hi:
                    hi = pat[p]
                    succ[j] = p

        j = 0
        i = 0
        with nogil:
            while not done:
                lo = val[pred[j]] if pred[j] >= 0 else 0
                hi = val[succ[j]] if succ[j] >= 0 else n + 1
                last = 0 if (pin_first and j == 0) else n - (k - j)
                descended = False
                if j == k - 1:
                    while i <= last:
                        if lo < txt[i] < hi:
                            total += 1
                            if limit and total >= limit:
                                done = True
                                break
                        i += 1
                else:
                    while i <= last:
                        v = txt[i]
                        if lo < v < hi:
                            idx[j] = i
                            val[j] = v
                            j += 1
                            i += 1
                            descended = True
                            break
                        i += 1
                if descended:
                    continue
                if j == 0:
                    break
                j -= 1
                i = idx[j] + 1
        return total
    finally:
        free(pat); free(txt); free(pred); free(succ); free(val); free(idx)


def count_inversions(values):
    """Number of pairs i < j with values[i] > values[j], by merge counting."""
    cdef Py_ssize_t n = len(values)
    if n < 2:
        return 0
    cdef long* a = <long*> malloc(n * sizeof(long))
    _fail_alloc(a)
    cdef long* buf = <long*> malloc(n * sizeof(long))
    if buf == NULL:
        free(a)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long inv
    try:
        for i in range(n):
            a[i] = values[i]
        with nogil:
            inv = _merge_count(a, buf, 0, n)
        return inv
    finally:
        free(a)
        free(buf)


cdef long long _merge_count(long* a, long* buf, Py_ssize_t lo, Py_ssize_t hi) noexcept nogil:
    if hi - lo <= 1:
        return 0
    cdef Py_ssize_t mid = (lo + hi) // 2
    cdef long long inv = _merge_count(a, buf, lo, mid) + _merge_count(a, buf, mid, hi)
    cdef Py_ssize_t i = lo, j = mid, t = lo
    while i < mid and j < hi:
        if a[i] <= a[j]:
            buf[t] = a[i]
            i += 1
        else:
            buf[t] = a[j]
            j += 1
            inv += mid - i
        t += 1
    while i < mid:
        buf[t] = a[i]
        i += 1
        t += 1
    while j < hi:
        buf[t] = a[j]
        j += 1
        t += 1
    for t in range(lo, hi):
        a[t] = buf[t]
    return inv
