# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: dominance filtering, non-dominated sorting, and the
streaming exhaustive enumerator.  Mirrors ``pykernels`` exactly; all inputs
are minimize-oriented float64 matrices."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "compiled"


cdef inline int _dominates(const double* a, const double* b, Py_ssize_t m) noexcept nogil:
    # a dominates b: a <= b everywhere, strictly better somewhere.
    cdef Py_ssize_t j
    cdef int strict = 0
    for j in range(m):
        if a[j] > b[j]:
            return 0
        if a[j] < b[j]:
            strict = 1
    return strict


def nondominated_mask(values):
    """Boolean mask of rows not dominated by any other row (minimization)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] vals = \
        np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t m = vals.shape[1]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] mask = np.ones(n, dtype=np.uint8)
    cdef double* base = <double*> vals.data
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(n):
            for j in range(n):
                if j != i and _dominates(base + j * m, base + i * m, m):
                    mask[i] = 0
                    break
    return mask.astype(bool)


def nondominated_rank(values):
    """Non-dominated sorting ranks: 0 for the front, peeling outward."""
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] vals = \
        np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t n = vals.shape[0]
    cdef Py_ssize_t m = vals.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] counts = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ranks = np.full(n, -1, dtype=np.int64)
    # dom_flat[i*n + j] = 1 when i dominates j
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] dom_flat = np.zeros(n * n, dtype=np.uint8)
    cdef double* base = <double*> vals.data
    cdef Py_ssize_t i, j
    cdef cnp.int64_t rank = 0
    cdef Py_ssize_t assigned = 0
    with nogil:
        for i in range(n):
            for j in range(n):
                if j != i and _dominates(base + i * m, base + j * m, m):
                    dom_flat[i * n + j] = 1
                    counts[j] += 1
        while assigned < n:
            for i in range(n):
                if ranks[i] == -1 and counts[i] == 0:
                    ranks[i] = rank
                    assigned += 1
            for i in range(n):
                if ranks[i] == rank:
                    for j in range(n):
                        if dom_flat[i * n + j]:
                            counts[j] -= 1
            rank += 1
    return ranks


def enumerate_front(mats):
    """Streaming exhaustive enumeration of one-row-per-matrix combinations.

    Returns ``(choices, sums)`` of the non-dominated combinations; the
    objective of a combination is the sum of the selected rows (dominance is
    invariant to the 1/N mean rescaling).  Equivalent to enumerating
    everything and filtering at the end, but memory stays bounded by the
    front size.
    """
    cdef list cmats = [np.ascontiguousarray(a, dtype=np.float64) for a in mats]
    cdef Py_ssize_t n_cat = len(cmats)
    cdef Py_ssize_t m = (<cnp.ndarray> cmats[0]).shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sizes = np.array(
        [(<cnp.ndarray> a).shape[0] for a in cmats], dtype=np.int64)

    # Flatten category matrices into one buffer with per-category offsets.
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] data = \
        np.concatenate(cmats, axis=0)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] offsets = np.zeros(n_cat, dtype=np.int64)
    cdef Py_ssize_t i
    for i in range(1, n_cat):
        offsets[i] = offsets[i - 1] + sizes[i - 1]

    cdef cnp.ndarray[cnp.int64_t, ndim=1] digits = np.zeros(n_cat, dtype=np.int64)
    # prefix[p] = sum of rows chosen for categories 0..p-1
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] prefix = \
        np.zeros((n_cat + 1, m), dtype=np.float64)

    cdef Py_ssize_t cap = 1024
    cdef cnp.ndarray[cnp.float64_t, ndim=2, mode="c"] arch_vals = \
        np.empty((cap, m), dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2, mode="c"] arch_choices = \
        np.empty((cap, n_cat), dtype=np.int64)
    cdef Py_ssize_t count = 0

    cdef double* dptr = <double*> data.data
    cdef double* pptr = <double*> prefix.data
    cdef double* avptr = <double*> arch_vals.data
    cdef cnp.int64_t* acptr = <cnp.int64_t*> arch_choices.data

    cdef Py_ssize_t p, j, k, w, pos, row
    cdef const double* cand
    cdef int skip

    for p in range(n_cat):
        row = offsets[p] + digits[p]
        for j in range(m):
            pptr[(p + 1) * m + j] = pptr[p * m + j] + dptr[row * m + j]

    while True:
        cand = pptr + n_cat * m
        # archive update: skip if dominated, else evict dominated members
        skip = 0
        for k in range(count):
            if _dominates(avptr + k * m, cand, m):
                skip = 1
                break
        if not skip:
            w = 0
            for k in range(count):
                if not _dominates(cand, avptr + k * m, m):
                    if w != k:
                        for j in range(m):
                            avptr[w * m + j] = avptr[k * m + j]
                        for j in range(n_cat):
                            acptr[w * n_cat + j] = acptr[k * n_cat + j]
                    w += 1
            count = w
            if count == cap:
                cap *= 2
                arch_vals = np.resize(arch_vals, (cap, m))
                arch_choices = np.resize(arch_choices, (cap, n_cat))
                avptr = <double*> arch_vals.data
                acptr = <cnp.int64_t*> arch_choices.data
            for j in range(m):
                avptr[count * m + j] = cand[j]
            for j in range(n_cat):
                acptr[count * n_cat + j] = digits[j]
            count += 1

        # odometer: rightmost category is the fastest digit
        pos = n_cat - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < sizes[pos]:
                break
            digits[pos] = 0
            pos -= 1
        if pos < 0:
            break
        # refresh prefix sums from the bumped position onward
        for p in range(pos, n_cat):
            row = offsets[p] + digits[p]
            for j in range(m):
                pptr[(p + 1) * m + j] = pptr[p * m + j] + dptr[row * m + j]

    return arch_choices[:count].copy(), arch_vals[:count].copy()
