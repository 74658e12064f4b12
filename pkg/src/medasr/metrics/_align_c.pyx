# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edit-distance kernel.

Same contract as ``_align_py.align_counts_ids`` but over int32 id buffers;
the hot WER/CER scoring loop spends nearly all of its time here.
"""

from libc.stdlib cimport free, malloc


def align_counts_ids(int[::1] ref, int[::1] hyp):
    """(substitutions, deletions, insertions) from the canonical backtrace.

    Diagonal moves are preferred over deletions over insertions, matching the
    pure-Python kernel exactly.
    """
    cdef Py_ssize_t n = ref.shape[0]
    cdef Py_ssize_t m = hyp.shape[0]
    cdef Py_ssize_t width = m + 1
    cdef int *d = <int *> malloc((n + 1) * width * sizeof(int))
    if d == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, base, prev
    cdef int best, up, left, cost, ri
    cdef int subs = 0, dels = 0, ins = 0
    try:
        for j in range(width):
            d[j] = <int> j
        for i in range(1, n + 1):
            base = i * width
            prev = base - width
            d[base] = <int> i
            ri = ref[i - 1]
            for j in range(1, width):
                best = d[prev + j - 1] + (0 if ri == hyp[j - 1] else 1)
                up = d[prev + j] + 1
                if up < best:
                    best = up
                left = d[base + j - 1] + 1
                if left < best:
                    best = left
                d[base + j] = best

        i = n
        j = m
        while i > 0 or j > 0:
            best = d[i * width + j]
            if i > 0 and j > 0:
                cost = 0 if ref[i - 1] == hyp[j - 1] else 1
                if d[(i - 1) * width + j - 1] + cost == best:
                    subs += cost
                    i -= 1
                    j -= 1
                    continue
            if i > 0 and d[(i - 1) * width + j] + 1 == best:
                dels += 1
                i -= 1
                continue
            ins += 1
            j -= 1
    finally:
        free(d)
    return subs, dels, ins
