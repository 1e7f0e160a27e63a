# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled max-min closure kernel over a flat int64 buffer."""


def maxmin_closure(long long[::1] w, Py_ssize_t n):
    """In-place max-min transitive closure of a flat n*n int64 matrix.

    Same contract as the pure-Python kernel: row-major buffer, diagonal
    preloaded with a sentinel larger than every off-diagonal value (which
    turns the k == i and k == j iterations into no-ops).
    """
    cdef Py_ssize_t i, j, k, kbase, base
    cdef long long wik, kv, cand
    with nogil:
        for k in range(n):
            kbase = k * n
            for i in range(n):
                wik = w[i * n + k]
                if wik <= 0:
                    continue
                base = i * n
                for j in range(n):
                    kv = w[kbase + j]
                    cand = wik if kv > wik else kv
                    if cand > w[base + j]:
                        w[base + j] = cand
