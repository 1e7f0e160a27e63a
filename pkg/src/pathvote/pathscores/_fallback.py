"""Pure-Python max-min closure kernel, used when the compiled one is absent."""

from __future__ import annotations


def maxmin_closure(w, n: int) -> None:
    """In-place max-min transitive closure of a flat n*n int matrix.

    ``w`` is a row-major buffer of length n*n whose diagonal holds a sentinel
    larger than every off-diagonal value.  After the call, w[i*n+j] is the
    maximum over all paths i -> j of the minimum entry along the path.  The
    sentinel diagonal makes the k == i and k == j iterations no-ops, so the
    loops need no index tests.
    """
    rng = range(n)
    for k in rng:
        kbase = k * n
        krow = w[kbase:kbase + n]
        for i in rng:
            wik = w[i * n + k]
            if wik <= 0:
                # min(w[i][k], ...) could never beat any nonnegative entry.
                continue
            base = i * n
            row = w[base:base + n]
            w[base:base + n] = [
                wv if wv >= wik else (wik if kv >= wik else (kv if kv > wv else wv))
                for wv, kv in zip(row, krow)
            ]
