"""Max-min path scores: the widest-path closure of a Llull matrix.

The path score of (x, y) is the maximum over all simple paths from x to y of
the minimum score along the path; it revises the direct score upward whenever
indirect evidence is stronger (a conclusion deserves at least the belief of
the weakest premise on its best chain).  It is computed with the max-min
Floyd-Warshall recurrence

    w(x, y) <- max(w(x, y), min(w(x, k), w(k, y)))

which needs no explicit simple-path bookkeeping: scores are nonnegative, so
the min along a walk never beats the min along the walk with its loops cut
out.

Exact rationals stay exact here, at compiled speed, through a rank trick: the
recurrence only ever *selects* among existing entries (max/min never create
new values), and any strictly increasing map commutes with max and min.  So
the distinct entries are mapped to their integer ranks, the closure runs on
an int64 matrix (compiled kernel when built, pure Python otherwise), and the
ranks are mapped back.
"""

from __future__ import annotations

from array import array
from fractions import Fraction

from pathvote.ballots import DEFAULT
from pathvote.llull import (
    ABSOLUTE,
    PATH_ABSOLUTE,
    PATH_RELATIVE,
    RELATIVE,
    ScoreMatrix,
)

try:
    from pathvote.pathscores import _core

    BACKEND = "compiled"
except ImportError:
    _core = None
    BACKEND = "python"

from pathvote.pathscores import _fallback

_RESULT_KIND = {ABSOLUTE: PATH_ABSOLUTE, RELATIVE: PATH_RELATIVE}


def _run_kernel(ranks: list[int], n: int, backend: str) -> list[int]:
    if backend == "compiled":
        if _core is None:
            raise RuntimeError("compiled kernel is not available")
        buffer = array("q", ranks)
        _core.maxmin_closure(buffer, n)
        return list(buffer)
    if backend == "python":
        _fallback.maxmin_closure(ranks, n)
        return ranks
    raise ValueError("unknown backend %r" % backend)


def path_scores(m: ScoreMatrix, backend: str | None = None) -> ScoreMatrix:
    """The max-min closure of an absolute or relative Llull matrix.

    Every result entry dominates the corresponding input entry, and the
    operation is idempotent.  ``backend`` forces a kernel ("compiled" or
    "python") and is mainly for benchmarks; by default the compiled one is
    used when it was built.
    """
    kind = _RESULT_KIND.get(m.kind)
    if kind is None:
        raise ValueError("expected an absolute or relative matrix, got %s" % m.kind)
    if backend is None:
        backend = BACKEND
    options = m.options
    n = len(options)

    values = sorted({Fraction(0), *m.scores.values()})
    rank = {value: r for r, value in enumerate(values)}
    sentinel = len(values)

    ranks = [sentinel] * (n * n)
    for i, x in enumerate(options):
        base = i * n
        for j, y in enumerate(options):
            if i != j:
                ranks[base + j] = rank[m.score(x, y)]

    ranks = _run_kernel(ranks, n, backend)

    scores = {}
    for i, x in enumerate(options):
        base = i * n
        for j, y in enumerate(options):
            if i != j:
                scores[(x, y)] = values[ranks[base + j]]
    return ScoreMatrix(options, scores, kind)


def margin0(pm: ScoreMatrix, x: str) -> Fraction:
    """Revised approval margin of ``x``: path score over the default option
    minus the reverse, with the convention that the default's own margin is 0.
    """
    if pm.kind not in (PATH_ABSOLUTE, PATH_RELATIVE):
        raise ValueError("expected a path-score matrix, got %s" % pm.kind)
    if DEFAULT not in pm.options:
        raise ValueError("matrix has no default option")
    if x not in pm.options:
        raise ValueError("unknown option %r" % x)
    if x == DEFAULT:
        return Fraction(0)
    return pm.score(x, DEFAULT) - pm.score(DEFAULT, x)
