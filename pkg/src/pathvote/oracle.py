"""Brute-force reference implementations for certifying the fast algorithms.

Deliberately literal and slow: path scores by enumerating every simple path,
the minimal dominant set by enumerating subsets in increasing size.  Instances
are capped at 8 options to keep the enumeration honest but bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from pathvote.choosers import path_top
from pathvote.llull import (
    ABSOLUTE,
    PATH_ABSOLUTE,
    PATH_RELATIVE,
    RELATIVE,
    ScoreMatrix,
    format_matrix,
)
from pathvote.pathscores import path_scores

MAX_OPTIONS = 8


def _check_size(m: ScoreMatrix, cap: int) -> None:
    if len(m.options) > cap:
        raise ValueError(
            "universe too large for brute force (%d > %d)"
            % (len(m.options), cap)
        )


def brute_path_scores(m: ScoreMatrix) -> ScoreMatrix:
    """Path scores by enumerating all simple paths per ordered pair.

    For each pair (x, y): the maximum over every path from x to y with
    pairwise-distinct vertices of the minimum score along the path.
    """
    if m.kind not in (ABSOLUTE, RELATIVE):
        raise ValueError("expected a Llull matrix, got %s" % m.kind)
    _check_size(m, MAX_OPTIONS)
    options = m.options
    scores = {}
    for x in options:
        for y in options:
            if x == y:
                continue
            best = m.score(x, y)  # the length-1 path
            others = [z for z in options if z not in (x, y)]
            # Depth-first over all simple paths x -> ... -> y: each stack
            # entry is a prefix ending at ``last`` with the running minimum
            # of its edges; every extension closes a path through (z, y).
            stack = [(x, frozenset(), None)]
            while stack:
                last, used, running = stack.pop()
                for z in others:
                    if z in used:
                        continue
                    step = m.score(last, z)
                    new_running = (
                        step if running is None else min(running, step)
                    )
                    finish = min(new_running, m.score(z, y))
                    if finish > best:
                        best = finish
                    stack.append((z, used | {z}, new_running))
            scores[(x, y)] = best
    kind = PATH_ABSOLUTE if m.kind == ABSOLUTE else PATH_RELATIVE
    return ScoreMatrix(options, scores, kind)


def brute_minimal_dominant(pm: ScoreMatrix) -> frozenset[str]:
    """The smallest dominant set, by subset enumeration.

    Subsets are tried in increasing size, lexicographically by option order,
    so the answer is deterministic; the first dominant subset found is
    returned (it is in fact the unique minimal one).
    """
    if pm.kind not in (PATH_ABSOLUTE, PATH_RELATIVE):
        raise ValueError("expected a path-score matrix, got %s" % pm.kind)
    _check_size(pm, MAX_OPTIONS)
    options = pm.options
    for size in range(1, len(options) + 1):
        for subset in combinations(options, size):
            inside = set(subset)
            if all(
                pm.score(x, y) > pm.score(y, x)
                for x in subset
                for y in options
                if y not in inside
            ):
                return frozenset(subset)
    return frozenset(options)


@dataclass
class CrossCheckReport:
    """Outcome of comparing the fast implementations against brute force."""

    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check(m: ScoreMatrix) -> CrossCheckReport:
    """Compare path_scores and path_top against their brute-force versions.

    Any disagreement is reported entry by entry together with the offending
    input matrix.
    """
    _check_size(m, 7)
    report = CrossCheckReport()
    fast = path_scores(m)
    slow = brute_path_scores(m)
    for x in m.options:
        for y in m.options:
            if x != y and fast.score(x, y) != slow.score(x, y):
                report.mismatches.append(
                    "path score (%s,%s): fast %s != brute %s\n%s"
                    % (x, y, fast.score(x, y), slow.score(x, y),
                       format_matrix(m))
                )
    fast_top = path_top(fast)
    slow_top = brute_minimal_dominant(slow)
    if fast_top != slow_top:
        report.mismatches.append(
            "top set: fast {%s} != brute {%s}\n%s"
            % (", ".join(sorted(fast_top)), ", ".join(sorted(slow_top)),
               format_matrix(m))
        )
    return report
