"""Choice sets and rankings derived from a path-score matrix.

Two set-valued winners are provided:

* ``prac_winners`` — the *revised approval* choice: the options maximizing the
  path-score margin over the default option, with the default included exactly
  when no margin is positive.
* ``path_top`` — the top options of the full ranking, equal to the unique
  minimal dominant set of the strict path-margin relation.

The ranking itself comes from the transitive closure of the non-strict
relation {(x, y) : score(x,y) >= score(y,x)}.  That base relation is total, so
the closure's mutual-reachability classes form a chain; they are the levels of
a weak order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from pathvote.ballots import DEFAULT
from pathvote.llull import PATH_ABSOLUTE, PATH_RELATIVE, ScoreMatrix
from pathvote.pathscores import margin0


@dataclass(frozen=True)
class WeakOrder:
    """An ordered partition of the options into indifference levels, best first."""

    levels: tuple[tuple[str, ...], ...]

    def level_of(self, option: str) -> int:
        for i, level in enumerate(self.levels):
            if option in level:
                return i
        raise ValueError("unknown option %r" % option)


def _require_path_matrix(pm: ScoreMatrix) -> None:
    if pm.kind not in (PATH_ABSOLUTE, PATH_RELATIVE):
        raise ValueError("expected a path-score matrix, got %s" % pm.kind)


def _closure_rows(pm: ScoreMatrix) -> list[int]:
    """Transitive closure of the non-strict margin relation, as bitmask rows.

    Row i has bit j set iff option i reaches option j (reflexive included).
    Warshall's algorithm on whole rows: if i reaches k, i inherits k's row.
    """
    n = len(pm.options)
    rows = []
    for i, x in enumerate(pm.options):
        row = 1 << i
        for j, y in enumerate(pm.options):
            if i != j and pm.score(x, y) >= pm.score(y, x):
                row |= 1 << j
        rows.append(row)
    for k in range(n):
        bit = 1 << k
        krow = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= krow
    return rows


def ranking_relation(pm: ScoreMatrix) -> set[tuple[str, str]]:
    """All ordered pairs (x, y) with x ranked at least as high as y.

    This is the transitive closure of {(x, y) : score(x,y) >= score(y,x)},
    with reflexive pairs included by convention.
    """
    _require_path_matrix(pm)
    rows = _closure_rows(pm)
    options = pm.options
    return {
        (x, options[j])
        for i, x in enumerate(options)
        for j in range(len(options))
        if rows[i] >> j & 1
    }


def ranking(pm: ScoreMatrix) -> WeakOrder:
    """The weak order induced by the ranking relation.

    Options share a level iff each reaches the other; levels are ordered by
    one-way reachability (which is total here) and listed best first.
    """
    _require_path_matrix(pm)
    rows = _closure_rows(pm)
    n = len(pm.options)
    unplaced = list(range(n))
    levels = []
    while unplaced:
        # The current top level: indices reaching every unplaced index.
        remaining = 0
        for i in unplaced:
            remaining |= 1 << i
        top = [i for i in unplaced if rows[i] & remaining == remaining]
        levels.append(tuple(pm.options[i] for i in top))
        unplaced = [i for i in unplaced if i not in set(top)]
    return WeakOrder(tuple(levels))


def path_top(pm: ScoreMatrix) -> frozenset[str]:
    """The options that reach every other option: the top ranking level.

    Equivalently (and cross-checked by the brute-force oracle): the unique
    minimal dominant set — the smallest nonempty X with score(x,y) > score(y,x)
    for every x in X, y outside X.
    """
    _require_path_matrix(pm)
    rows = _closure_rows(pm)
    everyone = (1 << len(pm.options)) - 1
    return frozenset(
        x for i, x in enumerate(pm.options) if rows[i] == everyone
    )


def prac_winners(pm: ScoreMatrix) -> frozenset[str]:
    """The revised approval choice.

    Let M be the maximum revised approval margin over the non-default options.
    If M > 0 the winners are the options attaining M; if M = 0 they are the
    default option together with the boundary options at margin 0; if M < 0
    the default option stands alone.
    """
    _require_path_matrix(pm)
    candidates = [x for x in pm.options if x != DEFAULT]
    if not candidates:
        return frozenset({DEFAULT})
    by_margin = {x: margin0(pm, x) for x in candidates}
    best = max(by_margin.values())
    if best > 0:
        return frozenset(x for x, m in by_margin.items() if m == best)
    if best == 0:
        return frozenset(
            {DEFAULT, *(x for x, m in by_margin.items() if m == 0)}
        )
    return frozenset({DEFAULT})


def is_dominant_set(members: Iterable[str], pm: ScoreMatrix) -> bool:
    """Whether every inside-outside pair satisfies the strict margin inequality."""
    _require_path_matrix(pm)
    inside = set(members)
    if not inside:
        raise ValueError("a dominant set must be nonempty")
    unknown = inside.difference(pm.options)
    if unknown:
        raise ValueError("unknown options: %s" % ", ".join(sorted(unknown)))
    outside = [y for y in pm.options if y not in inside]
    return all(
        pm.score(x, y) > pm.score(y, x) for x in inside for y in outside
    )
