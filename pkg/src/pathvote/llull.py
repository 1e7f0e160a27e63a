"""Pairwise preference matrices (Llull matrices) built from profiles.

The score ``V[x][y]`` counts the (weighted) voters preferring x to y.  A tie
between ranked options contributes half a vote each way.  How a ranked option
compares to an unranked one is a policy choice:

* ``BELOW_RANKED`` (the default, as in Debian-style rules): ranked options are
  preferred to all unranked ones, so the ranked side gets a full vote.
* ``INCOMPARABLE``: no comparison is made, neither side gets anything.

Two unranked options never contribute anything to each other under either
policy.  All scores are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from pathvote.ballots import DEFAULT, Ballot, Profile, total_weight

BELOW_RANKED = "below"
INCOMPARABLE = "incomparable"
INTERPS = (BELOW_RANKED, INCOMPARABLE)

# Matrix kinds: raw pairwise scores, their normalized form, and the two
# corresponding max-min path-score closures.
ABSOLUTE = "absolute"
RELATIVE = "relative"
PATH_ABSOLUTE = "path-absolute"
PATH_RELATIVE = "path-relative"

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)
_ONE = Fraction(1)


@dataclass(frozen=True)
class ScoreMatrix:
    """Square matrix of pairwise scores over an ordered option universe.

    ``scores`` maps ordered pairs (x, y), x != y, to nonnegative rationals;
    missing pairs read as 0 and the diagonal does not exist.
    """

    options: tuple[str, ...]
    scores: Mapping[tuple[str, str], Fraction]
    kind: str

    def score(self, x: str, y: str) -> Fraction:
        return self.scores.get((x, y), _ZERO)


@dataclass(frozen=True)
class MarginMatrix:
    """Antisymmetric matrix of score differences."""

    options: tuple[str, ...]
    margins: Mapping[tuple[str, str], Fraction]

    def margin(self, x: str, y: str) -> Fraction:
        return self.margins.get((x, y), _ZERO)


def ballot_pairwise(
    ballot: Ballot, universe: Iterable[str], interp: str = BELOW_RANKED
) -> dict[tuple[str, str], Fraction]:
    """Contribution of one ballot to every ordered pair of options.

    Returns a map with entries in {1/2, 1}; pairs contributing 0 are absent.
    For each ordered pair (x, y): 1 when the ballot puts x in a strictly
    earlier group than y, or (under BELOW_RANKED) ranks x and leaves y
    unranked; 1/2 when x and y share a group; otherwise nothing.
    """
    if interp not in INTERPS:
        raise ValueError("unknown interpretation %r" % interp)
    position: dict[str, int] = {}
    for i, group in enumerate(ballot.groups):
        for option in group:
            position[option] = i
    out: dict[tuple[str, str], Fraction] = {}
    options = list(universe)
    for x in options:
        px = position.get(x)
        if px is None:
            continue
        for y in options:
            if y == x:
                continue
            py = position.get(y)
            if py is None:
                if interp == BELOW_RANKED:
                    out[(x, y)] = _ONE
            elif px < py:
                out[(x, y)] = _ONE
            elif px == py:
                out[(x, y)] = _HALF
    return out


def build_llull(profile: Profile, interp: str = BELOW_RANKED) -> ScoreMatrix:
    """Weighted sum of per-ballot contributions, as an absolute matrix.

    Every ordered pair over the universe is present (0 when nobody compared
    the two options).  Raises ValueError on an empty or weightless profile.
    """
    if total_weight(profile) <= 0:
        raise ValueError("empty profile")
    options = profile.universe
    scores = {
        (x, y): _ZERO for x in options for y in options if x != y
    }
    for weight, ballot in profile.entries:
        for pair, contribution in ballot_pairwise(
            ballot, options, interp
        ).items():
            scores[pair] += weight * contribution
    return ScoreMatrix(options, scores, ABSOLUTE)


def to_relative(m: ScoreMatrix, total: Fraction) -> ScoreMatrix:
    """Divide every score by ``total`` (normally the total vote weight)."""
    if m.kind != ABSOLUTE:
        raise ValueError("expected an absolute matrix, got %s" % m.kind)
    if total <= 0:
        raise ValueError("total must be positive")
    scores = {pair: value / total for pair, value in m.scores.items()}
    return ScoreMatrix(m.options, scores, RELATIVE)


def margins(m: ScoreMatrix) -> MarginMatrix:
    """The antisymmetric difference matrix: margin(x, y) = score(x,y) - score(y,x)."""
    out = {}
    for x in m.options:
        for y in m.options:
            if x != y:
                out[(x, y)] = m.score(x, y) - m.score(y, x)
    return MarginMatrix(m.options, out)


def from_rows(
    options: Iterable[str], rows: Iterable[Iterable], kind: str = ABSOLUTE
) -> ScoreMatrix:
    """Build a ScoreMatrix from a row-major table (diagonal cells ignored).

    Convenient for literals in tests and for matrices given without ballots;
    entries may be ints, strings or Fractions.
    """
    options = tuple(options)
    scores = {}
    for i, row in enumerate(rows):
        row = list(row)
        if len(row) != len(options):
            raise ValueError("row %d has %d cells, expected %d"
                             % (i, len(row), len(options)))
        for j, cell in enumerate(row):
            if i == j:
                continue
            scores[(options[i], options[j])] = Fraction(cell)
    return ScoreMatrix(options, scores, kind)


def to_rows(m: ScoreMatrix) -> list[list[Fraction | None]]:
    """Row-major table of a score matrix; diagonal cells are None."""
    return [
        [None if x == y else m.score(x, y) for y in m.options]
        for x in m.options
    ]


def format_table(
    options: tuple[str, ...], cell, diagonal: str = "-"
) -> str:
    """Render a labelled square table; ``cell(x, y)`` supplies off-diagonal text."""
    grid = [[""] + list(options)]
    for x in options:
        grid.append(
            [x] + [diagonal if x == y else str(cell(x, y)) for y in options]
        )
    widths = [max(len(row[j]) for row in grid) for j in range(len(grid[0]))]
    return "\n".join(
        "  ".join(cell_text.rjust(width) for cell_text, width in zip(row, widths))
        for row in grid
    )


def format_matrix(m: ScoreMatrix) -> str:
    return format_table(m.options, m.score)


def format_margins(mm: MarginMatrix) -> str:
    return format_table(mm.options, mm.margin)
