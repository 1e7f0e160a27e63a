"""Comparison procedures: approval choice, Swiss referendum rule, Bucklin.

These are the established methods the revised approval choice is measured
against.  All of them are set-valued on exact ties and all arithmetic is
exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from pathvote.ballots import DEFAULT, Profile, total_weight
from pathvote.llull import ABSOLUTE, RELATIVE, ScoreMatrix

_ZERO = Fraction(0)


def _require_llull(m: ScoreMatrix) -> None:
    if m.kind not in (ABSOLUTE, RELATIVE):
        raise ValueError("expected a Llull matrix, got %s" % m.kind)


def approval_winners(m: ScoreMatrix) -> frozenset[str]:
    """Options maximizing approvals minus disapprovals.

    An approval is a preference over the default option, so the score of x is
    m(x,0) - m(0,x).  The default option itself does not compete.
    """
    _require_llull(m)
    candidates = [x for x in m.options if x != DEFAULT]
    if not candidates:
        raise ValueError("no options besides the default")
    score = {x: m.score(x, DEFAULT) - m.score(DEFAULT, x) for x in candidates}
    best = max(score.values())
    return frozenset(x for x in candidates if score[x] == best)


def condorcet_winner(m: ScoreMatrix) -> str | None:
    """The option beating every other pairwise, or None when there is none."""
    _require_llull(m)
    for x in m.options:
        if all(m.score(x, y) > m.score(y, x) for y in m.options if y != x):
            return x
    return None


def copeland(m: ScoreMatrix, subset: Iterable[str]) -> frozenset[str]:
    """Copeland rule restricted to a subset: argmax of wins minus losses."""
    _require_llull(m)
    members = [x for x in m.options if x in set(subset)]
    if not members:
        raise ValueError("empty subset")
    score = {}
    for x in members:
        wins = sum(1 for y in members if m.score(x, y) > m.score(y, x))
        losses = sum(1 for y in members if m.score(y, x) > m.score(x, y))
        score[x] = wins - losses
    best = max(score.values())
    return frozenset(x for x in members if score[x] == best)


def swiss_procedure(m: ScoreMatrix) -> frozenset[str]:
    """The referendum procedure used in Swiss cantons with multiple proposals.

    Proposals approved by a majority (on the pairwise question against the
    status quo) go forward: none -> the default option wins, one -> it wins,
    two -> their pairwise winner (both on a tie), three or more -> Copeland
    restricted to the approved set.
    """
    _require_llull(m)
    approved = [
        x
        for x in m.options
        if x != DEFAULT and m.score(x, DEFAULT) > m.score(DEFAULT, x)
    ]
    if not approved:
        return frozenset({DEFAULT})
    if len(approved) == 1:
        return frozenset(approved)
    if len(approved) == 2:
        x, y = approved
        if m.score(x, y) > m.score(y, x):
            return frozenset({x})
        if m.score(y, x) > m.score(x, y):
            return frozenset({y})
        return frozenset(approved)
    return copeland(m, approved)


def _approved_groups(groups) -> list:
    """The groups strictly above the bar; all of them when there is no bar."""
    for i, group in enumerate(groups):
        if DEFAULT in group:
            return list(groups[:i])
    return list(groups)


def condorcet_bucklin(profile: Profile) -> frozenset[str]:
    """Majority by progressively deeper approved preferences.

    First votes are counted, then first and second votes together, and so on,
    until some option reaches an absolute majority; the deepest count decides
    and the most supported of the majority holders wins.  Only the approved
    part of each ballot is counted (groups above the bar; everything ranked
    when there is no bar).  Ties at the deciding depth are broken by the
    next-shallower counts; options still tied after depth 1 are returned
    together.  When no option ever reaches a majority, the default option
    wins.
    """
    total = total_weight(profile)
    if total <= 0:
        raise ValueError("empty profile")
    half = total / 2

    cumulative: list[dict[str, Fraction]] = []
    for weight, ballot in profile.entries:
        for depth, group in enumerate(_approved_groups(ballot.groups)):
            while len(cumulative) <= depth:
                cumulative.append({})
            for option in group:
                tally = cumulative[depth]
                tally[option] = tally.get(option, _ZERO) + weight
    # Turn per-depth increments into cumulative counts.
    for depth in range(1, len(cumulative)):
        for option, weight in cumulative[depth - 1].items():
            tally = cumulative[depth]
            tally[option] = tally.get(option, _ZERO) + weight

    for depth, tally in enumerate(cumulative):
        holders = [x for x, count in tally.items() if count > half]
        if not holders:
            continue
        best = max(tally[x] for x in holders)
        tied = [x for x in holders if tally[x] == best]
        for shallower in range(depth - 1, -1, -1):
            if len(tied) == 1:
                break
            counts = {
                x: cumulative[shallower].get(x, _ZERO) for x in tied
            }
            best = max(counts.values())
            tied = [x for x in tied if counts[x] == best]
        return frozenset(tied)
    return frozenset({DEFAULT})
