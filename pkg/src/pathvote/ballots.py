"""Ballot model and the textual ballot-file format.

A ballot is a weighted truncated weak order over named options, optionally
split by an approval bar.  The bar is written ``|`` and is identified with the
reserved *default option* ``0`` (the status quo / "none of the above"):
preferring an option to ``0`` means approving it.

File format (UTF-8, line based)::

    # comment
    options: a b c          <- optional header declaring the universe
    25: a | b               <- weight 25; a approved, b not
    35: b > a |             <- b over a, both approved
    1/2: a = b > c          <- exact rational weight; a tied with b
    9: c                    <- truncated: only c is ranked

Grammar::

    file      := (line NEWLINE)*
    line      := comment | header | entry | blank
    comment   := '#' any-text
    header    := 'options:' (SP token)+
    entry     := weight ':' ballot
    weight    := integer | integer '/' integer | decimal
    ballot    := group ('>' group)*
    group     := item ('=' item)*
    item      := token | '|'

Whitespace around separators is ignored.  A bare ``|`` forms its own group and
implies group boundaries on both sides, so ``a | b`` is read as ``a > | > b``;
two adjacent *name* tokens with no separator are an error.  Weights must be
positive and are parsed exactly (``2.5`` becomes 5/2, never a float).  The
token ``0`` is reserved: it may appear in ballots (interchangeably with ``|``)
but may not be declared in a header.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

#: Name of the reserved default option (the approval bar).
DEFAULT = "0"

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+")


class BallotFormatError(ValueError):
    """Ballot text that violates the file format.  Carries the line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class Ballot:
    """A truncated weak order: tie groups from most to least preferred.

    ``groups`` is a tuple of tuples of option names.  Options not mentioned in
    any group are *unranked*; how they compare to ranked options is decided by
    the interpretation policy at tally time, not here.
    """

    groups: tuple[tuple[str, ...], ...]

    def position(self, option: str) -> int | None:
        """Index of the group containing ``option``, or None if unranked."""
        for i, group in enumerate(self.groups):
            if option in group:
                return i
        return None

    def ranked(self) -> frozenset[str]:
        return frozenset(o for group in self.groups for o in group)

    def bar_position(self) -> int | None:
        """Index of the group containing the default option, or None."""
        return self.position(DEFAULT)


@dataclass(frozen=True)
class Profile:
    """An ordered option universe plus weighted ballots.

    ``universe`` always contains the default option, in last position; the
    other options keep their declaration / first-mention order.
    """

    universe: tuple[str, ...]
    entries: tuple[tuple[Fraction, Ballot], ...]


def validate_ballot(ballot: Ballot, universe: Iterable[str]) -> list[str]:
    """Check a ballot against its invariants and a universe.

    Returns a list of human-readable violations; an empty list means the
    ballot is valid.  Checked: at least one group, no empty group, no option
    in more than one group (the default option included), and every option a
    member of the universe.
    """
    violations = []
    known = set(universe)
    if not ballot.groups:
        violations.append("ballot has no groups")
    seen: set[str] = set()
    for group in ballot.groups:
        if not group:
            violations.append("empty group")
        for option in group:
            if option in seen:
                if option == DEFAULT:
                    violations.append("default option appears twice")
                else:
                    violations.append("duplicate option %s" % option)
            seen.add(option)
            if option not in known:
                violations.append("unknown option %s" % option)
    return violations


def total_weight(profile: Profile) -> Fraction:
    """Sum of all entry weights (0 for an empty profile)."""
    return sum((w for w, _ in profile.entries), Fraction(0))


def _parse_weight(text: str, line_no: int) -> Fraction:
    try:
        weight = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise BallotFormatError("bad weight %r" % text, line_no) from None
    if weight <= 0:
        raise BallotFormatError("zero or negative weight %r" % text, line_no)
    return weight


def _tokenize_ballot(text: str, line_no: int) -> list[str]:
    """Split the ballot part of an entry into name/'>'/'='/'|' tokens."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in ">=|":
            tokens.append(c)
            i += 1
        else:
            m = _TOKEN_RE.match(text, i)
            if not m:
                raise BallotFormatError("unknown token %r" % c, line_no)
            tokens.append(m.group())
            i = m.end()
    return tokens


def _parse_ballot(text: str, line_no: int) -> Ballot:
    tokens = _tokenize_ballot(text, line_no)
    if not tokens:
        raise BallotFormatError("empty ballot", line_no)
    groups: list[list[str]] = []
    current: list[str] = []
    expect_item = True
    for token in tokens:
        if token in (">", "="):
            if expect_item:
                raise BallotFormatError("misplaced %r" % token, line_no)
            if token == ">":
                groups.append(current)
                current = []
            expect_item = True
            continue
        item = DEFAULT if token == "|" else token
        if expect_item:
            current.append(item)
            expect_item = False
        elif item == DEFAULT or (current and current[-1] == DEFAULT):
            # A bare bar splits groups implicitly: "a | b" == "a > | > b".
            groups.append(current)
            current = [item]
        else:
            raise BallotFormatError(
                "missing separator before %r" % token, line_no
            )
    if expect_item:
        raise BallotFormatError("dangling separator", line_no)
    groups.append(current)

    ballot = Ballot(tuple(tuple(g) for g in groups))
    mentioned = [o for group in ballot.groups for o in group]
    seen: set[str] = set()
    for option in mentioned:
        if option in seen:
            if option == DEFAULT:
                raise BallotFormatError(
                    "default option (| or 0) appears twice", line_no
                )
            raise BallotFormatError("duplicate option %s" % option, line_no)
        seen.add(option)
    return ballot


def parse_profile(text: str) -> Profile:
    """Parse ballot-file text into a Profile.

    The universe is the union of header-declared options, options mentioned in
    ballots, and the default option, which always comes last; the others keep
    declaration / first-mention order.  Raises BallotFormatError (with the
    offending line number) on any violation of the format.
    """
    declared: list[str] = []
    declared_set: set[str] = set()
    entries: list[tuple[Fraction, Ballot]] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("options:"):
            for token in line[len("options:"):].split():
                if not _TOKEN_RE.fullmatch(token):
                    raise BallotFormatError(
                        "bad option name %r" % token, line_no
                    )
                if token == DEFAULT:
                    raise BallotFormatError(
                        "the default option 0 may not be declared", line_no
                    )
                if token not in declared_set:
                    declared.append(token)
                    declared_set.add(token)
            continue
        if ":" not in line:
            raise BallotFormatError("expected 'weight: ballot'", line_no)
        weight_text, ballot_text = line.split(":", 1)
        weight = _parse_weight(weight_text.strip(), line_no)
        ballot = _parse_ballot(ballot_text, line_no)
        entries.append((weight, ballot))

    universe = list(declared)
    seen = set(declared)
    for _, ballot in entries:
        for group in ballot.groups:
            for option in group:
                if option != DEFAULT and option not in seen:
                    universe.append(option)
                    seen.add(option)
    universe.append(DEFAULT)
    return Profile(tuple(universe), tuple(entries))


def serialize_profile(profile: Profile) -> str:
    """Render a Profile back into ballot-file text.

    ``parse_profile(serialize_profile(p)) == p`` for any parsed profile: the
    header repeats the universe (so truncated ballots cannot shrink it), and
    the default option is written as the bar.
    """
    lines = []
    candidates = [o for o in profile.universe if o != DEFAULT]
    if candidates:
        lines.append("options: " + " ".join(candidates))
    for weight, ballot in profile.entries:
        groups = " > ".join(
            " = ".join("|" if o == DEFAULT else o for o in group)
            for group in ballot.groups
        )
        lines.append("%s: %s" % (weight, groups))
    return "\n".join(lines) + "\n"
