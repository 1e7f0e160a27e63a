"""Approval-preferential vote tallying with max-min path scores.

Ballots are weighted truncated weak orders with an optional approval bar.
The package builds exact-rational pairwise matrices, revises them along
widest paths, and derives the revised approval choice and the path-top
choice, next to classical baselines (approval, Swiss referendum procedure,
Bucklin), with brute-force oracles and randomized property suites for
verification.
"""

from pathvote.ballots import (
    DEFAULT,
    Ballot,
    BallotFormatError,
    Profile,
    parse_profile,
    serialize_profile,
    total_weight,
    validate_ballot,
)
from pathvote.baselines import (
    approval_winners,
    condorcet_bucklin,
    condorcet_winner,
    copeland,
    swiss_procedure,
)
from pathvote.choosers import (
    WeakOrder,
    is_dominant_set,
    path_top,
    prac_winners,
    ranking,
    ranking_relation,
)
from pathvote.llull import (
    BELOW_RANKED,
    INCOMPARABLE,
    MarginMatrix,
    ScoreMatrix,
    ballot_pairwise,
    build_llull,
    from_rows,
    margins,
    to_relative,
)
from pathvote.oracle import (
    brute_minimal_dominant,
    brute_path_scores,
    cross_check,
)
from pathvote.pathscores import BACKEND, margin0, path_scores

__all__ = [
    "BACKEND",
    "BELOW_RANKED",
    "DEFAULT",
    "INCOMPARABLE",
    "Ballot",
    "BallotFormatError",
    "MarginMatrix",
    "Profile",
    "ScoreMatrix",
    "WeakOrder",
    "approval_winners",
    "ballot_pairwise",
    "brute_minimal_dominant",
    "brute_path_scores",
    "build_llull",
    "condorcet_bucklin",
    "condorcet_winner",
    "copeland",
    "cross_check",
    "from_rows",
    "is_dominant_set",
    "margin0",
    "margins",
    "parse_profile",
    "path_scores",
    "path_top",
    "prac_winners",
    "ranking",
    "ranking_relation",
    "serialize_profile",
    "swiss_procedure",
    "to_relative",
    "total_weight",
    "validate_ballot",
]

__version__ = "0.1.0"
