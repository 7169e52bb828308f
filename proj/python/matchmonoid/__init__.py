"""Regressive order-preserving monoids over finite graded posets.

Thin Python face over the C++ core: poset construction, special (partial)
matching enumeration, monoid closures, idempotent structure reports, and the
frozen-expectation reproduction claims.
"""

from ._core import (
    Poset,
    analyze_idempotent,
    build_poset,
    builtin_poset,
    claim_ids,
    matching_monoid,
    reproduce,
    special_matchings,
    special_partial_matchings,
)

__all__ = [
    "Poset",
    "analyze_idempotent",
    "build_poset",
    "builtin_poset",
    "claim_ids",
    "matching_monoid",
    "reproduce",
    "special_matchings",
    "special_partial_matchings",
]
