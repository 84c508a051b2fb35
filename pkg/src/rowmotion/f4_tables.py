"""Golden F4 orbit data, in the reversed-index (paper-f4) convention.

Roots are coefficient strings; antichains are frozen sets of strings.
Table I lists a representative and size per orbit of the full poset;
tables II and III give the complete rowmotion cycles for the non-simple
and short posets (the standard cycle through the rank levels is stored
only by its endpoints).
"""

from __future__ import annotations


def _chain(*states: str) -> tuple[frozenset[str], ...]:
    return tuple(frozenset(s.split()) for s in states)


# -- full poset: eleven orbits, representative -> size ------------------------

FULL_ORBITS: tuple[tuple[frozenset[str], int], ...] = (
    (frozenset({"1000"}), 12),
    (frozenset({"0100"}), 12),
    (frozenset({"0010"}), 12),
    (frozenset({"0001"}), 12),
    (frozenset({"0011"}), 12),
    (frozenset({"1100"}), 12),
    (frozenset({"1111"}), 12),
    (frozenset({"2432"}), 12),
    (frozenset({"1000", "0010"}), 2),
    (frozenset({"0110"}), 3),
    (frozenset({"0001", "1110"}), 4),
)

FULL_STANDARD_REP = frozenset({"2432"})

# -- non-simple poset: six orbits of 11, five printed in full -----------------

NO_SIMPLE_CHAINS: tuple[tuple[frozenset[str], ...], ...] = (
    _chain(
        "1321", "2221", "1321 2211", "1221 2210", "0221 1211",
        "0211 1111 2210", "0111 1210", "0011 0210 1110", "0110 1100",
        "0011", "2210",
    ),
    _chain(
        "1221", "0221 2211", "1211 2210", "0221 1111 1210", "0211 1110",
        "0111 0210 1100", "0011 0110", "1100", "0221", "2211", "1321 2210",
    ),
    _chain(
        "1211", "0221 1111 2210", "0211 1210", "1111 0210", "0111 1110",
        "0011 0210 1100", "0110", "0011 1100", "0210", "1111", "0221 2210",
    ),
    _chain(
        "1210", "0221 1111", "0211 2210", "1111 1210", "0221 1110",
        "0211 1100", "0111 0210", "0011 1110", "0210 1100", "0111",
        "0011 2210",
    ),
    _chain(
        "1110", "0221 1100", "0211", "1111 2210", "0221 1210", "0211 1111",
        "0111 2210", "0011 1210", "0210 1110", "0111 1100", "0011 0210",
    ),
)

NO_SIMPLE_STANDARD_TOP = "2432"
NO_SIMPLE_STANDARD_SECOND = "2431"

# -- short poset: standard orbit of 9 plus two printed cycles ------------------

SHORT_CHAINS: tuple[tuple[frozenset[str], ...], ...] = (
    _chain(
        "0100", "1000", "0111", "1210", "1111", "0111 1210", "1110",
        "0111 1100", "0110 1000",
    ),
    _chain("1100", "0111 1000", "0110"),
)

SHORT_STANDARD_TOP = "2321"
SHORT_STANDARD_SECOND = "1321"
SHORT_STANDARD_BOTTOM = frozenset({"1000", "0100"})
