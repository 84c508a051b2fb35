"""Two-row encodings of type-A antichains and the operators they carry.

A positive root of the rank-n type-A system is an interval (i, j) with
1 <= i <= j <= n, standing for the sum of consecutive simple roots i..j.
Sorting an antichain by the i-component gives two strictly increasing
sequences with i_s <= j_s columnwise; that pair is the two-row array.

On arrays we get:

* the oy number, either as a sum of removal indices or as the count of
  essential gaps (consecutive differences >= 2) in the start sequence
  prefixed with 0 and the end sequence suffixed with n+1;
* rowmotion, by shifting starts up / ends down by one, padding with 1 and
  n, and dropping the columns that stop denoting intervals;
* inverse rowmotion, by the column-creation procedure (diagonal padding
  at the ends, one merged or diagonal-run column per consecutive pair);
* the duality ``star``, complementing the end set to get new starts and
  the start set to get new ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poset import Antichain
from .roots import FULL, RootPoset, build


class NotTypeA(ValueError):
    """The antichain does not live on a full type-A root poset."""


@lru_cache(maxsize=None)
def ambient(n: int) -> RootPoset:
    """The full root poset of the rank-n type-A system (shared instance)."""
    return build("A", n).root_poset()


def _require_type_a(antichain: Antichain) -> RootPoset:
    poset = antichain.poset
    if (
        not isinstance(poset, RootPoset)
        or poset.system.cartan_type != "A"
        or poset.variant != FULL
    ):
        raise NotTypeA("expected an antichain on a full type-A root poset")
    return poset


@dataclass(frozen=True)
class TwoRowArray:
    """Increasing start/end sequences encoding a type-A antichain."""

    n: int
    starts: tuple[int, ...]
    ends: tuple[int, ...]

    def __post_init__(self):
        if len(self.starts) != len(self.ends):
            raise ValueError("start and end rows must have equal length")
        seqs = (self.starts, self.ends)
        if any(a >= b for seq in seqs for a, b in zip(seq, seq[1:])):
            raise ValueError("rows must be strictly increasing")
        for i, j in zip(self.starts, self.ends):
            if not 1 <= i <= j <= self.n:
                raise ValueError(f"column ({i},{j}) is not an interval in 1..{self.n}")

    def __len__(self) -> int:
        return len(self.starts)

    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.starts, self.ends))


def intervals(antichain: Antichain) -> list[tuple[int, int]]:
    """The antichain's roots as intervals, sorted by start."""
    poset = _require_type_a(antichain)
    out = []
    for x in antichain:
        support = [k for k, c in enumerate(poset.vectors[x]) if c]
        out.append((support[0] + 1, support[-1] + 1))
    out.sort()
    return out


def _element(poset: RootPoset, lo: int, hi: int) -> int:
    n = poset.system.rank
    return poset.element_for_vector(tuple(int(lo <= k + 1 <= hi) for k in range(n)))


def to_array(antichain: Antichain) -> TwoRowArray:
    poset = _require_type_a(antichain)
    cols = intervals(antichain)
    return TwoRowArray(
        n=poset.system.rank,
        starts=tuple(i for i, _ in cols),
        ends=tuple(j for _, j in cols),
    )


def from_array(array: TwoRowArray, poset: RootPoset | None = None) -> Antichain:
    if poset is None:
        poset = ambient(array.n)
    elif poset.system.rank != array.n:
        raise NotTypeA(f"array rank {array.n} does not match poset {poset.system}")
    return poset.antichain(
        [_element(poset, i, j) for i, j in array.columns()]
    )


def _essential(gap: int) -> int:
    return 1 if gap >= 2 else 0


def gaps_after_zero(values: tuple[int, ...] | list[int]) -> int:
    """Essential gaps in (0, v1, .., vk); equals components(values+{0}) - 1."""
    prev = 0
    total = 0
    for v in values:
        total += _essential(v - prev)
        prev = v
    return total


def gaps_before_limit(values: tuple[int, ...] | list[int], n: int) -> int:
    """Essential gaps in (v1, .., vk, n+1); equals components(values+{n+1}) - 1."""
    total = 0
    vals = list(values) + [n + 1]
    for prev, v in zip(vals, vals[1:]):
        total += _essential(v - prev)
    return total


def oy_ideal_form(antichain: Antichain) -> int:
    """The oy number as the sum of removal indices; 0 on the empty antichain."""
    poset = _require_type_a(antichain)
    return poset.weighted_removal_sum(antichain)


def oy_difference_form(antichain: Antichain) -> int:
    """The oy number as the essential-gap count of the two-row array."""
    array = to_array(antichain)
    return gaps_after_zero(array.starts) + gaps_before_limit(array.ends, array.n)


def rowmotion_array(antichain: Antichain) -> Antichain:
    """Rowmotion computed on the two-row array.

    Shift the start row to (1, i_1+1, .., i_k+1) and the end row to
    (j_1-1, .., j_k-1, n), then delete every column whose entries no
    longer satisfy start <= end.
    """
    poset = _require_type_a(antichain)
    n = poset.system.rank
    cols = intervals(antichain)
    if cols:
        shifted = list(
            zip(
                [1] + [i + 1 for i, _ in cols],
                [j - 1 for _, j in cols] + [n],
            )
        )
    else:
        shifted = [(1, n)]
    return poset.antichain(
        [_element(poset, i, j) for i, j in shifted if i <= j]
    )


def inverse_rowmotion_array(antichain: Antichain) -> Antichain:
    """Inverse rowmotion computed by column creation.

    Pad the front with diagonal columns 1..i_1-1 and the back with
    j_k+1..n; each consecutive column pair contributes the single column
    (i_{s+1}-1, j_s+1) when that is an interval, and otherwise the run of
    diagonal columns j_s+1 .. i_{s+1}-1.
    """
    poset = _require_type_a(antichain)
    n = poset.system.rank
    cols = intervals(antichain)
    if not cols:
        return poset.antichain([_element(poset, t, t) for t in range(1, n + 1)])
    out: list[tuple[int, int]] = [(t, t) for t in range(1, cols[0][0])]
    for (left_i, left_j), (right_i, right_j) in zip(cols, cols[1:]):
        lo, hi = right_i - 1, left_j + 1
        if lo <= hi:
            out.append((lo, hi))
        else:
            out.extend((t, t) for t in range(hi, lo + 1))
    out.extend((t, t) for t in range(cols[-1][1] + 1, n + 1))
    return poset.antichain([_element(poset, i, j) for i, j in out])


def star(antichain: Antichain) -> Antichain:
    """The dual antichain: new starts are the complement of the old ends.

    An involution; the member counts of an antichain and its dual add up
    to the rank.
    """
    poset = _require_type_a(antichain)
    n = poset.system.rank
    cols = intervals(antichain)
    old_starts = {i for i, _ in cols}
    old_ends = {j for _, j in cols}
    new_starts = [v for v in range(1, n + 1) if v not in old_ends]
    new_ends = [v for v in range(1, n + 1) if v not in old_starts]
    return poset.antichain(
        [_element(poset, i, j) for i, j in zip(new_starts, new_ends)]
    )
