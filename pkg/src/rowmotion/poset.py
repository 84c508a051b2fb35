"""Finite posets, antichains, and the rowmotion operator.

Elements are integer indices ``0..n-1`` with display labels.  Comparability
is stored as per-element bitmasks, which keeps ideal and antichain
manipulation at machine-word speed for posets up to the configured size
limit (130 elements by default; the largest root poset we care about, E8,
has 120).

Rowmotion sends an antichain to the maximal elements of the complement of
the upper ideal it generates.  It is a bijection on the antichain set, so
it decomposes antichains into cyclic orbits; everything in this module is
exact integer or rational arithmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Iterator

DEFAULT_MAX_ELEMENTS = 130
SIZE_ENV_VAR = "ROWMOTION_MAX_ELEMENTS"


class PosetError(ValueError):
    """Base class for poset construction and usage errors."""


class CycleDetected(PosetError):
    """The cover digraph contains a directed cycle."""


class UnknownLabel(PosetError):
    """A cover relation or lookup referenced a label that does not exist."""


class NotAnAntichain(PosetError):
    """A requested element set contains a comparable pair."""

    def __init__(self, pair: tuple[str, str]):
        self.pair = pair
        super().__init__(f"elements {pair[0]!r} and {pair[1]!r} are comparable")


class NotAMember(PosetError):
    """The element is not a member of the given antichain."""


class HypothesesNotMet(PosetError):
    """The poset is not graded with bottoms minimal and tops maximal."""


class SizeLimitExceeded(PosetError):
    """The poset exceeds the configured element limit."""


class FileFormatError(PosetError):
    """A poset description file is malformed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        super().__init__(message)


def size_limit() -> int:
    """Current poset size guard; override with ROWMOTION_MAX_ELEMENTS."""
    raw = os.environ.get(SIZE_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_ELEMENTS
    try:
        return int(raw)
    except ValueError:
        raise SizeLimitExceeded(
            f"{SIZE_ENV_VAR} must be an integer, got {raw!r}"
        ) from None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Antichain:
    """A set of pairwise incomparable elements of a fixed poset.

    Instances are immutable, hashable, and compare equal only within the
    same poset object.
    """

    __slots__ = ("poset", "mask", "members")

    def __init__(self, poset: "Poset", members: Iterable[int] = ()):
        mask = 0
        for x in members:
            if not 0 <= x < poset.n:
                raise PosetError(f"element index {x} out of range")
            mask |= 1 << x
        for x in _bits(mask):
            hit = poset._up_strict[x] & mask
            if hit:
                y = next(_bits(hit))
                raise NotAnAntichain((poset.labels[x], poset.labels[y]))
        self.poset = poset
        self.mask = mask
        self.members = tuple(_bits(mask))

    @classmethod
    def _make(cls, poset: "Poset", mask: int) -> "Antichain":
        # fast path for masks already known to be antichains
        self = object.__new__(cls)
        self.poset = poset
        self.mask = mask
        self.members = tuple(_bits(mask))
        return self

    def labelled(self) -> tuple[str, ...]:
        return tuple(self.poset.labels[x] for x in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.poset.n and self.mask >> x & 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Antichain)
            and other.poset is self.poset
            and other.mask == self.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.poset), self.mask))

    def __repr__(self) -> str:
        return "Antichain{%s}" % ",".join(self.labelled())


@dataclass(frozen=True)
class Grading:
    """Rank function assigning 1..level, increasing by 1 along covers.

    Each connected component is grounded at rank 1 (the only normalisation
    under which all minimal elements can sit at rank 1).  The two flags
    record whether rank-1 elements are exactly the minimal elements and
    top-rank elements exactly the maximal ones.
    """

    ranks: tuple[int, ...]
    level: int
    bottoms_are_minimal: bool
    tops_are_maximal: bool

    def level_set(self, rank: int) -> tuple[int, ...]:
        return tuple(x for x, r in enumerate(self.ranks) if r == rank)


class Orbit:
    """A rowmotion cycle, stored starting from its canonical representative."""

    __slots__ = ("antichains",)

    def __init__(self, antichains: Iterable[Antichain]):
        self.antichains = tuple(antichains)

    @property
    def size(self) -> int:
        return len(self.antichains)

    @property
    def mean_size(self) -> Fraction:
        return Fraction(sum(len(a) for a in self.antichains), self.size)

    @property
    def representative(self) -> Antichain:
        return self.antichains[0]

    def __iter__(self) -> Iterator[Antichain]:
        return iter(self.antichains)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"<Orbit size={self.size} rep={self.representative!r}>"


class Poset:
    """Immutable finite poset over indexed, labelled elements.

    The constructor takes reflexive-transitive up-set masks and validates
    that they describe a partial order; use :func:`from_cover_relations`
    or a root-system constructor instead of calling it directly.
    """

    __slots__ = (
        "n",
        "labels",
        "covers",
        "_up",
        "_down",
        "_up_strict",
        "_down_strict",
        "_full",
        "_label_index",
        "_antichains",
        "_orbits",
        "_grading",
    )

    def __init__(self, labels: Iterable[str], up_masks: Iterable[int]):
        labels = tuple(str(lab) for lab in labels)
        ups = list(up_masks)
        n = len(labels)
        if len(ups) != n:
            raise PosetError("labels and order masks must have equal length")
        limit = size_limit()
        if n > limit:
            raise SizeLimitExceeded(
                f"poset has {n} elements, limit is {limit} "
                f"(set {SIZE_ENV_VAR} to raise it)"
            )
        if len(set(labels)) != n:
            raise PosetError("labels must be distinct")

        up_strict = []
        for x in range(n):
            if not ups[x] >> x & 1:
                raise PosetError("order relation must be reflexive")
            up_strict.append(ups[x] ^ (1 << x))
        for x in range(n):
            for y in _bits(up_strict[x]):
                if ups[y] >> x & 1:
                    raise PosetError("order relation violates antisymmetry")
                if ups[y] & ~ups[x]:
                    raise PosetError("order relation violates transitivity")

        down = [0] * n
        for x in range(n):
            for y in _bits(ups[x]):
                down[y] |= 1 << x
        down_strict = [down[x] ^ (1 << x) for x in range(n)]

        covers = []
        for x in range(n):
            for y in _bits(up_strict[x]):
                if not up_strict[x] & down_strict[y]:
                    covers.append((x, y))

        self.n = n
        self.labels = labels
        self.covers = tuple(sorted(covers))
        self._up = ups
        self._down = down
        self._up_strict = up_strict
        self._down_strict = down_strict
        self._full = (1 << n) - 1
        self._label_index = {lab: i for i, lab in enumerate(labels)}
        self._antichains: tuple[Antichain, ...] | None = None
        self._orbits: tuple[Orbit, ...] | None = None
        self._grading: Grading | None | str = "unset"

    # -- basic structure ---------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def leq(self, x: int, y: int) -> bool:
        return bool(self._up[x] >> y & 1)

    def minimal_elements(self, subset: Iterable[int]) -> frozenset[int]:
        mask = self._subset_mask(subset)
        return frozenset(_bits(self._min_of(mask)))

    def maximal_elements(self, subset: Iterable[int]) -> frozenset[int]:
        mask = self._subset_mask(subset)
        return frozenset(_bits(self._max_of(mask)))

    def is_chain(self) -> bool:
        return all(
            (self._up[x] | self._down[x]) == self._full for x in range(self.n)
        )

    def _subset_mask(self, subset: Iterable[int]) -> int:
        mask = 0
        for x in subset:
            if not 0 <= x < self.n:
                raise PosetError(f"element index {x} out of range")
            mask |= 1 << x
        return mask

    def _min_of(self, mask: int) -> int:
        out = 0
        for x in _bits(mask):
            if not self._down_strict[x] & mask:
                out |= 1 << x
        return out

    def _max_of(self, mask: int) -> int:
        out = 0
        for x in _bits(mask):
            if not self._up_strict[x] & mask:
                out |= 1 << x
        return out

    # -- antichains and ideals ---------------------------------------------

    def antichain(self, members: Iterable[int] = ()) -> Antichain:
        return Antichain(self, members)

    def _own(self, antichain: Antichain) -> None:
        if antichain.poset is not self:
            raise PosetError("antichain belongs to a different poset")

    def upper_ideal(self, antichain: Antichain) -> frozenset[int]:
        """All elements lying above (or equal to) a member of the antichain."""
        self._own(antichain)
        return frozenset(_bits(self._upper_mask(antichain.mask)))

    def _upper_mask(self, mask: int) -> int:
        out = 0
        for x in _bits(mask):
            out |= self._up[x]
        return out

    def _lower_mask(self, mask: int) -> int:
        out = 0
        for x in _bits(mask):
            out |= self._down[x]
        return out

    # -- rowmotion ----------------------------------------------------------

    def rowmotion(self, antichain: Antichain) -> Antichain:
        """Maximal elements of the complement of the generated upper ideal."""
        self._own(antichain)
        return Antichain._make(self, self._rowmotion_mask(antichain.mask))

    def inverse_rowmotion(self, antichain: Antichain) -> Antichain:
        """Minimal elements of the complement of the generated lower ideal."""
        self._own(antichain)
        mask = self._full & ~self._lower_mask(antichain.mask)
        return Antichain._make(self, self._min_of(mask))

    def _rowmotion_mask(self, mask: int) -> int:
        return self._max_of(self._full & ~self._upper_mask(mask))

    def rowmotion_power(self, antichain: Antichain, k: int) -> Antichain:
        """k-fold rowmotion; negative k applies the inverse."""
        self._own(antichain)
        out = antichain
        step = self.rowmotion if k >= 0 else self.inverse_rowmotion
        for _ in range(abs(k)):
            out = step(out)
        return out

    # -- exhaustive enumeration ----------------------------------------------

    def antichains(self) -> tuple[Antichain, ...]:
        """All antichains, sorted by their sorted member-index tuples."""
        if self._antichains is None:
            nbr = [
                self._up_strict[x] | self._down_strict[x] for x in range(self.n)
            ]
            found: list[int] = []

            def extend(i: int, mask: int) -> None:
                if i == self.n:
                    found.append(mask)
                    return
                extend(i + 1, mask)
                if not nbr[i] & mask:
                    extend(i + 1, mask | (1 << i))

            extend(0, 0)
            items = [Antichain._make(self, m) for m in found]
            items.sort(key=lambda a: a.members)
            self._antichains = tuple(items)
        return self._antichains

    def orbit_of(self, antichain: Antichain) -> Orbit:
        """The rowmotion cycle through the antichain."""
        self._own(antichain)
        masks = [antichain.mask]
        cur = self._rowmotion_mask(antichain.mask)
        while cur != antichain.mask:
            masks.append(cur)
            cur = self._rowmotion_mask(cur)
        start = min(
            range(len(masks)), key=lambda i: tuple(_bits(masks[i]))
        )
        ordered = masks[start:] + masks[:start]
        return Orbit(Antichain._make(self, m) for m in ordered)

    def orbits(self) -> tuple[Orbit, ...]:
        """Orbit decomposition of the full antichain set, deterministic order."""
        if self._orbits is None:
            seen: set[int] = set()
            out: list[Orbit] = []
            for a in self.antichains():
                if a.mask in seen:
                    continue
                orbit = self.orbit_of(a)
                seen.update(x.mask for x in orbit)
                out.append(orbit)
            out.sort(key=lambda o: (o.size, o.representative.members))
            self._orbits = tuple(out)
        return self._orbits

    def rowmotion_order(self) -> int:
        return lcm(*(o.size for o in self.orbits()))

    # -- gradings and the standard orbit -------------------------------------

    def grading(self) -> Grading | None:
        """Unique rank function raising by 1 along covers, if one exists."""
        if self._grading == "unset":
            self._grading = self._compute_grading()
        return self._grading  # type: ignore[return-value]

    def _compute_grading(self) -> Grading | None:
        if self.n == 0:
            return None
        up_cov: list[list[int]] = [[] for _ in range(self.n)]
        down_cov: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            up_cov[x].append(y)
            down_cov[y].append(x)
        rank: list[int | None] = [None] * self.n
        for seed in range(self.n):
            if rank[seed] is not None:
                continue
            rank[seed] = 0
            component = [seed]
            queue = [seed]
            while queue:
                x = queue.pop()
                for y, delta in [(y, 1) for y in up_cov[x]] + [
                    (y, -1) for y in down_cov[x]
                ]:
                    want = rank[x] + delta
                    if rank[y] is None:
                        rank[y] = want
                        component.append(y)
                        queue.append(y)
                    elif rank[y] != want:
                        return None
            base = min(rank[x] for x in component)
            for x in component:
                rank[x] += 1 - base
        ranks = tuple(rank)  # type: ignore[arg-type]
        level = max(ranks)
        minimal = frozenset(
            x for x in range(self.n) if not self._down_strict[x]
        )
        maximal = frozenset(x for x in range(self.n) if not self._up_strict[x])
        return Grading(
            ranks=ranks,
            level=level,
            bottoms_are_minimal=frozenset(
                x for x, r in enumerate(ranks) if r == 1
            )
            == minimal,
            tops_are_maximal=frozenset(
                x for x, r in enumerate(ranks) if r == level
            )
            == maximal,
        )

    def standard_orbit(self) -> Orbit:
        """The orbit through the empty antichain and the rank levels.

        Requires a grading whose rank-1 set is exactly the minimal elements
        and whose top-rank set is exactly the maximal elements; the orbit
        then visits the empty antichain followed by the levels from the top
        down, for a cycle of length level+1.
        """
        g = self.grading()
        if g is None or not (g.bottoms_are_minimal and g.tops_are_maximal):
            raise HypothesesNotMet(
                "standard orbit needs a grading with rank-1 elements minimal "
                "and top-rank elements maximal"
            )
        orbit = self.orbit_of(self.antichain())
        expected = [0] + [
            self._subset_mask(g.level_set(r)) for r in range(g.level, 0, -1)
        ]
        if [a.mask for a in orbit.antichains] != expected:
            raise PosetError("grading levels do not form a rowmotion cycle")
        return orbit

    # -- removal indices ------------------------------------------------------

    def removal_index(self, antichain: Antichain, element: int) -> int:
        """Change in the number of minimal ideal generators when one is deleted.

        For the upper ideal I generated by the antichain, this is
        ``#min(I \\ {element}) - #antichain + 1``.
        """
        self._own(antichain)
        if element not in antichain:
            raise NotAMember(
                f"{self.labels[element] if 0 <= element < self.n else element!r}"
                " is not a member of the antichain"
            )
        rest = self._upper_mask(antichain.mask) & ~(1 << element)
        return self._min_of(rest).bit_count() - len(antichain) + 1

    def weighted_removal_sum(
        self, antichain: Antichain, weight: Callable[[int], int] | None = None
    ) -> int:
        """Sum of per-member removal indices, optionally weighted per element.

        The empty antichain sums to 0.  With the default unit weight this is
        the removal-index form of the oy number on type-A posets.
        """
        self._own(antichain)
        total = 0
        for x in antichain:
            r = self.removal_index(antichain, x)
            total += r if weight is None else weight(x) * r
        return total

    # -- counting identities ---------------------------------------------------

    def antichain_edge_count(self) -> int:
        """Total antichain size, which counts the edges of the antichain poset."""
        return sum(len(a) for a in self.antichains())

    def antichain_cover_count(self) -> int:
        """Covers of the antichain poset, counted as one-element ideal extensions."""
        total = 0
        for a in self.antichains():
            ideal = self._upper_mask(a.mask)
            for x in _bits(self._full & ~ideal):
                if not self._up_strict[x] & ~ideal:
                    total += 1
        return total

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n}>"


def from_cover_relations(
    labels: Iterable[str], covers: Iterable[tuple[str, str]]
) -> Poset:
    """Build a poset from labelled cover pairs ``(lower, upper)``.

    The order is the reflexive-transitive closure; redundant (non-cover)
    pairs are tolerated and the Hasse diagram is recomputed canonically.
    """
    labels = [str(lab) for lab in labels]
    if len(set(labels)) != len(labels):
        raise PosetError("labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for lo, hi in covers:
        for tok in (lo, hi):
            if tok not in index:
                raise UnknownLabel(f"unknown element {tok!r} in cover relation")
        a, b = index[lo], index[hi]
        if a == b:
            raise CycleDetected(f"element {lo!r} cannot cover itself")
        succ[a].append(b)
        indegree[b] += 1
    order = [x for x in range(n) if indegree[x] == 0]
    pending = list(indegree)
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in succ[x]:
            pending[y] -= 1
            if pending[y] == 0:
                order.append(y)
    if len(order) < n:
        stuck = next(labels[x] for x in range(n) if pending[x] > 0)
        raise CycleDetected(f"cover relations contain a cycle through {stuck!r}")
    ups = [1 << x for x in range(n)]
    for x in reversed(order):
        for y in succ[x]:
            ups[x] |= ups[y]
    return Poset(labels, ups)


def parse_poset_text(text: str) -> Poset:
    """Parse the cover-per-line poset format.

    One cover per line as ``lower < upper``; ``#`` starts a comment; a line
    holding a single bare token declares an isolated element.
    """
    labels: list[str] = []
    seen: set[str] = set()
    covers: list[tuple[str, str]] = []

    def declare(tok: str) -> None:
        if tok not in seen:
            seen.add(tok)
            labels.append(tok)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "<" in line:
            parts = [p.strip() for p in line.split("<")]
            if len(parts) != 2 or not all(parts):
                raise FileFormatError(
                    f"line {lineno}: expected 'lower < upper', got {line!r}",
                    lineno,
                )
            lo, hi = parts
            for tok in (lo, hi):
                if len(tok.split()) != 1:
                    raise FileFormatError(
                        f"line {lineno}: {tok!r} is not a bare token", lineno
                    )
                declare(tok)
            covers.append((lo, hi))
        else:
            if len(line.split()) != 1:
                raise FileFormatError(
                    f"line {lineno}: expected a single element name or "
                    f"'lower < upper', got {line!r}",
                    lineno,
                )
            declare(line)
    return from_cover_relations(labels, covers)


def load_poset_file(path: str) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset_text(fh.read())


def _cover_masks(poset: Poset) -> tuple[list[int], list[int]]:
    up = [0] * poset.n
    down = [0] * poset.n
    for x, y in poset.covers:
        up[x] |= 1 << y
        down[y] |= 1 << x
    return up, down


def _signature_classes(poset: Poset) -> list[int]:
    """Partition elements by iterated up/down cover-degree refinement."""
    up_cov, down_cov = _cover_masks(poset)
    raw = [
        (poset._up_strict[x].bit_count(), poset._down_strict[x].bit_count())
        for x in range(poset.n)
    ]
    relabel = {v: i for i, v in enumerate(sorted(set(raw)))}
    sig = [relabel[v] for v in raw]
    for _ in range(poset.n):
        combined = [
            (
                sig[x],
                tuple(sorted(sig[y] for y in _bits(up_cov[x]))),
                tuple(sorted(sig[y] for y in _bits(down_cov[x]))),
            )
            for x in range(poset.n)
        ]
        relabel = {v: i for i, v in enumerate(sorted(set(combined)))}
        new = [relabel[v] for v in combined]
        if new == sig:
            break
        sig = new
    return sig


def isomorphism(
    p: Poset, q: Poset, max_elements: int = 64
) -> dict[int, int] | None:
    """Cover-preserving bijection between two posets, or None.

    Uses iterated signature refinement to cut the search space, then
    backtracking.  Intended for the modest posets compared here; raises
    SizeLimitExceeded beyond ``max_elements``.
    """
    if p.n > max_elements or q.n > max_elements:
        raise SizeLimitExceeded(
            f"isomorphism search limited to {max_elements} elements"
        )
    if p.n != q.n or len(p.covers) != len(q.covers):
        return None
    sig_p = _signature_classes(p)
    sig_q = _signature_classes(q)
    if sorted(sig_p) != sorted(sig_q):
        return None

    candidates: dict[int, list[int]] = {}
    for x in range(p.n):
        candidates[x] = [y for y in range(q.n) if sig_q[y] == sig_p[x]]
    order = sorted(range(p.n), key=lambda x: (len(candidates[x]), x))

    p_up, p_down = _cover_masks(p)
    q_up, q_down = _cover_masks(q)
    mapping = [-1] * p.n
    used = [False] * q.n

    def place(pos: int) -> bool:
        if pos == p.n:
            return True
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for u in order[:pos]:
                fu = mapping[u]
                if (p_up[x] >> u & 1) != (q_up[y] >> fu & 1):
                    ok = False
                    break
                if (p_down[x] >> u & 1) != (q_down[y] >> fu & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[x] = y
            used[y] = True
            if place(pos + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if not place(0):
        return None
    image = {(mapping[a], mapping[b]) for a, b in p.covers}
    if image != set(q.covers):
        return None
    return {x: mapping[x] for x in range(p.n)}
