"""Irreducible root systems A-G with exact integer arithmetic.

Positive roots are coefficient vectors over the simple roots in Bourbaki
numbering, generated height by height from the Cartan matrix via the
root-string condition.  The root order compares coefficient vectors
componentwise; its covers differ by a single simple root.  Subposets
(non-simple roots, short roots, height cutoffs, parabolic supports)
inherit the order and recompute their covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .poset import Antichain, Poset

CARTAN_TYPES = "ABCDEFG"


class RootSystemError(ValueError):
    """Base class for root-system errors."""


class InvalidRank(RootSystemError):
    """The (type, rank) pair does not name an irreducible root system."""


class NoShortRoots(RootSystemError):
    """A short-root construction was requested in a simply-laced type."""


class UnsupportedVariant(RootSystemError):
    """No closed counting formula exists for this poset variant."""


class ConventionMismatch(RootSystemError):
    """The printing convention does not apply to this root system."""


@dataclass(frozen=True)
class Variant:
    """Which subset of the positive roots to take as a poset."""

    kind: str
    cutoff: int = 0
    nodes: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "height_geq":
            return f"height-geq:{self.cutoff}"
        if self.kind == "parabolic":
            return "parabolic:" + ",".join(str(i + 1) for i in self.nodes)
        return self.kind.replace("_", "-")


FULL = Variant("full")
NO_SIMPLE = Variant("no_simple")
SHORT = Variant("short")
SHORT_NO_SIMPLE = Variant("short_no_simple")


def height_geq(cutoff: int) -> Variant:
    """Roots of height at least ``cutoff`` (1 gives the full poset)."""
    if cutoff < 1:
        raise RootSystemError("height cutoff must be at least 1")
    return Variant("height_geq", cutoff=cutoff)


def parabolic(nodes: Iterable[int]) -> Variant:
    """Roots supported on the given simple roots (1-based numbering)."""
    cleaned = tuple(sorted(set(int(i) - 1 for i in nodes)))
    if any(i < 0 for i in cleaned):
        raise RootSystemError("simple-root numbers start at 1")
    return Variant("parabolic", nodes=cleaned)


def parse_variant(text: str) -> Variant:
    token = text.strip().lower().replace("_", "-")
    basics = {
        "full": FULL,
        "no-simple": NO_SIMPLE,
        "short": SHORT,
        "short-no-simple": SHORT_NO_SIMPLE,
    }
    if token in basics:
        return basics[token]
    if token.startswith("height-geq:"):
        return height_geq(int(token.split(":", 1)[1]))
    if token.startswith("parabolic:"):
        return parabolic(int(i) for i in token.split(":", 1)[1].split(","))
    raise RootSystemError(f"unknown poset variant {text!r}")


def _cartan_matrix(ct: str, n: int) -> tuple[tuple[int, ...], ...]:
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def join(i: int, j: int, down: int = -1, up: int = -1) -> None:
        a[i][j] = down
        a[j][i] = up

    if ct in "ABCFG":
        for i in range(n - 1):
            join(i, i + 1)
    if ct == "B":
        a[n - 2][n - 1] = -2
    elif ct == "C":
        a[n - 1][n - 2] = -2
    elif ct == "D":
        for i in range(n - 3):
            join(i, i + 1)
        join(n - 3, n - 2)
        join(n - 3, n - 1)
    elif ct == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            join(i, j)
        if n >= 7:
            join(5, 6)
        if n == 8:
            join(6, 7)
    elif ct == "F":
        a[1][2] = -2
    elif ct == "G":
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _half_norms(ct: str, n: int) -> tuple[int, ...]:
    # (alpha_i, alpha_i)/2, normalised so short simple roots get 1
    if ct == "B":
        return tuple([2] * (n - 1) + [1])
    if ct == "C":
        return tuple([1] * (n - 1) + [2])
    if ct == "F":
        return (2, 2, 1, 1)
    if ct == "G":
        return (1, 3)
    return tuple([1] * n)


_E_EXPONENTS = {
    6: (1, 4, 5, 7, 8, 11),
    7: (1, 5, 7, 9, 11, 13, 17),
    8: (1, 7, 11, 13, 17, 19, 23, 29),
}


def _exponents(ct: str, n: int) -> tuple[int, ...]:
    if ct == "A":
        return tuple(range(1, n + 1))
    if ct in "BC":
        return tuple(range(1, 2 * n, 2))
    if ct == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    if ct == "E":
        return _E_EXPONENTS[n]
    if ct == "F":
        return (1, 5, 7, 11)
    return (1, 5)


def _diagram_involution(ct: str, n: int) -> tuple[int, ...]:
    # permutation of simple roots induced by negating the longest Weyl element
    if ct == "A":
        return tuple(range(n - 1, -1, -1))
    if ct == "D" and n % 2 == 1:
        perm = list(range(n))
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        return tuple(perm)
    if ct == "E" and n == 6:
        return (5, 1, 4, 3, 2, 0)
    return tuple(range(n))


def _positive_roots(
    cartan: tuple[tuple[int, ...], ...], n: int
) -> list[tuple[int, ...]]:
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found: set[tuple[int, ...]] = set(units)
    layer = list(units)
    while layer:
        nxt: list[tuple[int, ...]] = []
        for gamma in layer:
            for i in range(n):
                pairing = sum(c * cartan[j][i] for j, c in enumerate(gamma) if c)
                down = 0
                probe = list(gamma)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in found:
                        break
                    down += 1
                if down - pairing >= 1:
                    up = list(gamma)
                    up[i] += 1
                    candidate = tuple(up)
                    if candidate not in found:
                        found.add(candidate)
                        nxt.append(candidate)
        layer = nxt
    return sorted(found, key=lambda v: (sum(v), v))


def _vector_leq(v: tuple[int, ...], w: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(v, w))


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootPoset(Poset):
    """A poset of positive roots selected by a variant.

    Elements are ordered by (height, coefficient vector); the order is the
    componentwise comparison of coefficient vectors inherited from the
    ambient root system, with covers recomputed inside the selection.
    """

    __slots__ = (
        "system",
        "variant",
        "root_ids",
        "vectors",
        "short_flags",
        "heights",
        "_vector_index",
        "_involution",
    )

    def __init__(self, system: "RootSystem", variant: Variant, root_ids: tuple[int, ...]):
        vectors = tuple(system.roots[r] for r in root_ids)
        labels = [system.format_root(v) for v in vectors]
        ups = []
        k = len(vectors)
        for i in range(k):
            mask = 0
            for j in range(k):
                if _vector_leq(vectors[i], vectors[j]):
                    mask |= 1 << j
            ups.append(mask)
        super().__init__(labels, ups)
        self.system = system
        self.variant = variant
        self.root_ids = root_ids
        self.vectors = vectors
        self.short_flags = tuple(system.is_short[r] for r in root_ids)
        self.heights = tuple(system.heights[r] for r in root_ids)
        self._vector_index = {v: i for i, v in enumerate(vectors)}
        self._involution: tuple[int, ...] | None = None

    def element_for_vector(self, vector: tuple[int, ...]) -> int:
        try:
            return self._vector_index[tuple(vector)]
        except KeyError:
            raise RootSystemError(
                f"{self.system.format_root(vector) if len(vector) == self.system.rank else vector}"
                " is not an element of this poset"
            ) from None

    def is_short_element(self, element: int) -> bool:
        return self.short_flags[element]

    def height_of(self, element: int) -> int:
        return self.heights[element]

    def minus_w0_elements(self) -> tuple[int, ...]:
        """Element permutation induced by the diagram involution."""
        if self._involution is None:
            perm = self.system.minus_w0
            images = []
            for v in self.vectors:
                w = [0] * len(v)
                for i, c in enumerate(v):
                    w[perm[i]] = c
                images.append(self.element_for_vector(tuple(w)))
            self._involution = tuple(images)
        return self._involution

    def format_element(self, element: int, convention: str = "bourbaki") -> str:
        return self.system.format_root(self.vectors[element], convention)

    def format_antichain(
        self, antichain: Antichain, convention: str = "bourbaki", sep: str = ","
    ) -> str:
        self._own(antichain)
        return sep.join(self.format_element(x, convention) for x in antichain)

    def parse_antichain(self, text: str, convention: str = "bourbaki") -> Antichain:
        members = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                continue
            vector = self.system.parse_root(token, convention)
            members.append(self.element_for_vector(vector))
        return self.antichain(members)


class RootSystem:
    """Static data of one irreducible root system, Bourbaki numbering."""

    def __init__(self, cartan_type: str, rank: int):
        ct = cartan_type.upper()
        if ct not in _VALID_RANKS or not isinstance(rank, int):
            raise InvalidRank(f"unknown Cartan type {cartan_type!r}")
        if not _VALID_RANKS[ct](rank):
            raise InvalidRank(f"{ct}{rank} is not an irreducible root system")
        self.cartan_type = ct
        self.rank = rank
        self.cartan = _cartan_matrix(ct, rank)
        self.roots = tuple(_positive_roots(self.cartan, rank))
        self.heights = tuple(sum(v) for v in self.roots)
        self.exponents = _exponents(ct, rank)
        self.h = self.exponents[-1] + 1
        self.minus_w0 = _diagram_involution(ct, rank)

        half = _half_norms(ct, rank)
        norms = []
        for v in self.roots:
            total = 0
            for i, ci in enumerate(v):
                if not ci:
                    continue
                for j, cj in enumerate(v):
                    if cj:
                        total += ci * cj * half[j] * self.cartan[i][j]
            norms.append(total)
        two_lengths = len(set(norms)) > 1
        shortest = min(norms)
        self.is_short = tuple(two_lengths and m == shortest for m in norms)

        self._check_tables()
        self._root_set = frozenset(self.roots)
        self.theta = self._unique_maximum(range(len(self.roots)))
        self.theta_s = (
            self._unique_maximum(
                [i for i, s in enumerate(self.is_short) if s]
            )
            if two_lengths
            else None
        )
        for v in self.roots:
            w = [0] * rank
            for i, c in enumerate(v):
                w[self.minus_w0[i]] = c
            if tuple(w) not in self._root_set:
                raise RootSystemError("diagram involution does not permute roots")
        self._posets: dict[Variant, RootPoset] = {}

    def _check_tables(self) -> None:
        n, h = self.rank, self.h
        if len(self.roots) != n * h // 2 or sum(self.exponents) != len(self.roots):
            raise RootSystemError("exponent table disagrees with root count")
        if max(self.heights) != h - 1:
            raise RootSystemError("maximal height disagrees with Coxeter number")
        counts = [self.heights.count(i) for i in range(1, h)]
        if any(a < b for a, b in zip(counts, counts[1:])):
            raise RootSystemError("height distribution is not weakly decreasing")

    def _unique_maximum(self, ids: Iterable[int]) -> int:
        ids = list(ids)
        tops = [
            i
            for i in ids
            if not any(
                j != i and _vector_leq(self.roots[i], self.roots[j]) for j in ids
            )
        ]
        if len(tops) != 1:
            raise RootSystemError("expected a unique maximal root")
        return tops[0]

    # -- derived quantities ---------------------------------------------------

    @property
    def n_positive_roots(self) -> int:
        return len(self.roots)

    @property
    def short_level(self) -> int:
        """Height of the highest short root (two root lengths only)."""
        if self.theta_s is None:
            raise NoShortRoots(f"{self} has a single root length")
        return self.heights[self.theta_s]

    @property
    def has_two_lengths(self) -> bool:
        return self.theta_s is not None

    @property
    def minus_w0_is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.minus_w0))

    # -- posets -----------------------------------------------------------------

    def root_poset(self, variant: Variant = FULL) -> RootPoset:
        """The selected roots as an induced subposet of the root order."""
        if variant not in self._posets:
            self._posets[variant] = RootPoset(
                self, variant, self._select(variant)
            )
        return self._posets[variant]

    def _select(self, variant: Variant) -> tuple[int, ...]:
        ids = range(len(self.roots))
        if variant.kind == "full":
            return tuple(ids)
        if variant.kind == "no_simple":
            return tuple(i for i in ids if self.heights[i] >= 2)
        if variant.kind in ("short", "short_no_simple"):
            if self.theta_s is None:
                raise NoShortRoots(
                    f"{self} is simply laced; it has no short-root poset"
                )
            floor = 2 if variant.kind == "short_no_simple" else 1
            return tuple(
                i for i in ids if self.is_short[i] and self.heights[i] >= floor
            )
        if variant.kind == "height_geq":
            return tuple(i for i in ids if self.heights[i] >= variant.cutoff)
        if variant.kind == "parabolic":
            support = set(variant.nodes)
            if any(i >= self.rank for i in support):
                raise RootSystemError("parabolic node outside the rank")
            return tuple(
                i
                for i in ids
                if all(c == 0 or j in support for j, c in enumerate(self.roots[i]))
            )
        raise RootSystemError(f"unknown poset variant {variant!r}")

    def expected_antichain_count(self, variant: Variant = FULL) -> int:
        """Closed product formula for the antichain count, exact arithmetic."""
        h = self.h
        if variant.kind == "full":
            exps = self.exponents
            shift = 1
        elif variant.kind == "no_simple":
            exps = self.exponents
            shift = -1
        elif variant.kind == "short":
            if self.theta_s is None:
                raise NoShortRoots(
                    f"{self} is simply laced; it has no short-root poset"
                )
            m = sum(
                1
                for i, s in enumerate(self.is_short)
                if s and self.heights[i] == 1
            )
            exps = tuple(sorted(self.exponents))[:m]
            shift = 1
        else:
            raise UnsupportedVariant(
                f"no counting formula for variant {variant}; enumerate instead"
            )
        product = Fraction(1)
        for e in exps:
            product *= Fraction(h + e + shift, e + 1)
        if product.denominator != 1:
            raise RootSystemError(
                f"antichain-count product for {self} is not an integer"
            )
        return int(product)

    # -- involution and bipartition ----------------------------------------------

    def minus_w0_on_antichains(self) -> Callable[[Antichain], Antichain]:
        """Elementwise action of the diagram involution on full-poset antichains."""
        poset = self.root_poset()
        perm = poset.minus_w0_elements()

        def apply(antichain: Antichain) -> Antichain:
            poset._own(antichain)
            mask = 0
            for x in antichain:
                mask |= 1 << perm[x]
            return Antichain._make(poset, mask)

        return apply

    def orthogonal_bipartition(self) -> tuple[Antichain, Antichain]:
        """Two-colouring of the Dynkin diagram as a pair of antichains.

        The classes are pairwise orthogonal simple roots; the first class
        contains the first simple root.
        """
        n = self.rank
        colour = [-1] * n
        colour[0] = 0
        queue = [0]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j != i and self.cartan[i][j] != 0:
                    if colour[j] == -1:
                        colour[j] = 1 - colour[i]
                        queue.append(j)
                    elif colour[j] == colour[i]:
                        raise RootSystemError("Dynkin diagram is not bipartite")
        poset = self.root_poset()
        unit = lambda i: tuple(int(k == i) for k in range(n))
        classes = (
            [poset.element_for_vector(unit(i)) for i in range(n) if colour[i] == c]
            for c in (0, 1)
        )
        return tuple(poset.antichain(members) for members in classes)

    # -- printing and parsing -------------------------------------------------------

    def _interval(self, vector: tuple[int, ...]) -> tuple[int, int]:
        support = [i for i, c in enumerate(vector) if c]
        return support[0] + 1, support[-1] + 1

    def format_root(self, root, convention: str = "bourbaki") -> str:
        """Coefficient string (or type-A interval) for a root.

        ``root`` may be an index into the positive roots or a coefficient
        vector.  ``paper-f4`` reverses the numbering so F4 tables print in
        the reversed-index convention; ``interval-a`` prints type-A roots
        as ``(i,j)``.
        """
        vector = self.roots[root] if isinstance(root, int) else tuple(root)
        token = convention.strip().lower().replace("_", "-")
        if token == "bourbaki":
            return "".join(str(c) for c in vector)
        if token == "paper-f4":
            if (self.cartan_type, self.rank) != ("F", 4):
                raise ConventionMismatch("paper-f4 convention applies to F4 only")
            return "".join(str(c) for c in reversed(vector))
        if token == "interval-a":
            if self.cartan_type != "A":
                raise ConventionMismatch("interval convention applies to type A only")
            i, j = self._interval(vector)
            return f"({i},{j})"
        raise ConventionMismatch(f"unknown convention {convention!r}")

    def parse_root(self, text: str, convention: str = "bourbaki") -> tuple[int, ...]:
        token = convention.strip().lower().replace("_", "-")
        text = text.strip()
        if token == "interval-a":
            if self.cartan_type != "A":
                raise ConventionMismatch("interval convention applies to type A only")
            body = text[1:-1] if text.startswith("(") and text.endswith(")") else text
            sep = "," if "," in body else "-"
            try:
                lo, hi = (int(p) for p in body.split(sep))
            except ValueError:
                raise RootSystemError(f"cannot parse interval {text!r}") from None
            if not 1 <= lo <= hi <= self.rank:
                raise RootSystemError(f"interval {text!r} outside 1..{self.rank}")
            return tuple(int(lo <= k + 1 <= hi) for k in range(self.rank))
        if token == "paper-f4":
            if (self.cartan_type, self.rank) != ("F", 4):
                raise ConventionMismatch("paper-f4 convention applies to F4 only")
        elif token != "bourbaki":
            raise ConventionMismatch(f"unknown convention {convention!r}")
        if len(text) != self.rank or not text.isdigit():
            raise RootSystemError(
                f"expected {self.rank} coefficient digits, got {text!r}"
            )
        digits = tuple(int(c) for c in text)
        vector = tuple(reversed(digits)) if token == "paper-f4" else digits
        if vector not in self._root_set:
            raise RootSystemError(f"{text!r} is not a positive root of {self}")
        return vector

    def __repr__(self) -> str:
        return f"{self.cartan_type}{self.rank}"


@lru_cache(maxsize=None)
def _build_cached(cartan_type: str, rank: int) -> RootSystem:
    return RootSystem(cartan_type, rank)


def build(cartan_type: str, rank: int) -> RootSystem:
    """Shared, cached constructor so poset identities agree across callers."""
    if not isinstance(cartan_type, str):
        raise InvalidRank(f"unknown Cartan type {cartan_type!r}")
    return _build_cached(cartan_type.upper(), int(rank))
