"""Exhaustive verifiers for the catalogued orbit claims.

Each check enumerates everything in sight and returns a Report with
structured evidence; a FAIL always carries a concrete witness that can be
replayed in isolation.  All comparisons are exact (integers and
fractions); nothing is assumed, conjectural statements included.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from . import f4_tables, typea
from .poset import Antichain, Orbit, Poset, from_cover_relations, isomorphism
from .roots import (
    FULL,
    NO_SIMPLE,
    SHORT,
    SHORT_NO_SIMPLE,
    RootPoset,
    RootSystem,
    build,
    height_geq,
)

PASS = "PASS"
FAIL = "FAIL"
UNSUPPORTED = "UNSUPPORTED"

DEFAULT_MATRIX: tuple[tuple[str, int], ...] = tuple(
    [("A", n) for n in range(1, 8)]
    + [("B", n) for n in range(2, 6)]
    + [("C", n) for n in range(2, 6)]
    + [("D", 4), ("D", 5), ("E", 6), ("F", 4), ("G", 2)]
)
E78_MATRIX: tuple[tuple[str, int], ...] = (("E", 7), ("E", 8))
TWO_LENGTH_MATRIX: tuple[tuple[str, int], ...] = tuple(
    (t, n) for t, n in DEFAULT_MATRIX if t in "BCFG"
)


@dataclass
class Report:
    """Outcome of one verified claim on one scope."""

    claim_id: str
    scope: str
    status: str
    evidence: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> str:
        payload = {
            "claim_id": self.claim_id,
            "scope": self.scope,
            "status": self.status,
            "evidence": self.evidence,
        }
        return json.dumps(payload, sort_keys=True, default=str)


def _frac(value: Fraction) -> str:
    return str(value)

def _sizes(orbits: Iterable[Orbit]) -> list[int]:
    return sorted(o.size for o in orbits)


def _witness(poset: Poset, antichain: Antichain) -> dict:
    if isinstance(poset, RootPoset):
        name = f"{poset.system}:{poset.variant}"
    else:
        name = repr(poset)
    return {"poset": name, "antichain": list(antichain.labelled())}


def _report(claim_id: str, scope: str, ok: bool, evidence: dict) -> Report:
    return Report(claim_id, scope, PASS if ok else FAIL, evidence)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


# -- full-poset order and mean claims -------------------------------------------


def _orbit_structure_check(
    claim_id: str,
    scope: str,
    poset: RootPoset,
    cycle_length: int,
    target_mean: Fraction,
) -> tuple[bool, dict]:
    """Shared core: order h or 2h with the involution halfway, means exact."""
    orbits = poset.orbits()
    perm = poset.minus_w0_elements()
    involution_trivial = all(i == p for i, p in enumerate(perm))
    order = poset.rowmotion_order()
    evidence: dict = {
        "antichains": len(poset.antichains()),
        "orbit_sizes": _sizes(orbits),
        "order": order,
        "involution_trivial": involution_trivial,
        "target_mean": _frac(target_mean),
    }
    ok = True
    if involution_trivial:
        evidence["expected_order"] = cycle_length
        if order != cycle_length:
            ok = False
            evidence["order_mismatch"] = True
    else:
        evidence["expected_order"] = 2 * cycle_length
        if order != 2 * cycle_length:
            ok = False
            evidence["order_mismatch"] = True
        for a in poset.antichains():
            image = a
            for _ in range(cycle_length):
                image = poset.rowmotion(image)
            mapped = 0
            for x in a:
                mapped |= 1 << perm[x]
            if image.mask != mapped:
                ok = False
                evidence["involution_witness"] = _witness(poset, a)
                break
    bad_mean = next((o for o in orbits if o.mean_size != target_mean), None)
    if bad_mean is not None:
        ok = False
        evidence["mean_witness"] = _witness(poset, bad_mean.representative)
        evidence["mean_witness_value"] = _frac(bad_mean.mean_size)
    return ok, evidence


def check_conjecture_2_1(rs: RootSystem) -> Report:
    """Full poset: order h (or 2h with the involution at step h); means n/2."""
    poset = rs.root_poset(FULL)
    ok, evidence = _orbit_structure_check(
        "conj-2.1", str(rs), poset, rs.h, Fraction(rs.rank, 2)
    )
    evidence["h"] = rs.h
    return _report("conj-2.1", str(rs), ok, evidence)


def check_conjecture_2_2(rs: RootSystem) -> Report:
    """Non-simple poset: same structure one level down, plus the standard cycle."""
    poset = rs.root_poset(NO_SIMPLE)
    target = Fraction(rs.rank * (rs.h - 2), 2 * (rs.h - 1))
    ok, evidence = _orbit_structure_check(
        "conj-2.2", str(rs), poset, rs.h - 1, target
    )
    evidence["h"] = rs.h
    standard = poset.orbit_of(poset.antichain())
    evidence["standard_orbit_size"] = standard.size
    if standard.size != rs.h - 1:
        ok = False
        evidence["standard_orbit_mismatch"] = True
    sizes = {o.size for o in poset.orbits()}
    evidence["sizes_all_equal"] = len(sizes) == 1
    return _report("conj-2.2", str(rs), ok, evidence)


def check_conjecture_2_3(rs: RootSystem) -> Report:
    """Short poset: order is one plus the highest short root's height."""
    claim = "conj-2.3"
    if not rs.has_two_lengths:
        return Report(
            claim, str(rs), UNSUPPORTED, {"reason": "single root length"}
        )
    poset = rs.root_poset(SHORT)
    orbits = poset.orbits()
    order_target = rs.short_level + 1
    mean_target = Fraction(poset.n, order_target)
    evidence: dict = {
        "antichains": len(poset.antichains()),
        "orbit_sizes": _sizes(orbits),
        "order": poset.rowmotion_order(),
        "expected_order": order_target,
        "orbit_count": len(orbits),
        "target_mean": _frac(mean_target),
    }
    ok = poset.rowmotion_order() == order_target
    bad = next((o for o in orbits if o.mean_size != mean_target), None)
    if bad is not None:
        ok = False
        evidence["mean_witness"] = _witness(poset, bad.representative)
    expected_counts = {"B": 1, "F": 3, "G": 1}
    want = expected_counts.get(rs.cartan_type)
    if want is not None:
        evidence["expected_orbit_count"] = want
        ok = ok and len(orbits) == want
    return _report(claim, str(rs), ok, evidence)


def check_conjecture_2_4(n: int) -> Report:
    """Symplectic short poset: all orbits of size 2n-1, Catalan-many, with a
    unique representative supported away from the last two simple roots."""
    rs = build("C", n)
    poset = rs.root_poset(SHORT)
    orbits = poset.orbits()
    size_target = 2 * n - 1
    evidence: dict = {
        "antichains": len(poset.antichains()),
        "expected_antichains": comb(2 * n - 1, n),
        "orbit_sizes": _sizes(orbits),
        "orbit_count": len(orbits),
        "expected_orbit_count": catalan(n - 1),
    }
    ok = (
        len(poset.antichains()) == comb(2 * n - 1, n)
        and all(o.size == size_target for o in orbits)
        and len(orbits) == catalan(n - 1)
    )
    inner = []
    for o in orbits:
        hits = [
            a
            for a in o
            if all(
                poset.vectors[x][n - 2] == 0 and poset.vectors[x][n - 1] == 0
                for x in a
            )
        ]
        inner.append(len(hits))
        if len(hits) != 1:
            ok = False
            evidence["support_witness"] = _witness(poset, o.representative)
    evidence["inner_representatives_per_orbit"] = inner
    return _report("conj-2.4", f"C{n}", ok, evidence)


def check_short_no_simple_f4() -> Report:
    """F4 short non-simple poset: 16 antichains in two orbits of 8.

    The same construction is a chain (hence trivial) for the B types and
    G2, and for C types it is a copy of the next symplectic poset down,
    which the isomorphism facts cover.
    """
    rs = build("F", 4)
    poset = rs.root_poset(SHORT_NO_SIMPLE)
    orbits = poset.orbits()
    ok = len(poset.antichains()) == 16 and _sizes(orbits) == [8, 8]
    evidence: dict = {
        "antichains": len(poset.antichains()),
        "orbit_sizes": _sizes(orbits),
    }
    trivial = {}
    for t, n in (("B", 2), ("B", 3), ("B", 4), ("B", 5), ("G", 2)):
        sub = build(t, n).root_poset(SHORT_NO_SIMPLE)
        trivial[f"{t}{n}"] = sub.is_chain()
    evidence["chain_cases"] = trivial
    ok = ok and all(trivial.values())
    if not ok:
        evidence["witness"] = _witness(poset, poset.antichain())
    return _report("short-no-simple-f4", "F4", ok, evidence)


def check_height_geq_remark() -> Report:
    """F4 roots of height >= 3: orbits 10 and 8, order 40, unequal means."""
    rs = build("F", 4)
    poset = rs.root_poset(height_geq(3))
    orbits = poset.orbits()
    means = sorted({_frac(o.mean_size) for o in orbits})
    control = rs.root_poset(height_geq(2))
    evidence: dict = {
        "orbit_sizes": _sizes(orbits),
        "order": poset.rowmotion_order(),
        "means": means,
        "control_matches_no_simple": control.root_ids
        == rs.root_poset(NO_SIMPLE).root_ids,
        "control_orbit_sizes": _sizes(rs.root_poset(NO_SIMPLE).orbits()),
    }
    ok = (
        set(o.size for o in orbits) == {8, 10}
        and poset.rowmotion_order() == 40
        and len(means) > 1
        and evidence["control_matches_no_simple"]
        and evidence["control_orbit_sizes"] == [11] * 6
    )
    if not ok:
        evidence["witness"] = _witness(poset, orbits[0].representative)
    return _report("height-geq-3-f4", "F4", ok, evidence)


def check_example_2_2(n: int) -> Report:
    """Closed form for the rowmotion trajectory of the first simple root in A_n."""
    rs = build("A", n)
    poset = rs.root_poset(FULL)
    alpha = lambda t: poset.element_for_vector(
        tuple(int(k == t - 1) for k in range(n))
    )
    start = poset.antichain([alpha(1)])
    orbit = poset.orbit_of(start)
    evidence: dict = {"orbit_size": orbit.size, "mean": _frac(orbit.mean_size)}
    ok = orbit.size == 2 * n + 2 and orbit.mean_size == Fraction(n, 2)
    current = start
    for k in range(1, n + 1):
        current = poset.rowmotion(current)
        expected = {
            x
            for x in range(poset.n)
            if poset.vectors[x][n - 1] == 0 and poset.heights[x] == n + 1 - k
        }
        if k + 1 <= n:
            expected.add(
                poset.element_for_vector(
                    tuple(int(k + 1 <= t + 1 <= n) for t in range(n))
                )
            )
        if set(current.members) != expected:
            ok = False
            evidence["step_witness"] = {"k": k, **_witness(poset, current)}
            break
    else:
        final = poset.rowmotion(current)
        if set(final.members) != {alpha(n)}:
            ok = False
            evidence["final_witness"] = _witness(poset, final)
    return _report("example-2.2", f"A{n}", ok, evidence)


def example_2_6_posets() -> tuple[Poset, Poset]:
    """The two contrasting level-3 posets built from explicit covers."""
    p1 = from_cover_relations(
        ["a1", "a2", "a3", "b1", "b2", "c"],
        [
            ("a1", "b1"),
            ("a2", "b1"),
            ("a2", "b2"),
            ("a3", "b2"),
            ("b1", "c"),
            ("b2", "c"),
        ],
    )
    p2 = from_cover_relations(
        ["a1", "a2", "a3", "b1", "b2", "b3", "c"],
        [
            ("a1", "b1"),
            ("a1", "b2"),
            ("a2", "b2"),
            ("a2", "b3"),
            ("a3", "b3"),
            ("b2", "c"),
            ("b3", "c"),
        ],
    )
    return p1, p2


def check_example_2_6() -> Report:
    """Adding one middle element flips the orbit structure completely."""
    p1, p2 = example_2_6_posets()
    orbits1, orbits2 = p1.orbits(), p2.orbits()
    means2 = {o.mean_size for o in orbits2}
    iso = isomorphism(p1, build("A", 3).root_poset(FULL))
    evidence: dict = {
        "p1_orbit_sizes": _sizes(orbits1),
        "p1_means": sorted(_frac(o.mean_size) for o in orbits1),
        "p1_isomorphic_to_A3": iso is not None,
        "p2_orbit_sizes": _sizes(orbits2),
        "p2_order": p2.rowmotion_order(),
        "p2_means": sorted(map(str, means2)),
    }
    ok = (
        _sizes(orbits1) == [2, 4, 8]
        and all(o.mean_size == Fraction(3, 2) for o in orbits1)
        and iso is not None
        and _sizes(orbits2) == [7, 16]
        and p2.rowmotion_order() == 112
        and len(means2) == 2
    )
    if not ok:
        evidence["witness"] = _witness(p2, orbits2[0].representative)
    return _report("example-2.6", "custom", ok, evidence)


def check_edge_identity(rs: RootSystem, variant=FULL) -> Report:
    """Total antichain size equals #antichains * #elements / level count,
    and matches the cover count of the antichain poset."""
    if variant.kind not in ("full", "no_simple"):
        raise ValueError("edge identity applies to the full and non-simple posets")
    poset = rs.root_poset(variant)
    denom = rs.h if variant.kind == "full" else rs.h - 1
    total = poset.antichain_edge_count()
    expected = Fraction(len(poset.antichains()) * poset.n, denom)
    covers = poset.antichain_cover_count()
    evidence = {
        "sum_of_sizes": total,
        "formula_value": _frac(expected),
        "cover_count": covers,
    }
    ok = Fraction(total) == expected and covers == total
    return _report("edge-identity", f"{rs}:{variant}", ok, evidence)


# -- golden-table replay -----------------------------------------------------------


def _parse_states(
    poset: RootPoset, states: Iterable[frozenset[str]]
) -> list[Antichain]:
    return [
        poset.antichain(
            [
                poset.element_for_vector(poset.system.parse_root(s, "paper-f4"))
                for s in state
            ]
        )
        for state in states
    ]


def _replay_cycle(poset: RootPoset, chain: list[Antichain]) -> bool:
    steps = chain + [chain[0]]
    return all(
        poset.rowmotion(a) == b for a, b in zip(steps, steps[1:])
    )


def reproduce_f4_appendix() -> Report:
    """Replay the three recorded F4 orbit tables arrow-exactly."""
    rs = build("F", 4)
    evidence: dict = {}
    ok = True

    # table I: representative/size per orbit of the full poset
    poset = rs.root_poset(FULL)
    orbits = poset.orbits()
    sizes_ok = _sizes(orbits) == sorted([12] * 8 + [2, 3, 4])
    reps_ok = True
    seen_orbits = set()
    for rep, size in f4_tables.FULL_ORBITS:
        antichain = _parse_states(poset, [rep])[0]
        orbit = poset.orbit_of(antichain)
        key = orbit.representative.mask
        if orbit.size != size or key in seen_orbits:
            reps_ok = False
        seen_orbits.add(key)
    standard = poset.standard_orbit()
    std_rep = _parse_states(poset, [f4_tables.FULL_STANDARD_REP])[0]
    std_ok = std_rep in set(standard.antichains)
    evidence["table_i"] = {
        "orbit_count": len(orbits),
        "sizes_ok": sizes_ok,
        "representatives_ok": reps_ok,
        "distinct_orbits": len(seen_orbits),
        "standard_contains_top": std_ok,
    }
    ok = ok and sizes_ok and reps_ok and len(orbits) == 11 and std_ok

    # table II: six orbits of 11 on the non-simple poset, five replayed
    poset0 = rs.root_poset(NO_SIMPLE)
    orbits0 = poset0.orbits()
    chains_ok = all(
        _replay_cycle(poset0, _parse_states(poset0, chain))
        for chain in f4_tables.NO_SIMPLE_CHAINS
    )
    standard0 = poset0.standard_orbit()
    grading0 = poset0.grading()
    top_level = grading0.level_set(grading0.level)
    second_level = grading0.level_set(grading0.level - 1)
    printed_ok = [poset0.format_element(x, "paper-f4") for x in top_level] == [
        f4_tables.NO_SIMPLE_STANDARD_TOP
    ] and [poset0.format_element(x, "paper-f4") for x in second_level] == [
        f4_tables.NO_SIMPLE_STANDARD_SECOND
    ]
    distinct = {
        poset0.orbit_of(_parse_states(poset0, [chain[0]])[0]).representative.mask
        for chain in f4_tables.NO_SIMPLE_CHAINS
    }
    distinct.add(standard0.representative.mask)
    evidence["table_ii"] = {
        "orbit_sizes": _sizes(orbits0),
        "chains_replayed": len(f4_tables.NO_SIMPLE_CHAINS),
        "chains_ok": chains_ok,
        "standard_size": standard0.size,
        "standard_labels_ok": printed_ok,
        "distinct_orbits": len(distinct),
    }
    ok = (
        ok
        and chains_ok
        and _sizes(orbits0) == [11] * 6
        and standard0.size == 11
        and printed_ok
        and len(distinct) == 6
    )

    # table III: short poset, orbits 9/9/3, two replayed plus the standard one
    posets = rs.root_poset(SHORT)
    orbits_s = posets.orbits()
    chains_ok_s = all(
        _replay_cycle(posets, _parse_states(posets, chain))
        for chain in f4_tables.SHORT_CHAINS
    )
    standard_s = posets.standard_orbit()
    grading_s = posets.grading()
    top = grading_s.level_set(grading_s.level)
    second = grading_s.level_set(grading_s.level - 1)
    bottom = grading_s.level_set(1)
    labels_ok = (
        [posets.format_element(x, "paper-f4") for x in top]
        == [f4_tables.SHORT_STANDARD_TOP]
        and [posets.format_element(x, "paper-f4") for x in second]
        == [f4_tables.SHORT_STANDARD_SECOND]
        and {posets.format_element(x, "paper-f4") for x in bottom}
        == f4_tables.SHORT_STANDARD_BOTTOM
    )
    evidence["table_iii"] = {
        "orbit_sizes": _sizes(orbits_s),
        "chains_ok": chains_ok_s,
        "standard_size": standard_s.size,
        "standard_labels_ok": labels_ok,
    }
    ok = (
        ok
        and chains_ok_s
        and _sizes(orbits_s) == [3, 9, 9]
        and standard_s.size == 9
        and labels_ok
    )

    if not ok:
        evidence["witness"] = _witness(poset, poset.antichain())
    return _report("appendix-f4", "F4", ok, evidence)


# -- type-A invariant suite ----------------------------------------------------------


def check_oy_suite(n: int) -> Report:
    """Every exhaustive type-A property of the oy number and the duality."""
    poset = typea.ambient(n)
    antichains = poset.antichains()
    evidence: dict = {"antichains": len(antichains), "catalan": catalan(n + 1)}
    ok = len(antichains) == catalan(n + 1)
    values: dict[int, int] = {}
    witness = None
    for a in antichains:
        ideal_form = typea.oy_ideal_form(a)
        if ideal_form != typea.oy_difference_form(a):
            witness = ("forms_disagree", a)
            break
        if not all(
            poset.removal_index(a, x) in (0, 1, 2) for x in a
        ):
            witness = ("removal_index_range", a)
            break
        values[a.mask] = ideal_form
        image = poset.rowmotion(a)
        if typea.rowmotion_array(a) != image:
            witness = ("array_rowmotion", a)
            break
        if typea.inverse_rowmotion_array(a) != poset.inverse_rowmotion(a):
            witness = ("array_inverse", a)
            break
        dual = typea.star(a)
        if typea.star(dual) != a or len(a) + len(dual) != n:
            witness = ("star_involution", a)
            break
        if typea.star(image) != poset.inverse_rowmotion(dual):
            witness = ("star_conjugation", a)
            break
    if witness is None:
        for a in antichains:
            if values[a.mask] != values[poset.rowmotion(a).mask]:
                witness = ("rowmotion_invariance", a)
                break
            if values[a.mask] != values[typea.star(a).mask]:
                witness = ("dual_invariance", a)
                break
    if witness is None:
        standard = set(poset.standard_orbit().antichains)
        odd = poset.antichain(
            [typea._element(poset, t, t) for t in range(1, n + 1, 2)]
        )
        extremes = set(poset.orbit_of(odd).antichains)
        zero_set = {a for a in antichains if values[a.mask] == 0}
        top_set = {a for a in antichains if values[a.mask] == n - 1}
        evidence["min_value"] = min(values.values())
        evidence["max_value"] = max(values.values())
        if not (
            evidence["min_value"] == 0
            and evidence["max_value"] == n - 1
            and zero_set == standard
            and top_set == extremes
        ):
            witness = ("extremes", next(iter(zero_set ^ standard), odd))
    if witness is not None:
        ok = False
        evidence["witness"] = {"property": witness[0], **_witness(poset, witness[1])}
    return _report("oy-suite", f"A{n}", ok, evidence)


def check_weighted_oy_cn(n: int) -> Report:
    """Short-weighted removal sums on the symplectic poset, orbit by orbit.

    Checks that doubling the contribution of short roots makes the removal
    sum constant along every orbit, and exhibits an orbit showing that the
    unweighted sum is not constant.
    """
    rs = build("C", n)
    poset = rs.root_poset(FULL)
    weight = lambda x: 2 if poset.is_short_element(x) else 1
    evidence: dict = {}
    ok = True
    for o in poset.orbits():
        weighted = {poset.weighted_removal_sum(a, weight) for a in o}
        if len(weighted) > 1:
            ok = False
            evidence["weighted_witness"] = {
                **_witness(poset, o.representative),
                "orbit_values": sorted(
                    poset.weighted_removal_sum(a, weight) for a in o
                ),
            }
            break
    unweighted_witness = None
    for o in poset.orbits():
        plain = {poset.weighted_removal_sum(a) for a in o}
        if len(plain) > 1:
            unweighted_witness = {
                **_witness(poset, o.representative),
                "orbit_values": sorted(
                    poset.weighted_removal_sum(a) for a in o
                ),
            }
            break
    evidence["unweighted_noninvariance_witness"] = unweighted_witness
    ok = ok and unweighted_witness is not None
    return _report("weighted-oy-cn", f"C{n}", ok, evidence)


# -- claim registry ------------------------------------------------------------------


def _matrix(types: Iterable[str] | None, e78: bool) -> list[tuple[str, int]]:
    matrix = list(DEFAULT_MATRIX) + (list(E78_MATRIX) if e78 else [])
    if types is None:
        return matrix
    wanted = {t.upper() for t in types}
    out = []
    for t, n in matrix:
        if t in wanted or f"{t}{n}" in wanted:
            out.append((t, n))
    return out


def _ranks(default: Iterable[int], rank: int | None) -> list[int]:
    if rank is None:
        return list(default)
    return [rank] if rank in set(default) else []


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    runner: Callable[..., list[Report]]


def _run_conj_2_1(types=None, rank=None, e78=False) -> list[Report]:
    return [check_conjecture_2_1(build(t, n)) for t, n in _matrix(types, e78)]


def _run_conj_2_2(types=None, rank=None, e78=False) -> list[Report]:
    return [check_conjecture_2_2(build(t, n)) for t, n in _matrix(types, e78)]


def _run_conj_2_3(types=None, rank=None, e78=False) -> list[Report]:
    matrix = [(t, n) for t, n in _matrix(types, e78) if t in "BCFG"]
    return [check_conjecture_2_3(build(t, n)) for t, n in matrix]


def _run_conj_2_4(types=None, rank=None, e78=False) -> list[Report]:
    if types is not None and not any(t.upper().startswith("C") for t in types):
        return []
    return [check_conjecture_2_4(n) for n in _ranks(range(2, 6), rank)]


def _run_fixed(check: Callable[[], Report], scope_types: set[str]):
    def runner(types=None, rank=None, e78=False) -> list[Report]:
        if types is not None and not (
            {t.upper() for t in types} & scope_types
        ):
            return []
        return [check()]

    return runner


def _run_example_2_2(types=None, rank=None, e78=False) -> list[Report]:
    if types is not None and not any(t.upper().startswith("A") for t in types):
        return []
    return [check_example_2_2(n) for n in _ranks(range(3, 8), rank)]


def _run_edge(types=None, rank=None, e78=False) -> list[Report]:
    out = []
    for t, n in _matrix(types, e78):
        rs = build(t, n)
        out.append(check_edge_identity(rs, FULL))
        out.append(check_edge_identity(rs, NO_SIMPLE))
    return out


def _run_oy_suite(types=None, rank=None, e78=False) -> list[Report]:
    if types is not None and not any(t.upper().startswith("A") for t in types):
        return []
    return [check_oy_suite(n) for n in _ranks(range(1, 8), rank)]


def _run_weighted(types=None, rank=None, e78=False) -> list[Report]:
    if types is not None and not any(t.upper().startswith("C") for t in types):
        return []
    return [check_weighted_oy_cn(n) for n in _ranks(range(2, 6), rank)]


REGISTRY: dict[str, Claim] = {
    claim.claim_id: claim
    for claim in (
        Claim(
            "conj-2.1",
            "full root poset: rowmotion order h (or 2h with the diagram "
            "involution at step h) and every orbit mean n/2",
            _run_conj_2_1,
        ),
        Claim(
            "conj-2.2",
            "non-simple root poset: order h-1 (or 2h-2 with the involution) "
            "and orbit means n(h-2)/(2(h-1))",
            _run_conj_2_2,
        ),
        Claim(
            "conj-2.3",
            "short-root poset: order = highest short height + 1, equal orbit "
            "means, known orbit counts for B/F4/G2",
            _run_conj_2_3,
        ),
        Claim(
            "conj-2.4",
            "symplectic short poset: orbits of size 2n-1, Catalan-many, one "
            "representative per orbit supported away from the last two nodes",
            _run_conj_2_4,
        ),
        Claim(
            "short-no-simple-f4",
            "F4 short non-simple poset: 16 antichains in two orbits of 8",
            _run_fixed(check_short_no_simple_f4, {"F", "F4", "B", "G", "G2"}),
        ),
        Claim(
            "height-geq-3-f4",
            "F4 height>=3 poset: orbits 10 and 8, order 40, unequal means",
            _run_fixed(check_height_geq_remark, {"F", "F4"}),
        ),
        Claim(
            "example-2.2",
            "type A: closed form for the trajectory of the first simple root",
            _run_example_2_2,
        ),
        Claim(
            "example-2.6",
            "two level-3 posets with contrasting orbit structure",
            _run_fixed(check_example_2_6, set()),
        ),
        Claim(
            "edge-identity",
            "sum of antichain sizes = #antichains * #elements / level count, "
            "cross-checked against the antichain-poset cover count",
            _run_edge,
        ),
        Claim(
            "appendix-f4",
            "golden F4 orbit tables replayed arrow-exactly",
            _run_fixed(reproduce_f4_appendix, {"F", "F4"}),
        ),
        Claim(
            "oy-suite",
            "type-A oy number: both forms agree, rowmotion- and dual-invariant, "
            "array operators match the generic ones, extremes located",
            _run_oy_suite,
        ),
        Claim(
            "weighted-oy-cn",
            "symplectic poset: short-weighted removal sum constant on orbits, "
            "with an unweighted non-invariance witness",
            _run_weighted,
        ),
    )
}


def claim_ids() -> list[str]:
    return sorted(REGISTRY)


def run_claims(
    ids: Iterable[str] | None = None,
    types: Iterable[str] | None = None,
    rank: int | None = None,
    e78: bool = False,
) -> list[Report]:
    """Run the selected claims (all by default) and return sorted reports."""
    selected = claim_ids() if ids is None else list(ids)
    unknown = [i for i in selected if i not in REGISTRY]
    if unknown:
        raise KeyError(
            f"unknown claim {unknown[0]!r}; valid ids: {', '.join(claim_ids())}"
        )
    reports: list[Report] = []
    for claim_id in sorted(selected):
        reports.extend(REGISTRY[claim_id].runner(types=types, rank=rank, e78=e78))
    return reports
