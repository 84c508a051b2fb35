from fractions import Fraction

import pytest

from rowmotion import (
    CycleDetected,
    FileFormatError,
    HypothesesNotMet,
    NotAMember,
    NotAnAntichain,
    PosetError,
    SizeLimitExceeded,
    UnknownLabel,
    build,
    from_cover_relations,
    isomorphism,
    parse_poset_text,
)
from rowmotion.checks import example_2_6_posets


def chain(k):
    labels = [f"x{i}" for i in range(k)]
    return from_cover_relations(labels, list(zip(labels, labels[1:])))


def antichain_poset(k):
    return from_cover_relations([f"x{i}" for i in range(k)], [])


def test_singleton_poset():
    p = from_cover_relations(["a"], [])
    assert p.n == 1
    assert p.leq(0, 0)
    assert [a.members for a in p.antichains()] == [(), (0,)]
    assert p.rowmotion_order() == 2


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        from_cover_relations(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CycleDetected):
        from_cover_relations(["a"], [("a", "a")])


def test_unknown_label_and_duplicates():
    with pytest.raises(UnknownLabel):
        from_cover_relations(["a"], [("a", "b")])
    with pytest.raises(PosetError):
        from_cover_relations(["a", "a"], [])


def test_redundant_cover_pairs_are_canonicalised():
    p = from_cover_relations(
        ["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]
    )
    assert p.covers == ((0, 1), (1, 2))


def test_upper_ideal_examples():
    p = build("A", 2).root_poset()
    empty = p.antichain()
    assert p.upper_ideal(empty) == frozenset()
    a1 = p.antichain([p.element_for_vector((1, 0))])
    theta = p.element_for_vector((1, 1))
    assert p.upper_ideal(a1) == {a1.members[0], theta}
    bottom = p.antichain(p.minimal_elements(range(p.n)))
    assert p.upper_ideal(bottom) == set(range(p.n))


def test_minimal_maximal_elements():
    p = build("A", 2).root_poset()
    assert p.minimal_elements([]) == frozenset()
    theta = p.element_for_vector((1, 1))
    assert p.maximal_elements(range(p.n)) == {theta}
    assert p.minimal_elements(range(p.n)) == set(range(p.n)) - {theta}
    for a in p.antichains():
        assert p.minimal_elements(a.members) == set(a.members)
        assert p.maximal_elements(a.members) == set(a.members)


def test_minimal_elements_of_upper_ideal_recover_antichain():
    p = build("B", 3).root_poset()
    for a in p.antichains():
        assert p.minimal_elements(p.upper_ideal(a)) == set(a.members)


def test_rowmotion_cycle_on_rank_two():
    p = build("A", 2).root_poset()
    theta = p.antichain([p.element_for_vector((1, 1))])
    simples = p.antichain(
        [p.element_for_vector((1, 0)), p.element_for_vector((0, 1))]
    )
    assert p.rowmotion(theta) == simples
    assert p.rowmotion(simples) == p.antichain()
    assert p.rowmotion(p.antichain()) == theta
    assert sorted(o.size for o in p.orbits()) == [2, 3]


def test_rowmotion_outputs_are_antichains():
    _, p2 = example_2_6_posets()
    for a in p2.antichains():
        image = p2.rowmotion(a)
        p2.antichain(image.members)  # re-validates pairwise incomparability


def test_inverse_rowmotion_round_trip_and_oracle():
    p = build("A", 3).root_poset()
    everything = p.antichains()
    assert len(everything) == 14
    for a in everything:
        assert p.inverse_rowmotion(p.rowmotion(a)) == a
        assert p.rowmotion(p.inverse_rowmotion(a)) == a
    # independent oracle: the inverse is the unique preimage under rowmotion
    for a in everything:
        preimages = [b for b in everything if p.rowmotion(b) == a]
        assert preimages == [p.inverse_rowmotion(a)]
    theta = p.antichain([p.element_for_vector((1, 1, 1))])
    assert p.inverse_rowmotion(theta) == p.antichain()


def test_rowmotion_power_negative():
    p = build("A", 3).root_poset()
    a = p.antichains()[3]
    assert p.rowmotion_power(p.rowmotion_power(a, 5), -5) == a


def test_antichain_enumeration_counts_and_order():
    assert len(build("A", 2).root_poset().antichains()) == 5
    assert len(build("F", 4).root_poset().antichains()) == 105
    p = build("A", 3).root_poset()
    members = [a.members for a in p.antichains()]
    assert members == sorted(members)
    assert members[0] == ()


def test_orbits_partition_and_determinism():
    p = build("C", 3).root_poset()
    orbits = p.orbits()
    assert sum(o.size for o in orbits) == len(p.antichains())
    seen = set()
    for o in orbits:
        for a in o:
            assert a.mask not in seen
            seen.add(a.mask)
    assert [o.representative.members for o in p.orbits()] == [
        o.representative.members for o in orbits
    ]


def test_rowmotion_order_examples():
    assert build("F", 4).root_poset().rowmotion_order() == 12
    _, p2 = example_2_6_posets()
    assert p2.rowmotion_order() == 112
    assert from_cover_relations(["a"], []).rowmotion_order() == 2


def test_orbit_mean_is_exact():
    p = build("A", 2).root_poset()
    means = sorted(o.mean_size for o in p.orbits())
    assert means == [Fraction(1), Fraction(1)]


def test_grading_of_root_poset_matches_heights():
    rs = build("A", 4)
    p = rs.root_poset()
    g = p.grading()
    assert g is not None
    assert g.level == rs.h - 1 == 4
    assert g.ranks == p.heights
    assert g.bottoms_are_minimal and g.tops_are_maximal


def test_grading_of_flat_poset():
    p = antichain_poset(2)
    g = p.grading()
    assert g.level == 1 and g.ranks == (1, 1)
    assert g.bottoms_are_minimal and g.tops_are_maximal


def test_grading_flags_on_lopsided_poset():
    _, p2 = example_2_6_posets()
    g = p2.grading()
    assert g is not None and g.level == 3
    assert g.bottoms_are_minimal
    assert not g.tops_are_maximal  # one middle element is maximal


def test_ungraded_poset():
    p = from_cover_relations(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("b", "c"), ("a", "d"), ("d", "e"), ("e", "c")],
    )
    assert p.grading() is None


def test_standard_orbit_on_chain():
    p = chain(4)
    orbit = p.standard_orbit()
    assert orbit.size == 5
    assert len(p.antichains()) == 5  # the chain's antichains are exactly it


def test_standard_orbit_hypotheses_not_met():
    _, p2 = example_2_6_posets()
    with pytest.raises(HypothesesNotMet):
        p2.standard_orbit()
    with pytest.raises(HypothesesNotMet):
        from_cover_relations([], []).standard_orbit()


def test_removal_index_examples():
    p = build("A", 4).root_poset()
    simples = p.antichain(
        [p.element_for_vector(tuple(int(k == i) for k in range(4))) for i in range(4)]
    )
    for t in (1, 2):  # interior simple roots
        assert p.removal_index(simples, simples.members[t]) == 0

    p3 = build("A", 3).root_poset()
    a13 = p3.antichain(
        [p3.element_for_vector((1, 0, 0)), p3.element_for_vector((0, 0, 1))]
    )
    assert p3.removal_index(a13, p3.element_for_vector((1, 0, 0))) == 1

    p2 = build("A", 2).root_poset()
    theta = p2.antichain([p2.element_for_vector((1, 1))])
    assert p2.removal_index(theta, theta.members[0]) == 0

    with pytest.raises(NotAMember):
        p2.removal_index(theta, p2.element_for_vector((1, 0)))


def test_weighted_removal_sum():
    p = build("A", 3).root_poset()
    assert p.weighted_removal_sum(p.antichain()) == 0
    a = p.antichain(
        [p.element_for_vector((1, 0, 0)), p.element_for_vector((0, 0, 1))]
    )
    assert p.weighted_removal_sum(a) == 2
    assert p.weighted_removal_sum(a, lambda x: 3) == 6


def test_edge_counts():
    p = build("A", 2).root_poset()
    assert p.antichain_edge_count() == 5
    assert p.antichain_cover_count() == 5
    f4 = build("F", 4).root_poset()
    assert f4.antichain_edge_count() == 210
    assert f4.antichain_cover_count() == 210
    empty = from_cover_relations([], [])
    assert empty.antichain_edge_count() == 0


def test_leq_is_partial_order_on_triples():
    p = build("B", 3).root_poset()
    n = p.n
    for x in range(n):
        assert p.leq(x, x)
        for y in range(n):
            if x != y and p.leq(x, y):
                assert not p.leq(y, x)
            for z in range(n):
                if p.leq(x, y) and p.leq(y, z):
                    assert p.leq(x, z)


def test_antichain_validation_and_ownership():
    p = build("A", 2).root_poset()
    a1 = p.element_for_vector((1, 0))
    theta = p.element_for_vector((1, 1))
    with pytest.raises(NotAnAntichain) as err:
        p.antichain([a1, theta])
    assert set(err.value.pair) == {"10", "11"}
    q = build("A", 3).root_poset()
    with pytest.raises(PosetError):
        q.rowmotion(p.antichain())


def test_isomorphism_basics():
    assert isomorphism(chain(3), antichain_poset(3)) is None
    mapping = isomorphism(chain(3), chain(3))
    assert mapping == {0: 0, 1: 1, 2: 2}
    with pytest.raises(SizeLimitExceeded):
        isomorphism(chain(3), chain(3), max_elements=2)


def test_parse_poset_text():
    text = """
    # the lopsided example, with an isolated spectator
    a < b
    b < c
    lonely
    """
    p = parse_poset_text(text)
    assert p.n == 4
    assert p.labels == ("a", "b", "c", "lonely")
    assert p.covers == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "bad", ["a < b < c", "a b", "a <", "< b"]
)
def test_parse_poset_text_errors(bad):
    with pytest.raises(FileFormatError) as err:
        parse_poset_text(bad)
    assert "line 1" in str(err.value)


def test_size_limit_env(monkeypatch):
    monkeypatch.setenv("ROWMOTION_MAX_ELEMENTS", "3")
    with pytest.raises(SizeLimitExceeded):
        antichain_poset(4)
    monkeypatch.setenv("ROWMOTION_MAX_ELEMENTS", "150")
    assert antichain_poset(140).n == 140
    monkeypatch.setenv("ROWMOTION_MAX_ELEMENTS", "lots")
    with pytest.raises(SizeLimitExceeded):
        antichain_poset(1)
