from itertools import combinations

import pytest

from rowmotion import (
    NO_SIMPLE,
    NotTypeA,
    TwoRowArray,
    ambient,
    build,
    from_array,
    inverse_rowmotion_array,
    oy_difference_form,
    oy_ideal_form,
    rowmotion_array,
    star,
    to_array,
)
from rowmotion.typea import gaps_after_zero, gaps_before_limit, intervals


def by_intervals(n, pairs):
    poset = ambient(n)
    return poset.antichain(
        [
            poset.element_for_vector(
                tuple(int(lo <= k + 1 <= hi) for k in range(n))
            )
            for lo, hi in pairs
        ]
    )


def simples(n):
    return by_intervals(n, [(t, t) for t in range(1, n + 1)])


def level(n, i):
    return by_intervals(n, [(s, s + i - 1) for s in range(1, n - i + 2)])


def test_to_array_examples():
    arr = to_array(simples(3))
    assert arr.starts == (1, 2, 3) and arr.ends == (1, 2, 3)
    arr = to_array(by_intervals(3, [(1, 2), (3, 3)]))
    assert arr.starts == (1, 3) and arr.ends == (2, 3)
    empty = to_array(ambient(3).antichain())
    assert empty.starts == () and empty.ends == ()


def test_array_round_trip():
    for n in range(1, 7):
        for a in ambient(n).antichains():
            assert from_array(to_array(a)) == a


def test_two_row_array_validation():
    with pytest.raises(ValueError):
        TwoRowArray(3, (1, 2), (2,))
    with pytest.raises(ValueError):
        TwoRowArray(3, (2, 1), (2, 3))
    with pytest.raises(ValueError):
        TwoRowArray(3, (1, 2), (2, 1))
    with pytest.raises(ValueError):
        TwoRowArray(3, (2,), (1,))
    with pytest.raises(ValueError):
        TwoRowArray(3, (1,), (4,))


def test_not_type_a():
    b3 = build("B", 3).root_poset()
    with pytest.raises(NotTypeA):
        to_array(b3.antichain())
    sub = build("A", 3).root_poset(NO_SIMPLE)
    with pytest.raises(NotTypeA):
        oy_ideal_form(sub.antichain())
    with pytest.raises(NotTypeA):
        from_array(TwoRowArray(3, (1,), (1,)), ambient(4))


def test_oy_values():
    for n in (2, 3, 4, 5):
        assert oy_ideal_form(simples(n)) == 0
        for i in range(1, n + 1):
            assert oy_ideal_form(level(n, i)) == 0
        odd = by_intervals(n, [(t, t) for t in range(1, n + 1, 2)])
        even = by_intervals(n, [(t, t) for t in range(2, n + 1, 2)])
        assert oy_ideal_form(odd) == n - 1
        assert oy_ideal_form(even) == n - 1
        assert oy_ideal_form(ambient(n).antichain()) == 0
    assert oy_ideal_form(by_intervals(3, [(1, 1), (3, 3)])) == 2


def test_oy_difference_form_examples():
    assert oy_difference_form(by_intervals(3, [(1, 1), (3, 3)])) == 2
    assert oy_difference_form(simples(4)) == 0
    for n in (3, 5):
        assert oy_difference_form(by_intervals(n, [(1, n)])) == 0
    assert oy_difference_form(ambient(4).antichain()) == 0


def test_forms_agree_exhaustively():
    for n in range(1, 6):
        for a in ambient(n).antichains():
            assert oy_ideal_form(a) == oy_difference_form(a)


def test_rowmotion_array_examples():
    assert rowmotion_array(by_intervals(3, [(1, 1)])) == by_intervals(3, [(2, 3)])
    n = 4
    assert rowmotion_array(ambient(n).antichain()) == by_intervals(n, [(1, n)])
    for n in range(3, 7):
        poset = ambient(n)
        a = by_intervals(n, [(1, 1)])
        for _ in range(n):
            a = rowmotion_array(a)
        assert a == by_intervals(n, [(t, t) for t in range(1, n)])


def test_array_operators_match_generic():
    for n in range(1, 6):
        poset = ambient(n)
        for a in poset.antichains():
            assert rowmotion_array(a) == poset.rowmotion(a)
            assert inverse_rowmotion_array(a) == poset.inverse_rowmotion(a)


def test_inverse_array_examples_and_oracle():
    assert inverse_rowmotion_array(by_intervals(3, [(2, 2), (3, 3)])) == by_intervals(
        3, [(1, 1), (2, 3)]
    )
    assert inverse_rowmotion_array(by_intervals(3, [(1, 3)])) == ambient(3).antichain()
    # oracle: the inverse is the unique preimage under the array rowmotion
    everything = ambient(4).antichains()
    for a in everything:
        preimages = [b for b in everything if rowmotion_array(b) == a]
        assert preimages == [inverse_rowmotion_array(a)]


def test_star_examples():
    assert star(by_intervals(3, [(1, 1)])) == by_intervals(3, [(2, 2), (3, 3)])
    for n in (2, 4, 5):
        assert star(ambient(n).antichain()) == simples(n)
    # levels dualise to the complementary level; the top level's dual is empty
    for n in (3, 4, 5):
        for i in range(1, n + 1):
            expected = (
                level(n, n + 2 - i) if n + 2 - i <= n else ambient(n).antichain()
            )
            assert star(level(n, i)) == expected


def test_star_on_sets_of_simple_roots():
    n = 5
    poset = ambient(n)
    for k in range(n + 1):
        for chosen in combinations(range(1, n + 1), k):
            a = by_intervals(n, [(t, t) for t in chosen])
            complement = [t for t in range(1, n + 1) if t not in chosen]
            assert star(a) == by_intervals(n, [(t, t) for t in complement])


def test_star_involution_and_size():
    for n in range(1, 6):
        for a in ambient(n).antichains():
            dual = star(a)
            assert star(dual) == a
            assert len(a) + len(dual) == n


def test_gap_counts_equal_component_counts():
    for n in range(0, 11):
        universe = list(range(1, n + 1))
        for k in range(n + 1):
            for chosen in combinations(universe, k):

                def components(values):
                    runs = 0
                    prev = None
                    for v in values:
                        runs += prev is None or v != prev + 1
                        prev = v
                    return runs

                low = gaps_after_zero(chosen)
                assert low == components(sorted((0,) + chosen)) - 1
                high = gaps_before_limit(chosen, n)
                assert high == components(sorted(chosen + (n + 1,))) - 1
                rest = tuple(v for v in universe if v not in chosen)
                assert low == gaps_before_limit(rest, n)
                assert high == gaps_after_zero(rest)


def test_intervals_sorted():
    a = by_intervals(5, [(4, 4), (1, 2), (3, 3)])
    assert intervals(a) == [(1, 2), (3, 3), (4, 4)]
