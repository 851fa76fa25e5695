import pytest
from hypothesis import given
from hypothesis import strategies as st

from sedf.cyclotomic import Cyclotomic
from sedf.groups import abelian_groups_of_order, make_group

from conftest import group_with_elements, small_groups


def test_make_group_examples():
    g = make_group([3, 3, 3, 3, 3])
    assert g.order == 243 and g.exponent == 3
    t = make_group([])
    assert t.order == 1 and t.exponent == 1 and t.identity == ()
    g = make_group([2, 4, 3])
    assert g.order == 24 and g.exponent == 12


@pytest.mark.parametrize("bad", [[0], [1], [5, 1], [-2]])
def test_make_group_rejects_small_factors(bad):
    with pytest.raises(ValueError):
        make_group(bad)


def test_op_inverse_examples():
    c5 = make_group([5])
    assert c5.op((1,), (4,)) == (0,)
    assert c5.op((2,), (4,)) == (1,)
    assert make_group([3, 3]).inverse((1, 2)) == (2, 1)


def test_dimension_mismatch_rejected():
    c5 = make_group([5])
    with pytest.raises(ValueError):
        c5.op((1,), (1, 2))
    with pytest.raises(ValueError):
        c5.char_eval_index((1, 0), (3,))


def test_char_eval_index_examples():
    c5 = make_group([5])
    assert c5.char_eval_index((1,), (3,)) == 3
    assert c5.char_eval_index((0,), (3,)) == 0
    g = make_group([3, 3])
    assert g.char_eval_index((1, 2), (2, 2)) == 0


def test_orbit_examples():
    c5 = make_group([5])
    assert c5.orbit((0,)) == {(0,)}
    assert c5.orbit((1,)) == {(1,), (2,), (3,), (4,)}
    c6 = make_group([6])
    assert c6.orbit((2,)) == {(2,), (4,)}


def test_character_counts():
    c5 = make_group([5])
    chars = list(c5.all_characters())
    assert len(chars) == len(set(chars)) == 5
    assert sum(1 for _ in c5.characters_of_order(5)) == 4

    e = make_group([3] * 5)
    assert sum(1 for _ in e.all_characters()) == 243
    assert sum(1 for _ in e.characters_of_order(3)) == 242

    pp = make_group([3, 3])
    nonprincipal = [c for c in pp.all_characters() if c != (0, 0)]
    assert len(nonprincipal) == 8  # p^2 - 1
    # the order-p characters fall into p + 1 cyclic subgroups
    subgroups = {frozenset(pp.scale(t, chi) for t in range(1, 3)) for chi in nonprincipal}
    assert len(subgroups) == 4  # p + 1


def test_characters_of_order_requires_divisor():
    with pytest.raises(ValueError):
        list(make_group([4]).characters_of_order(3))


@given(group_with_elements(count=2), st.data())
def test_character_multiplicativity(pair, data):
    group, g, h = pair
    chi = tuple(data.draw(st.integers(0, n - 1)) for n in group.factors)
    lhs = group.char_eval_index(chi, group.op(g, h))
    rhs = group.char_eval_index(chi, g) + group.char_eval_index(chi, h)
    assert lhs == rhs % group.exponent


@given(small_groups())
def test_nonprincipal_characters_sum_to_zero(group):
    n = group.exponent
    principal = (0,) * len(group.factors)
    for chi in group.all_characters():
        total = Cyclotomic.from_indices(
            n, (group.char_eval_index(chi, g) for g in group.elements())
        )
        if chi == principal:
            assert total.as_integer() == group.order
        else:
            assert total.is_zero()


@given(group_with_elements(count=1))
def test_orbit_size_is_totient_of_element_order(pair):
    group, g = pair
    orb = group.orbit(g)
    order = group.element_order(g)
    phi = sum(1 for t in range(1, order + 1) if _gcd(t, order) == 1)
    assert len(orb) == phi


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_rank_unrank_roundtrip():
    g = make_group([2, 4, 3])
    seen = set()
    for x in g.elements():
        r = g.rank(x)
        assert 0 <= r < g.order and g.unrank(r) == x
        seen.add(r)
    assert len(seen) == g.order


def test_abelian_groups_of_order():
    assert [g.factors for g in abelian_groups_of_order(1)] == [()]
    assert len(abelian_groups_of_order(16)) == 5
    assert len(abelian_groups_of_order(12)) == 2
    assert len(abelian_groups_of_order(30)) == 1
    for g in abelian_groups_of_order(24):
        assert g.order == 24
