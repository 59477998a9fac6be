from fractions import Fraction

import pytest

from wallcross.js import (decompositions, js_tree_values, js_wallcross,
                          s_symbol, strong_parts, twist_value, u_symbol)
from wallcross.symbolic import Value
from wallcross.spectrum import spectrum_table
from wallcross.lattice import theory_by_name

Q = Fraction

D, M = (1, 0), (0, 1)


def test_s_symbol_single(nf0):
    assert s_symbol(nf0, [D]) == 1


def test_u_symbol_single(nf0):
    assert u_symbol(nf0, [D]) == 1


def test_u_symbol_order_sums_to_zero(nf0):
    # summing U over all orderings of a fixed multiset gives zero when
    # the slope order changes across the wall
    assert u_symbol(nf0, [D, M]) + u_symbol(nf0, [M, D]) == 0


def test_strong_parts(nf0, nf0_strong):
    parts = strong_parts(nf0, nf0_strong, (2, 3))
    assert set(parts) == {(1, 0), (2, 0), (0, 1), (0, 2), (0, 3)}


def test_decompositions_cover_target(nf0, nf0_strong):
    for alphas in decompositions(nf0, nf0_strong, (1, 2)):
        total = tuple(map(sum, zip(*alphas)))
        assert total == (1, 2)


def test_twist_value_sign(nf0, nf1):
    # nf0 pairing is even: every twist is +1
    assert twist_value(nf0, (D, M)) == Value.rational(1)
    # odd pairings contribute the sign unit
    v = twist_value(nf1, ((1, 0, 0), (0, 1, 0)))
    assert v in (Value.sign_unit(1), Value.sign_unit(-1),
                 Value.rational(1), Value.rational(-1))


def test_wallcross_vector_multiplet(nf0, nf0_strong, nf0_weak):
    assert js_wallcross(nf0, nf0_strong, (1, 1)) == -2
    assert nf0_weak.omega((1, 1)) == -2


def test_wallcross_dyons_match_weak_table(nf0, nf0_strong, nf0_weak):
    for target in [(1, 2), (2, 1), (1, 3), (2, 3), (3, 2)]:
        dt = js_wallcross(nf0, nf0_strong, target)
        assert dt == nf0_weak.dt(target), target


def test_wallcross_vanishing_states(nf0, nf0_strong, nf0_weak):
    for target in [(2, 2), (1, 4), (3, 1)]:
        assert js_wallcross(nf0, nf0_strong, target) == nf0_weak.dt(target)


def test_tree_values_sum_to_invariant(nf0, nf0_strong):
    target = (1, 2)
    groups = js_tree_values(nf0, nf0_strong, target, twisted=False)
    total = sum((tv.total for tv in groups.values()), Value.zero())
    assert total == Value.rational(js_wallcross(nf0, nf0_strong, target))


def test_twisted_trees_nf1():
    th = theory_by_name("nf1")
    table = spectrum_table("nf1", "strong")
    groups = js_tree_values(th, table, (1, 1, -1), twisted=True)
    totals = sorted(repr(tv.total) for tv in groups.values())
    assert totals == ["-1/2*s", "-1/2*s", "-s"]
    # total weak invariant carries sigma of the target
    total = sum((tv.total for tv in groups.values()), Value.zero())
    assert total == Value.sign_unit(-2)


def test_ineffective_target_raises(nf0, nf0_strong):
    with pytest.raises(ValueError):
        js_wallcross(nf0, nf0_strong, (-1, 1))
