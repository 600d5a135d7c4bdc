import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import func_pairs
from zgroupoid.algebra import (
    Func, MaximalIdeal, constant, cozero_set, func_from_config, ideal_member, intersect_zero_sets,
    is_unit, lattice_ops, reciprocal, z_filter, zero_set, zero_set_identities,
)
from zgroupoid.errors import InvalidArgument
from zgroupoid.space import make_circle_space


def zeros_by_inspection(values):
    return {i for i, v in enumerate(values) if v == 0}


def test_zero_set_constants(s4):
    assert zero_set(constant(s4, 0)).points == {0, 1, 2, 3}
    assert zero_set(constant(s4, 1)).points == set()


def test_zero_set_examples(s4):
    assert zero_set(Func(s4, [0, 1, 2, 0])).points == {0, 3}
    f = Func(s4, [1, -1, 0.5, 2])
    assert zero_set(f).points == set() and is_unit(f)


def test_negative_zero_is_zero(s2):
    f = Func(s2, [-0.0, 1.0])
    assert zero_set(f).points == {0}
    assert f == Func(s2, [0.0, 1.0]) and hash(f) == hash(Func(s2, [0.0, 1.0]))


def test_tiny_values_are_not_zero(s2):
    assert zero_set(Func(s2, [1e-300, 1.0])).points == set()


@pytest.mark.parametrize("vals,unit", [([1, 1, 1], True), ([2, -3, 0.1], True), ([0, 1, 1], False)])
def test_is_unit(s3, vals, unit):
    assert is_unit(Func(s3, vals)) is unit


def test_is_unit_two_points(s2):
    assert not is_unit(Func(s2, [0, 1]))


def test_lattice_examples(s3):
    f, g = Func(s3, [0, 1, 2]), Func(s3, [3, 0, 5])
    ops = lattice_ops(f, g)
    assert zero_set(ops["product"]).points == {0, 1} == zero_set(f).points | zero_set(g).points
    assert zero_set(ops["sum_of_squares"]).points == set() == zero_set(f).points & zero_set(g).points
    assert ops["meet"] == Func(s3, [0, 0, 2]) and ops["join"] == Func(s3, [3, 1, 5])


def test_abs_example(s2):
    f = Func(s2, [-2, 0])
    assert abs(f) == Func(s2, [2, 0])
    assert zero_set(abs(f)) == zero_set(f)


def test_space_mismatch(s2, s3):
    with pytest.raises(InvalidArgument):
        lattice_ops(constant(s2, 1), constant(s3, 1))
    with pytest.raises(InvalidArgument):
        Func(s2, [1, 2, 3])


@given(func_pairs())
def test_zero_set_identities(pair):
    f, g = pair
    zf, zg = zeros_by_inspection(f), zeros_by_inspection(g)
    assert zeros_by_inspection(f * g) == zf | zg
    assert zeros_by_inspection(f ** 2 + g ** 2) == zf & zg == zeros_by_inspection(abs(f) + abs(g))
    assert zeros_by_inspection(abs(f)) == zf == zeros_by_inspection(f ** 2) == zeros_by_inspection(f ** 3)
    assert zeros_by_inspection(f - abs(f)) == {i for i, v in enumerate(f) if v >= 0}
    assert all(zero_set_identities(f, g).values())


@given(func_pairs())
def test_unit_iff_reciprocal(pair):
    f, _ = pair
    if is_unit(f):
        assert np.all((f * reciprocal(f)).values == 1.0)
    else:
        with pytest.raises(InvalidArgument):
            reciprocal(f)


@given(func_pairs(), st.data())
def test_maximal_ideal_is_ideal(pair, data):
    f, k = pair
    x = data.draw(st.integers(0, f.space.n - 1))
    m = MaximalIdeal(f.space, x)
    a = Func(f.space, np.where(np.arange(f.space.n) == x, 0.0, f.values))
    b = Func(f.space, np.where(np.arange(f.space.n) == x, 0.0, k.values))
    assert a in m and b in m
    assert a + b in m and k * a in m and a * k in m


@pytest.mark.parametrize("n", range(2, 12))
def test_cozero_sets_separate_points(n):
    space = make_circle_space(n)
    for x in space.points:
        m = MaximalIdeal(space, x)
        s = m.separating_function()
        assert s in m
        for y in space.points:
            if y != x:
                assert y in cozero_set(s) and x not in cozero_set(s)


def test_ideal_member_examples(s2):
    m = MaximalIdeal(s2, 0)
    assert ideal_member(m, Func(s2, [0, 5]))
    assert not ideal_member(m, Func(s2, [1, 0]))
    assert ideal_member(m, constant(s2, 0))


def test_z_filter_examples(s3):
    m0 = MaximalIdeal(s3, 0)
    zs = z_filter(m0, [Func(s3, [0, 1, 1]), Func(s3, [0, 0, 1])])
    assert [z.points for z in zs] == [{0}, {0, 1}]
    assert intersect_zero_sets(s3, zs).points == {0}
    assert z_filter(m0, []) == []
    assert intersect_zero_sets(s3, []).points == {0, 1, 2}
    assert [z.points for z in z_filter(MaximalIdeal(s3, 1), [Func(s3, [1, 0, 1])])] == [{1}]


def test_z_filter_rejects_nonmember(s3):
    with pytest.raises(InvalidArgument):
        z_filter(MaximalIdeal(s3, 0), [Func(s3, [1, 0, 0])])


def test_zero_set_witness(s4):
    z = zero_set(Func(s4, [0, 3, 0, 1]))
    assert zero_set(z.witness(s4)) == z
    assert z.complement() == {1, 3}


def test_func_literal(s3):
    assert func_from_config(s3, {"values": [0, 1, 2]}) == Func(s3, [0, 1, 2])
    with pytest.raises(InvalidArgument):
        func_from_config(s3, {"values": [0, 1]})
    with pytest.raises(InvalidArgument):
        func_from_config(s3, [0, 1, 2])


def test_func_is_immutable(s2):
    f = Func(s2, [1, 2])
    with pytest.raises(ValueError):
        f.values[0] = 5
    with pytest.raises(AttributeError):
        f.values = None
