import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import measures
from zgroupoid.algebra import Func, cozero_set
from zgroupoid.errors import AbsoluteContinuityError, InvalidArgument, PartitionError
from zgroupoid.measure import (
    Measure, conditional_measure, dirac, disintegrate, measure_class, measure_from_config, push_forward,
    rn_chain_residual, rn_decomposition_invariance, rn_derivative, same_class, uniform,
)
from zgroupoid.space import make_circle_space


def preimage_sum(weights, phi):
    # brute force: for each y add up the weights of all x with phi(x) = y
    return [sum(weights[x] for x in range(len(phi)) if phi[x] == y) for y in range(len(phi))]


def test_constructor_rejects(s3):
    for bad in ([0, 0, 0], [1, -1, 1], [1, float("nan"), 1], [1, float("inf"), 0], [1, 2]):
        with pytest.raises(InvalidArgument):
            Measure(s3, bad)


def test_dirac(s3):
    d = dirac(s3, 1)
    assert d.weights.tolist() == [0, 1, 0]
    assert d.total == 1
    assert d.null_set() == {0, 2}


def test_push_forward_examples(s3):
    mu = Measure(s3, [1, 2, 3])
    assert push_forward(mu, [1, 1, 2]).weights.tolist() == preimage_sum([1, 2, 3], [1, 1, 2]) == [0, 3, 3]
    assert push_forward(mu, [0, 1, 2]) == mu
    assert push_forward(dirac(s3, 0), [2, 0, 1]) == dirac(s3, 2)


def test_push_forward_rejects_partial_map(s3):
    with pytest.raises(InvalidArgument):
        push_forward(dirac(s3, 0), [0, 1])
    with pytest.raises(InvalidArgument):
        push_forward(dirac(s3, 0), [0, 1, 3])


@given(measures(), st.data())
def test_push_forward_properties(mu, data):
    n = mu.space.n
    maps = st.lists(st.integers(0, n - 1), min_size=n, max_size=n)
    phi, psi = np.array(data.draw(maps)), np.array(data.draw(maps))
    pushed = push_forward(mu, phi)
    assert pushed.weights.tolist() == preimage_sum(mu.weights.tolist(), phi.tolist())
    assert math.isclose(pushed.total, mu.total, rel_tol=0, abs_tol=1e-12)
    assert np.allclose(push_forward(mu, phi[psi]).weights, push_forward(push_forward(mu, psi), phi).weights, atol=1e-12)
    nu = Measure(mu.space, np.arange(1, n + 1, dtype=float))
    lhs = push_forward(Measure(mu.space, 2 * mu.weights + 3 * nu.weights), phi).weights
    assert np.allclose(lhs, 2 * pushed.weights + 3 * push_forward(nu, phi).weights, atol=1e-12)


def test_same_class_examples(s2, s3):
    assert same_class(Measure(s3, [1, 2, 0]), Measure(s3, [3, 0.5, 0]))
    assert not same_class(Measure(s2, [1, 0]), Measure(s2, [1, 1]))
    mu = Measure(s3, [0.2, 0, 7])
    assert same_class(mu, mu.scaled(3.5))


@given(st.integers(1, 5), st.data())
def test_classes_biject_with_supports(n, data):
    space = make_circle_space(n)
    found = {}
    for mask in range(1, 2 ** n):
        supp = frozenset(i for i in range(n) if mask >> i & 1)
        w = [data.draw(st.sampled_from([0.5, 1.0, 2.0])) if i in supp else 0.0 for i in range(n)]
        found[measure_class(Measure(space, w)).support] = supp
    assert len(found) == 2 ** n - 1
    assert all(k == v for k, v in found.items())


def pieces_funcs(space, pieces):
    out = []
    for p in pieces:
        out.append(Func(space, [1.0 if x in p else 0.0 for x in space.points]))
    return out


def test_disintegration_example(s4):
    nu = Measure(s4, [1, 1, 1, 1])
    dis = disintegrate(nu, pieces_funcs(s4, [{0, 1}, {2, 3}]))
    assert [c.weights.tolist() for c in dis.conditionals] == [[0.5, 0.5, 0, 0], [0, 0, 0.5, 0.5]]
    assert dis.base_weights == (2.0, 2.0)
    h = [1, 2, 3, 4]
    # brute-force double sum
    brute = sum(b * sum(hv * w for hv, w in zip(h, c.weights)) for b, c in zip(dis.base_weights, dis.conditionals))
    assert brute == 10 == sum(hv * w for hv, w in zip(h, nu.weights))
    assert dis.iterated_integral(h) == 10 == nu.integrate(h)
    assert dis.residual() == 0


def test_disintegration_single_piece(s3):
    nu = Measure(s3, [1, 3, 0])
    dis = disintegrate(nu, [Func(s3, [2, -1, 0])])
    assert dis.conditionals[0] == nu.normalized() and dis.base_weights == (4.0,)
    d = disintegrate(dirac(s3, 1), [Func(s3, [0, 1, 1])])
    assert d.conditionals[0] == dirac(s3, 1) and d.base_weights == (1.0,)


def test_disintegration_errors(s4):
    nu = Measure(s4, [1, 1, 1, 0])
    with pytest.raises(PartitionError):
        disintegrate(nu, pieces_funcs(s4, [{0, 1}, {1, 2}]))
    with pytest.raises(PartitionError):
        disintegrate(nu, pieces_funcs(s4, [{0, 1}]))
    # an uncharged point may stay uncovered
    assert disintegrate(nu, pieces_funcs(s4, [{0}, {1, 2}])).residual() == 0


@given(measures(max_n=32), st.data())
def test_disintegration_reconstruction(nu, data):
    n = nu.space.n
    labels = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    funcs = [Func(nu.space, [1.0 if labels[x] == k else 0.0 for x in range(n)]) for k in range(4)]
    dis = disintegrate(nu, funcs)
    assert dis.residual() <= 1e-12 * max(1, nu.total)
    for c, f in zip(dis.conditionals, funcs):
        if c is not None:
            assert c.mass(set(range(n)) - cozero_set(f)) == 0
            assert math.isclose(c.total, 1.0, abs_tol=1e-15)
    for seed in range(10):
        h = np.random.default_rng(seed).normal(size=n)
        assert abs(nu.integrate(h) - dis.iterated_integral(h)) <= 1e-12 * max(1.0, float(np.abs(h).sum()) * nu.total)


def test_rn_examples(s3):
    j = rn_derivative(Measure(s3, [2, 6, 0]), Measure(s3, [1, 2, 0]))
    assert j.support == (0, 1) and j.values.tolist() == [2, 3]
    mu = Measure(s3, [1, 2, 0])
    assert rn_derivative(mu, mu).values.tolist() == [1, 1]
    nu, lam = Measure(s3, [2, 6, 0]), Measure(s3, [4, 4, 0])
    # direct ratio arithmetic in exact rationals
    exact = [Fraction(2, 1) * Fraction(1, 4), Fraction(3) * Fraction(2, 4)]
    assert [Fraction(v) for v in rn_derivative(nu, lam).values] == exact
    assert rn_chain_residual(nu, mu, lam) == 0


def test_rn_requires_equivalence(s3):
    with pytest.raises(AbsoluteContinuityError):
        rn_derivative(Measure(s3, [1, 1, 0]), Measure(s3, [1, 0, 0]))
    with pytest.raises(AbsoluteContinuityError):
        rn_decomposition_invariance(Measure(s3, [1, 1, 0]), Measure(s3, [1, 0, 0]), [Func(s3, [1, 1, 1])])


def test_rn_decomposition_examples(s4):
    mu = Measure(s4, [1, 2, 0.5, 0])
    rep = rn_decomposition_invariance(mu.scaled(2), mu, pieces_funcs(s4, [{0, 2}, {1}]))
    assert rep["passed"] and all(p["ratios"] == [2.0] * len(p["ratios"]) for p in rep["pieces"])
    rep = rn_decomposition_invariance(Measure(s4, [2, 6, 0, 0]), Measure(s4, [1, 2, 0, 0]), pieces_funcs(s4, [{0}, {1}]))
    assert [p["ratios"] for p in rep["pieces"]] == [[2.0], [3.0]]
    assert [p["normalization"] for p in rep["pieces"]] == [2.0, 3.0]
    assert [p["conditional_ratios"] for p in rep["pieces"]] == [[1.0], [1.0]]
    assert rep["passed"]


@given(measures(max_n=16), st.data())
def test_rn_chain_rule_random(mu, data):
    n = mu.space.n
    pos = st.sampled_from([0.25, 0.5, 1.0, 3.0, 7.0])
    nu = Measure(mu.space, [data.draw(pos) if w > 0 else 0 for w in mu.weights])
    lam = Measure(mu.space, [data.draw(pos) if w > 0 else 0 for w in mu.weights])
    assert rn_chain_residual(nu, mu, lam) <= 1e-12 * 100
    j = rn_derivative(nu, mu)
    assert np.allclose(j.values * mu.weights[list(j.support)], nu.weights[list(j.support)], rtol=1e-15, atol=0)


@given(measures(max_n=12, min_n=2), st.data())
def test_unit_relabeling_keeps_null_sets(ref, data):
    n = ref.space.n
    x = data.draw(st.integers(0, n - 1))
    vals = data.draw(st.lists(st.sampled_from([0.0, 1.0, -2.0]), min_size=n, max_size=n))
    vals[x] = 0.0
    f = Func(ref.space, vals)
    if not (cozero_set(f) & ref.support()):
        return
    g = Func(ref.space, data.draw(st.lists(st.sampled_from([-3.0, 0.5, 2.0]), min_size=n, max_size=n)))
    assert conditional_measure(ref, f).null_set() == conditional_measure(ref, f * g).null_set()


def test_measure_literal(s3):
    assert measure_from_config(s3, {"weights": [0, 1, 2]}) == Measure(s3, [0, 1, 2])
    with pytest.raises(InvalidArgument):
        measure_from_config(s3, {"weights": [0, -1, 2]})


def test_uniform(s4):
    assert uniform(s4).weights.tolist() == [0.25] * 4
    assert uniform(s4, {1, 3}).weights.tolist() == [0, 0.5, 0, 0.5]
