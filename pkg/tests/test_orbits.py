import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import measures
from zgroupoid.errors import ComposabilityError, InvalidArgument
from zgroupoid.groupoid import Arrow, build_instance, compose, is_unit_arrow, source, target
from zgroupoid.measure import conditional_measure, dirac, same_class, uniform
from zgroupoid.orbits import (
    DIRAC, PRINCIPAL, SINGULAR, Stratum, act, classify, dimension_report, division, is_extreme_point,
    project_to_section, properness_report, section, section_report, stratify, trueness_check,
)
from zgroupoid.space import make_circle_space


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_stratum_counts(n):
    s = make_circle_space(n)
    strata = stratify(s)
    assert len(strata) == 2 ** n - 1
    for k in range(n):
        assert sum(1 for t in strata if t.dim == k) == math.comb(n, k + 1)
    assert sum(1 for t in strata if t.kind == DIRAC) == n
    # on one point the only stratum is reported as a Dirac
    assert sum(1 for t in strata if t.kind == PRINCIPAL) == (n > 1)


def test_three_point_example():
    s = make_circle_space(3)
    rep = section_report(s)
    assert len(rep.strata) == 7
    assert sorted(rep.meets.values()) == list(range(7))
    principal = [t for t in rep.strata if t.kind == PRINCIPAL]
    assert len(principal) == 1 and principal[0].dim == 2
    assert principal[0].canonical(s).weights.tolist() == [1 / 3] * 3
    assert rep.codim_principal["codim_principal_in_simplex"] == 0
    assert rep.codim_principal["codim_principal_in_cone"] == 1


def test_section_meets_each_stratum_once():
    s = make_circle_space(6)
    sec = section(s)
    supports = [m.support() for m in sec]
    assert len(set(supports)) == len(supports) == 63
    for m in sec:
        assert math.isclose(m.total, 1.0, rel_tol=1e-15)


def test_large_space_sampled_strata():
    s = make_circle_space(14)
    strata = stratify(s, max_enumeration=10, samples=64, rng=np.random.default_rng(1))
    kinds = {t.kind for t in strata}
    assert kinds == {DIRAC, SINGULAR, PRINCIPAL}
    assert len(strata) == len({t.support for t in strata})
    assert section_report(s, max_enumeration=10).codim_principal["dim_cone"] == 14


@given(measures(max_n=10))
def test_projection_stays_in_class(mu):
    p = project_to_section(mu)
    assert same_class(p, mu)
    assert classify(p) == classify(mu)
    assert project_to_section(p) == p


@given(measures(max_n=10))
def test_extreme_points_are_diracs(mu):
    nu = mu.normalized()
    assert is_extreme_point(nu) == (len(nu.support()) == 1)


def test_stratum_validation_and_report():
    with pytest.raises(InvalidArgument):
        Stratum(frozenset(), 3)
    s = make_circle_space(4)
    r = Stratum(frozenset({1, 3}), 4).to_report(s)
    assert r == {"support": [1, 3], "dim": 1, "kind": SINGULAR, "canonical": [0.0, 0.5, 0.0, 0.5]}
    assert dimension_report(s)["dim_simplex"] == 3


@pytest.fixture(scope="module")
def inst():
    return build_instance(make_circle_space(5), 0)


def test_act_relabels_and_conditions(inst):
    ref = uniform(inst.space)
    f = inst.ideal[0]
    a = Arrow(f, inst.units[1], inst.base_point)
    label, mu = act(a, f, ref)
    assert label == target(a)
    assert mu == conditional_measure(ref, target(a))
    with pytest.raises(ComposabilityError):
        act(a, inst.ideal[1], ref)


def test_trueness(inst):
    rep = trueness_check(inst, 300, np.random.default_rng(7))
    assert rep["passed"], rep["failures"][:5]
    assert rep["composition_respected"] == rep["units_identity"] == 300
    assert rep["noncomposable_rejected"]


def test_trueness_needs_charged_cozero(inst):
    with pytest.raises(InvalidArgument):
        trueness_check(inst, 5, ref=dirac(inst.space, 0))


def test_division_domain_and_identities(inst):
    arrows = inst.arrows()
    rng = np.random.default_rng(3)
    for _ in range(500):
        a = arrows[rng.integers(len(arrows))]
        b = arrows[rng.integers(len(arrows))]
        if source(a) == source(b):
            d = division(a, b)
            # a D(a, b) recovers b
            assert compose(a, d) == b
            assert source(d) == target(a) and target(d) == target(b)
        else:
            with pytest.raises(ComposabilityError):
                division(a, b)
    for a in arrows[:50]:
        d = division(a, a)
        assert is_unit_arrow(d) and source(d) == target(a)


def test_properness(inst):
    rep = properness_report(inst, max_pairs=500, rng=np.random.default_rng(0))
    assert rep["passed"]
    assert rep["max_preimage"] <= rep["preimage_bound"] == len(inst.units)
