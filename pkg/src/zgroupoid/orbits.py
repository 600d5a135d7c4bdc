"""Stratification of the probability simplex by measure class.

Orbits are measure classes, i.e. supports; the section picks the uniform
measure on each support.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .algebra import cozero_set
from .errors import ComposabilityError, InvalidArgument
from .groupoid import Arrow, compose, inverse, is_unit_arrow, source, target, unit_arrow
from .measure import Measure, conditional_measure, uniform

DIRAC, SINGULAR, PRINCIPAL = "dirac", "singular", "principal"


@dataclass(frozen=True)
class Stratum:
    support: frozenset
    n: int

    def __post_init__(self):
        if not self.support:
            raise InvalidArgument("strata have nonempty support")

    @property
    def dim(self):
        return len(self.support) - 1

    @property
    def kind(self):
        if len(self.support) == 1:
            return DIRAC
        return PRINCIPAL if len(self.support) == self.n else SINGULAR

    def canonical(self, space):
        return uniform(space, self.support)

    def key(self):
        return (len(self.support), tuple(sorted(self.support)))

    def to_report(self, space):
        return {
            "support": sorted(self.support),
            "dim": self.dim,
            "kind": self.kind,
            "canonical": self.canonical(space).weights.tolist(),
        }


def _all_supports(n):
    for k in range(1, n + 1):
        for c in combinations(range(n), k):
            yield frozenset(c)


def stratify(space, max_enumeration=10, samples=256, rng=None):
    """All 2**n - 1 strata when n <= max_enumeration.

    Beyond that, returns the Dirac strata, the principal stratum and
    ``samples`` random supports.
    """
    n = space.n
    if n <= max_enumeration:
        strata = [Stratum(s, n) for s in _all_supports(n)]
    else:
        rng = np.random.default_rng(0) if rng is None else rng
        sup = {frozenset([x]) for x in range(n)} | {frozenset(range(n))}
        for _ in range(samples):
            mask = rng.random(n) < 0.5
            if mask.any():
                sup.add(frozenset(np.flatnonzero(mask).tolist()))
        strata = [Stratum(s, n) for s in sup]
    return sorted(strata, key=Stratum.key)


def classify(mu):
    return Stratum(mu.support(), mu.space.n)


def section(space, max_enumeration=10):
    return [s.canonical(space) for s in stratify(space, max_enumeration)]


def project_to_section(mu):
    return classify(mu).canonical(mu.space)


def dimension_report(space):
    n = space.n
    return {
        "dim_simplex": n - 1,
        "dim_cone": n,
        "dim_principal_stratum": n - 1,
        "codim_principal_in_simplex": 0,
        "codim_principal_in_cone": 1,
    }


@dataclass(frozen=True)
class SectionReport:
    strata: tuple
    meets: dict          # support (sorted tuple) -> index into the section list
    codim_principal: dict

    def to_report(self, space):
        return {
            "strata": [s.to_report(space) for s in self.strata],
            "meets": {",".join(map(str, k)): v for k, v in self.meets.items()},
            "codimensions": self.codim_principal,
        }


def section_report(space, max_enumeration=10):
    """Which section element meets each stratum; each must be met once."""
    strata = stratify(space, max_enumeration)
    hits = {}
    for i, s in enumerate(strata):
        hits.setdefault(s.canonical(space).support(), []).append(i)
    meets = {}
    for s in strata:
        met = hits.get(s.support, [])
        if len(met) != 1:
            raise AssertionError(f"stratum {sorted(s.support)} met {len(met)} times")
        meets[tuple(sorted(s.support))] = met[0]
    return SectionReport(tuple(strata), meets, dimension_report(space))


def is_extreme_point(mu):
    """A probability measure is extreme in the simplex iff it is a Dirac."""
    return len(mu.support()) == 1


def act(a, label, ref):
    """phi(a): mu_{s(a)} -> mu_{t(a)}, where mu_f is ``ref`` conditioned on U_f."""
    if label != source(a):
        raise ComposabilityError("arrow does not start at the measure's label")
    new = target(a)
    return new, conditional_measure(ref, new)


def trueness_check(inst, samples, rng=None, ref=None):
    """phi(ab) = phi(b) o phi(a) on sampled composable pairs; units act trivially."""
    rng = np.random.default_rng(0) if rng is None else rng
    ref = uniform(inst.space) if ref is None else ref
    usable = [f for f in inst.ideal if cozero_set(f) & ref.support()]
    if not usable:
        raise InvalidArgument("no ideal element has a cozero set charged by the reference measure")
    pair_ok = unit_ok = class_ok = 0
    failures = []
    for i in range(samples):
        f = usable[rng.integers(len(usable))]
        g1 = inst.units[rng.integers(len(inst.units))]
        g2 = inst.units[rng.integers(len(inst.units))]
        a = Arrow(f, g1, inst.base_point)
        b = Arrow(target(a), g2, inst.base_point)
        mu = conditional_measure(ref, f)
        direct = act(compose(a, b), f, ref)
        stepwise = act(b, *act(a, f, ref))
        if direct[0] == stepwise[0] and direct[1] == stepwise[1]:
            pair_ok += 1
        else:
            failures.append(i)
        if direct[1].support() == mu.support():
            class_ok += 1
        u = unit_arrow(f, inst.base_point)
        if act(u, f, ref) == (f, mu):
            unit_ok += 1
    # a non-composable pair must be refused before any action happens
    rejected = False
    f = usable[0]
    a = Arrow(f, inst.units[0], inst.base_point)
    bad = [h for h in inst.ideal if h != target(a)]
    if bad:
        try:
            compose(a, Arrow(bad[0], inst.units[0], inst.base_point))
        except ComposabilityError:
            rejected = True
    else:
        rejected = True
    return {
        "samples": samples,
        "composition_respected": pair_ok,
        "class_preserved": class_ok,
        "units_identity": unit_ok,
        "noncomposable_rejected": rejected,
        "failures": failures,
        "passed": pair_ok == samples and unit_ok == samples and class_ok == samples and rejected,
    }


def division(a, b):
    """D(a, b) = a^{-1} b, defined exactly when s(a) == s(b)."""
    return compose(inverse(a), b)


def properness_report(inst, max_pairs=2000, rng=None):
    """Finite-scale properness: (s, t) preimages are finite and small, and
    the division map is defined on exactly the pairs with equal sources."""
    rng = np.random.default_rng(0) if rng is None else rng
    arrows = inst.arrows()
    fibres = {}
    for a in arrows:
        fibres.setdefault((source(a), target(a)), []).append(a)
    sizes = [len(v) for v in fibres.values()]
    units_in_diagonal = all(unit_arrow(f, inst.base_point) in fibres.get((f, f), []) for f in inst.ideal)

    pairs = [(a, a) for a in arrows]
    for _ in range(max_pairs):
        pairs.append((arrows[rng.integers(len(arrows))], arrows[rng.integers(len(arrows))]))
    # force some equal-source pairs with distinct units
    for f in inst.ideal[: max(1, max_pairs // 20)]:
        for g in inst.units:
            pairs.append((Arrow(f, inst.units[0], inst.base_point), Arrow(f, g, inst.base_point)))
    domain_ok = True
    self_division_ok = True
    for a, b in pairs:
        try:
            d = division(a, b)
            defined = True
        except ComposabilityError:
            defined = False
        if defined != (source(a) == source(b)):
            domain_ok = False
        if a is b or a == b:
            if not (defined and is_unit_arrow(d) and source(d) == target(a)):
                self_division_ok = False
    return {
        "arrows": len(arrows),
        "unit_pairs": len(fibres),
        "max_preimage": max(sizes) if sizes else 0,
        "preimage_bound": len(inst.units),
        "preimages_bounded": (max(sizes) if sizes else 0) <= len(inst.units),
        "diagonal_contains_units": units_in_diagonal,
        "division_pairs_checked": len(pairs),
        "division_domain_is_equal_sources": domain_ok,
        "self_division_is_unit_at_target": self_division_ok,
        "passed": units_in_diagonal and domain_ok and self_division_ok and (max(sizes) if sizes else 0) <= len(inst.units),
    }
