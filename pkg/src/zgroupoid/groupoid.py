"""The action groupoid m_x x| G(1) and its fibre measures.

Arrows are pairs (f, g) with f in m_x and g a unit; s(f, g) = f,
t(f, g) = fg, and (f1, g1)(f2, g2) = (f1, g1 g2) whenever f2 = f1 g1.
Composability is tested by exact equality, so unit samples must have
exactly representable inverses (powers of two, signs).
"""
from dataclasses import dataclass, field

import numpy as np

from .action import UnitElement
from .algebra import Func, MaximalIdeal, constant, ideal_member, zero_set
from .errors import ComposabilityError, InvalidArgument

WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class Arrow:
    f: Func
    g: UnitElement
    base_point: int

    def __post_init__(self):
        if not isinstance(self.g, UnitElement):
            object.__setattr__(self, "g", UnitElement(self.g))
        if self.f.space != self.g.space:
            raise InvalidArgument("arrow components live on different spaces")
        if not ideal_member(MaximalIdeal(self.f.space, self.base_point), self.f):
            raise InvalidArgument(f"{self.f!r} is not in m_{self.base_point}")

    def __eq__(self, other):
        if not isinstance(other, Arrow):
            return NotImplemented
        return self.base_point == other.base_point and self.f == other.f and self.g.g == other.g.g

    def __hash__(self):
        return hash((self.base_point, self.f, self.g.g))

    def __repr__(self):
        return f"Arrow(f={self.f.values.tolist()}, g={self.g.values.tolist()})"


def unit_arrow(f, base_point):
    return Arrow(f, UnitElement.identity(f.space), base_point)


def source(a):
    return a.f


def target(a):
    return a.f * a.g.g


def is_composable(a, b):
    return a.base_point == b.base_point and b.f == target(a)


def compose(a, b):
    """a then b; requires t(a) == s(b) exactly."""
    if not is_composable(a, b):
        raise ComposabilityError(f"t({a!r}) != s({b!r})")
    return Arrow(a.f, a.g * b.g, a.base_point)


def inverse(a):
    return Arrow(target(a), a.g.inverse(), a.base_point)


def is_unit_arrow(a):
    return bool(np.all(a.g.values == 1.0))


def cocycle(f, g):
    """rho(f, g) = |g| / (|f| + |g|), pointwise."""
    gv = g.values if isinstance(g, (UnitElement, Func)) else np.asarray(g, dtype=float)
    ag = np.abs(gv)
    return Func(f.space, ag / (np.abs(f.values) + ag))


def cocycle_residual(f, g1, g2):
    """rho(f, g1 g2) - rho(f, g1) * rho(f g1, g2), pointwise.

    Vanishes on Z(f); off Z(f) it is generally nonzero and only reported.
    """
    g1 = g1 if isinstance(g1, UnitElement) else UnitElement(g1)
    g2 = g2 if isinstance(g2, UnitElement) else UnitElement(g2)
    lhs = cocycle(f, g1 * g2)
    rhs = cocycle(f, g1) * cocycle(f * g1.g, g2)
    return lhs - rhs


def default_units(space, c=2.0):
    """{e, c, 1/c, -e} as constant units."""
    return [
        UnitElement(constant(space, 1.0)),
        UnitElement(constant(space, c)),
        UnitElement(constant(space, 1.0 / c)),
        UnitElement(constant(space, -1.0)),
    ]


def default_ideal_seed(space, base_point):
    x = base_point
    m = MaximalIdeal(space, x)
    seeds = [m.separating_function()]
    off = np.ones(space.n)
    off[x] = 0.0
    seeds.append(Func(space, off))
    if space.n > 2:
        alt = np.array([(-1.0) ** y * (1 + y % 3) for y in space.points])
        alt[x] = 0.0
        alt[(x + 1) % space.n] = 0.0
        seeds.append(Func(space, alt))
    return seeds


@dataclass(frozen=True)
class GroupoidInstance:
    """A finite sample of the groupoid at one base point.

    ``units`` is symmetric and contains e; ``ideal`` is the closure of the
    seed functions under multiplication by ``units`` to ``closure_depth``
    steps. ``depth[i]`` records the step at which ``ideal[i]`` appeared.
    """

    space: object
    base_point: int
    units: tuple
    ideal: tuple
    closure_depth: int
    depth: tuple = field(default=(), repr=False)

    @property
    def ideal_set(self):
        return set(self.ideal)

    def unit_index(self, g):
        g = g.g if isinstance(g, UnitElement) else g
        for i, u in enumerate(self.units):
            if u.g == g:
                return i
        return -1

    def arrows(self):
        return [Arrow(f, g, self.base_point) for f in self.ideal for g in self.units]

    def closure_defects(self):
        """Members below the depth bound whose unit translates are missing."""
        members = self.ideal_set
        bad = []
        for f, d in zip(self.ideal, self.depth):
            if d >= self.closure_depth:
                continue
            for g in self.units:
                if f * g.g not in members:
                    bad.append((f, g))
        return bad

    def units_form_group(self):
        for a in self.units:
            for b in self.units:
                if self.unit_index(a * b) < 0:
                    return False
        return True

    def random_arrow(self, rng):
        f = self.ideal[rng.integers(len(self.ideal))]
        g = self.units[rng.integers(len(self.units))]
        return Arrow(f, g, self.base_point)

    def random_composable(self, rng, length):
        """``length`` consecutive composable arrows starting in the ideal sample."""
        f = self.ideal[rng.integers(len(self.ideal))]
        out = []
        for _ in range(length):
            g = self.units[rng.integers(len(self.units))]
            a = Arrow(f, g, self.base_point)
            out.append(a)
            f = target(a)
        return out


def build_instance(space, base_point, units=None, ideal_seed=None, closure_depth=3):
    space.check_point(base_point)
    if closure_depth < 0:
        raise InvalidArgument("closure_depth must be >= 0")
    units = default_units(space) if units is None else [u if isinstance(u, UnitElement) else UnitElement(u) for u in units]
    seeds = default_ideal_seed(space, base_point) if ideal_seed is None else list(ideal_seed)
    e = constant(space, 1.0)
    unit_funcs = [u.g for u in units]
    if e not in unit_funcs:
        raise InvalidArgument("unit sample must contain the identity")
    for u in units:
        if u.space != space:
            raise InvalidArgument("unit lives on a different space")
        inv = u.inverse().g
        if not np.array_equal(u.values * inv.values, e.values):
            raise InvalidArgument(f"{u!r} has no exactly representable inverse")
        if inv not in unit_funcs:
            raise InvalidArgument(f"unit sample not closed under inverse: missing inverse of {u!r}")
    m = MaximalIdeal(space, base_point)
    for f in seeds:
        if not ideal_member(m, f):
            raise InvalidArgument(f"seed {f!r} is not in m_{base_point}")
    # deduplicate, keeping first occurrence order
    ordered, depth, seen = [], [], set()
    frontier = []
    for f in seeds:
        if f not in seen:
            seen.add(f)
            ordered.append(f)
            depth.append(0)
            frontier.append(f)
    for d in range(1, closure_depth + 1):
        nxt = []
        for f in frontier:
            for u in units:
                h = f * u.g
                if h not in seen:
                    seen.add(h)
                    ordered.append(h)
                    depth.append(d)
                    nxt.append(h)
        frontier = nxt
    return GroupoidInstance(space, base_point, tuple(units), tuple(ordered), closure_depth, tuple(depth))


@dataclass(frozen=True)
class FibreMeasure:
    """Probability weights on the t-fibre over ``obj``.

    ``arrows[i]`` carries ``weights[i]``.
    """

    obj: Func
    arrows: tuple
    weights: np.ndarray

    def support(self):
        return frozenset(a for a, w in zip(self.arrows, self.weights) if w > 0)

    def weight_of(self, arrow):
        return float(sum(w for a, w in zip(self.arrows, self.weights) if a == arrow))


def _check_weights(inst, unit_weights):
    w = np.asarray(unit_weights, dtype=float)
    if w.shape != (len(inst.units),):
        raise InvalidArgument(f"need {len(inst.units)} unit weights, got shape {w.shape}")
    if np.any(w < 0) or not np.all(np.isfinite(w)):
        raise InvalidArgument("unit weights must be finite and nonnegative")
    if abs(w.sum() - 1.0) > WEIGHT_TOL:
        raise InvalidArgument(f"unit weights sum to {w.sum()!r}, not 1")
    return w


def fibre_measure(inst, f, unit_weights):
    """mu_f x nu on t^{-1}(f) = {(f g^{-1}, g)} indexed by the unit sample."""
    w = _check_weights(inst, unit_weights)
    arrows = tuple(Arrow(f * g.inverse().g, g, inst.base_point) for g in inst.units)
    return FibreMeasure(f, arrows, w.copy())


def translate_fibre(fm, a):
    """Right translation b -> b a of a fibre measure over s(a)."""
    if source(a) != fm.obj:
        raise ComposabilityError("translating arrow must start at the fibre's object")
    return FibreMeasure(target(a), tuple(compose(b, a) for b in fm.arrows), fm.weights.copy())


def check_quasi_invariance(inst, f, unit_weights):
    """Compare a . lambda^{s(a)} with lambda^{t(a)} for a = (f, g), g in the sample.

    Finitely supported measures are equivalent iff their supports agree.
    ``null_sets_correspond`` and ``weights_preserved`` hold for any
    correct translation; ``equivalent`` additionally needs the weight
    support to be stable under right multiplication by g, which the
    default (non-group) unit sample does not give.
    """
    src = fibre_measure(inst, f, unit_weights)
    rows = []
    for g in inst.units:
        a = Arrow(f, g, inst.base_point)
        moved = translate_fibre(src, a)
        tgt = fibre_measure(inst, target(a), unit_weights)
        expected_support = frozenset(compose(b, a) for b in src.support())
        rows.append({
            "g": g.values.tolist(),
            "equivalent": moved.support() == tgt.support(),
            "null_sets_correspond": moved.support() == expected_support,
            "weights_preserved": sorted(moved.weights.tolist()) == sorted(src.weights.tolist()),
            "lands_on_target_fibre": all(target(b) == target(a) for b in moved.arrows),
        })
    return {
        "units_form_group": inst.units_form_group(),
        "arrows": rows,
        "passed": all(r["equivalent"] for r in rows),
    }


def inverse_weights(inst, unit_weights):
    """The weights nu o inv, i.e. the image of nu under g -> g^{-1}."""
    w = _check_weights(inst, unit_weights)
    out = np.empty_like(w)
    for i, g in enumerate(inst.units):
        out[i] = w[inst.unit_index(g.inverse())]
    return out


def is_symmetric_class(inst, unit_weights):
    """A class is symmetric iff nu and nu o inv share null sets.

    When they do, (nu + nu o inv) / 2 is a symmetric member of the class.
    """
    w = _check_weights(inst, unit_weights)
    winv = inverse_weights(inst, w)
    symmetric = bool(np.array_equal(w > 0, winv > 0))
    rep = (w + winv) / 2 if symmetric else None
    return {"symmetric": symmetric, "representative": None if rep is None else rep.tolist()}


def cocycle_report(inst, triples):
    """Residuals of the cocycle identity on (f, g1, g2) samples."""
    rows = []
    for f, g1, g2 in triples:
        r = cocycle_residual(f, g1, g2)
        z = zero_set(f).points
        rows.append({
            "f": f.values.tolist(),
            "g1": g1.values.tolist(),
            "g2": g2.values.tolist(),
            "residual": r.values.tolist(),
            "zero_on_Z(f)": all(r.values[y] == 0 for y in z),
        })
    return rows
