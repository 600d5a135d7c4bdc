"""Measures on a finite space: classes, push-forward, disintegration and
Radon-Nikodym derivatives."""
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import Func, cozero_set
from .errors import AbsoluteContinuityError, InvalidArgument, PartitionError


class Measure:
    """Nonnegative weights on the points of a FiniteSpace; never all zero."""

    __slots__ = ("space", "weights")

    def __init__(self, space, weights):
        w = np.array(weights, dtype=np.float64).reshape(-1)
        if w.shape[0] != space.n:
            raise InvalidArgument(f"measure has {w.shape[0]} weights, space has {space.n} points")
        lo, hi = w.min(), w.max()
        if not lo >= 0 or hi == np.inf:  # also catches NaN
            raise InvalidArgument("weights must be finite and nonnegative")
        if not hi > 0:
            raise InvalidArgument("the zero measure is not an element of M(X)")
        self._set(space, w + 0.0)

    def _set(self, space, w):
        w.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "weights", w)

    @classmethod
    def _trusted(cls, space, w):
        """Skip validation for weights derived from an already valid measure."""
        obj = cls.__new__(cls)
        obj._set(space, w)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Measure is immutable")

    def __repr__(self):
        return f"Measure({self.weights.tolist()})"

    def __eq__(self, other):
        if not isinstance(other, Measure):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash((self.space.n, self.weights.tobytes()))

    @property
    def total(self):
        return math.fsum(self.weights)

    def support(self):
        return frozenset(np.flatnonzero(self.weights > 0).tolist())

    def null_set(self):
        return frozenset(np.flatnonzero(self.weights == 0).tolist())

    def mass(self, points):
        return math.fsum(self.weights[sorted(points)]) if points else 0.0

    def normalized(self):
        return Measure._trusted(self.space, self.weights / self.total)

    def restricted(self, points):
        """Restriction to ``points``; raises if it carries no mass."""
        w = np.zeros(self.space.n)
        idx = sorted(points)
        w[idx] = self.weights[idx]
        return Measure(self.space, w)

    def scaled(self, c):
        if c <= 0:
            raise InvalidArgument("scale must be positive")
        return Measure(self.space, self.weights * c)

    def integrate(self, h):
        hv = h.values if isinstance(h, Func) else np.asarray(h, dtype=float)
        return math.fsum(hv * self.weights)

    def to_config(self):
        return {"weights": self.weights.tolist()}


def measure_from_config(space, cfg):
    if not isinstance(cfg, dict) or "weights" not in cfg:
        raise InvalidArgument(f"measure literal must look like {{'weights': [...]}}, got {cfg!r}")
    return Measure(space, cfg["weights"])


@dataclass(frozen=True)
class MeasureClass:
    null_set: frozenset
    n: int

    @property
    def support(self):
        return frozenset(range(self.n)) - self.null_set


def measure_class(mu):
    return MeasureClass(mu.null_set(), mu.space.n)


def dirac(space, x):
    space.check_point(x)
    w = np.zeros(space.n)
    w[x] = 1.0
    return Measure(space, w)


def uniform(space, points=None):
    pts = sorted(space.points if points is None else points)
    w = np.zeros(space.n)
    w[pts] = 1.0 / len(pts)
    return Measure(space, w)


def _mapping_array(space, phi):
    m = getattr(phi, "map", phi)
    arr = np.asarray(m, dtype=np.int64).reshape(-1)
    if arr.shape[0] != space.n or np.any(arr < 0) or np.any(arr >= space.n):
        raise InvalidArgument("point map must be total on the space")
    return arr


def push_forward(mu, phi):
    """phi_* mu: the weight at y is mu(phi^{-1}{y})."""
    return Measure(mu.space, _kernels.push_forward(mu.weights, _mapping_array(mu.space, phi)))


def same_class(mu, nu):
    if mu.space != nu.space:
        raise InvalidArgument("measures live on different spaces")
    return mu.null_set() == nu.null_set()


@dataclass(frozen=True)
class Disintegration:
    source: Measure
    pieces: tuple            # cozero sets U_{f_i}
    conditionals: tuple      # nu_{f_i}, or None for a piece of zero mass
    base_weights: tuple      # nu(U_{f_i})

    def reconstruct(self):
        w = np.zeros(self.source.space.n)
        for c, b in zip(self.conditionals, self.base_weights):
            if c is not None:
                w += b * c.weights
        return w

    def residual(self):
        return float(np.max(np.abs(self.reconstruct() - self.source.weights)))

    def iterated_integral(self, h):
        return math.fsum(b * c.integrate(h) for c, b in zip(self.conditionals, self.base_weights) if c is not None)

    def to_report(self):
        return {
            "pieces": [sorted(p) for p in self.pieces],
            "conditionals": [None if c is None else c.weights.tolist() for c in self.conditionals],
            "base_weights": list(self.base_weights),
            "reconstruction_residual": self.residual(),
        }


def disintegrate(nu, partition_funcs):
    """Split nu along the cozero sets of ``partition_funcs``.

    The cozero sets must be pairwise disjoint and cover supp(nu).
    """
    pieces = []
    for f in partition_funcs:
        if f.space != nu.space:
            raise InvalidArgument("partition function lives on a different space")
        pieces.append(cozero_set(f))
    seen = set()
    for p in pieces:
        if seen & p:
            raise PartitionError(f"cozero sets overlap at {sorted(seen & p)}")
        seen |= p
    uncovered = nu.support() - seen
    if uncovered:
        raise PartitionError(f"support points {sorted(uncovered)} not covered by any cozero set")
    conditionals, base = [], []
    for p in pieces:
        m = nu.mass(p)
        base.append(m)
        conditionals.append(nu.restricted(p).normalized() if m > 0 else None)
    return Disintegration(nu, tuple(pieces), tuple(conditionals), tuple(base))


def conditional_measure(ref, f):
    """mu_f: ``ref`` restricted to U_f and normalized."""
    return ref.restricted(cozero_set(f)).normalized()


@dataclass(frozen=True)
class RNDerivative:
    """dnu/dmu as values on the common support (sorted)."""

    support: tuple
    values: np.ndarray

    def __call__(self, x):
        return float(self.values[self.support.index(x)])

    def as_dict(self):
        return dict(zip(self.support, self.values.tolist()))


def rn_derivative(nu, mu):
    if not same_class(nu, mu):
        raise AbsoluteContinuityError("measures are not equivalent; dnu/dmu undefined")
    supp = tuple(sorted(mu.support()))
    return RNDerivative(supp, nu.weights[list(supp)] / mu.weights[list(supp)])


def rn_decomposition_invariance(nu, mu, partition_funcs, tol=1e-12):
    """Compare dnu/dmu on each piece with the derivative of the conditionals.

    On U_i: dnu/dmu = (dnu_i/dmu_i) * nu(U_i)/mu(U_i).
    """
    if not same_class(nu, mu):
        raise AbsoluteContinuityError("measures are not equivalent")
    j = rn_derivative(nu, mu)
    dn = disintegrate(nu, partition_funcs)
    dm = disintegrate(mu, partition_funcs)
    rows = []
    for p, cn, cm, bn, bm in zip(dn.pieces, dn.conditionals, dm.conditionals, dn.base_weights, dm.base_weights):
        if cn is None:
            rows.append({"piece": sorted(p), "empty": True, "passed": True})
            continue
        local = rn_derivative(cn, cm)
        norm = bn / bm
        pts = list(local.support)
        global_vals = np.array([j(x) for x in pts])
        dev = float(np.max(np.abs(global_vals - local.values * norm)))
        rows.append({
            "piece": sorted(p),
            "empty": False,
            "ratios": global_vals.tolist(),
            "conditional_ratios": local.values.tolist(),
            "normalization": norm,
            "max_deviation": dev,
            "passed": dev <= tol * max(1.0, float(np.max(np.abs(global_vals)))),
        })
    return {"pieces": rows, "passed": all(r["passed"] for r in rows)}


def rn_chain_residual(nu, mu, lam):
    """max |dnu/dmu * dmu/dlam - dnu/dlam| on the common support."""
    a, b, c = rn_derivative(nu, mu), rn_derivative(mu, lam), rn_derivative(nu, lam)
    return float(np.max(np.abs(a.values * b.values - c.values)))
