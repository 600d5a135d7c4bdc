"""Point maps of a finite space and their invariant measures."""
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import Func
from .errors import InvalidArgument, PreconditionError
from .measure import Measure, push_forward


class Transformation:
    """A total map of the points of a FiniteSpace to themselves."""

    __slots__ = ("space", "map", "bijective", "_reps", "_periodic")

    def __init__(self, space, mapping):
        arr = np.array(mapping, dtype=np.int64).reshape(-1)
        if arr.shape[0] != space.n:
            raise InvalidArgument(f"map has {arr.shape[0]} entries, space has {space.n} points")
        if np.any(arr < 0) or np.any(arr >= space.n):
            raise InvalidArgument("map must send points into the space")
        arr.setflags(write=False)
        self.space = space
        self.map = arr
        self.bijective = bool(np.unique(arr).shape[0] == space.n)
        reps, periodic = _kernels.cycle_representatives(arr)
        self._reps = np.asarray(reps)
        self._periodic = np.asarray(periodic)

    def __repr__(self):
        return f"Transformation({self.map.tolist()})"

    def __call__(self, x):
        return int(self.map[x])

    def compose(self, other):
        """self after other."""
        return Transformation(self.space, self.map[other.map])

    def iterate(self, x, t):
        for _ in range(t):
            x = int(self.map[x])
        return x

    def cycles(self):
        """Cycles of the map, each as a sorted tuple, ordered by smallest point."""
        groups = {}
        for x in np.flatnonzero(self._periodic).tolist():
            groups.setdefault(int(self._reps[x]), []).append(x)
        return [tuple(sorted(groups[k])) for k in sorted(groups)]

    def basin_representatives(self):
        """For each point, the smallest point of the cycle it falls into."""
        return self._reps.copy()

    def to_config(self):
        return {"map": self.map.tolist()}


def transformation_from_config(space, cfg):
    if not isinstance(cfg, dict) or "map" not in cfg:
        raise InvalidArgument(f"transformation literal must look like {{'map': [...]}}, got {cfg!r}")
    return Transformation(space, cfg["map"])


def is_invariant(mu, phi):
    return push_forward(mu, phi) == mu


def is_cycle_constant(mu, phi):
    """For a bijection: mu takes one value on each cycle."""
    return all(len(set(mu.weights[list(c)].tolist())) == 1 for c in phi.cycles())


def _require_bijective_invariant(mu, phi):
    if not phi.bijective:
        raise PreconditionError("ergodicity is only defined here for bijections")
    if not is_invariant(mu, phi):
        raise PreconditionError("measure is not invariant under the map")


def invariant_subsets(phi):
    """All unions of cycles, as frozensets (2**#cycles of them)."""
    cyc = phi.cycles()
    for mask in range(1 << len(cyc)):
        yield frozenset(x for i, c in enumerate(cyc) if mask >> i & 1 for x in c)


def is_ergodic(mu, phi):
    """Every invariant set has measure 0 or full measure.

    Invariant sets of a bijection are exactly unions of cycles; rather than
    enumerate all 2**k of them it suffices that at most one cycle carries
    mass, which is equivalent.
    """
    _require_bijective_invariant(mu, phi)
    charged = [c for c in phi.cycles() if mu.mass(c) > 0]
    return len(charged) == 1


def is_ergodic_enumerated(mu, phi):
    """Same verdict as ``is_ergodic`` by brute-force subset enumeration."""
    _require_bijective_invariant(mu, phi)
    total = mu.total
    for s in invariant_subsets(phi):
        m = mu.mass(s)
        if m != 0 and m != total:
            return False
    return True


def strict_ergodicity_note():
    return ("transitive orbits on a finite space carry positive measure, so the "
            "strict-ergodicity clause (transitive set of measure zero) never applies")


@dataclass(frozen=True)
class ErgodicDecomposition:
    source: Measure
    components: tuple   # ergodic probability measures
    weights: tuple      # positive, summing to 1
    cycles: tuple

    def reconstruct(self):
        w = np.zeros(self.source.space.n)
        for c, a in zip(self.components, self.weights):
            w += a * c.weights
        return w * self.source.total

    def residual(self):
        return float(np.max(np.abs(self.reconstruct() - self.source.weights)))

    def double_integral(self, h):
        """sum_c w_c * int h d nu_c, scaled back to the source's total mass."""
        return self.source.total * math.fsum(a * c.integrate(h) for c, a in zip(self.components, self.weights))

    def to_report(self):
        return {
            "cycles": [list(c) for c in self.cycles],
            "components": [c.weights.tolist() for c in self.components],
            "weights": list(self.weights),
            "reconstruction_residual": self.residual(),
        }


def ergodic_decompose(mu, phi):
    """Normalized restrictions of mu to the cycles it charges."""
    _require_bijective_invariant(mu, phi)
    total = mu.total
    comps, weights, cycles = [], [], []
    for c in phi.cycles():
        m = mu.mass(c)
        if m > 0:
            comps.append(mu.restricted(c).normalized())
            weights.append(m / total)
            cycles.append(c)
    return ErgodicDecomposition(mu, tuple(comps), tuple(weights), tuple(cycles))


def birkhoff_average(h, phi, x, steps):
    """(1/N) sum_{k<N} h(phi^k x)."""
    if steps < 1:
        raise InvalidArgument("need at least one iteration")
    phi.space.check_point(x)
    hv = h.values if isinstance(h, Func) else np.asarray(h, dtype=float)
    counts = _kernels.orbit_counts(phi.map, int(x), int(steps))
    return math.fsum(counts * hv) / steps


def space_average(h, points):
    hv = h.values if isinstance(h, Func) else np.asarray(h, dtype=float)
    pts = sorted(points)
    return math.fsum(hv[pts]) / len(pts)


def cesaro_average(mu, phi, steps):
    """A_T(mu) = (1/T) sum_{t<T} phi^t_* mu."""
    if steps < 1:
        raise InvalidArgument("need at least one iteration")
    return Measure(mu.space, _kernels.cesaro_sum(mu.weights, phi.map, int(steps)) / steps)


def invariant_projection(mu, phi):
    """lim_T A_T(mu): each basin's mass spread evenly over its cycle.

    For a bijection this is the projection onto cycle-constant measures.
    """
    reps = phi.basin_representatives()
    w = np.zeros(mu.space.n)
    for c in phi.cycles():
        basin = np.flatnonzero(reps == c[0])
        w[list(c)] = math.fsum(mu.weights[basin]) / len(c)
    return Measure(mu.space, w)


def ergodic_measures(phi):
    """The uniform measures on single cycles."""
    out = []
    for c in phi.cycles():
        w = np.zeros(phi.space.n)
        w[list(c)] = 1.0 / len(c)
        out.append(Measure(phi.space, w))
    return out


def invariant_limit_check(phi, seeds, steps, tol=1e-12):
    """Cesaro averages of each seed against the invariant set.

    Reports the L1 distance of A_t(seed) to its limit for t = 1..steps, and
    whether the limit is a convex combination of the ergodic (single-cycle
    uniform) measures, which are the extreme points of the invariant
    simplex.
    """
    ergodic = ergodic_measures(phi)
    rows = []
    for mu in seeds:
        limit = invariant_projection(mu, phi)
        dists = _kernels.cesaro_distances(mu.weights, phi.map, int(steps), limit.weights)
        # barycentric coordinates on the ergodic measures
        coords = []
        for e, c in zip(ergodic, phi.cycles()):
            coords.append(limit.mass(c) / limit.total)
        mix = sum(a * e.weights for a, e in zip(coords, ergodic)) * limit.total
        hull_residual = float(np.max(np.abs(mix - limit.weights)))
        rows.append({
            "seed": mu.weights.tolist(),
            "distances": np.asarray(dists).tolist(),
            "final_distance": float(dists[-1]),
            "limit": limit.weights.tolist(),
            "limit_invariant": is_invariant(limit, phi),
            "ergodic_coordinates": coords,
            "in_ergodic_hull": hull_residual <= tol,
            "hull_residual": hull_residual,
        })
    return {
        "bijective": phi.bijective,
        "ergodic_extreme_points": [e.weights.tolist() for e in ergodic],
        "seeds": rows,
        "strict_ergodicity": strict_ergodicity_note(),
    }


def is_extreme_invariant(mu, phi):
    """True iff mu is not a proper convex combination of distinct invariant
    probability measures.

    Invariant probabilities of a bijection form the simplex spanned by the
    cycle-uniform measures, so mu is extreme iff it charges one cycle.
    """
    _require_bijective_invariant(mu, phi)
    return sum(1 for c in phi.cycles() if mu.mass(c) > 0) == 1
