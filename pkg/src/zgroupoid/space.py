"""Finite carriers: the n-point circle grid and the unit-interval model."""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import InvalidArgument


@dataclass(frozen=True)
class FiniteSpace:
    """n equally spaced points on the circle of circumference 1.

    Point ``i`` sits at coordinate ``i/n``; distances wrap around, so
    ``d(x, y) = min(|i - j|, n - |i - j|) / n``.
    """

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidArgument(f"space needs n >= 1, got {self.n!r}")

    @property
    def points(self):
        return range(self.n)

    def coord(self, x):
        self.check_point(x)
        return Fraction(x, self.n)

    def check_point(self, x):
        if not (0 <= x < self.n):
            raise InvalidArgument(f"point {x} not in space of size {self.n}")

    def distance(self, x, y):
        """Exact distance as a Fraction."""
        self.check_point(x)
        self.check_point(y)
        d = abs(x - y)
        return Fraction(min(d, self.n - d), self.n)

    def metric(self, x, y):
        return float(self.distance(x, y))

    def metric_matrix(self):
        return _kernels.grid_distance(self.n) / self.n

    def to_config(self):
        return {"kind": "circle", "n": int(self.n)}


def make_circle_space(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    return FiniteSpace(int(n))


def space_from_config(cfg):
    if not isinstance(cfg, dict) or cfg.get("kind") != "circle":
        raise InvalidArgument(f"unsupported space config {cfg!r}")
    return make_circle_space(cfg.get("n"))


def ball(space, x, r):
    """Closed ball {y : d(x, y) <= r}, compared exactly."""
    space.check_point(x)
    if r < 0:
        raise InvalidArgument("radius must be nonnegative")
    radius = Fraction(r)
    return frozenset(y for y in space.points if space.distance(x, y) <= radius)


@dataclass(frozen=True)
class IntervalModel:
    """[0, 1] cut into pieces by ``breakpoints`` (first 0, last 1)."""

    breakpoints: tuple = (Fraction(0), Fraction(1))

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        if len(bps) < 2 or bps[0] != 0 or bps[-1] != 1:
            raise InvalidArgument("breakpoints must start at 0 and end at 1")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise InvalidArgument("breakpoints must be strictly increasing")
        object.__setattr__(self, "breakpoints", bps)

    @property
    def domain(self):
        return (Fraction(0), Fraction(1))

    def pieces(self):
        return list(zip(self.breakpoints, self.breakpoints[1:]))
