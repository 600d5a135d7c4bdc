"""Actions of the unit group G(1) on a maximal ideal."""
from dataclasses import dataclass

import numpy as np

from .algebra import Func, constant, cozero_set, is_unit, reciprocal
from .errors import InvalidArgument


@dataclass(frozen=True)
class UnitElement:
    """A nowhere-vanishing function, i.e. an element of G(1)."""

    g: Func

    def __post_init__(self):
        if not is_unit(self.g):
            raise InvalidArgument(f"{self.g!r} vanishes somewhere; not a unit")

    @classmethod
    def identity(cls, space):
        return cls(constant(space, 1.0))

    @property
    def space(self):
        return self.g.space

    @property
    def values(self):
        return self.g.values

    def inverse(self):
        return UnitElement(reciprocal(self.g))

    def __mul__(self, other):
        if isinstance(other, UnitElement):
            return UnitElement(self.g * other.g)
        return NotImplemented

    def __repr__(self):
        return f"UnitElement({self.g.values.tolist()})"


def _as_func(g):
    return g.g if isinstance(g, UnitElement) else g


def _check(g, f):
    g = _as_func(g)
    if not is_unit(g):
        raise InvalidArgument("acting element must be a unit")
    if g.space != f.space:
        raise InvalidArgument("unit and function live on different spaces")
    return g


def normalized_action(g, f):
    """h = |f| / (|f| + |g|): zero on Z(f), strictly inside (0, 1) elsewhere."""
    g = _check(g, f)
    af = np.abs(f.values)
    return Func(f.space, af / (af + np.abs(g.values)))


def multiplicative_action(g, f):
    g = _check(g, f)
    return Func(f.space, g.values * f.values)


def tau(f, g):
    """|g| / (|f| + |g|): equal to 1 exactly on Z(f), in (0, 1) elsewhere."""
    g = _check(g, f)
    ag = np.abs(g.values)
    return Func(f.space, ag / (np.abs(f.values) + ag))


def cozero_translation(g, f):
    """T_g on the cozero base: returns (U_f, U_{gf})."""
    g = _check(g, f)
    return cozero_set(f), cozero_set(multiplicative_action(g, f))
