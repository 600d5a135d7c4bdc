"""The algebra C(X) of real functions on a finite space.

Zero means literal ``0.0``; nothing here thresholds small values, since
the zero-set identities only hold exactly under that convention.
"""
from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import InvalidArgument
from .space import FiniteSpace


class Func:
    """An element of C(X): one float per point, immutable."""

    __slots__ = ("space", "values")

    def __init__(self, space, values):
        arr = np.array(values, dtype=np.float64).reshape(-1)
        if arr.shape[0] != space.n:
            raise InvalidArgument(f"function has {arr.shape[0]} values, space has {space.n} points")
        if not np.all(np.isfinite(arr)):
            raise InvalidArgument("function values must be finite")
        arr = arr + 0.0  # folds -0.0 into 0.0
        arr.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Func is immutable")

    def __len__(self):
        return self.space.n

    def __getitem__(self, x):
        return float(self.values[x])

    def __iter__(self):
        return iter(self.values.tolist())

    def __repr__(self):
        return f"Func({self.values.tolist()})"

    def __eq__(self, other):
        if not isinstance(other, Func):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.space.n, self.values.tobytes()))

    def _coerce(self, other):
        if isinstance(other, Func):
            if other.space != self.space:
                raise InvalidArgument("functions live on different spaces")
            return other.values
        if isinstance(other, Real):
            return float(other)
        return NotImplemented

    def _binary(self, other, op):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Func(self.space, op(self.values, v))

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, np.multiply)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if np.any(np.asarray(v) == 0):
            raise InvalidArgument("division by a function with nonempty zero set")
        return Func(self.space, self.values / v)

    def __neg__(self):
        return Func(self.space, -self.values)

    def __abs__(self):
        return Func(self.space, np.abs(self.values))

    def __pow__(self, k):
        if not isinstance(k, (int, np.integer)) or k < 1:
            raise InvalidArgument("only positive integer powers are supported")
        return Func(self.space, self.values ** int(k))

    def __and__(self, other):
        return self._binary(other, np.minimum)

    def __or__(self, other):
        return self._binary(other, np.maximum)

    def to_config(self):
        return {"values": self.values.tolist()}


def constant(space, c):
    return Func(space, np.full(space.n, float(c)))


def func_from_config(space, cfg):
    if not isinstance(cfg, dict) or "values" not in cfg:
        raise InvalidArgument(f"function literal must look like {{'values': [...]}}, got {cfg!r}")
    return Func(space, cfg["values"])


@dataclass(frozen=True)
class ZeroSet:
    points: frozenset
    n: int

    def __contains__(self, x):
        return x in self.points

    def __len__(self):
        return len(self.points)

    def complement(self):
        """The cozero set X - Z as a plain frozenset."""
        return frozenset(range(self.n)) - self.points

    def witness(self, space):
        """A function whose zero set is exactly this set."""
        vals = np.ones(space.n)
        vals[sorted(self.points)] = 0.0
        return Func(space, vals)

    def sorted(self):
        return sorted(self.points)


def zero_set(f):
    return ZeroSet(frozenset(np.flatnonzero(f.values == 0).tolist()), f.space.n)


def cozero_set(f):
    return frozenset(np.flatnonzero(f.values != 0).tolist())


def is_unit(f):
    return not np.any(f.values == 0)


def reciprocal(f):
    if not is_unit(f):
        raise InvalidArgument("only units have multiplicative inverses")
    return Func(f.space, 1.0 / f.values)


def _same_space(f, g):
    if f.space != g.space:
        raise InvalidArgument("functions live on different spaces")


def lattice_ops(f, g):
    """The pointwise algebra and lattice family built from f and g."""
    _same_space(f, g)
    return {
        "product": f * g,
        "sum": f + g,
        "abs_f": abs(f),
        "abs_g": abs(g),
        "meet": f & g,
        "join": f | g,
        "square": f ** 2,
        "cube": f ** 3,
        "sum_of_squares": f ** 2 + g ** 2,
        "sum_of_abs": abs(f) + abs(g),
    }


def zero_set_identities(f, g):
    """Evaluate the zero-set lattice identities for one pair.

    Returns a dict of booleans; every entry is True on a correct algebra.
    """
    _same_space(f, g)
    zf, zg = zero_set(f).points, zero_set(g).points
    nonneg = frozenset(np.flatnonzero(f.values >= 0).tolist())
    space = f.space
    return {
        "Z(f)=Z(|f|)": zero_set(abs(f)).points == zf,
        "Z(f)=Z(f^2)": zero_set(f ** 2).points == zf,
        "Z(f)=Z(f^3)": zero_set(f ** 3).points == zf,
        "Z(0)=X": zero_set(constant(space, 0.0)).points == frozenset(space.points),
        "Z(1)=empty": not zero_set(constant(space, 1.0)).points,
        "Z(fg)=Z(f)|Z(g)": zero_set(f * g).points == zf | zg,
        "Z(f^2+g^2)=Z(f)&Z(g)": zero_set(f ** 2 + g ** 2).points == zf & zg,
        "Z(|f|+|g|)=Z(f)&Z(g)": zero_set(abs(f) + abs(g)).points == zf & zg,
        "Z(f-|f|)={f>=0}": zero_set(f - abs(f)).points == nonneg,
        "Z(f&0)={f>=0}": zero_set(f & 0.0).points == nonneg,
    }


@dataclass(frozen=True)
class MaximalIdeal:
    """m_x: the functions vanishing at ``base_point``."""

    space: FiniteSpace
    base_point: int

    def __post_init__(self):
        self.space.check_point(self.base_point)

    def __contains__(self, f):
        return ideal_member(self, f)

    def separating_function(self):
        """A member of m_x that is nonzero at every other point."""
        x = self.base_point
        return Func(self.space, [self.space.n * float(self.space.distance(x, y)) for y in self.space.points])


def ideal_member(m, f):
    if f.space != m.space:
        raise InvalidArgument("function and ideal live on different spaces")
    return f.values[m.base_point] == 0


def z_filter(m, fs):
    """Zero sets of members of m_x; each contains the base point."""
    out = []
    for f in fs:
        if not ideal_member(m, f):
            raise InvalidArgument(f"{f!r} is not in m_{m.base_point}")
        out.append(zero_set(f))
    return out


def intersect_zero_sets(space, zero_sets):
    """Intersection of a family of zero sets; the empty family gives X."""
    pts = frozenset(space.points)
    for z in zero_sets:
        pts &= z.points
    return ZeroSet(pts, space.n)
