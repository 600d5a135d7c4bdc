"""Tangent measures on the line via exact homothety blow-ups.

A HybridMeasure is finitely many atoms plus a density that is a
polynomial on each of finitely many intervals. All arithmetic is done in
``Fraction`` so push-forwards and moments are exact; floats only appear
in reports.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import DegenerateCenterError, InvalidArgument
from .space import IntervalModel

TEST_DEGREES = (0, 1, 2, 3)


def _q(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, float) and not np.isfinite(v):
        raise InvalidArgument("non-finite value")
    return Fraction(v)


def _poly_eval(coeffs, y):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def _poly_nonneg(coeffs, a, b):
    if _poly_eval(coeffs, a) < 0 or _poly_eval(coeffs, b) < 0:
        return False
    if len(coeffs) <= 2:
        return True
    deriv = [float(k * c) for k, c in enumerate(coeffs)][1:]
    roots = np.roots(deriv[::-1]) if any(deriv) else []
    for z in roots:
        if abs(z.imag) < 1e-12 and float(a) < z.real < float(b):
            if _poly_eval(coeffs, Fraction(z.real)) < 0:
                return False
    return True


def _antiderivative_moment(coeffs, m, a, b):
    """Integral over [a, b] of y^m times the polynomial."""
    return sum((c * (b ** (m + j + 1) - a ** (m + j + 1)) / (m + j + 1) for j, c in enumerate(coeffs)), Fraction(0))


@dataclass(frozen=True)
class HybridMeasure:
    """Atoms ``(loc, mass)`` plus density pieces ``(a, b, coeffs)``.

    ``coeffs[j]`` multiplies ``y**j`` in absolute coordinates.
    """

    atoms: tuple = ()
    pieces: tuple = ()
    carrier: tuple = (Fraction(0), Fraction(1))

    def __post_init__(self):
        atoms = tuple((_q(a), _q(m)) for a, m in self.atoms)
        pieces = tuple((_q(a), _q(b), tuple(_q(c) for c in cs)) for a, b, cs in self.pieces)
        lo, hi = (_q(v) for v in self.carrier)
        if lo > hi:
            raise InvalidArgument("carrier interval is reversed")
        for loc, mass in atoms:
            if mass <= 0:
                raise InvalidArgument("atom masses must be positive")
            if not lo <= loc <= hi:
                raise InvalidArgument(f"atom at {loc} outside carrier [{lo}, {hi}]")
        for a, b, cs in pieces:
            if a >= b:
                raise InvalidArgument("density pieces need a < b")
            if a < lo or b > hi:
                raise InvalidArgument("density piece outside carrier")
            if not _poly_nonneg(cs, a, b):
                raise InvalidArgument("density must be nonnegative")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "carrier", (lo, hi))
        if self.total_mass() <= 0:
            raise InvalidArgument("hybrid measure must have positive mass")

    def total_mass(self):
        return self.moment(0)

    def moment(self, m):
        s = sum((mass * loc ** m for loc, mass in self.atoms), Fraction(0))
        return s + sum((_antiderivative_moment(cs, m, a, b) for a, b, cs in self.pieces), Fraction(0))

    def test_integrals(self):
        return tuple(self.moment(m) for m in TEST_DEGREES)

    def mass_in(self, lo, hi):
        """Mass of the closed interval [lo, hi]."""
        lo, hi = _q(lo), _q(hi)
        s = sum((mass for loc, mass in self.atoms if lo <= loc <= hi), Fraction(0))
        for a, b, cs in self.pieces:
            p, q = max(a, lo), min(b, hi)
            if p < q:
                s += _antiderivative_moment(cs, 0, p, q)
        return s

    def to_config(self):
        return {
            "atoms": [[float(a), float(m)] for a, m in self.atoms],
            "density": {
                "pieces": [[float(a), float(b), [float(c) for c in cs]] for a, b, cs in self.pieces],
            },
            "carrier": [float(self.carrier[0]), float(self.carrier[1])],
        }


def lebesgue(lo=0, hi=1):
    return HybridMeasure(pieces=((lo, hi, (1,)),), carrier=(lo, hi))


def point_mass(loc, mass=1, carrier=(0, 1)):
    return HybridMeasure(atoms=((loc, mass),), carrier=carrier)


def hybrid_from_config(cfg):
    """Build from ``{"atoms": [[loc, mass]...], "density": {...}}``.

    The density is either ``{"breakpoints": [...], "values": [...]}``
    (piecewise constant, breakpoints spanning [0, 1]) or
    ``{"breakpoints": [...], "coeffs": [[c0, c1, ...], ...]}``.
    """
    if not isinstance(cfg, dict):
        raise InvalidArgument("hybrid measure config must be an object")
    atoms = [tuple(a) for a in cfg.get("atoms", [])]
    for a in atoms:
        if len(a) != 2:
            raise InvalidArgument("atoms are [location, mass] pairs")
    pieces = []
    dens = cfg.get("density")
    if dens:
        model = IntervalModel(tuple(_q(b) for b in dens["breakpoints"]))
        spans = model.pieces()
        if "values" in dens:
            polys = [[v] for v in dens["values"]]
        elif "coeffs" in dens:
            polys = dens["coeffs"]
        else:
            raise InvalidArgument("density needs 'values' or 'coeffs'")
        if len(polys) != len(spans):
            raise InvalidArgument(f"{len(spans)} density pieces but {len(polys)} value entries")
        for (a, b), cs in zip(spans, polys):
            cs = tuple(_q(c) for c in cs)
            if any(cs):
                pieces.append((a, b, cs))
    return HybridMeasure(tuple(atoms), tuple(pieces), (Fraction(0), Fraction(1)))


def scale_measure(mu, c):
    c = _q(c)
    if c <= 0:
        raise InvalidArgument("scale factor must be positive")
    return HybridMeasure(
        tuple((a, m * c) for a, m in mu.atoms),
        tuple((a, b, tuple(k * c for k in cs)) for a, b, cs in mu.pieces),
        mu.carrier,
    )


def _compose_affine(coeffs, x, r):
    """Coefficients in z of P(x + r z)."""
    out = [Fraction(0)] * len(coeffs)
    for m, c in enumerate(coeffs):
        if c == 0:
            continue
        for j in range(m + 1):
            out[j] += c * comb(m, j) * x ** (m - j) * r ** j
    return tuple(out)


def homothety_push(mu, x, r):
    """Image of mu under y -> (y - x) / r, so the result at A is mu(x + rA)."""
    x, r = _q(x), _q(r)
    if r <= 0:
        raise InvalidArgument("radius must be positive")
    atoms = tuple(((a - x) / r, m) for a, m in mu.atoms)
    pieces = tuple(((a - x) / r, (b - x) / r, tuple(r * c for c in _compose_affine(cs, x, r))) for a, b, cs in mu.pieces)
    lo, hi = mu.carrier
    return HybridMeasure(atoms, pieces, ((lo - x) / r, (hi - x) / r))


def restrict(mu, lo=-1, hi=1):
    """Restriction to the closed interval [lo, hi]."""
    lo, hi = _q(lo), _q(hi)
    atoms = tuple((a, m) for a, m in mu.atoms if lo <= a <= hi)
    pieces = []
    for a, b, cs in mu.pieces:
        p, q = max(a, lo), min(b, hi)
        if p < q:
            pieces.append((p, q, cs))
    if not atoms and not any(_antiderivative_moment(cs, 0, p, q) > 0 for p, q, cs in pieces):
        raise DegenerateCenterError(f"no mass in [{lo}, {hi}]")
    clo, chi = max(mu.carrier[0], lo), min(mu.carrier[1], hi)
    return HybridMeasure(atoms, tuple(pieces), (clo, chi))


@dataclass(frozen=True)
class BlowupNet:
    center: Fraction
    radii: tuple
    normalizers: tuple

    def __post_init__(self):
        if any(r <= 0 for r in self.radii):
            raise InvalidArgument("radii must be positive")
        if any(a <= b for a, b in zip(self.radii, self.radii[1:])):
            raise InvalidArgument("radii must be strictly decreasing")
        if any(c <= 0 for c in self.normalizers):
            raise InvalidArgument("normalizers must be positive")


def dyadic_radii(depth):
    return tuple(Fraction(1, 2 ** k) for k in range(1, depth + 1))


def blowup(mu, x, r, c):
    """c * (mu blown up at x by r), restricted to [-1, 1]."""
    return scale_measure(restrict(homothety_push(mu, x, r)), c)


@dataclass(frozen=True)
class NetStage:
    k: int
    radius: Fraction
    normalizer: Fraction
    measure: HybridMeasure
    integrals: tuple
    increment: object  # Fraction, or None at the first stage


@dataclass(frozen=True)
class TangentNet:
    net: BlowupNet
    stages: tuple

    def rows(self):
        """Plot rows: k, I0..I3, increment."""
        return [
            [s.k] + [float(v) for v in s.integrals] + [None if s.increment is None else float(s.increment)]
            for s in self.stages
        ]

    def to_report(self):
        return {
            "center": float(self.net.center),
            "radii": [float(r) for r in self.net.radii],
            "normalizers": [float(c) for c in self.net.normalizers],
            "stages": [
                {
                    "k": s.k,
                    "integrals": [float(v) for v in s.integrals],
                    "increment": None if s.increment is None else float(s.increment),
                }
                for s in self.stages
            ],
        }


def tangent_net(mu, x, depth, radii=None):
    """Normalized blow-ups nu_k = c_k T_{x, r_k *} mu on [-1, 1].

    c_k = 1 / mu(B(x, r_k)); r_k = 2**-k unless ``radii`` is given.
    Each stage carries the integrals of 1, y, y^2, y^3 and the largest
    change in those integrals from the previous stage.
    """
    x = _q(x)
    radii = dyadic_radii(depth) if radii is None else tuple(_q(r) for r in radii)
    if len(radii) != depth:
        raise InvalidArgument("need one radius per stage")
    normalizers = []
    for r in radii:
        bm = mu.mass_in(x - r, x + r)
        if bm <= 0:
            raise DegenerateCenterError(f"mu(B({x}, {r})) = 0")
        normalizers.append(1 / bm)
    net = BlowupNet(x, radii, tuple(normalizers))
    stages, prev = [], None
    for k, (r, c) in enumerate(zip(radii, normalizers), start=1):
        nu = blowup(mu, x, r, c)
        ints = nu.test_integrals()
        inc = None if prev is None else max(abs(a - b) for a, b in zip(ints, prev))
        stages.append(NetStage(k, r, c, nu, ints, inc))
        prev = ints
    return TangentNet(net, tuple(stages))


def tan_closure_check(nu, c, r, source=None, depth=None):
    """Closure of Tan(mu, x) under c * nu and under the rescaling nu_{0, r}.

    Emits the adjusted net parameters (normalizers times c for the first,
    radii times r for the second). With ``source=(mu, x)`` and ``depth``,
    the adjusted nets are run and compared stage by stage against the
    transformed original stages.
    """
    c, r = _q(c), _q(r)
    if c <= 0 or r <= 0:
        raise InvalidArgument("c and r must be positive")
    scaled = scale_measure(nu, c)
    rescaled = homothety_push(nu, 0, r)
    report = {
        "c": float(c),
        "r": float(r),
        "scaled_mass": float(scaled.total_mass()),
        "rescaled_mass": float(rescaled.total_mass()),
        "scaled_valid": scaled.total_mass() > 0,
        "rescaled_valid": rescaled.total_mass() > 0,
        "identity": c == 1 and r == 1,
        "adjustment": {"normalizer_factor": float(c), "radius_factor": float(r)},
    }
    if source is not None:
        mu, x = source
        base = tangent_net(mu, x, depth)
        radii = base.net.radii
        report["scaled_net"] = {
            "radii": [float(v) for v in radii],
            "normalizers": [float(v * c) for v in base.net.normalizers],
        }
        report["rescaled_net"] = {
            "radii": [float(v * r) for v in radii],
            "normalizers": [float(v) for v in base.net.normalizers],
        }
        ok_scaled, ok_rescaled = True, True
        for s in base.stages:
            direct = blowup(mu, x, s.radius, s.normalizer * c)
            ok_scaled &= direct.test_integrals() == scale_measure(s.measure, c).test_integrals()
            if r <= 1:
                # nu_k already covers [-r, r], so rescaling commutes with the cut
                direct = blowup(mu, x, s.radius * r, s.normalizer)
                via = restrict(homothety_push(s.measure, 0, r))
                ok_rescaled &= direct.test_integrals() == via.test_integrals()
        report["scaled_verified"] = ok_scaled
        report["rescaled_verified"] = ok_rescaled if r <= 1 else None
    report["passed"] = bool(report["scaled_valid"] and report["rescaled_valid"]
                            and report.get("scaled_verified", True)
                            and report.get("rescaled_verified") in (True, None))
    return report
