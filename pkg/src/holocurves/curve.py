"""Holomorphic curves S^2 -> CP^2 as coprime polynomial triples.

A curve is a validated triple (p0, p1, p2) of coprime ExactPolys whose
3x3 Wronskian (rows p, p', p'') is not identically zero, with degree
k = max deg p_i >= 2.  The module computes the wedge triple, the
ramification divisor and indices (finite, at infinity, total), the
conjugate polar, the integer invariant sheet, the w = 1/z chart flip,
and the Moebius x projective group action, plus a deterministic search
for generic position (p0 monic squarefree of full degree, curve
unramified at infinity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DegreeTooSmall,
    GenericPositionNotFound,
    NotCoprime,
    NotFull,
    ParseError,
    PolarDegenerate,
    SingularTransform,
)
from .poly import ExactPoly, ONE_POLY, exact_div, gcd_family, gcd_pair, reverse
from .rational import GaussianRational, ONE, ZERO

FS_TOLERANCE = 1e-9


def cross(u, v):
    """Complex cross product of 3-vectors (componentwise, any ring)."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


class ProjPoint:
    """A point of CP^2: a nonzero 3-vector up to complex scale.

    Exact points hold GaussianRational components and compare by vanishing
    cross product; approximate points hold complex components and compare by
    Fubini-Study distance below FS_TOLERANCE.
    """

    __slots__ = ("v", "exact")

    def __init__(self, v):
        v = tuple(v)
        self.exact = all(isinstance(c, GaussianRational) for c in v)
        if self.exact:
            if all(c.is_zero() for c in v):
                raise ValueError("ProjPoint needs a nonzero vector")
        else:
            v = tuple(complex(c) for c in v)
            if not any(v):
                raise ValueError("ProjPoint needs a nonzero vector")
            if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in v):
                raise ValueError("ProjPoint components must be finite")
        self.v = v

    def to_complex(self):
        return tuple(complex(c) for c in self.v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if self.exact and other.exact:
            return all(c.is_zero() for c in cross(self.v, other.v))
        return fs_distance(self.to_complex(), other.to_complex()) < FS_TOLERANCE

    def __repr__(self):
        return f"[{', '.join(str(c) for c in self.v)}]"


def fs_distance(u, v) -> float:
    """Fubini-Study distance arccos(|<u,v>| / (|u||v|)) between complex lines."""
    u = tuple(complex(c) for c in u)
    v = tuple(complex(c) for c in v)
    inner = abs(sum(a * b.conjugate() for a, b in zip(u, v)))
    nu = math.sqrt(sum(abs(a) ** 2 for a in u))
    nv = math.sqrt(sum(abs(b) ** 2 for b in v))
    c = inner / (nu * nv)
    return math.acos(min(1.0, max(0.0, c)))


@dataclass(frozen=True)
class InvariantSheet:
    """Integer invariants of a curve and its Gauss transform / polar."""

    k: int
    r: int
    d: int
    E: int
    k_polar: int
    r_polar: int


def invariant_sheet(k: int, r: int) -> InvariantSheet:
    return InvariantSheet(
        k=k, r=r, d=k - r - 2, E=3 * k - r - 2, k_polar=2 * k - r - 2, r_polar=3 * k - 2 * r - 6
    )


@dataclass(frozen=True)
class RamificationData:
    divisor: ExactPoly  # monic GCD of the wedge triple
    r_finite: int
    r_infinity: int
    r_total: int


class HoloCurve:
    """Validated full holomorphic curve of degree k >= 2."""

    __slots__ = ("p0", "p1", "p2", "k")

    def __init__(self, p0: ExactPoly, p1: ExactPoly, p2: ExactPoly, k: int):
        # Use validate() to construct from unchecked polynomials.
        self.p0, self.p1, self.p2, self.k = p0, p1, p2, k

    @property
    def triple(self):
        return (self.p0, self.p1, self.p2)

    def evaluate(self, z):
        return tuple(p.evaluate(z) for p in self.triple)

    def point(self, z) -> ProjPoint:
        return ProjPoint(self.evaluate(z))

    def __repr__(self):
        return f"HoloCurve(k={self.k}, [{self.p0}, {self.p1}, {self.p2}])"

    def to_json(self) -> dict:
        return {"schema": 1, "p0": self.p0.to_json(), "p1": self.p1.to_json(), "p2": self.p2.to_json()}

    @classmethod
    def from_json(cls, obj) -> HoloCurve:
        if not isinstance(obj, dict):
            raise ParseError("curve file must be a JSON object")
        try:
            polys = [ExactPoly.from_json(obj[key]) for key in ("p0", "p1", "p2")]
        except KeyError as e:
            raise ParseError(f"curve file missing key {e}") from e
        return validate(*polys)


def wronskian(p0: ExactPoly, p1: ExactPoly, p2: ExactPoly) -> ExactPoly:
    """Determinant of the 3x3 matrix with rows p, p', p''."""
    rows = [
        (p0, p1, p2),
        (p0.derivative(), p1.derivative(), p2.derivative()),
        (p0.derivative().derivative(), p1.derivative().derivative(), p2.derivative().derivative()),
    ]
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def validate(p0: ExactPoly, p1: ExactPoly, p2: ExactPoly) -> HoloCurve:
    """Check coprimality, fullness and degree; return the validated curve."""
    degs = [p.degree for p in (p0, p1, p2) if not p.is_zero()]
    if not degs:
        raise DegreeTooSmall("all components are zero")
    common = gcd_family([p0, p1, p2])
    if common.degree > 0:
        raise NotCoprime(common)
    if wronskian(p0, p1, p2).is_zero():
        raise NotFull("components are linearly dependent (Wronskian vanishes)")
    k = max(degs)
    if k < 2:
        raise DegreeTooSmall(f"max degree {k} < 2")
    return HoloCurve(p0, p1, p2, k)


def wedge(f: HoloCurve):
    """The triple (p1 p2' - p1' p2, p2 p0' - p2' p0, p0 p1' - p0' p1).

    Max degree <= 2k - 2: the degree 2k-1 terms cancel.
    """
    return cross(f.triple, tuple(p.derivative() for p in f.triple))


def ramification(f: HoloCurve) -> RamificationData:
    w = wedge(f)
    divisor = gcd_family(list(w))
    r_finite = divisor.degree
    max_deg = max(p.degree for p in w if not p.is_zero())
    r_infinity = (2 * f.k - 2) - max_deg
    return RamificationData(divisor, r_finite, r_infinity, r_finite + r_infinity)


def conjugate_polar(f: HoloCurve) -> HoloCurve:
    """The wedge triple divided by the ramification divisor, as a curve.

    The result has degree 2k - 2 - r_total.
    """
    rd = ramification(f)
    h = tuple(exact_div(p, rd.divisor) for p in wedge(f))
    try:
        return validate(*h)
    except (NotCoprime, NotFull, DegreeTooSmall) as e:
        raise PolarDegenerate(f"conjugate polar failed validation: {e}") from e


def invariants(f: HoloCurve) -> InvariantSheet:
    return invariant_sheet(f.k, ramification(f).r_total)


def chart_flip(f: HoloCurve) -> HoloCurve:
    """The curve in the w = 1/z chart: reverse each component at n = k and
    strip any common factor (a power of w)."""
    flipped = [reverse(p, f.k) for p in f.triple]
    common = gcd_family(flipped)
    if common.degree > 0:
        flipped = [exact_div(p, common) for p in flipped]
    return validate(*flipped)


def _as_exact_matrix(m):
    return [[e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row] for row in m]


def act(f: HoloCurve, mobius, proj) -> HoloCurve:
    """Apply a projective transform to the components and precompose with the
    Moebius map z -> (az+b)/(cz+d), homogenized to degree k."""
    mob = _as_exact_matrix(mobius)
    prj = _as_exact_matrix(proj)
    if linalg.det(mob).is_zero() or linalg.det(prj).is_zero():
        raise SingularTransform("transform matrices must be invertible")
    (a, b), (c, d) = mob
    k = f.k
    num = ExactPoly([b, a])  # a z + b
    den = ExactPoly([d, c])  # c z + d
    num_pow = [ONE_POLY]
    den_pow = [ONE_POLY]
    for _ in range(k):
        num_pow.append(num_pow[-1] * num)
        den_pow.append(den_pow[-1] * den)
    composed = []
    for p in f.triple:
        acc = ExactPoly()
        for i, coeff in enumerate(p.coeffs):
            acc = acc + (num_pow[i] * den_pow[k - i]).scale(coeff)
        composed.append(acc)
    mixed = [
        composed[0].scale(prj[i][0]) + composed[1].scale(prj[i][1]) + composed[2].scale(prj[i][2])
        for i in range(3)
    ]
    return validate(*mixed)


def is_squarefree(p: ExactPoly) -> bool:
    return p.degree == 0 or gcd_pair(p, p.derivative()).degree == 0


_IDENTITY2 = ((1, 0), (0, 1))
_IDENTITY3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

# Moebius schedule: identity, then maps z -> s + 1/z which move the point at
# infinity to s (needed when the input is ramified at infinity).
_MOBIUS_SCHEDULE = [((1, 0), (0, 1))] + [
    ((s, 1), (1, 0)) for s in (0, 1, -1, 2, -2, 3, -3, 5, -5, 7, -7)
]

# Component-mixing schedule for forcing deg p0 = k squarefree.
_MIX_SCHEDULE = [
    (0, 0), (1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (1, -1), (-1, 1),
    (2, 0), (0, 2), (2, 1), (1, 2), (3, 0), (0, 3), (3, 1), (1, 3),
    (2, 3), (3, 2), (5, 0), (0, 5), (5, 2), (2, 5), (7, 3), (3, 7),
]


def generic_position(f: HoloCurve):
    """Move f into the open chart where p0 is monic of degree k with distinct
    roots and the curve is unramified at infinity.

    Searches a fixed deterministic schedule of Moebius maps and component
    mixes; returns ((mobius, proj), transformed_curve).
    """
    budget = 0
    for mob in _MOBIUS_SCHEDULE:
        try:
            g = act(f, mob, _IDENTITY3)
        except SingularTransform:
            continue
        if ramification(g).r_infinity != 0:
            budget += 1
            continue
        for c1, c2 in _MIX_SCHEDULE:
            budget += 1
            q0 = g.p0 + g.p1.scale(c1) + g.p2.scale(c2)
            if q0.is_zero() or q0.degree != g.k or not is_squarefree(q0):
                continue
            lead_inv = q0.leading().inverse()
            prj = (
                (lead_inv, GaussianRational(c1) * lead_inv, GaussianRational(c2) * lead_inv),
                (ZERO, ONE, ZERO),
                (ZERO, ZERO, ONE),
            )
            out = act(f, mob, prj)
            return (mob, prj), out
    raise GenericPositionNotFound(budget)
