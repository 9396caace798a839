"""Univariate polynomials over the Gaussian rationals.

Polynomials are immutable coefficient tuples in ascending powers with
trailing zeros trimmed.  The zero polynomial is the empty tuple; its degree
is the sentinel ``None`` rather than an ordinary integer, so that any
arithmetic accidentally performed on it raises immediately.

All GCD and Bezout computations run in exact arithmetic with per-step monic
normalization of remainders to bound coefficient growth.  Floating point is
confined to the ``evaluate`` path with complex arguments.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateDivisor, DegreeOverflow, ParseError
from .rational import GaussianRational, ONE, ZERO


class ExactPoly:
    """Immutable univariate polynomial with GaussianRational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    # -- basic structure --------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or None (sentinel for -infinity) if zero."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> GaussianRational:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def leading(self) -> GaussianRational:
        if self.is_zero():
            raise DegenerateDivisor("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: ExactPoly) -> ExactPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: ExactPoly) -> ExactPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> ExactPoly:
        return ExactPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> ExactPoly:
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return ZERO_POLY
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> ExactPoly:
        c = c if isinstance(c, GaussianRational) else GaussianRational(c)
        return ExactPoly([a * c for a in self.coeffs])

    def derivative(self) -> ExactPoly:
        return ExactPoly([GaussianRational(i) * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, n: int) -> ExactPoly:
        """Multiply by z^n."""
        if self.is_zero():
            return self
        return ExactPoly((ZERO,) * n + self.coeffs)

    def conj(self) -> ExactPoly:
        """Polynomial with conjugated coefficients (so conj(p)(w) = conj(p(conj w)))."""
        return ExactPoly([c.conjugate() for c in self.coeffs])

    def monic(self) -> ExactPoly:
        if self.is_zero():
            raise DegenerateDivisor("cannot normalize the zero polynomial")
        return self.scale(self.leading().inverse())

    # -- evaluation -------------------------------------------------------

    def evaluate(self, z):
        """Horner evaluation; exact for GaussianRational z, float for complex z."""
        if isinstance(z, GaussianRational):
            acc = ZERO
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return acc
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __call__(self, z):
        return self.evaluate(z)

    def compose_scaled(self, c) -> ExactPoly:
        """p(c*z) for an exact scalar c."""
        c = c if isinstance(c, GaussianRational) else GaussianRational(c)
        out, power = [], ONE
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return ExactPoly(out)

    def complex_coeffs(self):
        return [complex(c) for c in self.coeffs]

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> ExactPoly:
        if not isinstance(obj, list):
            raise ParseError(f"expected coefficient list, got {obj!r}")
        return cls([GaussianRational.from_json(c) for c in obj])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms)

    __repr__ = __str__


ZERO_POLY = ExactPoly()
ONE_POLY = ExactPoly([1])


def from_ints(*coeffs) -> ExactPoly:
    """Convenience constructor from ascending integer (or rational) coefficients."""
    return ExactPoly(coeffs)


def poly_divmod(p: ExactPoly, d: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    """Exact division with remainder: p = q*d + r, deg r < deg d."""
    if d.is_zero():
        raise DegenerateDivisor("division by the zero polynomial")
    if p.is_zero() or (p.degree < d.degree):
        return ZERO_POLY, p
    lead_inv = d.leading().inverse()
    rem = list(p.coeffs)
    dq = d.degree
    quot = [ZERO] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i] * lead_inv
        if not c.is_zero():
            quot[i - dq] = c
            for j, b in enumerate(d.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - c * b
        rem[i] = ZERO
    return ExactPoly(quot), ExactPoly(rem)


def poly_mod(p: ExactPoly, d: ExactPoly) -> ExactPoly:
    return poly_divmod(p, d)[1]


def divides(d: ExactPoly, p: ExactPoly) -> bool:
    """Whether d divides p exactly (the zero polynomial is divisible by anything)."""
    if p.is_zero():
        return True
    return poly_mod(p, d).is_zero()


def exact_div(p: ExactPoly, d: ExactPoly) -> ExactPoly:
    """p / d when the division is known exact; raises if a remainder appears."""
    q, r = poly_divmod(p, d)
    if not r.is_zero():
        raise DegenerateDivisor(f"{d} does not divide {p}")
    return q


def gcd_pair(g: ExactPoly, h: ExactPoly) -> ExactPoly:
    """Monic GCD by the Euclidean algorithm with monic-normalized remainders."""
    if g.is_zero() and h.is_zero():
        raise DegenerateDivisor("gcd of two zero polynomials")
    a, b = g, h
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
        if not b.is_zero():
            b = b.monic()  # keeps coefficient growth in check
    return a.monic()


def gcd_family(polys) -> ExactPoly:
    """Monic GCD of a sequence of polynomials (at least one nonzero)."""
    acc = ZERO_POLY
    for p in polys:
        if p.is_zero():
            continue
        acc = p.monic() if acc.is_zero() else gcd_pair(acc, p)
        if acc.degree == 0:
            return ONE_POLY
    if acc.is_zero():
        raise DegenerateDivisor("gcd of an all-zero family")
    return acc


# Deterministic perturbation patterns for the triple-GCD recombination route:
# identity plus small rational entries, retried in a fixed order.
_RECOMBINATION_PATTERNS = [
    ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
    ((0, 1, 2), (3, 0, 4), (5, 6, 0)),
    ((0, 7, 1), (2, 0, 9), (4, 3, 0)),
    ((0, 11, 5), (13, 0, 7), (17, 19, 0)),
    ((0, 23, 29), (31, 0, 37), (41, 43, 0)),
]


def gcd_triple_recombined(g: ExactPoly, h: ExactPoly, k: ExactPoly) -> ExactPoly:
    """Triple GCD via recombination: mix (g,h,k) by a near-identity matrix so
    that all pairwise common roots become common to all three, then take one
    pairwise GCD.

    The candidate gcd_pair(g~, h~) is accepted iff it divides k~; that holds
    exactly when it equals the triple GCD, so the check certifies the result
    without any root isolation.
    """
    if g.is_zero() and h.is_zero() and k.is_zero():
        raise DegenerateDivisor("gcd of an all-zero family")
    for pattern in _RECOMBINATION_PATTERNS:
        mix = [
            [GaussianRational(1 if i == j else 0) + GaussianRational(Fraction(pattern[i][j], 1000))
             for j in range(3)]
            for i in range(3)
        ]
        gt = g.scale(mix[0][0]) + h.scale(mix[0][1]) + k.scale(mix[0][2])
        ht = g.scale(mix[1][0]) + h.scale(mix[1][1]) + k.scale(mix[1][2])
        kt = g.scale(mix[2][0]) + h.scale(mix[2][1]) + k.scale(mix[2][2])
        if gt.is_zero() and ht.is_zero():
            continue
        cand = gcd_pair(gt, ht) if not (gt.is_zero() or ht.is_zero()) else (gt + ht).monic()
        if divides(cand, kt):
            return cand
    raise DegenerateDivisor("recombination patterns exhausted without a certified gcd")


class BezoutPair:
    """Witness (lambda, mu, hcf) with lambda*g + mu*h = hcf (monic)."""

    __slots__ = ("lam", "mu", "hcf")

    def __init__(self, lam: ExactPoly, mu: ExactPoly, hcf: ExactPoly):
        self.lam = lam
        self.mu = mu
        self.hcf = hcf

    def __repr__(self):
        return f"BezoutPair(lam={self.lam}, mu={self.mu}, hcf={self.hcf})"


def bezout_bounded(g: ExactPoly, h: ExactPoly) -> BezoutPair:
    """Extended Euclid with degree bounds.

    When neither input divides the other, the returned pair satisfies
    deg(lam) < deg(h/l) and deg(mu) < deg(g/l) and is unique up to the monic
    normalization of l.  When one divides the other, the divisibility branch
    returns l = monic(smaller input) with the matching trivial pair.
    """
    if g.is_zero() or h.is_zero():
        raise DegenerateDivisor("bezout_bounded requires nonzero inputs")
    if divides(g, h):
        return BezoutPair(ExactPoly([g.leading().inverse()]), ZERO_POLY, g.monic())
    if divides(h, g):
        return BezoutPair(ZERO_POLY, ExactPoly([h.leading().inverse()]), h.monic())

    # Standard extended Euclid: r = s*g + t*h at every step.
    r0, r1 = g, h
    s0, s1 = ONE_POLY, ZERO_POLY
    t0, t1 = ZERO_POLY, ONE_POLY
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading().inverse()
    lam, mu, l = s0.scale(lc), t0.scale(lc), r0.monic()
    # Reduce lam mod h/l to enforce the degree bound (mu then follows).
    h_over_l = exact_div(h, l)
    q, lam = poly_divmod(lam, h_over_l)
    mu = mu + q * exact_div(g, l)
    return BezoutPair(lam, mu, l)


def reverse(p: ExactPoly, n: int) -> ExactPoly:
    """w^n * p(1/w): reversed coefficients padded to length n+1."""
    if p.is_zero():
        return p
    if n < p.degree:
        raise DegreeOverflow(f"reverse({p}, {n}): n < deg p = {p.degree}")
    padded = list(p.coeffs) + [ZERO] * (n - p.degree)
    return ExactPoly(list(reversed(padded)))
