"""Pointwise and grid evaluation of the harmonic Gauss transform.

The transform of a curve f with conjugate polar h is lifted as
Phi(z) = conj(p(z)) x h(z) (complex cross product), which is polynomial in
z and conj(z) and never vanishes.  Near infinity the same formula is used
on the chart-flipped pair at w = 1/z.

Numerical geometry is carried by the rank-1 Hermitian projector field
P = Phi Phi* / |Phi|^2.  Degree and energy are integrals of the projector
degree form Im tr(P P_x P_y) and energy density tr(P_x^2 + P_y^2) over two
polar Gauss-Legendre charts; both densities are conformally invariant
2-forms so no chart area factor appears.  The overall normalization is
calibrated once per quadrature by requiring the degree-2 rational normal
curve, integrated directly as a holomorphic map, to report d = E = 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .curve import HoloCurve, ProjPoint, chart_flip, conjugate_polar, cross
from .errors import IdentityFailed, QuadratureDiverged
from .poly import ExactPoly
from .rational import GaussianRational

INFINITY = object()  # marker for the point at infinity in gauss_eval


class GaussEvaluator:
    """Precomputed data for evaluating the Gauss transform of a curve.

    Holds the curve, its conjugate polar, and the chart-flipped pair for
    evaluation near infinity.  Construction verifies the exact polynomial
    identity p(z) . h(z) = 0 (the curve is orthogonal to its polar).
    """

    __slots__ = ("f", "h", "f_flip", "h_flip")

    def __init__(self, f: HoloCurve):
        self.f = f
        self.h = conjugate_polar(f)
        self.f_flip = chart_flip(f)
        self.h_flip = conjugate_polar(self.f_flip)
        dot = ExactPoly()
        for p, q in zip(f.triple, self.h.triple):
            dot = dot + p * q
        if not dot.is_zero():
            raise IdentityFailed("p . h is not the zero polynomial")


def gauss_eval(ev: GaussEvaluator, z) -> ProjPoint:
    """Phi(z) = conj(p(z)) x h(z); exact for exact z, flipped chart at infinity."""
    if z is INFINITY:
        w = GaussianRational(0)
        pv = tuple(p.evaluate(w).conjugate() for p in ev.f_flip.triple)
        hv = ev.h_flip.evaluate(w)
    elif isinstance(z, GaussianRational):
        pv = tuple(p.evaluate(z).conjugate() for p in ev.f.triple)
        hv = ev.h.evaluate(z)
    else:
        z = complex(z)
        pv = tuple(p.evaluate(z).conjugate() for p in ev.f.triple)
        hv = ev.h.evaluate(z)
    return ProjPoint(cross(pv, hv))


# -- exact Hermitian orthogonality ---------------------------------------


@dataclass(frozen=True)
class OrthogonalityCertificate:
    """Reduced bivariate identities <Phi,F> and <Phi,conj H>; both empty."""

    against_curve: dict
    against_polar: dict


def _bivar_add(acc: dict, wpoly: ExactPoly, zpoly: ExactPoly, sign: int):
    for i, a in enumerate(wpoly.coeffs):
        for j, b in enumerate(zpoly.coeffs):
            key = (i, j)
            val = acc.get(key, GaussianRational(0)) + (a * b if sign > 0 else -(a * b))
            if val.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = val


def orthogonality_check(ev: GaussEvaluator) -> OrthogonalityCertificate:
    """Verify <Phi, F> = 0 and <Phi, conj H> = 0 as exact identities in
    (z, conj z), with conj z treated as an independent variable w."""
    pbar = [p.conj() for p in ev.f.triple]  # polynomials in w
    h = list(ev.h.triple)  # polynomials in z
    # Phi_i as [(wpoly, zpoly, sign), ...] from the cross product.
    phi = [
        [(pbar[1], h[2], +1), (pbar[2], h[1], -1)],
        [(pbar[2], h[0], +1), (pbar[0], h[2], -1)],
        [(pbar[0], h[1], +1), (pbar[1], h[0], -1)],
    ]
    against_curve: dict = {}
    against_polar: dict = {}
    for i in range(3):
        for wp, zp, sign in phi[i]:
            # <Phi, F> picks up conj(F_i), a polynomial in w.
            _bivar_add(against_curve, wp * pbar[i], zp, sign)
            # <Phi, conj H> picks up H_i, a polynomial in z.
            _bivar_add(against_polar, wp, zp * h[i], sign)
    if against_curve or against_polar:
        raise IdentityFailed("Hermitian orthogonality identities did not reduce to zero")
    return OrthogonalityCertificate(against_curve, against_polar)


# -- projector fields ----------------------------------------------------


def projector_from_vector(v) -> np.ndarray:
    v = np.asarray([complex(c) for c in v], dtype=complex)
    return np.outer(v, v.conj()) / float(np.vdot(v, v).real)


def projector(ev: GaussEvaluator, z) -> np.ndarray:
    """P(z) = Phi Phi* / |Phi|^2, a rank-1 Hermitian idempotent."""
    return projector_from_vector(gauss_eval(ev, z).to_complex())


def _poly_arrays(curve: HoloCurve):
    ps = [np.asarray(p.complex_coeffs() or [0j]) for p in curve.triple]
    dps = [np.asarray(p.derivative().complex_coeffs() or [0j]) for p in curve.triple]
    return ps, dps


def _polyval(coeffs, Z):
    return np.polynomial.polynomial.polyval(Z, coeffs)


def _cross_arrays(u, v):
    return np.stack([
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ])


class _GaussLift:
    """Vectorized lift Phi = conj(p) x h in one chart, with dbar/d splits."""

    def __init__(self, curve: HoloCurve, polar: HoloCurve):
        self.p, self.dp = _poly_arrays(curve)
        self.h, self.dh = _poly_arrays(polar)

    def __call__(self, Z):
        Z = np.asarray(Z, dtype=complex)
        pv = np.stack([_polyval(c, Z) for c in self.p]).conj()
        dpv = np.stack([_polyval(c, Z) for c in self.dp]).conj()
        hv = np.stack([_polyval(c, Z) for c in self.h])
        dhv = np.stack([_polyval(c, Z) for c in self.dh])
        phi = _cross_arrays(pv, hv)
        phi_z = _cross_arrays(pv, dhv)
        phi_zb = _cross_arrays(dpv, hv)
        return phi, phi_z, phi_zb


class _HoloLift:
    """Vectorized lift of a holomorphic curve used directly as a map."""

    def __init__(self, curve: HoloCurve):
        self.p, self.dp = _poly_arrays(curve)

    def __call__(self, Z):
        Z = np.asarray(Z, dtype=complex)
        phi = np.stack([_polyval(c, Z) for c in self.p])
        phi_z = np.stack([_polyval(c, Z) for c in self.dp])
        return phi, phi_z, np.zeros_like(phi)


def _projector_batch(lift, Z):
    phi, phi_z, phi_zb = lift(Z)
    phix = phi_z + phi_zb
    phiy = 1j * (phi_z - phi_zb)
    n = np.einsum("iN,iN->N", phi, phi.conj()).real
    P = np.einsum("iN,jN->Nij", phi, phi.conj()) / n[:, None, None]

    def dP(phid):
        nd = 2.0 * np.einsum("iN,iN->N", phid, phi.conj()).real
        raw = np.einsum("iN,jN->Nij", phid, phi.conj()) + np.einsum("iN,jN->Nij", phi, phid.conj())
        return raw / n[:, None, None] - P * (nd / n)[:, None, None]

    return P, dP(phix), dP(phiy)


class ProjectorField:
    """Map to CP^2 as a projector-valued field with analytic derivatives.

    Wraps either a Gauss transform (two-chart), a holomorphic curve used
    directly as a map, or an arbitrary vector closure (finite differences
    only, used for control maps).
    """

    def __init__(self, lift=None, vector_fn=None, flip_lift=None, split_radius=1.0):
        self._lift = lift
        self._vector_fn = vector_fn
        self._flip_lift = flip_lift
        self.split_radius = split_radius

    @classmethod
    def from_gauss(cls, ev: GaussEvaluator, split_radius: float = 1.0) -> ProjectorField:
        return cls(
            lift=_GaussLift(ev.f, ev.h),
            flip_lift=_GaussLift(ev.f_flip, ev.h_flip),
            split_radius=split_radius,
        )

    @classmethod
    def from_curve_as_map(cls, f: HoloCurve, split_radius: float = 1.0) -> ProjectorField:
        return cls(
            lift=_HoloLift(f),
            flip_lift=_HoloLift(chart_flip(f)),
            split_radius=split_radius,
        )

    @classmethod
    def from_vector_closure(cls, fn) -> ProjectorField:
        return cls(vector_fn=fn)

    def projectors(self, Z) -> np.ndarray:
        """P(z) for an array of points (z chart; no chart switching)."""
        if self._vector_fn is not None:
            Z = np.asarray(Z, dtype=complex).ravel()
            return np.stack([projector_from_vector(self._vector_fn(z)) for z in Z])
        P, _, _ = _projector_batch(self._lift, np.asarray(Z, dtype=complex).ravel())
        return P

    def __call__(self, z) -> np.ndarray:
        return self.projectors([complex(z)])[0]

    def batch_with_derivatives(self, Z, chart="z"):
        lift = self._lift if chart == "z" else self._flip_lift
        return _projector_batch(lift, np.asarray(Z, dtype=complex).ravel())


# -- quadrature and the degree/energy report -----------------------------


@dataclass(frozen=True)
class QuadratureSpec:
    split_radius: float = 1.0
    order: int = 64
    scheme: str = "legendre-polar"

    def __post_init__(self):
        if self.order < 8:
            raise ValueError("quadrature order must be >= 8")
        if self.split_radius <= 0:
            raise ValueError("split_radius must be positive")


@dataclass
class GeometryReport:
    d_num: float
    E_num: float
    E_partial_plus: float
    E_partial_minus: float
    conformality_residual: float
    harmonicity_residual: float
    quad_order: int
    split_radius: float

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "d_num": self.d_num,
            "E_num": self.E_num,
            "E_partial_plus": self.E_partial_plus,
            "E_partial_minus": self.E_partial_minus,
            "conformality_residual": self.conformality_residual,
            "harmonicity_residual": self.harmonicity_residual,
            "quad_order": self.quad_order,
            "split_radius": self.split_radius,
        }


def _disk_nodes(radius: float, order: int):
    x, wx = np.polynomial.legendre.leggauss(order)
    rho = radius * (x + 1.0) / 2.0
    w_rho = wx * radius / 2.0
    theta = math.pi * (x + 1.0)
    w_theta = wx * math.pi
    R, T = np.meshgrid(rho, theta, indexing="ij")
    WR, WT = np.meshgrid(w_rho, w_theta, indexing="ij")
    Z = (R * np.exp(1j * T)).ravel()
    W = (WR * WT * R).ravel()  # includes the polar Jacobian rho
    return Z, W


def _raw_integrals(field: ProjectorField, order: int) -> tuple[float, float]:
    """Uncalibrated (degree, energy) integrals over the two charts."""
    total_d = 0.0
    total_e = 0.0
    for chart, radius in (("z", field.split_radius), ("w", 1.0 / field.split_radius)):
        Z, W = _disk_nodes(radius, order)
        P, Px, Py = field.batch_with_derivatives(Z, chart=chart)
        e_density = (
            np.einsum("Nij,Nji->N", Px, Px).real + np.einsum("Nij,Nji->N", Py, Py).real
        )
        d_density = np.einsum("Nij,Njk,Nki->N", P, Px, Py).imag
        total_d += float(np.dot(d_density, W))
        total_e += float(np.dot(e_density, W))
    return total_d, total_e


@lru_cache(maxsize=None)
def _calibration(order: int, split_radius: float) -> tuple[float, float]:
    """Constants (C_d, C_E) fixed by the degree-2 rational normal curve,
    treated directly as a holomorphic map, reporting d = 2 and E = 2."""
    veronese = HoloCurve(ExactPoly([1]), ExactPoly([0, 1]), ExactPoly([0, 0, 1]), 2)
    field = ProjectorField.from_curve_as_map(veronese, split_radius=split_radius)
    raw_d, raw_e = _raw_integrals(field, order)
    return 2.0 / raw_d, 2.0 / raw_e


def calibrated_integrals(field: ProjectorField, quad: QuadratureSpec) -> tuple[float, float]:
    c_d, c_e = _calibration(quad.order, field.split_radius)
    raw_d, raw_e = _raw_integrals(field, quad.order)
    return c_d * raw_d, c_e * raw_e


def degree_energy(ev, quad: QuadratureSpec | None = None, *, as_map: bool = False) -> GeometryReport:
    """Numerical degree and energy of the Gauss transform of a curve (or of
    the curve itself when as_map=True), with a half-order convergence guard."""
    quad = quad or QuadratureSpec()
    if isinstance(ev, GaussEvaluator):
        field = ProjectorField.from_gauss(ev, split_radius=quad.split_radius)
    elif as_map and isinstance(ev, HoloCurve):
        field = ProjectorField.from_curve_as_map(ev, split_radius=quad.split_radius)
    else:
        raise TypeError("expected a GaussEvaluator, or a HoloCurve with as_map=True")
    d_full, e_full = calibrated_integrals(field, quad)
    half = QuadratureSpec(split_radius=quad.split_radius, order=max(8, quad.order // 2))
    d_half, e_half = calibrated_integrals(field, half)
    if abs(d_full - d_half) > 1e-2 or abs(e_full - e_half) > 1e-2:
        raise QuadratureDiverged(
            f"order {half.order} -> {quad.order}: d moved {abs(d_full - d_half):.3g}, "
            f"E moved {abs(e_full - e_half):.3g}"
        )
    grid = default_grid()
    return GeometryReport(
        d_num=d_full,
        E_num=e_full,
        E_partial_plus=(e_full + d_full) / 2.0,
        E_partial_minus=(e_full - d_full) / 2.0,
        conformality_residual=conformality_residual(field, grid),
        harmonicity_residual=harmonicity_residual(field, grid),
        quad_order=quad.order,
        split_radius=quad.split_radius,
    )


# -- finite-difference residual checks -----------------------------------


def default_grid(n: int = 20, box: float = 1.0):
    """n x n complex grid over [-box, box]^2 (endpoints excluded)."""
    xs = np.linspace(-box, box, n + 2)[1:-1]
    X, Y = np.meshgrid(xs, xs)
    return (X + 1j * Y).ravel()


def _as_field(obj) -> ProjectorField:
    if isinstance(obj, ProjectorField):
        return obj
    if isinstance(obj, GaussEvaluator):
        return ProjectorField.from_gauss(obj)
    if isinstance(obj, HoloCurve):
        return ProjectorField.from_curve_as_map(obj)
    raise TypeError(f"cannot build a projector field from {type(obj).__name__}")


def fd_derivatives(field: ProjectorField, Z, step: float = 1e-3, richardson: bool = False):
    """Central finite-difference P_x, P_y on an array of points.

    With richardson=True, combines steps h and h/2 for O(h^4) accuracy.
    """
    Z = np.asarray(Z, dtype=complex).ravel()

    def central(h):
        px = (field.projectors(Z + h) - field.projectors(Z - h)) / (2.0 * h)
        py = (field.projectors(Z + 1j * h) - field.projectors(Z - 1j * h)) / (2.0 * h)
        return px, py

    px1, py1 = central(step)
    if not richardson:
        return px1, py1
    px2, py2 = central(step / 2.0)
    return (4.0 * px2 - px1) / 3.0, (4.0 * py2 - py1) / 3.0


def conformality_residual(obj, grid=None, step: float = 1e-3) -> float:
    """sup over the grid of |q(Px,Px) - q(Py,Py)| + 2|q(Px,Py)| normalized by
    the local metric scale, with q(A,B) = Re tr(AB)/2 and central FD."""
    field = _as_field(obj)
    Z = default_grid() if grid is None else np.asarray(grid, dtype=complex).ravel()
    Px, Py = fd_derivatives(field, Z, step=step)
    qxx = 0.5 * np.einsum("Nij,Nji->N", Px, Px).real
    qyy = 0.5 * np.einsum("Nij,Nji->N", Py, Py).real
    qxy = 0.5 * np.einsum("Nij,Nji->N", Px, Py).real
    scale = qxx + qyy
    residual = (np.abs(qxx - qyy) + 2.0 * np.abs(qxy)) / scale
    return float(np.max(residual))


def harmonicity_residual(obj, grid=None, step: float = 1e-3) -> float:
    """sup over the grid of the Frobenius norm of [d^2 P / dz dzbar, P],
    the mixed derivative taken as Laplacian/4 by second-order central FD."""
    field = _as_field(obj)
    Z = default_grid() if grid is None else np.asarray(grid, dtype=complex).ravel()
    P0 = field.projectors(Z)
    lap = (
        field.projectors(Z + step)
        + field.projectors(Z - step)
        + field.projectors(Z + 1j * step)
        + field.projectors(Z - 1j * step)
        - 4.0 * P0
    ) / (step * step)
    mixed = lap / 4.0
    comm = np.einsum("Nij,Njk->Nik", mixed, P0) - np.einsum("Nij,Njk->Nik", P0, mixed)
    norms = np.sqrt(np.einsum("Nij,Nij->N", comm, comm.conj()).real)
    return float(np.max(norms))
