"""The linear map sending p (deg <= k) to (p0 p' - p0' p) mod a.

Given a monic pair (a, p0) with a coprime to p0 and p0 squarefree, the map
is an r x (k+1) exact matrix whose column j is the remainder of
p0 (z^j)' - p0' z^j modulo a.  The module computes its exact rank and
kernel basis, builds the echelon witness basis from the factored roots of
a (certifying rank >= r independently of elimination), and runs the
divisor-divisibility vs kernel-membership equivalence check on curves in
generic position.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .curve import HoloCurve, ramification
from .errors import RangeViolation, SpecViolation
from .poly import ExactPoly, ONE_POLY, divides, gcd_pair, poly_mod
from .rational import GaussianRational, ONE, ZERO


def _is_monic(p: ExactPoly) -> bool:
    return not p.is_zero() and p.leading() == ONE


@dataclass(frozen=True)
class KernelSpec:
    """Monic coprime pair (a, p0) with p0 squarefree; optional factored roots of a."""

    a: ExactPoly
    p0: ExactPoly
    roots: tuple | None = None  # ((alpha, multiplicity), ...) when a is factored

    def __post_init__(self):
        if self.a.is_zero() or not _is_monic(self.a) or self.a.degree < 1:
            raise SpecViolation("a must be monic of degree >= 1")
        if self.p0.is_zero() or not _is_monic(self.p0):
            raise SpecViolation("p0 must be monic")
        if gcd_pair(self.a, self.p0).degree != 0:
            raise SpecViolation("a and p0 must be coprime")
        if gcd_pair(self.p0, self.p0.derivative()).degree != 0:
            raise SpecViolation("p0 must have no repeated root")
        if self.roots is not None:
            object.__setattr__(self, "roots", tuple((alpha, int(m)) for alpha, m in self.roots))

    @property
    def r(self) -> int:
        return self.a.degree

    @property
    def k(self) -> int:
        return self.p0.degree

    @classmethod
    def from_roots(cls, roots, p0: ExactPoly) -> KernelSpec:
        """Build the spec with a = prod (z - alpha)^m from its factored roots."""
        a = ONE_POLY
        norm_roots = []
        for alpha, m in roots:
            alpha = alpha if isinstance(alpha, GaussianRational) else GaussianRational(alpha)
            lin = ExactPoly([-alpha, ONE])
            for _ in range(int(m)):
                a = a * lin
            norm_roots.append((alpha, int(m)))
        return cls(a=a, p0=p0, roots=tuple(norm_roots))


@dataclass(frozen=True)
class TMatrix:
    entries: tuple  # r rows of k+1 GaussianRational entries
    spec: KernelSpec

    @property
    def rows(self):
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class KernelReport:
    rank: int
    dim_kernel: int
    kernel_basis: tuple  # ExactPolys of degree <= k

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "rank": self.rank,
            "dim_kernel": self.dim_kernel,
            "kernel_basis": [p.to_json() for p in self.kernel_basis],
        }


def image_poly(spec: KernelSpec, p: ExactPoly) -> ExactPoly:
    """(p0 p' - p0' p) mod a."""
    return poly_mod(spec.p0 * p.derivative() - spec.p0.derivative() * p, spec.a)


def build_T(spec: KernelSpec) -> TMatrix:
    """Exact r x (k+1) matrix of the map on the monomial basis 1, z, ..., z^k."""
    r, k = spec.r, spec.k
    cols = []
    for j in range(k + 1):
        monomial = ExactPoly([ZERO] * j + [ONE])
        rem = image_poly(spec, monomial)
        cols.append([rem[i] for i in range(r)])
    entries = tuple(tuple(cols[j][i] for j in range(k + 1)) for i in range(r))
    return TMatrix(entries=entries, spec=spec)


def kernel_report(T: TMatrix) -> KernelReport:
    """Exact rank and reduced kernel basis via exact Gaussian elimination."""
    basis_vecs = linalg.nullspace(T.rows)
    rk = (T.spec.k + 1) - len(basis_vecs)
    basis = tuple(ExactPoly(v) for v in basis_vecs)
    return KernelReport(rank=rk, dim_kernel=len(basis_vecs), kernel_basis=basis)


def _derivative_values(p: ExactPoly, alpha: GaussianRational, upto: int):
    """[p(alpha), p'(alpha), ..., p^(upto)(alpha)] exactly."""
    vals = []
    q = p
    for _ in range(upto + 1):
        vals.append(q.evaluate(alpha))
        q = q.derivative()
    return vals


def pkl_basis(spec: KernelSpec):
    """The witness polynomials of the rank-r certificate.

    For each root alpha_L of a (multiplicity m_L) and each K = 1..m_L, the
    witness has a root of multiplicity K at alpha_L and multiplicity m_J + 1
    at every other root alpha_J; its total degree r + R - 1 - (m_L - K) is
    <= 2r - 1 <= k in the admissible range.  The matrix of derivative values
    (h(P_{K,L}))^(I)(alpha_J), rows ordered lexicographically by (J, I), is
    verified to be in echelon form with nonzero pivots.
    """
    if spec.roots is None:
        raise SpecViolation("pkl_basis needs the factored roots of a")
    r, k = spec.r, spec.k
    if 2 * r - 1 > k:
        raise RangeViolation(f"r = {r} > (k+1)/2 with k = {k}: witness degree bound fails")
    roots = list(spec.roots)
    witnesses = []
    labels = []  # (L, K) per witness, lexicographic column order
    for L, (alpha_L, m_L) in enumerate(roots):
        for K in range(1, m_L + 1):
            w = ONE_POLY
            for J, (alpha_J, m_J) in enumerate(roots):
                mult = K if J == L else m_J + 1
                lin = ExactPoly([-alpha_J, ONE])
                for _ in range(mult):
                    w = w * lin
            witnesses.append(w)
            labels.append((L, K))
    # Echelon check on the value matrix.
    row_index = []  # (J, I) per row, lexicographic
    for J, (_, m_J) in enumerate(roots):
        for I in range(m_J):
            row_index.append((J, I))
    value_matrix = []
    for J, I in row_index:
        alpha_J = roots[J][0]
        row = []
        for w in witnesses:
            h = image_for_echelon(spec, w)
            row.append(_derivative_values(h, alpha_J, I)[I])
        value_matrix.append(row)
    for col, (L, K) in enumerate(labels):
        pivot_row = row_index.index((L, K - 1))
        for rr in range(len(row_index)):
            J, I = row_index[rr]
            v = value_matrix[rr][col]
            if J != L or (J == L and I < K - 1):
                if not v.is_zero():
                    raise SpecViolation(f"echelon check failed: nonzero above pivot at {(J, I, L, K)}")
            if rr == pivot_row and v.is_zero():
                raise SpecViolation(f"echelon check failed: zero pivot at {(L, K)}")
    return witnesses


def image_for_echelon(spec: KernelSpec, p: ExactPoly) -> ExactPoly:
    """p0 p' - p0' p without reduction mod a (derivative values are taken at
    the roots of a, where reduction is not wanted)."""
    return spec.p0 * p.derivative() - spec.p0.derivative() * p


def lemma32_check(a: ExactPoly, f: HoloCurve):
    """Independently compute a | R(f) and membership of p1, p2 in ker T.

    The curve must already be in generic position: p0 monic squarefree of
    degree k, coprime to a.  Returns (divides, in_kernel); the two booleans
    are equal by the kernel equivalence.
    """
    if f.p0.degree != f.k:
        raise SpecViolation("curve must be in generic position (deg p0 = k)")
    spec = KernelSpec(a=a, p0=f.p0.monic())
    rd = ramification(f)
    div_side = divides(a, rd.divisor)
    in_kernel = image_poly(spec, f.p1).is_zero() and image_poly(spec, f.p2).is_zero()
    return div_side, in_kernel
