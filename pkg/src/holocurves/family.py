"""One-parameter families of curves and their continuity diagnostics.

A family stores, for each component and each power of z, an ExactPoly in
the parameter t, so every specialization at a rational t is an exact curve.
The presets are the two worked families (the discontinuous cubic family and
the coalescing-ramification quartic family) plus the standard one-curve
generator for each stratum (k, r).

Diagnostics: the Gauss-transform trace at a fixed point (flagging jumps),
the exact divisor trace (coefficient-wise difference quotients stay bounded
within a stratum while individual roots may not), and a finite-difference
probe of the injectivity of the transform's differential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .curve import HoloCurve, fs_distance, ramification, validate
from .errors import RangeViolation, StratumJump, UnknownPreset
from .gauss import GaussEvaluator, gauss_eval
from .poly import ExactPoly
from .rational import GaussianRational

JUMP_THRESHOLD = 0.1  # Fubini-Study distance flagging a trace discontinuity
ROOT_TOLERANCE = 1e-10  # companion-matrix root isolation, diagnostics only


@dataclass(frozen=True)
class CurveFamily:
    """p_i(z; t): per component, a tuple of ExactPolys in t (one per z power)."""

    tables: tuple  # 3 tuples of ExactPoly-in-t
    domain: tuple  # (Fraction, Fraction) closed interval

    def specialize(self, t) -> HoloCurve:
        t = t if isinstance(t, GaussianRational) else GaussianRational(Fraction(t))
        polys = [ExactPoly([c.evaluate(t) for c in table]) for table in self.tables]
        return validate(*polys)

    def reparametrize(self, factor) -> CurveFamily:
        """The family t -> f_{factor * t}."""
        c = GaussianRational(Fraction(factor))
        tables = tuple(
            tuple(p.compose_scaled(c) for p in table) for table in self.tables
        )
        lo, hi = self.domain
        bounds = sorted([lo / Fraction(factor), hi / Fraction(factor)])
        return CurveFamily(tables=tables, domain=tuple(bounds))

    def is_constant(self) -> bool:
        return all(p.degree in (None, 0) for table in self.tables for p in table)


def _t_poly(*coeffs) -> ExactPoly:
    return ExactPoly(coeffs)


def preset(name: str, *, k: int | None = None, r: int | None = None) -> CurveFamily:
    """Named families: 'burstall', 'coalesce', and 'cmr' (takes k, r)."""
    if name == "burstall":
        # F_t(z) = (1, t z + z^3, z^2); stratum jumps at t = 0.
        zero = ExactPoly()
        tables = (
            (_t_poly(1),),
            (zero, _t_poly(0, 1), zero, _t_poly(1)),
            (zero, zero, _t_poly(1)),
        )
        return CurveFamily(tables=tables, domain=(Fraction(-1), Fraction(1)))
    if name == "coalesce":
        # F_t(z) = (z^4 + 1, (1-3t^2) z^3 + (-3t+t^3) z, 2t z^2 + (1-t^2));
        # in the (4, 2) stratum for every t, divisor z^2 - t.
        zero = ExactPoly()
        tables = (
            (_t_poly(1), zero, zero, zero, _t_poly(1)),
            (zero, _t_poly(0, -3, 0, 1), zero, _t_poly(1, 0, -3)),
            (_t_poly(1, 0, -1), zero, _t_poly(0, 2)),
        )
        return CurveFamily(tables=tables, domain=(Fraction(-1, 2), Fraction(1, 2)))
    if name == "cmr":
        if k is None or r is None:
            raise RangeViolation("cmr preset needs k and r")
        if k < 2 or not (0 <= r <= k - 2):
            raise RangeViolation(f"cmr needs k >= 2 and 0 <= r <= k-2, got ({k}, {r})")
        # (1, (z+1)^(k-r-1), z^k), a constant family with total ramification r.
        m = k - r - 1
        binom = [math.comb(m, i) for i in range(m + 1)]
        tables = (
            (_t_poly(1),),
            tuple(_t_poly(b) for b in binom),
            (ExactPoly(),) * k + (_t_poly(1),),
        )
        fam = CurveFamily(tables=tables, domain=(Fraction(-1), Fraction(1)))
        if ramification(fam.specialize(0)).r_total != r:
            raise RangeViolation(f"cmr({k}, {r}) self-check failed")  # pragma: no cover
        return fam
    raise UnknownPreset(name)


@dataclass
class TraceReport:
    """Samples along t with first difference quotients and jump bookkeeping."""

    ts: list
    values: list
    quotients: list
    jump_flags: list = field(default_factory=list)  # per consecutive pair
    jump_events: list = field(default_factory=list)  # (start_index, end_index, max_distance)
    stratum_jumps: list = field(default_factory=list)  # t values where (k, r) changed


def _group_events(flags, magnitudes):
    events = []
    i = 0
    while i < len(flags):
        if flags[i]:
            j = i
            while j + 1 < len(flags) and flags[j + 1]:
                j += 1
            events.append((i, j, max(magnitudes[i : j + 1])))
            i = j + 1
        else:
            i += 1
    return events


def trace_gauss(fam: CurveFamily, z0, t_grid, threshold: float = JUMP_THRESHOLD) -> TraceReport:
    """Evaluate the Gauss transform at z0 along the grid; flag FS jumps.

    Consecutive flagged pairs are merged into a single jump event (a visit to
    a discontinuity point produces two large consecutive distances).
    """
    ts = [Fraction(t) for t in t_grid]
    values = []
    for t in ts:
        ev = GaussEvaluator(fam.specialize(t))
        values.append(gauss_eval(ev, z0))
    dists = [
        fs_distance(values[i].to_complex(), values[i + 1].to_complex())
        for i in range(len(values) - 1)
    ]
    quotients = [d / float(ts[i + 1] - ts[i]) for i, d in enumerate(dists)]
    flags = [d > threshold for d in dists]
    return TraceReport(
        ts=ts,
        values=values,
        quotients=quotients,
        jump_flags=flags,
        jump_events=_group_events(flags, dists),
    )


def smooth_divisor(fam: CurveFamily, t_grid, isolate_roots: bool = False) -> TraceReport:
    """Exact ramification divisor along the grid.

    values are divisor coefficient lists (GaussianRational, ascending);
    quotients are exact coefficient-wise difference quotients.  Stratum
    changes are reported in stratum_jumps, not raised.  With isolate_roots,
    per-root difference quotients (floating, companion-matrix roots) are
    appended to the report as extra magnitudes in jump_events style via the
    root_quotients attribute.
    """
    ts = [Fraction(t) for t in t_grid]
    divisors = []
    strata = []
    for t in ts:
        f = fam.specialize(t)
        rd = ramification(f)
        divisors.append(rd.divisor)
        strata.append((f.k, rd.r_total))
    # A single deviant sample produces two consecutive transitions (entering
    # and leaving); merge runs of consecutive transitions into one jump at
    # the first deviant t.
    transitions = [i for i in range(1, len(ts)) if strata[i] != strata[i - 1]]
    stratum_jumps = []
    for j, i in enumerate(transitions):
        if j > 0 and i == transitions[j - 1] + 1:
            continue
        stratum_jumps.append(ts[i])
    values = [list(d.coeffs) for d in divisors]
    quotients = []
    for i in range(len(ts) - 1):
        dt = GaussianRational(ts[i + 1] - ts[i])
        if len(values[i]) == len(values[i + 1]):
            quotients.append([(b - a) / dt for a, b in zip(values[i], values[i + 1])])
        else:
            quotients.append(None)  # degree changed; no coefficient-wise quotient
    report = TraceReport(ts=ts, values=values, quotients=quotients, stratum_jumps=stratum_jumps)
    if isolate_roots:
        report.root_quotients = _root_quotients(ts, divisors)
    return report


def _root_quotients(ts, divisors):
    """Per-root |difference quotient| between consecutive samples, matching
    each root to the nearest root of the previous divisor."""
    out = []
    prev_roots = None
    for i, d in enumerate(divisors):
        if d.degree is None or d.degree == 0:
            roots = np.array([])
        else:
            roots = np.roots(list(reversed(d.complex_coeffs())))
        if prev_roots is not None and len(roots) == len(prev_roots) and len(roots) > 0:
            dt = float(ts[i] - ts[i - 1])
            remaining = list(prev_roots)
            qs = []
            for rt in roots:
                j = int(np.argmin([abs(rt - p) for p in remaining]))
                qs.append(abs(rt - remaining.pop(j)) / abs(dt))
            out.append(qs)
        else:
            out.append(None)
        prev_roots = roots
    return out


# Fixed evaluation grid for the differential probe: spread over both charts.
_PROBE_POINTS = [0.0, 0.5, -0.5, 1.0, -1.0, 0.5j, -0.5j, 0.3 + 0.4j, -0.7 + 0.2j, 2.0, -2.0]


def differential_probe(fam: CurveFamily, t0, delta) -> float:
    """sup_z FS(phi_{t0+delta}(z), phi_{t0}(z)) / delta, a finite-difference
    lower-bound proxy for the norm of the transform's differential."""
    t0 = Fraction(t0)
    delta = Fraction(delta)
    f0 = fam.specialize(t0)
    f1 = fam.specialize(t0 + delta)
    rd0, rd1 = ramification(f0), ramification(f1)
    if (f0.k, rd0.r_total) != (f1.k, rd1.r_total):
        raise StratumJump(t0 + delta)
    if f0.triple == f1.triple:
        return 0.0
    ev0 = GaussEvaluator(f0)
    ev1 = GaussEvaluator(f1)
    sup = 0.0
    for z in _PROBE_POINTS:
        a = gauss_eval(ev0, z).to_complex()
        b = gauss_eval(ev1, z).to_complex()
        sup = max(sup, fs_distance(a, b) / float(delta))
    return sup
