import math
from fractions import Fraction

import pytest

from holocurves import (
    CurveFamily,
    GaussianRational,
    differential_probe,
    invariants,
    preset,
    ramification,
    smooth_divisor,
    trace_gauss,
)
from holocurves.errors import RangeViolation, StratumJump, UnknownPreset
from holocurves.poly import ExactPoly, from_ints


class TestPresets:
    def test_burstall_specializations(self):
        fam = preset("burstall")
        f0 = fam.specialize(0)
        assert f0.triple == (from_ints(1), from_ints(0, 0, 0, 1), from_ints(0, 0, 1))
        f1 = fam.specialize(1)
        assert f1.triple == (from_ints(1), from_ints(0, 1, 0, 1), from_ints(0, 0, 1))
        assert ramification(f0).r_total == 1
        assert ramification(f1).r_total == 0

    def test_coalesce_divisor(self):
        fam = preset("coalesce")
        for t in (Fraction(-1, 2), 0, Fraction(1, 3)):
            rd = ramification(fam.specialize(t))
            assert rd.divisor == ExactPoly([-Fraction(t), 0, 1])
            assert rd.r_total == 2

    def test_cmr_small(self):
        fam = preset("cmr", k=3, r=1)
        f = fam.specialize(0)
        assert f.triple == (from_ints(1), from_ints(1, 1), from_ints(0, 0, 0, 1))
        assert ramification(f).r_total == 1

    def test_cmr_strata(self):
        for k in range(2, 9):
            for r in range(0, k - 1):
                f = preset("cmr", k=k, r=r).specialize(0)
                sheet = invariants(f)
                assert (sheet.k, sheet.r) == (k, r)
                assert sheet.d == k - r - 2 and sheet.E == 3 * k - r - 2

    def test_cmr_out_of_range(self):
        with pytest.raises(RangeViolation):
            preset("cmr", k=3, r=2)
        with pytest.raises(RangeViolation):
            preset("cmr", k=4)

    def test_unknown(self):
        with pytest.raises(UnknownPreset):
            preset("nope")

    def test_constant_detection(self):
        assert preset("cmr", k=4, r=1).is_constant()
        assert not preset("burstall").is_constant()


class TestTraceGauss:
    def test_burstall_single_pi_half_jump(self):
        fam = preset("burstall")
        ts = [Fraction(i, 100) for i in range(-20, 21)]
        rep = trace_gauss(fam, GaussianRational(0), ts)
        assert len(rep.jump_events) == 1
        _, _, dist = rep.jump_events[0]
        assert abs(dist - math.pi / 2) <= 1e-12
        # exact values off and at the discontinuity
        from holocurves import ProjPoint

        for t, v in zip(rep.ts, rep.values):
            expect = (0, 0, 1) if t == 0 else (0, 1, 0)
            assert v == ProjPoint(tuple(GaussianRational(c) for c in expect))

    def test_coalesce_no_jump(self):
        fam = preset("coalesce")
        ts = [Fraction(i, 20) for i in range(-10, 11)]
        rep = trace_gauss(fam, GaussianRational(0), ts)
        assert rep.jump_events == []
        assert all(not f for f in rep.jump_flags)


class TestSmoothDivisor:
    def test_coalesce_exact_trace(self):
        fam = preset("coalesce")
        ts = [Fraction(i, 20) for i in range(-10, 11)]
        rep = smooth_divisor(fam, ts)
        for t, coeffs in zip(rep.ts, rep.values):
            assert coeffs == [GaussianRational(-t), GaussianRational(0), GaussianRational(1)]
        # d/dt (z^2 - t) = -1 on the constant coefficient, 0 above: exactly
        # the same quotient between every consecutive pair
        for q in rep.quotients:
            assert q == [GaussianRational(-1), GaussianRational(0), GaussianRational(0)]
        assert rep.stratum_jumps == []

    def test_burstall_one_stratum_jump(self):
        fam = preset("burstall")
        ts = [Fraction(i, 10) for i in range(-5, 6)]
        rep = smooth_divisor(fam, ts)
        assert rep.stratum_jumps == [Fraction(0)]

    def test_root_blowup_contrast(self):
        # Near t = 1e-4 the roots +-sqrt(t) move at speed ~ 1/(2 sqrt(t)),
        # far faster than the coefficients.
        fam = preset("coalesce")
        ts = [Fraction(1, 10**4), Fraction(2, 10**4), Fraction(3, 10**4)]
        rep = smooth_divisor(fam, ts, isolate_roots=True)
        for q in rep.quotients:
            assert max(abs(complex(c)) for c in q) <= 1.0
        root_qs = [qs for qs in rep.root_quotients if qs is not None]
        assert root_qs
        for qs in root_qs:
            assert max(qs) > 10

    def test_custom_family_round_trip(self):
        fam = CurveFamily(
            tables=(
                (ExactPoly([1]),),
                (ExactPoly(), ExactPoly([0, 1]), ExactPoly(), ExactPoly([1])),
                (ExactPoly(), ExactPoly(), ExactPoly([1])),
            ),
            domain=(Fraction(-1), Fraction(1)),
        )
        f = fam.specialize(Fraction(1, 2))
        assert f.p1 == ExactPoly([0, Fraction(1, 2), 0, 1])


class TestDifferentialProbe:
    def test_positive_and_delta_stable(self):
        fam = preset("coalesce")
        vals = [differential_probe(fam, Fraction(1, 4), Fraction(1, 10**n)) for n in (2, 3, 4)]
        assert all(v > 0.1 for v in vals)
        assert abs(vals[2] - vals[1]) < abs(vals[1] - vals[0]) + 1e-9

    def test_constant_family_zero(self):
        fam = preset("cmr", k=4, r=1)
        assert differential_probe(fam, 0, Fraction(1, 1000)) == 0.0

    def test_reparametrization_chain_rule(self):
        fam = preset("coalesce")
        fast = fam.reparametrize(2)
        v1 = differential_probe(fam, Fraction(1, 4), Fraction(1, 10**4))
        v2 = differential_probe(fast, Fraction(1, 8), Fraction(1, 2 * 10**4))
        assert abs(v2 - 2 * v1) <= 0.05 * abs(2 * v1)

    def test_stratum_jump_raises(self):
        fam = preset("burstall")
        with pytest.raises(StratumJump):
            differential_probe(fam, Fraction(-1, 1000), Fraction(1, 1000))
