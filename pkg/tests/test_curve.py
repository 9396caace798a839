import random
from fractions import Fraction

import pytest

from holocurves import (
    GaussianRational,
    ProjPoint,
    act,
    chart_flip,
    conjugate_polar,
    generic_position,
    invariant_sheet,
    invariants,
    ramification,
    validate,
    wedge,
)
from holocurves.curve import cross, is_squarefree, wronskian
from holocurves.errors import (
    DegreeTooSmall,
    NotCoprime,
    NotFull,
    SingularTransform,
)
from holocurves.poly import ExactPoly, from_ints

from conftest import random_curve

VERONESE = (from_ints(1), from_ints(0, 1), from_ints(0, 0, 1))


def veronese():
    return validate(*VERONESE)


class TestValidate:
    def test_veronese(self):
        f = veronese()
        assert f.k == 2
        assert wronskian(*f.triple) == from_ints(2)

    def test_not_full(self):
        with pytest.raises(NotFull):
            validate(from_ints(1), from_ints(0, 1), from_ints(0, 2))

    def test_not_coprime_reports_factor(self):
        with pytest.raises(NotCoprime) as exc:
            validate(from_ints(0, 1), from_ints(0, 0, 1), from_ints(0, 0, 0, 1))
        assert exc.value.factor == from_ints(0, 1)

    def test_degree_too_small(self):
        # three independent polynomials force k >= 2, so a degree-1 triple
        # always fails validation one way or another
        with pytest.raises((DegreeTooSmall, NotFull)):
            validate(from_ints(1), from_ints(0, 1), from_ints(1, 1))
        with pytest.raises(DegreeTooSmall):
            validate(ExactPoly(), ExactPoly(), ExactPoly())


class TestWedge:
    def test_veronese(self):
        assert wedge(veronese()) == (from_ints(0, 0, 1), from_ints(0, -2), from_ints(1))

    def test_cubic_family_t0(self):
        f = validate(from_ints(1), from_ints(0, 0, 0, 1), from_ints(0, 0, 1))
        assert wedge(f) == (from_ints(0, 0, 0, 0, -1), from_ints(0, -2), from_ints(0, 0, 3))

    def test_quartic_family_factored(self):
        # F_t at t = 1/2: the wedge is (z^2 - t) * psi(z) with psi as displayed.
        t = Fraction(1, 2)
        f = validate(
            from_ints(1, 0, 0, 0, 1),
            ExactPoly([0, -3 * t + t**3, 0, 1 - 3 * t**2]),
            ExactPoly([1 - t**2, 0, 2 * t]),
        )
        psi = (
            ExactPoly([(-3 + t**2) * (1 - t**2), 0, -2 * t + 6 * t**3]),
            ExactPoly([0, 4, 0, 4 * t]),
            ExactPoly([3 - t**2, 0, 8 * t, 0, -1 + 3 * t**2]),
        )
        factor = ExactPoly([-t, 0, 1])
        assert wedge(f) == tuple(factor * p for p in psi)

    def test_scalar_triple_identity(self):
        rng = random.Random(23)
        for _ in range(30):
            f = random_curve(rng, rng.randint(2, 5))
            w = wedge(f)
            dot = ExactPoly()
            for p, q in zip(f.triple, w):
                dot = dot + p * q
            assert dot.is_zero()


class TestRamification:
    def test_veronese_unramified(self):
        rd = ramification(veronese())
        assert rd.divisor == from_ints(1)
        assert (rd.r_finite, rd.r_infinity, rd.r_total) == (0, 0, 0)

    def test_quartic_family_t1(self):
        f = validate(from_ints(1, 0, 0, 0, 1), from_ints(0, -2, 0, -2), from_ints(0, 0, 2))
        rd = ramification(f)
        assert rd.divisor == from_ints(-1, 0, 1)
        assert rd.r_total == 2

    def test_cubic_family(self):
        f0 = validate(from_ints(1), from_ints(0, 0, 0, 1), from_ints(0, 0, 1))
        f1 = validate(from_ints(1), from_ints(0, 1, 0, 1), from_ints(0, 0, 1))
        assert ramification(f0).divisor == from_ints(0, 1)
        assert ramification(f0).r_total == 1
        assert ramification(f1).divisor == from_ints(1)
        assert ramification(f1).r_total == 0

    def test_divisor_divides_wedge(self):
        rng = random.Random(29)
        for _ in range(20):
            f = random_curve(rng, rng.randint(2, 5))
            rd = ramification(f)
            for comp in wedge(f):
                from holocurves.poly import divides

                assert divides(rd.divisor, comp)

    def test_infinity_index_matches_flipped_vanishing(self):
        rng = random.Random(31)
        for _ in range(100):
            f = random_curve(rng, rng.randint(2, 5))
            rd = ramification(f)
            wf = wedge(chart_flip(f))
            # order of vanishing at w = 0 of the flipped wedge
            order = min(
                next(i for i, c in enumerate(p.coeffs) if not c.is_zero())
                for p in wf
                if not p.is_zero()
            )
            assert order == rd.r_infinity

    def test_total_within_stratum_range(self):
        rng = random.Random(37)
        for _ in range(50):
            f = random_curve(rng, rng.randint(2, 5))
            r = ramification(f).r_total
            assert 0 <= 2 * r <= 3 * f.k - 6


class TestConjugatePolar:
    def test_veronese(self):
        h = conjugate_polar(veronese())
        assert h.triple == (from_ints(0, 0, 1), from_ints(0, -2), from_ints(1))
        assert h.k == 2

    def test_involution_veronese(self):
        f = veronese()
        hh = conjugate_polar(conjugate_polar(f))
        assert hh.triple == (from_ints(2), from_ints(0, 2), from_ints(0, 0, 2))

    def test_quartic_family_degree(self):
        f = validate(from_ints(1, 0, 0, 0, 1), from_ints(0, -2, 0, -2), from_ints(0, 0, 2))
        assert conjugate_polar(f).k == 2 * 4 - 2 - 2

    def test_involution_random(self):
        rng = random.Random(41)
        for _ in range(100):
            f = random_curve(rng, rng.randint(2, 6))
            r = ramification(f).r_total
            h = conjugate_polar(f)
            assert h.k == 2 * f.k - 2 - r
            hh = conjugate_polar(h)
            # projectively equal: all pairwise cross components vanish
            assert all(c.is_zero() for c in cross(hh.triple, f.triple))

    def test_max_ramification_boundary(self):
        # polar of an unramified quartic sits at r = (3k-6)/2 and polars back
        # to an unramified curve
        f = validate(from_ints(1), from_ints(1, 3, 3, 1), from_ints(0, 0, 0, 0, 1))
        assert ramification(f).r_total == 0
        h = conjugate_polar(f)
        assert h.k == 6 and ramification(h).r_total == 6
        assert invariants(h).r_polar == 0
        assert ramification(conjugate_polar(h)).r_total == 0


class TestInvariants:
    @pytest.mark.parametrize(
        "k,r,expected",
        [
            (2, 0, (0, 4, 2, 0)),
            (4, 2, (0, 8, 4, 2)),
            (3, 0, (1, 7, 4, 3)),
        ],
    )
    def test_formulas(self, k, r, expected):
        s = invariant_sheet(k, r)
        assert (s.d, s.E, s.k_polar, s.r_polar) == expected

    def test_polar_map_is_involution_on_integers(self):
        for k in range(2, 30):
            for r in range(0, (3 * k - 6) // 2 + 1):
                s = invariant_sheet(k, r)
                s2 = invariant_sheet(s.k_polar, s.r_polar)
                assert (s2.k_polar, s2.r_polar) == (k, r)


class TestChartFlip:
    def test_veronese(self):
        g = chart_flip(veronese())
        assert g.triple == (from_ints(0, 0, 1), from_ints(0, 1), from_ints(1))

    def test_with_shift(self):
        f = validate(from_ints(1), from_ints(1, 1), from_ints(0, 0, 0, 1))
        g = chart_flip(f)
        assert g.triple == (from_ints(0, 0, 0, 1), from_ints(0, 0, 1, 1), from_ints(1))

    def test_involution(self):
        rng = random.Random(43)
        for _ in range(100):
            f = random_curve(rng, rng.randint(2, 5))
            ff = chart_flip(chart_flip(f))
            assert all(c.is_zero() for c in cross(ff.triple, f.triple))


class TestAction:
    def test_identity(self):
        f = veronese()
        g = act(f, ((1, 0), (0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert g.triple == f.triple

    def test_translation(self):
        g = act(veronese(), ((1, 1), (0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert g.triple == (from_ints(1), from_ints(1, 1), from_ints(1, 2, 1))

    def test_singular(self):
        with pytest.raises(SingularTransform):
            act(veronese(), ((1, 1), (1, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def test_preserves_invariants(self):
        rng = random.Random(47)
        for _ in range(100):
            f = random_curve(rng, rng.randint(2, 4))
            while True:
                mob = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
                if mob[0][0] * mob[1][1] - mob[0][1] * mob[1][0] != 0:
                    break
            prj = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            prj[rng.randrange(3)][rng.randrange(3)] += rng.randint(1, 2)
            g = act(f, mob, prj)
            assert g.k == f.k
            assert ramification(g).r_total == ramification(f).r_total
            assert invariants(g) == invariants(f)


class TestGenericPosition:
    def test_veronese(self):
        _, g = generic_position(veronese())
        assert g.p0.degree == g.k == 2
        assert g.p0.leading() == GaussianRational(1)
        assert is_squarefree(g.p0)
        assert ramification(g).r_infinity == 0

    def test_already_generic_gets_identity(self):
        f = validate(from_ints(1, 0, 1), from_ints(0, 1), from_ints(0, 0, 1))
        assert f.p0.degree == 2
        (mob, prj), g = generic_position(f)
        assert mob == ((1, 0), (0, 1))
        assert g.triple == f.triple

    def test_constant_p0_gets_mixed(self):
        f = validate(from_ints(1), from_ints(0, 0, 0, 1), from_ints(0, 0, 1))
        _, g = generic_position(f)
        assert g.p0.degree == 3 and is_squarefree(g.p0)
        assert ramification(g).r_infinity == 0

    def test_random(self):
        rng = random.Random(53)
        for _ in range(30):
            f = random_curve(rng, rng.randint(2, 4))
            (mob, prj), g = generic_position(f)
            assert g.p0.degree == g.k
            assert g.p0.leading() == GaussianRational(1)
            assert is_squarefree(g.p0)
            assert ramification(g).r_infinity == 0
            assert act(f, mob, prj).triple == g.triple


class TestProjPoint:
    def test_exact_equality_is_projective(self):
        a = ProjPoint((GaussianRational(1), GaussianRational(2), GaussianRational(0)))
        b = ProjPoint((GaussianRational(2), GaussianRational(4), GaussianRational(0)))
        c = ProjPoint((GaussianRational(1), GaussianRational(0), GaussianRational(0)))
        assert a == b and a != c

    def test_approx_equality(self):
        a = ProjPoint((1.0, 2.0, 0.0))
        b = ProjPoint((2.0 + 1e-14, 4.0, 0.0))
        assert a == b

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint((GaussianRational(0), GaussianRational(0), GaussianRational(0)))
