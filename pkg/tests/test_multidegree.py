"""Tests for truncated multigraded ring arithmetic and geometry degree classes."""

from __future__ import annotations

import random

import pytest

from edcurve.multidegree import (
    MultiDeg,
    curve_multidegree,
    isotropic_hypersurface_multidegree,
    md_mul,
    md_top_coefficient,
    point_multiview_multidegree,
)


def _rand_md(rng: random.Random, n: int, h: int) -> MultiDeg:
    acc = MultiDeg.zero(n, h)
    for _ in range(rng.randint(0, 5)):
        expo = tuple(rng.randint(0, h) for _ in range(n))
        acc = acc + MultiDeg(n, h, {expo: rng.randint(-4, 4)})
    return acc


class TestRing:
    def test_identity(self):
        one = MultiDeg.one(2, 3)
        t1 = MultiDeg.variable(1, 2, 3)
        assert md_mul(t1, one) == t1

    def test_truncation_kills_high_powers(self):
        for h in (1, 2, 3, 4):
            t1 = MultiDeg.variable(1, 1, h)
            p = t1
            for _ in range(h - 1):
                p = md_mul(p, t1)
            assert not p.is_zero  # T1^h survives
            assert md_mul(p, t1).is_zero  # T1^(h+1) == 0

    def test_mismatched_rings_rejected(self):
        a = MultiDeg.one(2, 3)
        b = MultiDeg.one(2, 2)
        c = MultiDeg.one(3, 3)
        for other in (b, c):
            with pytest.raises(ValueError):
                md_mul(a, other)

    def test_zero_coefficients_not_stored(self):
        a = MultiDeg.variable(1, 2, 2)
        diff = a - a
        assert diff.is_zero
        assert diff.terms == {}

    def test_ring_laws_random(self):
        rng = random.Random(7)
        for _ in range(120):
            n = rng.randint(1, 3)
            h = rng.randint(1, 3)
            a, b, c = (_rand_md(rng, n, h) for _ in range(3))
            assert md_mul(a, b) == md_mul(b, a)
            assert md_mul(md_mul(a, b), c) == md_mul(a, md_mul(b, c))
            assert md_mul(a, b + c) == md_mul(a, b) + md_mul(a, c)

    def test_truncation_soundness_random(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 3)
            h = rng.randint(1, 3)
            prod = md_mul(_rand_md(rng, n, h), _rand_md(rng, n, h))
            for expo in prod.terms:
                assert all(0 <= a <= h for a in expo)


class TestLinearFactorProduct:
    def test_three_linear_factors(self):
        h = 3
        factors = [MultiDeg.linear_form((1, k), h) for k in (1, 2, 3)]
        prod = factors[0]
        for f in factors[1:]:
            prod = md_mul(prod, f)
        assert prod.render() == "T1^3 + 6*T1^2*T2 + 11*T1*T2^2 + 6*T2^3"

    def test_known_coefficients(self):
        h = 3
        prod = MultiDeg.one(2, h)
        for k in (1, 2, 3):
            prod = md_mul(prod, MultiDeg.linear_form((1, k), h))
        assert prod.coefficient((3, 0)) == 1
        assert prod.coefficient((2, 1)) == 6
        assert prod.coefficient((1, 2)) == 11
        assert prod.coefficient((0, 3)) == 6
        assert prod.coefficient((2, 2)) == 0


class TestCurveClass:
    def test_single_view(self):
        assert curve_multidegree(2, 1, 2).render() == "2*T1"

    def test_two_view_high_dim(self):
        md = curve_multidegree(2, 2, 5)
        assert md.render() == "2*T1^5*T2^4 + 2*T1^4*T2^5"
        assert md.render_dual() == "2*T1 + 2*T2"

    def test_degenerate_is_constant_one(self):
        md = curve_multidegree(1, 1, 1)
        assert md.render() == "1"
        assert md.coefficient((0,)) == 1

    def test_exponent_structure(self):
        e, n, h = 3, 3, 4
        md = curve_multidegree(e, n, h)
        assert len(md.terms) == n
        for expo, coeff in md.terms.items():
            assert coeff == e
            assert sorted(expo) == [h - 1] + [h] * (n - 1)

    def test_rejects_nonpositive(self):
        for bad in ((0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 2, 2)):
            with pytest.raises(ValueError):
                curve_multidegree(*bad)


class TestIsotropicHypersurface:
    def test_single_view(self):
        # one hypersurface of degree 2 in each factor: class 2*T1, so that the
        # product against a curve class lands on the top monomial (law below)
        assert isotropic_hypersurface_multidegree(1, 2).render() == "2*T1"

    def test_three_views(self):
        md = isotropic_hypersurface_multidegree(3, 2)
        assert md.render() == "2*T1 + 2*T2 + 2*T3"

    def test_rejects_h_below_two(self):
        with pytest.raises(ValueError):
            isotropic_hypersurface_multidegree(2, 1)

    def test_euler_intersection_top_coefficient(self):
        prod = md_mul(curve_multidegree(3, 2, 2),
                      isotropic_hypersurface_multidegree(2, 2))
        assert md_top_coefficient(prod) == 12

    def test_top_coefficient_law_small_table(self):
        for e in range(1, 6):
            for n in range(1, 6):
                for h in (2, 3):
                    prod = md_mul(curve_multidegree(e, n, h),
                                  isotropic_hypersurface_multidegree(n, h))
                    assert md_top_coefficient(prod) == 2 * e * n, (e, n, h)


class TestPointMultiview:
    def test_two_views(self):
        md = point_multiview_multidegree(2)
        assert md.render() == "T1 + T2"

    def test_three_views(self):
        md = point_multiview_multidegree(3)
        # exponent tuples (2 - a_i) for (a) with max a_i = 2, sum a_i = 3:
        # permutations of (2,1,0) -> six terms, each coefficient 1
        assert len(md.terms) == 6
        assert all(c == 1 for c in md.terms.values())
        assert set(md.terms) == {(0, 1, 2), (0, 2, 1), (1, 0, 2),
                                 (1, 2, 0), (2, 0, 1), (2, 1, 0)}

    def test_exponents_capped(self):
        md = point_multiview_multidegree(2)
        for expo in md.terms:
            assert all(0 <= a <= 2 for a in expo)

    def test_rejects_single_view(self):
        with pytest.raises(ValueError):
            point_multiview_multidegree(1)


class TestTopCoefficient:
    def test_reads_full_support_monomial(self):
        for e, n, h in ((1, 1, 2), (2, 2, 2), (3, 2, 3)):
            md = MultiDeg(n, h, {tuple([h] * n): 2 * e * n})
            assert md_top_coefficient(md) == 2 * e * n

    def test_constant_has_zero_top(self):
        assert md_top_coefficient(MultiDeg.one(2, 3)) == 0
