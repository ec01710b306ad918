"""Tests for the critical-point counts, the Euler-characteristic cross-check,
the projective smooth-curve count, and certified triangulation."""

from __future__ import annotations

import random
from fractions import Fraction as F

import pytest

from edcurve.eddeg import (
    CuspError,
    DataInstabilityError,
    DataPoint,
    EDReport,
    critical_polynomial,
    ed_degree_affine,
    euler_cross_check,
    projective_ed_degree_smooth_curve,
    random_data_point,
    reduce_critical_polynomial,
    triangulate,
)
from edcurve.exactnum import HomPoly2, UniPoly
from edcurve.scene import (
    Arrangement,
    Camera,
    RationalCurve,
    apply_camera,
    random_camera,
    random_camera_block_pairs,
    random_camera_degree_drop,
    random_curve,
    rational_normal_curve,
)


def H(e, *coeffs):
    return HomPoly2(e, tuple(F(c) for c in coeffs))


def twisted_cubic() -> RationalCurve:
    return rational_normal_curve(3, 3)


def cuspidal_cubic() -> RationalCurve:
    return RationalCurve(N=2, e=3, coords=(
        H(3, 1, 0, 0, 0), H(3, 0, 0, 1, 0), H(3, 0, 0, 0, 1)))


def line_in_p3() -> RationalCurve:
    return RationalCurve(N=3, e=1, coords=(
        H(1, 0, 1), H(1, 1, 0), HomPoly2(1), HomPoly2(1)))


def axis_camera() -> Camera:
    # chart row hits s, so the affine image of [t:s:0:0] is the t-axis (t, 0)
    return Camera(2, 3, ((F(0), F(1), F(0), F(0)),
                         (F(1), F(0), F(0), F(0)),
                         (F(0), F(0), F(1), F(0))))


def generic_arrangement(start_seed: int, n: int, h: int, N: int) -> Arrangement:
    return Arrangement(tuple(random_camera(start_seed + i, h, N) for i in range(n)))


def image_of(f: RationalCurve, arr: Arrangement, t: F) -> DataPoint:
    """Exact affine image blocks of the curve point at parameter t."""
    blocks = []
    for cam in arr.cameras:
        img = apply_camera(cam, f)
        q = img[0].dehom().evaluate(t)
        blocks.append(tuple(p.dehom().evaluate(t) / q for p in img[1:]))
    return DataPoint(u=tuple(blocks))


def exact_distance(f, arr, u: DataPoint, t: F) -> F:
    total = F(0)
    for i, cam in enumerate(arr.cameras):
        img = apply_camera(cam, f)
        q = img[0].dehom().evaluate(t)
        for j, p in enumerate(img[1:]):
            total += (p.dehom().evaluate(t) / q - u.u[i][j]) ** 2
    return total


class TestDataPoint:
    def test_coercion_and_shape(self):
        d = DataPoint(u=((1, F(1, 2)), (0, 3)))
        assert d.u == ((F(1), F(1, 2)), (F(0), F(3)))
        d.check_shape(generic_arrangement(0, 2, 2, 3))
        with pytest.raises(ValueError):
            d.check_shape(generic_arrangement(0, 1, 2, 3))

    def test_round_trip(self):
        d = DataPoint(u=((F(1, 3), F(-2)),), beta0=F(5, 7))
        assert DataPoint.from_dict(d.to_json_dict()) == d

    def test_malformed(self):
        with pytest.raises(ValueError, match="malformed data object"):
            DataPoint.from_dict({"u": "nope"})

    def test_sampler_deterministic(self):
        assert random_data_point(9, 2, 3) == random_data_point(9, 2, 3)
        assert random_data_point(9, 2, 3) != random_data_point(10, 2, 3)
        d = random_data_point(9, 2, 3)
        assert len(d.u) == 2 and all(len(row) == 3 for row in d.u)


class TestCriticalPolynomial:
    def test_orthogonal_foot_on_a_line(self):
        u = DataPoint(u=((F(0), F(5)),))
        g = critical_polynomial(line_in_p3(), Arrangement((axis_camera(),)), u)
        # distance^2 = t^2 + 25, so the derivative numerator is c * t
        assert g.degree == 1
        assert g.coeffs[0] == 0

    def test_twisted_cubic_degree_seven(self):
        arr = generic_arrangement(11, 1, 2, 3)
        g = critical_polynomial(twisted_cubic(), arr, random_data_point(1, 1, 2))
        assert g.degree == 7

    def test_exact_image_data_is_a_root(self):
        f = twisted_cubic()
        arr = generic_arrangement(23, 2, 2, 3)
        t0 = F(1, 2)
        g = critical_polynomial(f, arr, image_of(f, arr, t0))
        assert g.evaluate(t0) == 0

    def test_curve_at_infinity_rejected(self):
        f = RationalCurve(N=3, e=2, coords=(
            H(2, 0, 0, 1), H(2, 0, 1, 0), H(2, 1, 0, 0), HomPoly2(2)))
        cam = Camera(2, 3, ((F(0), F(0), F(0), F(1)),
                            (F(1), F(0), F(0), F(0)),
                            (F(0), F(1), F(0), F(0))))
        with pytest.raises(ValueError, match="curve at infinity of camera 0"):
            critical_polynomial(f, Arrangement((cam,)), DataPoint(u=((0, 0),)))

    def test_degree_bound_random_instances(self):
        rng = random.Random(31)
        for _ in range(10):
            e = rng.randint(1, 3)
            n = rng.randint(1, 2)
            h = rng.choice((2, 3))
            N = max(e, h)
            f = random_curve(rng.randint(0, 10**6), e, N)
            arr = generic_arrangement(rng.randint(0, 10**6), n, h, N)
            g = critical_polynomial(f, arr, random_data_point(rng.randint(0, 10**6), n, h))
            assert g.degree <= 3 * e * n - 2


class TestEdDegreeAffine:
    def test_line_against_camera_count(self):
        expected = {1: 1, 2: 4, 3: 7, 4: 10}
        for n, want in expected.items():
            arr = generic_arrangement(100, n, 2, 3)
            rep = ed_degree_affine(line_in_p3(), arr, 1)
            assert rep.ed_degree == want
            assert rep.formula_match is True

    def test_twisted_cubic_single_camera(self):
        rep = ed_degree_affine(twisted_cubic(), generic_arrangement(11, 1, 2, 3), 5)
        assert rep.ed_degree == 7
        assert rep.critical_poly_degree == 7
        assert rep.certificate.passes
        assert rep.stable
        assert rep.seeds == (5, 6)

    def test_cuspidal_cubic(self):
        arr = Arrangement((random_camera(1234, 2, 2),))
        rep = ed_degree_affine(cuspidal_cubic(), arr, 3)
        assert rep.ed_degree == 6
        assert rep.removed_immersion_factors >= 1
        assert not rep.certificate.immersion_ok

    def test_chart_degree_drop_family(self):
        # one constrained camera keeps the generic count; two of them share a
        # zero at infinity and the count drops below 3en-2
        tw = twisted_cubic()
        one = Arrangement((random_camera_degree_drop(900),))
        two = Arrangement((random_camera_degree_drop(900),
                           random_camera_degree_drop(901)))
        rep1 = ed_degree_affine(tw, one, 3)
        rep2 = ed_degree_affine(tw, two, 3)
        assert rep1.ed_degree == 7
        assert rep2.ed_degree == 13
        assert rep2.formula_value == 16 and rep2.formula_match is False
        assert not rep2.certificate.passes

    def test_block_camera_family(self):
        f5 = rational_normal_curve(5, 5)
        rep = ed_degree_affine(f5, Arrangement((random_camera_block_pairs(17),)), 2)
        assert rep.ed_degree == 9
        assert rep.formula_value == 13 and rep.formula_match is False

    def test_two_routes_agree_on_explicit_integer_cameras(self):
        # a fixed non-random arrangement: the direct count and the
        # Euler-characteristic balance must return the same number
        tw = twisted_cubic()
        c1 = Camera(2, 3, ((F(2), F(0), F(0), F(1)),
                           (F(3), F(0), F(1), F(0)),
                           (F(5), F(1), F(0), F(0))))
        c2 = Camera(2, 3, ((F(7), F(0), F(0), F(1)),
                           (F(11), F(0), F(1), F(0)),
                           (F(13), F(1), F(0), F(0))))
        arr = Arrangement((c1, c2))
        rep = ed_degree_affine(tw, arr, 7)
        assert rep.certificate.passes
        assert rep.ed_degree == euler_cross_check(tw, arr, 7)

    def test_h1_needs_explicit_override(self):
        tw = twisted_cubic()
        arr = Arrangement((random_camera(42, 1, 3),))
        with pytest.raises(ValueError, match="allow_h1"):
            ed_degree_affine(tw, arr, 5)
        rep = ed_degree_affine(tw, arr, 5, allow_h1=True)
        # parameter-side count: 3 preimages of the data value plus 2e-2
        # ramification parameters; the closed-form comparison is switched off
        # because the projection to the line is e:1, not injective
        assert rep.ed_degree == 7
        assert rep.formula_match is None

    def test_unstable_data_raises(self):
        # parabola image (t, t^2): the axis point (0, 1/2) is equidistant-
        # degenerate (the critical polynomial collapses to c*t^3), while
        # generic data sees three critical points
        conic = rational_normal_curve(2, 2)
        cam = Camera(2, 2, ((F(0), F(0), F(1)),
                            (F(0), F(1), F(0)),
                            (F(1), F(0), F(0))))
        arr = Arrangement((cam,))
        bad = DataPoint(u=((F(0), F(1, 2)),))
        good = random_data_point(0, 1, 2)
        with pytest.raises(DataInstabilityError, match="data not generic; reseed"):
            ed_degree_affine(conic, arr, 0, data_points=(bad, good))

    def test_explicit_data_needs_exactly_two(self):
        with pytest.raises(ValueError, match="exactly two"):
            ed_degree_affine(twisted_cubic(), generic_arrangement(11, 1, 2, 3), 0,
                             data_points=(random_data_point(0, 1, 2),))

    def test_report_serialization(self):
        rep = ed_degree_affine(twisted_cubic(), generic_arrangement(11, 1, 2, 3), 5)
        d = rep.to_json_dict()
        assert d["ed_degree"] == 7
        assert d["certificate"]["passes"] is True
        assert d["seeds"] == [5, 6]

    def test_formula_law_small_grid(self):
        rng = random.Random(77)
        for e in (1, 2, 3):
            for n in (1, 2):
                for h in (2, 3):
                    N = max(e, h)
                    f = random_curve(rng.randint(0, 10**6), e, N)
                    arr = generic_arrangement(rng.randint(0, 10**6), n, h, N)
                    rep = ed_degree_affine(f, arr, rng.randint(0, 10**6))
                    if rep.certificate.passes:
                        assert rep.ed_degree == 3 * e * n - 2, (e, n, h)

    def test_family_counts_are_linear_in_camera_number(self):
        # counts at n = 1, 2 fix the whole line; measure n = 3 and compare
        tw = twisted_cubic()

        def count(family, n):
            cams = tuple(family(950 + i) for i in range(n))
            return ed_degree_affine(tw, Arrangement(cams), 3).ed_degree

        for family in (lambda s: random_camera(s, 2, 3), random_camera_degree_drop):
            c1, c2 = count(family, 1), count(family, 2)
            predicted = c1 + 2 * (c2 - c1)
            assert count(family, 3) == predicted


class TestEulerCrossCheck:
    def test_twisted_cubic(self):
        assert euler_cross_check(twisted_cubic(), generic_arrangement(11, 1, 2, 3), 5) == 7

    def test_line_two_cameras(self):
        assert euler_cross_check(line_in_p3(), generic_arrangement(100, 2, 2, 3), 1) == 4

    def test_matches_direct_count_on_random_quadric(self):
        f = random_curve(404, 2, 4)
        arr = generic_arrangement(505, 2, 2, 4)
        value = euler_cross_check(f, arr, 9)
        assert value == 10
        assert value == ed_degree_affine(f, arr, 9).ed_degree

    def test_refuses_cusps(self):
        arr = Arrangement((random_camera(1234, 2, 2),))
        with pytest.raises(CuspError, match="cross-check requires immersion"):
            euler_cross_check(cuspidal_cubic(), arr, 0)


class TestProjectiveSmoothCurve:
    def test_monomial_curves(self):
        for e in range(1, 6):
            assert projective_ed_degree_smooth_curve(
                rational_normal_curve(e, e)) == 3 * e - 2

    def test_padded_line(self):
        assert projective_ed_degree_smooth_curve(line_in_p3()) == 1

    def test_refuses_cusp(self):
        with pytest.raises(CuspError):
            projective_ed_degree_smooth_curve(cuspidal_cubic())


class TestAlgebraicLaws:
    def test_wronskian_degree_drop(self):
        rng = random.Random(13)
        for e in range(1, 9):
            for _ in range(5):
                p = UniPoly(tuple(F(rng.randint(-9, 9)) for _ in range(e))
                            + (F(rng.randint(1, 9)),))
                q = UniPoly(tuple(F(rng.randint(-9, 9)) for _ in range(e))
                            + (F(rng.randint(1, 9)),))
                w = p.derivative() * q - p * q.derivative()
                assert w.is_zero or w.degree <= 2 * e - 2

    def test_reduction_bookkeeping(self):
        f = cuspidal_cubic()
        arr = Arrangement((random_camera(1234, 2, 2),))
        rc = reduce_critical_polynomial(f, arr, random_data_point(3, 1, 2))
        assert rc.raw.degree == 7
        assert rc.reduced.degree == 6
        assert rc.removed_immersion_factors == 1


class TestTriangulate:
    def test_orthogonal_foot(self):
        u = DataPoint(u=((F(0), F(5)),))
        res = triangulate(line_in_p3(), Arrangement((axis_camera(),)),
                          u, F(1, 1000))
        assert not res.no_finite_minimizer
        assert len(res.critical_parameters) == 1
        iv = res.critical_parameters[0]
        assert iv.lo <= 0 <= iv.hi
        assert F(25) <= res.distances[0] <= F(25) + F(1, 10**5)
        assert res.min_lower_bound <= 25

    def test_zero_distance_at_known_parameter(self):
        f = twisted_cubic()
        arr = generic_arrangement(23, 2, 2, 3)
        t0 = F(1, 2)
        res = triangulate(f, arr, image_of(f, arr, t0), F(1, 512))
        best = res.critical_parameters[res.argmin_index]
        assert best.lo <= t0 <= best.hi
        d = res.distances[res.argmin_index]
        err = res.distance_error_bounds[res.argmin_index]
        assert 0 <= d <= err
        assert res.min_lower_bound <= 0

    def test_argmin_beats_dense_grid(self):
        f = twisted_cubic()
        arr = generic_arrangement(11, 1, 2, 3)
        u = random_data_point(8, 1, 2)
        res = triangulate(f, arr, u, F(1, 1024))
        n_real = len(res.critical_parameters)
        assert 1 <= n_real <= 7
        d_best = res.distances[res.argmin_index]
        err = res.distance_error_bounds[res.argmin_index]
        img = apply_camera(arr.cameras[0], f)
        q = img[0].dehom()
        for k in range(1000):
            t = F(k - 500, 100)  # -5.00 .. 4.99 in steps of 1/100
            if q.evaluate(t) == 0:
                continue
            assert d_best - err <= exact_distance(f, arr, u, t)

    def test_widths_respected_and_world_point(self):
        f = twisted_cubic()
        arr = generic_arrangement(11, 1, 2, 3)
        res = triangulate(f, arr, random_data_point(8, 1, 2), F(1, 4096))
        for iv in res.critical_parameters:
            assert iv.hi - iv.lo <= F(1, 4096)
        assert res.world_point is not None
        assert len(res.world_point) == 4
        assert len(res.image_blocks) == 1 and len(res.image_blocks[0]) == 2

    def test_distances_sorted_consistently(self):
        f = twisted_cubic()
        arr = generic_arrangement(11, 1, 2, 3)
        res = triangulate(f, arr, random_data_point(12, 1, 2), F(1, 1024))
        d_best = res.distances[res.argmin_index]
        assert all(d_best <= d for d in res.distances)
        params = [iv.lo for iv in res.critical_parameters]
        assert params == sorted(params)

    def test_json_shape(self):
        f = twisted_cubic()
        arr = generic_arrangement(11, 1, 2, 3)
        res = triangulate(f, arr, random_data_point(8, 1, 2), F(1, 1024))
        d = res.to_json_dict()
        assert d["no_finite_minimizer"] is False
        assert len(d["critical_parameters"]) == len(res.critical_parameters)
        assert isinstance(d["distances"][0], str)
