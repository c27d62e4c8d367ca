"""Core geometry: Minkowski pairing, model conversions, distances."""

import math

import numpy as np
import pytest

from threeterm.errors import DegenerateError, DomainError
from threeterm.models import (
    BoundaryPoint,
    DiskPoint,
    Geodesic,
    HyperboloidPoint,
    LightConePoint,
    MinkowskiVec,
    UhpPoint,
    cayley_disk_to_uhp,
    cayley_uhp_to_disk,
    disk_to_hyperboloid,
    geodesic_ideal_endpoints,
    hyp_distance_crossratio,
    hyp_distance_hyperboloid,
    hyperboloid_to_disk,
    lightcone_to_boundary,
    mink_pair,
)


def lift_uhp(w: UhpPoint) -> HyperboloidPoint:
    """Independent route to the hyperboloid: Cayley to the disk, then lift."""
    return disk_to_hyperboloid(cayley_uhp_to_disk(w))


def arccosh_oracle(w1: UhpPoint, w2: UhpPoint) -> float:
    """Textbook half-plane distance: cosh d = 1 + |w1-w2|^2 / (2 y1 y2)."""
    dx, dy = w1.re - w2.re, w1.im - w2.im
    return math.acosh(1.0 + (dx * dx + dy * dy) / (2.0 * w1.im * w2.im))


class TestMinkPair:
    def test_hyperboloid_normalization(self):
        assert mink_pair(MinkowskiVec(0, 0, 1), MinkowskiVec(0, 0, 1)) == -1.0

    def test_lightcone_vector(self):
        assert mink_pair(MinkowskiVec(1, 0, 1), MinkowskiVec(1, 0, 1)) == 0.0

    def test_mixed(self):
        # 1*0 + 0*1 - 1*1
        assert mink_pair(MinkowskiVec(1, 0, 1), MinkowskiVec(0, 1, 1)) == -1.0

    def test_symmetric_and_bilinear(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            u, v, w = (MinkowskiVec(*rng.uniform(-5, 5, size=3)) for _ in range(3))
            s = rng.uniform(-3, 3)
            assert mink_pair(u, v) == mink_pair(v, u)
            lhs = mink_pair(MinkowskiVec(u.x + s * v.x, u.y + s * v.y, u.z + s * v.z), w)
            rhs = mink_pair(u, w) + s * mink_pair(v, w)
            assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            MinkowskiVec(math.nan, 0, 1)


class TestDiskHyperboloid:
    def test_origin_to_apex(self):
        v = disk_to_hyperboloid(DiskPoint(0, 0)).v
        assert (v.x, v.y, v.z) == (0.0, 0.0, 1.0)

    def test_half_point(self):
        v = disk_to_hyperboloid(DiskPoint(0.5, 0)).v
        assert abs(v.x - 4 / 3) < 1e-15
        assert v.y == 0.0
        assert abs(v.z - 5 / 3) < 1e-15
        assert abs(mink_pair(v, v) + 1.0) < 1e-12

    def test_outside_disk_rejected(self):
        with pytest.raises(DomainError):
            DiskPoint(1.0, 0.0)
        with pytest.raises(DomainError):
            DiskPoint(0.8, 0.7)

    def test_apex_to_origin(self):
        p = hyperboloid_to_disk(HyperboloidPoint(MinkowskiVec(0, 0, 1)))
        assert (p.x, p.y) == (0.0, 0.0)

    def test_inverse_of_half_point(self):
        p = hyperboloid_to_disk(HyperboloidPoint(MinkowskiVec(4 / 3, 0, 5 / 3)))
        assert abs(p.x - 0.5) < 1e-15 and p.y == 0.0

    def test_round_trip(self):
        rng = np.random.default_rng(11)
        for _ in range(1000):
            radius = math.sqrt(rng.uniform(0, 0.999**2))
            phi = rng.uniform(0, 2 * math.pi)
            p = DiskPoint(radius * math.cos(phi), radius * math.sin(phi))
            q = hyperboloid_to_disk(disk_to_hyperboloid(p))
            assert abs(q.x - p.x) < 1e-12 and abs(q.y - p.y) < 1e-12

    def test_range_is_open_disk(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            x, y = rng.uniform(-4, 4, size=2)
            z = math.sqrt(1 + x * x + y * y)
            p = hyperboloid_to_disk(HyperboloidPoint(MinkowskiVec(x, y, z)))
            assert p.x**2 + p.y**2 < 1.0

    def test_construction_tolerance(self):
        # slightly off the sheet: accepted and renormalized
        v = HyperboloidPoint(MinkowskiVec(4 / 3, 0, 5 / 3 * (1 + 1e-11))).v
        assert abs(mink_pair(v, v) + 1.0) < 1e-14
        with pytest.raises(DomainError):
            HyperboloidPoint(MinkowskiVec(4 / 3, 0, 5 / 3 * (1 + 1e-3)))
        with pytest.raises(DomainError):
            HyperboloidPoint(MinkowskiVec(0, 0, -1))


class TestLightCone:
    def test_boundary_projection(self):
        b = lightcone_to_boundary(LightConePoint(MinkowskiVec(3, 4, 5)))
        assert abs(b.theta - math.atan2(4, 3)) < 1e-15
        assert abs(b.xy()[0] - 0.6) < 1e-15 and abs(b.xy()[1] - 0.8) < 1e-15

    def test_scale_invariance(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            theta = rng.uniform(0, 2 * math.pi)
            z = rng.uniform(0.1, 10)
            s = rng.uniform(0.01, 100)
            u = MinkowskiVec(z * math.cos(theta), z * math.sin(theta), z)
            b1 = lightcone_to_boundary(LightConePoint(u))
            b2 = lightcone_to_boundary(LightConePoint(u.scaled(s)))
            assert abs(b1.theta - b2.theta) < 1e-12

    def test_unit_ray(self):
        assert lightcone_to_boundary(LightConePoint(MinkowskiVec(1, 0, 1))).theta == 0.0

    def test_rejects_off_cone(self):
        with pytest.raises(DomainError):
            LightConePoint(MinkowskiVec(1, 0, 2))
        with pytest.raises(DomainError):
            LightConePoint(MinkowskiVec(0, 0, 0))
        with pytest.raises(DomainError):
            LightConePoint(MinkowskiVec(-1, 0, -1))


class TestBoundaryPoint:
    def test_canonical_range(self):
        assert BoundaryPoint(2 * math.pi).theta == 0.0
        assert abs(BoundaryPoint(-math.pi / 2).theta - 3 * math.pi / 2) < 1e-15
        # float mod of a tiny negative must not land on 2*pi itself
        assert BoundaryPoint(-1e-20).theta < 2 * math.pi

    def test_equality_after_wrap(self):
        assert BoundaryPoint(0.5) == BoundaryPoint(0.5 + 2 * math.pi)


class TestCayley:
    def test_center_fixed(self):
        p = cayley_uhp_to_disk(UhpPoint(0, 1))
        assert abs(p.x) < 1e-15 and abs(p.y) < 1e-15

    def test_zero_to_minus_one(self):
        b = cayley_uhp_to_disk(UhpPoint(0, 0))
        assert isinstance(b, BoundaryPoint)
        assert abs(b.theta - math.pi) < 1e-15

    def test_infinity_to_one(self):
        b = cayley_uhp_to_disk(UhpPoint.infinity())
        assert isinstance(b, BoundaryPoint)
        assert b.theta == 0.0

    def test_disk_one_to_infinity(self):
        w = cayley_disk_to_uhp(BoundaryPoint(0.0))
        assert w.at_infinity

    def test_interior_round_trip(self):
        rng = np.random.default_rng(17)
        for _ in range(1000):
            w = UhpPoint(rng.uniform(-5, 5), rng.uniform(0.05, 5))
            p = cayley_uhp_to_disk(w)
            assert p.x**2 + p.y**2 < 1.0
            back = cayley_disk_to_uhp(p)
            assert abs(back.re - w.re) < 1e-12 and abs(back.im - w.im) < 1e-12

    def test_boundary_round_trip(self):
        rng = np.random.default_rng(18)
        for _ in range(100):
            b = BoundaryPoint(rng.uniform(0.01, 2 * math.pi - 0.01))
            w = cayley_disk_to_uhp(b)
            assert w.is_ideal and not w.at_infinity
            back = cayley_uhp_to_disk(w)
            assert abs(back.theta - b.theta) < 1e-12


class TestGeodesicEndpoints:
    def test_vertical(self):
        e1, e2 = geodesic_ideal_endpoints(UhpPoint(0, 1), UhpPoint(0, 2))
        assert (e1.re, e1.im) == (0.0, 0.0) and not e1.at_infinity
        assert e2.at_infinity

    def test_semicircle(self):
        e1, e2 = geodesic_ideal_endpoints(UhpPoint(-1, 1), UhpPoint(1, 1))
        assert abs(e1.re + math.sqrt(2)) < 1e-15
        assert abs(e2.re - math.sqrt(2)) < 1e-15

    def test_swap_reverses(self):
        w1, w2 = UhpPoint(0.3, 0.7), UhpPoint(-1.2, 2.5)
        a = geodesic_ideal_endpoints(w1, w2)
        b = geodesic_ideal_endpoints(w2, w1)
        assert abs(a[0].re - b[1].re) < 1e-12 and abs(a[1].re - b[0].re) < 1e-12

    def test_swap_reverses_vertical(self):
        a = geodesic_ideal_endpoints(UhpPoint(2, 1), UhpPoint(2, 5))
        b = geodesic_ideal_endpoints(UhpPoint(2, 5), UhpPoint(2, 1))
        assert a == (b[1], b[0])

    def test_coincident_rejected(self):
        with pytest.raises(DegenerateError):
            geodesic_ideal_endpoints(UhpPoint(1, 1), UhpPoint(1, 1))

    def test_ideal_input_rejected(self):
        with pytest.raises(DomainError):
            geodesic_ideal_endpoints(UhpPoint(0, 0), UhpPoint(0, 1))


class TestGeodesic:
    def test_distinct_endpoints_required(self):
        with pytest.raises(DegenerateError):
            Geodesic("disk", (BoundaryPoint(1.0), BoundaryPoint(1.0)))

    def test_model_tag_checked(self):
        with pytest.raises(DomainError):
            Geodesic("klein", (BoundaryPoint(0.0), BoundaryPoint(1.0)))


class TestDistances:
    def test_log_two(self):
        d = hyp_distance_crossratio(UhpPoint(0, 1), UhpPoint(0, 2))
        assert abs(d - math.log(2)) < 1e-12

    def test_coincident_rejected(self):
        with pytest.raises(DegenerateError):
            hyp_distance_crossratio(UhpPoint(2, 3), UhpPoint(2, 3))

    def test_nearly_coincident_is_nearly_zero(self):
        d = hyp_distance_crossratio(UhpPoint(0.5, 1.0), UhpPoint(0.5 + 1e-9, 1.0))
        assert 0.0 <= d < 1e-8

    def test_self_distance_on_hyperboloid(self):
        v = HyperboloidPoint(MinkowskiVec(4 / 3, 0, 5 / 3))
        assert hyp_distance_hyperboloid(v, v) == 0.0

    def test_apex_distance(self):
        apex = HyperboloidPoint(MinkowskiVec(0, 0, 1))
        v = HyperboloidPoint(MinkowskiVec(4 / 3, 0, 5 / 3))
        assert abs(hyp_distance_hyperboloid(apex, v) - math.acosh(5 / 3)) < 1e-12

    def test_pairing_domain_violation(self):
        apex = HyperboloidPoint(MinkowskiVec(0, 0, 1))
        with pytest.raises(DomainError):
            # forged object bypassing construction, pairing > -1
            bad = object.__new__(HyperboloidPoint)
            object.__setattr__(bad, "v", MinkowskiVec(0, 0, 0.5))
            hyp_distance_hyperboloid(apex, bad)

    def test_crossratio_matches_hyperboloid(self):
        rng = np.random.default_rng(19)
        for _ in range(1000):
            w1 = UhpPoint(rng.uniform(-3, 3), rng.uniform(0.1, 4))
            w2 = UhpPoint(rng.uniform(-3, 3), rng.uniform(0.1, 4))
            if w1 == w2:
                continue
            d1 = hyp_distance_crossratio(w1, w2)
            d2 = hyp_distance_hyperboloid(lift_uhp(w1), lift_uhp(w2))
            assert abs(d1 - d2) <= 1e-10 * max(d1, 1.0)

    def test_crossratio_matches_arccosh_oracle(self):
        rng = np.random.default_rng(20)
        for _ in range(1000):
            w1 = UhpPoint(rng.uniform(-3, 3), rng.uniform(0.1, 4))
            w2 = UhpPoint(rng.uniform(-3, 3), rng.uniform(0.1, 4))
            if w1 == w2:
                continue
            d1 = hyp_distance_crossratio(w1, w2)
            d2 = arccosh_oracle(w1, w2)
            assert abs(d1 - d2) <= 1e-10 * max(d2, 1.0)
