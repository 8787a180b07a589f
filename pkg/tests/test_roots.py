import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahlerlat.intpoly import LEHMER, IntPoly
from mahlerlat.roots import (
    ON_CIRCLE,
    OUTSIDE,
    REAL,
    count_inside_unit_disk,
    count_on_unit_circle,
    count_real_outside,
    count_real_roots,
    refine_roots,
)


def bisect_root(p, lo, hi, iters=100):
    """Independent oracle: plain bisection for a sign change of p on [lo, hi]."""
    flo = p(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fmid = p(mid)
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


class TestInsideCount:
    def test_golden(self):
        assert count_inside_unit_disk(IntPoly.of(-1, -1, 1)) == 1

    def test_cyclotomic(self):
        assert count_inside_unit_disk(IntPoly.of(1, -1, 1)) == 0

    def test_lehmer(self):
        assert count_inside_unit_disk(LEHMER) == 1

    def test_root_at_zero(self):
        assert count_inside_unit_disk(IntPoly.of(0, 0, 1)) == 2

    def test_multiplicity(self):
        p = IntPoly.of(-1, -1, 1) ** 2
        assert count_inside_unit_disk(p) == 2


class TestCircleCount:
    def test_cyclotomic(self):
        assert count_on_unit_circle(IntPoly.of(1, -1, 1)) == 2

    def test_golden_square(self):
        assert count_on_unit_circle(IntPoly.of(1, -3, 1)) == 0

    def test_lehmer(self):
        assert count_on_unit_circle(LEHMER) == 8

    def test_roots_at_pm_one(self):
        assert count_on_unit_circle(IntPoly.of(-1, 0, 1)) == 2

    def test_scaling_invariance(self):
        p = IntPoly.of(1, -1, 1)
        assert count_on_unit_circle(3 * p) == 2


class TestRealOutside:
    def test_golden_square(self):
        assert count_real_outside(IntPoly.of(1, -3, 1)) == 1

    def test_no_real_roots(self):
        assert count_real_outside(IntPoly.of(1, 0, 1)) == 0

    def test_lehmer(self):
        assert count_real_outside(LEHMER) == 1

    def test_pm_one_excluded(self):
        assert count_real_outside(IntPoly.of(-1, 0, 1)) == 0


class TestSturm:
    def test_simple_interval(self):
        # x^2 - 2: roots +/- sqrt(2)
        p = IntPoly.of(-2, 0, 1)
        assert count_real_roots(p) == 2
        assert count_real_roots(p, 0, 2) == 1
        assert count_real_roots(p, -2, 0) == 1


class TestRefineRoots:
    def test_golden_square_values(self):
        profile = refine_roots(IntPoly.of(1, -3, 1), 1e-12)
        values = sorted(z.approx.real for z in profile.roots)
        assert abs(values[0] - 0.3819660113) < 1e-9
        assert abs(values[1] - 2.6180339887) < 1e-9
        assert all(z.radius < 1e-12 for z in profile.roots)

    def test_salem_quartic_largest_root(self):
        p = IntPoly.of(1, -1, -1, -1, 1)
        expected = bisect_root(p, 1.5, 2.0)
        profile = refine_roots(p)
        largest = max(abs(z.approx) for z in profile.roots)
        assert abs(largest - expected) < 1e-9

    def test_lehmer_largest_root(self):
        profile = refine_roots(LEHMER)
        largest = max(abs(z.approx) for z in profile.roots)
        assert abs(largest - 1.17628082) < 1e-7

    def test_ordering_convention(self):
        profile = refine_roots(LEHMER)
        assert profile.roots[0].location == OUTSIDE
        assert profile.roots[0].realness == REAL
        assert all(z.location == ON_CIRCLE for z in profile.roots[1:9])
        assert profile.roots[9].location == "inside"

    def test_counts_attached(self):
        profile = refine_roots(LEHMER)
        assert (profile.s, profile.r, profile.on_circle) == (1, 1, 8)
        assert profile.inside == 1


@st.composite
def monic_polys(draw, max_degree=8, height=2):
    degree = draw(st.integers(1, max_degree))
    lower = draw(st.lists(st.integers(-height, height), min_size=degree, max_size=degree))
    return IntPoly(tuple(lower) + (1,))


class TestProfileInvariants:
    @given(monic_polys(max_degree=8, height=2))
    @settings(max_examples=150, deadline=None)
    def test_partition_of_degree(self, p):
        inside = count_inside_unit_disk(p)
        on = count_on_unit_circle(p)
        out = p.degree - inside - on
        assert inside >= 0 and on >= 0 and out >= 0
        profile = refine_roots(p, 1e-10)
        assert profile.s == out
        assert profile.on_circle == on
        assert count_real_outside(p) == profile.r
        assert profile.r <= profile.s

    @given(st.lists(st.integers(-2, 2), min_size=1, max_size=5))
    @settings(max_examples=100, deadline=None)
    def test_palindromic_mirror(self, interior):
        p = IntPoly((1,) + tuple(interior) + tuple(reversed(interior[:-1])) + (1,))
        profile = refine_roots(p, 1e-10)
        assert profile.inside == profile.s
        outside = sorted(
            abs(1 / z.approx) for z in profile.roots if z.location == OUTSIDE
        )
        inside = sorted(abs(z.approx) for z in profile.roots if z.location == "inside")
        for a, b in zip(outside, inside):
            assert abs(a - b) < 1e-7

    @given(monic_polys(max_degree=6, height=2))
    @settings(max_examples=100, deadline=None)
    def test_conjugation_closure(self, p):
        profile = refine_roots(p, 1e-10)
        upper = sorted(
            (z.approx.real, z.approx.imag)
            for z in profile.roots
            if z.realness == "nonreal_upper"
        )
        lower = sorted(
            (z.approx.real, -z.approx.imag)
            for z in profile.roots
            if z.realness == "nonreal_lower"
        )
        assert len(upper) == len(lower)
        for (ar, ai), (br, bi) in zip(upper, lower):
            assert math.hypot(ar - br, ai - bi) < 1e-7


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        count_inside_unit_disk(IntPoly())
