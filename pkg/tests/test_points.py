"""Unit tests for points and the group law."""

import random
from fractions import Fraction

import pytest

from weierstrass.curve import VariableChange, WeierstrassCurve
from weierstrass.exceptions import (
    DegenerateTangent,
    DomainError,
    InfiniteField,
    SamplingExhausted,
    SingularPoint,
)
from weierstrass.fields import FieldSpec, prime_field
from weierstrass.points import (
    AffinePoint,
    GroupStructure,
    ZeroPoint,
    add,
    add_x,
    add_y,
    add_y_prime,
    addition_table,
    enumerate_points,
    group_structure,
    map_point,
    neg,
    neg_y,
    point_order,
    sample_point,
    slope,
    smul,
)
from weierstrass.verification import (
    group_law_scan,
    hasse_bound,
    hasse_scan,
    scan_curves,
    variable_change_scan,
)


class TestPoints:
    """Tests for point construction and negation."""

    def test_affine_point_checks_curve(self, curve_qq, qq):
        with pytest.raises(SingularPoint):
            AffinePoint(curve_qq, qq(2), qq(1))

    def test_singular_point_rejected(self, qq):
        cusp = WeierstrassCurve.of(qq, [0] * 5)
        with pytest.raises(SingularPoint):
            AffinePoint(cusp, qq(0), qq(0))

    def test_neg_zero(self, curve_qq):
        zero = ZeroPoint(curve_qq)
        assert neg(curve_qq, zero) == zero

    def test_neg_rational(self, curve_qq, qq):
        """sigma_0(0) = -0 - (0 + 1) = -1."""
        assert neg(curve_qq, AffinePoint(curve_qq, qq(0), qq(0))) == AffinePoint(curve_qq, qq(0), qq(-1))

    def test_neg_gf2(self, curve_gf2, gf2):
        assert -AffinePoint(curve_gf2, gf2(0), gf2(0)) == AffinePoint(curve_gf2, gf2(0), gf2(1))

    def test_neg_y(self, curve_qq, qq):
        assert neg_y(curve_qq, qq(1), qq(0)) == qq(-1)

    def test_str(self, curve_gf5, gf5):
        assert str(AffinePoint(curve_gf5, gf5(0), gf5(1))) == "(0, 1)"
        assert str(ZeroPoint(curve_gf5)) == "O"


class TestSlope:
    """Tests for the slope of the chord or tangent."""

    def test_secant_horizontal(self, curve_qq, qq):
        assert slope(curve_qq, qq(0), qq(1), qq(0), qq(0)) == qq(0)

    def test_tangent_gf5(self, curve_gf5, gf5):
        """(3*0 + 0 + 1 - 0) / (1 - (-1)) = 1/2 = 3."""
        assert slope(curve_gf5, gf5(0), gf5(0), gf5(1), gf5(1)) == gf5(3)

    def test_vertical_is_zero(self, curve_gf5, gf5):
        assert slope(curve_gf5, gf5(0), gf5(0), gf5(1), gf5(4)) == gf5(0)

    def test_degenerate_tangent(self, qq):
        """Off the curve, a vanishing tangent denominator is an error, not a junk value."""
        curve = WeierstrassCurve.of(qq, [0, 0, 0, 1, 1])
        with pytest.raises(DegenerateTangent):
            slope(curve, qq(0), qq(0), qq(0), qq(5))


class TestAddition:
    """Tests for the addition law."""

    def test_zero_is_identity(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        zero = ZeroPoint(curve_gf5)
        assert add(curve_gf5, zero, p) == p
        assert add(curve_gf5, p, zero) == p

    def test_rational_secant(self, curve_qq, qq):
        """(0, 0) + (1, 0) = (-1, -1)."""
        p = AffinePoint(curve_qq, qq(0), qq(0))
        q = AffinePoint(curve_qq, qq(1), qq(0))
        assert p + q == AffinePoint(curve_qq, qq(-1), qq(-1))

    def test_doubling_gf5(self, curve_gf5, gf5):
        """(0, 1) + (0, 1) = (4, 2)."""
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert add(curve_gf5, p, p) == AffinePoint(curve_gf5, gf5(4), gf5(2))

    def test_vertical_gives_zero(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(2), gf5(1))
        assert (p + neg(curve_gf5, p)).is_zero

    def test_add_components(self, curve_qq, qq):
        x1, x2, ell = qq(0), qq(1), qq(0)
        assert add_x(curve_qq, x1, x2, ell) == qq(-1)
        assert add_y_prime(curve_qq, x1, x2, qq(0), ell) == qq(0)
        assert add_y(curve_qq, x1, x2, qq(0), ell) == qq(-1)

    def test_rational_multiples(self, curve_qq, qq):
        """Multiples of (0, 0) on a rank-one curve stay on the curve with growing heights."""
        p = AffinePoint(curve_qq, qq(0), qq(0))
        q = smul(5, p)
        assert not q.is_zero
        assert curve_qq.nonsingular(q.x, q.y)
        assert q.x == qq(Fraction(1, 4))
        assert smul(5, p) - smul(3, p) == smul(2, p)

    def test_subtraction_and_operators(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert 2 * p == p * 2 == p + p
        assert (p - p).is_zero


class TestScalarMultiplication:
    """Tests for n * P."""

    def test_one(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(2), gf5(1))
        assert smul(1, p) == p
        assert smul(0, p).is_zero

    def test_double(self, curve_gf5, gf5):
        assert smul(2, AffinePoint(curve_gf5, gf5(0), gf5(1))) == AffinePoint(curve_gf5, gf5(4), gf5(2))

    def test_order_three(self, curve_gf2, gf2):
        assert smul(3, AffinePoint(curve_gf2, gf2(0), gf2(0))).is_zero

    def test_negative(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert smul(-2, p) == neg(curve_gf5, smul(2, p))

    @pytest.mark.parametrize("m,n", [(2, 3), (4, 5), (7, 11), (-3, 8)])
    def test_distributes(self, curve_gf5, gf5, m, n):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert smul(m + n, p) == smul(m, p) + smul(n, p)


class TestEnumeration:
    """Tests for point enumeration and group structure."""

    def test_gf2_points(self, curve_gf2, gf2):
        points = enumerate_points(curve_gf2)
        assert points == [ZeroPoint(curve_gf2), AffinePoint(curve_gf2, gf2(0), gf2(0)),
                          AffinePoint(curve_gf2, gf2(0), gf2(1))]

    def test_gf5_points(self, curve_gf5):
        assert len(enumerate_points(curve_gf5)) == 9

    def test_no_affine_points(self, gf2):
        """Y^2 + Y = X^3 + X + 1 has no points over GF(2)."""
        curve = WeierstrassCurve.of(gf2, [0, 0, 1, 1, 1])
        assert enumerate_points(curve) == [ZeroPoint(curve)]
        assert group_structure(curve) == GroupStructure(1, (1, 1))

    def test_gf2_structure(self, curve_gf2):
        gs = group_structure(curve_gf2)
        assert gs.order == 3
        assert gs.invariant_factors == (1, 3)
        assert gs.is_cyclic

    def test_gf5_structure(self, curve_gf5):
        gs = group_structure(curve_gf5)
        assert gs.order == 9
        assert gs.invariant_factors == (1, 9)
        assert gs.exponent == 9

    def test_non_cyclic(self):
        """Y^2 = X^3 - X over GF(7) has full 2-torsion: Z/2 x Z/4."""
        gf7 = prime_field(7)
        gs = group_structure(WeierstrassCurve.of(gf7, [0, 0, 0, -1, 0]))
        assert gs.order == 8
        assert gs.invariant_factors == (2, 4)
        assert not gs.is_cyclic

    def test_point_order(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert point_order(p) == 9
        assert point_order(p, 9) == 9
        assert point_order(ZeroPoint(curve_gf5)) == 1

    def test_point_order_wrong_group_order(self, curve_gf5, gf5):
        with pytest.raises(DomainError):
            point_order(AffinePoint(curve_gf5, gf5(0), gf5(1)), 4)

    def test_point_order_over_rationals(self, curve_qq, qq):
        """(0, 0) on the rank-one curve has infinite order."""
        with pytest.raises(InfiniteField):
            point_order(AffinePoint(curve_qq, qq(0), qq(0)))
        assert point_order(ZeroPoint(curve_qq), 1) == 1

    def test_point_order_walk_matches_group_order(self):
        gf7 = prime_field(7)
        curve = WeierstrassCurve.of(gf7, [0, 0, 0, -1, 0])
        order = len(enumerate_points(curve))
        for p in enumerate_points(curve):
            assert point_order(p) == point_order(p, order)

    def test_addition_table(self, curve_gf2):
        points = enumerate_points(curve_gf2)
        table = addition_table(points)
        assert table[(1, 1)] == 2
        assert table[(1, 2)] == 0

    def test_singular_curve_nonsingular_points(self, gf5):
        """The nonsingular points of a nodal cubic still form a group."""
        node = WeierstrassCurve.of(gf5, [0, 1, 0, 0, 0])
        assert not node.is_elliptic
        points = enumerate_points(node)
        assert all(p.is_zero or node.nonsingular(p.x, p.y) for p in points)
        addition_table(points)


class TestMapPoint:
    """Tests for carrying points across a variable change."""

    def test_identity(self, curve_gf5, gf5):
        p = AffinePoint(curve_gf5, gf5(0), gf5(1))
        assert map_point(curve_gf5, VariableChange.identity(gf5), p) == p

    def test_scaling(self, qq):
        """(1, 0) on Y^2 = X^3 - X goes to (1/4, 0) under u = 2."""
        curve = WeierstrassCurve.of(qq, [0, 0, 0, -1, 0])
        image = map_point(curve, VariableChange.of(qq, u=2), AffinePoint(curve, qq(1), qq(0)))
        assert (image.x, image.y) == (qq(Fraction(1, 4)), qq(0))
        assert image.curve == WeierstrassCurve.of(qq, [0, 0, 0, Fraction(-1, 16), 0])

    def test_zero(self, curve_gf5, gf5):
        change = VariableChange.of(gf5, 2, 1, 3, 4)
        assert map_point(curve_gf5, change, ZeroPoint(curve_gf5)).is_zero

    def test_homomorphism(self, curve_qq, qq):
        change = VariableChange.of(qq, 3, -1, Fraction(1, 2), 7)
        p = AffinePoint(curve_qq, qq(0), qq(0))
        q = AffinePoint(curve_qq, qq(1), qq(0))
        assert map_point(curve_qq, change, p + q) == map_point(curve_qq, change, p) + map_point(curve_qq, change, q)


class TestSampling:
    """Tests for random point sampling."""

    def test_sample_on_curve(self, curve_gf5):
        p = sample_point(curve_gf5, random.Random(5))
        assert curve_gf5.nonsingular(p.x, p.y)

    def test_sample_large_prime(self):
        gf = prime_field(2 ** 31 - 1)
        curve = WeierstrassCurve.of(gf, [1, 2, 3, 4, 5])
        p = sample_point(curve, random.Random(11))
        assert curve.nonsingular(p.x, p.y)

    def test_sample_extension(self, gf4):
        curve = WeierstrassCurve.of(gf4, [1, 0, 0, 0, 1])
        p = sample_point(curve, random.Random(2))
        assert curve.nonsingular(p.x, p.y)

    def test_exhausted(self, gf2):
        curve = WeierstrassCurve.of(gf2, [0, 0, 1, 1, 1])
        with pytest.raises(SamplingExhausted):
            sample_point(curve, random.Random(0), retries=8)

    def test_deterministic(self, curve_gf5):
        assert sample_point(curve_gf5, random.Random(9)) == sample_point(curve_gf5, random.Random(9))


class TestGroupLawScans:
    """Exhaustive group-law, isomorphism and Hasse scans."""

    @pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.extension(2, 2)])
    def test_group_law(self, spec):
        result = group_law_scan(spec)
        assert result.passed, result.examples
        assert result.curves == (spec.p ** spec.k) ** 5

    @pytest.mark.slow
    def test_group_law_gf5(self):
        assert group_law_scan(FieldSpec.prime(5), workers=2).passed

    def test_group_law_gf8_sampled(self):
        result = scan_curves("group_law", FieldSpec.extension(2, 3), stride=97)
        assert result.passed, result.examples
        assert result.curves == (8 ** 5 + 96) // 97

    @pytest.mark.slow
    def test_group_law_gf16_sampled(self):
        result = scan_curves("group_law", FieldSpec.extension(2, 4), workers=2, stride=4099)
        assert result.passed, result.examples

    def test_variable_change_gf8_sampled(self):
        result = variable_change_scan(FieldSpec.extension(2, 3), stride=4099)
        assert result.passed, result.examples

    @pytest.mark.slow
    def test_variable_change_gf16_sampled(self):
        result = variable_change_scan(FieldSpec.extension(2, 4), workers=2, stride=524288)
        assert result.passed, result.examples
        assert result.curves == 2

    @pytest.mark.parametrize("spec,stride", [(FieldSpec.prime(2), 1), (FieldSpec.prime(3), 9)])
    def test_isomorphism(self, spec, stride):
        result = variable_change_scan(spec, map_points=True, stride=stride)
        assert result.passed, result.examples

    @pytest.mark.slow
    def test_isomorphism_gf4(self):
        assert variable_change_scan(FieldSpec.extension(2, 2), map_points=True, workers=2).passed

    @pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.prime(3),
                                      FieldSpec.extension(2, 2), FieldSpec.prime(5)])
    def test_hasse(self, spec):
        assert hasse_scan(spec).passed

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", [FieldSpec.prime(7), FieldSpec.extension(2, 3),
                                      FieldSpec.extension(3, 2), FieldSpec.prime(11)])
    def test_hasse_larger_fields(self, spec):
        assert hasse_scan(spec, workers=2, stride=7).passed

    @pytest.mark.parametrize("q,bound", [(2, 2), (5, 4), (9, 6), (101, 20)])
    def test_hasse_bound(self, q, bound):
        assert hasse_bound(q) == bound
