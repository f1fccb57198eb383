"""Unit tests for the coordinate ring, norms and Smith normal forms."""

import random

import pytest
import sympy

from weierstrass.coordring import (
    CoordinateRing,
    PolyMatrix2,
    coordinate_ring,
    crmul,
    mult_matrix,
    norm,
    norm_degree,
    quotient_dim,
    reduce,
    smith_decomposition,
    smith_normal_form,
)
from weierstrass.curve import WeierstrassCurve, random_curve
from weierstrass.exceptions import DomainError, SingularMatrix, ZeroElement
from weierstrass.fields import FieldSpec, make_field, prime_field
from weierstrass.poly import NEG_INF, BiPoly, UniPoly
from weierstrass.verification import ScanResult, check_norm_case, norm_scan

_X = sympy.symbols("X")


def to_sympy(poly: UniPoly) -> sympy.Poly:
    coeffs = [c.value for c in reversed(poly.coeffs)] or [0]
    return sympy.Poly(coeffs, _X, modulus=poly.field.characteristic)


@pytest.fixture
def ring(curve_gf5):
    return CoordinateRing(curve_gf5)


@pytest.fixture
def generic_ring():
    """A GF(7) curve with every coefficient nonzero."""
    return CoordinateRing(WeierstrassCurve.of(prime_field(7), [1, 2, 3, 4, 5]))


class TestReduction:
    """Tests for reduction modulo the curve polynomial."""

    def test_curve_polynomial_reduces_to_zero(self, ring, curve_gf5):
        assert ring.reduce(curve_gf5.polynomial).is_zero()

    def test_y_squared(self, generic_ring):
        curve = generic_ring.curve
        r = generic_ring.reduce(BiPoly.Y(curve.field) ** 2)
        assert r.p == curve.cubic
        assert r.q == -curve.linear

    def test_constant_in_y(self, ring, gf5):
        p = UniPoly(gf5, [1, 2, 3])
        assert ring.reduce(BiPoly.C(p)) == ring.element(p)

    def test_functional_api(self, curve_gf5, gf5):
        assert reduce(curve_gf5, BiPoly.C(UniPoly.one(gf5))) == coordinate_ring(curve_gf5).one


class TestMultiplication:
    """Tests for products of residues."""

    def test_y_times_y(self, generic_ring):
        y = generic_ring.y
        curve = generic_ring.curve
        assert generic_ring.mul(y, y) == generic_ring.element(curve.cubic, -curve.linear)

    def test_one_is_identity(self, generic_ring):
        f = generic_ring.element([1, 2], [3])
        assert f * generic_ring.one == f

    def test_agrees_with_reduce(self, generic_ring):
        rng = random.Random(1)
        for _ in range(20):
            f, g = generic_ring.random_element(rng), generic_ring.random_element(rng)
            assert f * g == generic_ring.reduce(f.lift() * g.lift())

    def test_ring_laws(self, generic_ring):
        rng = random.Random(2)
        f, g, h = (generic_ring.random_element(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero()

    def test_different_rings(self, ring, generic_ring):
        with pytest.raises(DomainError):
            ring.one + generic_ring.one

    def test_functional_api(self, curve_gf5):
        r = coordinate_ring(curve_gf5)
        assert crmul(curve_gf5, r.y, r.one) == r.y

    def test_to_dict_and_str(self, ring):
        f = ring.element([0, 1], [1])
        assert f.to_dict() == {"p": ["0", "1"], "q": ["1"]}
        assert str(f) == "(1*X) + (1)*Y"


class TestNorm:
    """Tests for the norm map F[W] -> F[X]."""

    def test_constant(self, ring, gf5):
        assert ring.norm(ring.element([3])) == UniPoly(gf5, [4])

    def test_y(self, generic_ring):
        assert generic_ring.norm(generic_ring.y) == -generic_ring.curve.cubic

    def test_x_plus_y(self, ring, gf5):
        """Nm(X + Y) = 4X^3 + X^2 + 4X + 4 over GF(5)."""
        assert ring.norm(ring.element([0, 1], [1])) == UniPoly(gf5, [4, 4, 1, 4])

    @pytest.mark.parametrize("p,q,degree", [
        ([], [1], 3),
        ([], [], NEG_INF),
        ([0, 1], [1], 3),
        ([1, 2, 3], [], 4),
        ([0, 0, 0, 1], [1, 1], 6),
        ([1], [0, 0, 1], 7),
    ])
    def test_degree_law(self, ring, p, q, degree):
        f = ring.element(p, q)
        assert ring.norm_degree(f) == degree
        assert ring.expected_norm_degree(f) == degree
        assert ring.norm_degree(f) != 1

    def test_multiplicative(self, generic_ring):
        rng = random.Random(3)
        for _ in range(20):
            f, g = generic_ring.random_element(rng), generic_ring.random_element(rng)
            assert generic_ring.norm(f * g) == generic_ring.norm(f) * generic_ring.norm(g)

    def test_matches_sympy_resultant(self, generic_ring):
        """Nm(p + qY) is the resultant in Y of p + qY and W, computed over Z and reduced mod 7."""
        y = sympy.symbols("Y")
        curve = generic_ring.curve

        def expr(poly: UniPoly):
            return sum(c.value * _X ** i for i, c in enumerate(poly.coeffs))

        f = generic_ring.element([2, 0, 1], [3, 1])
        w = y ** 2 + expr(curve.linear) * y - expr(curve.cubic)
        resultant = sympy.resultant(expr(f.p) + expr(f.q) * y, w, y)
        assert sympy.Poly(resultant, _X, modulus=7) == to_sympy(generic_ring.norm(f))

    @pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.extension(2, 2),
                                      FieldSpec.extension(2, 4), FieldSpec.prime(101)])
    def test_degree_is_never_one(self, spec):
        fld = make_field(spec)
        rng = random.Random(1729)
        for _ in range(300):
            ring = CoordinateRing(random_curve(fld, rng))
            f = ring.random_element(rng)
            assert ring.norm(f).degree != 1
            assert ring.norm_degree(f) == ring.expected_norm_degree(f)

    def test_functional_api(self, curve_gf5):
        r = coordinate_ring(curve_gf5)
        assert norm(curve_gf5, r.y) == -curve_gf5.cubic
        assert norm_degree(curve_gf5, r.y) == 3


class TestMultMatrix:
    """Tests for the matrix of multiplication on the basis {1, Y}."""

    def test_scalar(self, ring, gf5):
        x = UniPoly.x(gf5)
        assert ring.mult_matrix(ring.element(x)) == PolyMatrix2.diagonal(x, x)

    def test_y(self, generic_ring):
        curve = generic_ring.curve
        m = generic_ring.mult_matrix(generic_ring.y)
        zero, one = UniPoly.zero(curve.field), UniPoly.one(curve.field)
        assert m == PolyMatrix2.of_rows([[zero, curve.cubic], [one, -curve.linear]])

    def test_det_is_norm(self, generic_ring):
        rng = random.Random(4)
        for _ in range(20):
            f = generic_ring.random_element(rng)
            assert generic_ring.mult_matrix(f).det() == generic_ring.norm(f)

    def test_functional_api(self, curve_gf5):
        r = coordinate_ring(curve_gf5)
        assert mult_matrix(curve_gf5, r.one) == PolyMatrix2.identity(curve_gf5.field)

    def test_wrong_size(self, gf5):
        with pytest.raises(DomainError):
            PolyMatrix2(gf5, [UniPoly.one(gf5)] * 3)


class TestSmithNormalForm:
    """Tests for the 2x2 Smith normal form over F[X]."""

    def test_scalar_diagonal(self, gf5):
        x = UniPoly.x(gf5)
        assert smith_normal_form(PolyMatrix2.diagonal(x, x)) == (x, x)

    def test_anti_diagonal(self, gf5):
        zero, one, x = UniPoly.zero(gf5), UniPoly.one(gf5), UniPoly.x(gf5)
        assert smith_normal_form(PolyMatrix2.of_rows([[zero, one], [x, zero]])) == (one, x)

    def test_coprime_diagonal(self, gf5):
        """diag(X, X + 1) has invariant factors (1, X^2 + X)."""
        x = UniPoly.x(gf5)
        d1, d2 = smith_normal_form(PolyMatrix2.diagonal(x, x + 1))
        assert d1 == UniPoly.one(gf5)
        assert d2 == UniPoly(gf5, [0, 1, 1])

    def test_mult_matrix_of_y(self, generic_ring):
        d1, d2 = smith_normal_form(generic_ring.mult_matrix(generic_ring.y))
        assert d1 == UniPoly.one(generic_ring.field)
        assert d2 == generic_ring.curve.cubic

    def test_singular(self, gf5):
        with pytest.raises(SingularMatrix):
            smith_normal_form(PolyMatrix2.diagonal(UniPoly.x(gf5), UniPoly.zero(gf5)))

    def test_decomposition(self, generic_ring):
        rng = random.Random(5)
        for _ in range(20):
            f = generic_ring.random_element(rng)
            if f.is_zero():
                continue
            m = generic_ring.mult_matrix(f)
            form = smith_decomposition(m)
            assert form.left @ m @ form.right == PolyMatrix2.diagonal(form.d1, form.d2)
            assert form.d1 * form.d2 == m.det().scale(form.unit)

    def test_against_sympy_gcd(self, generic_ring):
        """d1 is the monic gcd of the entries and d1 d2 the monic determinant."""
        rng = random.Random(6)
        for _ in range(20):
            f = generic_ring.random_element(rng)
            if f.is_zero():
                continue
            m = generic_ring.mult_matrix(f)
            d1, d2 = smith_normal_form(m)
            entries = [to_sympy(e) for e in m.entries if not e.is_zero()]
            gcd = entries[0]
            for e in entries[1:]:
                gcd = gcd.gcd(e)
            assert to_sympy(d1) == gcd.monic()
            assert to_sympy(d1 * d2) == to_sympy(m.det()).monic()


class TestQuotientDimension:
    """Tests for dim F[W] / <f>."""

    def test_y(self, generic_ring):
        assert generic_ring.quotient_dim(generic_ring.y) == 3

    def test_unit(self, ring):
        assert ring.quotient_dim(ring.element([2])) == 0

    def test_x_plus_y(self, ring):
        assert ring.quotient_dim(ring.element([0, 1], [1])) == 3

    def test_zero(self, ring):
        with pytest.raises(ZeroElement):
            ring.quotient_dim(ring.zero)

    def test_functional_api(self, curve_gf5):
        r = coordinate_ring(curve_gf5)
        assert quotient_dim(curve_gf5, r.element([0, 0, 1])) == 4


class TestNormScan:
    """Randomized norm, matrix and Smith form scans."""

    @pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.prime(5),
                                      FieldSpec.extension(2, 2), FieldSpec.prime(101)])
    def test_norm_scan(self, spec):
        result = norm_scan(spec, cases=100, seed=1729)
        assert result.passed, result.examples
        assert result.curves == 100

    @pytest.mark.parametrize("spec", [FieldSpec.prime(101), FieldSpec.extension(2, 4)])
    def test_norm_scan_thousand_cases(self, spec):
        result = norm_scan(spec, cases=1000, seed=1729)
        assert result.passed, result.examples
        assert result.curves == 1000

    def test_check_norm_case_zero(self, ring):
        result = ScanResult("norm", ring.field.label)
        check_norm_case(ring, ring.zero, ring.y, result)
        assert result.passed
