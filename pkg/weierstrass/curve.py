"""Weierstrass curve data, invariants, variable changes and the curve polynomial."""

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, Sequence, Tuple

from weierstrass.exceptions import DomainError, FieldMismatch, InvalidVariableChange
from weierstrass.fields import Field, FieldElement
from weierstrass.poly import BiPoly, UniPoly


@dataclass(frozen=True)
class CurveInvariants:
    """The b-invariants and the discriminant of a Weierstrass curve."""

    b2: FieldElement
    b4: FieldElement
    b6: FieldElement
    b8: FieldElement
    delta: FieldElement


@dataclass(frozen=True)
class VariableChange:
    """The substitution (X, Y) -> (u^2 X + r, u^3 Y + u^2 s X + t), u a unit."""

    u: FieldElement
    r: FieldElement
    s: FieldElement
    t: FieldElement

    def __post_init__(self):
        if self.u.is_zero():
            raise InvalidVariableChange("Variable change requires u != 0")
        fields = {self.u.field, self.r.field, self.s.field, self.t.field}
        if len(fields) != 1:
            raise FieldMismatch("Variable change parameters must share one field")

    @classmethod
    def of(cls, field: Field, u=1, r=0, s=0, t=0) -> "VariableChange":
        return cls(field(u), field(r), field(s), field(t))

    @classmethod
    def identity(cls, field: Field) -> "VariableChange":
        return cls.of(field)


class WeierstrassCurve:
    """The curve Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 over a field."""

    def __init__(self, a1: FieldElement, a2: FieldElement, a3: FieldElement,
                 a4: FieldElement, a6: FieldElement):
        coeffs = (a1, a2, a3, a4, a6)
        field = coeffs[0].field
        if any(c.field != field for c in coeffs):
            raise FieldMismatch("All five Weierstrass coefficients must share one field")
        self.field: Field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = coeffs

    @classmethod
    def of(cls, field: Field, coeffs: Sequence) -> "WeierstrassCurve":
        """Build a curve from five values coercible into the field."""
        if len(coeffs) != 5:
            raise DomainError(f"A Weierstrass curve needs 5 coefficients, got {len(coeffs)}")
        return cls(*(field(c) for c in coeffs))

    @property
    def coefficients(self) -> Tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    # Invariants.

    @property
    def b2(self) -> FieldElement:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> FieldElement:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> FieldElement:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> FieldElement:
        a1, a2, a3, a4, a6 = self.coefficients
        return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2

    @cached_property
    def delta(self) -> FieldElement:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    def invariants(self) -> CurveInvariants:
        return CurveInvariants(self.b2, self.b4, self.b6, self.b8, self.delta)

    @property
    def is_elliptic(self) -> bool:
        """Over a field the discriminant is a unit exactly when it is nonzero."""
        return not self.delta.is_zero()

    def variable_change(self, c: VariableChange) -> "WeierstrassCurve":
        """Return the curve obtained by applying the change of variables c."""
        if c.u.field != self.field:
            raise FieldMismatch("Variable change and curve live over different fields")
        a1, a2, a3, a4, a6 = self.coefficients
        u, r, s, t = c.u, c.r, c.s, c.t
        ui = u.inverse()
        return WeierstrassCurve(
            ui * (a1 + 2 * s),
            ui ** 2 * (a2 - s * a1 + 3 * r - s ** 2),
            ui ** 3 * (a3 + r * a1 + 2 * t),
            ui ** 4 * (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r ** 2 - 2 * s * t),
            ui ** 6 * (a6 + r * a4 + r ** 2 * a2 + r ** 3 - t * a3 - t ** 2 - r * t * a1),
        )

    # Polynomials in F[X][Y].

    def _uni(self, *coeffs) -> UniPoly:
        return UniPoly(self.field, coeffs)

    @cached_property
    def cubic(self) -> UniPoly:
        """X^3 + a2 X^2 + a4 X + a6."""
        return self._uni(self.a6, self.a4, self.a2, 1)

    @cached_property
    def linear(self) -> UniPoly:
        """a1 X + a3."""
        return self._uni(self.a3, self.a1)

    @cached_property
    def polynomial(self) -> BiPoly:
        """W(X, Y) = Y^2 + C(a1 X + a3) Y - C(X^3 + a2 X^2 + a4 X + a6)."""
        return BiPoly(self.field, [-self.cubic, self.linear, UniPoly.one(self.field)])

    @cached_property
    def polynomial_x(self) -> BiPoly:
        """W_X = C(C a1) Y - C(3 X^2 + 2 a2 X + a4)."""
        return BiPoly(self.field, [-self._uni(self.a4, 2 * self.a2, 3), self._uni(self.a1)])

    @cached_property
    def polynomial_y(self) -> BiPoly:
        """W_Y = C(C 2) Y + C(a1 X + a3)."""
        return BiPoly(self.field, [self.linear, self._uni(2)])

    @cached_property
    def neg_polynomial(self) -> BiPoly:
        """-Y - C(a1 X + a3), whose evaluation is the involution sigma_X(Y)."""
        return BiPoly(self.field, [-self.linear, self._uni(-1)])

    def equation(self, x: FieldElement, y: FieldElement) -> bool:
        """True iff W(x, y) = 0."""
        return self.polynomial.eval2(x, y).is_zero()

    def nonsingular(self, x: FieldElement, y: FieldElement) -> bool:
        """True iff (x, y) lies on W and W_X, W_Y do not both vanish there."""
        return self.equation(x, y) and (
            not self.polynomial_x.eval2(x, y).is_zero()
            or not self.polynomial_y.eval2(x, y).is_zero()
        )

    def nonsingular_at_origin(self) -> bool:
        """Closed-form criterion for (0, 0): a6 = 0 and (a3 != 0 or a4 != 0)."""
        return self.a6.is_zero() and not (self.a3.is_zero() and self.a4.is_zero())

    def add_polynomial(self, x: FieldElement, y: FieldElement, slope: FieldElement) -> UniPoly:
        """W(X, lambda(X)) for the line through (x, y) with the given slope."""
        return self.polynomial.eval_y(line_polynomial(x, y, slope))

    def affine_solutions(self) -> Iterator[Tuple[FieldElement, FieldElement]]:
        """
        Yield every (x, y) with W(x, y) = 0 over a finite field.

        Iterates x then y in field-enumeration order, evaluating the cubic and
        the linear term once per x.

        Raises:
            InfiniteField: If the base field is the rationals.
        """
        elements = self.field.elements()
        for x in elements:
            c = self.linear.eval(x)
            f = self.cubic.eval(x)
            for y in elements:
                if y * (y + c) == f:
                    yield x, y

    # Plumbing.

    def to_dict(self) -> Dict[str, str]:
        names = ("a1", "a2", "a3", "a4", "a6")
        return {name: str(c) for name, c in zip(names, self.coefficients)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coefficients)
        return f"WeierstrassCurve({self.field.label}: [{body}])"


def random_curve(field: Field, rng: random.Random) -> WeierstrassCurve:
    """Five independent random coefficients; the curve may be singular."""
    return WeierstrassCurve(*(field.random_element(rng) for _ in range(5)))


def line_polynomial(x: FieldElement, y: FieldElement, slope: FieldElement) -> UniPoly:
    """lambda(X) = L (X - x) + y."""
    field = x.field
    return UniPoly(field, [y - slope * x, slope])


def complete_square_change(curve: WeierstrassCurve) -> VariableChange:
    """
    Change (X, Y) -> (X, Y - a1 X / 2 - a3 / 2), eliminating a1 and a3.

    Raises:
        DomainError: In characteristic 2.
    """
    if curve.field.characteristic == 2:
        raise DomainError("Completing the square needs characteristic != 2")
    half = curve.field(2).inverse()
    return VariableChange.of(curve.field, 1, 0, -curve.a1 * half, -curve.a3 * half)


def complete_cube_change(curve: WeierstrassCurve) -> VariableChange:
    """
    Change (X, Y) -> (X - a2 / 3, Y) on a curve with a1 = a3 = 0, eliminating a2.

    Raises:
        DomainError: In characteristic 2 or 3, or if a1, a3 are not yet zero.
    """
    if curve.field.characteristic in (2, 3):
        raise DomainError("Completing the cube needs characteristic not in {2, 3}")
    if not (curve.a1.is_zero() and curve.a3.is_zero()):
        raise DomainError("Complete the square before completing the cube")
    return VariableChange.of(curve.field, 1, -curve.a2 / 3, 0, 0)


def short_weierstrass(curve: WeierstrassCurve) -> Tuple[WeierstrassCurve, VariableChange, VariableChange]:
    """Bring a curve to the form Y^2 = X^3 + a4 X + a6; returns the curve and both changes."""
    square = complete_square_change(curve)
    squared = curve.variable_change(square)
    cube = complete_cube_change(squared)
    return squared.variable_change(cube), square, cube
