"""Nonsingular points of a Weierstrass curve and the chord-and-tangent group law."""

import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sympy.ntheory import sqrt_mod

from weierstrass.curve import VariableChange, WeierstrassCurve
from weierstrass.exceptions import (
    DegenerateTangent,
    DomainError,
    InfiniteField,
    SamplingExhausted,
    SingularPoint,
)
from weierstrass.fields import FieldElement


class Point(ABC):
    """A point of W(F): the point at infinity or a nonsingular affine point."""

    curve: WeierstrassCurve

    @property
    @abstractmethod
    def is_zero(self) -> bool:
        pass  # pragma: no cover

    def __add__(self, other: "Point") -> "Point":
        return add(self.curve, self, other)

    def __neg__(self) -> "Point":
        return neg(self.curve, self)

    def __sub__(self, other: "Point") -> "Point":
        return add(self.curve, self, neg(self.curve, other))

    def __mul__(self, n: int) -> "Point":
        return smul(n, self)

    __rmul__ = __mul__


class ZeroPoint(Point):
    """The point at infinity O = [0 : 1 : 0]."""

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve

    @property
    def is_zero(self) -> bool:
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return other.is_zero

    def __hash__(self) -> int:
        return hash("O")

    def __str__(self) -> str:
        return "O"

    def __repr__(self) -> str:
        return "ZeroPoint()"


class AffinePoint(Point):
    """An affine point (x, y); construction checks nonsingularity on the curve."""

    def __init__(self, curve: WeierstrassCurve, x: FieldElement, y: FieldElement):
        x, y = curve.field(x), curve.field(y)
        if not curve.nonsingular(x, y):
            raise SingularPoint(f"({x}, {y}) is not a nonsingular point of {curve!r}")
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_zero(self) -> bool:
        return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return not other.is_zero and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"

    def __repr__(self) -> str:
        return f"AffinePoint({self.x}, {self.y})"


@dataclass(frozen=True)
class GroupStructure:
    """W(F) as Z/n1 x Z/n2 with n1 | n2."""

    order: int
    invariant_factors: Tuple[int, int]

    @property
    def exponent(self) -> int:
        return self.invariant_factors[1]

    @property
    def is_cyclic(self) -> bool:
        return self.invariant_factors[0] == 1


def neg_y(curve: WeierstrassCurve, x: FieldElement, y: FieldElement) -> FieldElement:
    """sigma_x(y) = -y - (a1 x + a3), by evaluating the negation polynomial."""
    return curve.neg_polynomial.eval2(x, y)


def neg(curve: WeierstrassCurve, p: Point) -> Point:
    if p.is_zero:
        return p
    return AffinePoint(curve, p.x, neg_y(curve, p.x, p.y))


def slope(curve: WeierstrassCurve, x1: FieldElement, x2: FieldElement,
          y1: FieldElement, y2: FieldElement) -> FieldElement:
    """
    Slope of the line through (x1, y1) and (x2, y2).

    Three cases: vertical (junk value 0), tangent, and secant. No on-curve
    requirement is made.

    Raises:
        DegenerateTangent: If the tangent denominator y1 - sigma_x1(y1) vanishes.
    """
    if x1 == x2:
        if y1 == neg_y(curve, x2, y2):
            return curve.field.zero
        denominator = y1 - neg_y(curve, x1, y1)
        if denominator.is_zero():
            raise DegenerateTangent(f"Tangent at ({x1}, {y1}) has a vanishing denominator")
        return (3 * x1 ** 2 + 2 * curve.a2 * x1 + curve.a4 - curve.a1 * y1) / denominator
    return (y1 - y2) / (x1 - x2)


def add_x(curve: WeierstrassCurve, x1: FieldElement, x2: FieldElement, ell: FieldElement) -> FieldElement:
    return ell ** 2 + curve.a1 * ell - curve.a2 - x1 - x2


def add_y_prime(curve: WeierstrassCurve, x1: FieldElement, x2: FieldElement,
                y1: FieldElement, ell: FieldElement) -> FieldElement:
    """lambda(x3): the third intersection of the line, before negation."""
    return ell * (add_x(curve, x1, x2, ell) - x1) + y1


def add_y(curve: WeierstrassCurve, x1: FieldElement, x2: FieldElement,
          y1: FieldElement, ell: FieldElement) -> FieldElement:
    return neg_y(curve, add_x(curve, x1, x2, ell), add_y_prime(curve, x1, x2, y1, ell))


def add(curve: WeierstrassCurve, p1: Point, p2: Point) -> Point:
    """The five-case addition law."""
    if p1.is_zero:
        return p2
    if p2.is_zero:
        return p1
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    if x1 == x2 and y1 == neg_y(curve, x2, y2):
        return ZeroPoint(curve)
    ell = slope(curve, x1, x2, y1, y2)
    return AffinePoint(curve, add_x(curve, x1, x2, ell), add_y(curve, x1, x2, y1, ell))


def smul(n: int, p: Point) -> Point:
    """n * P by double-and-add, with (-n) * P = -(n * P)."""
    curve = p.curve
    if n < 0:
        return neg(curve, smul(-n, p))
    result: Point = ZeroPoint(curve)
    base = p
    while n:
        if n & 1:
            result = add(curve, result, base)
        base = add(curve, base, base)
        n >>= 1
    return result


def enumerate_points(curve: WeierstrassCurve) -> List[Point]:
    """
    List W(F) over a finite field.

    Returns:
        The point at infinity followed by every nonsingular affine point, in
        field-enumeration order.

    Raises:
        InfiniteField: If the base field is the rationals.
    """
    points: List[Point] = [ZeroPoint(curve)]
    for x, y in curve.affine_solutions():
        if curve.nonsingular(x, y):
            points.append(AffinePoint(curve, x, y))
    return points


def point_order(p: Point, group_order: Optional[int] = None) -> int:
    """
    Order of P, as the least divisor d of the group order with d * P = O.

    Without a group order the multiples of P are walked until O is reached,
    at most q + 1 + 2 sqrt(q) steps over GF(q).

    Raises:
        InfiniteField: If no group order is given and the field is the rationals.
        DomainError: If O is not reached within the bound.
    """
    if group_order is not None:
        for d in _divisors(group_order):
            if smul(d, p).is_zero:
                return d
        raise DomainError(f"{p} is not annihilated by the group order {group_order}")
    field = p.curve.field
    if not field.is_finite:
        raise InfiniteField(f"Cannot walk the multiples of {p} over {field.label}")
    bound = field.order + 1 + math.isqrt(4 * field.order)
    n, q = 1, p
    while not q.is_zero:
        if n >= bound:
            raise DomainError(f"{p} has no order within the Hasse bound over {field.label}")
        q = add(p.curve, q, p)
        n += 1
    return n


def _divisors(n: int) -> List[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def group_structure(curve: WeierstrassCurve) -> GroupStructure:
    """
    Invariant factors of W(F) over a finite field.

    The exponent e is the lcm of the element orders; since the group is abelian
    of rank at most 2 the factors are (N / e, e).
    """
    points = enumerate_points(curve)
    order = len(points)
    exponent = 1
    for p in points:
        exponent = math.lcm(exponent, point_order(p, order))
    return GroupStructure(order, (order // exponent, exponent))


def map_point(curve: WeierstrassCurve, change: VariableChange, p: Point) -> Point:
    """
    Carry a point of W to the curve variable_change(W, change).

    (x, y) goes to (u^-2 (x - r), u^-3 (y - s (x - r) - t)).
    """
    target = curve.variable_change(change)
    if p.is_zero:
        return ZeroPoint(target)
    ui = change.u.inverse()
    dx = p.x - change.r
    return AffinePoint(target, ui ** 2 * dx, ui ** 3 * (p.y - change.s * dx - change.t))


def addition_table(points: List[Point]) -> Dict[Tuple[int, int], int]:
    """
    Cayley table of the group law on an enumerated point list.

    Raises:
        DomainError: If some sum falls outside the list (closure failure).
    """
    index = {p: i for i, p in enumerate(points)}
    table = {}
    for i, p in enumerate(points):
        for j, q in enumerate(points):
            s = p + q
            if s not in index:
                raise DomainError(f"{p} + {q} = {s} is not in the enumerated point set")
            table[(i, j)] = index[s]
    return table


def sample_point(curve: WeierstrassCurve, rng: random.Random, retries: int = 64) -> AffinePoint:
    """
    Draw a random nonsingular affine point.

    Picks x at random and solves Y^2 + (a1 x + a3) Y = f(x) by completing the
    square (odd prime fields, via sympy's modular square root) or by search
    over the field (other finite fields).

    Raises:
        SamplingExhausted: If no point is found after `retries` x-values.
    """
    field = curve.field
    odd_prime = field.spec.kind == "prime" and field.characteristic != 2
    for _ in range(retries):
        x = field.random_element(rng)
        c = curve.linear.eval(x)
        f = curve.cubic.eval(x)
        if odd_prime:
            disc = c * c + 4 * f
            root = sqrt_mod(disc.value, field.characteristic)
            if root is None:
                continue
            if rng.random() < 0.5:
                root = -root
            candidates = [(field(root) - c) / 2]
        else:
            candidates = [y for y in field.elements() if y * (y + c) == f]
            rng.shuffle(candidates)
        for y in candidates:
            if curve.nonsingular(x, y):
                return AffinePoint(curve, x, y)
    raise SamplingExhausted(f"No nonsingular point on {curve!r} after {retries} attempts")
