"""The coordinate ring F[W] = F[X][Y] / <W(X, Y)> with basis {1, Y} over F[X]."""

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from weierstrass.curve import WeierstrassCurve
from weierstrass.exceptions import DomainError, SingularMatrix, ZeroElement
from weierstrass.fields import Field, FieldElement
from weierstrass.poly import BiPoly, ExtDeg, UniPoly

PolyLike = Union[UniPoly, Sequence]


class CoordRingElem:
    """A residue p(X) + q(X) Y, canonical because W is monic of degree 2 in Y."""

    __slots__ = ("ring", "p", "q")

    def __init__(self, ring: "CoordinateRing", p: UniPoly, q: UniPoly):
        self.ring = ring
        self.p = p
        self.q = q

    def _check(self, other: "CoordRingElem") -> "CoordRingElem":
        if not isinstance(other, CoordRingElem):
            return NotImplemented
        if other.ring != self.ring:
            raise DomainError("Cannot combine residues of different coordinate rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CoordRingElem(self.ring, self.p + other.p, self.q + other.q)

    def __neg__(self):
        return CoordRingElem(self.ring, -self.p, -self.q)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CoordRingElem(self.ring, self.p - other.p, self.q - other.q)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ring.mul(self, other)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def lift(self) -> BiPoly:
        """The representative p + q Y in F[X][Y]."""
        return BiPoly(self.ring.field, [self.p, self.q])

    def to_dict(self) -> Dict[str, List[str]]:
        return {"p": [str(c) for c in self.p.coeffs], "q": [str(c) for c in self.q.coeffs]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoordRingElem):
            return NotImplemented
        return self.ring == other.ring and self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __str__(self) -> str:
        return f"({self.p}) + ({self.q})*Y"

    def __repr__(self) -> str:
        return f"CoordRingElem({self})"


class PolyMatrix2:
    """A 2x2 matrix over F[X], stored row-major."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries: Sequence[UniPoly]):
        if len(entries) != 4:
            raise DomainError(f"A 2x2 matrix needs 4 entries, got {len(entries)}")
        for e in entries:
            if e.field != field:
                raise DomainError(f"Matrix entry over {e.field.label} in a {field.label} matrix")
        self.field = field
        self.entries: Tuple[UniPoly, ...] = tuple(entries)

    @classmethod
    def of_rows(cls, rows: Sequence[Sequence[UniPoly]]) -> "PolyMatrix2":
        (a, b), (c, d) = rows
        return cls(a.field, [a, b, c, d])

    @classmethod
    def identity(cls, field: Field) -> "PolyMatrix2":
        return cls.diagonal(UniPoly.one(field), UniPoly.one(field))

    @classmethod
    def diagonal(cls, d1: UniPoly, d2: UniPoly) -> "PolyMatrix2":
        zero = UniPoly.zero(d1.field)
        return cls(d1.field, [d1, zero, zero, d2])

    def entry(self, i: int, j: int) -> UniPoly:
        return self.entries[2 * i + j]

    @property
    def rows(self) -> Tuple[Tuple[UniPoly, UniPoly], Tuple[UniPoly, UniPoly]]:
        a, b, c, d = self.entries
        return (a, b), (c, d)

    def det(self) -> UniPoly:
        a, b, c, d = self.entries
        return a * d - b * c

    def __matmul__(self, other: "PolyMatrix2") -> "PolyMatrix2":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return PolyMatrix2(self.field, [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix2):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        (a, b), (c, d) = self.rows
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self) -> str:
        return f"PolyMatrix2({self})"


@dataclass(frozen=True)
class SmithForm:
    """left @ M @ right = diag(d1, d2) with d1 | d2 monic and det(left) det(right) = unit."""

    d1: UniPoly
    d2: UniPoly
    left: PolyMatrix2
    right: PolyMatrix2
    unit: FieldElement


class CoordinateRing:
    """Handle on F[W] for one curve: construction, reduction, product and norm."""

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve
        self.field: Field = curve.field

    def _poly(self, value: PolyLike) -> UniPoly:
        if isinstance(value, UniPoly):
            if value.field != self.field:
                raise DomainError(f"Polynomial over {value.field.label} in F[W] over {self.field.label}")
            return value
        return UniPoly(self.field, value)

    def element(self, p: PolyLike = (), q: PolyLike = ()) -> CoordRingElem:
        """The residue p(X) + q(X) Y; p and q are polynomials or coefficient lists."""
        return CoordRingElem(self, self._poly(p), self._poly(q))

    @property
    def zero(self) -> CoordRingElem:
        return self.element()

    @property
    def one(self) -> CoordRingElem:
        return self.element([1])

    @property
    def y(self) -> CoordRingElem:
        return self.element((), [1])

    def random_element(self, rng: random.Random, max_degree: int = 4) -> CoordRingElem:
        """Random residue whose p and q each have degree in {-inf, 0, ..., max_degree}."""

        def draw() -> UniPoly:
            n = rng.randint(0, max_degree + 1)
            return UniPoly(self.field, [self.field.random_element(rng) for _ in range(n)])

        return self.element(draw(), draw())

    def reduce(self, w: BiPoly) -> CoordRingElem:
        """Remainder of w under Y-division by the curve polynomial."""
        _, r = w.divmod_monic(self.curve.polynomial)
        return CoordRingElem(self, r.coeff(0), r.coeff(1))

    def mul(self, f: CoordRingElem, g: CoordRingElem) -> CoordRingElem:
        """Product with the rule Y^2 = (X^3 + a2 X^2 + a4 X + a6) - (a1 X + a3) Y."""
        cubic, linear = self.curve.cubic, self.curve.linear
        qq = f.q * g.q
        return CoordRingElem(
            self,
            f.p * g.p + qq * cubic,
            f.p * g.q + g.p * f.q - qq * linear,
        )

    def norm(self, f: CoordRingElem) -> UniPoly:
        """Nm(p + qY) = p^2 - p q (a1 X + a3) - q^2 (X^3 + a2 X^2 + a4 X + a6)."""
        return f.p * f.p - f.p * f.q * self.curve.linear - f.q * f.q * self.curve.cubic

    def norm_degree(self, f: CoordRingElem) -> ExtDeg:
        return self.norm(f).degree

    @staticmethod
    def expected_norm_degree(f: CoordRingElem) -> ExtDeg:
        """max(2 deg p, 2 deg q + 3) in extended-degree arithmetic."""
        return max(2 * f.p.degree, 2 * f.q.degree + 3)

    def mult_matrix(self, f: CoordRingElem) -> PolyMatrix2:
        """Multiplication by f on the basis {1, Y}; columns are f*1 and f*Y."""
        fy = self.mul(f, self.y)
        return PolyMatrix2.of_rows([[f.p, fy.p], [f.q, fy.q]])

    def quotient_dim(self, f: CoordRingElem) -> int:
        """
        dim_F of F[W] / <f>, read off the Smith normal form of the multiplication matrix.

        Raises:
            ZeroElement: If f is zero.
        """
        if f.is_zero():
            raise ZeroElement("The quotient by the zero ideal is infinite-dimensional")
        d1, d2 = smith_normal_form(self.mult_matrix(f))
        return d1.nat_degree + d2.nat_degree

    def __eq__(self, other) -> bool:
        return isinstance(other, CoordinateRing) and self.curve == other.curve

    def __hash__(self) -> int:
        return hash(self.curve)

    def __repr__(self) -> str:
        return f"CoordinateRing({self.curve!r})"


@lru_cache(maxsize=256)
def coordinate_ring(curve: WeierstrassCurve) -> CoordinateRing:
    return CoordinateRing(curve)


# Curve-first functional API.

def reduce(curve: WeierstrassCurve, w: BiPoly) -> CoordRingElem:
    return coordinate_ring(curve).reduce(w)


def crmul(curve: WeierstrassCurve, f: CoordRingElem, g: CoordRingElem) -> CoordRingElem:
    return coordinate_ring(curve).mul(f, g)


def norm(curve: WeierstrassCurve, f: CoordRingElem) -> UniPoly:
    return coordinate_ring(curve).norm(f)


def norm_degree(curve: WeierstrassCurve, f: CoordRingElem) -> ExtDeg:
    return coordinate_ring(curve).norm_degree(f)


def mult_matrix(curve: WeierstrassCurve, f: CoordRingElem) -> PolyMatrix2:
    return coordinate_ring(curve).mult_matrix(f)


def quotient_dim(curve: WeierstrassCurve, f: CoordRingElem) -> int:
    return coordinate_ring(curve).quotient_dim(f)


# Smith normal form over F[X], 2x2 only.

def _pivot(m: PolyMatrix2) -> Tuple[int, int]:
    """Position of the nonzero entry of least degree, ties broken row-major."""
    best = None
    for k, e in enumerate(m.entries):
        if e.is_zero():
            continue
        if best is None or e.degree < m.entries[best].degree:
            best = k
    return divmod(best, 2)


def smith_decomposition(m: PolyMatrix2) -> SmithForm:
    """
    Diagonalize a nonsingular 2x2 matrix over F[X] by unimodular operations.

    Row operations accumulate in `left`, column operations in `right`. The
    pivot is moved to position (0, 0) and its row and column are cleared by
    Euclidean division; a nonzero remainder becomes the next, strictly
    smaller, pivot.

    Args:
        m: The matrix to diagonalize.

    Returns:
        A SmithForm with left @ m @ right = diag(d1, d2), d1 | d2, both monic.

    Raises:
        SingularMatrix: If det(m) = 0.
    """
    field = m.field
    if m.det().is_zero():
        raise SingularMatrix(f"Matrix {m} has zero determinant")
    one, zero = UniPoly.one(field), UniPoly.zero(field)
    swap = PolyMatrix2(field, [zero, one, one, zero])
    left = right = PolyMatrix2.identity(field)

    while True:
        i, j = _pivot(m)
        if i == 1:
            m, left = swap @ m, swap @ left
        if j == 1:
            m, right = m @ swap, right @ swap
        a = m.entry(0, 0)
        qc, _ = m.entry(0, 1).euclid_divmod(a)
        op = PolyMatrix2(field, [one, -qc, zero, one])
        m, right = m @ op, right @ op
        qr, _ = m.entry(1, 0).euclid_divmod(a)
        op = PolyMatrix2(field, [one, zero, -qr, one])
        m, left = op @ m, op @ left
        if not (m.entry(0, 1).is_zero() and m.entry(1, 0).is_zero()):
            continue
        _, r = m.entry(1, 1).euclid_divmod(a)
        if r.is_zero():
            break
        # Fold row 1 into row 0 so the next pass sees the non-divisible entry.
        op = PolyMatrix2(field, [one, one, zero, one])
        m, left = op @ m, op @ left

    c1, c2 = m.entry(0, 0).leading.inverse(), m.entry(1, 1).leading.inverse()
    scale = PolyMatrix2.diagonal(UniPoly.const(c1), UniPoly.const(c2))
    m, left = scale @ m, scale @ left
    unit = left.det().coeff(0) * right.det().coeff(0)
    return SmithForm(m.entry(0, 0), m.entry(1, 1), left, right, unit)


def smith_normal_form(m: PolyMatrix2) -> Tuple[UniPoly, UniPoly]:
    """The invariant factors (d1, d2) of a nonsingular 2x2 matrix over F[X]."""
    form = smith_decomposition(m)
    return form.d1, form.d2
