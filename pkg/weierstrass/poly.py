"""Dense univariate polynomials over a field and the Y-outer bivariate ring F[X][Y]."""

from functools import total_ordering
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple, Union

from weierstrass.exceptions import FieldMismatch, NonMonicDivisor
from weierstrass.fields import Field, FieldElement


@total_ordering
class ExtDeg:
    """A degree in N ∪ {−∞}; the zero polynomial has degree −∞."""

    __slots__ = ("value",)

    def __init__(self, value: Optional[int] = None):
        self.value = value

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other):
        other = other if isinstance(other, ExtDeg) else ExtDeg(other)
        if self.is_neg_inf or other.is_neg_inf:
            return NEG_INF
        return ExtDeg(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, c: int):
        if c < 1:
            raise ValueError("ExtDeg scaling is defined for c >= 1")
        return NEG_INF if self.is_neg_inf else ExtDeg(c * self.value)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, ExtDeg):
            return self.value == other.value
        return NotImplemented

    def __lt__(self, other) -> bool:
        other = other if isinstance(other, ExtDeg) else ExtDeg(other)
        if self.is_neg_inf:
            return not other.is_neg_inf
        return not other.is_neg_inf and self.value < other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return "-inf" if self.is_neg_inf else str(self.value)


NEG_INF = ExtDeg(None)


class UniPoly:
    """A polynomial in X over a field, coefficients low-to-high, normalized."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        self.field = field
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: Tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def zero(cls, field: Field) -> "UniPoly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "UniPoly":
        return cls(field, [1])

    @classmethod
    def const(cls, c: FieldElement) -> "UniPoly":
        return cls(c.field, [c])

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls(field, [0, 1])

    @property
    def degree(self) -> ExtDeg:
        return ExtDeg(len(self.coeffs) - 1) if self.coeffs else NEG_INF

    @property
    def nat_degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatch(
                    f"Cannot combine polynomials over {self.field.label} and {other.field.label}"
                )
            return other
        if isinstance(other, (FieldElement, int)):
            return UniPoly(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def scale(self, c) -> "UniPoly":
        c = self.field(c)
        return UniPoly(self.field, [c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "UniPoly":
        result, base = UniPoly.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, x: FieldElement) -> FieldElement:
        """Horner evaluation at x."""
        x = self.field(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(self.field, [i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod_monic(self, m: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """
        Divide by a monic polynomial.

        Args:
            m: The monic divisor.

        Returns:
            (q, r) with self = q*m + r and deg r < deg m.

        Raises:
            NonMonicDivisor: If m is not monic, whatever its leading coefficient.
        """
        m = self._lift(m)
        if not m.is_monic():
            raise NonMonicDivisor(f"Divisor {m} is not monic")
        return self._long_division(m)

    def euclid_divmod(self, m: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Euclidean division by any nonzero polynomial."""
        m = self._lift(m)
        if m.is_zero():
            raise NonMonicDivisor("Cannot divide by the zero polynomial")
        inv = m.leading.inverse()
        q, r = self._long_division(m.scale(inv))
        return q.scale(inv), r

    def _long_division(self, m: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        rem = list(self.coeffs)
        dm = len(m.coeffs) - 1
        quot = [self.field.zero] * max(len(rem) - dm, 0)
        for shift in range(len(rem) - dm - 1, -1, -1):
            c = rem[shift + dm]
            quot[shift] = c
            if not c.is_zero():
                for j, b in enumerate(m.coeffs):
                    rem[shift + j] = rem[shift + j] - c * b
        return UniPoly(self.field, quot), UniPoly(self.field, rem[:dm])

    def monic(self) -> "UniPoly":
        return self.scale(self.leading.inverse()) if self.coeffs else self

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return render_terms([(c, i) for i, c in enumerate(self.coeffs)], "X")

    def __repr__(self) -> str:
        return f"UniPoly({self.field.label}: {self})"


def _format_coeff(c: FieldElement) -> str:
    text = str(c)
    return f"[{text}]" if "," in text else text


def render_terms(terms: Sequence[Tuple[FieldElement, int]], var: str) -> str:
    """Render `c0 + c1*X + c2*X^2 ...`, skipping zero coefficients."""
    parts = []
    for c, i in terms:
        if c.is_zero():
            continue
        coeff = _format_coeff(c)
        if i == 0:
            parts.append(coeff)
        elif i == 1:
            parts.append(f"{coeff}*{var}")
        else:
            parts.append(f"{coeff}*{var}^{i}")
    return " + ".join(parts) if parts else "0"


class BiPoly:
    """A polynomial in Y whose coefficients are UniPoly in X (the ring F[X][Y])."""

    __slots__ = ("field", "ycoeffs")

    def __init__(self, field: Field, ycoeffs: Iterable[UniPoly] = ()):
        self.field = field
        cs = list(ycoeffs)
        for c in cs:
            if c.field != field:
                raise FieldMismatch(f"Y-coefficient over {c.field.label} in a {field.label} polynomial")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ycoeffs: Tuple[UniPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls, field: Field) -> "BiPoly":
        return cls(field)

    @classmethod
    def C(cls, p: UniPoly) -> "BiPoly":
        """Embed a polynomial in X as a constant in Y."""
        return cls(p.field, [p])

    @classmethod
    def Y(cls, field: Field) -> "BiPoly":
        return cls(field, [UniPoly.zero(field), UniPoly.one(field)])

    @property
    def degree_y(self) -> ExtDeg:
        return ExtDeg(len(self.ycoeffs) - 1) if self.ycoeffs else NEG_INF

    @property
    def leading(self) -> UniPoly:
        return self.ycoeffs[-1] if self.ycoeffs else UniPoly.zero(self.field)

    def coeff(self, j: int) -> UniPoly:
        return self.ycoeffs[j] if 0 <= j < len(self.ycoeffs) else UniPoly.zero(self.field)

    def is_zero(self) -> bool:
        return not self.ycoeffs

    def is_monic(self) -> bool:
        return bool(self.ycoeffs) and self.ycoeffs[-1] == UniPoly.one(self.field)

    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            if other.field != self.field:
                raise FieldMismatch(
                    f"Cannot combine polynomials over {self.field.label} and {other.field.label}"
                )
            return other
        if isinstance(other, UniPoly):
            return BiPoly.C(self._check_uni(other))
        if isinstance(other, (FieldElement, int)):
            return BiPoly.C(UniPoly(self.field, [other]))
        return NotImplemented

    def _check_uni(self, p: UniPoly) -> UniPoly:
        if p.field != self.field:
            raise FieldMismatch(f"Cannot combine {p.field.label} and {self.field.label}")
        return p

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.ycoeffs), len(other.ycoeffs))
        return BiPoly(self.field, [self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.field, [-c for c in self.ycoeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly.zero(self.field)
        out = [UniPoly.zero(self.field)] * (len(self.ycoeffs) + len(other.ycoeffs) - 1)
        for i, a in enumerate(self.ycoeffs):
            for j, b in enumerate(other.ycoeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(self.field, out)

    __rmul__ = __mul__

    def scale(self, c) -> "BiPoly":
        return BiPoly(self.field, [p.scale(c) for p in self.ycoeffs])

    def __pow__(self, n: int) -> "BiPoly":
        result, base = BiPoly.C(UniPoly.one(self.field)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_y(self, y: UniPoly) -> UniPoly:
        """Substitute Y := y(X), giving a polynomial in X."""
        y = self._check_uni(y)
        acc = UniPoly.zero(self.field)
        for c in reversed(self.ycoeffs):
            acc = acc * y + c
        return acc

    def eval2(self, x: FieldElement, y: FieldElement) -> FieldElement:
        """Substitute Y := C y, then X := x."""
        return self.eval_y(UniPoly.const(self.field(y))).eval(x)

    def derivative_x(self) -> "BiPoly":
        return BiPoly(self.field, [c.derivative() for c in self.ycoeffs])

    def derivative_y(self) -> "BiPoly":
        return BiPoly(self.field, [c.scale(j) for j, c in enumerate(self.ycoeffs)][1:])

    def divmod_monic(self, m: "BiPoly") -> Tuple["BiPoly", "BiPoly"]:
        """
        Divide in Y by a polynomial monic in Y, over the coefficient ring F[X].

        Raises:
            NonMonicDivisor: If the leading Y-coefficient of m is not 1.
        """
        m = self._lift(m)
        if not m.is_monic():
            raise NonMonicDivisor(f"Divisor {m} is not monic in Y")
        rem = list(self.ycoeffs)
        dm = len(m.ycoeffs) - 1
        quot = [UniPoly.zero(self.field)] * max(len(rem) - dm, 0)
        for shift in range(len(rem) - dm - 1, -1, -1):
            c = rem[shift + dm]
            quot[shift] = c
            if not c.is_zero():
                for j, b in enumerate(m.ycoeffs):
                    rem[shift + j] = rem[shift + j] - c * b
        return BiPoly(self.field, quot), BiPoly(self.field, rem[:dm])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.ycoeffs == other.ycoeffs

    def __hash__(self) -> int:
        return hash(self.ycoeffs)

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.ycoeffs):
            if c.is_zero():
                continue
            if j == 0:
                parts.append(f"({c})")
            elif j == 1:
                parts.append(f"({c})*Y")
            else:
                parts.append(f"({c})*Y^{j}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"BiPoly({self.field.label}: {self})"


Poly = Union[UniPoly, BiPoly]

_ARITH: Dict[str, Callable] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "scale": lambda a, b: a.scale(b),
}


def poly_arith(op: str, a: Poly, b) -> Poly:
    """Apply a named ring operation; `scale` takes a field element as b."""
    if op not in _ARITH:
        raise ValueError(f"Unknown polynomial operation: {op}")
    return _ARITH[op](a, b)


def eval2(w: BiPoly, x: FieldElement, y: FieldElement) -> FieldElement:
    return w.eval2(x, y)


def derivative_x(p: Poly) -> Poly:
    return p.derivative_x() if isinstance(p, BiPoly) else p.derivative()


def derivative_y(w: BiPoly) -> BiPoly:
    return w.derivative_y()


def divmod_monic(a: Poly, m: Poly) -> Tuple[Poly, Poly]:
    return a.divmod_monic(m)
