"""Sparse multivariate polynomials with integer coefficients over a fixed variable set."""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from weierstrass.exceptions import DomainError

VARS: Tuple[str, ...] = (
    "a1", "a2", "a3", "a4", "a6",
    "x", "y", "x1", "y1", "x2", "y2", "l",
    "X", "Y",
)
_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP: Tuple[int, ...] = (0,) * len(VARS)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class ZMultiPoly:
    """
    An exact polynomial in Z[a1, a2, a3, a4, a6, x, y, x1, y1, x2, y2, l, X, Y].

    Terms are stored as {exponent vector: coefficient}; zero coefficients are
    never stored, so structural equality is polynomial equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exponent, int]] = None):
        clean: Dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(VARS):
                raise DomainError(f"Exponent vector {exp} must have arity {len(VARS)}")
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = clean

    @classmethod
    def const(cls, n: int) -> "ZMultiPoly":
        return cls({_ZERO_EXP: n})

    @classmethod
    def var(cls, name: str) -> "ZMultiPoly":
        if name not in _INDEX:
            raise DomainError(f"Unknown variable {name!r}; expected one of {', '.join(VARS)}")
        exp = list(_ZERO_EXP)
        exp[_INDEX[name]] = 1
        return cls({tuple(exp): 1})

    @staticmethod
    def promote(item) -> "ZMultiPoly":
        if isinstance(item, ZMultiPoly):
            return item
        if isinstance(item, int):
            return ZMultiPoly.const(item)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return ZMultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZMultiPoly({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self.promote(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return ZMultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZMultiPoly":
        if n < 0:
            raise DomainError("ZMultiPoly powers must be non-negative")
        result, base = ZMultiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def variables(self) -> Tuple[str, ...]:
        used = {i for exp in self.terms for i, e in enumerate(exp) if e}
        return tuple(VARS[i] for i in sorted(used))

    @property
    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exp) for exp in self.terms), default=-1)

    def evaluate(self, assignment: Mapping[str, Scalar], modulus: Optional[int] = None) -> Scalar:
        """
        Specialize every variable that occurs.

        Args:
            assignment: Value for each variable used by the polynomial.
            modulus: If given, reduce the integer result modulo this number.

        Raises:
            DomainError: If a used variable has no value.
        """
        missing = [v for v in self.variables() if v not in assignment]
        if missing:
            raise DomainError(f"No value given for {', '.join(missing)}")
        values = [assignment.get(name, 0) for name in VARS]
        total: Scalar = 0
        for exp, c in self.terms.items():
            term: Scalar = c
            for value, e in zip(values, exp):
                if e:
                    term = term * (pow(value, e, modulus) if modulus and isinstance(value, int) else value ** e)
            total += term
        if modulus is not None:
            if isinstance(total, Fraction):
                return total.numerator * pow(total.denominator, -1, modulus) % modulus
            return total % modulus
        return total

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(sorted(self.terms.items(), reverse=True))

    def __eq__(self, other) -> bool:
        other = self.promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self:
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(VARS, exp) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ZMultiPoly({self})"


def symbols() -> Dict[str, ZMultiPoly]:
    """One ZMultiPoly per variable, keyed by name."""
    return {name: ZMultiPoly.var(name) for name in VARS}
