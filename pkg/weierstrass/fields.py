"""Exact field arithmetic: prime fields, small extension fields and the rationals."""

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple, Type

from sympy import Poly, isprime, symbols

from weierstrass.exceptions import (
    CharacteristicOutOfRange,
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    InfiniteField,
    InvalidModulus,
    NonPrimeModulus,
    ReducibleModulus,
)

PRIME = "prime"
EXTENSION = "extension"
RATIONAL = "rational"

MAX_CHARACTERISTIC = 2 ** 31
MAX_EXTENSION_DEGREE = 16

# Extension fields up to this order get a precomputed multiplication table.
MUL_TABLE_LIMIT = 81

# Moduli are listed low-to-high: (c0, c1, ..., ck) with ck = 1.
BUILTIN_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 3): (1, 2, 0, 1),
}

_T = symbols("T")


@dataclass(frozen=True)
class FieldSpec:
    """Description of a field: its kind, characteristic, degree and modulus."""

    kind: str
    p: Optional[int] = None
    k: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p, 1)

    @classmethod
    def extension(cls, p: int, k: int, modulus: Optional[Tuple[int, ...]] = None) -> "FieldSpec":
        return cls(EXTENSION, p, k, tuple(modulus) if modulus is not None else None)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL, None, 1)

    def to_literal(self) -> str:
        """Render the spec in the CLI field grammar."""
        if self.kind == RATIONAL:
            return "rational"
        if self.kind == PRIME:
            return f"q({self.p})"
        text = f"q({self.p}^{self.k}"
        if self.modulus is not None:
            text += ",m=" + ",".join(str(c) for c in self.modulus)
        return text + ")"


def is_irreducible(coeffs: Tuple[int, ...], p: int) -> bool:
    """Check irreducibility over GF(p) of a polynomial given low-to-high."""
    return Poly(list(reversed(coeffs)), _T, modulus=p).is_irreducible


def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """
    Return the built-in modulus for GF(p^k).

    Falls back to the lexicographically first monic irreducible of degree k
    when (p, k) is not in the built-in table.
    """
    if (p, k) in BUILTIN_MODULI:
        return BUILTIN_MODULI[(p, k)]
    for low in itertools.product(range(p), repeat=k):
        if low[0] == 0:
            continue
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise ReducibleModulus(f"No irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


# Coefficient-list helpers for GF(p)[T], lists low-to-high.

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _gfp_sub(a: List[int], b: List[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _gfp_divmod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    rem = list(a)
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = (rem[shift + len(b) - 1] * inv_lead) % p
        quot[shift] = c
        if c:
            for j, y in enumerate(b):
                rem[shift + j] = (rem[shift + j] - c * y) % p
    return _trim(quot), _trim(rem[: len(b) - 1])


class Field(ABC):
    """Abstract base class for all fields; elements are FieldElement values."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self._zero = FieldElement(self, self._coerce(0))
        self._one = FieldElement(self, self._coerce(1))

    # Raw arithmetic on canonical representations.

    @abstractmethod
    def _coerce(self, value):
        pass  # pragma: no cover

    @abstractmethod
    def _add(self, a, b):
        pass  # pragma: no cover

    @abstractmethod
    def _sub(self, a, b):
        pass  # pragma: no cover

    @abstractmethod
    def _mul(self, a, b):
        pass  # pragma: no cover

    @abstractmethod
    def _neg(self, a):
        pass  # pragma: no cover

    @abstractmethod
    def _inv(self, a):
        pass  # pragma: no cover

    @abstractmethod
    def _format(self, value) -> str:
        pass  # pragma: no cover

    @abstractmethod
    def _random_value(self, rng: random.Random):
        pass  # pragma: no cover

    def _values(self) -> Iterator:
        raise InfiniteField(f"{self.label} is infinite; its elements cannot be enumerated")

    def _is_zero(self, a) -> bool:
        return a == self._zero.value

    def _pow(self, a, n: int):
        result, base = self._one.value, a
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return result

    # Public handle API.

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    @property
    @abstractmethod
    def characteristic(self) -> int:
        pass  # pragma: no cover

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for an infinite field."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def label(self) -> str:
        return self.spec.to_literal()

    def __call__(self, value) -> "FieldElement":
        """Coerce an integer, fraction or canonical representation into the field."""
        if isinstance(value, FieldElement):
            if value.field is self or value.field == self:
                return value
            raise FieldMismatch(f"Element of {value.field.label} used in {self.label}")
        return FieldElement(self, self._coerce(value))

    def elements(self) -> List["FieldElement"]:
        """
        Enumerate every element exactly once.

        Returns:
            Elements in ascending lexicographic order of their representation.

        Raises:
            InfiniteField: If the field is the rationals.
        """
        return [FieldElement(self, v) for v in self._values()]

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, self._random_value(rng))

    def add(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        return self(a) + self(b)

    def sub(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        return self(a) - self(b)

    def mul(self, a: "FieldElement", b: "FieldElement") -> "FieldElement":
        return self(a) * self(b)

    def neg(self, a: "FieldElement") -> "FieldElement":
        return -self(a)

    def inv(self, a: "FieldElement") -> "FieldElement":
        return self(a).inverse()

    def pow(self, a: "FieldElement", n: int) -> "FieldElement":
        return self(a) ** n

    def eq(self, a: "FieldElement", b: "FieldElement") -> bool:
        return self(a) == self(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"

    def __reduce__(self):
        return (make_field, (self.spec,))


class PrimeField(Field):
    """GF(p) with residues in [0, p)."""

    def __init__(self, spec: FieldSpec):
        self.p = spec.p
        super().__init__(spec)

    def _coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"Denominator of {value} vanishes in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero(f"Cannot invert 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def _pow(self, a, n: int):
        return pow(a, n, self.p)

    def _format(self, value) -> str:
        return str(value)

    def _random_value(self, rng: random.Random):
        return rng.randrange(self.p)

    def _values(self) -> Iterator:
        return iter(range(self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> Optional[int]:
        return self.p


class ExtensionField(Field):
    """GF(p^k) in the polynomial basis {1, T, ..., T^(k-1)} modulo a monic irreducible."""

    def __init__(self, spec: FieldSpec):
        self.p = spec.p
        self.k = spec.k
        self.modulus = spec.modulus
        self._table: Optional[Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Tuple[int, ...]]] = None
        super().__init__(spec)
        if self.order <= MUL_TABLE_LIMIT:
            values = list(self._values())
            self._table = {(a, b): self._poly_mul(a, b) for a in values for b in values}

    def _coerce(self, value):
        if isinstance(value, (tuple, list)):
            if len(value) > self.k:
                raise FieldMismatch(f"Vector of length {len(value)} does not fit {self.label}")
            coeffs = [int(c) % self.p for c in value]
            return tuple(coeffs + [0] * (self.k - len(coeffs)))
        if isinstance(value, Fraction):
            return self._mul(self._coerce(value.numerator), self._inv(self._coerce(value.denominator)))
        return (int(value) % self.p,) + (0,) * (self.k - 1)

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _poly_mul(self, a, b):
        k, p, m = self.k, self.p, self.modulus
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def _mul(self, a, b):
        if self._table is not None:
            return self._table[(a, b)]
        return self._poly_mul(a, b)

    def _inv(self, a):
        if not any(a):
            raise DivisionByZero(f"Cannot invert 0 in {self.label}")
        p = self.p
        # Extended Euclid: r_i = s_i * a (mod modulus).
        r0, r1 = _trim(list(self.modulus)), _trim(list(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _gfp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _gfp_sub(s0, _gfp_mul(q, s1, p), p)
        scale = pow(r0[0], -1, p)
        inverse = _gfp_divmod([c * scale % p for c in s0], list(self.modulus), p)[1]
        return tuple(inverse + [0] * (self.k - len(inverse)))

    def _format(self, value) -> str:
        return ",".join(str(c) for c in value)

    def _random_value(self, rng: random.Random):
        return tuple(rng.randrange(self.p) for _ in range(self.k))

    def _values(self) -> Iterator:
        return itertools.product(range(self.p), repeat=self.k)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> Optional[int]:
        return self.p ** self.k


class RationalField(Field):
    """The rationals, as reduced fractions of arbitrary-precision integers."""

    RANDOM_BOUND = 100

    def _coerce(self, value):
        return Fraction(value)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("Cannot invert 0 in the rationals")
        return 1 / a

    def _format(self, value) -> str:
        return str(value)

    def _random_value(self, rng: random.Random):
        bound = self.RANDOM_BOUND
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    @property
    def characteristic(self) -> int:
        return 0


class FieldElement:
    """An element of a field, stored in its canonical representation."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(
                    f"Cannot combine elements of {self.field.label} and {other.field.label}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(other.value, self.value))

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** -n
        return FieldElement(self.field, self.field._pow(self.value, n))

    def inverse(self) -> "FieldElement":
        """
        Multiplicative inverse.

        Raises:
            DivisionByZero: If the element is zero.
        """
        return FieldElement(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and (self.field is other.field or self.field == other.field)

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return self.field._format(self.value)

    def __repr__(self) -> str:
        return f"{self.field.label}:{self}"

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))


class FieldFactory:
    """Factory class for creating field handles from specs."""

    _kinds: Dict[str, Type[Field]] = {
        PRIME: PrimeField,
        EXTENSION: ExtensionField,
        RATIONAL: RationalField,
    }

    @classmethod
    def resolve(cls, spec: FieldSpec) -> FieldSpec:
        """
        Validate a spec and fill in a missing extension modulus.

        Args:
            spec: The requested field spec.

        Returns:
            The canonical spec the field is built from.

        Raises:
            NonPrimeModulus: If p is not prime.
            CharacteristicOutOfRange: If p >= 2**31.
            DegreeOutOfRange: If k lies outside 1..16.
            InvalidModulus: If the modulus is not monic of degree k.
            ReducibleModulus: If the modulus factors over GF(p).
        """
        if spec.kind == RATIONAL:
            return FieldSpec.rational()
        if spec.kind not in cls._kinds:
            raise InvalidModulus(f"Unknown field kind: {spec.kind}")
        p = spec.p
        if p is None or p < 2 or not isprime(p):
            raise NonPrimeModulus(f"Characteristic {p} is not prime")
        if p >= MAX_CHARACTERISTIC:
            raise CharacteristicOutOfRange(f"Characteristic {p} must be below 2^31")
        if spec.kind == PRIME:
            return FieldSpec.prime(p)
        k = spec.k
        if not 1 <= k <= MAX_EXTENSION_DEGREE:
            raise DegreeOutOfRange(f"Extension degree {k} must lie in 1..{MAX_EXTENSION_DEGREE}")
        if k == 1 and spec.modulus is None:
            return FieldSpec.prime(p)
        modulus = spec.modulus if spec.modulus is not None else default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InvalidModulus(f"Modulus {modulus} must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"Modulus {modulus} is reducible over GF({p})")
        if k == 1:
            return FieldSpec.prime(p)
        return FieldSpec.extension(p, k, modulus)

    @classmethod
    def create_field(cls, spec: FieldSpec) -> Field:
        """Create (or fetch the cached) field handle for a spec."""
        return _build_field(cls.resolve(spec))

    @classmethod
    def get_available_kinds(cls) -> list:
        return list(cls._kinds.keys())


@lru_cache(maxsize=None)
def _build_field(spec: FieldSpec) -> Field:
    return FieldFactory._kinds[spec.kind](spec)


def make_field(spec: FieldSpec) -> Field:
    """Build the field handle described by a spec."""
    return FieldFactory.create_field(spec)


def prime_field(p: int) -> Field:
    return make_field(FieldSpec.prime(p))


def extension_field(p: int, k: int, modulus: Optional[Tuple[int, ...]] = None) -> Field:
    return make_field(FieldSpec.extension(p, k, modulus))


def rational_field() -> Field:
    return make_field(FieldSpec.rational())
