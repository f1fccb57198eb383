"""Parsing and rendering of field, element, curve and point literals."""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from weierstrass.curve import WeierstrassCurve
from weierstrass.exceptions import ParseError
from weierstrass.fields import EXTENSION, RATIONAL, Field, FieldElement, FieldSpec
from weierstrass.points import AffinePoint, Point, ZeroPoint

_FIELD_RE = re.compile(r"^q\((\d+)(?:\^(\d+)(?:,m=(\d+(?:,\d+)*))?)?\)$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")

INFINITY = "O"


def split_list(text: str) -> List[str]:
    """
    Split on top-level commas, keeping bracketed groups such as [1,0] whole.

    Raises:
        ParseError: On unbalanced brackets.
    """
    items, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"Unbalanced ']' in {text!r}")
        if ch == "," and depth == 0:
            items.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError(f"Unbalanced '[' in {text!r}")
    items.append("".join(current).strip())
    return items


class LiteralParser:
    """Parses the command-line literal grammar into library values."""

    @staticmethod
    def parse_field_spec(text: str) -> FieldSpec:
        """
        Parse `q(p)`, `q(p^k)`, `q(p^k,m=c0,...,ck)` or `rational`.

        Only the shape is checked here; primality and irreducibility are
        checked when the field is built.

        Raises:
            ParseError: If the text does not match the grammar.
        """
        compact = re.sub(r"\s+", "", text or "")
        if compact == RATIONAL:
            return FieldSpec.rational()
        match = _FIELD_RE.match(compact)
        if match is None:
            raise ParseError(f"Invalid field spec: {text!r}; expected q(p), q(p^k[,m=...]) or rational")
        p, k, modulus = match.groups()
        if k is None:
            return FieldSpec.prime(int(p))
        coeffs = tuple(int(c) for c in modulus.split(",")) if modulus else None
        return FieldSpec.extension(int(p), int(k), coeffs)

    @staticmethod
    def parse_integer(text: str, name: str = "value") -> int:
        compact = (text or "").strip()
        if not _INT_RE.match(compact):
            raise ParseError(f"Invalid integer for {name}: {text!r}")
        return int(compact)

    @staticmethod
    def parse_element(fld: Field, text: str) -> FieldElement:
        """
        Parse one element: an integer (n * 1), `a/b` outside extensions, or
        `c0,...,c(k-1)` / `[c0,...]` in an extension field.

        Raises:
            ParseError: If the literal is malformed for the field.
            DivisionByZero: If a denominator vanishes in the field.
        """
        compact = re.sub(r"\s+", "", text or "")
        if fld.spec.kind == EXTENSION:
            body = compact[1:-1] if compact.startswith("[") and compact.endswith("]") else compact
            parts = body.split(",")
            if not all(_INT_RE.match(c) for c in parts):
                raise ParseError(f"Invalid element of {fld.label}: {text!r}")
            if len(parts) == 1:
                return fld(int(parts[0]))
            if len(parts) > fld.spec.k:
                raise ParseError(f"Element {text!r} has more than {fld.spec.k} coefficients")
            return fld(tuple(int(c) for c in parts))
        if not _RATIONAL_RE.match(compact):
            raise ParseError(f"Invalid element of {fld.label}: {text!r}")
        try:
            value = Fraction(compact)
        except ZeroDivisionError:
            raise ParseError(f"Zero denominator in {text!r}")
        return fld(value.numerator if value.denominator == 1 else value)

    @classmethod
    def parse_elements(cls, fld: Field, text: str, count: int, what: str) -> List[FieldElement]:
        items = split_list(text or "")
        if len(items) != count:
            raise ParseError(f"{what} needs {count} comma-separated values, got {len(items)}: {text!r}")
        return [cls.parse_element(fld, item) for item in items]

    @classmethod
    def parse_curve(cls, fld: Field, text: str) -> WeierstrassCurve:
        """Parse `a1,a2,a3,a4,a6`."""
        return WeierstrassCurve(*cls.parse_elements(fld, text, 5, "A curve"))

    @classmethod
    def parse_point(cls, curve: WeierstrassCurve, text: str) -> Point:
        """
        Parse `O` or `x,y` and build the point.

        Raises:
            ParseError: If the literal is malformed.
            SingularPoint: If (x, y) is not a nonsingular point of the curve.
        """
        if (text or "").strip() == INFINITY:
            return ZeroPoint(curve)
        x, y = cls.parse_elements(curve.field, text, 2, "A point")
        return AffinePoint(curve, x, y)


# Rendering.

def render_element(e: FieldElement, in_list: bool = False) -> str:
    """Standalone elements render bare; inside a list, extension elements get brackets."""
    text = str(e)
    return f"[{text}]" if in_list and e.field.spec.kind == EXTENSION else text


def render_curve(curve: WeierstrassCurve) -> str:
    return ",".join(render_element(c, in_list=True) for c in curve.coefficients)


def render_point(p: Point) -> str:
    if p.is_zero:
        return INFINITY
    return f"{render_element(p.x, True)},{render_element(p.y, True)}"


def point_to_json(p: Point) -> Dict[str, object]:
    if p.is_zero:
        return {"inf": True}
    return {"x": render_element(p.x), "y": render_element(p.y)}


def parse_scan_fields(text: Optional[str]) -> Tuple[FieldSpec, ...]:
    """Parse a `;`-separated list of field specs."""
    specs = tuple(LiteralParser.parse_field_spec(part) for part in (text or "").split(";") if part.strip())
    if not specs:
        raise ParseError("Empty scan field list")
    return specs
