"""Weierstrass curves, their group law and coordinate rings."""

from weierstrass.coordring import CoordinateRing, smith_normal_form
from weierstrass.curve import VariableChange, WeierstrassCurve
from weierstrass.exceptions import (
    ConfigurationError,
    DomainError,
    ParseError,
    ReportLogError,
    SamplingExhausted,
    VerificationFailure,
    WeierstrassError,
)
from weierstrass.fields import FieldFactory, FieldSpec, make_field
from weierstrass.points import AffinePoint, ZeroPoint, add, group_structure, smul

__version__ = "1.0.0"
__all__ = [
    "WeierstrassCurve",
    "VariableChange",
    "CoordinateRing",
    "smith_normal_form",
    "FieldFactory",
    "FieldSpec",
    "make_field",
    "AffinePoint",
    "ZeroPoint",
    "add",
    "smul",
    "group_structure",
    "WeierstrassError",
    "ConfigurationError",
    "ParseError",
    "DomainError",
    "SamplingExhausted",
    "VerificationFailure",
    "ReportLogError",
]
