"""Custom exceptions for the Weierstrass curve toolkit."""


class WeierstrassError(Exception):
    """Base exception for toolkit-related errors."""
    pass


class ConfigurationError(WeierstrassError):
    """Exception raised when there's a configuration issue."""
    pass


class ParseError(WeierstrassError):
    """Exception raised when a field, curve, point or element literal is malformed."""
    pass


class DomainError(WeierstrassError):
    """Exception raised when well-formed input is outside an operation's domain."""
    pass


class FieldError(DomainError):
    """Exception raised when a field cannot be constructed from its spec."""
    pass


class NonPrimeModulus(FieldError):
    """The characteristic given for a finite field is not prime."""
    pass


class ReducibleModulus(FieldError):
    """The modulus of an extension field factors over GF(p)."""
    pass


class DegreeOutOfRange(FieldError):
    """The extension degree lies outside 1..16."""
    pass


class CharacteristicOutOfRange(FieldError):
    """The characteristic does not fit the machine-word carrier (p < 2**31)."""
    pass


class InvalidModulus(FieldError):
    """The modulus has the wrong length or is not monic."""
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    """Exception raised when inverting the zero element."""
    pass


class InfiniteField(DomainError):
    """Exception raised when an operation needs a finite field."""
    pass


class FieldMismatch(DomainError):
    """Exception raised when operands live over different fields."""
    pass


class NonMonicDivisor(DomainError):
    """Exception raised when dividing by a polynomial that is not monic."""
    pass


class SingularPoint(DomainError):
    """Exception raised when an affine point fails the nonsingularity check."""
    pass


class DegenerateTangent(DomainError):
    """Exception raised when a tangent slope has a vanishing denominator."""
    pass


class SingularMatrix(DomainError):
    """Exception raised when a Smith normal form is requested for det = 0."""
    pass


class ZeroElement(DomainError):
    """Exception raised when an operation requires a nonzero ring element."""
    pass


class InvalidVariableChange(DomainError):
    """Exception raised when a variable change has u = 0."""
    pass


class SamplingExhausted(WeierstrassError):
    """Exception raised when no on-curve point is found within the retry bound."""
    pass


class VerificationFailure(WeierstrassError):
    """Exception raised when a verification suite reports a failure."""
    pass


class ReportLogError(WeierstrassError):
    """Exception raised when there's an issue persisting verification reports."""
    pass
