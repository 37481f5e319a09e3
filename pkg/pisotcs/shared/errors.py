"""
Exception hierarchy for pisotcs.

None of these derive from ValueError: raised inside a pydantic validator
they propagate as-is instead of being folded into a ValidationError.
"""


class PisotcsError(Exception):
    """Base class for errors raised by pisotcs."""
    pass


class InvalidSpec(PisotcsError):
    """Exception raised when deformation or Pisot parameters violate their inequalities."""
    pass


class DegenerateSpec(InvalidSpec):
    """Exception raised for the excluded case (s, r) = (2, +1), where p = q = 1."""
    pass


class OutOfDomain(PisotcsError):
    """Exception raised when an argument lies outside a function's domain."""
    pass


class NonConvergent(PisotcsError):
    """Exception raised when a series, product or quadrature misses its tolerance."""
    pass


class DivergentProduct(PisotcsError):
    """Exception raised when a q-Pochhammer denominator has a vanishing factor."""
    pass
