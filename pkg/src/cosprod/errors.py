"""Exception types shared across the package."""


class CosprodError(Exception):
    """Base class for all computation errors raised by this package."""


class AtomCapExceeded(CosprodError):
    """A convolution or spectrum would produce more atoms than the cap allows."""


class LocationOverflow(CosprodError):
    """Exact rational location arithmetic left the 64-bit range."""


class EmptyMeasure(CosprodError):
    """Operation requires a measure with positive total mass."""


class BadBase(CosprodError):
    """Product base must be an integer >= 2."""


class DepthTooLarge(CosprodError):
    """Requested construction depth exceeds the exact-arithmetic guard."""


class OutOfDomain(CosprodError):
    """Argument lies outside the function's domain."""


class BadRange(CosprodError):
    """Invalid histogram binning range."""


class BadStep(CosprodError):
    """Integration step does not divide the interval into whole subintervals."""
