"""Exception types shared across the package."""


class SegcharError(Exception):
    """Base class for all library errors."""


class ParseError(SegcharError, ValueError):
    """Input text does not match the multisegment grammar."""


class InvalidSegment(SegcharError, ValueError):
    """Segment endpoints violate a <= b."""


class ZeroMultisegment(SegcharError, ValueError):
    """Operation requires a nonzero multisegment."""


class Overflow(SegcharError, ArithmeticError):
    """A stored count or coefficient left the 64-bit range.

    Raised instead of wrapping around; set QCHAR_COEFF=bigint to lift
    the width restriction for stress sweeps.
    """


class NoConnection(SegcharError, ValueError):
    """Tableau admits no connection, so theta is undefined."""


class NotInJ0(SegcharError, ValueError):
    """Bitableau has an end entry outside the end-point set of the host."""


class RankExceeded(SegcharError, ValueError):
    """Segment length (level) exceeds the rank bound N."""


class NonDivisible(SegcharError, ArithmeticError):
    """Shuffle coefficient not divisible by the indicator normalization.

    This never fires on correct inputs; it signals a logic bug.
    """


class CapExceeded(SegcharError, ValueError):
    """Requested computation exceeds a configured size cap."""
