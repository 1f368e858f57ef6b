"""Exception types raised by decperiod.

Every domain error carries a stable ``code`` string; the command-line front end
prints it as ``error:<code>: <message>``.
"""


class DecPeriodError(ValueError):
    code = "domain_error"


class OutOfRange(DecPeriodError):
    code = "out_of_range"


class WordOverflow(DecPeriodError, ArithmeticError):
    """A result or modulus does not fit the supported word width."""

    code = "overflow"


class NotPrime(DecPeriodError):
    code = "not_prime"


class UnsupportedPrime(DecPeriodError):
    """2 and 5 divide the base, so 1/p terminates and order/lifting are undefined."""

    code = "unsupported_prime"


class OracleRangeExceeded(DecPeriodError):
    code = "oracle_range_exceeded"
