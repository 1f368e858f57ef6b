"""Repeating-decimal period lengths via factorization, with a long-division oracle."""

from .arith import (
    WIDE_MAX,
    WORD_MAX,
    gcd,
    is_prime,
    lcm_checked,
    mulmod,
    powmod,
    powmod_wide,
    valuation,
)
from .errors import (
    DecPeriodError,
    NotPrime,
    OracleRangeExceeded,
    OutOfRange,
    UnsupportedPrime,
    WordOverflow,
)
from .factor import Factorization, factorize
from .period import (
    ORACLE_CAP,
    PeriodInfo,
    PrimePeriodRecord,
    compute_m_p,
    l_prime_power,
    naive_period_oracle,
    order_prime,
    period_length,
    prime_record,
)

from .expansion import (
    ExpansionInfo,
    c_digits,
    digit_divisibility,
    expand,
    reconstruct_check,
)
from .scan import (
    ScanKind,
    ScanReport,
    probe_m_ge_2,
    scan_full_reptend,
    scan_wieferich_m,
)

__version__ = "0.1.0"
