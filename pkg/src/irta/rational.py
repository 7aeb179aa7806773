"""Exact nonnegative rational time values.

All timestamps and clock valuations in this package are `fractions.Fraction`
instances.  Floats never enter the semantics: guard satisfaction at boundary
points (clock exactly 1 versus strictly above 1) has to be decided exactly,
and Python's arbitrary-precision integers rule out overflow.
"""

from fractions import Fraction

from .errors import NegativeTimeError, ZeroDenominatorError

Rational = Fraction


def rational(num: int, den: int = 1) -> Fraction:
    """Build the reduced nonnegative fraction num/den.

    Raises ZeroDenominatorError when den is 0 and NegativeTimeError when the
    value is negative.  The result always satisfies gcd(num, den) = 1 and
    den >= 1 (Fraction normalizes both).
    """
    try:
        value = Fraction(num, den)
    except ZeroDivisionError:
        raise ZeroDenominatorError(f"denominator of {num}/{den} is zero") from None
    if value < 0:
        raise NegativeTimeError(f"negative time value {num}/{den}")
    return value


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def fractional_part(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)
