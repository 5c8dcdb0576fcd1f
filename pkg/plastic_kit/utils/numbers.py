"""
Exact number formatting
"""
from fractions import Fraction


def format_exact(value) -> str:
    """
    Decimal string for integers, "num/den" for proper rationals.

    Big integers stay exact in any JSON consumer this way.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_complex(value: complex) -> dict:
    value = complex(value)
    return {'re': value.real, 'im': value.imag}
