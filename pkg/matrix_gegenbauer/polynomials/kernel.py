# path: matrix_gegenbauer/polynomials/kernel.py

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Union

RationalLike = Union[int, str, Fraction]


class PoleError(ArithmeticError):
    """Raised when a Gamma argument sits on a pole outside the reciprocal-pole convention."""


class UnsupportedParameterError(ValueError):
    """Raised for Gegenbauer parameters outside lambda > -1/2, lambda != 0."""


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an integer, a Fraction or a "p/q" string into a Fraction.

    :param value: (int | str | Fraction) The value to convert.
    :return: (Fraction) The exact rational value.
    :raises ValueError: If the string cannot be parsed.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational string")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid rational string {value!r}: {e}")
    raise ValueError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is one."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


@lru_cache(maxsize=65536)
def pochhammer(a: Fraction, k: int) -> Fraction:
    """
    Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.

    :param a: (Fraction) Base.
    :param k: (int) Nonnegative length.
    :return: (Fraction) The exact product.
    """
    if k < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {k}")
    a = Fraction(a)
    result = Fraction(1)
    for offset in range(k):
        result *= a + offset
        if result == 0:
            break
    return result


def gamma_ratio_shift(base: RationalLike, top_shift: int, bot_shift: int,
                      reciprocal_pole: bool = False) -> Fraction:
    """
    Evaluate Gamma(base + top_shift) / Gamma(base + bot_shift) as a Pochhammer ratio.

    :param base: (Fraction) Common base of both Gamma arguments.
    :param top_shift: (int) Integer shift of the numerator argument.
    :param bot_shift: (int) Integer shift of the denominator argument.
    :param reciprocal_pole: (bool) Evaluate 1/Gamma at a pole as 0 instead of raising.
    :return: (Fraction) The exact ratio.
    :raises PoleError: If the numerator argument is a pole, or the denominator one
        without the reciprocal-pole convention.
    """
    base = as_rational(base)
    top = base + top_shift
    bot = base + bot_shift
    if is_nonpositive_integer(top):
        raise PoleError(f"Gamma pole in numerator at {format_rational(top)}")
    if is_nonpositive_integer(bot):
        if reciprocal_pole:
            return Fraction(0)
        raise PoleError(f"Gamma pole in denominator at {format_rational(bot)}")
    if top_shift >= bot_shift:
        return pochhammer(bot, top_shift - bot_shift)
    return 1 / pochhammer(top, bot_shift - top_shift)


def continued_ratio(z: Fraction, shift: int) -> Fraction:
    """
    Gamma(z + shift) / Gamma(z) read as a rational function of z.

    Nonnegative shifts are entire (a Pochhammer product); negative shifts divide
    and raise PoleError on a genuine pole.
    """
    if shift >= 0:
        return pochhammer(z, shift)
    denominator = pochhammer(z + shift, -shift)
    if denominator == 0:
        raise PoleError(f"Gamma ratio pole at z={format_rational(z)}, shift={shift}")
    return 1 / denominator


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def half_index(value: int) -> int:
    """Exact half of an even integer, -1 for odd input (an empty binomial slot)."""
    if value % 2:
        return -1
    return value // 2
