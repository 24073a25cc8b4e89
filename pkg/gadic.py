# файл gadic.py

"""
Minimal g-adic expansions, g-length and the smallest integer of a given g-length.

Every integer n has exactly one expansion n = sum(e_i * g^i) whose digits satisfy

* odd g: |e_i| <= (g - 1) / 2;
* even g: |e_i| <= g / 2, and |e_i| = g / 2 forces |e_{i+1}| < g / 2 and e_i * e_{i+1} >= 0.

The sum of |e_i| is the word length of n in the Cayley graph of the integers with
generators +-g^i.
"""

import logging
from fractions import Fraction
from typing import List

from errors import InvalidArgument, SelfCheckError
from schemas import GAdicExpansion, LambdaParams

logger = logging.getLogger(__name__)


def _check_base(g: int) -> None:
    if g < 2:
        raise InvalidArgument(f"base must be at least 2, got {g}")


def balanced_digits(n: int, g: int) -> List[int]:
    """
    Digits of the minimal g-adic expansion of n, least significant first.

    Args:
        n (int): Any integer.
        g (int): The base, at least 2.

    Raises:
        InvalidArgument: If g < 2.

    Returns:
        List[int]: The digits; empty for n = 0.
    """
    _check_base(g)
    half = g // 2
    digits = []
    while n:
        r = n % g
        if g % 2 == 0 and r == half:
            # tie: +g/2 only if the next digit can be nonnegative and below g/2
            digit = half if ((n - half) // g) % g < half else -half
        elif r > half:
            digit = r - g
        else:
            digit = r
        digits.append(digit)
        n = (n - digit) // g
    return digits


def expand(n: int, g: int) -> GAdicExpansion:
    """
    Computes the minimal g-adic expansion [n]_g.

    Args:
        n (int): Any integer.
        g (int): The base, at least 2.

    Raises:
        InvalidArgument: If g < 2.

    Returns:
        GAdicExpansion: The unique expansion satisfying the digit constraints for the parity of g.
    """
    return GAdicExpansion(base=g, digits=balanced_digits(n, g), value=n)


def g_length(n: int, g: int) -> int:
    """
    Word length of n in the Cayley graph with generators +-g^i.

    Args:
        n (int): Any integer.
        g (int): The base, at least 2.

    Raises:
        InvalidArgument: If g < 2.

    Returns:
        int: Sum of the absolute digits of [n]_g.
    """
    return sum(abs(digit) for digit in balanced_digits(n, g))


def compare_by_digits(m: int, n: int, g: int) -> int:
    """
    Orders m and n using only their minimal expansions.

    The expansions are padded with zeros; the order is decided by the digits at the
    largest index where they differ.

    Args:
        m (int): First integer.
        n (int): Second integer.
        g (int): The base, at least 2.

    Returns:
        int: -1 if m < n, 0 if equal, 1 if m > n.
    """
    return compare_digit_lists(balanced_digits(m, g), balanced_digits(n, g))


def compare_digit_lists(left: List[int], right: List[int]) -> int:
    """Leading-difference comparison of two digit lists (least significant first)."""
    size = max(len(left), len(right))
    left = left + [0] * (size - len(left))
    right = right + [0] * (size - len(right))
    for a, b in zip(reversed(left), reversed(right)):
        if a != b:
            return -1 if a < b else 1
    return 0


def validate(expansion: GAdicExpansion) -> List[str]:
    """
    Lists every way an expansion breaks the minimal g-adic digit rules.

    Args:
        expansion (GAdicExpansion): The expansion to check.

    Returns:
        List[str]: Human-readable violations; empty when the expansion is valid.
    """
    g, digits = expansion.base, expansion.digits
    if g < 2:
        return [f"base {g} is below 2"]

    violations = []
    if digits and digits[-1] == 0:
        violations.append("leading digit is zero")

    value = 0
    for digit in reversed(digits):
        value = value * g + digit
    if value != expansion.value:
        violations.append(f"digits sum to {value}, not {expansion.value}")

    bound = (g - 1) // 2 if g % 2 else g // 2
    for i, digit in enumerate(digits):
        if abs(digit) > bound:
            violations.append(f"|digit {i}| = {abs(digit)} exceeds {bound}")

    if g % 2 == 0:
        half = g // 2
        for i, digit in enumerate(digits):
            if abs(digit) != half:
                continue
            following = digits[i + 1] if i + 1 < len(digits) else 0
            if abs(following) >= half:
                violations.append(f"digit {i} is +-{half} and digit {i + 1} has magnitude {abs(following)}")
            elif digit * following < 0:
                violations.append(f"digit {i} is +-{half} and digit {i + 1} has the opposite sign")
    return violations


def lambda_params(g: int, k: int) -> LambdaParams:
    """
    Case analysis behind the closed forms for the smallest integer of g-length k.

    Args:
        g (int): The base, at least 2.
        k (int): The length, at least 1.

    Raises:
        InvalidArgument: If g < 2 or k < 1.

    Returns:
        LambdaParams: quotient, remainder and the two block coefficients.
    """
    _check_base(g)
    if k < 1:
        raise InvalidArgument(f"length must be at least 1, got {k}")

    if g % 2:
        half = (g - 1) // 2
        quotient = 2 * k // (g - 1)
        remainder = k % half
        if remainder == 0:
            low, high = half, 0
        else:
            low, high = -half, remainder
    else:
        half = g // 2
        remainder = k % (g - 1)
        quotient = k // (g - 1) - 1 if remainder == 0 else k // (g - 1)
        if remainder == 0:
            low, high = half, half - 1
        elif remainder > half:
            low, high = half, remainder - half
        else:
            low, high = remainder, 0
    return LambdaParams(
        g=g, k=k, half=half, quotient=quotient, remainder=remainder,
        low_coefficient=low, high_coefficient=high,
    )


def lambda_value(g: int, k: int) -> int:
    """
    Smallest positive integer of g-length k, from the closed forms.

    The result is checked against g_length before it is returned.

    Args:
        g (int): The base, at least 2.
        k (int): The length, at least 1.

    Raises:
        InvalidArgument: If g < 2 or k < 1.
        SelfCheckError: If the closed form does not have g-length k.

    Returns:
        int: The smallest n > 0 with g_length(n, g) == k.
    """
    params = lambda_params(g, k)
    q, low, high = params.quotient, params.low_coefficient, params.high_coefficient
    if g % 2:
        # q can be 0, which makes g^(q-1) a fraction
        scale = Fraction(g) ** (q - 1)
        value = (1 - scale) / 2 + low * scale + high * scale * g
        if value.denominator != 1:
            raise SelfCheckError(f"closed form for g={g}, k={k} is not an integer: {value}")
        result = int(value)
    else:
        power = g ** (2 * q)
        result = g * (1 - power) // (2 * (1 + g)) + low * power + high * power * g

    if g_length(result, g) != k:
        raise SelfCheckError(f"closed form gives {result} for g={g}, k={k}, whose g-length is {g_length(result, g)}")
    return result


def lambda_digits(g: int, k: int) -> GAdicExpansion:
    """
    The digit pattern of the smallest integer of g-length k, built block by block.

    Odd g: q digits -b then b (remainder zero), or q digits -b then the remainder.
    Even g: q pairs (-b, -(b - 1)) followed by (b, b - 1), (b, r - b) or (r).

    Args:
        g (int): The base, at least 2.
        k (int): The length, at least 1.

    Raises:
        InvalidArgument: If g < 2 or k < 1.

    Returns:
        GAdicExpansion: The expansion of lambda_value(g, k).
    """
    params = lambda_params(g, k)
    b, q, r = params.half, params.quotient, params.remainder
    if g % 2:
        digits = [-b] * (q - 1) + [b] if r == 0 else [-b] * q + [r]
    else:
        digits = [-b, -(b - 1)] * q
        if r == 0:
            digits += [b, b - 1]
        elif r > b:
            digits += [b, r - b]
        else:
            digits += [r]
    while digits and digits[-1] == 0:
        digits.pop()
    return GAdicExpansion.from_digits(g, digits)
