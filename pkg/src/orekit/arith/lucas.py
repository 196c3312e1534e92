from math import comb
from typing import List

from ..errors import NotPrimeError
from .field import FieldDescriptor, Scalar, is_prime


def base_p_digits(n: int, p: int) -> List[int]:
    """Base-p digits of n, least significant first ([] for n = 0)."""
    if n < 0:
        raise ValueError('negative integer has no base-p digits')
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def lucas_binom(n: int, r: int, p: int) -> int:
    """
    C(n, r) mod p, digit by digit in base p.

    Args:
        n: nonnegative integer
        r: nonnegative integer (r > n gives 0)
        p: prime

    Returns:
        An integer in [0, p)
    """
    if not is_prime(p):
        raise NotPrimeError(f'{p} is not prime')
    if r < 0 or n < 0:
        raise ValueError('binomial arguments must be nonnegative')
    if r > n:
        return 0
    result = 1
    while r:
        n, n_digit = divmod(n, p)
        r, r_digit = divmod(r, p)
        if r_digit > n_digit:
            return 0
        result = result * comb(n_digit, r_digit) % p
    return result


def binomial_in_field(field: FieldDescriptor, n: int, r: int) -> Scalar:
    """C(n, r) as a scalar of `field`: exact over Q, Lucas over F_p."""
    if field.characteristic:
        return lucas_binom(n, r, field.characteristic)
    return field.coerce(comb(n, r))


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError('valuation of 0 is infinite')
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_power_of(n: int, p: int) -> bool:
    """True when n = p^r for some r >= 0."""
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1
