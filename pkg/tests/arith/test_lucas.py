from math import comb

import pytest

from src.orekit.arith.field import FieldDescriptor
from src.orekit.arith.lucas import (
    base_p_digits,
    binomial_in_field,
    is_power_of,
    lucas_binom,
    p_adic_valuation,
)
from src.orekit.errors import NotPrimeError


@pytest.mark.parametrize('n, r, p, expected', [
    (4, 2, 2, 0),
    (3, 1, 2, 1),
    (6, 3, 3, 2),
    (9, 3, 3, 0),
    (10, 4, 7, 0),
    (5, 7, 5, 0),
    (0, 0, 3, 1),
])
def test_known_values(n, r, p, expected):
    assert lucas_binom(n, r, p) == expected


@pytest.mark.parametrize('p', [2, 3, 5, 7])
def test_agrees_with_exact_binomials(p):
    for n in range(201):
        for r in range(201):
            assert lucas_binom(n, r, p) == comb(n, r) % p, (n, r, p)


def test_rejects_composite_modulus():
    with pytest.raises(NotPrimeError):
        lucas_binom(5, 2, 4)


def test_rejects_negative_arguments():
    with pytest.raises(ValueError):
        lucas_binom(-1, 0, 3)


def test_digits():
    assert base_p_digits(0, 2) == []
    assert base_p_digits(11, 3) == [2, 0, 1]
    with pytest.raises(ValueError):
        base_p_digits(-3, 2)


def test_binomial_in_field():
    assert binomial_in_field(FieldDescriptor(0), 6, 3) == 20
    assert binomial_in_field(FieldDescriptor(3), 6, 3) == 2


def test_valuation_and_powers():
    assert p_adic_valuation(24, 2) == 3
    assert p_adic_valuation(7, 3) == 0
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)
    assert is_power_of(27, 3)
    assert is_power_of(1, 5)
    assert not is_power_of(12, 2)
    assert not is_power_of(0, 2)
