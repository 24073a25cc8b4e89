import itertools
import random

import numpy as np
import pytest

from errors import InvalidArgument
from gadic import (
    balanced_digits,
    compare_by_digits,
    expand,
    g_length,
    lambda_digits,
    lambda_params,
    lambda_value,
    validate,
)
from schemas import GAdicExpansion


@pytest.mark.parametrize("n, g, digits", [
    (46, 5, [1, -1, 2]),
    (-46, 5, [-1, 1, -2]),
    (11, 2, [-1, 0, -1, 0, 1]),
    (20233509, 10, [-1, 1, 5, 3, 3, 2, 0, 2]),
])
def test_expand_examples(n, g, digits):
    """Test known minimal expansions."""
    expansion = expand(n, g)
    assert expansion.digits == digits
    assert expansion.value == n
    assert validate(expansion) == []


@pytest.mark.parametrize("g", range(2, 13))
def test_expand_zero(g):
    """Test that zero has the empty expansion."""
    assert expand(0, g).digits == []
    assert g_length(0, g) == 0


def test_expand_rejects_small_base():
    """Test that bases below 2 are rejected."""
    with pytest.raises(InvalidArgument):
        expand(5, 1)
    with pytest.raises(InvalidArgument):
        g_length(5, 0)


@pytest.mark.parametrize("n, g, length", [
    (46, 5, 4),
    (11, 2, 3),
    (3, 2, 2),
    (20233509, 2, 11),
    (20233509, 10, 17),
    (20233509, 100, 87),
])
def test_g_length_examples(n, g, length):
    """Test known g-lengths."""
    assert g_length(n, g) == length


@pytest.mark.parametrize("g", [3, 5, 7, 11, 29])
def test_g_length_single_digit_odd_base(g):
    """Test that small integers are their own length for odd g."""
    for n in range((g - 1) // 2 + 1):
        assert g_length(n, g) == n


@pytest.mark.parametrize("g", range(2, 13))
def test_expansion_properties(g):
    """Test round trip, validity, symmetry and the shift rule."""
    for n in range(-3000, 3001):
        expansion = expand(n, g)
        assert validate(expansion) == []
        assert expand(-n, g).digits == [-d for d in expansion.digits]
        if n:
            assert expand(g * n, g).digits == [0] + expansion.digits


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_expansion_uniqueness(g):
    """Test that every valid digit sequence of length at most 5 is the expansion of its value."""
    bound = g // 2
    seen = {}
    for size in range(6):
        for digits in itertools.product(range(-bound, bound + 1), repeat=size):
            candidate = GAdicExpansion.from_digits(g, list(digits))
            if validate(candidate):
                continue
            assert candidate.value not in seen
            seen[candidate.value] = candidate.digits
            assert balanced_digits(candidate.value, g) == candidate.digits
    assert len(seen) > 1


@pytest.mark.parametrize("g", [2, 3, 7, 10])
def test_subadditivity(g):
    """Test the triangle inequality through 0."""
    rng = random.Random(g)
    for _ in range(2000):
        m, n = rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)
        assert g_length(m + n, g) <= g_length(m, g) + g_length(n, g)


def test_compare_by_digits_examples():
    """Test digit comparison on small cases."""
    assert compare_by_digits(46, 47, 5) == -1
    assert compare_by_digits(47, 46, 5) == 1
    assert compare_by_digits(123, 123, 4) == 0


@pytest.mark.parametrize("g", range(2, 13))
def test_compare_by_digits_matches_integer_order(g):
    """Test digit comparison against integer comparison."""
    values = range(-100, 101)
    for m in values:
        for n in values:
            assert compare_by_digits(m, n, g) == (m > n) - (m < n)

    rng = random.Random(g)
    for _ in range(20000):
        m, n = rng.randint(-3000, 3000), rng.randint(-3000, 3000)
        assert compare_by_digits(m, n, g) == (m > n) - (m < n)


@pytest.mark.parametrize("g", range(2, 13))
def test_leading_digit_order_on_the_full_window(g):
    """Test the leading-difference order of expansions for every pair in [-3000, 3000]."""
    values = np.arange(-3000, 3001)
    digits = [balanced_digits(int(n), g) for n in values]
    width = max(map(len, digits))
    table = np.zeros((len(values), width), dtype=np.int8)
    for row, ds in enumerate(digits):
        if ds:
            table[row, width - len(ds):] = ds[::-1]

    for start in range(0, len(values), 200):
        block = table[start:start + 200]
        signs = np.sign(block[:, None, :] - table[None, :, :])
        first = np.argmax(signs != 0, axis=2)
        order = np.take_along_axis(signs, first[..., None], axis=2)[..., 0]
        expected = np.sign(values[start:start + 200, None] - values[None, :])
        assert np.array_equal(order, expected)


def test_validate_reports_violations():
    """Test that broken expansions are reported."""
    assert validate(GAdicExpansion.from_digits(5, [3]))
    assert validate(GAdicExpansion.from_digits(2, [1, 1]))
    assert validate(GAdicExpansion.from_digits(5, [1, 0]))
    assert validate(GAdicExpansion(base=5, digits=[1, -1, 2], value=47))
    assert validate(GAdicExpansion.from_digits(4, [2, -1]))
    assert validate(GAdicExpansion.from_digits(5, [1, -1, 2])) == []


@pytest.mark.parametrize("g, k, expected", [
    (2, 5, 171),
    (3, 4, 14),
    (5, 3, 3),
    (19, 20, 542),
    (2, 20, 183251937963),
    (29, 20, 160),
])
def test_lambda_value_examples(g, k, expected):
    """Test closed-form values from the reference table."""
    assert lambda_value(g, k) == expected


@pytest.mark.parametrize("g", range(2, 40))
def test_lambda_value_of_one(g):
    """Test that 1 is the smallest integer of length 1."""
    assert lambda_value(g, 1) == 1


def test_lambda_rejects_bad_arguments():
    """Test precondition checks of lambda."""
    with pytest.raises(InvalidArgument):
        lambda_value(1, 3)
    with pytest.raises(InvalidArgument):
        lambda_value(5, 0)
    with pytest.raises(InvalidArgument):
        lambda_digits(5, 0)


def test_lambda_params_odd_and_even():
    """Test the case analysis quantities."""
    params = lambda_params(29, 20)
    assert (params.half, params.quotient, params.remainder) == (14, 1, 6)
    assert (params.low_coefficient, params.high_coefficient) == (-14, 6)

    params = lambda_params(2, 3)
    assert (params.half, params.quotient, params.remainder) == (1, 2, 0)


@pytest.mark.parametrize("g", range(2, 13))
def test_lambda_is_minimal(g):
    """Test lambda against a direct scan of g-lengths."""
    smallest = {}
    for n in range(1, 20001):
        smallest.setdefault(g_length(n, g), n)
    for k, n in smallest.items():
        if all(j in smallest for j in range(1, k + 1)):
            assert lambda_value(g, k) == n


@pytest.mark.parametrize("g", range(2, 30))
def test_lambda_strictly_increasing(g):
    """Test monotonicity of lambda on k = 1..20."""
    values = [lambda_value(g, k) for k in range(1, 21)]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("g, k, digits", [
    (3, 4, [-1, -1, -1, 1]),
    (5, 5, [-2, -2, 1]),
    (2, 3, [-1, 0, -1, 0, 1]),
])
def test_lambda_digits_examples(g, k, digits):
    """Test the digit patterns of lambda."""
    assert lambda_digits(g, k).digits == digits


@pytest.mark.parametrize("g", range(2, 30))
def test_lambda_digits_match_expansion(g):
    """Test that the block pattern is the expansion of lambda."""
    for k in range(1, 41):
        pattern = lambda_digits(g, k)
        assert pattern.value == lambda_value(g, k)
        assert pattern.digits == expand(pattern.value, g).digits
