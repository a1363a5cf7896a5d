from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
import math


number_types = (int, Fraction)


def is_prime(n):
    """Return whether `n` is a prime number (trial division)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    factor = 3
    while factor * factor <= n:
        if n % factor == 0:
            return False
        factor += 2
    return True


def binomial(n, k):
    """Return the binomial coefficient ``C(n, k)`` (zero outside ``0 <= k <= n``)."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def lcm(*numbers):
    """Return the least common multiple of positive integers."""
    return reduce(lambda a, b: a * b // math.gcd(a, b), numbers, 1)


def exponents_of_degree(nvars, degree):
    """
    Return all exponent tuples in `nvars` variables of total `degree`.

    The order is the one of :func:`itertools.combinations_with_replacement` over the
    variable indices, which is deterministic.
    """
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exponent = [0] * nvars
        for index in combo:
            exponent[index] += 1
        result.append(tuple(exponent))
    return result


def divisors(n):
    """Return the positive divisors of a nonzero integer, ascending."""
    n = abs(n)
    small, large = [], []
    factor = 1
    while factor * factor <= n:
        if n % factor == 0:
            small.append(factor)
            if factor * factor != n:
                large.append(n // factor)
        factor += 1
    return small + large[::-1]


def format_scalar(value):
    """Return a stable string for a field element (``3/2``, ``-1``, ``7``)."""
    return str(value)
