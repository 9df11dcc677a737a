"""Binomiais e fatoriais exatos (inteiros Python de precisão arbitrária)"""

from functools import lru_cache

from scipy.special import comb, factorial


@lru_cache(maxsize=65536)
def binom(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return int(comb(n, k, exact=True))


@lru_cache(maxsize=1024)
def fact(n: int) -> int:
    return int(factorial(n, exact=True))


def exact_half(value: int, divisor: int = 2) -> int:
    """value / divisor exigindo divisibilidade (sem truncamento silencioso)"""
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise ArithmeticError(f"{value} não é divisível por {divisor}")
    return quotient
