"""Exact integer/rational core: Bernoulli and Euler numbers, binomials,
pi-power closed forms, and the Laurent coefficients of tan/cot/sec/csc.

Everything here is exact `fractions.Fraction` / `int` arithmetic.  The
Bernoulli convention is B_1 = -1/2 (the z/(e^z - 1) generating function);
the rival B_1 = +1/2 convention is deliberately not used anywhere.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "PiPower",
    "LaurentCoeff",
    "binomial",
    "bernoulli",
    "euler_number",
    "zeta_even_exact",
    "beta_odd_exact",
    "zeta_e_exact",
    "taylor_coeff",
    "TRIG_FUNCTIONS",
]

# Exact rationals are stdlib fractions: always lowest terms, denominator > 0.
Rational = Fraction


@dataclass(frozen=True)
class PiPower:
    """Exact constant of the form ``coeff * pi**power``."""

    coeff: Fraction
    power: int

    def __post_init__(self) -> None:
        if self.power < 0:
            raise ValueError("power must be >= 0")

    def numeric(self) -> float:
        return float(self.coeff) * math.pi ** self.power


@dataclass(frozen=True)
class LaurentCoeff:
    """Exact coefficient of x**exponent in a trig Laurent expansion.

    exponent may be -1 (the leading term of cot and csc); nothing lower
    occurs.
    """

    value: Fraction
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < -1:
            raise ValueError("exponent must be >= -1")


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires n, k >= 0")
    return math.comb(n, k)


# Memo tables grow monotonically under a lock; completed prefixes are
# immutable, so concurrent readers are safe.
_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()

_euler_cache: list[int] = [1]
_euler_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2).

    Generated by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0, which pins
    the same sequence as the z/(e^z - 1) generating function.
    """
    if n < 0:
        raise ValueError("bernoulli requires n >= 0")
    if n >= len(_bernoulli_cache):
        with _bernoulli_lock:
            while len(_bernoulli_cache) <= n:
                m = len(_bernoulli_cache)
                acc = Fraction(0)
                for k in range(m):
                    acc += math.comb(m + 1, k) * _bernoulli_cache[k]
                _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def euler_number(n: int) -> int:
    """Exact Euler number E_n (secant numbers; E_n = 0 for odd n).

    Generated by sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0 for m >= 1.
    """
    if n < 0:
        raise ValueError("euler_number requires n >= 0")
    if n % 2 == 1:
        return 0
    half = n // 2
    if half >= len(_euler_cache):
        with _euler_lock:
            while len(_euler_cache) <= half:
                m = len(_euler_cache)
                acc = 0
                for k in range(m):
                    acc += math.comb(2 * m, 2 * k) * _euler_cache[k]
                _euler_cache.append(-acc)
    return _euler_cache[half]


def zeta_even_exact(n: int) -> PiPower:
    """zeta(2n) as an exact rational multiple of pi**(2n), n >= 1."""
    if n < 1:
        raise ValueError("zeta_even_exact requires n >= 1")
    sign = 1 if n % 2 == 1 else -1
    coeff = sign * bernoulli(2 * n) * Fraction(2 ** (2 * n - 1), math.factorial(2 * n))
    return PiPower(coeff, 2 * n)


def beta_odd_exact(n: int) -> PiPower:
    """beta(2n+1) as an exact rational multiple of pi**(2n+1), n >= 0."""
    if n < 0:
        raise ValueError("beta_odd_exact requires n >= 0")
    sign = 1 if n % 2 == 0 else -1
    coeff = Fraction(sign * euler_number(2 * n), 4 ** (n + 1) * math.factorial(2 * n))
    return PiPower(coeff, 2 * n + 1)


def zeta_e_exact(k: int) -> PiPower:
    """Euler-number analogue of the even-zeta closed form, k >= 1.

    Value is (-1)^(k+1) E_{2k} pi^(2k+1) / (4 (1 - 4^k) (2k)!).  k = 0 is
    rejected: the 1 - 4^k factor vanishes there (see zeta_e_weighted for the
    removable-singularity value).
    """
    if k < 1:
        raise ValueError("zeta_e_exact requires k >= 1 (k = 0 is singular)")
    sign = 1 if k % 2 == 1 else -1
    coeff = Fraction(sign * euler_number(2 * k), 4 * (1 - 4 ** k) * math.factorial(2 * k))
    return PiPower(coeff, 2 * k + 1)


TRIG_FUNCTIONS = ("tan", "cot", "sec", "csc")


def taylor_coeff(function_id: str, k: int) -> LaurentCoeff:
    """Exact coefficient of x**k in the expansion of tan, cot, sec or csc.

    cot and csc carry a genuine x**-1 leading term, kept at exponent -1
    instead of clearing denominators.  Parity-excluded powers return 0.
    """
    if function_id not in TRIG_FUNCTIONS:
        raise ValueError(f"unknown function id {function_id!r}")
    if k < -1:
        raise ValueError("k must be >= -1")
    if k == -1 and function_id in ("tan", "sec"):
        raise ValueError(f"{function_id} has no x**-1 term")

    zero = LaurentCoeff(Fraction(0), k)
    if function_id == "tan":
        # odd powers x^(2n-1), n >= 1
        if k < 1 or k % 2 == 0:
            return zero
        n = (k + 1) // 2
        sign = 1 if n % 2 == 1 else -1
        value = sign * 2 ** (2 * n) * (2 ** (2 * n) - 1) * bernoulli(2 * n)
        return LaurentCoeff(value / math.factorial(2 * n), k)
    if function_id == "cot":
        # odd powers x^(2n-1), n >= 0 (x^-1 at n = 0)
        if k % 2 == 0:
            return zero
        n = (k + 1) // 2
        sign = 1 if n % 2 == 0 else -1
        value = sign * 2 ** (2 * n) * bernoulli(2 * n)
        return LaurentCoeff(value / math.factorial(2 * n), k)
    if function_id == "sec":
        # even powers x^(2n), n >= 0
        if k % 2 == 1:
            return zero
        n = k // 2
        sign = 1 if n % 2 == 0 else -1
        return LaurentCoeff(Fraction(sign * euler_number(2 * n), math.factorial(2 * n)), k)
    # csc: odd powers x^(2n-1), n >= 0; 2^(2n-1) is 1/2 at n = 0
    if k % 2 == 0:
        return zero
    n = (k + 1) // 2
    sign = 1 if n % 2 == 1 else -1
    value = sign * 2 * (Fraction(2) ** (2 * n - 1) - 1) * bernoulli(2 * n)
    return LaurentCoeff(value / math.factorial(2 * n), k)
