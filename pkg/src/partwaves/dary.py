"""Partitions into powers of a base d: the exponent/logarithm bijection with
ordinary partitions, and the specialized window formulas for counting,
waves, and the polynomial part.

For n below d**(k+1) a partition into powers of d only uses the parts
1, d, ..., d**k, so with window k = floor(log_d(n)) the generic closed
formulas specialize to boxes whose strides are powers of d.  The window sum
runs over k variables with 0 <= t_i < d**(k+1-i), weighted sum
s = t_1 + d*t_2 + ... + d**(k-1)*t_k, period D = d**k.

The same variant switch as in `waves` applies here.  Besides the weighting,
the literal variant also keeps a defective reading of the window sum in
which the last summand repeats the next-to-last variable with stride
d**(k-1) and the final variable never enters the sum (for k >= 2); it is
retained for audit only."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import RationalPolynomial, bernoulli
from .partitions import Partition, PartsList
from .quasipoly import _sum_value_counts, denumerant_formula
from .waves import (
    DEFAULT_VARIANT,
    LITERAL,
    NotDivisor,
    _assemble_wave,
    _check_variant,
    _compositions,
    _moments_from_counts,
    _poly_from_box_moments,
    _residue_moments_from_counts,
)

__all__ = [
    "DAryPartition",
    "NotPowerOfD",
    "exponent_of_power",
    "exp_d",
    "log_d",
    "integer_log",
    "count_dary",
    "wave_d",
    "dary_divisor_set",
    "poly_part_d_average",
    "poly_part_d_bernoulli",
]


class NotPowerOfD(ValueError):
    """A value that had to be an exact power of the base is not one."""


def _check_base(d: int) -> None:
    if d < 2:
        raise ValueError("base must be at least 2")


def exponent_of_power(value: int, d: int) -> int:
    """The exact exponent e with d**e == value; NotPowerOfD otherwise."""
    _check_base(d)
    if value < 1:
        raise NotPowerOfD(f"{value} is not a power of {d}")
    e = 0
    v = value
    while v > 1:
        v, rem = divmod(v, d)
        if rem:
            raise NotPowerOfD(f"{value} is not a power of {d}")
        e += 1
    return e


class DAryPartition:
    """A partition whose parts are powers of a fixed base, stored as the
    non-increasing sequence of exponents."""

    __slots__ = ("base", "exponents")

    def __init__(self, base: int, exponents=()):
        _check_base(base)
        exps = tuple(int(c) for c in exponents)
        for i, c in enumerate(exps):
            if c < 0:
                raise ValueError("exponents must be non-negative")
            if i and exps[i - 1] < c:
                raise ValueError("exponents must be non-increasing")
        self.base = base
        self.exponents = exps

    @classmethod
    def from_parts(cls, base: int, parts) -> "DAryPartition":
        """Build from explicit parts, each an exact power of the base."""
        return cls(base, tuple(exponent_of_power(p, base) for p in parts))

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self.base**c for c in self.exponents)

    @property
    def length(self) -> int:
        return len(self.exponents)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def to_partition(self) -> Partition:
        return Partition(self.parts)

    def __eq__(self, other):
        if isinstance(other, DAryPartition):
            return self.base == other.base and self.exponents == other.exponents
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.exponents))

    def __repr__(self):
        return f"DAryPartition(base={self.base}, exponents={self.exponents!r})"


def exp_d(lam: Partition, d: int) -> DAryPartition:
    """Send each part p to the power d**(p-1); inverse of `log_d`."""
    _check_base(d)
    return DAryPartition(d, tuple(p - 1 for p in lam.parts))


def log_d(mu: DAryPartition) -> Partition:
    """Send each part d**c back to the ordinary part c + 1."""
    return Partition(tuple(c + 1 for c in mu.exponents))


def integer_log(d: int, n: int) -> int:
    """floor(log_d(n)) computed by exact repeated multiplication."""
    _check_base(d)
    if n < 1:
        raise ValueError("n must be positive")
    k = 0
    power = 1
    while power * d <= n:
        power *= d
        k += 1
    return k


def _powers_list(d: int, k: int) -> PartsList:
    return PartsList(tuple(d**i for i in range(k + 1)))


def count_dary(d: int, n: int, k: int | None = None) -> int:
    """Number of partitions of n into powers of d via the window formula.

    The window defaults to k = floor(log_d(n)); any k with n < d**(k+1) gives
    the same count (window stability)."""
    _check_base(d)
    if n < 1:
        raise ValueError("n must be positive")
    if k is None:
        k = integer_log(d, n)
    else:
        if k < 0:
            raise ValueError("window k must be non-negative")
        if n >= d ** (k + 1):
            raise ValueError(f"window too small: need n < {d}**{k + 1}")
    value = denumerant_formula(_powers_list(d, k), n)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"window formula produced a non-count: {value}")
    return int(value)


@lru_cache(maxsize=None)
def _window_counts(d: int, k: int, literal: bool):
    """Distribution of the window sum over the k-variable box (see module
    docstring for the defective literal reading kept for audit)."""
    if k < 2 or not literal:
        specs = tuple((d ** (i - 1), d ** (k + 1 - i)) for i in range(1, k + 1))
    else:
        specs = tuple((d ** (i - 1), d ** (k + 1 - i)) for i in range(1, k - 1))
        specs += ((d ** (k - 2) + d ** (k - 1), d * d), (0, d))
    return _sum_value_counts(specs)


def dary_divisor_set(d: int, n: int) -> tuple[int, ...]:
    """Divisors of d**k for the window k = floor(log_d(n)), ascending."""
    _check_base(d)
    period = d ** integer_log(d, n)
    return tuple(m for m in range(1, period + 1) if period % m == 0)


def wave_d(j: int, d: int, n: int, variant: str = DEFAULT_VARIANT) -> Fraction:
    """The j-th Sylvester wave of the d-ary count, via the window formula.

    Requires j to divide d**k for the window k = floor(log_d(n)); equals
    `wave(j, (1, d, ..., d**k), n)` under the same variant."""
    _check_variant(variant)
    _check_base(d)
    if j < 1:
        raise ValueError("wave index must be positive")
    if n < 1:
        raise ValueError("n must be positive")
    k = integer_log(d, n)
    period = d**k
    if period % j:
        raise NotDivisor(f"{j} does not divide {d}**{k}")
    counts, scale = _window_counts(d, k, variant == LITERAL)
    res_moments = _residue_moments_from_counts(counts, scale, j, k)
    return _assemble_wave(k + 1, period, j, n, res_moments, variant)


def poly_part_d_average(d: int, k: int) -> RationalPolynomial:
    """Polynomial part of the d-ary count for the window n < d**(k+1), via
    the congruence-free average over the window box."""
    _check_base(d)
    if k < 0:
        raise ValueError("window k must be non-negative")
    counts, scale = _window_counts(d, k, False)
    moments = _moments_from_counts(counts, scale, k)
    return _poly_from_box_moments(k + 1, d**k, moments)


def poly_part_d_bernoulli(d: int, k: int) -> RationalPolynomial:
    """The same window polynomial via the Bernoulli-number route, with the
    part powers entering through a single power-of-d weight per term."""
    _check_base(d)
    if k < 0:
        raise ValueError("window k must be non-negative")
    coeffs = [Fraction(0)] * (k + 1)
    for u in range(k + 1):
        acc = Fraction(0)
        for comp in _compositions(u, k + 1):
            term = Fraction(1)
            weight = 0
            for t, i_t in enumerate(comp):
                term *= bernoulli(i_t) / math.factorial(i_t)
                weight += t * i_t
            acc += term * d**weight
        coeffs[k - u] = Fraction((-1) ** u, math.factorial(k - u)) * acc
    return RationalPolynomial(coeffs) / d ** (k * (k + 1) // 2)
