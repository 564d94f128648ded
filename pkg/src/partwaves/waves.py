"""Sylvester wave decomposition of restricted partition counts and the two
independent routes to the polynomial part.

The count p_a(n) splits as a sum of waves W_j(n) over the distinct divisors
j of the entries of `a`; W_1 is the polynomial part.  Each wave is evaluated
as an exact quadruple sum in cyclotomic arithmetic of order j: congruence
classes of box-tuple sums modulo j enter with a root-of-unity weight, and
everything stays cyclotomic until a single rational extraction at the end.

Two weightings are exposed:

* "twisted" (default): class ell is weighted by the sum of rho_j**(nu*(ell-n))
  over 0 <= nu < j coprime to j, i.e. the rho_j**(-nu*n) twist from
  Sylvester's classical wave definition applied to each class.  This variant
  satisfies the decomposition identity sum_j W_j(n) = p_a(n) exactly.
* "literal": class ell is weighted by the bare power rho_j**ell.  Kept
  callable for audit; with no dependence on n mod j it cannot reproduce the
  period-j behaviour of a wave and its extraction generally raises
  NotRational for j > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    CyclotomicNumber,
    NotRational,
    RationalPolynomial,
    bernoulli,
    root_of_unity,
    stirling_unsigned,
    to_rational,
)
from .partitions import PartsList, denumerant_dp
from .quasipoly import _box_counts

__all__ = [
    "LITERAL",
    "TWISTED",
    "DEFAULT_VARIANT",
    "NotDivisor",
    "divisor_set",
    "polynomial_part_average",
    "polynomial_part_bernoulli",
    "wave",
    "wave_decomposition_check",
    "WaveTerm",
    "WaveCheckRow",
    "WaveDecompositionReport",
]

LITERAL = "literal"
TWISTED = "twisted"
DEFAULT_VARIANT = TWISTED


class NotDivisor(ValueError):
    """The requested wave index divides none of the allowed part sizes."""


def _check_variant(variant: str) -> None:
    if variant not in (LITERAL, TWISTED):
        raise ValueError(f"variant must be {LITERAL!r} or {TWISTED!r}, got {variant!r}")


def divisor_set(a: PartsList) -> tuple[int, ...]:
    """Distinct divisors of the entries of `a`, ascending."""
    ds = set()
    for p in a.parts:
        for d in range(1, p + 1):
            if p % d == 0:
                ds.add(d)
    return tuple(sorted(ds))


# ---------------------------------------------------------------------------
# power sums over the tuple box


def _moments_from_counts(counts, scale: int, t_max: int) -> tuple[int, ...]:
    """Power sums sum(count[s] * s**t) for t = 0..t_max."""
    sums = [0] * (t_max + 1)
    for s, c in enumerate(counts):
        if not c:
            continue
        power = 1
        for t in range(t_max + 1):
            sums[t] += c * power
            power *= s
    return tuple(m * scale for m in sums)


def _residue_moments_from_counts(counts, scale: int, j: int, t_max: int):
    """Power sums as above, split by s mod j; index [residue][t]."""
    sums = [[0] * (t_max + 1) for _ in range(j)]
    for s, c in enumerate(counts):
        if not c:
            continue
        row = sums[s % j]
        power = 1
        for t in range(t_max + 1):
            row[t] += c * power
            power *= s
    return tuple(tuple(x * scale for x in row) for row in sums)


@lru_cache(maxsize=None)
def _box_moments(parts: tuple[int, ...], period: int, t_max: int):
    return _moments_from_counts(_box_counts(parts, period), 1, t_max)


@lru_cache(maxsize=None)
def _box_residue_moments(parts: tuple[int, ...], period: int, j: int, t_max: int):
    return _residue_moments_from_counts(_box_counts(parts, period), 1, j, t_max)


# ---------------------------------------------------------------------------
# polynomial part


def _poly_from_box_moments(r: int, D: int, moments) -> RationalPolynomial:
    """Expand sum over the box of prod((n-s)/D + ell, ell=1..r-1) / (D*(r-1)!)
    symbolically in n, given the power sums of s over the box."""
    coeffs = [Fraction(0)] * r
    for kk in range(r):
        st = stirling_unsigned(r, kk + 1)
        for m in range(kk + 1):
            num = st * math.comb(kk, m) * ((-1) ** (kk - m)) * moments[kk - m]
            coeffs[m] += Fraction(num, D**kk)
    return RationalPolynomial(coeffs) / (D * math.factorial(r - 1))


def polynomial_part_average(a: PartsList) -> RationalPolynomial:
    """Polynomial part of the restricted count via the box-average route:
    the congruence-free sum over all residue tuples, expanded exactly."""
    r = len(a.parts)
    moments = _box_moments(a.parts, a.D, r - 1)
    return _poly_from_box_moments(r, a.D, moments)


def _compositions(total: int, slots: int):
    # All tuples of `slots` non-negative integers summing to `total`.
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def polynomial_part_bernoulli(a: PartsList) -> RationalPolynomial:
    """Polynomial part via the Bernoulli-number route: an independent closed
    form whose coefficients are weighted products of Bernoulli numbers."""
    parts = a.parts
    r = len(parts)
    coeffs = [Fraction(0)] * r
    for u in range(r):
        acc = Fraction(0)
        for comp in _compositions(u, r):
            term = Fraction(1)
            for i_t, a_t in zip(comp, parts):
                term *= bernoulli(i_t) * a_t**i_t / math.factorial(i_t)
            acc += term
        coeffs[r - 1 - u] = Fraction((-1) ** u, math.factorial(r - 1 - u)) * acc
    return RationalPolynomial(coeffs) / math.prod(parts)


# ---------------------------------------------------------------------------
# waves


@lru_cache(maxsize=None)
def _literal_weight(j: int, e: int) -> CyclotomicNumber:
    return root_of_unity(j, e)


@lru_cache(maxsize=None)
def _sylvester_weight(j: int, delta: int) -> CyclotomicNumber:
    """Sum of rho_j**(nu*delta) over 0 <= nu < j with gcd(nu, j) == 1."""
    acc = CyclotomicNumber.zero(j)
    for nu in range(j):
        if math.gcd(nu, j) == 1:
            acc = acc + root_of_unity(j, nu * delta)
    return acc


def _assemble_wave(r: int, D: int, j: int, n: int, res_moments, variant: str) -> Fraction:
    """Evaluate the wave quadruple sum from per-residue power sums.

    Per congruence class ell the inner triple sum collapses, via the Stirling
    expansion of the rising product, to a rational combination of the power
    sums; the class weight is then applied in cyclotomic arithmetic and the
    total extracted to a rational at the very end.
    """
    acc = CyclotomicNumber.zero(j)
    for ell in range(1, j + 1):
        row = res_moments[ell % j]
        inner = Fraction(0)
        n_power = 1
        for m in range(1, r + 1):
            for k in range(m - 1, r):
                t = k - m + 1
                num = (
                    stirling_unsigned(r, k + 1)
                    * ((-1) ** t)
                    * math.comb(k, m - 1)
                    * row[t]
                    * n_power
                )
                inner += Fraction(num, D**k)
            n_power *= n
        if inner:
            if variant == TWISTED:
                weight = _sylvester_weight(j, (ell - n) % j)
            else:
                weight = _literal_weight(j, ell % j)
            acc = acc + weight * inner
    return to_rational(acc) / (D * math.factorial(r - 1))


def wave(j: int, a: PartsList, n: int, variant: str = DEFAULT_VARIANT) -> Fraction:
    """The j-th Sylvester wave of the restricted count of `a`, evaluated at n.

    Requires j to divide at least one entry of `a` (NotDivisor otherwise).
    Under the default twisted variant the waves over `divisor_set(a)` sum to
    the exact count; the literal variant generally raises NotRational."""
    _check_variant(variant)
    if j < 1:
        raise ValueError("wave index must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if all(p % j for p in a.parts):
        raise NotDivisor(f"{j} divides no entry of {a.parts}")
    r = len(a.parts)
    res_moments = _box_residue_moments(a.parts, a.D, j, r - 1)
    return _assemble_wave(r, a.D, j, n, res_moments, variant)


@dataclass(frozen=True)
class WaveTerm:
    j: int
    value: Fraction | None
    error: str = ""


@dataclass(frozen=True)
class WaveCheckRow:
    n: int
    terms: tuple[WaveTerm, ...]
    total: Fraction | None
    expected: int
    residual: Fraction | None
    ok: bool


@dataclass(frozen=True)
class WaveDecompositionReport:
    parts: tuple[int, ...]
    n_max: int
    variant: str
    divisors: tuple[int, ...]
    rows: tuple[WaveCheckRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def wave_decomposition_check(
    a: PartsList, n_max: int, variant: str = DEFAULT_VARIANT
) -> WaveDecompositionReport:
    """Check sum of waves over the divisor set against the DP oracle for all
    n <= n_max.  Failures (including irrational extractions) are data in the
    returned report, never exceptions; rows are in ascending (n, j) order."""
    _check_variant(variant)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    divisors = divisor_set(a)
    rows = []
    for n in range(n_max + 1):
        terms = []
        total = Fraction(0)
        broken = False
        for j in divisors:
            try:
                value = wave(j, a, n, variant)
            except NotRational as exc:
                terms.append(WaveTerm(j, None, str(exc)))
                broken = True
            else:
                terms.append(WaveTerm(j, value))
                total += value
        expected = denumerant_dp(a, n)
        if broken:
            rows.append(WaveCheckRow(n, tuple(terms), None, expected, None, False))
        else:
            residual = total - expected
            rows.append(
                WaveCheckRow(n, tuple(terms), total, expected, residual, residual == 0)
            )
    return WaveDecompositionReport(a.parts, n_max, variant, divisors, tuple(rows))
