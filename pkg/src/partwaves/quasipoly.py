"""Closed-formula counting and quasi-polynomial fitting for restricted
partitions.

`denumerant_formula` evaluates the exact congruence-filtered sum over the
box of residue tuples; `fit_quasipolynomial` interpolates the per-residue
polynomials from the DP oracle and verifies them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import RationalPolynomial, interpolate
from .partitions import PartsList, denumerant_series

__all__ = [
    "VerificationFailed",
    "QuasiPolynomial",
    "denumerant_formula",
    "fit_quasipolynomial",
]


class VerificationFailed(ValueError):
    """A fitted quasi-polynomial disagreed with the enumeration oracle."""


def _sum_value_counts(specs) -> tuple[tuple[int, ...], int]:
    """Distribution of sum(stride_i * t_i) over the box 0 <= t_i < count_i.

    `specs` is a sequence of (stride, count) pairs.  Returns (counts, scale):
    counts[s] tuples have weighted sum s, each standing for `scale` box
    tuples (zero-stride coordinates only contribute multiplicity).
    """
    scale = 1
    counts = [1]
    for stride, count in specs:
        if count < 1 or stride < 0:
            raise ValueError("box specs need count >= 1 and stride >= 0")
        if stride == 0 or count == 1:
            scale *= count
            continue
        span = stride * count
        new_len = len(counts) + stride * (count - 1)
        out = [0] * new_len
        for t in range(new_len):
            v = out[t - stride] if t >= stride else 0
            if t < len(counts):
                v += counts[t]
            u = t - span
            if 0 <= u < len(counts):
                v -= counts[u]
            out[t] = v
        counts = out
    return tuple(counts), scale


@lru_cache(maxsize=None)
def _box_counts(parts: tuple[int, ...], period: int) -> tuple[int, ...]:
    # Distribution of a_1*t_1 + ... + a_r*t_r over 0 <= t_i < D/a_i.
    counts, scale = _sum_value_counts(tuple((p, period // p) for p in parts))
    assert scale == 1
    return counts


def denumerant_formula(a: PartsList, n: int) -> Fraction:
    """Exact closed-formula count of partitions of n with parts in `a`.

    Sums the rising product over residue tuples whose weighted sum is
    congruent to n modulo D, divided by (r-1)!.  The result is a Fraction
    that is always a non-negative integer equal to `denumerant_dp(a, n)`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = a.parts
    D = a.D
    r = len(parts)
    counts = _box_counts(parts, D)
    total = 0
    for s in range(n % D, len(counts), D):
        c = counts[s]
        if not c:
            continue
        q = (n - s) // D
        term = 1
        for ell in range(1, r):
            term *= q + ell
        total += c * term
    return Fraction(total, math.factorial(r - 1))


class QuasiPolynomial:
    """A family of per-residue polynomials representing a restricted count.

    `residue_polys[c]` applies to all n with n mod period == c; each has
    degree at most `degree` (the number of parts minus one).
    """

    __slots__ = ("period", "residue_polys", "degree")

    def __init__(self, period: int, residue_polys, degree: int):
        polys = tuple(residue_polys)
        if period < 1 or len(polys) != period:
            raise ValueError("need one residue polynomial per residue class")
        if any(p.degree > degree for p in polys):
            raise ValueError(f"residue polynomial exceeds degree {degree}")
        self.period = period
        self.residue_polys = polys
        self.degree = degree

    def evaluate(self, n: int) -> Fraction:
        return self.residue_polys[n % self.period].evaluate(n)

    def __eq__(self, other):
        if isinstance(other, QuasiPolynomial):
            return (
                self.period == other.period
                and self.residue_polys == other.residue_polys
            )
        return NotImplemented

    def __repr__(self):
        return (
            f"QuasiPolynomial(period={self.period}, degree={self.degree}, "
            f"residue_polys={self.residue_polys!r})"
        )


def fit_quasipolynomial(a: PartsList, n_max_check: int) -> QuasiPolynomial:
    """Interpolate the residue polynomials from the DP oracle and verify them.

    For each residue class c the degree-(r-1) polynomial through the r points
    c, c+D, ..., c+(r-1)D is fitted exactly; the result is then checked
    against the oracle for every n <= n_max_check.  Raises VerificationFailed
    on any disagreement.
    """
    if n_max_check < 0:
        raise ValueError("n_max_check must be non-negative")
    D = a.D
    r = len(a.parts)
    values = denumerant_series(a, max(n_max_check, r * D - 1))
    polys = []
    for c in range(D):
        pts = [(c + t * D, values[c + t * D]) for t in range(r)]
        polys.append(interpolate(pts))
    fitted = QuasiPolynomial(D, polys, r - 1)
    for n in range(n_max_check + 1):
        got = fitted.evaluate(n)
        if got != values[n]:
            raise VerificationFailed(
                f"fitted quasi-polynomial disagrees with the oracle at "
                f"n={n}: {got} != {values[n]}"
            )
    return fitted
