"""Partition data model, enumeration, the DP counting oracle and the
elementary symmetric partition operations.

`denumerant_dp` is the ground truth the closed formulas elsewhere in the
package are checked against: it counts partitions with parts restricted to a
fixed list by the classic coin-counting dynamic program.
"""

from __future__ import annotations

import math
from itertools import combinations

__all__ = [
    "Partition",
    "PartsList",
    "SubsetProductMap",
    "enumerate_restricted",
    "denumerant_series",
    "denumerant_dp",
    "elementary_symmetric_value",
    "elementary_symmetric_partition",
    "positional_products",
]


class Partition:
    """A non-increasing sequence of positive integers; may be empty."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(p) for p in parts)
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError("partition parts must be positive")
            if i and ps[i - 1] < p:
                raise ValueError("partition parts must be non-increasing")
        self.parts = ps

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"


class PartsList:
    """Distinct allowed part sizes, kept in the order given.

    `D` is the least common multiple of the entries; it is the common period
    used by all the closed formulas.
    """

    __slots__ = ("parts", "D")

    def __init__(self, parts):
        ps = tuple(int(p) for p in parts)
        if not ps:
            raise ValueError("at least one part size is required")
        if any(p < 1 for p in ps):
            raise ValueError("part sizes must be positive")
        if len(set(ps)) != len(ps):
            raise ValueError("part sizes must be pairwise distinct")
        self.parts = ps
        self.D = math.lcm(*ps)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, PartsList):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"PartsList({self.parts!r})"


class SubsetProductMap:
    """Positional products of a partition: every strictly increasing index
    tuple of a fixed order mapped to the product of the parts it selects.

    Indices are 1-based.  The map is complete: it holds all C(length, order)
    tuples.  Being position-indexed it is strictly finer than the multiset of
    products.
    """

    __slots__ = ("length", "order", "products")

    def __init__(self, length: int, order: int, products):
        if length < 1:
            raise ValueError("length must be positive")
        if not 1 <= order <= length:
            raise ValueError(f"order must lie in 1..{length}, got {order}")
        cleaned = {}
        for key in products:
            tup = tuple(int(i) for i in key)
            if len(tup) != order:
                raise ValueError(f"index tuple {tup} does not have order {order}")
            if any(not 1 <= i <= length for i in tup):
                raise ValueError(f"index tuple {tup} leaves 1..{length}")
            if any(a >= b for a, b in zip(tup, tup[1:])):
                raise ValueError(f"index tuple {tup} is not strictly increasing")
            value = int(products[key])
            if value < 1:
                raise ValueError("products must be positive")
            cleaned[tup] = value
        if len(cleaned) != math.comb(length, order):
            raise ValueError(
                f"expected {math.comb(length, order)} index tuples, got {len(cleaned)}"
            )
        self.length = length
        self.order = order
        self.products = {key: cleaned[key] for key in sorted(cleaned)}

    def __getitem__(self, key):
        return self.products[tuple(key)]

    def items(self):
        return self.products.items()

    def __eq__(self, other):
        if isinstance(other, SubsetProductMap):
            return (
                self.length == other.length
                and self.order == other.order
                and self.products == other.products
            )
        return NotImplemented

    def __repr__(self):
        return (
            f"SubsetProductMap(length={self.length}, order={self.order}, "
            f"products={self.products!r})"
        )


def enumerate_restricted(n: int, a: PartsList) -> list[Partition]:
    """All partitions of n with parts drawn from `a`, lexicographically
    decreasing; for n == 0 the single empty partition."""
    if n < 0:
        raise ValueError("n must be non-negative")
    allowed = sorted(a.parts, reverse=True)
    out = []

    def descend(remaining, start, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for idx in range(start, len(allowed)):
            p = allowed[idx]
            if p <= remaining:
                prefix.append(p)
                descend(remaining - p, idx, prefix)
                prefix.pop()

    descend(n, 0, [])
    return out


def denumerant_series(a: PartsList, n_max: int) -> list[int]:
    """Counts of restricted partitions of 0..n_max (coin-counting DP)."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    ways = [0] * (n_max + 1)
    ways[0] = 1
    for p in a.parts:
        for m in range(p, n_max + 1):
            ways[m] += ways[m - p]
    return ways


def denumerant_dp(a: PartsList, n: int) -> int:
    """Number of partitions of n with parts in `a`; the package-wide oracle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return denumerant_series(a, n)[n]


def elementary_symmetric_value(lam: Partition, j: int) -> int:
    """Elementary symmetric function of the parts; 0 when j exceeds the length."""
    if j < 1:
        raise ValueError("j must be positive")
    if lam.length < j:
        return 0
    e = [1] + [0] * j
    seen = 0
    for p in lam.parts:
        seen += 1
        for t in range(min(j, seen), 0, -1):
            e[t] += p * e[t - 1]
    return e[j]


def elementary_symmetric_partition(lam: Partition, j: int) -> Partition:
    """Partition formed by all j-fold products of parts of `lam`."""
    if not 1 <= j <= lam.length:
        raise ValueError(f"j must lie in 1..{lam.length}, got {j}")
    prods = [math.prod(combo) for combo in combinations(lam.parts, j)]
    prods.sort(reverse=True)
    return Partition(prods)


def positional_products(lam: Partition, j: int) -> SubsetProductMap:
    """Position-indexed j-fold products of `lam` (1-based index tuples)."""
    if not 1 <= j <= lam.length:
        raise ValueError(f"j must lie in 1..{lam.length}, got {j}")
    prods = {}
    for idxs in combinations(range(1, lam.length + 1), j):
        prods[idxs] = math.prod(lam.parts[i - 1] for i in idxs)
    return SubsetProductMap(lam.length, j, prods)
