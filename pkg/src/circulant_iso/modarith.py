"""Exact modular arithmetic: reflexive reduction, unit groups, cube divisors.

All functions work on plain Python ints (arbitrary precision, so every
operation is exact for any order we care about). Residues are bare ints in
[0, n-1]; jump sets are sorted tuples of ints in [1, n//2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


def reflexive_reduce(values: Iterable[int], n: int) -> tuple[int, ...]:
    """Reduce each value mod n, fold anything above n/2 to its negation.

    Duplicates collapse; the result is the canonical jump set, sorted
    ascending. A value congruent to 0 mod n would be a self-loop jump and
    raises ValueError.
    """
    if n < 3:
        raise ValueError(f"modulus must be >= 3, got {n}")
    out = set()
    for v in values:
        r = v % n
        if r == 0:
            raise ValueError(f"value {v} reduces to 0 mod {n} (self-loop jump)")
        if 2 * r > n:
            r = n - r
        out.add(r)
    return tuple(sorted(out))


def check_canonical(n: int, jumps: Iterable[int]) -> tuple[int, ...]:
    """Validate a canonical jump set for order n; return it as a tuple."""
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    r = tuple(jumps)
    if len(r) == 0:
        raise ValueError("jump set is empty")
    if any(j < 1 or 2 * j > n for j in r):
        raise ValueError(f"jumps {r} not within [1, {n // 2}] for n={n}")
    if any(a >= b for a, b in zip(r, r[1:])):
        raise ValueError(f"jumps {r} not strictly increasing")
    return r


def symmetric_closure(n: int, jumps: Iterable[int]) -> frozenset[int]:
    """R together with its negations mod n (n/2 pairs with itself)."""
    s = set()
    for j in jumps:
        s.add(j % n)
        s.add((n - j) % n)
    if 0 in s:
        raise ValueError("closure contains 0")
    return frozenset(s)


@dataclass(frozen=True)
class UnitGroup:
    """Multiplicative group of residues coprime to the modulus."""

    modulus: int
    members: tuple[int, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return math.gcd(self.modulus, x % self.modulus) == 1

    def half(self) -> tuple[int, ...]:
        """One representative of each pair {x, n-x}; x and n-x act alike on jump sets."""
        return tuple(x for x in self.members if 2 * x <= self.modulus)


def units(n: int) -> UnitGroup:
    """All x in [1, n-1] with gcd(n, x) = 1, ascending."""
    if n < 3:
        raise ValueError(f"modulus must be >= 3, got {n}")
    return UnitGroup(n, tuple(x for x in range(1, n) if math.gcd(n, x) == 1))


def cube_divisors(n: int) -> tuple[int, ...]:
    """All m > 1 with m**3 dividing n, ascending.

    These are the only admissible class counts for the rotation transform.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    out = []
    m = 2
    while m * m * m <= n:
        if n % (m * m * m) == 0:
            out.append(m)
        m += 1
    return tuple(out)
