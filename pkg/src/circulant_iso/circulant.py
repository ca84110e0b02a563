"""Circulant graph model: construction, adjacency, cycles, symmetry checks.

A circulant graph of order n is determined by its jump set R: vertex i is
adjacent to i+r and i-r (mod n) for every r in R. We store R canonically
(sorted, distinct, inside [1, n//2]) and derive everything else.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .modarith import check_canonical, symmetric_closure


@dataclass(frozen=True)
class JumpSet:
    """Order n plus canonical connection set; the identity of a circulant graph."""

    n: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        check_canonical(self.n, self.jumps)

    @classmethod
    def make(cls, n: int, jumps: Iterable[int]) -> "JumpSet":
        return cls(n, tuple(sorted(set(jumps))))

    def connected(self) -> bool:
        return math.gcd(self.n, *self.jumps) == 1

    def closure(self) -> frozenset[int]:
        return symmetric_closure(self.n, self.jumps)


@functools.lru_cache(maxsize=512)
def _neighbor_sets(n: int, jumps: tuple[int, ...]) -> tuple[frozenset[int], ...]:
    return tuple(
        frozenset(((i + r) % n for r in jumps)) | frozenset(((i - r) % n for r in jumps))
        for i in range(n)
    )


@dataclass(frozen=True)
class CirculantGraph:
    """Immutable circulant graph; all queries are read-only."""

    jumps: JumpSet

    @property
    def n(self) -> int:
        return self.jumps.n

    @property
    def r(self) -> tuple[int, ...]:
        return self.jumps.jumps

    def adjacent(self, i: int, j: int) -> bool:
        d = (i - j) % self.n
        if 2 * d > self.n:
            d = self.n - d
        return d in self.r

    def neighbors(self, i: int) -> frozenset[int]:
        return _neighbor_sets(self.n, self.r)[i % self.n]

    def degree(self) -> int:
        """2k-regular, or (2k-1)-regular when the half jump n/2 is present."""
        k = len(self.r)
        return 2 * k - 1 if 2 * self.r[-1] == self.n else 2 * k

    def edge_count(self, double_half_jump: bool = False) -> int:
        """Simple edge count; with double_half_jump=True the n/2 jump's
        perfect matching is counted with multiplicity 2 (the cycle-counting
        convention)."""
        k = len(self.r)
        count = self.n * k
        if 2 * self.r[-1] == self.n and not double_half_jump:
            count -= self.n // 2
        return count

    def edges(self) -> Iterator[tuple[int, int]]:
        """Simple edges as ordered pairs (i, j), i < j, each exactly once.

        Every edge {i, i+r} arises once over i in [0, n), except the half
        jump whose matching edges arise from both endpoints.
        """
        half = 2 * self.r[-1] == self.n
        for i in range(self.n):
            for r in self.r:
                if r == self.r[-1] and half and 2 * i >= self.n:
                    continue
                j = (i + r) % self.n
                yield (min(i, j), max(i, j))


def build(n: int, jumps: Iterable[int], strict: bool = True) -> CirculantGraph:
    """Construct a circulant graph from a canonical jump set.

    Strict mode (the default) rejects disconnected jump sets, i.e. those
    with gcd(R, n) > 1; pass strict=False for census experiments on the
    full subset lattice.
    """
    js = JumpSet(n, check_canonical(n, jumps))
    if strict and not js.connected():
        raise ValueError(f"jump set {js.jumps} is disconnected for n={n} "
                         f"(gcd {math.gcd(n, *js.jumps)})")
    return CirculantGraph(js)


@dataclass(frozen=True)
class PeriodicCycleDecomposition:
    """The gcd(n, r) disjoint cycles traced by a single jump r."""

    n: int
    period: int
    cycle_count: int
    cycle_length: int
    cycles: tuple[tuple[int, ...], ...]


def periodic_cycles(n: int, r: int) -> PeriodicCycleDecomposition:
    """Decompose the single-jump graph into its periodic cycles.

    Cycle j starts at vertex j and steps by r; there are gcd(n, r) of
    them, each of length n / gcd(n, r), and together they partition Z_n.
    """
    if not 1 <= r <= n // 2:
        raise ValueError(f"jump {r} out of range for n={n}")
    d = math.gcd(n, r)
    length = n // d
    cycles = []
    for j in range(d):
        v = j
        cyc = []
        for _ in range(length):
            cyc.append(v)
            v = (v + r) % n
        cycles.append(tuple(cyc))
    return PeriodicCycleDecomposition(n, r, d, length, tuple(cycles))


@dataclass(frozen=True)
class MirrorReport:
    n: int
    m: int
    holds: bool
    counterexample: int | None
    checked: int


def mirror_class_check(n: int, m: int) -> MirrorReport:
    """Check the mirror property of residue classes mod m.

    For every x: x lies in class j exactly when n-1-x lies in class
    m-1-j. This is what makes the rotated classes meet the symmetric
    equidistance condition in mirrored pairs; there must be no
    counterexample.
    """
    if m <= 1 or n % m != 0:
        raise ValueError(f"m={m} must exceed 1 and divide n={n}")
    for x in range(n):
        j = x % m
        if (n - 1 - x) % m != m - 1 - j:
            return MirrorReport(n, m, False, x, x + 1)
    return MirrorReport(n, m, True, None, n)


def symmetric(n: int, residues: Iterable[int]) -> bool:
    """True iff the residue set equals its own negation mod n."""
    s = set(residues)
    if any(not 1 <= x <= n - 1 for x in s):
        raise ValueError(f"residues must lie in [1, {n - 1}]")
    return all((n - x) in s for x in s)


def gcd_signature(n: int, jumps: Iterable[int]) -> tuple[int, ...]:
    """Sorted multiset of gcd(n, r) over the jump set.

    Isomorphic circulant graphs have equal signatures, so an unequal
    signature is a cheap non-isomorphism certificate.
    """
    r = check_canonical(n, jumps)
    return tuple(sorted(math.gcd(n, j) for j in r))


_DOT_PALETTE = (
    "red", "blue", "green", "orange", "purple",
    "brown", "cyan", "magenta", "gold", "gray",
)


def to_dot(g: CirculantGraph) -> str:
    """DOT text for debugging: one color class per jump size."""
    color = {r: _DOT_PALETTE[i % len(_DOT_PALETTE)] for i, r in enumerate(g.r)}
    lines = [f"graph C_{g.n} {{"]
    for i in range(g.n):
        lines.append(f'  v{i};')
    for i, j in g.edges():
        d = (j - i) % g.n
        if 2 * d > g.n:
            d = g.n - d
        lines.append(f'  v{i} -- v{j} [color={color[d]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
