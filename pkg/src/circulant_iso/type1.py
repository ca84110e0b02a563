"""Multiplier (Type-1) isomorphism: the unit map x |-> ax on jump sets.

Multiplying a jump set by a unit of Z_n and reducing reflexively yields an
isomorphic circulant graph; the set of all such images is the Type-1 orbit
of the graph. Two graphs are Type-1 isomorphic exactly when one's jump set
lies in the other's orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .modarith import check_canonical, reflexive_reduce, units


def multiply(n: int, jumps: Iterable[int], x: int) -> tuple[int, ...]:
    """Image of a jump set under the unit multiplier x, canonically reduced."""
    r = check_canonical(n, jumps)
    if math.gcd(n, x) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    return reflexive_reduce((x * j for j in r), n)


@dataclass(frozen=True)
class Type1Orbit:
    """All jump sets reachable from the base by unit multipliers.

    witness maps each member to the smallest unit producing it; the base
    itself carries witness 1.
    """

    n: int
    base: tuple[int, ...]
    members: frozenset[tuple[int, ...]]
    witness: dict[tuple[int, ...], int]

    def __contains__(self, jumps) -> bool:
        return tuple(jumps) in self.members

    def __len__(self) -> int:
        return len(self.members)


def type1_orbit(n: int, jumps: Iterable[int]) -> Type1Orbit:
    """Compute the Type-1 orbit with minimal witnesses.

    Only units up to n/2 are scanned: x and n-x negate each other's
    products, and negation is absorbed by reflexive reduction, so they
    produce the same member.
    """
    base = check_canonical(n, jumps)
    members: dict[tuple[int, ...], int] = {}
    for x in units(n).half():
        img = reflexive_reduce((x * j for j in base), n)
        if img not in members:
            members[img] = x
    return Type1Orbit(n, base, frozenset(members), members)


def is_type1_pair(n: int, r_jumps: Iterable[int], s_jumps: Iterable[int]) -> int | None:
    """Smallest unit x with xR = S under reflexive reduction, or None."""
    r = check_canonical(n, r_jumps)
    s = check_canonical(n, s_jumps)
    if len(r) != len(s):
        return None
    for x in units(n).half():
        if reflexive_reduce((x * j for j in r), n) == s:
            return x
    return None


class ComposeCheck(NamedTuple):
    ok: bool
    composed: tuple[int, ...]
    direct: tuple[int, ...]


def compose_check(n: int, jumps: Iterable[int], x: int, y: int) -> ComposeCheck:
    """Verify that multiplying by y then x equals multiplying by xy mod n."""
    composed = multiply(n, multiply(n, jumps, y), x)
    direct = multiply(n, jumps, (x * y) % n)
    return ComposeCheck(composed == direct, composed, direct)
