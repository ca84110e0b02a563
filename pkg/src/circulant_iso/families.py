"""Infinite families of Type-2 isomorphic pairs at orders 8n, and the
necessary-condition filter for {2, odd, odd} jump sets.

The basic family pairs R = {2, 2s-1, 4n-(2s-1)} with
S = {2, 2n-(2s-1), 2n+2s-1} at order 8n; rotating the odd classes by
t = n (or 3n) carries one onto the other, and no unit multiplier does.
The generalized family replaces the single even jump 2 by any coprime
even part shared between the two sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .modarith import reflexive_reduce, symmetric_closure
from .type1 import is_type1_pair
from .type2 import ThetaParams, theta_set


@dataclass(frozen=True)
class FamilyPair:
    """A constructed pair at order 8n with its expected rotation witness."""

    order: int
    s: int
    r_jumps: tuple[int, ...]
    s_jumps: tuple[int, ...]
    even_part: tuple[int, ...]
    expected_t: int
    degenerate: bool


def _family(n: int, s: int, even_part: Sequence[int], verify: bool) -> FamilyPair:
    order = 8 * n
    odd = 2 * s - 1
    if n < 2 or not 1 <= odd <= 2 * n - 1:
        raise ValueError(f"need n >= 2 and 1 <= 2s-1 <= 2n-1; got n={n}, s={s}")
    evens = tuple(sorted(set(even_part)))
    if any(e % 2 or not 1 <= e <= order // 2 for e in evens):
        raise ValueError(f"even part {evens} not canonical even jumps for order {order}")
    r = reflexive_reduce((odd, 4 * n - odd) + evens, order)
    s_ = reflexive_reduce((2 * n - odd, 2 * n + odd) + evens, order)
    degenerate = n == odd
    if verify and not degenerate:
        got = theta_set(ThetaParams(order, 2, n), r)
        if got != s_:
            raise AssertionError(f"family identity failed: theta gave {got}, expected {s_}")
    return FamilyPair(order, s, r, s_, evens, n, degenerate)


def family_42(n: int, s: int) -> FamilyPair:
    """Three-jump pair {2, 2s-1, 4n-(2s-1)} vs {2, 2n-(2s-1), 2n+2s-1}.

    Degenerate exactly when n = 2s-1, where both formulas emit the same
    set {2, n, 3n}; the pair is then flagged rather than rejected.
    """
    return _family(n, s, (2,), verify=True)


def family_43(n: int, s: int, p: Sequence[int]) -> FamilyPair:
    """The generalized family: odd pair plus even part {2*p_1 .. 2*p_{k-2}}.

    Requires gcd of the p_i equal to 1 and some even jump 2y with y
    coprime to 4n; the resulting pair is isomorphic of Type-1 or Type-2,
    never anything else.
    """
    ps = tuple(p)
    if len(ps) < 1:
        raise ValueError("even part must be nonempty (k >= 3)")
    if n == 2 * s - 1:
        raise ValueError(f"degenerate parameters n = 2s-1 = {n}")
    if math.gcd(*ps) != 1:
        raise ValueError(f"gcd of even-part factors {ps} must be 1")
    if not any(math.gcd(4 * n, y) == 1 for y in ps):
        raise ValueError(f"no factor in {ps} is coprime to 4n = {4 * n}")
    return _family(n, s, tuple(2 * q for q in ps), verify=True)


def corollary_2n(npow: int, s: int) -> FamilyPair:
    """The basic family specialized to orders 2**npow, npow >= 4."""
    if npow < 4:
        raise ValueError(f"need npow >= 4, got {npow}")
    if not 1 <= 2 * s - 1 <= 2 ** (npow - 2) - 1:
        raise ValueError(f"2s-1 = {2 * s - 1} outside [1, {2 ** (npow - 2) - 1}]")
    return _family(2 ** (npow - 3), s, (2,), verify=True)


@dataclass(frozen=True)
class ShiftIdentityReport:
    """Outcome of the four rotation-shift identity chains at one t."""

    order: int
    t: int
    identities: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.identities)


def shift_identities_check(n: int, s: int, p: Sequence[int], t: int) -> ShiftIdentityReport:
    """Check the t-shift identities on the family pair's symmetric closures.

    On the closures: the image of R at t equals its image at 2n+t and the
    images of S at n+t and 3n+t, and dually with R and S swapped. Shifts
    wrap mod 4n (the transform is periodic in t with period n/m).
    """
    pair = _family(n, s, tuple(2 * q for q in p), verify=False)
    order = pair.order
    if not 0 <= t <= 4 * n - 1:
        raise ValueError(f"t = {t} outside [0, {4 * n - 1}]")

    def image(jumps: tuple[int, ...], shift: int) -> frozenset[int]:
        params = ThetaParams(order, 2, shift % (4 * n))
        return frozenset((x + (x % 2) * params.t * 2) % order
                         for x in symmetric_closure(order, jumps))

    r, s_ = pair.r_jumps, pair.s_jumps
    checks = (
        ("R@t == R@2n+t", image(r, t) == image(r, 2 * n + t)),
        ("R@t == S@n+t", image(r, t) == image(s_, n + t)),
        ("R@t == S@3n+t", image(r, t) == image(s_, 3 * n + t)),
        ("S@t == S@2n+t", image(s_, t) == image(s_, 2 * n + t)),
        ("S@t == R@n+t", image(s_, t) == image(r, n + t)),
        ("S@t == R@3n+t", image(s_, t) == image(r, 3 * n + t)),
    )
    return ShiftIdentityReport(order, t, checks)


@dataclass(frozen=True)
class NecessaryConditions:
    """Which of the five necessary conditions a {2, odd, odd} set meets.

    A Type-2 hit for such a set at any t can only happen when all of
    them hold, and then only at the two candidate t values.
    """

    n: int
    jumps: tuple[int, ...]
    order_div_8: bool
    odd_sum_is_half: bool
    odd_not_n8: bool
    t_candidates: tuple[int, ...]
    order_at_least_16: bool

    @property
    def all_hold(self) -> bool:
        return (self.order_div_8 and self.odd_sum_is_half
                and self.odd_not_n8 and self.order_at_least_16)

    def allows(self, t: int) -> bool:
        return self.all_hold and t in self.t_candidates


def necessary_conditions_48(n: int, jumps: Sequence[int]) -> NecessaryConditions:
    """Evaluate the filter for R = {2, 2s-1, 2s'-1}."""
    r = tuple(sorted(jumps))
    odds = tuple(j for j in r if j % 2)
    if len(r) != 3 or 2 not in r or len(odds) != 2:
        raise ValueError(f"expected {{2, odd, odd}}, got {r}")
    a, b = odds
    div8 = n % 8 == 0
    candidates = (n // 8, 3 * n // 8) if div8 else ()
    return NecessaryConditions(
        n=n,
        jumps=r,
        order_div_8=div8,
        odd_sum_is_half=2 * (a + b) == n,
        odd_not_n8=not div8 or a != n // 8,
        t_candidates=candidates,
        order_at_least_16=n >= 16,
    )


def type2_family_check(pair: FamilyPair) -> bool:
    """No unit multiplier relates a non-degenerate basic-family pair."""
    if pair.degenerate:
        return False
    return is_type1_pair(pair.order, pair.r_jumps, pair.s_jumps) is None
