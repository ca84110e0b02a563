"""The class-rotation transform and Type-2 isomorphism detection.

For m > 1 with m**3 | n, the map x |-> x + (x mod m)*t*m is a bijection of
Z_n that fixes every multiple of m and rotates the other residue classes.
Applied to the symmetric closure of a jump set it sometimes lands on the
closure of another jump set S; when S is outside the Type-1 orbit of R,
the two graphs are Type-2 isomorphic w.r.t. m — an isomorphism no unit
multiplier explains.

classify_pair runs the cheap algebraic tests first (signature filter,
Type-1 scan, Type-2 scan) and falls back to the brute-force oracle, never
guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .circulant import symmetric
from .modarith import check_canonical, cube_divisors, symmetric_closure, units
from .oracle import OracleResult, brute_force_isomorphic
from . import circulant as _circ


@dataclass(frozen=True)
class ThetaParams:
    """A valid (n, m, t) triple: m > 1, m**3 | n, 0 <= t < n/m."""

    n: int
    m: int
    t: int

    def __post_init__(self):
        if self.m <= 1:
            raise ValueError(f"m must exceed 1, got {self.m}")
        if self.n % (self.m ** 3) != 0:
            raise ValueError(f"m**3 = {self.m ** 3} does not divide n = {self.n}")
        if not 0 <= self.t <= self.n // self.m - 1:
            raise ValueError(f"t = {self.t} outside [0, {self.n // self.m - 1}]")


def theta_point(p: ThetaParams, x: int) -> int:
    """x + j*t*m mod n, where j is x's residue class mod m."""
    if not 0 <= x < p.n:
        raise ValueError(f"x = {x} outside [0, {p.n - 1}]")
    return (x + (x % p.m) * p.t * p.m) % p.n


def theta_map(p: ThetaParams) -> tuple[int, ...]:
    """The whole permutation of Z_n, as a tuple indexed by x."""
    return tuple(theta_point(p, x) for x in range(p.n))


def _require_anchor(m: int, jumps: Sequence[int]) -> None:
    if not any(r % m == 0 for r in jumps):
        raise ValueError(f"no jump in {jumps} is divisible by m = {m} (anchor required)")


def theta_set(p: ThetaParams, jumps: Iterable[int]) -> tuple[int, ...] | None:
    """Image of R under the transform, as a canonical jump set.

    The image of R with its negations is computed pointwise; if that
    image is symmetric the transformed graph is circulant again and its
    canonical jump set is returned, otherwise None. Requires an anchor
    jump divisible by m.
    """
    r = check_canonical(p.n, jumps)
    _require_anchor(p.m, r)
    n, m, t = p.n, p.m, p.t
    image = {(x + (x % m) * t * m) % n for x in symmetric_closure(n, r)}
    if not all((n - x) in image for x in image):
        return None
    return tuple(sorted({x if 2 * x <= n else n - x for x in image}))


def v_set(n: int, m: int, jumps: Iterable[int]) -> list[tuple[int, tuple[int, ...] | None]]:
    """Full sweep of theta_set over t = 0 .. n/m - 1.

    Each entry is (t, S) with S the canonical image when the transformed
    graph is circulant in form, else None.
    """
    if m not in cube_divisors(n):
        raise ValueError(f"m = {m} is not a cube divisor of n = {n}")
    r = check_canonical(n, jumps)
    _require_anchor(m, r)
    return [(t, theta_set(ThetaParams(n, m, t), r)) for t in range(n // m)]


def type2_set(n: int, m: int, jumps: Iterable[int]) -> set[tuple[int, ...]]:
    """R together with every Type-2 partner of R w.r.t. m.

    Partners are circulant images of R under some t >= 1 that lie outside
    R's Type-1 orbit. Always contains R itself.
    """
    from .type1 import type1_orbit

    r = check_canonical(n, jumps)
    if len(r) < 3:
        raise ValueError("Type-2 isomorphism needs at least 3 jumps")
    orbit = type1_orbit(n, r)
    out = {r}
    for t, s in v_set(n, m, r):
        if t > 0 and s is not None and s not in orbit:
            out.add(s)
    return out


@dataclass(frozen=True)
class Classification:
    """Outcome of comparing two circulant graphs of the same order.

    kind is one of "identical", "type1", "type2", "isomorphic-other",
    "not-isomorphic"; the witness fields that apply are filled in, the
    rest stay None. notes record how the verdict was reached.
    """

    kind: str
    x: int | None = None
    m: int | None = None
    t: int | None = None
    permutation: tuple[int, ...] | None = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def isomorphic(self) -> bool:
        return self.kind != "not-isomorphic"

    def scaled(self, k: int) -> "Classification":
        """The same relation on the scaled pair C_{kn}(kR), C_{kn}(kS).

        Scaled Type-2 graphs inherit the relation w.r.t. the same m by
        definition; the t witness does not transfer, only m does.
        """
        if k < 1:
            raise ValueError("scale factor must be positive")
        if self.kind != "type2":
            raise ValueError("scaling is defined for type2 classifications")
        return replace(self, t=None,
                       notes=self.notes + (f"inherited by scaling k={k}",))

    def describe(self) -> str:
        if self.kind == "identical":
            return "Identical"
        if self.kind == "type1":
            return f"Type1 x={self.x}"
        if self.kind == "type2":
            return f"Type2 m={self.m} t={self.t}"
        if self.kind == "isomorphic-other":
            return "IsomorphicOther perm=" + ",".join(map(str, self.permutation))
        return "NotIsomorphic"


def classify_pair(n: int, r_jumps: Iterable[int], s_jumps: Iterable[int],
                  oracle_budget: int = 10_000_000) -> Classification:
    """Decide the relation between C_n(R) and C_n(S).

    Cheapest tests first: identity, gcd-signature filter, Type-1 witness
    scan (units ascending), Type-2 scan (m ascending, then t ascending,
    smallest hit reported), brute-force oracle last. An exhausted oracle
    budget raises instead of guessing.
    """
    from .type1 import is_type1_pair

    r = check_canonical(n, r_jumps)
    s = check_canonical(n, s_jumps)
    if r == s:
        return Classification("identical", notes=("equal jump sets",))
    if _circ.gcd_signature(n, r) != _circ.gcd_signature(n, s):
        return Classification("not-isomorphic", notes=("gcd-signature mismatch",))

    x = is_type1_pair(n, r, s)
    if x is not None:
        return Classification("type1", x=x, notes=(f"multiplier witness x={x}",))

    if len(r) >= 3 and len(s) >= 3:
        for m in cube_divisors(n):
            if not (any(j % m == 0 for j in r) and any(j % m == 0 for j in s)):
                continue
            for t in range(1, n // m):
                if theta_set(ThetaParams(n, m, t), r) == s:
                    return Classification("type2", m=m, t=t,
                                          notes=(f"theta witness m={m} t={t}",))

    g1 = _circ.build(n, r, strict=False)
    g2 = _circ.build(n, s, strict=False)
    res: OracleResult = brute_force_isomorphic(g1, g2, budget=oracle_budget)
    if res.status == "budget-exceeded":
        raise RuntimeError(
            f"oracle budget exceeded after {res.nodes} nodes; verdict unknown")
    if res.status == "isomorphic":
        return Classification("isomorphic-other", permutation=res.witness.permutation,
                              notes=("oracle witness",))
    return Classification("not-isomorphic", notes=("oracle exhausted search",))


def _split(n: int, m: int, x: int) -> tuple[int, int]:
    if not 0 <= x < n:
        raise ValueError(f"x = {x} outside [0, {n - 1}]")
    return x // m, x % m


def _check_nm(n: int, m: int) -> None:
    if m <= 1 or n % (m ** 3) != 0:
        raise ValueError(f"need m > 1 with m**3 | n; got n={n} m={m}")


def theta_multi(n: int, m: int, shifts: Sequence[int], x: int) -> int:
    """Per-class shift amounts: class j rotates by shifts[j]*j*m.

    With all shifts equal this is the plain transform; with all zero it
    is the identity.
    """
    _check_nm(n, m)
    if len(shifts) != m or any(not 0 <= t <= n // m - 1 for t in shifts):
        raise ValueError(f"need {m} shifts in [0, {n // m - 1}], got {shifts}")
    q, j = _split(n, m, x)
    return (x + j * shifts[j] * m) % n


def _check_pairs(n: int, m: int, pairs: Sequence[tuple[int, int]]) -> None:
    _check_nm(n, m)
    if len(pairs) != m:
        raise ValueError(f"need {m} (multiplier, shift) pairs, got {len(pairs)}")
    for xj, tj in pairs:
        if math.gcd(n // m, xj) != 1:
            raise ValueError(f"class multiplier {xj} not coprime to {n // m}")
        if not 0 <= tj <= n // m - 1:
            raise ValueError(f"class shift {tj} outside [0, {n // m - 1}]")


def theta_affine(n: int, m: int, pairs: Sequence[tuple[int, int]], x: int) -> int:
    """Affine action per class: x = qm+j maps to j + (x_j*q + t_j)*m.

    Each class multiplier x_j must be coprime to n/m, which keeps every
    class on itself bijectively.
    """
    _check_pairs(n, m, pairs)
    q, j = _split(n, m, x)
    xj, tj = pairs[j]
    return (j + (xj * q + tj) * m) % n


def mu_affine(n: int, m: int, pairs: Sequence[tuple[int, int]], x: int) -> int:
    """Affine variant with class-weighted shifts: j + (x_j*q + j*t_j)*m.

    With all multipliers 1 this reduces to theta_multi, and with all
    shifts equal to t it is exactly the plain transform.
    """
    _check_pairs(n, m, pairs)
    q, j = _split(n, m, x)
    xj, tj = pairs[j]
    return (j + (xj * q + j * tj) * m) % n
