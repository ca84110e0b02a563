"""Exhaustive per-order census of Type-1 classes and Type-2 partnerships.

Every canonical jump set of the order is enumerated, grouped into Type-1
orbits, and swept for Type-2 partners; unordered partner pairs and the
size histogram of maximal Type-2 sets are aggregated. Output is fully
deterministic: parallel and serial runs persist byte-identical files.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .circulant import build
from .modarith import cube_divisors, symmetric_closure, units
from .oracle import brute_force_isomorphic
from .type1 import multiply, type1_orbit

SCHEMA = 1
DEFAULT_CAP = 64


def enumerate_jump_sets(n: int, *, connected_only: bool = True, min_size: int = 1,
                        max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All canonical jump sets of order n, in lexicographic tuple order.

    connected_only keeps sets whose gcd together with n is 1. Lazy, so
    size-restricted scans at larger orders stay cheap.
    """
    if n < 3:
        raise ValueError(f"order must be >= 3, got {n}")
    pool = range(1, n // 2 + 1)
    limit = len(pool) if max_size is None else max_size

    def rec(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(pool)):
            cur = prefix + (pool[i],)
            if len(cur) >= min_size and (not connected_only or math.gcd(n, *cur) == 1):
                yield cur
            if len(cur) < limit:
                yield from rec(cur, i + 1)

    yield from rec((), 0)


def _theta_images(n: int, m: int, jumps: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """(t, canonical image) for every t >= 1 whose image is circulant in form."""
    closure = symmetric_closure(n, jumps)
    out = []
    for t in range(1, n // m):
        image = {(x + (x % m) * t * m) % n for x in closure}
        if all((n - x) in image for x in image):
            out.append((t, tuple(sorted({x if 2 * x <= n else n - x for x in image}))))
    return out


def _scan_one(args) -> tuple[tuple[int, ...], tuple[tuple[int, int, tuple[int, ...]], ...]]:
    """Type-2 hits of one jump set: (m, t, partner), smallest t per partner."""
    n, jumps = args
    hits = []
    for m in cube_divisors(n):
        if not any(j % m == 0 for j in jumps):
            continue
        orbit = type1_orbit(n, jumps)
        seen: set[tuple[int, ...]] = set()
        for t, image in _theta_images(n, m, jumps):
            if image in orbit or image in seen:
                continue
            seen.add(image)
            hits.append((m, t, image))
    return jumps, tuple(hits)


@dataclass(frozen=True)
class ClassEntry:
    """One Type-1 class: lex-smallest representative, members with their
    minimal multiplier witnesses, and every Type-2 hit based in the class."""

    rep: tuple[int, ...]
    orbit: tuple[tuple[tuple[int, ...], int], ...]
    hits: tuple[tuple[int, int, tuple[int, ...], tuple[int, ...]], ...]


@dataclass(frozen=True)
class CensusReport:
    """Aggregated census of one order.

    pair_count / tuple_counts cover every pair the definition admits.
    The *_minimal twins restrict to graphs whose moving part is minimal:
    exactly m jumps not divisible by m (one rotating configuration, the
    shape of every family pair). The published series totals follow the
    minimal convention wherever the two differ, so both are reported.
    """

    order: int
    connected_only: bool
    min_size: int
    max_size: int | None
    set_count: int
    classes: tuple[ClassEntry, ...]
    pair_count: int
    tuple_counts: tuple[tuple[int, int, int], ...]
    pair_count_minimal: int
    tuple_counts_minimal: tuple[tuple[int, int, int], ...]
    elapsed: float = field(default=0.0, compare=False)


def run_census(n: int, *, connected_only: bool = True, min_size: int = 3,
               max_size: int | None = None, cap: int = DEFAULT_CAP,
               workers: int = 1) -> CensusReport:
    """Classify every enumerated jump set of order n.

    Refuses orders above the cap. Classification of distinct sets is
    embarrassingly parallel (workers > 1 uses processes); results are
    merged in enumeration order so the report does not depend on the
    worker count.
    """
    if n > cap:
        raise ValueError(f"order {n} exceeds census cap {cap}; raise cap explicitly")
    start = time.perf_counter()
    all_sets = list(enumerate_jump_sets(n, connected_only=connected_only,
                                        min_size=min_size, max_size=max_size))

    # Type-1 classes partition the enumerated sets (orbits preserve size,
    # gcd signature and connectivity, so members never leave the domain).
    class_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    orbits: dict[tuple[int, ...], tuple[tuple[tuple[int, ...], int], ...]] = {}
    for jumps in all_sets:
        if jumps in class_of:
            continue
        orb = type1_orbit(n, jumps)
        members = tuple(sorted(orb.members))
        rep = members[0]
        for s in members:
            class_of[s] = rep
        orbits[rep] = tuple((s, orb.witness[s]) for s in members)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scanned = list(pool.map(_scan_one, ((n, s) for s in all_sets),
                                    chunksize=256))
    else:
        scanned = [_scan_one((n, s)) for s in all_sets]

    def minimal_moving(m: int, jumps: tuple[int, ...]) -> bool:
        return sum(1 for j in jumps if j % m) == m

    pairs: set[frozenset[tuple[int, ...]]] = set()
    pairs_minimal: set[frozenset[tuple[int, ...]]] = set()
    edges_by_m: dict[int, set[frozenset[tuple[int, ...]]]] = {}
    edges_by_m_minimal: dict[int, set[frozenset[tuple[int, ...]]]] = {}
    hits_by_class: dict[tuple[int, ...], list] = {rep: [] for rep in orbits}
    for jumps, hits in scanned:
        for m, t, partner in hits:
            edge = frozenset((jumps, partner))
            pairs.add(edge)
            edges_by_m.setdefault(m, set()).add(edge)
            if minimal_moving(m, jumps) and minimal_moving(m, partner):
                pairs_minimal.add(edge)
                edges_by_m_minimal.setdefault(m, set()).add(edge)
            hits_by_class[class_of[jumps]].append((m, t, jumps, partner))

    def histogram(edges_by: dict[int, set]) -> tuple[tuple[int, int, int], ...]:
        out = []
        for m in sorted(edges_by):
            hist: dict[int, int] = {}
            for comp in _components(edges_by[m]):
                hist[len(comp)] = hist.get(len(comp), 0) + 1
            for size in sorted(hist):
                out.append((m, size, hist[size]))
        return tuple(out)

    classes = tuple(
        ClassEntry(rep, orbits[rep], tuple(sorted(hits_by_class[rep])))
        for rep in sorted(orbits)
    )
    return CensusReport(
        order=n, connected_only=connected_only, min_size=min_size, max_size=max_size,
        set_count=len(all_sets), classes=classes, pair_count=len(pairs),
        tuple_counts=histogram(edges_by_m),
        pair_count_minimal=len(pairs_minimal),
        tuple_counts_minimal=histogram(edges_by_m_minimal),
        elapsed=time.perf_counter() - start,
    )


def _components(edges: set[frozenset[tuple[int, ...]]]) -> list[set]:
    adj: dict[tuple[int, ...], set] = {}
    for e in edges:
        a, b = sorted(e)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[tuple[int, ...]] = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = set()
        stack = [v]
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class MinimalCensus:
    """Census restricted to minimal-moving graphs w.r.t. one m.

    The domain is every jump set with exactly m jumps not divisible by m
    plus a nonempty anchored part; this is the domain the published
    series totals count over, and it stays feasible at orders where the
    full subset sweep does not.
    """

    order: int
    m: int
    connected_only: bool
    pair_count: int
    tuple_counts: tuple[tuple[int, int], ...]
    elapsed: float = field(default=0.0, compare=False)


def minimal_census(n: int, m: int, *, connected_only: bool = False) -> MinimalCensus:
    """Sweep every minimal-moving jump set of order n w.r.t. m.

    Multipliers act on the moving and anchored parts independently, so
    the Type-1 exclusion factors: a hit (moving image at some t, same
    anchored part) is Type-1 exactly when some unit maps the moving part
    onto the image while stabilizing the anchored part. That reduces the
    inner loop to small set intersections.
    """
    from itertools import combinations

    if m not in cube_divisors(n):
        raise ValueError(f"m = {m} is not a cube divisor of n = {n}")
    start = time.perf_counter()
    movers = [x for x in range(1, n // 2 + 1) if x % m]
    anchors = [x for x in range(1, n // 2 + 1) if x % m == 0]
    if len(anchors) > 22:
        raise ValueError(f"{len(anchors)} anchored jumps: subset sweep too large")

    half_units = units(n).half()

    # Circulant-form t-hits of each moving combination, with the units
    # mapping the combination onto each hit (empty set = proper Type-2
    # candidate regardless of the anchored part).
    trio_hits: dict[tuple[int, ...], list[tuple[tuple[int, ...], frozenset[int]]]] = {}
    for trio in combinations(movers, m):
        closure = symmetric_closure(n, trio)
        images = {}
        for t in range(1, n // m):
            img = {(x + (x % m) * t * m) % n for x in closure}
            if all((n - x) in img for x in img):
                canon = tuple(sorted({x if 2 * x <= n else n - x for x in img}))
                if canon != trio and canon not in images:
                    images[canon] = t
        if images:
            mults = {canon: frozenset(x for x in half_units
                                      if multiply(n, trio, x) == canon)
                     for canon in images}
            trio_hits[trio] = [(canon, mults[canon]) for canon in sorted(images)]

    edges: set[frozenset[tuple[tuple[int, ...], tuple[int, ...]]]] = set()
    for size in range(1, len(anchors) + 1):
        for anch in combinations(anchors, size):
            stab = frozenset(x for x in half_units
                             if multiply(n, anch, x) == anch)
            for trio, hits in trio_hits.items():
                if connected_only and math.gcd(n, *trio, *anch) != 1:
                    continue
                r = tuple(sorted(trio + anch))
                for canon, mults in hits:
                    if mults & stab:
                        continue
                    s = tuple(sorted(canon + anch))
                    edges.add(frozenset((r, s)))

    hist: dict[int, int] = {}
    for comp in _components(edges):
        hist[len(comp)] = hist.get(len(comp), 0) + 1
    return MinimalCensus(
        order=n, m=m, connected_only=connected_only, pair_count=len(edges),
        tuple_counts=tuple(sorted(hist.items())),
        elapsed=time.perf_counter() - start,
    )


def iter_pairs(report: CensusReport) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The distinct unordered Type-2 pairs of a report, lex sorted."""
    pairs = {tuple(sorted((base, partner)))
             for entry in report.classes
             for _, _, base, partner in entry.hits}
    return sorted(pairs)


def spot_check(report: CensusReport, sample: int = 20,
               budget: int = 10_000_000) -> list[tuple[tuple, tuple, bool]]:
    """Confirm a deterministic sample of the reported pairs by brute force."""
    pairs = iter_pairs(report)
    if not pairs:
        return []
    step = max(1, len(pairs) // max(1, sample))
    picked = pairs[::step][:sample]
    out = []
    for r, s in picked:
        g1 = build(report.order, r, strict=False)
        g2 = build(report.order, s, strict=False)
        out.append((r, s, brute_force_isomorphic(g1, g2, budget=budget).isomorphic))
    return out


def _json_header(report: CensusReport) -> dict:
    return {
        "schema": SCHEMA,
        "order": report.order,
        "connected_only": report.connected_only,
        "min_size": report.min_size,
        "max_size": report.max_size,
        "set_count": report.set_count,
        "class_count": len(report.classes),
        "pair_count": report.pair_count,
        "tuple_counts": [list(tc) for tc in report.tuple_counts],
        "pair_count_minimal": report.pair_count_minimal,
        "tuple_counts_minimal": [list(tc) for tc in report.tuple_counts_minimal],
    }


def persist(report: CensusReport, directory) -> tuple[Path, Path]:
    """Write the class file (one JSON line per class, header first) and the
    summary table. Stable field order; no timestamps in the payload."""
    d = Path(directory)
    try:
        d.mkdir(parents=True, exist_ok=True)
        main = d / f"census_n{report.order}.txt"
        summary = d / f"census_n{report.order}_summary.csv"
        lines = [json.dumps(_json_header(report), sort_keys=True)]
        for entry in report.classes:
            lines.append(json.dumps({
                "rep": list(entry.rep),
                "orbit": [[list(s), x] for s, x in entry.orbit],
                "hits": [[m, t, list(b), list(p)] for m, t, b, p in entry.hits],
            }, sort_keys=True))
        main.write_text("\n".join(lines) + "\n")

        rows = [("key", "value"),
                ("schema", str(SCHEMA)),
                ("order", str(report.order)),
                ("sets", str(report.set_count)),
                ("classes", str(len(report.classes))),
                ("pairs", str(report.pair_count)),
                ("pairs_minimal", str(report.pair_count_minimal))]
        for m, size, count in report.tuple_counts:
            rows.append((f"tuples[m={m}][size={size}]", str(count)))
        for m, size, count in report.tuple_counts_minimal:
            rows.append((f"tuples_minimal[m={m}][size={size}]", str(count)))
        summary.write_text("\n".join(f"{k},{v}" for k, v in rows) + "\n")
    except OSError as exc:
        raise OSError(f"cannot persist census to {d}: {exc}") from exc
    return main, summary


def load(main_path) -> CensusReport:
    """Rebuild a report from its class file; inverse of persist."""
    path = Path(main_path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise OSError(f"cannot load census from {path}: {exc}") from exc
    head = json.loads(lines[0])
    if head["schema"] != SCHEMA:
        raise ValueError(f"unsupported census schema {head['schema']}")
    classes = []
    for line in lines[1:]:
        obj = json.loads(line)
        classes.append(ClassEntry(
            rep=tuple(obj["rep"]),
            orbit=tuple((tuple(s), x) for s, x in obj["orbit"]),
            hits=tuple((m, t, tuple(b), tuple(p)) for m, t, b, p in obj["hits"]),
        ))
    return CensusReport(
        order=head["order"], connected_only=head["connected_only"],
        min_size=head["min_size"], max_size=head["max_size"],
        set_count=head["set_count"], classes=tuple(classes),
        pair_count=head["pair_count"],
        tuple_counts=tuple(tuple(tc) for tc in head["tuple_counts"]),
        pair_count_minimal=head["pair_count_minimal"],
        tuple_counts_minimal=tuple(tuple(tc) for tc in head["tuple_counts_minimal"]),
    )
