"""Isomorph-free generation of all (4,5,6)-fullerenes up to a vertex bound.

Two independent routes:

* ``enumerate_fullerenes`` works on the dual side: simple sphere
  triangulations are grown from K4 by vertex splitting (every simple
  triangulation on five or more vertices contracts to a smaller one, so
  level-by-level splitting with isomorph rejection is complete), those with
  all degrees in {4, 5, 6} are dualized, and the duals are validated.
* ``naive_enumerate`` searches rotation systems directly in a breadth-first
  normal form with face-size pruning; it exists only to certify the fast
  route and assumes nothing about the structure of the result.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graphs import (GraphError, PlaneCubicGraph, canonical_code, faces,
                     from_rotation, is_fullerene, rotation_code,
                     validate_fullerene)

DEFAULT_BOUND = 20
NAIVE_BOUND = 14


class EnumerationError(ValueError):
    pass


class BoundExceeded(EnumerationError):
    pass


class OddVertexCount(EnumerationError):
    pass


def configured_bound() -> int:
    value = os.environ.get("FULLEX_NMAX")
    if value is None:
        return DEFAULT_BOUND
    return int(value)


@dataclass(frozen=True)
class Catalogue:
    n: int
    graphs: tuple[PlaneCubicGraph, ...]
    counts: dict[tuple[int, int, int], int]

    @property
    def size(self) -> int:
        return len(self.graphs)

    def canonical_codes(self) -> list[bytes]:
        return [canonical_code(g) for g in self.graphs]


def _catalogue_from(graphs) -> tuple[tuple[PlaneCubicGraph, ...], dict]:
    by_code: dict[bytes, PlaneCubicGraph] = {}
    for g in graphs:
        by_code.setdefault(canonical_code(g), g)
    ordered = tuple(by_code[c] for c in sorted(by_code))
    counts: dict[tuple[int, int, int], int] = {}
    for g in ordered:
        inv = faces(g)
        key = (inv.p4, inv.p5, inv.p6)
        counts[key] = counts.get(key, 0) + 1
    return ordered, counts


# ---------------------------------------------------------------------------
# Dual route: triangulations by vertex splitting
# ---------------------------------------------------------------------------

Rotation = tuple[tuple[int, ...], ...]

_K4_ROT: Rotation = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

_tri_levels: list[dict[bytes, Rotation]] = []


def _check_triangulation(n: int, rot: Rotation) -> bool:
    succ = [{r[i]: r[(i + 1) % len(r)] for i in range(len(r))} for r in rot]
    seen: set[tuple[int, int]] = set()
    nfaces = 0
    for v in range(n):
        for w in rot[v]:
            if (v, w) in seen:
                continue
            a, b = v, w
            steps = 0
            while (a, b) not in seen:
                seen.add((a, b))
                a, b = b, succ[b][a]
                steps += 1
            if steps != 3:
                return False
            nfaces += 1
    m = sum(len(r) for r in rot) // 2
    return n - m + nfaces == 2


def _split_vertex(n: int, rot: Rotation, w: int, a: int, b: int) -> Rotation:
    """Split vertex w along rotation positions a < b; new vertex gets id n."""
    r = rot[w]
    v_new = n
    arc_u = r[a:b + 1]
    arc_v = r[b:] + r[:a + 1]
    new_rot = list(rot)
    new_rot[w] = arc_u + (v_new,)
    new_rot.append(arc_v + (w,))
    p, q = r[a], r[b]
    for x in set(r):
        rr = list(rot[x])
        i = rr.index(w)
        if x == p:
            rr[i:i + 1] = [w, v_new]
        elif x == q:
            rr[i:i + 1] = [v_new, w]
        elif x in arc_v:
            rr[i] = v_new
        else:
            continue
        new_rot[x] = tuple(rr)
    return tuple(new_rot)


def _triangulations(v: int) -> list[Rotation]:
    """All simple sphere triangulations on v vertices (cached, canonical order)."""
    if v < 4:
        return []
    if not _tri_levels:
        _tri_levels.append({rotation_code(4, _K4_ROT): _K4_ROT})
    while len(_tri_levels) < v - 3:
        level: dict[bytes, Rotation] = {}
        size = len(_tri_levels) + 4
        for rot in _tri_levels[-1].values():
            n = size - 1
            for w in range(n):
                d = len(rot[w])
                for a in range(d):
                    for b in range(a + 1, d):
                        child = _split_vertex(n, rot, w, a, b)
                        code = rotation_code(size, child)
                        if code not in level:
                            level[code] = child
        _tri_levels.append(level)
    return [rot for _, rot in sorted(_tri_levels[v - 4].items())]


def _dualize(n: int, rot: Rotation) -> PlaneCubicGraph:
    """Dual of a sphere triangulation: one cubic vertex per triangle face."""
    succ = [{r[i]: r[(i + 1) % len(r)] for i in range(len(r))} for r in rot]
    face_id: dict[tuple[int, int], int] = {}
    triangles: list[tuple[int, int, int]] = []
    for v in range(n):
        for w in rot[v]:
            if (v, w) in face_id:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in face_id:
                face_id[(a, b)] = len(triangles)
                walk.append(a)
                a, b = b, succ[b][a]
            triangles.append((walk[0], walk[1], walk[2]))
    dual_rot = []
    for t_idx, tri in enumerate(triangles):
        nbrs = []
        for i in range(3):
            a, b = tri[i], tri[(i + 1) % 3]
            nbrs.append(face_id[(b, a)])  # face on the other side of edge ab
        dual_rot.append(tuple(nbrs))
    return from_rotation(len(triangles), dual_rot)


def enumerate_fullerenes(n: int, bound: int | None = None) -> Catalogue:
    """Complete isomorph-free catalogue of (4,5,6)-fullerenes on n vertices."""
    if n % 2 != 0:
        raise OddVertexCount(f"cubic graphs have even order, got {n}")
    limit = configured_bound() if bound is None else bound
    if not 8 <= n <= limit:
        raise BoundExceeded(f"n = {n} outside the enumeration range 8..{limit}")
    cached = _fast_cache.get(n)
    if cached is not None:
        return cached
    v = n // 2 + 2
    duals = []
    for rot in _triangulations(v):
        degrees = {len(r) for r in rot}
        if degrees <= {4, 5, 6}:
            g = _dualize(v, rot)
            if is_fullerene(g):
                duals.append(g)
    graphs, counts = _catalogue_from(duals)
    cat = Catalogue(n, graphs, counts)
    _fast_cache[n] = cat
    return cat


_fast_cache: dict[int, Catalogue] = {}


# ---------------------------------------------------------------------------
# Naive route: rotation systems in BFS normal form
# ---------------------------------------------------------------------------

def naive_enumerate(n: int) -> Catalogue:
    """Exhaustive rotation-system search; the completeness oracle.

    Rotation systems are generated in a breadth-first normal form (labels
    in discovery order, each vertex's rotation read from its discovery
    edge), which enumerates every embedding at least once per rooted
    orientation.  Pruning uses only the face-size definition: a traced
    facial walk may never exceed six edges and must close at 4, 5 or 6.
    """
    if n % 2 != 0:
        raise OddVertexCount(f"cubic graphs have even order, got {n}")
    if not 4 <= n <= NAIVE_BOUND:
        raise BoundExceeded(f"naive search is bounded at {NAIVE_BOUND}")
    cached = _naive_cache.get(n)
    if cached is not None:
        return cached

    found: list[PlaneCubicGraph] = []
    rot: list[tuple[int, int, int] | None] = [None] * n
    declared: list[list[int]] = [[] for _ in range(n)]

    def orbit_ok(dart: tuple[int, int]) -> bool:
        """Walk the facial orbit through one dart; False when it is already
        longer than 6 darts or closes at a size outside {4, 5, 6}.

        Only orbits through the freshly finalized vertex can have changed,
        so each processing step checks just its three incoming darts.
        """
        back = 0
        cur = dart
        while True:
            a, b = cur
            ra = rot[a]
            if ra is None:
                break
            cur = (ra[(ra.index(b) - 1) % 3], a)
            back += 1
            if cur == dart:
                return back in (4, 5, 6)
            if back > 6:
                return False
        darts = 1
        a, b = cur
        while True:
            rb = rot[b]
            if rb is None:
                return True
            a, b = b, rb[(rb.index(a) + 1) % 3]
            darts += 1
            if darts > 6:
                return False

    def process(v: int, num_labels: int) -> None:
        if v == num_labels:
            if num_labels == n:
                try:
                    g = from_rotation(n, [tuple(r) for r in rot])  # type: ignore[arg-type]
                    validate_fullerene(g)
                except GraphError:
                    return
                found.append(g)
            return
        entry = declared[v][0]
        forced = declared[v][1:]
        existing = [w for w in range(num_labels)
                    if w > v and w != entry and w not in declared[v]
                    and len(declared[w]) < 3]
        options: list[tuple[int | None, int | None]] = []
        cands: list[int | None] = [*existing]
        if num_labels < n:
            cands.append(None)  # a brand-new vertex
        if len(forced) == 2:
            options = [(forced[0], forced[1]), (forced[1], forced[0])]
        elif len(forced) == 1:
            for c in cands:
                options.append((forced[0], c))
                options.append((c, forced[0]))
        else:
            for c1 in cands:
                for c2 in cands:
                    if c1 is None and c2 is None:
                        if num_labels + 2 <= n:
                            options.append((None, None))
                    elif c1 != c2:
                        options.append((c1, c2))
        seen_opts = set()
        for s1, s2 in options:
            if (s1, s2) in seen_opts:
                continue
            seen_opts.add((s1, s2))
            labels = num_labels
            slots = []
            new_vertices = []
            ok = True
            for s in (s1, s2):
                if s is None:
                    if labels >= n:
                        ok = False
                        break
                    s = labels
                    labels += 1
                    new_vertices.append(s)
                slots.append(s)
            if not ok or slots[0] == slots[1]:
                continue
            rot[v] = (entry, slots[0], slots[1])
            touched = []
            for s in slots:
                # forced neighbors already recorded this edge when they chose v
                if s not in forced:
                    declared[s].append(v)
                    touched.append(s)
            if all(orbit_ok((x, v)) for x in rot[v]):
                process(v + 1, labels)
            for s in touched:
                declared[s].pop()
            rot[v] = None

    rot[0] = (1, 2, 3)
    declared[1].append(0)
    declared[2].append(0)
    declared[3].append(0)
    process(1, 4)
    graphs, counts = _catalogue_from(found)
    cat = Catalogue(n, graphs, counts)
    _naive_cache[n] = cat
    return cat


_naive_cache: dict[int, Catalogue] = {}
