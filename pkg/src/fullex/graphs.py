"""Plane cubic graphs given by rotation systems.

A graph is stored as the cyclic neighbor order around every vertex
(clockwise by convention).  Faces are traced with the successor rule
``next(u, v) = (v, neighbor after u in rot[v])``; a rotation system is
accepted only if the face count satisfies Euler's formula for the sphere,
which also forces connectivity.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base for rotation-system construction and validation failures."""


class NotCubic(GraphError):
    pass


class NotSymmetric(GraphError):
    pass


class SelfLoopOrMultiEdge(GraphError):
    pass


class NotSpherical(GraphError):
    """Euler characteristic of the rotation system is not 2."""


class BadFaceSize(GraphError):
    """A face is not a quadrilateral, pentagon or hexagon."""

    def __init__(self, boundary: tuple[int, ...], size: int):
        self.boundary = boundary
        self.size = size
        super().__init__(f"face {boundary} has size {size}, expected 4, 5 or 6")


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """Facial walk as the cyclic vertex sequence of its boundary."""

    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def directed_edges(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def edges(self) -> frozenset[Edge]:
        return frozenset(norm_edge(u, v) for u, v in self.directed_edges())

    def is_simple_cycle(self) -> bool:
        return len(set(self.boundary)) == len(self.boundary)

    def key(self) -> tuple[int, ...]:
        return cycle_key(self.boundary)


@dataclass(frozen=True)
class FaceInventory:
    faces: tuple[Face, ...]
    p4: int
    p5: int
    p6: int

    @property
    def count(self) -> int:
        return len(self.faces)

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for f in self.faces:
            hist[f.size] = hist.get(f.size, 0) + 1
        return hist


@dataclass(frozen=True)
class EdgeCut:
    """Minimal edge cut with the two vertex sides it separates."""

    edges: frozenset[Edge]
    sides: tuple[frozenset[int], frozenset[int]]

    @property
    def trivial(self) -> bool:
        return min(len(self.sides[0]), len(self.sides[1])) == 1


def cycle_key(cycle: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of a cyclic sequence up to rotation and reversal."""
    best = None
    seq = tuple(cycle)
    k = len(seq)
    for s in (seq, seq[::-1]):
        for i in range(k):
            cand = s[i:] + s[:i]
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


class PlaneCubicGraph:
    """Immutable cubic plane graph; all derived data computed at construction."""

    __slots__ = ("n", "rot", "adj", "edge_list", "_faces", "_canonical")

    def __init__(self, n: int, rot: tuple[tuple[int, int, int], ...],
                 faces: tuple[Face, ...]):
        self.n = n
        self.rot = rot
        self.adj = tuple(frozenset(nbrs) for nbrs in rot)
        self.edge_list = tuple(sorted(
            {norm_edge(v, w) for v in range(n) for w in rot[v]}))
        self._faces = faces
        self._canonical: bytes | None = None

    @property
    def m(self) -> int:
        return len(self.edge_list)

    def adj_dict(self) -> dict[int, frozenset[int]]:
        return {v: self.adj[v] for v in range(self.n)}

    def rotation_successor(self, u: int, v: int) -> int:
        """Neighbor after u in the rotation at v (the face-tracing rule)."""
        r = self.rot[v]
        return r[(r.index(u) + 1) % 3]

    def __repr__(self) -> str:
        return f"PlaneCubicGraph(n={self.n}, m={self.m}, f={len(self._faces)})"


def _trace_faces(n: int, rot: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Orbit decomposition of the directed edges under the successor rule."""
    succ_at = [{nbrs[i]: nbrs[(i + 1) % len(nbrs)] for i in range(len(nbrs))}
               for nbrs in rot]
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in range(n):
        for w in rot[v]:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, succ_at[b][a]
            faces.append(tuple(walk))
    return faces


def from_rotation(n: int, rot: Sequence[Sequence[int]]) -> PlaneCubicGraph:
    """Build and validate a plane cubic graph from its rotation system.

    Raises:
        NotCubic: some vertex does not list exactly 3 neighbors.
        SelfLoopOrMultiEdge: a neighbor repeats or equals the vertex.
        NotSymmetric: adjacency is not mutual.
        NotSpherical: the face count violates Euler's formula n - m + f = 2.
    """
    if n < 4 or n % 2 != 0:
        raise NotCubic(f"vertex count {n} must be even and at least 4")
    if len(rot) != n:
        raise NotCubic(f"expected {n} rotation entries, got {len(rot)}")
    fixed: list[tuple[int, int, int]] = []
    for v, nbrs in enumerate(rot):
        t = tuple(int(x) for x in nbrs)
        if len(t) != 3:
            raise NotCubic(f"vertex {v} has {len(t)} neighbors")
        if v in t or len(set(t)) != 3:
            raise SelfLoopOrMultiEdge(f"vertex {v} has neighbors {t}")
        if any(w < 0 or w >= n for w in t):
            raise NotSymmetric(f"vertex {v} lists an unknown vertex in {t}")
        fixed.append(t)  # type: ignore[arg-type]
    for v, nbrs in enumerate(fixed):
        for w in nbrs:
            if v not in fixed[w]:
                raise NotSymmetric(f"edge {v}->{w} has no reverse")
    walks = _trace_faces(n, fixed)
    m = 3 * n // 2
    if n - m + len(walks) != 2:
        raise NotSpherical(
            f"n - m + f = {n} - {m} + {len(walks)} != 2; not a sphere embedding")
    return PlaneCubicGraph(n, tuple(fixed), tuple(Face(w) for w in walks))


def from_faces(face_cycles: Sequence[Sequence[int]]) -> PlaneCubicGraph:
    """Build a plane cubic graph from its list of facial vertex cycles.

    Face orientations may be inconsistent; they are flipped as needed so
    that every edge is traversed once in each direction.
    """
    faces = [tuple(f) for f in face_cycles]
    by_edge: dict[Edge, list[int]] = {}
    for i, f in enumerate(faces):
        for j in range(len(f)):
            e = norm_edge(f[j], f[(j + 1) % len(f)])
            by_edge.setdefault(e, []).append(i)
    for e, owners in by_edge.items():
        if len(owners) != 2:
            raise GraphError(f"edge {e} lies on {len(owners)} faces, expected 2")

    flipped = [False] * len(faces)
    assigned = [False] * len(faces)
    assigned[0] = True
    queue = deque([0])
    directed_of = lambda i: (
        faces[i] if not flipped[i] else faces[i][::-1])
    while queue:
        i = queue.popleft()
        f = directed_of(i)
        for j in range(len(f)):
            a, b = f[j], f[(j + 1) % len(f)]
            e = norm_edge(a, b)
            other = [o for o in by_edge[e] if o != i]
            o = other[0] if other else i
            if o == i or assigned[o]:
                continue
            g = faces[o]
            g_arcs = {(g[t], g[(t + 1) % len(g)]) for t in range(len(g))}
            # the shared edge must be traversed oppositely by the two faces
            flipped[o] = (a, b) in g_arcs
            assigned[o] = True
            queue.append(o)
    if not all(assigned):
        raise GraphError("face list does not describe a connected surface")

    succ: dict[tuple[int, int], int] = {}
    for i in range(len(faces)):
        f = directed_of(i)
        k = len(f)
        for j in range(k):
            a, b, c = f[j], f[(j + 1) % k], f[(j + 2) % k]
            if (a, b) in succ:
                raise GraphError(f"directed edge {(a, b)} traced twice")
            succ[(a, b)] = c
    n = max(v for f in faces for v in f) + 1
    rot = []
    for v in range(n):
        nbrs = sorted(u for (u, w) in succ if w == v)
        if not nbrs:
            raise GraphError(f"vertex {v} appears on no face")
        a = nbrs[0]
        b = succ[(a, v)]
        c = succ[(b, v)]
        if succ[(c, v)] != a:
            raise GraphError(f"rotation at {v} does not close")
        rot.append((a, b, c))
    return from_rotation(n, rot)


def faces(g: PlaneCubicGraph) -> FaceInventory:
    fs = g._faces
    hist = {4: 0, 5: 0, 6: 0}
    for f in fs:
        if f.size in hist:
            hist[f.size] += 1
    return FaceInventory(fs, hist[4], hist[5], hist[6])


def validate_fullerene(g: PlaneCubicGraph) -> FaceInventory:
    """Check that every face is a quadrilateral, pentagon or hexagon.

    Face boundaries must be simple cycles; a walk that repeats a vertex is
    not a polygon and is rejected with the same error.
    """
    for f in g._faces:
        if f.size not in (4, 5, 6) or not f.is_simple_cycle():
            raise BadFaceSize(f.boundary, f.size)
    return faces(g)


def is_fullerene(g: PlaneCubicGraph) -> bool:
    try:
        validate_fullerene(g)
    except BadFaceSize:
        return False
    return True


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------

def rotation_code(n: int, rot: Sequence[Sequence[int]],
                  include_mirror: bool = True) -> bytes:
    """Canonical byte code of an embedded graph given by a rotation system.

    A breadth-first relabeling is generated from every rooted directed edge
    in both orientations (mirror included by default) and the
    lexicographically smallest neighbor listing wins.  Codes of two
    rotation systems agree iff the embeddings are isomorphic up to
    orientation; for 3-connected planar graphs that coincides with abstract
    graph isomorphism.
    """
    rots = [tuple(tuple(r) for r in rot)]
    if include_mirror:
        rots.append(tuple(tuple(reversed(r)) for r in rot))
    best: list[int] | None = None
    for rr in rots:
        for u in range(n):
            for v in rr[u]:
                cand = _bfs_code(n, rr, u, v, best)
                if cand is not None:
                    best = cand
    assert best is not None
    return bytes(best)


def _bfs_code(n: int, rot: Sequence[tuple[int, ...]], root: int, first: int,
              best: list[int] | None) -> list[int] | None:
    """BFS code from one rooted directed edge; None once it exceeds `best`."""
    label = {root: 0, first: 1}
    entry = {root: first, first: root}
    order = [root, first]
    code: list[int] = []
    pos = 0
    next_label = 2
    idx = 0
    while idx < len(order):
        v = order[idx]
        idx += 1
        r = rot[v]
        k = len(r)
        start = r.index(entry[v])
        if best is not None:
            b = best[pos]
            if k > b:
                return None
            if k < b:
                best = None  # strictly better; stop comparing
        code.append(k)
        pos += 1
        for i in range(k):
            w = r[(start + i) % k]
            lw = label.get(w)
            if lw is None:
                lw = next_label
                label[w] = lw
                entry[w] = v
                order.append(w)
                next_label += 1
            if best is not None:
                b = best[pos]
                if lw > b:
                    return None
                if lw < b:
                    best = None
            code.append(lw)
            pos += 1
    return code


def canonical_code(g: PlaneCubicGraph) -> bytes:
    """Canonical code identifying mirror images (cached per graph)."""
    if g._canonical is None:
        g._canonical = rotation_code(g.n, g.rot, include_mirror=True)
    return g._canonical


def is_isomorphic(g1: PlaneCubicGraph, g2: PlaneCubicGraph) -> bool:
    if g1.n != g2.n:
        return False
    return canonical_code(g1) == canonical_code(g2)


def embedding_map(g1: PlaneCubicGraph, g2: PlaneCubicGraph) -> dict[int, int] | None:
    """A vertex map carrying the embedding of g1 onto g2 (mirror allowed).

    Deterministic: candidate rooted edges of g2 are tried in sorted order,
    plain orientation before mirrored.
    """
    if g1.n != g2.n:
        return None
    root, first = 0, g1.rot[0][0]
    for mirror in (False, True):
        rot2 = g2.rot if not mirror else tuple(tuple(reversed(r)) for r in g2.rot)
        for a in range(g2.n):
            for b in rot2[a]:
                mapping = _try_align(g1.rot, rot2, root, first, a, b)
                if mapping is not None:
                    return mapping
    return None


def _try_align(rot1, rot2, r1: int, f1: int, r2: int, f2: int) -> dict[int, int] | None:
    mapping = {r1: r2, f1: f2}
    entry1 = {r1: f1, f1: r1}
    entry2 = {r2: f2, f2: r2}
    order = [r1, f1]
    idx = 0
    while idx < len(order):
        v = order[idx]
        w = mapping[v]
        idx += 1
        s1 = rot1[v].index(entry1[v])
        s2 = rot2[w].index(entry2[w])
        for i in range(3):
            a = rot1[v][(s1 + i) % 3]
            b = rot2[w][(s2 + i) % 3]
            if a in mapping:
                if mapping[a] != b:
                    return None
            else:
                if b in mapping.values():
                    return None
                mapping[a] = b
                entry1[a] = v
                entry2[b] = w
                order.append(a)
    return mapping


def is_chiral(g: PlaneCubicGraph) -> bool:
    """True if the embedding admits no orientation-reversing automorphism."""
    plain = rotation_code(g.n, g.rot, include_mirror=False)
    mirror = rotation_code(
        g.n, tuple(tuple(reversed(r)) for r in g.rot), include_mirror=False)
    return plain != mirror


# ---------------------------------------------------------------------------
# Connectivity, girth, cycles, cuts
# ---------------------------------------------------------------------------

def _components(vertices: Iterable[int], adj: dict[int, Iterable[int]],
                blocked_edges: frozenset[Edge] = frozenset()) -> list[set[int]]:
    todo = set(vertices)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        todo.discard(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in todo and norm_edge(x, y) not in blocked_edges:
                    todo.discard(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def connectivity(g: PlaneCubicGraph) -> int:
    """Vertex connectivity by exhaustive small-cut search (cubic, so <= 3)."""
    verts = set(range(g.n))
    adj = g.adj_dict()
    if len(_components(verts, adj)) > 1:
        return 0
    for k in (1, 2):
        for cut in itertools.combinations(range(g.n), k):
            rest = verts.difference(cut)
            sub = {v: [w for w in adj[v] if w in rest] for v in rest}
            if rest and len(_components(rest, sub)) > 1:
                return k
    return 3


def girth(g: PlaneCubicGraph) -> int:
    best = g.n + 1
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            if dist[x] * 2 >= best:
                continue
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
        if best == 3:
            return 3
    return best


def _simple_cycles_of_length(g: PlaneCubicGraph, length: int) -> set[tuple[int, ...]]:
    """All simple cycles of the given length, as canonical cycle keys."""
    found: set[tuple[int, ...]] = set()
    for a in range(g.n):
        path = [a]
        on_path = {a}

        def extend():
            v = path[-1]
            if len(path) == length:
                if a in g.adj[v]:
                    found.add(cycle_key(path))
                return
            for w in g.adj[v]:
                if w > a and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    path.pop()
                    on_path.discard(w)

        extend()
    return found


def short_cycles_facial(g: PlaneCubicGraph) -> bool:
    """True iff every 4- and 5-cycle is the boundary of some face."""
    facial = {f.key() for f in g._faces if f.size in (4, 5)}
    for length in (4, 5):
        for key in _simple_cycles_of_length(g, length):
            if key not in facial:
                return False
    return True


def edge_cuts_up_to(g: PlaneCubicGraph, k: int) -> list[EdgeCut]:
    """All minimal edge cuts of size <= k (exhaustive subsets, k <= 4)."""
    if k > 4:
        raise ValueError("edge cut enumeration is capped at k = 4")
    verts = set(range(g.n))
    adj = g.adj_dict()
    cuts = []
    for size in range(1, k + 1):
        for combo in itertools.combinations(g.edge_list, size):
            blocked = frozenset(combo)
            comps = _components(verts, adj, blocked)
            if len(comps) != 2:
                continue
            # minimal: every removed edge must actually join the two sides
            s0 = comps[0]
            if not all((u in s0) != (v in s0) for u, v in combo):
                continue
            cuts.append(EdgeCut(blocked, (frozenset(comps[0]), frozenset(comps[1]))))
    cuts.sort(key=lambda c: sorted(c.edges))
    return cuts


def _has_cycle(comp: set[int], adj: dict[int, Iterable[int]],
               blocked_edges: frozenset[Edge]) -> bool:
    edges = sum(1 for v in comp for w in adj[v]
                if w in comp and norm_edge(v, w) not in blocked_edges) // 2
    return edges >= len(comp)


def has_cyclic_cut_leq3(g: PlaneCubicGraph) -> bool:
    """True iff <= 3 edges can be removed leaving two components with cycles."""
    verts = set(range(g.n))
    adj = g.adj_dict()
    for size in range(1, 4):
        for combo in itertools.combinations(g.edge_list, size):
            blocked = frozenset(combo)
            comps = _components(verts, adj, blocked)
            if len(comps) < 2:
                continue
            cyclic = sum(1 for c in comps if _has_cycle(c, adj, blocked))
            if cyclic >= 2:
                return True
    return False


def cube_graph() -> PlaneCubicGraph:
    """The 3-cube: smallest (4,5,6)-fullerene, all faces quadrilaterals."""
    return from_faces([
        (0, 1, 2, 3),
        (0, 4, 5, 1),
        (1, 5, 6, 2),
        (2, 6, 7, 3),
        (3, 7, 4, 0),
        (4, 7, 6, 5),
    ])


def k4_graph() -> PlaneCubicGraph:
    """The tetrahedron; plane cubic but not a fullerene (triangle faces)."""
    return from_faces([(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)])


def dodecahedron_graph() -> PlaneCubicGraph:
    """The dodecahedron: the 20-vertex fullerene with twelve pentagons."""
    return from_faces([
        (0, 1, 2, 3, 4),
        (0, 5, 10, 6, 1),
        (1, 6, 11, 7, 2),
        (2, 7, 12, 8, 3),
        (3, 8, 13, 9, 4),
        (4, 9, 14, 5, 0),
        (5, 14, 19, 15, 10),
        (6, 10, 15, 16, 11),
        (7, 11, 16, 17, 12),
        (8, 12, 17, 18, 13),
        (9, 13, 18, 19, 14),
        (15, 19, 18, 17, 16),
    ])
