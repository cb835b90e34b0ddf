"""Maximum matching, perfect-matching machinery and deficiency certificates.

Graphs here are arbitrary simple graphs given as adjacency mappings
``{vertex: iterable of neighbors}``; vertices are ints but need not be
contiguous, so deleted subgraphs stay cheap to form.  The matching engine
is the blossom-contraction algorithm; exhaustive search over all matchings
is kept to the test suite as the independent oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .graphs import Edge, PlaneCubicGraph, norm_edge

Adjacency = Mapping[int, Iterable[int]]

COUNT_LIMIT = 64


class MatchingError(ValueError):
    pass


class NotAMatching(MatchingError):
    pass


class TooLarge(MatchingError):
    pass


class NoPerfectMatching(MatchingError):
    pass


def adjacency_of(g: PlaneCubicGraph | Adjacency) -> dict[int, frozenset[int]]:
    if isinstance(g, PlaneCubicGraph):
        return g.adj_dict()
    return {v: frozenset(ns) for v, ns in g.items()}


def induced(adj: Adjacency, removed: Iterable[int]) -> dict[int, frozenset[int]]:
    gone = set(removed)
    return {v: frozenset(w for w in ns if w not in gone)
            for v, ns in adj.items() if v not in gone}


def subgraph(adj: Adjacency, keep: Iterable[int]) -> dict[int, frozenset[int]]:
    kept = set(keep)
    return {v: frozenset(w for w in adj[v] if w in kept) for v in kept}


def without_edges(adj: Adjacency, edges: Iterable[Edge]) -> dict[int, frozenset[int]]:
    dead = {norm_edge(*e) for e in edges}
    return {v: frozenset(w for w in ns if norm_edge(v, w) not in dead)
            for v, ns in adj.items()}


def edges_of(adj: Adjacency) -> list[Edge]:
    return sorted({norm_edge(v, w) for v, ns in adj.items() for w in ns})


def components(adj: Adjacency) -> list[set[int]]:
    todo = set(adj)
    out = []
    while todo:
        start = min(todo)
        comp = {start}
        todo.discard(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in todo:
                    todo.discard(y)
                    comp.add(y)
                    stack.append(y)
        out.append(comp)
    return out


def is_connected(adj: Adjacency) -> bool:
    return len(adj) == 0 or len(components(adj)) == 1


# ---------------------------------------------------------------------------
# Blossom maximum matching
# ---------------------------------------------------------------------------

def _blossom_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximum matching on vertices 0..n-1; returns the mate array (-1 free)."""
    match = [-1] * n
    for v in range(n):  # greedy seed
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = set()
        x = a
        while True:
            x = base[x]
            used.add(x)
            if match[x] == -1:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if y in used:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            end = find_augmenting(v)
            while end != -1:
                pv = p[end]
                ppv = match[pv]
                match[end] = pv
                match[pv] = end
                end = ppv
    return match


def maximum_matching(g: PlaneCubicGraph | Adjacency) -> tuple[Edge, ...]:
    """A maximum-cardinality matching, as a sorted tuple of normalized edges."""
    adj = adjacency_of(g)
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    compact = [[idx[w] for w in sorted(adj[v])] for v in verts]
    mate = _blossom_matching(len(verts), compact)
    out = {norm_edge(verts[i], verts[j])
           for i, j in enumerate(mate) if j != -1}
    return tuple(sorted(out))


def has_perfect_matching(g: PlaneCubicGraph | Adjacency) -> bool:
    adj = adjacency_of(g)
    return 2 * len(maximum_matching(adj)) == len(adj)


def check_matching(adj: Adjacency, m: Iterable[Edge]) -> tuple[Edge, ...]:
    """Normalize and validate a matching; raises NotAMatching otherwise."""
    edges = tuple(sorted(norm_edge(*e) for e in m))
    seen: set[int] = set()
    for u, v in edges:
        if u not in adj or v not in adj[u]:
            raise NotAMatching(f"edge ({u}, {v}) is not in the graph")
        if u in seen or v in seen:
            raise NotAMatching(f"edge ({u}, {v}) shares an endpoint")
        seen.update((u, v))
    return edges


def extends_to_perfect(g: PlaneCubicGraph | Adjacency, m: Iterable[Edge]) -> bool:
    """True iff the matching is contained in some perfect matching."""
    adj = adjacency_of(g)
    edges = check_matching(adj, m)
    covered = {v for e in edges for v in e}
    return has_perfect_matching(induced(adj, covered))


# ---------------------------------------------------------------------------
# Perfect-matching enumeration
# ---------------------------------------------------------------------------

def perfect_matchings(g: PlaneCubicGraph | Adjacency) -> Iterator[tuple[Edge, ...]]:
    """All perfect matchings, in lexicographic order of sorted edge lists.

    Backtracks on the smallest uncovered vertex; bounded at 64 vertices.
    """
    adj = adjacency_of(g)
    if len(adj) > COUNT_LIMIT:
        raise TooLarge(f"{len(adj)} vertices exceed the enumeration bound")
    if len(adj) % 2 != 0:
        return
    verts = sorted(adj)

    def recurse(free: set[int], chosen: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        if not free:
            yield tuple(chosen)
            return
        v = min(free)
        partners = sorted(w for w in adj[v] if w in free)
        if not partners:
            return
        # dead-end pruning: every free vertex must retain a free neighbor
        for u in free:
            if u != v and not any(w in free and w != v for w in adj[u]):
                if v not in adj[u]:
                    return
        for w in partners:
            free.discard(v)
            free.discard(w)
            chosen.append(norm_edge(v, w))
            yield from recurse(free, chosen)
            chosen.pop()
            free.add(v)
            free.add(w)

    yield from recurse(set(verts), [])


def count_perfect_matchings(g: PlaneCubicGraph | Adjacency) -> int:
    return sum(1 for _ in perfect_matchings(g))


def is_factor_critical(g: PlaneCubicGraph | Adjacency) -> bool:
    """True iff removing any single vertex leaves a perfectly matchable graph."""
    adj = adjacency_of(g)
    if len(adj) % 2 == 0 and adj:
        return False
    return all(has_perfect_matching(induced(adj, [v])) for v in adj)


# ---------------------------------------------------------------------------
# Deficiency certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeficiencyCertificate:
    """Vertex set S with the components of G - S, all factor-critical.

    The graph has a perfect matching iff ``len(S) == len(components)``;
    otherwise S witnesses the deficiency ``len(components) - len(S)``.
    """

    S: frozenset[int]
    components: tuple[frozenset[int], ...]
    factor_critical_flags: tuple[bool, ...]
    matchable: bool

    @property
    def deficiency(self) -> int:
        return len(self.components) - len(self.S)

    def implies_perfect_matching(self) -> bool:
        return len(self.S) == len(self.components)

    def valid(self) -> bool:
        return self.matchable and all(self.factor_critical_flags)


def _gallai_edmonds_d(adj: Adjacency) -> set[int]:
    """Vertices missed by at least one maximum matching."""
    size = len(maximum_matching(adj))
    return {v for v in adj
            if len(maximum_matching(induced(adj, [v]))) == size}


def _structure_set(adj: dict[int, frozenset[int]]) -> set[int]:
    """A vertex set whose removal leaves only factor-critical components.

    Built from the Gallai-Edmonds decomposition: the neighborhood set of
    the D-part joins S directly; each perfectly matchable component left
    over is split recursively by pinning one vertex into S.
    """
    if not adj:
        return set()
    d_part = _gallai_edmonds_d(adj)
    a_part = {w for v in d_part for w in adj[v]} - d_part
    s = set(a_part)
    c_verts = set(adj) - d_part - a_part
    for comp in components(subgraph(adj, c_verts)):
        u = min(comp)
        s.add(u)
        s |= _structure_set(subgraph(adj, comp - {u}))
    return s


def _matchable_to_components(adj: Adjacency, s: frozenset[int],
                             comps: Sequence[frozenset[int]]) -> bool:
    """Bipartite test: can S be matched to distinct components of G - S?"""
    if not s:
        return True
    comp_id = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = i
    bip: dict[int, set[int]] = {v: set() for v in s}
    base = max(adj) + 1
    for v in s:
        for w in adj[v]:
            if w in comp_id:
                bip[v].add(base + comp_id[w])
                bip.setdefault(base + comp_id[w], set()).add(v)
    mm = maximum_matching(bip)
    return len(mm) == len(s)


def deficiency_certificate(g: PlaneCubicGraph | Adjacency) -> DeficiencyCertificate:
    """Certificate in the strong Tutte form, verified post hoc.

    The returned set satisfies both defining properties literally: every
    component of G - S is factor-critical (checked), and S is matchable to
    the components (checked by bipartite matching).
    """
    adj = adjacency_of(g)
    s = frozenset(_structure_set(adj))
    comps = tuple(frozenset(c) for c in sorted(
        components(induced(adj, s)), key=min))
    flags = tuple(is_factor_critical(subgraph(adj, c)) for c in comps)
    matchable = _matchable_to_components(adj, s, comps)
    return DeficiencyCertificate(s, comps, flags, matchable)
