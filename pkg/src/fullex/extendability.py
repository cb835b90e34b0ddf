"""k-extendability decisions with witnesses and certificates.

A graph is k-extendable when it is connected, has at least 2k + 2 vertices
and every matching of k edges lies in some perfect matching.  The scan over
candidate matchings is exhaustive; when the perfect matchings of the graph
are few enough to enumerate they are indexed per edge as bitsets, which
turns each candidate test into an AND of k integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import matching as mt
from .graphs import Edge, PlaneCubicGraph

# beyond this many perfect matchings the scan falls back to per-candidate
# matching computations instead of enumerating them all
ENUMERATION_CAP = 50_000

K_CAP = 3


class ExtendabilityError(ValueError):
    pass


class TooFewVertices(ExtendabilityError):
    pass


class NoPerfectMatching(ExtendabilityError):
    pass


@dataclass(frozen=True)
class ExtendabilityReport:
    k: int
    extendable: bool
    witness: Optional[tuple[Edge, ...]]
    certificate: Optional[mt.DeficiencyCertificate]


class _PmIndex:
    """Per-edge bitsets over the enumerated perfect matchings, or None."""

    def __init__(self, adj: dict[int, frozenset[int]]):
        self.masks: dict[Edge, int] | None = None
        if len(adj) > mt.COUNT_LIMIT:
            return
        masks: dict[Edge, int] = {e: 0 for e in mt.edges_of(adj)}
        count = 0
        for i, pm in enumerate(mt.perfect_matchings(adj)):
            if i >= ENUMERATION_CAP:
                return
            count += 1
            bit = 1 << i
            for e in pm:
                masks[e] |= bit
        self.count = count
        self.masks = masks

    def extends(self, edges: tuple[Edge, ...]) -> bool | None:
        if self.masks is None:
            return None
        acc = -1
        for e in edges:
            acc &= self.masks[e]
            if acc == 0:
                return False
        return True


def _candidate_matchings(adj: dict[int, frozenset[int]], k: int):
    """Size-k matchings in lexicographic order of their sorted edge lists."""
    edges = mt.edges_of(adj)
    for combo in itertools.combinations(edges, k):
        seen: set[int] = set()
        ok = True
        for u, v in combo:
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            yield combo


def _check_preconditions(adj: dict[int, frozenset[int]], k: int) -> None:
    if k > K_CAP:
        raise ExtendabilityError(f"k is capped at {K_CAP}, got {k}")
    if len(adj) < 2 * k + 2:
        raise TooFewVertices(
            f"{len(adj)} vertices but k = {k} needs at least {2 * k + 2}")
    if not mt.is_connected(adj):
        raise ExtendabilityError("graph is not connected")
    if not mt.has_perfect_matching(adj):
        raise NoPerfectMatching("graph has no perfect matching")


def is_k_extendable(g: PlaneCubicGraph | mt.Adjacency, k: int) -> ExtendabilityReport:
    """Scan all size-k matchings; the first one that fails becomes the witness.

    The witness certificate is the deficiency certificate of the graph with
    the witness endpoints removed, re-verifiable on its own.
    """
    adj = mt.adjacency_of(g)
    _check_preconditions(adj, k)
    if k == 0:
        return ExtendabilityReport(0, True, None, None)
    index = _PmIndex(adj)
    for cand in _candidate_matchings(adj, k):
        verdict = index.extends(cand)
        if verdict is None:
            verdict = mt.extends_to_perfect(adj, cand)
        if not verdict:
            covered = {v for e in cand for v in e}
            cert = mt.deficiency_certificate(mt.induced(adj, covered))
            return ExtendabilityReport(k, False, cand, cert)
    return ExtendabilityReport(k, True, None, None)


def extendability_number(g: PlaneCubicGraph | mt.Adjacency, cap: int = K_CAP) -> int:
    """Largest k <= cap for which the graph is k-extendable (0 if none)."""
    adj = mt.adjacency_of(g)
    if not mt.has_perfect_matching(adj):
        raise NoPerfectMatching("graph has no perfect matching")
    best = 0
    for k in range(1, min(cap, K_CAP) + 1):
        if len(adj) < 2 * k + 2:
            break
        if not is_k_extendable(adj, k).extendable:
            break
        best = k
    return best


def nonextendable_pairs(g: PlaneCubicGraph | mt.Adjacency) -> list[ExtendabilityReport]:
    """Every size-2 matching with no perfect-matching extension, certified."""
    adj = mt.adjacency_of(g)
    _check_preconditions(adj, 2)
    index = _PmIndex(adj)
    out = []
    for cand in _candidate_matchings(adj, 2):
        verdict = index.extends(cand)
        if verdict is None:
            verdict = mt.extends_to_perfect(adj, cand)
        if not verdict:
            covered = {v for e in cand for v in e}
            cert = mt.deficiency_certificate(mt.induced(adj, covered))
            out.append(ExtendabilityReport(2, False, cand, cert))
    return out
