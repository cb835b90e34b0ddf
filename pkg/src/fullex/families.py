"""The tube family and the sporadic non-2-extendable fullerenes.

A tube with n hexagon layers is built from two caps of three quadrilaterals
sharing a center vertex, joined through n + 1 concentric 6-cycles; each gap
between consecutive cycles carries exactly three traversed edges and a ring
of three hexagons.  Vertex count: 6n + 8.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import matching as mt
from .graphs import (Edge, PlaneCubicGraph, canonical_code, embedding_map,
                     faces, from_faces, is_isomorphic, norm_edge,
                     validate_fullerene)


class BadLayerCount(ValueError):
    pass


@dataclass(frozen=True)
class TubeDescriptor:
    n_layers: int
    cap_centers: tuple[int, int]
    concentric_cycles: tuple[tuple[int, ...], ...]
    traversed_edges: tuple[frozenset[Edge], ...]
    cap_stars: tuple[frozenset[Edge], frozenset[Edge]]

    def all_traversed(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for layer in self.traversed_edges:
            out |= layer
        return frozenset(out)

    def matching_layers(self) -> tuple[frozenset[Edge], ...]:
        """Edge layers where every perfect matching picks exactly one edge.

        The two cap-center stars count as the innermost and outermost
        layers; the traversed-edge sets fill the gaps in between.
        """
        return (self.cap_stars[0], *self.traversed_edges, self.cap_stars[1])


@dataclass(frozen=True)
class SporadicCandidate:
    graph: PlaneCubicGraph
    n: int
    witness_pair: tuple[Edge, Edge]
    ak: int


def _tube_vertex(n_layers: int, cycle: int, pos: int) -> int:
    pos %= 6
    if cycle == 0:
        return 1 + pos
    return 7 + 6 * (cycle - 1) + pos


def build_tube(n_layers: int) -> tuple[PlaneCubicGraph, TubeDescriptor]:
    """Tube with the given number of hexagon layers (>= 1)."""
    if n_layers < 1:
        raise BadLayerCount(f"need at least 1 layer, got {n_layers}")
    n = n_layers
    v = lambda i, j: _tube_vertex(n, i, j)
    center_a = 0
    center_b = 6 * n + 7

    face_list: list[tuple[int, ...]] = []
    for k in range(3):
        face_list.append((center_a, v(0, 2 * k), v(0, 2 * k + 1), v(0, 2 * k + 2)))
    for i in range(1, n + 1):
        for t in range(3):
            face_list.append((v(i - 1, 2 * t + 1), v(i - 1, 2 * t + 2),
                              v(i - 1, 2 * t + 3), v(i, 2 * t + 2),
                              v(i, 2 * t + 1), v(i, 2 * t)))
    for k in range(3):
        face_list.append((center_b, v(n, 2 * k + 3), v(n, 2 * k + 2), v(n, 2 * k + 1)))

    g = from_faces(face_list)
    cycles = tuple(tuple(v(i, j) for j in range(6)) for i in range(n + 1))
    traversed = tuple(
        frozenset(norm_edge(v(i - 1, 2 * t + 1), v(i, 2 * t)) for t in range(3))
        for i in range(1, n + 1))
    stars = (frozenset(norm_edge(center_a, w) for w in g.adj[center_a]),
             frozenset(norm_edge(center_b, w) for w in g.adj[center_b]))
    desc = TubeDescriptor(n, (center_a, center_b), cycles, traversed, stars)
    return g, desc


def _quad_flag_vertices(g: PlaneCubicGraph) -> list[int]:
    """Vertices whose three incident faces are all quadrilaterals."""
    quad_count = {v: 0 for v in range(g.n)}
    for f in faces(g).faces:
        if f.size == 4:
            for w in set(f.boundary):
                quad_count[w] += 1
    return [v for v, c in quad_count.items() if c == 3]


def recognize_tube(g: PlaneCubicGraph) -> Optional[TubeDescriptor]:
    """Descriptor of g as a tube, or None when g is not one.

    Membership is decided by explicit isomorphism against the built tube of
    the matching size; the pentagon-free and vertex-count gates are only
    shortcuts.  The cap centers are cross-checked as the two vertices whose
    faces are all quadrilaterals, then the built descriptor is transported
    onto g through the isomorphism.
    """
    inv = validate_fullerene(g)
    if inv.p5 != 0 or g.n < 14 or (g.n - 8) % 6 != 0:
        return None
    layers = (g.n - 8) // 6
    built, desc = build_tube(layers)
    if not is_isomorphic(g, built):
        return None
    phi = embedding_map(built, g)
    if phi is None:
        return None
    centers = tuple(phi[c] for c in desc.cap_centers)
    if sorted(centers) != sorted(_quad_flag_vertices(g)):
        return None
    cycles = tuple(tuple(phi[v] for v in cyc) for cyc in desc.concentric_cycles)
    traversed = tuple(
        frozenset(norm_edge(phi[u], phi[v]) for u, v in layer)
        for layer in desc.traversed_edges)
    stars = tuple(frozenset(norm_edge(phi[u], phi[v]) for u, v in star)
                  for star in desc.cap_stars)
    return TubeDescriptor(layers, (centers[0], centers[1]), cycles, traversed,
                          (stars[0], stars[1]))


@dataclass(frozen=True)
class TubePerfectMatchingReport:
    """Exhaustive comparison of a tube's perfect matchings with its layers.

    The matching layers are the two cap-center stars plus the traversed-edge
    set of every gap; a perfect matching picks exactly one edge from each.
    ``gap_extension_counts`` records how many perfect matchings extend every
    traversed-edges-only selection (the two caps each contribute a factor 3,
    so the value is 9 throughout).
    """

    n_layers: int
    pm_count: int
    layer_sizes: tuple[int, ...]
    one_traversed_per_gap: bool
    one_star_edge_per_cap: bool
    every_layer_selection_unique: bool
    gap_extension_counts: tuple[int, ...]

    @property
    def layer_product(self) -> int:
        out = 1
        for s in self.layer_sizes:
            out *= s
        return out

    @property
    def count_matches_layer_product(self) -> bool:
        return self.pm_count == self.layer_product

    @property
    def selection_bijection_holds(self) -> bool:
        return (self.one_traversed_per_gap and self.one_star_edge_per_cap
                and self.every_layer_selection_unique
                and self.count_matches_layer_product)


def verify_tube_pm_structure(n_layers: int) -> TubePerfectMatchingReport:
    """Measure the perfect-matching layer structure of one tube.

    Enumerates every perfect matching and checks: (a) exactly one traversed
    edge per gap and one star edge per cap; (b) every selection of one edge
    per matching layer extends to exactly one perfect matching; (c) the
    count equals the product of the layer sizes.  Everything is measured,
    nothing assumed.
    """
    if not 1 <= n_layers <= 6:
        raise BadLayerCount("layer count for the exhaustive check must be 1..6")
    g, desc = build_tube(n_layers)
    pms = list(mt.perfect_matchings(g))
    layers = desc.matching_layers()
    gaps = desc.traversed_edges
    one_per_gap = True
    one_per_cap = True
    ext: dict[tuple[Edge, ...], int] = {}
    gap_ext: dict[tuple[Edge, ...], int] = {}
    for combo in itertools.product(*[sorted(layer) for layer in layers]):
        ext[combo] = 0
    for combo in itertools.product(*[sorted(layer) for layer in gaps]):
        gap_ext[combo] = 0
    for pm in pms:
        pm_set = set(pm)
        picks = []
        for layer in layers:
            hit = sorted(pm_set & layer)
            if len(hit) != 1:
                if layer in desc.cap_stars:
                    one_per_cap = False
                else:
                    one_per_gap = False
                picks = []
                break
            picks.append(hit[0])
        if picks:
            ext[tuple(picks)] += 1
        gap_picks = []
        for layer in gaps:
            hit = sorted(pm_set & layer)
            if len(hit) != 1:
                break
            gap_picks.append(hit[0])
        else:
            gap_ext[tuple(gap_picks)] += 1
    return TubePerfectMatchingReport(
        n_layers=n_layers,
        pm_count=len(pms),
        layer_sizes=tuple(len(layer) for layer in layers),
        one_traversed_per_gap=one_per_gap,
        one_star_edge_per_cap=one_per_cap,
        every_layer_selection_unique=all(c == 1 for c in ext.values()),
        gap_extension_counts=tuple(sorted(gap_ext.values())),
    )


def sporadic_candidates(n: int, catalogue=None) -> list[SporadicCandidate]:
    """All fullerenes on n vertices that look like the sporadic exceptions.

    Filter: not a tube, anti-Kekule number 3, and non-2-extendable; the
    witness pair of the extendability check is attached to each candidate.
    """
    if n not in (12, 14, 18, 20):
        raise ValueError(f"sporadic sizes are 12, 14, 18 and 20, not {n}")
    from . import antikekule as ak_mod
    from . import enumerator
    from . import extendability as ext_mod
    if catalogue is None:
        catalogue = enumerator.enumerate_fullerenes(n)
    out = []
    for g in catalogue.graphs:
        if recognize_tube(g) is not None:
            continue
        if ak_mod.anti_kekule_number(g).number != 3:
            continue
        report = ext_mod.is_k_extendable(g, 2)
        if report.extendable:
            continue
        assert report.witness is not None
        out.append(SporadicCandidate(g, n, (report.witness[0], report.witness[1]), 3))
    out.sort(key=lambda c: canonical_code(c.graph))
    return out
