"""Verification pipeline: per-graph analysis digests and the claim suite.

Every catalogued fullerene is reduced to a JSON-friendly digest (faces,
connectivity, cuts, extendability, anti-Kekule data, certificates); claims
are predicates over digests, registered in a table so the report layout is
data-driven.  Reports are deterministic: graphs are keyed by canonical
code, claims run in registration order, and JSON is emitted with sorted
keys.  Digests can be cached in the catalogue sidecar files keyed by
canonical code and invalidated by the library version stamp.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import __version__
from . import antikekule as ak_mod
from . import extendability as ext_mod
from . import families
from . import matching as mt
from . import planar_code
from .enumerator import Catalogue, enumerate_fullerenes
from .graphs import (PlaneCubicGraph, canonical_code, connectivity,
                     edge_cuts_up_to, girth, has_cyclic_cut_leq3,
                     short_cycles_facial, validate_fullerene)


def _edge_list(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def _certificate_digest(g: PlaneCubicGraph, witness) -> dict:
    """Deficiency data for the graph minus the witness pair's endpoints.

    Recomputes the boundary-edge counts of the deleted configuration: for
    every component its edges to S and to the witness endpoints, plus the
    edge counts inside S, inside the endpoint set, and between them, and
    checks the degree-sum identity they must satisfy in a cubic graph.
    """
    adj = g.adj_dict()
    e0_verts = sorted({v for e in witness for v in e})
    cert = mt.deficiency_certificate(mt.induced(adj, e0_verts))
    s = cert.S
    comp_stats = []
    for comp in cert.components:
        m_i = sum(1 for v in comp for w in adj[v] if w in s)
        r_i = sum(1 for v in comp for w in adj[v] if w in e0_verts)
        comp_stats.append({"size": len(comp), "edges_to_s": m_i,
                           "edges_to_witness": r_i})
    r0 = sum(1 for v in e0_verts for w in adj[v] if w in s)
    e_inside_s = sum(1 for v in s for w in adj[v] if w in s and v < w)
    e_inside_w = sum(1 for v in e0_verts for w in adj[v]
                     if w in e0_verts and v < w)
    lhs = sum(c["edges_to_s"] + c["edges_to_witness"] for c in comp_stats)
    rhs = 3 * len(s) + 12 - 2 * e_inside_s - 2 * e_inside_w - 2 * r0
    return {
        "witness": _edge_list(witness),
        "s_size": len(s),
        "component_count": len(cert.components),
        "all_factor_critical": all(cert.factor_critical_flags),
        "matchable": cert.matchable,
        "components": comp_stats,
        "edges_inside_s": e_inside_s,
        "edges_inside_witness": e_inside_w,
        "edges_witness_to_s": r0,
        "boundary_sum": lhs,
        "boundary_identity_holds": lhs == rhs,
        "min_component_boundary": min(
            (c["edges_to_s"] + c["edges_to_witness"] for c in comp_stats),
            default=0),
    }


def analyze_graph(g: PlaneCubicGraph) -> dict:
    """Full analysis digest of one fullerene; plain JSON-able values only."""
    inv = validate_fullerene(g)
    tube = families.recognize_tube(g)
    cuts3 = edge_cuts_up_to(g, 3)
    rep2 = ext_mod.is_k_extendable(g, 2)
    ak = ak_mod.anti_kekule_number(g)
    digest = {
        "n": g.n,
        "p4": inv.p4,
        "p5": inv.p5,
        "p6": inv.p6,
        "connectivity": connectivity(g),
        "girth": girth(g),
        "short_cycles_facial": short_cycles_facial(g),
        "nontrivial_cuts_leq3": sum(1 for c in cuts3 if not c.trivial),
        "has_cyclic_cut_leq3": has_cyclic_cut_leq3(g),
        "is_tube": tube is not None,
        "tube_layers": tube.n_layers if tube else None,
        "one_extendable": ext_mod.is_k_extendable(g, 1).extendable,
        "two_extendable": rep2.extendable,
        "three_extendable": ext_mod.is_k_extendable(g, 3).extendable,
        "extendability": ext_mod.extendability_number(g),
        "ak_number": ak.number,
        "ak_witness": _edge_list(ak.witness_set),
        "certificate": None,
    }
    if not rep2.extendable:
        digest["certificate"] = _certificate_digest(g, rep2.witness)
    return digest


def _analyze_packed(packed: bytes) -> dict:
    g = next(planar_code.read_graphs(planar_code.HEADER + packed))
    return analyze_graph(g)


@dataclass
class ClaimResult:
    anchor: str
    claim: str
    population: int = 0
    passes: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)

    def record(self, ok: bool, counterexample: Optional[dict] = None) -> None:
        self.population += 1
        if ok:
            self.passes += 1
        else:
            self.failures += 1
            if counterexample is not None:
                self.counterexamples.append(counterexample)

    def to_json(self) -> dict:
        return {
            "anchor": self.anchor,
            "claim": self.claim,
            "population": self.population,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }


# per-graph claims: anchor, description, predicate(digest) -> bool
GRAPH_CLAIMS: list[tuple[str, str, Callable[[dict], bool]]] = [
    ("face-count-identity",
     "twice the quadrilaterals plus the pentagons equals 12",
     lambda d: 2 * d["p4"] + d["p5"] == 12 and d["p5"] <= 12),
    ("connectivity-three",
     "vertex connectivity equals 3",
     lambda d: d["connectivity"] == 3),
    ("girth-at-least-four",
     "no 3-cycles",
     lambda d: d["girth"] >= 4),
    ("short-cycles-facial",
     "every 4- and 5-cycle bounds a face",
     lambda d: d["short_cycles_facial"]),
    ("three-edge-cuts-trivial-off-tube",
     "outside the tube family every edge cut of size <= 3 is trivial",
     lambda d: d["is_tube"] or d["nontrivial_cuts_leq3"] == 0),
    ("cyclic-cut-iff-tube",
     "a cyclic edge cut of size <= 3 exists exactly for tubes",
     lambda d: d["has_cyclic_cut_leq3"] == d["is_tube"]),
    ("one-extendable",
     "every edge lies in a perfect matching",
     lambda d: d["one_extendable"]),
    ("not-three-extendable",
     "no fullerene is 3-extendable",
     lambda d: not d["three_extendable"]),
    ("extendability-one-or-two",
     "the extendability number is 1 or 2",
     lambda d: d["extendability"] in (1, 2)),
    ("anti-kekule-three-or-four",
     "the anti-Kekule number is 3 or 4",
     lambda d: d["ak_number"] in (3, 4)),
    ("ak-three-implies-non-two-extendable",
     "anti-Kekule number 3 forces non-2-extendability",
     lambda d: d["ak_number"] != 3 or not d["two_extendable"]),
    ("quad-free-implies-two-extendable",
     "no quadrilaterals forces 2-extendability",
     lambda d: d["p4"] != 0 or d["two_extendable"]),
    ("pentagon-free-nontube-implies-two-extendable",
     "no pentagons and not a tube forces 2-extendability",
     lambda d: d["p5"] != 0 or d["is_tube"] or d["two_extendable"]),
    ("tube-implies-non-two-extendable",
     "tubes are never 2-extendable",
     lambda d: not d["is_tube"] or not d["two_extendable"]),
    ("witness-certificate-shape",
     "each non-2-extendable witness yields a deficiency certificate with "
     "two more components than deleted vertices, all factor-critical, and "
     "component boundary degree at least 3",
     lambda d: d["two_extendable"] or (
         d["certificate"] is not None
         and d["certificate"]["component_count"] == d["certificate"]["s_size"] + 2
         and d["certificate"]["all_factor_critical"]
         and d["certificate"]["matchable"]
         and d["certificate"]["min_component_boundary"] >= 3
         and d["certificate"]["boundary_identity_holds"])),
]


def _counterexample(g: PlaneCubicGraph, digest: dict) -> dict:
    return {
        "canonical": canonical_code(g).hex(),
        "planar_code": planar_code.encode_graph(g).hex(),
        "digest": digest,
    }


@dataclass(frozen=True)
class VerificationReport:
    nmax: int
    claims: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.failures == 0 for c in self.claims)

    def to_json(self) -> dict:
        return {
            "version": __version__,
            "nmax": self.nmax,
            "ok": self.ok,
            "claims": [c.to_json() for c in self.claims],
        }

    def render(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


class DigestCache:
    """Sidecar-backed digest store keyed by canonical code hex."""

    def __init__(self, directory: Optional[str]):
        self.directory = directory

    def _path(self, n: int) -> Optional[str]:
        if self.directory is None:
            return None
        return os.path.join(self.directory, f"fullerenes_n{n}.json")

    def load(self, n: int) -> dict[str, dict]:
        path = self._path(n)
        if path is None or not os.path.exists(path):
            return {}
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("version") != __version__:
            return {}
        return data.get("digests", {})

    def save(self, n: int, catalogue: Catalogue, digests: dict[str, dict]) -> None:
        path = self._path(n)
        if path is None:
            return
        os.makedirs(self.directory, exist_ok=True)
        payload = {
            "version": __version__,
            "n": n,
            "count": catalogue.size,
            "counts_by_faces": {
                f"{k[0]},{k[1]},{k[2]}": v for k, v in sorted(catalogue.counts.items())},
            "digests": digests,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")


def catalogue_digests(catalogue: Catalogue, jobs: int = 1,
                      cache: Optional[DigestCache] = None) -> dict[str, dict]:
    """Digest per canonical hex for the catalogue, optionally in parallel.

    Output is independent of the worker count: graphs are keyed by their
    canonical code and the mapping is rebuilt in catalogue order.
    """
    cached = cache.load(catalogue.n) if cache else {}
    todo = [g for g in catalogue.graphs
            if canonical_code(g).hex() not in cached]
    fresh: dict[str, dict] = {}
    if todo:
        if jobs > 1:
            packed = [planar_code.encode_graph(g) for g in todo]
            try:
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    results = list(pool.map(_analyze_packed, packed))
            except OSError:
                results = [analyze_graph(g) for g in todo]
        else:
            results = [analyze_graph(g) for g in todo]
        for g, digest in zip(todo, results):
            fresh[canonical_code(g).hex()] = digest
    digests = {}
    for g in catalogue.graphs:
        key = canonical_code(g).hex()
        digests[key] = cached.get(key) or fresh[key]
    if cache:
        cache.save(catalogue.n, catalogue, digests)
    return digests


def _tube_suite(nmax: int) -> list[ClaimResult]:
    max_layers = max(2, (nmax - 8) // 6)
    pm_claim = ClaimResult(
        "tube-pm-layer-structure",
        "tube perfect matchings pick exactly one edge per matching layer "
        "(cap stars and traversed gaps) and every such selection extends "
        "to exactly one perfect matching")
    witness_claim = ClaimResult(
        "tube-witness-pair",
        "two traversed edges of one gap never extend to a perfect matching")
    cut_claim = ClaimResult(
        "tube-traversed-cyclic-cuts",
        "every traversed-edge layer is an edge cut separating two "
        "cycle-containing sides")
    trip_claim = ClaimResult(
        "tube-recognize-roundtrip",
        "recognize_tube inverts build_tube")
    for layers in range(1, max_layers + 1):
        g, desc = families.build_tube(layers)
        report = families.verify_tube_pm_structure(layers)
        pm_claim.record(report.selection_bijection_holds and report.one_traversed_per_gap,
                        {"layers": layers, "pm_count": report.pm_count,
                         "layer_sizes": list(report.layer_sizes)})
        adj = g.adj_dict()
        bad_pair = None
        for layer in desc.traversed_edges:
            for pair in itertools.combinations(sorted(layer), 2):
                if mt.extends_to_perfect(adj, pair):
                    bad_pair = pair
        witness_claim.record(bad_pair is None,
                             {"layers": layers, "pair": bad_pair and _edge_list(bad_pair)})
        cut_ok = True
        for layer in desc.traversed_edges:
            left = mt.without_edges(adj, layer)
            comps = mt.components(left)
            cyclic = sum(
                1 for comp in comps
                if sum(1 for v in comp for w in left[v] if w in comp) // 2 >= len(comp))
            if len(comps) != 2 or cyclic != 2:
                cut_ok = False
        cut_claim.record(cut_ok, {"layers": layers})
        rec = families.recognize_tube(g)
        trip_claim.record(rec is not None and rec.n_layers == layers,
                          {"layers": layers})
    return [pm_claim, witness_claim, cut_claim, trip_claim]


def _sporadic_suite(nmax: int, catalogues: dict[int, Catalogue],
                    digests: dict[int, dict[str, dict]]) -> list[ClaimResult]:
    present = ClaimResult(
        "sporadic-candidates-present",
        "at sizes 12, 14, 18 and 20 the filter (not a tube, anti-Kekule "
        "number 3, non-2-extendable) is nonempty")
    certs = ClaimResult(
        "sporadic-witness-certificates",
        "every sporadic candidate's witness certificate has two more "
        "components than deleted vertices, all factor-critical")
    for n in (12, 14, 18, 20):
        if n > nmax:
            continue
        cat = catalogues[n]
        dig = digests[n]
        cands = [
            g for g in cat.graphs
            if not dig[canonical_code(g).hex()]["is_tube"]
            and dig[canonical_code(g).hex()]["ak_number"] == 3
            and not dig[canonical_code(g).hex()]["two_extendable"]]
        present.record(bool(cands), {"n": n, "candidates": len(cands)})
        for g in cands:
            cert = dig[canonical_code(g).hex()]["certificate"]
            ok = (cert is not None
                  and cert["component_count"] == cert["s_size"] + 2
                  and cert["all_factor_critical"])
            certs.record(ok, _counterexample(g, dig[canonical_code(g).hex()]))
    return [present, certs]


def verify_all(nmax: int, jobs: int = 1,
               cache_dir: Optional[str] = None) -> VerificationReport:
    """Run every registered claim over the catalogues up to nmax."""
    if nmax % 2 != 0:
        nmax -= 1
    cache = DigestCache(cache_dir) if cache_dir else None
    sizes = list(range(8, nmax + 1, 2))
    catalogues = {n: enumerate_fullerenes(n) for n in sizes}
    digests = {n: catalogue_digests(catalogues[n], jobs=jobs, cache=cache)
               for n in sizes}
    claims = [ClaimResult(anchor, text) for anchor, text, _ in GRAPH_CLAIMS]
    for n in sizes:
        for g in catalogues[n].graphs:
            d = digests[n][canonical_code(g).hex()]
            for claim, (_, _, pred) in zip(claims, GRAPH_CLAIMS):
                ok = bool(pred(d))
                claim.record(ok, None if ok else _counterexample(g, d))
    ak_exists = ClaimResult(
        "ak-three-exists-each-even-size",
        "every even size from 10 up has a fullerene with anti-Kekule number 3")
    for n in sizes:
        if n < 10:
            continue
        found = any(d["ak_number"] == 3 for d in digests[n].values())
        ak_exists.record(found, {"n": n})
    claims.append(ak_exists)
    claims.extend(_tube_suite(nmax))
    claims.extend(_sporadic_suite(nmax, catalogues, digests))
    return VerificationReport(nmax, tuple(claims))
