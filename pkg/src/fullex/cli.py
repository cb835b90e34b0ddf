"""Command-line front end.

Graphs travel between subcommands as binary planar_code (stdin/stdout or
files); analysis results are printed as JSON with sorted keys.  Exit codes:
0 when every check passes, 1 when a counterexample or negative verdict was
found, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from . import antikekule as ak_mod
from . import extendability as ext_mod
from . import families
from . import harness
from . import matching as mt
from . import planar_code
from .enumerator import (EnumerationError, configured_bound,
                         enumerate_fullerenes, naive_enumerate)
from .graphs import (GraphError, canonical_code, is_chiral, norm_edge,
                     validate_fullerene)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_USAGE


def _read_input(path: str):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return list(planar_code.read_graphs(data))


def _write_output(graphs, path: Optional[str]) -> None:
    if path is None or path == "-":
        planar_code.write_graphs(sys.stdout.buffer, graphs)
        sys.stdout.buffer.flush()
    else:
        planar_code.write_file(path, graphs)


def cmd_validate(args) -> int:
    graphs = _read_input(args.file)
    records = []
    all_ok = True
    for i, g in enumerate(graphs):
        try:
            inv = validate_fullerene(g)
            records.append({"index": i, "n": g.n, "ok": True,
                            "p4": inv.p4, "p5": inv.p5, "p6": inv.p6,
                            "chiral": is_chiral(g),
                            "canonical": canonical_code(g).hex()})
        except GraphError as exc:
            all_ok = False
            records.append({"index": i, "n": g.n, "ok": False,
                            "reason": str(exc)})
    _emit({"command": "validate", "graphs": records, "ok": all_ok})
    return EXIT_OK if all_ok else EXIT_COUNTEREXAMPLE


def cmd_gen_tube(args) -> int:
    g, desc = families.build_tube(args.layers)
    if args.descriptor:
        _emit({
            "command": "gen-tube",
            "layers": desc.n_layers,
            "vertices": g.n,
            "cap_centers": list(desc.cap_centers),
            "concentric_cycles": [list(c) for c in desc.concentric_cycles],
            "traversed_edges": [sorted([list(e) for e in layer])
                                for layer in desc.traversed_edges],
        })
        return EXIT_OK
    _write_output([g], args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.naive:
        catalogue = naive_enumerate(args.n)
    else:
        catalogue = enumerate_fullerenes(args.n)
    outdir = args.outdir
    summary = {
        "command": "enumerate",
        "n": args.n,
        "naive": bool(args.naive),
        "count": catalogue.size,
        "counts_by_faces": {f"{k[0]},{k[1]},{k[2]}": v
                            for k, v in sorted(catalogue.counts.items())},
    }
    if args.stdout:
        _write_output(catalogue.graphs, "-")
        return EXIT_OK
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, f"fullerenes_n{args.n}.plc")
    planar_code.write_file(path, catalogue.graphs)
    sidecar = harness.DigestCache(outdir)
    sidecar.save(args.n, catalogue, sidecar.load(args.n))
    summary["file"] = path
    _emit(summary)
    return EXIT_OK


def cmd_extend_check(args) -> int:
    graphs = _read_input(args.file)
    records = []
    all_extendable = True
    for i, g in enumerate(graphs):
        validate_fullerene(g)
        report = ext_mod.is_k_extendable(g, args.k)
        rec = {"index": i, "n": g.n, "k": args.k,
               "extendable": report.extendable,
               "canonical": canonical_code(g).hex()}
        if not report.extendable:
            all_extendable = False
            rec["witness"] = [list(e) for e in report.witness]
            cert = report.certificate
            rec["certificate"] = {
                "s_size": len(cert.S),
                "component_count": len(cert.components),
                "all_factor_critical": all(cert.factor_critical_flags),
                "matchable": cert.matchable,
            }
        records.append(rec)
    _emit({"command": "extend-check", "graphs": records, "ok": all_extendable})
    return EXIT_OK if all_extendable else EXIT_COUNTEREXAMPLE


def cmd_antikekule(args) -> int:
    graphs = _read_input(args.file)
    records = []
    for i, g in enumerate(graphs):
        validate_fullerene(g)
        result = ak_mod.anti_kekule_number(g)
        records.append({"index": i, "n": g.n, "number": result.number,
                        "witness": [list(e) for e in sorted(result.witness_set)],
                        "canonical": canonical_code(g).hex()})
    _emit({"command": "antikekule", "graphs": records, "ok": True})
    return EXIT_OK


def _parse_edges(spec: str):
    out = []
    for part in spec.split(","):
        u, _, v = part.partition("-")
        out.append(norm_edge(int(u), int(v)))
    return out


def cmd_certify(args) -> int:
    graphs = _read_input(args.file)
    pair = _parse_edges(args.edges)
    if len(pair) != 2:
        return _fail("--edges expects exactly two edges, e.g. 0-1,4-9")
    records = []
    all_extend = True
    for i, g in enumerate(graphs):
        validate_fullerene(g)
        extends = mt.extends_to_perfect(g, pair)
        rec = {"index": i, "n": g.n, "edges": [list(e) for e in pair],
               "extends": extends}
        if not extends:
            all_extend = False
            covered = {v for e in pair for v in e}
            cert = mt.deficiency_certificate(mt.induced(g.adj_dict(), covered))
            rec["certificate"] = {
                "s": sorted(cert.S),
                "components": [sorted(c) for c in cert.components],
                "all_factor_critical": all(cert.factor_critical_flags),
                "matchable": cert.matchable,
                "deficiency": cert.deficiency,
            }
        records.append(rec)
    _emit({"command": "certify", "graphs": records, "ok": all_extend})
    return EXIT_OK if all_extend else EXIT_COUNTEREXAMPLE


def cmd_canonical(args) -> int:
    graphs = _read_input(args.file)
    _emit({"command": "canonical",
           "codes": [canonical_code(g).hex() for g in graphs]})
    return EXIT_OK


def cmd_verify_all(args) -> int:
    report = harness.verify_all(args.nmax, jobs=args.jobs,
                                cache_dir=args.cache_dir)
    sys.stdout.write(report.render())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fullex",
        description="matching extendability of (4,5,6)-fullerene graphs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate planar_code fullerenes")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen-tube", help="emit a tube as planar_code")
    p.add_argument("layers", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--descriptor", action="store_true",
                   help="print the JSON layer descriptor instead")
    p.set_defaults(func=cmd_gen_tube)

    p = sub.add_parser("enumerate", help="catalogue all fullerenes on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--naive", action="store_true",
                   help="use the exhaustive rotation-system search")
    p.add_argument("--outdir", default=".")
    p.add_argument("--stdout", action="store_true",
                   help="stream planar_code instead of writing files")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extend-check", help="decide k-extendability")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_extend_check)

    p = sub.add_parser("antikekule", help="anti-Kekule number with witness")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_antikekule)

    p = sub.add_parser("certify", help="check a matching pair, certify failure")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--edges", required=True,
                   help="two edges as u-v,u-v with 0-based vertex ids")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("canonical", help="canonical codes of the input graphs")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify-all", help="run the complete claim suite")
    p.add_argument("--nmax", type=int, default=configured_bound())
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, planar_code.PlanarCodeError, EnumerationError,
            mt.MatchingError, ext_mod.ExtendabilityError,
            ak_mod.AntiKekuleError, families.BadLayerCount,
            ValueError, OSError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
