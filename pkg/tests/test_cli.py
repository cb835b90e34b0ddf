import json
import subprocess
import sys

from fullex import planar_code as PC
from fullex.graphs import cube_graph


def run_cli(args, input=None):
    return subprocess.run([sys.executable, "-m", "fullex.cli"] + args,
                          capture_output=True, input=input)


def cube_bytes():
    import io
    buf = io.BytesIO()
    PC.write_graphs(buf, [cube_graph()])
    return buf.getvalue()


def test_gen_tube_pipe_extend_check():
    tube = run_cli(["gen-tube", "3"])
    assert tube.returncode == 0
    check = run_cli(["extend-check", "--k", "2"], input=tube.stdout)
    assert check.returncode == 1
    report = json.loads(check.stdout)
    rec = report["graphs"][0]
    assert rec["extendable"] is False
    assert len(rec["witness"]) == 2
    assert rec["certificate"]["component_count"] == rec["certificate"]["s_size"] + 2


def test_gen_tube_descriptor():
    r = run_cli(["gen-tube", "2", "--descriptor"])
    assert r.returncode == 0
    desc = json.loads(r.stdout)
    assert desc["layers"] == 2
    assert desc["vertices"] == 20
    assert len(desc["traversed_edges"]) == 2


def test_validate_cube():
    r = run_cli(["validate"], input=cube_bytes())
    assert r.returncode == 0
    rec = json.loads(r.stdout)["graphs"][0]
    assert rec["ok"] and rec["p4"] == 6


def test_validate_malformed_input_exits_two():
    r = run_cli(["validate"], input=b"definitely not planar code")
    assert r.returncode == 2


def test_extend_check_rejects_six_vertex_graph():
    # triangular prism: plane cubic, but its triangles fail validation
    import io
    from fullex.graphs import from_faces
    prism = from_faces([(0, 1, 2), (5, 4, 3), (0, 3, 4, 1),
                        (1, 4, 5, 2), (2, 5, 3, 0)])
    buf = io.BytesIO()
    PC.write_graphs(buf, [prism])
    r = run_cli(["extend-check", "--k", "2"], input=buf.getvalue())
    assert r.returncode == 2


def test_usage_error_exits_two():
    r = run_cli(["no-such-command"])
    assert r.returncode == 2


def test_extend_check_one_extendable_cube():
    r = run_cli(["extend-check", "--k", "1"], input=cube_bytes())
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True


def test_antikekule_cube():
    r = run_cli(["antikekule"], input=cube_bytes())
    assert r.returncode == 0
    rec = json.loads(r.stdout)["graphs"][0]
    assert rec["number"] == 4
    assert len(rec["witness"]) == 4


def test_certify_extending_pair():
    r = run_cli(["certify", "--edges", "0-1,6-7"], input=cube_bytes())
    assert r.returncode == 0
    assert json.loads(r.stdout)["graphs"][0]["extends"] is True


def test_certify_nonextendable_pair_on_tube():
    tube = run_cli(["gen-tube", "1"]).stdout
    r = run_cli(["certify", "--edges", "2-7,4-9"], input=tube)
    assert r.returncode == 1
    rec = json.loads(r.stdout)["graphs"][0]
    assert rec["extends"] is False
    cert = rec["certificate"]
    assert len(cert["components"]) == len(cert["s"]) + 2
    assert cert["all_factor_critical"]


def test_canonical_output():
    r = run_cli(["canonical"], input=cube_bytes())
    assert r.returncode == 0
    codes = json.loads(r.stdout)["codes"]
    assert len(codes) == 1
    bytes.fromhex(codes[0])


def test_enumerate_creates_missing_outdir(tmp_path):
    r = run_cli(["enumerate", "10", "--outdir", str(tmp_path / "fresh" / "dir")])
    assert r.returncode == 0
    assert (tmp_path / "fresh" / "dir" / "fullerenes_n10.plc").exists()


def test_enumerate_writes_catalogue(tmp_path):
    r = run_cli(["enumerate", "12", "--outdir", str(tmp_path)])
    assert r.returncode == 0
    summary = json.loads(r.stdout)
    assert summary["count"] == 2
    plc = tmp_path / "fullerenes_n12.plc"
    sidecar = tmp_path / "fullerenes_n12.json"
    assert plc.exists() and sidecar.exists()
    graphs = PC.read_file(plc)
    assert len(graphs) == 2
    meta = json.loads(sidecar.read_text())
    assert meta["count"] == 2


def test_enumerate_stdout_pipes_into_validate():
    enum = run_cli(["enumerate", "10", "--stdout"])
    assert enum.returncode == 0
    r = run_cli(["validate"], input=enum.stdout)
    assert r.returncode == 0


def test_verify_all_deterministic_across_jobs():
    a = run_cli(["verify-all", "--nmax", "10"])
    b = run_cli(["verify-all", "--nmax", "10"])
    c = run_cli(["verify-all", "--nmax", "10", "--jobs", "2"])
    assert a.returncode == 0
    assert a.stdout == b.stdout == c.stdout
    report = json.loads(a.stdout)
    assert report["ok"] is True
    assert all(c["failures"] == 0 for c in report["claims"])


def test_verify_all_cache_roundtrip(tmp_path):
    a = run_cli(["verify-all", "--nmax", "10", "--cache-dir", str(tmp_path)])
    assert a.returncode == 0
    assert (tmp_path / "fullerenes_n8.json").exists()
    b = run_cli(["verify-all", "--nmax", "10", "--cache-dir", str(tmp_path)])
    assert b.stdout == a.stdout
