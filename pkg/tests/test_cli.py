import pytest

from planarcut.cli import main
from planarcut.generators import theta_graph
from planarcut.graphio import save_graph

SINGLE_EDGE = "2 1\n0 1 5\n0\n0\n"


@pytest.fixture
def single_edge_file(tmp_path):
    p = tmp_path / "edge.g"
    p.write_text(SINGLE_EDGE)
    return str(p)


def test_build_then_query(tmp_path, single_edge_file, capsys):
    orc = str(tmp_path / "edge.pco")
    assert main(["build", single_edge_file, "-o", orc]) == 0
    out = capsys.readouterr().out
    assert "n=2" in out and "basis_weight=5" in out
    assert main(["query", orc, "0", "1"]) == 0
    assert capsys.readouterr().out.strip() == "5"
    assert main(["query", orc, "0", "1", "--cut"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["5", "cut 0"]


def test_query_bad_vertex_exit_code(tmp_path, single_edge_file, capsys):
    orc = str(tmp_path / "edge.pco")
    main(["build", single_edge_file, "-o", orc])
    capsys.readouterr()
    assert main(["query", orc, "0", "9"]) == 2
    assert main(["query", orc, "1", "1"]) == 2


def test_mcb_theta(tmp_path, capsys):
    p = tmp_path / "theta.g"
    save_graph(theta_graph(1, 2, 3), str(p))
    assert main(["mcb", str(p)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert lines[-1] == "total 14"


def test_ghtree_line_count(capsys):
    assert main(["ghtree", "grid:3,3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    for ln in lines:
        u, v, w = ln.split()
        assert int(u) != int(v) and int(w) > 0


def test_verify_ok(capsys):
    assert main(["verify", "delaunay:10", "--pairs", "12",
                 "--fixtures", "2"]) == 0
    assert "0 mismatches" in capsys.readouterr().out


def test_verify_jobs(capsys):
    assert main(["verify", "grid:3,3", "--pairs", "6", "--fixtures", "2",
                 "--jobs", "2"]) == 0
    assert "0 mismatches" in capsys.readouterr().out


def test_missing_file_exit_code(capsys):
    assert main(["build", "no/such/file.g", "-o", "x.pco"]) == 2
    assert main(["query", "no/such/oracle.pco", "0", "1"]) == 2


def test_bad_generator_spec(capsys):
    assert main(["ghtree", "torus:9"]) == 2
    assert main(["ghtree", "grid:x"]) == 2
    assert main(["mcb", "delaunay:2"]) == 2


def test_bench_table(capsys):
    assert main(["bench", "--sizes", "16", "--gen", "grid"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split("\t") == ["gen", "n", "m", "build_s", "query_us"]
    assert lines[1].startswith("grid\t16\t")


def test_bench_dump_subdivision(capsys):
    assert main(["bench", "--sizes", "9", "--gen", "grid",
                 "--dump-subdivision"]) == 0
    out = capsys.readouterr().out
    assert "piece\tlevel\tedges\tboundary\tholes" in out


def test_build_dump_region_tree(tmp_path, single_edge_file, capsys):
    orc = str(tmp_path / "t.pco")
    assert main(["build", single_edge_file, "-o", orc,
                 "--dump-region-tree"]) == 0
    out = capsys.readouterr().out
    assert "region" in out and "weight" in out


def test_auto_embed_input(tmp_path, capsys):
    p = tmp_path / "k4.g"
    p.write_text("auto-embed\n4 6\n0 1 1\n0 2 1\n0 3 1\n"
                 "1 2 1\n1 3 1\n2 3 1\n")
    orc = str(tmp_path / "k4.pco")
    assert main(["build", str(p), "-o", orc]) == 0
    capsys.readouterr()
    assert main(["query", orc, "0", "3"]) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_nonplanar_rejected(tmp_path, capsys):
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    body = "".join(f"{u} {v} 1\n" for u, v in edges)
    p = tmp_path / "k5.g"
    p.write_text(f"auto-embed\n5 {len(edges)}\n{body}")
    assert main(["build", str(p), "-o", str(tmp_path / "k5.pco")]) == 2


def test_safe_cycles_flag(capsys):
    assert main(["ghtree", "grid:2,3", "--safe-cycles"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
