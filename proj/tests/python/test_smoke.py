import json
import os
import subprocess

import pytest

import resdecomp as rd


def path(n, w=1.0):
    return rd.Graph(n, [(i, i + 1, w) for i in range(n - 1)])


def test_graph_construction_merges_parallel_edges():
    g = rd.Graph(2, [(0, 1, 1.0), (1, 0, 2.0), (1, 1, 5.0)])
    assert (g.n, g.m) == (2, 1)
    assert g.edges() == [(0, 1, 3.0)]
    assert g.total_weight == 3.0


def test_invalid_edge_raises():
    with pytest.raises(rd.InvalidArgument):
        rd.Graph(2, [(0, 1, -1.0)])


def test_generators():
    assert (rd.hypercube(3).n, rd.hypercube(3).m) == (8, 12)
    assert rd.grid2d(3).m == 12
    assert rd.complete_graph(4).m == 6
    assert rd.barbell(4).m == 13
    assert rd.random_regular(10, 3, 1).edges() == rd.random_regular(10, 3, 1).edges()


def test_cut_stats_and_components():
    k4 = rd.complete_graph(4)
    s = rd.cut_stats(k4, [0, 1])
    assert (s.boundary_weight, s.volume) == (4.0, 6.0)
    assert s.conductance == pytest.approx(2 / 3)
    split = rd.Graph(4, [(0, 1, 1.0), (2, 3, 1.0)])
    assert rd.connected_components(split) == [[0, 1], [2, 3]]
    assert rd.cut_stats(rd.Graph(2, []), [0]).conductance is None


def test_resistance_queries():
    p = path(3)
    assert rd.exact_reff(p, 0, 2) == pytest.approx(2.0)
    pot = rd.st_potential(p, 0, 2)
    assert list(pot) == pytest.approx([2.0, 1.0, 0.0])
    assert rd.exact_reff_matrix(rd.complete_graph(4))[0, 1] == pytest.approx(0.5)
    est = rd.approx_reff_from_source(p, 0)
    assert 2 / 1.5 <= est[2] <= 2 * 1.5
    u, v, a = rd.furthest_pair(path(5))
    assert u == 0 and rd.exact_reff(path(5), u, v) >= 4 / 3
    with pytest.raises(rd.InfiniteResistanceError):
        rd.exact_reff(rd.Graph(4, [(0, 1, 1.0), (2, 3, 1.0)]), 0, 3)
    with pytest.raises(rd.DisconnectedGraphError):
        rd.exact_reff(rd.Graph(4, [(0, 1, 1.0), (2, 3, 1.0)]), 0, 3)


def test_sparse_cut_on_barbell():
    cut = rd.find_sparse_cut(rd.barbell(4), 0.25)
    assert cut.conductance == 1 / 13
    assert sorted(cut.subset) in ([0, 1, 2, 3], [4, 5, 6, 7])
    assert cut.sparse_cut_found


def test_partition_and_verify():
    g = rd.barbell(6)
    result = rd.partition(g, 4.0)
    assert sorted(v for b in result.blocks for v in b) == list(range(g.n))
    record = rd.verify_partition(g, result.blocks, 4.0)
    assert record.passed
    assert sum(p * w for p, (_, _, w) in zip(result.psi, g.edges())) == pytest.approx(
        result.type_ii_weight
    )
    with pytest.raises(rd.InvalidArgument):
        rd.verify_partition(g, [[0]], 4.0)


def test_edge_list_round_trip(tmp_path):
    f = tmp_path / "g.txt"
    rd.write_edge_list(str(f), rd.grid2d(4))
    g = rd.read_edge_list(str(f))
    assert (g.n, g.m) == (16, 24)
    f.write_text("0 1 1\n0 2 x\n")
    with pytest.raises(rd.GraphFormatError, match="line 2"):
        rd.read_edge_list(str(f))


def test_cli_in_process(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text("0 1 1\n1 2 1\n")
    code, out, _ = rd.run_cli(["reff", "--graph", str(f), "-s", "0", "-t", "2", "--exact"])
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["result"]["reff"] == 2.0
    assert rd.run_cli(["nonsense"])[0] == 1


@pytest.mark.skipif("RESDECOMP_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary(tmp_path):
    cli = os.environ["RESDECOMP_CLI"]
    h3 = tmp_path / "h3.txt"
    subprocess.run([cli, "gen", "--family", "hypercube", "--dim", "3", "--out", str(h3)],
                   check=True, capture_output=True)
    assert len(h3.read_text().splitlines()) == 12
    done = subprocess.run([cli, "decompose", "--graph", str(h3), "--delta", "4"],
                          check=True, capture_output=True, text=True)
    blocks = json.loads(done.stdout)["result"]["blocks"]
    assert sorted(v for b in blocks for v in b) == list(range(8))
    bad = subprocess.run([cli, "cut", "--graph", str(tmp_path / "missing.txt")],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    assert json.loads(bad.stdout)["error"]["type"] == "Error"
