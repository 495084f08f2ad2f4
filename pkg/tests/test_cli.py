import json

import pytest

from routegraph import save_graph
from routegraph.service import AlgorithmRequest, normalize_result, run_algorithm
from routegraph.service.cli import main
from routegraph.fixtures import koenigsberg, triangle


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    save_graph(triangle(), path)
    return str(path)


@pytest.fixture
def koenigsberg_file(tmp_path):
    path = tmp_path / "koenigsberg.json"
    save_graph(koenigsberg(), path)
    return str(path)


def test_dijkstra_prints_distance_table(triangle_file, capsys):
    assert main(["dijkstra", "--graph", triangle_file, "--source", "0"]) == 0
    out = capsys.readouterr().out
    rows = {line.split("\t")[0]: line.split("\t")[1]
            for line in out.splitlines() if "\t" in line}
    assert rows["2"] == "3"
    assert rows["1"] == "1"


def test_cpp_reports_cost_nine(koenigsberg_file, capsys):
    assert main(["cpp", "--graph", koenigsberg_file, "--depot", "0"]) == 0
    out = capsys.readouterr().out
    assert "cost 9" in out


def test_missing_file_exits_3(capsys):
    assert main(["dijkstra", "--graph", "missing.json", "--source", "0"]) == 3


def test_invalid_graph_exits_4(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert main(["dijkstra", "--graph", str(bad), "--source", "0"]) == 4


def test_algorithm_error_exits_5(tmp_path, capsys):
    from routegraph import Graph

    disconnected = tmp_path / "two.json"
    save_graph(Graph().add_node(0, 0).add_node(9, 9), disconnected)
    assert main(["prim", "--graph", str(disconnected)]) == 5
    assert "error" in capsys.readouterr().err


def test_unknown_source_exits_5(triangle_file, capsys):
    assert main(["dijkstra", "--graph", triangle_file, "--source", "42"]) == 5


def test_bad_usage_exits_2(triangle_file):
    with pytest.raises(SystemExit) as excinfo:
        main(["dijkstra", "--graph", triangle_file])  # --source is required
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["warp", "--graph", triangle_file])
    assert excinfo.value.code == 2


def test_json_output_matches_runner(koenigsberg_file, capsys):
    assert main(["cpp", "--graph", koenigsberg_file, "--depot", "0", "--json"]) == 0
    printed = json.loads(capsys.readouterr().out)
    direct = run_algorithm(koenigsberg(), AlgorithmRequest("chinese_postman", depot=0))
    assert normalize_result(printed) == normalize_result(direct)


def test_out_flag_writes_result_file(triangle_file, tmp_path, capsys):
    out_file = tmp_path / "result.json"
    assert main(["tsp", "--graph", triangle_file, "--opt2", "--opt3",
                 "--out", str(out_file)]) == 0
    stored = json.loads(out_file.read_text())
    assert stored["kind"] == "tour"
    assert stored["opt2"] and stored["opt3"]


def test_floyd_waypoints(triangle_file, capsys):
    assert main(["floyd", "--graph", triangle_file, "--waypoints", "0,1,2"]) == 0
    out = capsys.readouterr().out
    assert "cost 3" in out
    assert "nodes: 0 1 2" in out


def test_prim_text_output(triangle_file, capsys):
    assert main(["prim", "--graph", triangle_file]) == 0
    out = capsys.readouterr().out
    assert "total_weight 3" in out
