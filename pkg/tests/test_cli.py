import csv
import io
import subprocess
import sys

import pytest

from domkit import complete_bipartite, double_star, odd_cycle_corona, write_edge_list
from domkit.cli import draw_instances, main
from domkit.graph import parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k33_file(tmp_path):
    path = tmp_path / "k33.txt"
    write_edge_list(complete_bipartite(3), path)
    return path


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_solve_k33(capsys, k33_file):
    code, out, _ = run(capsys, "solve", "--input", str(k33_file))
    assert code == 0
    assert "gamma=2 i=3 delta=3 ratio=3/2" in out
    assert "within_conjecture=true" in out


def test_solve_single_edge(capsys, tmp_path):
    code, out, _ = run(capsys, "solve", "--input", str(write(tmp_path, "e.txt", "n 2\n0 1\n")))
    assert code == 0
    assert "gamma=1 i=1" in out
    assert "conjecture_bound=n/a" in out


def test_solve_oracle_method(capsys, k33_file):
    code, out, _ = run(capsys, "solve", "--input", str(k33_file), "--method", "oracle")
    assert code == 0 and "method=oracle" in out and "ratio=3/2" in out


def test_solve_malformed_header(capsys, tmp_path):
    code, _, err = run(capsys, "solve", "--input", str(write(tmp_path, "bad.txt", "# hi\nnodes 3\n")))
    assert code == 2
    assert "line 2" in err


def test_transform_k33(capsys, tmp_path, k33_file):
    d = write(tmp_path, "d.txt", "0 3\n")
    code, out, _ = run(capsys, "transform", "--input", str(k33_file), "--dominating-set", str(d))
    assert code == 0
    assert "I = {0,1,2}" in out
    assert "A2 = {1,2}" in out
    assert "swapped = false" in out
    assert "checks: ok" in out


def test_transform_not_bipartite(capsys, tmp_path):
    g = write(tmp_path, "c3.txt", "n 3\n0 1\n1 2\n0 2\n")
    d = write(tmp_path, "d.txt", "0\n")
    code, _, err = run(capsys, "transform", "--input", str(g), "--dominating-set", str(d))
    assert code == 3
    assert "odd cycle" in err


def test_transform_not_dominating(capsys, tmp_path):
    g = write(tmp_path, "c4.txt", "n 4\n0 1\n1 2\n2 3\n0 3\n")
    d = write(tmp_path, "d.txt", "0\n")
    code, _, err = run(capsys, "transform", "--input", str(g), "--dominating-set", str(d))
    assert code == 4
    assert "vertex 2" in err


def test_generate_examples(capsys):
    code, out, _ = run(capsys, "generate", "double-star", "--s", "3")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.edge_count) == (8, 7)
    assert g == double_star(3)

    _, out, _ = run(capsys, "generate", "corona", "--k", "1", "--s", "5")
    assert out.startswith("n 18\n")
    assert parse_edge_list(out) == odd_cycle_corona(1, 5)

    _, out, _ = run(capsys, "generate", "complete-bipartite", "--m", "1")
    assert out == "n 2\n0 1\n"


def test_generate_invalid_params(capsys):
    code, _, _ = run(capsys, "generate", "corona", "--k", "0", "--s", "2")
    assert code == 2


def test_generate_output_path(capsys, tmp_path):
    path = tmp_path / "g.txt"
    assert main(["generate", "cycle", "--n", "5", "--output", str(path)]) == 0
    assert path.read_bytes() == b"n 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_generate_random_round_trip(capsys):
    _, out, _ = run(capsys, "generate", "random-bipartite", "--na", "5", "--nb", "4",
                    "--edge-prob", "0.5", "--seed", "11")
    assert write_edge_list(parse_edge_list(out)) == out


def test_verify_empty(capsys):
    code, out, err = run(capsys, "verify", "--count", "0")
    assert code == 0
    assert out.count("\n") == 1 and out.startswith("instance,")
    assert "instances=0" in err


def test_verify_small_batch(capsys):
    code, out, err = run(capsys, "verify", "--count", "40", "--seed", "3", "--max-n", "10",
                         "--edge-prob", "0.3,0.6", "--connected")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 40
    for row in rows:
        assert row["within_conjecture"] == "true"
        assert 2 * int(row["i"]) <= int(row["gamma"]) * int(row["delta"])
        assert int(row["i"]) <= int(row["transform_size"])
    assert "violations=0" in err


def test_verify_skips_low_degree(capsys):
    # min-n = max-n = 2 forces a single edge (delta 1) or nothing
    code, out, err = run(capsys, "verify", "--count", "5", "--min-n", "2", "--max-n", "2")
    assert code == 0
    assert "skipped_delta_lt_2=5" in err


def test_verify_parallel_matches_serial(capsys):
    argv = ["verify", "--count", "30", "--seed", "5", "--max-n", "12", "--edge-prob", "0.4"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == parallel


def test_draw_instances_connected():
    params = draw_instances(50, 6, 16, [0.2, 0.4, 0.7], 7, True)
    assert params == draw_instances(50, 6, 16, [0.2, 0.4, 0.7], 7, True)
    assert [p for *_, p, _ in params][:3] == [0.2, 0.4, 0.7]
    assert all(6 <= n <= 16 and na + nb == n for n, na, nb, _, _ in params)


def test_sweep_rows(capsys):
    code, out, _ = run(capsys, "sweep", "--k-min", "1", "--k-max", "2", "--s-min", "4", "--s-max", "7")
    assert code == 0
    rows = {(int(r["k"]), int(r["s"])): r for r in csv.DictReader(io.StringIO(out))}
    r = rows[1, 5]
    assert (r["gamma"], r["i"], r["exceeds"]) == ("3", "11", "true")
    assert (r["oracle_gamma"], r["oracle_i"]) == ("3", "11")
    assert rows[1, 4]["exceeds"] == "false"
    assert (rows[1, 4]["ratio_num"], rows[1, 4]["ratio_den"]) == ("3", "1")
    r = rows[2, 7]
    assert (r["gamma"], r["i"], r["delta"], r["exceeds"]) == ("5", "23", "9", "true")
    assert r["oracle_gamma"] == ""  # n = 40 is above the oracle cap


def test_sweep_empty_range(capsys):
    code, out, _ = run(capsys, "sweep", "--k-min", "3", "--k-max", "2")
    assert code == 0
    assert out.count("\n") == 1


def test_oracle_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("DOMKIT_ORACLE_CAP", "5")
    _, out, _ = run(capsys, "sweep", "--k-max", "1", "--s-max", "1")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["oracle_gamma"] == ""


def test_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_console_entry_point(k33_file):
    proc = subprocess.run([sys.executable, "-m", "domkit.cli", "solve", "--input", str(k33_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "ratio=3/2" in proc.stdout
