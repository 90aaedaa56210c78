import io
import json
import subprocess
import sys

import pytest

from miscensus.cli import main
from miscensus.enumeration import small_graphs
from miscensus.graph import Graph, parse_graph6, to_graph6
from miscensus.mis import imax


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class TestMis:
    def test_k3_count(self, monkeypatch):
        assert run(["mis", "--count"], "Bw\n", monkeypatch) == (0, "3\n")

    def test_c6(self, monkeypatch):
        c6 = to_graph6(Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]))
        assert imax(parse_graph6(c6)) == 5
        assert run(["mis"], c6 + "\n", monkeypatch)[1] == "5\n"

    def test_empty_input(self, monkeypatch):
        code, out = run(["mis", "--report", "json"], "", monkeypatch)
        assert code == 0 and json.loads(out) == {"suite": "mis", "rows": [], "status": "pass"}

    def test_enumerate_json(self, monkeypatch):
        p4 = to_graph6(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
        code, out = run(["mis", "--enumerate", "--witness-limit", "2", "--report", "json"],
                        f">>graph6<<\n{p4}\n", monkeypatch)
        row = json.loads(out)["rows"][0]
        assert row["count"] == "3" and row["truncated"] is True
        assert row["witnesses"] == sorted(row["witnesses"], key=lambda s: sum(1 << v for v in s))
        assert len(row["witnesses"]) == 2

    def test_budget_flagged_and_run_continues(self, monkeypatch):
        cyc = to_graph6(Graph.from_edges(30, [(i, (i + 1) % 30) for i in range(30)]))
        code, out = run(["mis", "--budget", "5", "--report", "json"], f"{cyc}\nBw\n", monkeypatch)
        rows = json.loads(out)["rows"]
        assert code == 0
        assert rows[0]["budget_exceeded"] and rows[0]["count"] is None
        assert rows[1]["count"] == "3"

    def test_parse_error_exit_code(self, monkeypatch, capsys):
        code, _ = run(["mis"], "Bw\nBx\n", monkeypatch)
        assert code == 2
        assert "line 2" in capsys.readouterr().err

    def test_file_input(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Bw\nA_\n")
        assert run(["mis", "--input", str(p)]) == (0, "3\n2\n")

    def test_unsafe_uncapped_lifts_order_cap(self, tmp_path):
        p = tmp_path / "big.g6"
        p.write_text(to_graph6(Graph(513, [0] * 513, cap=1024)) + "\n")
        assert run(["mis", "--input", str(p)])[0] == 2
        assert run(["mis", "--input", str(p), "--unsafe-uncapped"]) == (0, "1\n")

    def test_missing_file(self, capsys):
        assert run(["mis", "--input", "/nonexistent/x.g6"])[0] == 2


class TestConstruct:
    def test_tree_mod5_selfcheck(self, capsys):
        code, out = run(["construct", "tree-mod5", "--n", "12", "--selfcheck"])
        assert code == 0
        assert imax(parse_graph6(out.strip())) == 18
        assert "imax = 18" in capsys.readouterr().err

    def test_clique_subsets(self):
        code, out = run(["construct", "clique-subsets", "--k", "4"])
        g = parse_graph6(out.strip())
        assert code == 0 and g.n == 10 and imax(g) == 4

    def test_clique_subsets_with_empty_has_eleven_vertices(self):
        assert parse_graph6(run(["construct", "clique-subsets-empty", "--k", "4"])[1].strip()).n == 11

    def test_spider_infeasible(self, capsys):
        assert run(["construct", "spider", "--n", "3"])[0] == 2
        assert "spider" in capsys.readouterr().err

    def test_missing_parameter(self):
        assert run(["construct", "furedi-griggs"])[0] == 2

    def test_trees_n8(self):
        code, out = run(["construct", "trees-n8", "--selfcheck"])
        assert code == 0 and len(out.split()) == 3

    def test_lt_matrices(self):
        code, out = run(["construct", "lt-matrices", "--k", "6", "--selfcheck"])
        blocks = out.strip().split("\n\n")
        assert code == 0 and len(blocks) == 4
        assert all(len(b.split()) == 6 for b in blocks)

    @pytest.mark.parametrize("argv", [
        ["construct", "baton", "--n", "10", "--length", "3"],
        ["construct", "bip-minus-matching", "--n", "9"],
        ["construct", "spider", "--n", "9"],
        ["construct", "furedi-griggs", "--n", "10"],
    ])
    def test_selfcheck_families(self, argv):
        assert run(argv + ["--selfcheck"])[0] == 0

    def test_output_is_byte_stable(self):
        argv = ["construct", "furedi-griggs", "--n", "14"]
        assert run(argv) == run(argv)


class TestCensus:
    def test_trees_json(self):
        code, out = run(["census", "trees", "--n", "14"])
        doc = json.loads(out)
        assert code == 0 and doc["status"] == "pass"
        assert list(doc) == ["suite", "rows", "status"]
        row = doc["rows"][0]
        assert list(row) == ["n", "min_imax", "extremal_count", "predicate", "witnesses"]
        assert row["extremal_count"] == 2 and row["min_imax"] == "27"

    def test_trees_csv(self):
        code, out = run(["census", "trees", "--min-n", "4", "--max-n", "6", "--report", "csv"])
        assert out.splitlines() == ["n,extremal_trees,min_imax", "4,1,3", "5,1,4", "6,2,5"]

    def test_graphs_row_six(self):
        code, out = run(["census", "graphs", "--n", "6", "--report", "csv"])
        assert out.splitlines()[1].startswith("6,4,2,2,")

    def test_graphs_from_stream(self, tmp_path):
        p = tmp_path / "g7.g6"
        p.write_text("".join(to_graph6(g) + "\n" for g in small_graphs(7, connected_only=True)))
        code, out = run(["census", "graphs", "--n", "7", "--input", str(p), "--report", "csv"])
        assert code == 0 and out.splitlines()[1] == "7,5,4,5,4,17"

    def test_stream_needs_order(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text("Bw\n")
        assert run(["census", "graphs", "--input", str(p)])[0] == 2

    def test_json_independent_of_threads(self):
        a = run(["census", "trees", "--max-n", "9", "--threads", "1"])
        b = run(["--threads", "2", "census", "trees", "--max-n", "9"])
        assert a == b

    def test_env_threads(self, monkeypatch):
        monkeypatch.setenv("MIS_THREADS", "zero")
        assert run(["census", "trees", "--n", "5"])[0] == 2

    def test_cap_and_uncapped(self):
        assert run(["census", "graphs", "--n", "9"])[0] == 2
        assert run(["census", "trees", "--n", "23"])[0] == 2


class TestVerify:
    def test_milner(self):
        code, out = run(["verify", "milner", "--n", "3"])
        doc = json.loads(out)
        assert code == 0 and doc["rows"][0]["max_size"] == "7" and doc["rows"][0]["extremal_count"] == 1

    def test_inequalities(self):
        code, out = run(["verify", "inequalities", "--max", "200"])
        doc = json.loads(out)
        assert code == 0 and doc["rows"][0]["exceptions"] == [[3, 3]]

    def test_thm3(self):
        code, out = run(["verify", "thm3", "--max-n", "12", "--report", "text"])
        assert code == 0 and out.startswith("thm3: PASS")

    @pytest.mark.parametrize("argv", [
        ["verify", "thm1", "--max-n", "6"],
        ["verify", "thm2", "--max-n", "6"],
        ["verify", "lemma-wilf", "--samples", "20", "--max-n", "10"],
        ["verify", "matrices", "--max-k", "4"],
        ["verify", "forests", "--max-n", "9"],
    ])
    def test_suites_pass(self, argv):
        assert run(argv)[0] == 0

    def test_thm1_stream(self, tmp_path):
        p = tmp_path / "g5.g6"
        p.write_text("".join(to_graph6(g) + "\n" for g in small_graphs(5)))
        code, out = run(["verify", "thm1", "--n", "5", "--input", str(p)])
        assert code == 0 and json.loads(out)["rows"][0]["equality_cases"] == 1

    def test_failure_exit_code(self, monkeypatch):
        import miscensus.verify as verify

        monkeypatch.setitem(verify.EXTREMAL_TREE_COUNTS, 6, 99)
        code, out = run(["verify", "thm3", "--max-n", "6"])
        doc = json.loads(out)
        assert code == 1 and doc["status"] == "fail"
        assert doc["counterexample"]["expected"] == "99 extremal trees"

    def test_unknown_suite(self):
        assert run(["verify", "nope"])[0] == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "miscensus.cli", "construct", "clique-subsets", "--k", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "Dqo"
