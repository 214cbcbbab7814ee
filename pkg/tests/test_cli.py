import json

import pytest
from click.testing import CliRunner

from dicolor.cli import main

TRIANGLE = "3 3\n0 1\n1 2\n2 0\n"
REVERSED_TRIANGLE = "3 3\n1 0\n2 1\n0 2\n"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text(TRIANGLE)
    return str(path)


class TestCheck:
    def test_feasible(self, runner, triangle_file):
        res = runner.invoke(main, ["check", triangle_file, "--k", "2", "--order", "0,1,2"])
        assert res.exit_code == 0
        assert json.loads(res.output) == {"potential": [-1, 0, 0]}

    def test_infeasible(self, runner, triangle_file):
        res = runner.invoke(main, ["check", triangle_file, "--k", "1", "--order", "0,1,2"])
        assert res.exit_code == 1
        data = json.loads(res.output)
        assert sorted(data["witness"]["arcs"]) == [0, 1, 2]

    def test_stdin(self, runner):
        res = runner.invoke(main, ["check", "-", "--k", "2"], input=TRIANGLE)
        assert res.exit_code == 0

    def test_bad_input(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2 1\n0 0\n")
        res = runner.invoke(main, ["check", str(path), "--k", "2"])
        assert res.exit_code == 2

    def test_missing_file(self, runner):
        res = runner.invoke(main, ["check", "/nonexistent", "--k", "2"])
        assert res.exit_code == 2

    def test_text_format(self, runner, triangle_file):
        res = runner.invoke(
            main, ["check", triangle_file, "--k", "2", "--format", "text"]
        )
        assert res.exit_code == 0 and "feasible" in res.output


class TestColor:
    def test_coloring(self, runner, triangle_file):
        res = runner.invoke(main, ["color", triangle_file, "--k", "2"])
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["k"] == 2 and data["color"] == [1, 0, 0]

    def test_witness(self, runner, triangle_file):
        res = runner.invoke(main, ["color", triangle_file, "--k", "1"])
        assert res.exit_code == 1
        assert "witness" in json.loads(res.output)


class TestOrderFromColoring:
    def test_inline_json(self, runner, triangle_file):
        res = runner.invoke(
            main,
            [
                "order-from-coloring",
                triangle_file,
                "--coloring",
                '{"k":2,"color":[1,0,0]}',
            ],
        )
        assert res.exit_code == 0
        assert json.loads(res.output) == {"order": "1,2,0"}

    def test_invalid_coloring(self, runner, tmp_path):
        path = tmp_path / "digon.txt"
        path.write_text("2 2\n0 1\n1 0\n")
        res = runner.invoke(
            main,
            ["order-from-coloring", str(path), "--coloring", '{"k":2,"color":[0,0]}'],
        )
        assert res.exit_code == 2


class TestRatio:
    def test_triangle(self, runner, triangle_file):
        res = runner.invoke(main, ["ratio", triangle_file])
        assert res.exit_code == 0
        assert json.loads(res.output) == {"ratio": "2/3", "kappa": 2}

    def test_acyclic(self, runner, tmp_path):
        path = tmp_path / "path.txt"
        path.write_text("3 2\n0 1\n1 2\n")
        res = runner.invoke(main, ["ratio", str(path)])
        assert json.loads(res.output) == {"ratio": "inf", "kappa": 1}


class TestInvert:
    def test_reversed_triangle(self, runner, tmp_path):
        path = tmp_path / "rt.txt"
        path.write_text(REVERSED_TRIANGLE)
        res = runner.invoke(main, ["invert", str(path)])
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["initial_forward"] == 1
        assert len(data["steps"]) == 1
        assert data["steps"][0]["forward"] == 2
        assert data["coloring"]["k"] == 2
        assert data["final_digraph"].startswith("3 3\n")

    def test_digraph_out_and_report(self, runner, tmp_path):
        path = tmp_path / "rt.txt"
        path.write_text(REVERSED_TRIANGLE)
        out = tmp_path / "final.txt"
        report = tmp_path / "report"
        res = runner.invoke(
            main,
            [
                "invert",
                str(path),
                "--digraph-out",
                str(out),
                "--report-dir",
                str(report),
            ],
        )
        assert res.exit_code == 0
        assert out.read_text().startswith("3 3\n")
        assert (report / "steps.csv").exists()
        assert (report / "forward_progress.png").exists()


class TestExactAndCircuits:
    def test_exact(self, runner, triangle_file):
        res = runner.invoke(main, ["exact", triangle_file])
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["dichromatic_number"] == 2

    def test_circuits(self, runner, triangle_file):
        res = runner.invoke(main, ["circuits", triangle_file])
        data = json.loads(res.output)
        assert data["count"] == 1
        assert data["circuits"][0]["vertices"] == [0, 1, 2]

    def test_check_bf(self, runner, triangle_file):
        ok = runner.invoke(main, ["check-bf", triangle_file, "--k", "2"])
        assert ok.exit_code == 0 and json.loads(ok.output) == {"feasible": True}
        bad = runner.invoke(main, ["check-bf", triangle_file, "--k", "1"])
        assert bad.exit_code == 1


class TestGen:
    def test_deterministic(self, runner):
        a = runner.invoke(main, ["gen", "--n", "6", "--p", "0.5", "--seed", "3"])
        b = runner.invoke(main, ["gen", "--n", "6", "--p", "0.5", "--seed", "3"])
        assert a.exit_code == 0 and a.output == b.output

    def test_seed_required(self, runner):
        res = runner.invoke(main, ["gen", "--n", "6", "--p", "0.5"])
        assert res.exit_code == 2

    def test_pipe_into_check(self, runner):
        gen = runner.invoke(main, ["gen", "--n", "5", "--p", "0.3", "--seed", "1"])
        res = runner.invoke(main, ["check", "-", "--k", "5"], input=gen.output)
        assert res.exit_code in (0, 1)


class TestVerifyEquivalence:
    def test_small(self, runner):
        res = runner.invoke(
            main,
            ["verify-equivalence", "--n", "4", "--samples", "20", "--seed", "1"],
        )
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["samples"] == 20 and data["agreements"] == 20

    def test_trivial_n1(self, runner):
        res = runner.invoke(
            main,
            ["verify-equivalence", "--n", "1", "--samples", "10", "--seed", "0"],
        )
        assert res.exit_code == 0
        assert json.loads(res.output)["agreements"] == 10

    def test_size_guard(self, runner):
        res = runner.invoke(
            main,
            ["verify-equivalence", "--n", "9", "--samples", "1", "--seed", "0"],
        )
        assert res.exit_code == 2

    def test_report_dir(self, runner, tmp_path):
        report = tmp_path / "eq"
        res = runner.invoke(
            main,
            [
                "verify-equivalence",
                "--n",
                "3",
                "--samples",
                "6",
                "--seed",
                "2",
                "--report-dir",
                str(report),
            ],
        )
        assert res.exit_code == 0
        assert (report / "samples.csv").exists()
        assert (report / "dichromatic_hist.png").exists()


def test_byte_identical_reruns(runner, tmp_path):
    path = tmp_path / "d.txt"
    gen = runner.invoke(main, ["gen", "--n", "7", "--p", "0.4", "--seed", "9"])
    path.write_text(gen.output)
    outs = {
        runner.invoke(main, ["invert", str(path)]).output for _ in range(3)
    }
    assert len(outs) == 1
