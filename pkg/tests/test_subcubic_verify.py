import json
import os
import sys
import pytest
import yaml
from mock import patch

from subcubic_verify import (EXIT_FAILURE, EXIT_INTERNAL_ERROR, EXIT_SUCCESS,
                             EXIT_USAGE, SOURCE_REQUIRED_ERROR,
                             VERSION_OUTPUT, SubcubicVerify, main)
from tests.bounds_test_params import (MAXIMAL_P_PLUS_VERTICES,
                                      P_PLUS_VERTEX_LINES)

FIXTURE_DIRECTORY = os.path.join(os.path.dirname(__file__), 'fixtures')
GRAPH6_DIRECTORY = os.path.join(FIXTURE_DIRECTORY, 'graph6')
VALID_BOUNDS_DIRECTORY = os.path.join(FIXTURE_DIRECTORY, 'valid_bounds')

POLYTOPE_CASES = [
    (["contains", "1/3", "4/9", "1/3"], "violated: x3+x2+x1<=1"),
    (["contains", "4/9", "1/3", "2/9"], "inside"),
    (["contains", "1", "0", "0", "--polyhedron", "cube"], "inside"),
    (["shift", "0", "0", "2/3", "--lambda", "1"], "-1,0,5/3 in P: yes"),
    (["shift", "4/9", "1/3", "2/9", "--lambda", "1/9"],
     "1/3,1/3,1/3 in P: yes"),
    (["project", "1/3", "1/3", "1/3"], "1/3,1/3,1/3"),
]

USAGE_CASES = [
    ["polytope"],
    ["polytope", "contains", "0.5", "0", "0"],
    ["polytope", "shift", "0", "0", "2/3"],
    ["family", "G3"],
    ["enumerate", "4", "--log-level", "verbose"],
]


def run_cli(argv):
    with patch.object(sys, "argv", ["subcubic-verify"] + argv):
        with pytest.raises(SystemExit) as e:
            main()
    return e.value.code


class TestSubcubicVerify(object):

    def test_version(self, capsys):
        assert run_cli(["version"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.strip() == VERSION_OUTPUT

    def test_help(self, capsys):
        assert run_cli([]) == EXIT_SUCCESS

        assert "usage: subcubic-verify" in capsys.readouterr().out

    @pytest.mark.parametrize("argv", USAGE_CASES)
    def test_usage_errors(self, argv, capsys):
        assert run_cli(argv) == EXIT_USAGE

    @pytest.mark.parametrize("action", ["verify", "ge", "theorem1"])
    def test_no_source(self, action, capsys):
        assert run_cli([action]) == EXIT_USAGE

        assert capsys.readouterr().out.strip() == SOURCE_REQUIRED_ERROR

    def test_internal_error(self, capsys):
        with patch.object(SubcubicVerify, "run_enumerate",
                          side_effect=RuntimeError("Unexpected state")):
            assert run_cli(["enumerate", "4"]) == EXIT_INTERNAL_ERROR

        captured = capsys.readouterr()
        assert captured.out.splitlines()[-3:] == ["Error", "-----",
                                                  "Unexpected state"]


class TestPolytope(object):

    def test_vertices(self, capsys):
        assert run_cli(["polytope", "vertices"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.splitlines() == P_PLUS_VERTEX_LINES

    def test_vertices__maximal_json(self, capsys):
        assert run_cli(["polytope", "vertices", "--maximal",
                        "--json"]) == EXIT_SUCCESS

        lines = json.loads(capsys.readouterr().out)
        assert len(lines) == len(MAXIMAL_P_PLUS_VERTICES)
        assert "4/9,1/3,2/9" in lines

    def test_vertices__bounds_file(self, capsys):
        assert run_cli(["polytope", "vertices", "--polyhedron", "box",
                        "--bounds-file", VALID_BOUNDS_DIRECTORY]) == \
            EXIT_SUCCESS

        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert lines[0] == "0,0,0"
        assert lines[-1] == "1,1,1"

    def test_vertices__unbounded(self, capsys):
        assert run_cli(["polytope", "vertices", "--polyhedron",
                        "P"]) == EXIT_USAGE

        out = capsys.readouterr().out
        assert "Error\n-----\n" in out

    @pytest.mark.parametrize("argv, expected", POLYTOPE_CASES)
    def test_polytope(self, argv, expected, capsys):
        assert run_cli(["polytope"] + argv) == EXIT_SUCCESS

        assert capsys.readouterr().out.strip() == expected

    def test_contains__json(self, capsys):
        assert run_cli(["polytope", "contains", "1/3", "4/9", "1/3",
                        "--json"]) == EXIT_SUCCESS

        data = json.loads(capsys.readouterr().out)
        assert data == {"triple": "1/3,4/9,1/3", "inside": False,
                        "violated": ["x3+x2+x1<=1"], "margins": ["1/9"]}

    def test_project__not_in_p(self, capsys):
        assert run_cli(["polytope", "project", "1/2", "0", "0"]) == \
            EXIT_USAGE

        out = capsys.readouterr().out
        assert "\nError\n-----\n" in out

    def test_shift__negative_lambda(self, capsys):
        assert run_cli(["polytope", "shift", "0", "0", "2/3", "--lambda",
                        "-1"]) == EXIT_USAGE

    def test_halfspaces(self, capsys):
        assert run_cli(["polytope", "halfspaces", "--json"]) == EXIT_SUCCESS

        rows = json.loads(capsys.readouterr().out)
        assert [row["family"] for row in rows] == ["G2", "G6", "G1", "G5",
                                                    "G3", "G4"]
        assert rows[4]["label"] == "x3+x2+x1<=1"


class TestVerify(object):

    def test_graph6__tight_only(self, capsys):
        assert run_cli(["verify", "--graph6", "Bw", "--tight-only"]) == \
            EXIT_SUCCESS

        captured = capsys.readouterr()
        assert captured.out.splitlines() == [
            "Bw b1 nu=1 rhs=1 slack=0 (~0.000000) tight",
            "Bw b3 nu=1 rhs=1 slack=0 (~0.000000) tight",
            "Bw b4 nu=1 rhs=1 slack=0 (~0.000000) tight"]
        manifest = yaml.safe_load(captured.err)
        assert manifest["command"] == "verify"
        assert manifest["counts"]["graphs_checked"] == 1
        assert manifest["counts"]["tight"] == 3

    def test_json(self, capsys):
        assert run_cli(["verify", "--graph6", "C~", "--graph6", "Bw",
                        "--bounds", "b5", "--json"]) == EXIT_SUCCESS

        captured = capsys.readouterr()
        lines = [json.loads(line) for line in captured.out.splitlines()]
        assert [line["graph"] for line in lines] == ["C~", "Bw"]
        assert [line["slack"] for line in lines] == ["1/3", "1/9"]
        assert json.loads(captured.err)["counts"]["graphs_checked"] == 2

    def test_violation(self, capsys):
        assert run_cli(["verify", "--graph6", "C~", "--graph6", "Bw",
                        "--triple", "3/4", "0", "0", "--violations-only"]) == \
            EXIT_FAILURE

        captured = capsys.readouterr()
        assert captured.out.strip() == ("C~ custom nu=2 rhs=3 slack=-1 "
                                        "(~-1.000000) VIOLATED")
        assert yaml.safe_load(captured.err)["counts"]["violations"] == 1

    def test_violation__family(self, capsys):
        assert run_cli(["verify", "--enumerate", "6", "--triple", "1/3",
                        "4/9", "1/3", "--violations-only"]) == EXIT_FAILURE

        out = capsys.readouterr().out
        assert "slack=-2/9" in out
        assert all(line.endswith("VIOLATED") for line in out.splitlines())

    def test_file__invalid(self, capsys):
        path = os.path.join(GRAPH6_DIRECTORY, "mixed.g6")

        assert run_cli(["verify", "--file", path, "--bounds", "b1"]) == \
            EXIT_USAGE

        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == 2
        assert "Invalid graph" in captured.err
        assert "line 2" in captured.err
        assert "Vertex 0 has degree 4" in captured.err

    def test_graph6__non_ascii(self, capsys):
        assert run_cli(["verify", "--graph6", u"B\u00e9", "--bounds",
                        "b1"]) == EXIT_USAGE

        captured = capsys.readouterr()
        assert "Invalid graph B?" in captured.err
        assert "Non-ASCII character (at byte 1)" in captured.err

    def test_file__skip_invalid(self, capsys, tmpdir):
        path = os.path.join(GRAPH6_DIRECTORY, "mixed.g6")
        manifest_path = str(tmpdir.join("manifest.yml"))

        assert run_cli(["verify", "--file", path, "--skip-invalid",
                        "--manifest", manifest_path]) == EXIT_SUCCESS

        captured = capsys.readouterr()
        assert "Invalid graph" not in captured.err
        with open(manifest_path) as f:
            manifest = yaml.safe_load(f)
        assert manifest["counts"]["graphs_checked"] == 2
        assert manifest["counts"]["invalid"] == 2
        assert manifest["counts"]["violations"] == 0
        assert manifest["source"] == "file:" + path

    def test_enumerate_and_random(self, capsys):
        assert run_cli(["verify", "--enumerate", "5", "--random", "3",
                        "--order", "10", "--bounds", "b2,b5"]) == \
            EXIT_SUCCESS

        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == 2 * (20 + 3)
        manifest = yaml.safe_load(captured.err)
        assert manifest["counts"]["graphs_checked"] == 23
        assert manifest["source"] == "enumerate:5, random:3@10,seed=0"

    def test_bounds_file(self, capsys):
        assert run_cli(["verify", "--graph6", "C~", "--bounds", "half",
                        "--bounds-file", VALID_BOUNDS_DIRECTORY]) == \
            EXIT_SUCCESS

        assert capsys.readouterr().out.startswith("C~ half nu=2 rhs=1 ")

    def test_unknown_bound(self, capsys):
        assert run_cli(["verify", "--graph6", "C~", "--bounds", "b9"]) == \
            EXIT_USAGE

        assert "Bound b9 not defined" in capsys.readouterr().out


class TestFamily(object):

    def test_graph6(self, capsys):
        assert run_cli(["family", "G6", "3"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.strip() == "Bw"

    def test_stats(self, capsys):
        assert run_cli(["family", "g3", "2", "--stats"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.splitlines() == [
            "family=G3(2)", "vertices=6", "n3=2", "n2=2", "n1=2", "c=1",
            "nu=2", "certified_nu=2 (matches)"]

    def test_stats__uncertified_json(self, capsys):
        assert run_cli(["family", "G3", "21", "--emit", "stats",
                        "--json"]) == EXIT_SUCCESS

        data = json.loads(capsys.readouterr().out)
        assert data["vertices"] == 63
        assert data["certified_nu"] is None

    def test_invalid(self, capsys):
        assert run_cli(["family", "G5", "5"]) == EXIT_USAGE

        assert "t must be even and >= 4" in capsys.readouterr().out


class TestCounterexample(object):

    def test_biedl(self, capsys):
        assert run_cli(["counterexample", "1/3", "4/9", "1/3"]) == \
            EXIT_SUCCESS

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "triple=1/3,4/9,1/3 k=0"
        assert lines[1] == "violated=5 x3+x2+x1<=1"
        assert lines[2] == "family=G3(2)"
        assert lines[3] == "vertices=6"
        assert "slack=-2/9 (~-0.222222)" in lines
        assert lines[-1] == "certified=yes (matching engine)"

    def test_json(self, capsys):
        assert run_cli(["counterexample", "1/2", "0", "0", "--k", "1",
                        "--json"]) == EXIT_SUCCESS

        data = json.loads(capsys.readouterr().out)
        assert data["halfspace_index"] == 1
        assert data["spec"].startswith("G2(")
        assert data["slack"].startswith("-")

    def test_in_p(self, capsys):
        assert run_cli(["counterexample", "4/9", "1/3", "2/9", "--k",
                        "1/9"]) == EXIT_USAGE

        assert "is in P" in capsys.readouterr().out


class TestStructureCommands(object):

    def test_ge(self, capsys):
        assert run_cli(["ge", "--graph6", "C~"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.strip() == (
            "C~ A=0,B=0,C=4 hypomatchable=yes perfect=yes surplus=yes "
            "all_true=yes")

    def test_ge__json(self, capsys):
        assert run_cli(["ge", "--enumerate", "5", "--json",
                        "--jobs", "2"]) == EXIT_SUCCESS

        lines = [json.loads(line)
                 for line in capsys.readouterr().out.splitlines()]
        assert len(lines) == 20
        assert all(line["all_true"] for line in lines)

    def test_theorem1(self, capsys):
        assert run_cli(["theorem1", "--graph6", "C~", "--graph6",
                        "Dhc"]) == EXIT_SUCCESS

        out = capsys.readouterr().out
        assert "C~ nu=2 n=4" in out
        assert "cubic: rhs=4(n-1)/9=4/3 slack=2/3" in out
        assert "Dhc nu=2 n=5" in out
        assert "general: rhs=(n-1)/3=4/3 slack=2/3" in out

    def test_theorem1__not_connected(self, capsys):
        assert run_cli(["theorem1", "--graph6", "C?"]) == EXIT_USAGE

        assert "Graph is not connected" in capsys.readouterr().err

    def test_theorem1__skip_invalid(self, capsys):
        assert run_cli(["theorem1", "--graph6", "C?", "--graph6", "Bw",
                        "--skip-invalid", "--json"]) == EXIT_SUCCESS

        captured = capsys.readouterr()
        lines = [json.loads(line) for line in captured.out.splitlines()]
        assert [line["graph"] for line in lines] == ["Bw"]
        assert lines[0]["cubic_report"] is None
        assert json.loads(captured.err)["counts"]["invalid"] == 1


class TestEnumerate(object):

    def test_count(self, capsys):
        assert run_cli(["enumerate", "5", "--count"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.splitlines() == [
            "n=1: 1", "n=2: 1", "n=3: 2", "n=4: 6", "n=5: 10"]

    def test_graph6(self, capsys):
        assert run_cli(["enumerate", "3"]) == EXIT_SUCCESS

        assert capsys.readouterr().out.splitlines() == ["@", "A_", "BW",
                                                        "Bw"]

    def test_limit(self, capsys):
        assert run_cli(["enumerate", "13"]) == EXIT_USAGE

        assert "limited to 12 vertices" in capsys.readouterr().out
