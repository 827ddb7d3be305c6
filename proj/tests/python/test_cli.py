# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Golden and exit-code tests for the positroid command line tool."""

import json
import math
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("POSITROID_CLI", "positroid")
DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, check=False)


def ok(*args, stdin=None):
    result = run(*args, stdin=stdin)
    assert result.returncode == 0, result.stderr
    return result.stdout


def data(name):
    return str(DATA / name)


def decorated_count(n):
    total = 0
    for f in range(n + 1):
        m = n - f
        derangements = round(math.factorial(m) * sum((-1) ** i / math.factorial(i) for i in range(m + 1)))
        total += math.comb(n, f) * derangements * 2**f
    return total


def test_essentials_golden():
    out = json.loads(ok("essentials", data("diagram_perm.json")))
    assert out == {
        "n": 8,
        "k": 3,
        "sets": [
            {"rank": 2, "start": 1, "len": 4},
            {"rank": 3, "start": 1, "len": 8},
            {"rank": 2, "start": 4, "len": 4},
            {"rank": 1, "start": 5, "len": 2},
        ],
    }
    text = ok("essentials", data("diagram_perm.json"), "--format", "text", "--core")
    assert text.splitlines()[0] == "{(2,[1,4]), (3,[1,8]), (2,[4,7]), (1,[5,6])}"
    assert text.splitlines()[1].startswith("core {")


def test_essentials_reads_stdin():
    stdin = (DATA / "diagram_perm.json").read_text()
    assert ok("essentials", stdin=stdin) == ok("essentials", data("diagram_perm.json"))
    assert ok("essentials", "-", stdin=stdin) == ok("essentials", data("diagram_perm.json"))


def test_diagram_render():
    render = ok("diagram", data("diagram_perm.json"), "--format", "text").splitlines()
    assert render[0] == "  1 2 3 4 5 6 7 8 9"
    assert render[3] == "3 # # # # # o . . ."
    assert json.loads(ok("diagram", data("diagram_perm.json")))["corners"] == [[1, 4], [4, 4], [5, 2]]


def test_rank_and_codim():
    assert ok("rank", data("diagram_perm.json"), "--interval", "1,4", "--both", "--format", "text") == "2\n"
    assert ok("rank", data("diagram_family.json"), "--interval", "2,4", "--format", "text") == "3\n"
    assert ok("codim", data("diagram_perm.json"), "--both", "--format", "text") == "5 5\n"
    assert json.loads(ok("codim", data("diagram_family.json"))) == {"codim": 5}
    assert run("rank", data("diagram_perm.json"), "--interval", "1;4").returncode == 1


def test_retrieve():
    assert json.loads(ok("retrieve", data("retrieve_example.json"))) == {"n": 5, "window": [5, 6, 4, 7, 8]}
    traced = json.loads(ok("retrieve", data("retrieve_example.json"), "--trace"))
    placed = [e for e in traced["trace"] if e["event"] in ("DotPlaced", "RowFilled")]
    assert sorted((e["row"], e["col"]) for e in placed) == [(1, 5), (2, 5), (3, 2), (4, 4), (5, 4)]
    bad = run("retrieve", data("retrieve_bad.json"))
    assert bad.returncode == 2
    assert json.loads(bad.stdout)["error"] == "MissingFullLabel"
    assert "MissingFullLabel" in bad.stderr


def test_validate():
    assert ok("validate", data("remark_family.json"), "--format", "text") == "valid\n"
    bad = run("validate", data("invalid_family.json"))
    assert bad.returncode == 3
    assert json.loads(bad.stdout)["violations"][0]["rule"] == "E1"


def test_polytope_and_bases():
    hrep = ok("polytope", data("uniform_2_4.json"), "--h-rep")
    assert hrep.splitlines()[0] == "# positroid polytope n=4 k=2"
    assert hrep.splitlines()[-1] == "1 1 1 1 = 2"
    system = json.loads(ok("polytope", data("remark_family.json")))
    assert system["inequalities"] == [
        {"start": 1, "len": 3, "rhs": 2},
        {"start": 1, "len": 5, "rhs": 3},
        {"start": 3, "len": 3, "rhs": 2},
    ]
    assert json.loads(ok("bases", data("uniform_2_4.json")))["bases"] == [
        [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]


def test_from_matrix():
    assert json.loads(ok("from-matrix", data("fixture_matrix.json"), "--check-nonneg")) == {
        "n": 8, "window": [3, 4, 8, 7, 6, 9, 10, 13]}
    assert run("from-matrix", data("negative_matrix.json"), "--check-nonneg").returncode == 3
    assert json.loads(ok("from-matrix", data("negative_matrix.json")))["window"] == [4, 3, 6, 5]


def test_rank2():
    assert json.loads(ok("rank2", data("rank2_positroid.json")))["positroid"] is True
    assert ok("rank2", data("rank2_not_positroid.json"), "--format", "text") == "not a positroid\n"


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_count(n):
    lines = ok("enumerate", "--n", str(n)).splitlines()
    assert len(lines) == decorated_count(n)


def test_enumerate_jobs_preserve_order():
    serial = ok("enumerate", "--n", "6")
    assert ok("enumerate", "--n", "6", "--jobs", "3") == serial
    assert ok("enumerate", "--n", "6", "--jobs", "16") == serial
    by_rank = sum(len(ok("enumerate", "--n", "5", "--k", str(k)).splitlines()) for k in range(6))
    assert by_rank == decorated_count(5)


def test_deterministic_output():
    for args in (("essentials", data("bonin_perm.json"), "--core", "--excess"), ("bases", data("diagram_perm.json"))):
        assert ok(*args) == ok(*args)


def test_malformed_input():
    bad = run("essentials", data("malformed_perm.json"))
    assert bad.returncode == 1
    assert bad.stderr.startswith("error:")
    assert run("essentials", stdin="{").returncode == 1
    assert run("essentials", data("does_not_exist.json")).returncode == 1
    assert run("frobnicate").returncode == 1
