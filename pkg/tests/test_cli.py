from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from regdecomp.cli import main


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def cli(monkeypatch, capsys):
    def call(*argv, stdin=None):
        return run(list(argv), stdin, monkeypatch, capsys)
    return call


def test_enumerate_a3(cli):
    code, out = cli("enumerate", "--family", "A", "--rank", "3", "--min-blocks", "3",
                    "--modulo", "renumber,sign")
    assert code == 0
    data = json.loads(out)
    assert data["class_count"] == 7 and len(data["classes"]) == 7


def test_enumerate_b3_is_empty(cli):
    code, out = cli("enumerate", "--family", "B", "--rank", "3", "--min-blocks", "3",
                    "--modulo", "renumber", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith("B,3,3,renumber,0,")


def test_modulo_is_required(cli):
    code, _ = cli("enumerate", "--family", "B", "--rank", "3", "--min-blocks", "3")
    assert code == 2


def test_usage_errors(cli):
    assert cli("enumerate", "--family", "B", "--rank", "1", "--min-blocks", "3",
               "--modulo", "none")[0] == 2
    assert cli("enumerate", "--family", "B", "--rank", "3", "--min-blocks", "3",
               "--modulo", "weyl")[0] == 2
    assert cli("enumerate", "--family", "A", "--rank", "3", "--min-blocks", "3",
               "--modulo", "shuffle")[0] == 2
    assert cli("frobnicate")[0] == 2
    assert cli("construct", "--family-kk", "--n", "2", "--lambda", "1,1", "--x", "0,1")[0] == 2
    assert cli("verify-partition", "/nonexistent.json")[0] == 2
    assert cli("verify-partition", "-", stdin="{not json")[0] == 2


def test_budget_exit_code(cli):
    code, out = cli("enumerate", "--family", "F", "--rank", "4", "--min-blocks", "3",
                    "--modulo", "renumber", "--node-budget", "100")
    assert code == 3
    assert json.loads(out)["error"] == "budget_exceeded"


def test_construct_verify_pipeline(cli):
    for flags in (["--family-k1k", "--n", "2", "--lambda", "1,1"],
                  ["--family-k1k", "--n", "4", "--lambda", "2,1,1"],
                  ["--family-k1k-beta", "--n", "3", "--lambda", "2,1"],
                  ["--family-kk", "--n", "3", "--lambda", "2,1"],
                  ["--family-kk", "--n", "3", "--lambda", "2,1", "--x", "1/2,-1,0"],
                  ["--family-kk", "--n", "4", "--lambda", "2,2", "--x", "0,0,1,0"]):
        code, out = cli("construct", *flags)
        assert code == 0
        code, out = cli("verify-decomposition", "-", stdin=out)
        assert code == 0
        data = json.loads(out)
        assert data["valid"] is True


def test_k1k_type_through_cli(cli):
    _, out = cli("construct", "--family-k1k", "--n", "2", "--lambda", "1,1")
    _, out = cli("verify-decomposition", "-", stdin=out)
    data = json.loads(out)
    assert data["type"] == [3, 2] and data["witness"] is None


def test_verify_decomposition_false_emits_witness(cli):
    _, out = cli("construct", "--finest", "row", "--n", "2")
    data = json.loads(out)
    data["cartan"] = [[["1", "0"], ["0", "1"]], [], []]
    code, out = cli("verify-decomposition", "-", stdin=json.dumps(data))
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False and report["witness"]["pair"] == [2, 3]
    assert report["witness"]["escapes_span"] is True


def test_partition_graph_reconstruct_pipeline(cli):
    _, part = cli("construct", "--int-partition", "2,1,1", "--n", "3", "--orientation", "column")
    code, out = cli("verify-partition", "-", stdin=part)
    assert code == 0 and json.loads(out)["regular"]
    _, graph = cli("graph", "-", stdin=part)
    assert json.loads(graph)["properties"]["A4"] is True
    code, back = cli("reconstruct", "-", stdin=graph)
    assert code == 0 and json.loads(back) == json.loads(part)


def test_verify_partition_false(cli):
    bad = {"family": "A", "rank": 2, "blocks": [[[1, 0]], [[0, 1]],
                                                [[1, 1], [-1, 0], [0, -1], [-1, -1]]]}
    code, out = cli("verify-partition", "-", stdin=json.dumps(bad))
    assert code == 1
    assert json.loads(out)["witness"]["sum"] == [1, 1]


def test_reconstruct_rejects_bad_graph(cli):
    g = {"m": 4, "loops": [], "edges": [[1, 2, 1], [3, 4, 2]]}
    code, out = cli("reconstruct", "-", stdin=json.dumps(g))
    assert code == 1 and json.loads(out)["reconstructed"] is False


def test_extend_and_canonicalize(cli):
    _, part = cli("construct", "--int-partition", "2,2,1", "--n", "4")
    code, dec = cli("construct", "--extend", "-", stdin=part)
    assert code == 0
    assert cli("verify-decomposition", "-", stdin=dec)[0] == 0
    code, a = cli("canonicalize", "-", "--modulo", "renumber,sign,weyl", stdin=part)
    _, col = cli("construct", "--int-partition", "2,2,1", "--n", "4", "--orientation", "column")
    _, b = cli("canonicalize", "-", "--modulo", "renumber,sign,weyl", stdin=col)
    assert code == 0 and a == b


def test_two_block_extension_non_a(cli):
    _, out = cli("enumerate", "--family", "B", "--rank", "2", "--min-blocks", "2",
                 "--max-blocks", "2", "--modulo", "renumber")
    blocks = json.loads(out)["classes"][0]
    part = json.dumps({"family": "B", "rank": 2, "blocks": blocks})
    code, dec = cli("construct", "--extend", "-", stdin=part)
    assert code == 0
    code, out = cli("verify-decomposition", "-", stdin=dec)
    assert code == 0 and json.loads(out)["route"] == "roots"


def test_build_and_count(cli):
    code, out = cli("build", "--family", "G", "--rank", "2")
    data = json.loads(out)
    assert code == 0 and data["num_roots"] == 12 and data["highest_root"] == [3, 2]
    code, out = cli("count", "--n", "4")
    assert json.loads(out) == {"family": "A", "rank": 4, "modulo_renumber_sign": 36,
                               "modulo_renumber_sign_weyl": 4}


def test_output_is_deterministic(cli):
    argv = ("enumerate", "--family", "A", "--rank", "3", "--min-blocks", "3",
            "--modulo", "renumber")
    first = json.loads(cli(*argv)[1])
    second = json.loads(cli(*argv)[1])
    first.pop("wall_time"), second.pop("wall_time")
    assert first == second


def test_module_entry_point_pipe():
    make = subprocess.run([sys.executable, "-m", "regdecomp", "construct", "--family-k1k",
                           "--n", "3", "--lambda", "2,1"], capture_output=True, text=True, check=True)
    check = subprocess.run([sys.executable, "-m", "regdecomp", "verify-decomposition", "-"],
                           input=make.stdout, capture_output=True, text=True)
    assert check.returncode == 0
    assert json.loads(check.stdout)["type"] == [3, 2]
