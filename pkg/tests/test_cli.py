"""End-to-end CLI behavior: exit codes, payloads, and streams."""

import json

import pytest

from rookpaths.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_n5(capsys):
    code, out, err = run(capsys, "generate", "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert len(data["blocks"]) == 5
    assert all(data["report"][k] is True for k in data["report"])
    assert "verified" in err


def test_generate_rejects_nine_without_force(capsys):
    code, out, err = run(capsys, "generate", "--n", "9")
    assert code == 1
    assert out == ""
    assert "--force" in err


def test_generate_nine_forced_fails_path_check(capsys):
    code, out, err = run(capsys, "generate", "--n", "9", "--force")
    assert code == 2
    assert "path" in err
    assert "(1,0)" in err


def test_generate_rejects_even(capsys):
    code, _, err = run(capsys, "generate", "--n", "4")
    assert code == 1
    assert "odd prime" in err


def test_generate_deterministic(capsys):
    code1, out1, _ = run(capsys, "generate", "--n", "7")
    code2, out2, _ = run(capsys, "generate", "--n", "7")
    assert code1 == code2 == 0
    assert out1 == out2


def test_generate_edges_format(capsys):
    code, out, _ = run(capsys, "generate", "--n", "3", "--format", "edges")
    assert code == 0
    assert out.count("# block") == 3
    assert out.count("-") == 18


def test_generate_dot_format(capsys):
    code, out, _ = run(capsys, "generate", "--n", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("graph decomposition {")
    assert len([ln for ln in out.splitlines() if " -- " in ln]) == 18


def test_verify_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "--n", "7")
    path = tmp_path / "n7.json"
    path.write_text(out, encoding="utf-8")
    code, out, err = run(capsys, "verify", "--input", str(path))
    assert code == 0
    report = json.loads(out)
    assert all(report[k] is True for k in report)


def test_verify_moved_edge(tmp_path, capsys):
    _, out, _ = run(capsys, "generate", "--n", "3")
    data = json.loads(out)
    data["blocks"][0]["edges"][0] = data["blocks"][1]["edges"][0]
    path = tmp_path / "mut.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, out, err = run(capsys, "verify", "--input", str(path))
    assert code == 2
    report = json.loads(out)
    assert report["is_partition"] is False
    assert report["witnesses"]["is_partition"]["duplicated"]
    assert report["witnesses"]["is_partition"]["missing"]
    assert "is_partition" in err


def test_verify_deleted_edge(tmp_path, capsys):
    _, out, _ = run(capsys, "generate", "--n", "3")
    data = json.loads(out)
    del data["blocks"][0]["edges"][0]
    path = tmp_path / "short.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 2
    report = json.loads(out)
    assert report["is_partition"] is False
    assert report["witnesses"]["is_partition"]["missing"] == [[[0, 0], [0, 1]]]


def test_verify_truncated_json(tmp_path, capsys):
    path = tmp_path / "trunc.json"
    path.write_text('{"graph":{"kind":"grid",', encoding="utf-8")
    code, _, err = run(capsys, "verify", "--input", str(path))
    assert code == 1
    assert "invalid JSON" in err


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "--input", "/no/such/file.json")
    assert code == 1
    assert "cannot read" in err


def test_verify_non_automorphism_generator(tmp_path, capsys):
    payload = {
        "graph": {"kind": "grid", "n": 2, "m": 2},
        "group": {
            "kind": "explicit",
            "order": 2,
            "generators": [
                {
                    "kind": "explicit",
                    "map": [
                        [[0, 0], [0, 0]],
                        [[0, 1], [0, 1]],
                        [[1, 0], [1, 1]],
                        [[1, 1], [1, 0]],
                    ],
                }
            ],
        },
        "base": {"edges": [[[0, 0], [0, 1]]]},
        "blocks": [{"edges": [[[0, 0], [0, 1]]]}],
        "report": {
            "is_partition": False,
            "blocks_isomorphic_to_base": True,
            "group_invariant": False,
            "group_transitive": False,
            "stabilizer_trivial": True,
            "semiregular": True,
        },
    }
    path = tmp_path / "bad_gen.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, _, err = run(capsys, "verify", "--input", str(path))
    assert code == 2
    assert "not an automorphism" in err


def test_orbits_3x3(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "3", "--m", "3")
    assert code == 0
    assert "orbits: 6" in out
    assert "sizes: 3" in out
    assert "census:" in out and "OK" in out


def test_orbits_3x4(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "3", "--m", "4")
    assert code == 0
    assert "orbits: 10" in out


def test_orbits_2x3_not_semiregular(capsys):
    code, out, err = run(capsys, "orbits", "--n", "2", "--m", "3")
    assert code == 2
    assert "not semiregular" in err
    assert "fixes" in err


def test_orbits_even_square_row_shift(capsys):
    code, _, err = run(capsys, "orbits", "--n", "4")
    assert code == 2
    assert "not semiregular" in err


def test_orbits_diagonal_4(capsys):
    code, out, err = run(capsys, "orbits", "--n", "4", "--group", "diagonal_shift")
    assert code == 0
    assert "orbits: 12" in out
    assert "census" not in out
    assert err == ""


def test_orbits_diagonal_requires_square(capsys):
    code, _, err = run(capsys, "orbits", "--n", "3", "--m", "4", "--group", "diagonal_shift")
    assert code == 1
    assert "square" in err


def test_orbits_edges_flag(capsys):
    code, out, _ = run(capsys, "orbits", "--n", "3", "--m", "3", "--edges")
    assert code == 0
    assert "  (0,0)-(0,1)" in out


def test_orbits_bad_dimensions(capsys):
    code, _, err = run(capsys, "orbits", "--n", "1", "--m", "3")
    assert code == 1


def test_examples_k9(capsys):
    code, out, err = run(capsys, "examples", "k9")
    assert code == 0
    data = json.loads(out)
    assert data["graph"] == {"kind": "complete", "n": 9}
    assert len(data["blocks"]) == 3
    assert "blocks=3 edges=36 verified=True" in err


def test_examples_fig3(capsys):
    code, out, err = run(capsys, "examples", "fig3")
    assert code == 0
    data = json.loads(out)
    assert data["base"]["start"] == [0, 0]
    assert data["base"]["steps"] == [[0, 1], [1, 0], [0, 1], [1, 0], [0, 1], [2, 0]]
    assert "blocks=3 edges=18 verified=True" in err


def test_examples_diag4(capsys):
    code, out, err = run(capsys, "examples", "diag4")
    assert code == 0
    data = json.loads(out)
    assert data["group"]["kind"] == "diagonal_shift"
    assert len(data["blocks"]) == 4
    assert "blocks=4 edges=48 verified=True" in err


def test_examples_unknown_name(capsys):
    code, _, _ = run(capsys, "examples", "petersen")
    assert code == 1


def test_examples_round_trip_through_verify(tmp_path, capsys):
    for name in ("k9", "diag4"):
        _, out, _ = run(capsys, "examples", name)
        path = tmp_path / f"{name}.json"
        path.write_text(out, encoding="utf-8")
        code, out, _ = run(capsys, "verify", "--input", str(path))
        assert code == 0, name
        report = json.loads(out)
        assert all(report[k] is True for k in report)


def test_split_default(capsys):
    code, out, err = run(capsys, "split", "--n", "5")
    assert code == 0
    data = json.loads(out)
    assert data["segment_count"] == 25
    assert data["edges_per_segment"] == 4
    assert data["is_partition"] is True
    assert data["segments_are_paths"] is True
    assert len(data["segments"]) == 25
    assert "25 segments" in err


def test_split_n3_edges_format(capsys):
    code, out, _ = run(capsys, "split", "--n", "3", "--format", "edges")
    assert code == 0
    assert out.count("# block") == 9


def test_split_indivisible(capsys):
    code, _, err = run(capsys, "split", "--n", "5", "--b", "3")
    assert code == 1
    assert "divide" in err


def test_split_rejects_nine(capsys):
    code, _, err = run(capsys, "split", "--n", "9")
    assert code == 1
    assert "--force" in err
    code, _, err = run(capsys, "split", "--n", "9", "--force")
    assert code == 2


def test_usage_errors(capsys):
    assert main([]) == 1
    capsys.readouterr()
    assert main(["generate"]) == 1
    capsys.readouterr()
    assert main(["generate", "--n", "x"]) == 1
    capsys.readouterr()
    assert main(["generate", "--bogus"]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
    assert main(["generate", "--help"]) == 0
    capsys.readouterr()
