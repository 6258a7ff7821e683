import json

import pytest

from sdcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_example(capsys, tmp_path):
    out = tmp_path / "ex.gen"
    code, stdout, _ = run(
        capsys,
        "construct", "--ring", "f2", "--n", "7", "--method", "czero",
        "--ra", "1000000", "--rb", "0000000", "--rc", "1110100",
        "--out", str(out), "--json",
    )
    assert code == 0
    payload = json.loads(stdout)
    assert (payload["n"], payload["k"], payload["self_dual"]) == (28, 14, True)
    assert out.read_text().startswith("ring f2 14 28")


def test_construct_missing_rc_fails_usage(capsys):
    code, _, err = run(
        capsys,
        "construct", "--ring", "f2u", "--n", "8", "--method", "general",
        "--ra", "0,u,0,0,1,u,3,0", "--rb", "u,u,u,0,0,1,1,3",
    )
    assert code == 1
    assert "rc" in err


def test_construct_precondition_exit_2(capsys):
    code, _, err = run(
        capsys,
        "construct", "--ring", "f2", "--n", "3", "--method", "four",
        "--ra", "100", "--rb", "100",
    )
    assert code == 2


def test_pipeline_mindist_wenum(capsys, tmp_path):
    gen = tmp_path / "c40.gen"
    code, _, _ = run(
        capsys,
        "construct", "--ring", "f2", "--n", "10", "--method", "four",
        "--ra", "0100001110", "--rb", "0100110011", "--out", str(gen),
    )
    assert code == 0
    code, stdout, _ = run(capsys, "mindist", "--in", str(gen), "--json")
    assert code == 0 and json.loads(stdout)["d"] == 8
    code, stdout, _ = run(capsys, "wenum", "--in", str(gen), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert (payload["family"], payload["beta"]) == ("W40", 0)


def test_verify(capsys, tmp_path):
    gen = tmp_path / "c.gen"
    run(
        capsys,
        "construct", "--ring", "f2", "--n", "7", "--method", "czero",
        "--ra", "1000000", "--rb", "0000000", "--rc", "1110100", "--out", str(gen),
    )
    code, stdout, _ = run(capsys, "verify", "--in", str(gen), "--json")
    assert code == 0 and json.loads(stdout)["self_dual"] is True


def test_wenum_no_family_exit_3(capsys, tmp_path):
    gen = tmp_path / "t.gen"
    gen.write_text("4 2\n1100\n0011\n")
    code, stdout, _ = run(capsys, "wenum", "--in", str(gen), "--json")
    assert code == 3
    payload = json.loads(stdout)
    assert payload["family"] is None
    assert payload["weight_distribution"] == [[0, 1], [2, 2], [4, 1]]


def test_mindist_trivial(capsys, tmp_path):
    gen = tmp_path / "t.gen"
    gen.write_text("4 2\n1100\n0011\n")
    code, stdout, _ = run(capsys, "mindist", "--in", str(gen))
    assert code == 0 and "[4,2,2]" in stdout


def test_extend_cli(capsys, tmp_path):
    gen = tmp_path / "base.gen"
    ext = tmp_path / "ext.gen"
    run(
        capsys,
        "construct", "--ring", "f2", "--n", "2", "--method", "four",
        "--ra", "10", "--rb", "00", "--out", str(gen),
    )
    code, stdout, _ = run(
        capsys,
        "extend", "--in", str(gen), "--c", "1", "--x", "10000000", "--out", str(ext), "--json",
    )
    assert code == 0
    payload = json.loads(stdout)
    assert (payload["n"], payload["k"], payload["self_dual"]) == (10, 5, True)


def test_neighbor_cli_rejects_odd_weight_seed(capsys, tmp_path):
    gen = tmp_path / "c28.gen"
    run(
        capsys,
        "construct", "--ring", "f2", "--n", "7", "--method", "czero",
        "--ra", "1000000", "--rb", "0000000", "--rc", "1110100", "--out", str(gen),
    )
    code, _, err = run(capsys, "neighbor", "--in", str(gen), "--suffix", "10000000000000")
    assert code == 1 and "even" in err


def test_neighbor_cli_valid_seed(capsys, tmp_path):
    gen = tmp_path / "c28.gen"
    run(
        capsys,
        "construct", "--ring", "f2", "--n", "7", "--method", "czero",
        "--ra", "1000000", "--rb", "0000000", "--rc", "1110100", "--out", str(gen),
    )
    for suffix in ("11110000000110", "11011000001010", "10101010101011"):
        code, stdout, _ = run(capsys, "neighbor", "--in", str(gen), "--suffix", suffix, "--json")
        if code == 0:
            assert json.loads(stdout)["self_dual"] is True
            return
    pytest.fail("no suffix produced a neighbor")


def test_search_cli_deterministic(capsys, tmp_path):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text(
        'ring = "f2"\nn = 7\nmethod = "czero"\nmode = "exhaustive"\n'
        'r_a = "1000000"\nr_b = "0000000"\nmin_d = 6\n'
    )
    out1 = tmp_path / "r1.jsonl"
    out2 = tmp_path / "r2.jsonl"
    code, _, err = run(capsys, "search", "--config", str(cfg), "--out", str(out1))
    assert code == 0 and "trials=128" in err
    code, _, _ = run(capsys, "search", "--config", str(cfg), "--out", str(out2), "--threads", "2")
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    first = json.loads(out1.read_text().splitlines()[0])
    assert first["schema"] == 1


def test_construct_force_reports_failed_gram(capsys):
    code, stdout, _ = run(
        capsys,
        "construct", "--ring", "f2", "--n", "3", "--method", "four",
        "--ra", "100", "--rb", "100", "--force", "--json",
    )
    assert code == 0
    assert json.loads(stdout)["ring_self_dual"] is False


def test_construct_rc_convention_back(capsys, tmp_path):
    gen = tmp_path / "d40_1.gen"
    code, _, _ = run(
        capsys,
        "construct", "--ring", "f2", "--n", "10", "--method", "symmetric",
        "--ra", "110111", "--rb", "0010001100", "--rc", "1110100101",
        "--rc-convention", "back", "--out", str(gen),
    )
    assert code == 0
    code, stdout, _ = run(capsys, "wenum", "--in", str(gen), "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert (payload["family"], payload["beta"]) == ("W40", 0)


def test_registry_cli(capsys):
    code, stdout, _ = run(capsys, "registry", "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert any(e["beta"] == 157 and e["gamma"] == 6 for e in payload["entries"])
    code, stdout, _ = run(capsys, "registry")
    assert code == 0 and "unresolved-range" in stdout
