import json

import pytest

from invpaths.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_example(capsys):
    code, out, _ = run_cli(capsys, "count", "--tau", "011", "--n", "3", "--t", "0")
    assert code == 0
    assert json.loads(out) == {"value": 3}


def test_count_plain_102(capsys):
    code, out, _ = run_cli(capsys, "count", "--n", "9", "--t", "0")
    assert code == 0
    assert json.loads(out)["value"] > 0


def test_count_with_oracle(capsys):
    code, out, _ = run_cli(
        capsys, "count", "--tau", "012", "--n", "8", "--t", "2", "--oracle"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["value"] == payload["oracle_value"]
    assert payload["query"] == {"tau": "012", "n": 8, "t": 2}


def test_count_domain_error_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "--tau", "011", "--n", "3", "--t", "2")
    assert code == 2
    assert "error" in err


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--tau", "012", "--n-max", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("n,t0")
    assert lines[1].split(",")[0] == "2"
    # row sums plus the all-zero row reproduce the Fibonacci totals
    from invpaths.formulas import fib

    for line in lines[1:]:
        cells = line.split(",")
        n = int(cells[0])
        total = 1 + sum(int(v) for v in cells[1:] if v)
        assert total == fib(2 * n - 1)


def test_table_102(capsys):
    code, out, _ = run_cli(capsys, "table", "--n-max", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][0][1] == "1"


def test_enumerate_is(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--kind", "is", "--n", "3", "--avoid", "102,011")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 5 and [0, 1, 1] not in rows


def test_enumerate_uvd_with_coords(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--kind", "uvd", "--n", "1", "--coords")
    assert code == 0
    assert json.loads(out) == [[0, 0], [1, 1], [2, 0]]


def test_map_phi_base(capsys):
    code, out, _ = run_cli(capsys, "map", "phi", "--input", '{"steps":[]}')
    assert code == 0
    assert json.loads(out) == [0]


def test_map_round_trip(capsys):
    path_json = '{"steps":[{"a":0,"parts":[1]},{"a":1,"parts":[0]}]}'
    code, seq, _ = run_cli(capsys, "map", "phi", "--input", path_json)
    assert code == 0
    code, back, _ = run_cli(capsys, "map", "phi-inv", "--input", seq.strip())
    assert code == 0
    assert json.loads(back) == json.loads(path_json)


def test_map_round_trip_exhaustive(capsys):
    # phi then phi-inv through the CLI is the identity on every path of
    # semilength at most 5
    from invpaths.fpaths import enumerate_lf

    for n in range(6):
        for q in enumerate_lf(n):
            code, seq, _ = run_cli(capsys, "map", "phi", "--input", q.to_json())
            assert code == 0
            code, back, _ = run_cli(capsys, "map", "phi-inv", "--input", seq.strip())
            assert code == 0
            assert json.loads(back) == q.to_dict()


def test_map_psi_and_m(capsys):
    code, out, _ = run_cli(capsys, "map", "psi", "--input", '{"steps":[]}')
    assert code == 0 and out.strip() == "ud"
    code, out, _ = run_cli(capsys, "map", "m", "--input", "NH")
    assert code == 0 and out.strip() == "ud"
    code, out, _ = run_cli(capsys, "map", "sp-to-is", "--input", "NH")
    assert code == 0 and json.loads(out) == [0]


def test_map_tiling(capsys):
    code, out, _ = run_cli(capsys, "map", "tiling", "--input", "[0,0,2]")
    assert code == 0 and out.strip() == "SDS"
    code, out, _ = run_cli(capsys, "map", "tiling-inv", "--input", "SDS", "--n", "3")
    assert code == 0 and json.loads(out) == [0, 0, 2]


def test_map_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("NH\n"))
    code, out, _ = run_cli(capsys, "map", "m")
    assert code == 0 and out.strip() == "ud"


def test_series_verify(capsys):
    code, out, _ = run_cli(capsys, "series", "verify", "--id", "D_CUBIC", "--order", "12")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True and payload["identity"] == "D_CUBIC"


def test_series_coeffs_bfile(capsys):
    code, out, _ = run_cli(capsys, "series", "coeffs", "--id", "A", "--order", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "0 1" and lines[1] == "1 1" and lines[4] == "4 22"
    code, out, _ = run_cli(
        capsys, "series", "coeffs", "--id", "C", "--order", "3", "--offset", "1"
    )
    assert out.strip().splitlines() == ["1 1", "2 1", "3 2", "4 5"]


def test_verify_single_family(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, err = run_cli(
        capsys,
        "verify",
        "--family",
        "dyck-lemma",
        "--n-max",
        "6",
        "--json",
        str(out_file),
    )
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["passed"] is True
    assert "[PASS] dyck-lemma" in err


def test_verify_identity_family(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--family", "identity", "--id", "CATALAN_SQRT", "--n-max", "10"
    )
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_guard_failure_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "--family", "bijection-psi", "--n-max", "9")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3"])  # missing --t
    assert exc.value.code == 2
