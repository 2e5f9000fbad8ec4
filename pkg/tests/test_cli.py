import json

import pytest

from satolab.cli import SCHEMAS, build_parser, dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    return code, capsys.readouterr().out


def test_verify_es(capsys):
    code, out = run(capsys, "verify-es", "--kmax", "12", "--qmax", "13")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "k,q,es_total,mf_total,match"
    assert all(line.endswith(",true") for line in lines[1:])
    assert len(lines) == 1 + 5 * 4


def test_count_full_interval(capsys):
    code, out = run(capsys, "count", "--p", "5", "--r", "1", "--interval", "0", "3.14159265358979")
    assert code == 0
    assert out.splitlines()[1].split(",")[-1] == "20"


def test_classnum(capsys):
    assert run(capsys, "classnum", "--n", "2") == (0, "N,twelve_H,form_count\n2,0,0\n")
    assert run(capsys, "classnum", "--n", "23")[1].splitlines()[1] == "23,36,3"


def test_trace_mf_and_es(capsys):
    assert run(capsys, "trace-mf", "--k", "12", "--n", "2")[1].splitlines()[1] == "12,2,-24"
    code, out = run(capsys, "trace-es", "--k", "12", "--q", "5")
    assert out.splitlines()[1].split(",")[-1] == "4830"


def test_verify_deuring_exit_codes(capsys):
    code, out = run(capsys, "verify-deuring", "--p", "7")
    assert code == 0 and "FAIL" not in out
    code, out = run(capsys, "verify-deuring", "--p", "7", "--convention", "literal")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["count", "--p", "5", "--q", "7"],
    ["count", "--p", "3"],
    ["count", "--q", "12"],
    ["count", "--q", "25", "--r", "1"],
    ["nonsense"],
    ["classnum"],
    ["classnum", "--n", "-1"],
    ["bs-coeffs", "--alpha", "0.5", "--beta", "0.2", "--M", "3"],
    ["count", "--p", "5", "--interval", "2", "1"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        dispatch(argv)
    assert exc.value.code == 2


def test_bs_coeffs(capsys):
    code, out = run(capsys, "bs-coeffs", "--alpha", "0.1", "--beta", "0.35", "--M", "9")
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 19
    m0 = [l for l in lines[1:] if l.startswith("0,")][0]
    assert float(m0.split(",")[1]) == pytest.approx(0.35, abs=1e-12)


def test_json_mirror(capsys):
    _, csv_out = run(capsys, "discrepancy", "--q", "25", "49", "--cells", "4")
    _, json_out = run(capsys, "discrepancy", "--q", "25", "49", "--cells", "4", "--format", "json")
    header = csv_out.splitlines()[0].split(",")
    data = json.loads(json_out)
    assert header == list(SCHEMAS["discrepancy"]) == list(data[0])
    assert len(data) == 8
    assert data[0]["normalized"] == pytest.approx(float(csv_out.splitlines()[1].split(",")[-1]))


def test_empty_output_renders_header():
    from satolab.emit import render

    assert render([], ("a", "b")) == "a,b\n"
    assert render([], ("a", "b"), "json") == "[]\n"


def test_twelve_significant_digits():
    from satolab.emit import format_value

    assert format_value(3.14159265358979) == "3.14159265359"
    assert format_value(True) == "true"


def test_byte_identical_files_and_threads(tmp_path):
    paths = []
    for i, threads in enumerate(["1", "3", "1"]):
        path = tmp_path / f"h{i}.csv"
        assert dispatch(["histogram", "--p", "31", "--mode", "brute", "--threads", threads,
                         "--output", str(path)]) == 0
        paths.append(path.read_bytes())
    assert paths[0] == paths[1] == paths[2]
    path = tmp_path / "o.csv"
    dispatch(["histogram", "--p", "31", "--mode", "orbit", "--threads", "2", "--output", str(path)])
    assert path.read_bytes() == paths[0]


def test_unwritable_output(tmp_path):
    assert dispatch(["classnum", "--n", "3", "--output", str(tmp_path / "missing" / "x.csv")]) == 2


def test_help_documents_schema(capsys):
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    for name, sp in sub.choices.items():
        assert "columns: " + ",".join(SCHEMAS[name]) in sp.format_help()


def test_every_command_header_matches_schema(capsys):
    cases = {
        "count": ["--q", "7"],
        "histogram": ["--q", "7"],
        "classnum": ["--n", "7"],
        "trace-es": ["--k", "12", "--q", "7"],
        "trace-mf": ["--k", "12", "--n", "7"],
        "verify-es": ["--kmax", "6", "--qmax", "7"],
        "verify-deuring": ["--q", "7"],
        "bs-coeffs": ["--alpha", "0", "--beta", "0.5", "--M", "2"],
        "discrepancy": ["--q", "7", "--cells", "2"],
        "exponent-fit": ["--q", "7", "11", "13", "--interval", "0.5", "1.5"],
        "sandwich": ["--q", "7"],
        "moments": ["--q", "7", "--R", "1"],
    }
    assert set(cases) == set(SCHEMAS)
    for name, args in cases.items():
        _, out = run(capsys, name, *args)
        assert out.splitlines()[0] == ",".join(SCHEMAS[name])


def test_threads_env(monkeypatch):
    monkeypatch.setenv("SATOLAB_THREADS", "3")
    args = build_parser().parse_args(["histogram", "--q", "7"])
    assert args.threads == 3
