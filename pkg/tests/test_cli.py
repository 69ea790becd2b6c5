import pytest

from weylchars.cli import main, parse_int_list, serialize_class, serialize_symbol
from weylchars.symbols import BiSymbol, SignedCycleType


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_int_list():
    assert parse_int_list("1,3") == (1, 3)
    assert parse_int_list("") == ()
    assert parse_int_list(" 4 ") == (4,)
    with pytest.raises(ValueError):
        parse_int_list("1,x")


def test_serializers():
    assert serialize_class(SignedCycleType((1, 2), (3, 4))) == "pos:1.2;neg:3.4"
    assert serialize_class(SignedCycleType((), (2,))) == "pos:;neg:2"
    assert serialize_symbol(BiSymbol((0, 1), (2,))) == "0,1;2"
    assert serialize_symbol((1, 3)) == "1,3"


def test_trace_sn(capsys):
    code, out, _ = run(capsys, "trace", "sn", "--beta", "3", "--cycles", "3")
    assert (code, out.strip()) == (0, "1")
    code, out, _ = run(capsys, "trace", "sn", "--beta", "1,3", "--cycles", "1,1,1")
    assert (code, out.strip()) == (0, "2")
    code, out, _ = run(capsys, "trace", "sn", "--beta", "1,1", "--cycles", "2")
    assert (code, out.strip()) == (0, "0")


def test_trace_sn_weight_mismatch(capsys):
    code, _, err = run(capsys, "trace", "sn", "--beta", "1,3", "--cycles", "2")
    assert code == 2
    assert "weight mismatch" in err


def test_trace_wn(capsys):
    code, out, _ = run(
        capsys, "trace", "wn", "--top", "0,1", "--bottom", "2", "--neg", "2"
    )
    assert (code, out.strip()) == (0, "-1")
    code, out, _ = run(
        capsys, "trace", "wn", "--top", "1", "--bottom", "0", "--neg", "1"
    )
    assert (code, out.strip()) == (0, "1")
    code, _, err = run(
        capsys, "trace", "wn", "--top", "2", "--bottom", "", "--neg", "1"
    )
    assert code == 2


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "prop211", "--m", "2")
    assert code == 0
    assert "claim: prop211" in out
    assert "status: pass" in out
    assert "params: m=2" in out


def test_verify_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "prop212", "--m", "3")
    assert code == 2 and "even" in err
    code, _, err = run(capsys, "verify", "prop211", "--m", "9")
    assert code == 2
    code, _, err = run(capsys, "verify", "so5", "--q", "7")
    assert code == 2


def test_verify_deterministic_output(capsys):
    args = ["verify", "lemma26", "--m", "2", "--no-timing"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "elapsed_ms: 0" in out1
    assert "seed: 0" in out1


def test_verify_report_file(tmp_path, capsys):
    path = tmp_path / "report.txt"
    code, out, _ = run(
        capsys, "verify", "lemma27", "--m", "1", "--output", str(path)
    )
    assert code == 0 and out == ""
    assert "claim: lemma27" in path.read_text()


def test_verify_seed_recorded(capsys):
    code, out, _ = run(capsys, "verify", "lemma29", "--m", "1", "--seed", "17")
    assert code == 0
    assert "seed: 17" in out


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "wn", "--n", "1")
    assert code == 0
    assert "character table W1" in out
    assert "pos:1;neg:" in out and "pos:;neg:1" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "sn", "--n", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("symbol,")
    assert lines[1].startswith("centralizer,")
    assert lines[-1] == "# weighted row orthogonality: pass"
    # 5 partitions of 4: header + centralizers + 5 rows + footer
    assert len(lines) == 8


def test_table_bounds(capsys):
    code, _, err = run(capsys, "table", "sn", "--n", "9")
    assert code == 2
    code, _, err = run(capsys, "table", "wn", "--n", "7")
    assert code == 2


def test_table_output_file(tmp_path, capsys):
    path = tmp_path / "table.csv"
    code, out, _ = run(
        capsys, "table", "sn", "--n", "3", "--format", "csv", "--output", str(path)
    )
    assert code == 0
    assert path.read_text().startswith("symbol,")


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "lemma210", "--no-timing")
    parallel = run(capsys, "verify", "lemma210", "--no-timing", "--jobs", "4")
    assert serial == parallel


def test_verify_prop211_m3(capsys):
    code, out, _ = run(capsys, "verify", "prop211", "--m", "3")
    assert code == 0 and "status: pass" in out


def test_verify_all_is_green(capsys):
    # the CI entry point: every claim, one aggregated report, exit 0
    code, out, _ = run(capsys, "verify", "all", "--no-timing")
    assert code == 0
    assert out.count("status: pass") == 28
    assert "status: fail" not in out
    for claim in (
        "lemma26",
        "lemma27",
        "lemma29",
        "lemma210",
        "prop211",
        "prop212",
        "lemma217",
        "so5",
    ):
        assert f"claim: {claim}" in out
