"""End-to-end CLI checks, run in process through cli.main."""

import json

import pytest

from conic_census import cli
from conic_census.field import KElem, ONE


def test_usage_error_without_command():
    with pytest.raises(SystemExit) as err:
        cli.main([])
    assert err.value.code == cli.EXIT_USAGE


def test_usage_error_on_bad_case():
    with pytest.raises(SystemExit) as err:
        cli.main(["enumerate", "--case", "v"])
    assert err.value.code == cli.EXIT_USAGE


def test_usage_error_on_unknown_flag():
    with pytest.raises(SystemExit) as err:
        cli.main(["gram", "--frobnicate"])
    assert err.value.code == cli.EXIT_USAGE


def test_verify_requires_infile():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify"])
    assert err.value.code == cli.EXIT_USAGE


def test_gram_text_output(capsys, tmp_path):
    dot = tmp_path / "gram.dot"
    rc = cli.main(["gram", "--dot", str(dot)])
    out = capsys.readouterr().out
    assert rc == cli.EXIT_OK
    assert "det = -160" in out
    text = dot.read_text()
    assert text.count(" -- ") == 22


def test_gram_machine_output(capsys):
    rc = cli.main(["gram", "--format", "machine"])
    assert rc == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["report"]["ok"] is True
    assert doc["det"] == -160
    assert len(doc["matrix"]) == 20


def test_kummer(capsys):
    rc = cli.main(["kummer"])
    assert rc == cli.EXIT_OK
    assert "pass" in capsys.readouterr().out


def test_components(capsys):
    rc = cli.main(["components"])
    assert rc == cli.EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


def test_fibers(capsys):
    rc = cli.main(["fibers"])
    assert rc == cli.EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


def test_enumerate_case_iii(capsys, census):
    rc = cli.main(["enumerate", "--case", "iii", "--in", str(census.path)])
    assert rc == cli.EXIT_OK
    assert "FAIL" not in capsys.readouterr().out


def test_enumerate_case_iv(capsys):
    rc = cli.main(["enumerate", "--case", "iv"])
    assert rc == cli.EXIT_OK


def test_enumerate_case_i_budget_exit(capsys):
    rc = cli.main(["enumerate", "--case", "i", "--budget-pairs", "30"])
    assert rc == cli.EXIT_BUDGET
    err = capsys.readouterr().err
    assert "budget" in err


def test_census_from_certificate(capsys, census):
    rc = cli.main(["census", "--in", str(census.path)])
    assert rc == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "pass" in out and "FAIL" not in out


def test_verify_certificate(capsys, census):
    rc = cli.main(["verify", "--in", str(census.path)])
    assert rc == cli.EXIT_OK


def test_verify_machine_format(capsys, census):
    rc = cli.main(["verify", "--in", str(census.path), "--format", "machine"])
    assert rc == cli.EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["report"]["ok"] is True


def test_verify_tampered_certificate(capsys, census, tmp_path):
    lines = census.path.read_text().splitlines()
    idx = next(i for i, ln in enumerate(lines) if ln.startswith("conic "))
    toks = lines[idx].split(" ")
    toks[11] = (KElem.from_text(toks[11]) + ONE).to_text()
    lines[idx] = " ".join(toks)
    bad = tmp_path / "tampered.cert"
    bad.write_text("\n".join(lines) + "\n")
    rc = cli.main(["verify", "--in", str(bad)])
    captured = capsys.readouterr()
    assert rc == cli.EXIT_VERIFICATION
    assert "FAIL" in captured.out
    assert "verification failed" in captured.err


def test_verify_garbage_file(capsys, tmp_path):
    path = tmp_path / "junk.cert"
    path.write_text("not a certificate\n")
    rc = cli.main(["verify", "--in", str(path)])
    assert rc == cli.EXIT_PARSE


def test_verify_missing_file(capsys, tmp_path):
    rc = cli.main(["verify", "--in", str(tmp_path / "absent.cert")])
    assert rc == cli.EXIT_PARSE
