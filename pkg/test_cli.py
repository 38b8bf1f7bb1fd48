# test_cli.py
"""
Command-line behaviour through click's test runner.
"""
import json

import pytest
from click.testing import CliRunner

from psigroup.main import EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK, cli


@pytest.fixture
def runner():
    return CliRunner()


def test_psi_for_catalog_label(runner):
    result = runner.invoke(cli, ["psi", "S3"])
    assert result.exit_code == EXIT_OK
    assert "13/21" in result.output
    assert "case1" in result.output


def test_psi_for_family(runner):
    result = runner.invoke(cli, ["psi", "dihedral", "10"])
    assert result.exit_code == EXIT_OK
    assert "D10" in result.output


def test_psi_rejects_unknown_family(runner):
    result = runner.invoke(cli, ["psi", "klein", "4"])
    assert result.exit_code == EXIT_ERROR


def test_psi_reports_invalid_parameters(runner):
    result = runner.invoke(cli, ["psi", "dihedral", "7"])
    assert result.exit_code == EXIT_ERROR


def test_psi_cyclic(runner):
    result = runner.invoke(cli, ["psi-cyclic", "12"])
    assert result.exit_code == EXIT_OK
    assert "77" in result.output
    assert runner.invoke(cli, ["psi-cyclic", "0"]).exit_code == EXIT_ERROR


def test_family_profile(runner):
    result = runner.invoke(cli, ["family", "dihedral", "10"])
    assert result.exit_code == EXIT_OK
    assert "psi 31" in result.output


def test_catalog_listing(runner):
    result = runner.invoke(cli, ["catalog", "--max-order", "8"])
    assert result.exit_code == EXIT_OK
    assert "Q8" in result.output
    assert "C9" not in result.output


def test_verify_single_theorem(runner):
    result = runner.invoke(cli, ["verify", "--theorem", "T1", "--max-order", "8"])
    assert result.exit_code == EXIT_OK
    assert "PASS" in result.output
    assert "T1 equality: C2xC2" in result.output


def test_verify_unknown_theorem(runner):
    result = runner.invoke(cli, ["verify", "--theorem", "T99"])
    assert result.exit_code == EXIT_ERROR


def test_verify_bad_corpus_file(runner, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"label": "X", "degree": 2, "generators": [[0, 0]]}\n')
    result = runner.invoke(cli, ["verify", "--theorem", "T1", "--corpus", str(path)])
    assert result.exit_code == EXIT_ERROR


def test_verify_reports_counterexample(runner, monkeypatch):
    from psigroup.harness import theorems

    monkeypatch.setattr(theorems, "SEVEN_ELEVENTHS", theorems.SEVEN_ELEVENTHS / 2)
    result = runner.invoke(cli, ["verify", "--theorem", "T1", "--max-order", "4"])
    assert result.exit_code == EXIT_COUNTEREXAMPLE
    assert "T1 counterexample C2xC2" in result.output


def test_table_and_export(runner, tmp_path):
    table_path = tmp_path / "psi.json"
    result = runner.invoke(cli, ["table", "--format", "json", "--out", str(table_path), "--max-order", "6"])
    assert result.exit_code == EXIT_OK
    assert len(json.loads(table_path.read_text())) == 8

    corpus_path = tmp_path / "corpus.jsonl"
    result = runner.invoke(cli, ["export-corpus", str(corpus_path), "--max-order", "6"])
    assert result.exit_code == EXIT_OK
    assert len(corpus_path.read_text().splitlines()) == 8

    result = runner.invoke(cli, ["table", "--corpus", str(corpus_path), "--out", str(tmp_path / "psi.csv")])
    assert result.exit_code == EXIT_OK
    assert "Wrote 8 rows" in result.output
