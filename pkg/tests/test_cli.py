import json

import pytest

from orthower.cli import main


def test_eval_text_mode(capsys):
    code = main(["eval", "--text", "The cat sat.", "the cat sat"])
    out = capsys.readouterr().out
    assert code == 0
    assert "wer        0.0000" in out
    assert "legacy_wer" in out


def test_eval_json_stdout_is_valid_and_deterministic(capsys):
    argv = ["eval", "--text", "Hello, world!", "hello world", "--json", "-"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["version"] == "1.0"
    assert payload["metrics"]["word"]["wer"]["value"] == 0


def test_eval_reads_files(tmp_path, capsys):
    ref = tmp_path / "ref.txt"
    hyp = tmp_path / "hyp.txt"
    ref.write_text("one two three", encoding="utf-8")
    hyp.write_text("one two", encoding="utf-8")
    code = main(["eval", str(ref), str(hyp)])
    out = capsys.readouterr().out
    assert code == 0
    assert "wer        0.3333" in out


def test_eval_missing_file_is_usage_error(tmp_path, capsys):
    code = main(["eval", str(tmp_path / "absent.txt"), str(tmp_path / "also.txt")])
    assert code == 1


def test_unknown_flag_exits_1(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["eval", "--bogus"])
    assert excinfo.value.code == 1


def test_disable_all(capsys):
    code = main(["eval", "--text", "two thousand", "$2000", "--disable", "all"])
    out = capsys.readouterr().out
    assert code == 0
    assert "wer        0.0000" not in out


def test_disable_single_normaliser(capsys):
    code = main(["eval", "--text", "colour", "color", "--disable", "numbers"])
    out = capsys.readouterr().out
    assert code == 0
    assert "wer        0.0000" in out


def test_legacy_wer_mode(capsys):
    code = main(["eval", "--text", "The CAT, sat!", "the cat sat", "--legacy-wer"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip() == "legacy_wer 0.0000"


def test_compound_limit_flag(capsys):
    assert main(["eval", "--text", "ice cream", "icecream", "--compound-limit", "0"]) == 0
    out = capsys.readouterr().out
    assert "wer        1.0000" in out
    assert main(["eval", "--text", "ice cream", "icecream", "--compound-limit", "inf"]) == 0
    out = capsys.readouterr().out
    assert "wer        0.0000" in out


def test_html_output(tmp_path, capsys):
    target = tmp_path / "report.html"
    code = main(["eval", "--text", "a b", "a c", "--html", str(target)])
    assert code == 0
    assert target.read_text(encoding="utf-8").startswith("<!DOCTYPE html>")


def test_lexicon_dir_override(tmp_path, capsys):
    lexdir = tmp_path / "lex"
    lexdir.mkdir()
    (lexdir / "interjections.txt").write_text("blah=\n", encoding="utf-8")
    code = main(
        ["eval", "--text", "blah yes", "yes", "--lexicon-dir", str(lexdir)]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "wer        0.0000" in out


def _write_corpus(tmp_path, include_missing=False):
    ref = tmp_path / "r.txt"
    hyp = tmp_path / "h.txt"
    ref.write_text("same words here", encoding="utf-8")
    hyp.write_text("same words here", encoding="utf-8")
    rows = [("good", ref, hyp)]
    if include_missing:
        rows.append(("bad", tmp_path / "missing.txt", hyp))
    manifest = tmp_path / "m.csv"
    manifest.write_text(
        "id,reference,hypothesis\n" + "\n".join(f"{i},{r},{h}" for i, r, h in rows) + "\n",
        encoding="utf-8",
    )
    return manifest


def test_corpus_success(tmp_path, capsys):
    manifest = _write_corpus(tmp_path)
    code = main(["corpus", str(manifest)])
    out = capsys.readouterr().out
    assert code == 0
    assert "pairs      1 (0 failed)" in out


def test_corpus_partial_failure_exits_2(tmp_path, capsys):
    manifest = _write_corpus(tmp_path, include_missing=True)
    code = main(["corpus", str(manifest)])
    captured = capsys.readouterr()
    assert code == 2
    assert "pairs      2 (1 failed)" in captured.out
    assert "bad" in captured.err


def test_corpus_json_and_report_dir(tmp_path, capsys):
    manifest = _write_corpus(tmp_path)
    out_json = tmp_path / "summary.json"
    report_dir = tmp_path / "reports"
    code = main(
        ["corpus", str(manifest), "--json", str(out_json), "--report-dir", str(report_dir), "--jobs", "2"]
    )
    assert code == 0
    payload = json.loads(out_json.read_text(encoding="utf-8"))
    assert payload["summary"]["pairs_total"] == 1
    assert (report_dir / "good.json").exists()


def test_corpus_invalid_manifest_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("nope,nope\n1,2\n", encoding="utf-8")
    assert main(["corpus", str(bad)]) == 1
