import json
import re

import pytest

from leafletqa.cli import EXIT_INPUT, EXIT_MODEL, EXIT_OK, main


@pytest.fixture()
def corpus_file(tmp_path, sample_text):
    path = tmp_path / "insert.txt"
    path.write_text(sample_text, encoding="utf-8")
    return path


@pytest.fixture()
def model_file(tmp_path, corpus_file):
    out = tmp_path / "model.json"
    assert main(["ingest", str(corpus_file), "--out", str(out)]) == EXIT_OK
    return out


class TestIngest:
    def test_summary_printed(self, tmp_path, corpus_file, capsys):
        out = tmp_path / "model.json"
        code = main(["ingest", str(corpus_file), "--out", str(out)])
        captured = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.exists()
        assert re.search(r"documents:\s+\d+", captured)
        assert re.search(r"tokens:\s+\d+", captured)
        assert re.search(r"relevant terms:\s+\d+ \(\d+\.\d{2}%\)", captured)
        assert re.search(r"clusters:\s+\d+", captured)

    def test_empty_file_exits_2(self, tmp_path, capsys):
        empty = tmp_path / "empty.txt"
        empty.write_text("   \n ")
        code = main(["ingest", str(empty), "--out", str(tmp_path / "m.json")])
        assert code == EXIT_INPUT
        assert "empty corpus" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["ingest", str(tmp_path / "nope.txt")]) == EXIT_INPUT

    def test_no_relevant_words_exits_2(self, tmp_path, capsys):
        path = tmp_path / "thin.txt"
        path.write_text("one two. three four.")
        code = main(["ingest", str(path), "--out", str(tmp_path / "m.json")])
        assert code == EXIT_INPUT
        assert "relevant" in capsys.readouterr().err

    def test_bad_config_exits_2(self, tmp_path, corpus_file):
        config = tmp_path / "config.json"
        config.write_text('{"epsilon": 2.0}')
        code = main(
            ["ingest", str(corpus_file), "--config", str(config), "--out", str(tmp_path / "m.json")]
        )
        assert code == EXIT_INPUT

    def test_config_round_trips_into_model(self, tmp_path, corpus_file):
        config = tmp_path / "config.json"
        config.write_text('{"top_k": 5, "fallback_text": "no idea"}')
        out = tmp_path / "model.json"
        assert (
            main(["ingest", str(corpus_file), "--config", str(config), "--out", str(out)])
            == EXIT_OK
        )
        payload = json.loads(out.read_text())
        assert payload["config"]["top_k"] == 5
        assert payload["config"]["fallback_text"] == "no idea"


class TestAsk:
    def test_answers_printed_with_two_decimals(self, model_file, capsys):
        code = main(["ask", str(model_file), "What are the risks of bleeding?"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        lines = [l for l in out.strip().splitlines() if l]
        assert lines[0].startswith("1.00  ")
        for line in lines:
            assert re.match(r"\d\.\d{2}  \[\d+\] ", line)

    def test_top_k_limits_lines(self, model_file, capsys):
        code = main(["ask", str(model_file), "bleeding", "--top-k", "1"])
        assert code == EXIT_OK
        assert len(capsys.readouterr().out.strip().splitlines()) == 1

    def test_unknown_words_print_fallback(self, model_file, capsys):
        code = main(["ask", str(model_file), "xyzzy plugh"])
        assert code == EXIT_OK
        assert "could not find" in capsys.readouterr().out

    def test_missing_model_exits_3(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["ask", str(tmp_path / "missing.json"), "question"])
        assert exc.value.code == EXIT_MODEL

    def test_corrupt_model_exits_3(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{oops")
        with pytest.raises(SystemExit) as exc:
            main(["ask", str(bad), "question"])
        assert exc.value.code == EXIT_MODEL

    def test_empty_question_exits_2(self, model_file):
        assert main(["ask", str(model_file), "   "]) == EXIT_INPUT


class TestStats:
    def test_bundle_written_and_listed(self, model_file, tmp_path, capsys):
        outdir = tmp_path / "stats"
        code = main(["stats", str(model_file), "--outdir", str(outdir)])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert (outdir / "word_frequencies.csv").exists()
        assert "distance_matrix.csv" in out


class TestRepl:
    def test_exit_command(self, model_file, capsys, monkeypatch):
        lines = iter(["what about bleeding?", "exit"])
        monkeypatch.setattr("builtins.input", lambda prompt="": next(lines))
        assert main(["repl", str(model_file)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "1.00" in out

    def test_eof_quits(self, model_file, monkeypatch):
        def raise_eof(prompt=""):
            raise EOFError

        monkeypatch.setattr("builtins.input", raise_eof)
        assert main(["repl", str(model_file)]) == EXIT_OK
