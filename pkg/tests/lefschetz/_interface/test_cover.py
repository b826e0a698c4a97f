import json
from pathlib import Path

from typer.testing import CliRunner

from lefschetz.__main__ import app

runner = CliRunner()


class TestCover:
    def test_replay(self):
        result = runner.invoke(
            app, ["cover", "--g", "3", "--h", "1", "--i", "0", "--quiet"]
        )
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in result.output.splitlines()]
        assert all(record["ok"] for record in records)

    def test_dump_script(self):
        result = runner.invoke(
            app, ["cover", "--g", "4", "--h", "1", "--i", "0", "--dump-script"]
        )
        assert result.exit_code == 0, result.output
        assert 'kind = "two_handle_band_dive"' in result.output

    def test_failing_script(self, tmp_path: Path):
        # Arrange
        script = tmp_path / "script.toml"
        script.write_text('[[move]]\nkind = "handle_slide"\n')
        log = tmp_path / "audit.jsonl"

        # Act
        result = runner.invoke(
            app,
            [
                "cover",
                *("--g", "3", "--h", "1", "--i", "0"),
                *("--script", str(script), "--log", str(log)),
            ],
        )

        # Assert
        assert result.exit_code == 1
        assert "Step 1" in result.output
        assert log.exists()

    def test_unreadable_script(self, tmp_path: Path):
        script = tmp_path / "script.toml"
        script.write_text("[[move]\n")
        result = runner.invoke(
            app,
            ["cover", "--g", "3", "--h", "1", "--i", "0", "--script", str(script)],
        )
        assert result.exit_code == 2


class TestDoubling:
    def test_orbit(self):
        result = runner.invoke(
            app, ["doubling", "--g", "1", "--b", "1", "--iterate", "2"]
        )
        assert result.exit_code == 0, result.output
        assert "(7,16) ≡ 0 mod 4" in result.output

    def test_family(self):
        result = runner.invoke(
            app,
            ["doubling", "--family-h", "2", "--family-q", "1", "--count", "3"],
        )
        assert result.exit_code == 0, result.output
        assert "g=5 i=2 base_points=6" in result.output

    def test_family_needs_q(self):
        result = runner.invoke(app, ["doubling", "--family-h", "2"])
        assert result.exit_code == 2

    def test_needs_parameters(self):
        result = runner.invoke(app, ["doubling"])
        assert result.exit_code == 2


class TestCoverPipe:
    def test_stdout_is_json_lines_without_quiet(self):
        # Act
        result = runner.invoke(app, ["cover", "--g", "4", "--h", "1", "--i", "0"])

        # Assert
        assert result.exit_code == 0, result.output
        records = [json.loads(line) for line in result.stdout.splitlines()]
        assert all(record["ok"] for record in records)
        assert "audits pass" in result.stderr
