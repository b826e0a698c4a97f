import json
from pathlib import Path

import pytest

from lefschetz._config import lefschetz_config
from lefschetz._core.invariants import (
    classify_report,
    compute_records,
    grid_params,
    invariants_report,
    render,
)


class TestComputeRecords:
    def test_order_is_kept(self):
        params = [(4, 1, 1), (3, 1, 0), (17, 2, 7)]
        records = compute_records(params)
        assert [(r.g, r.h, r.i) for r in records] == params

    def test_parallel_matches_serial(self):
        # Arrange
        params = grid_params(4)

        # Act
        with lefschetz_config.set(jobs=2):
            parallel = compute_records(params)

        # Assert
        assert parallel == compute_records(params)


class TestRender:
    def test_csv_has_no_trailing_newline(self):
        text = render(compute_records([(3, 1, 0)]), "csv")
        assert not text.endswith("\n")
        assert len(text.splitlines()) == 2


@pytest.mark.usefixtures("_quiet")
class TestInvariantsReport:
    def test_json_stdout(self, capfd: pytest.CaptureFixture[str]):
        invariants_report([(17, 2, 7)])
        out, _ = capfd.readouterr()
        assert json.loads(out)[0]["e"] == 116

    def test_audited_file(self, tmp_path: Path):
        # Arrange
        out = tmp_path / "grid.csv"

        # Act
        records = invariants_report(grid_params(3), fmt="csv", audit=True, out=out)

        # Assert
        lines = out.read_text().splitlines()
        assert len(lines) == len(records) + 1
        assert lines[0].startswith("g,h,i,p,r,e,sigma")


class TestClassifyReport:
    def test_canonical_name(self, capfd: pytest.CaptureFixture[str]):
        # Act
        name = classify_report(17, 2, 7)

        # Assert
        assert name == "H_2(6)"
        out, err = capfd.readouterr()
        assert out == "H_2(6)\n"
        assert "Z_2(4)" in err
        assert "h = 2 is even; not spin." in err

    def test_rational_surface(self, capfd: pytest.CaptureFixture[str]):
        classify_report(4, 1, 3)
        _, err = capfd.readouterr()
        assert "CP² # 9CP̄²" in err
