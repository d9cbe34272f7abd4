"""
Pruebas de configuración, serialización, errores y caché de tablas
"""
import json
from fractions import Fraction

import pytest

from cli.utils.cache import TableCache
from hankel import __version__
from hankel.config import get_profile
from hankel.config.settings import CacheConfig, Config
from hankel.exceptions import (
    DegenerateOrderError,
    InternalConsistencyError,
    LengthError,
    UsageError,
)
from hankel.models import CheckResult, CheckStatus, FamilyRow, RunConfig, VerificationReport
from hankel.utils.serialization import dumps, fraction_str, to_json_value


ROWS = [
    FamilyRow(1, 1, 0, -1, 0, 0, -1, 1, 1, 0),
    FamilyRow(2, -1, 1, 0, -1, 1, 0, -1, 0, -1),
    FamilyRow(3, -2, 10 ** 40, 3, 4, 5, 6, 7, 8, 9),
]


class TestConfig:
    def test_cache_dir_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("HANKEL_CACHE_DIR", str(tmp_path / "tables"))
        assert CacheConfig().cache_dir == tmp_path / "tables"

    def test_cache_can_be_disabled(self, monkeypatch):
        monkeypatch.setenv("HANKEL_CACHE_ENABLED", "false")
        assert CacheConfig().enabled is False

    def test_defaults(self):
        settings = Config()
        assert settings.families.min_n_max == 10
        assert settings.irrationality.default_base == 2
        assert settings.pade.series_margin == 2

    def test_profiles(self):
        assert get_profile("acceptance").n_max == 2000
        assert get_profile("desk").lemma1_n_max == 40
        assert get_profile("unknown").name == "desk"


class TestSerialization:
    def test_big_integers_become_strings(self):
        assert to_json_value(12) == 12
        assert to_json_value(10 ** 40) == str(10 ** 40)
        assert to_json_value(-(10 ** 15 - 1)) == -(10 ** 15 - 1)
        assert to_json_value(10 ** 15) == "1000000000000000"

    def test_fractions(self):
        assert fraction_str(Fraction(23, 3)) == "23/3"
        assert fraction_str(4) == "4"
        assert to_json_value({"mu": Fraction(43, 8)}) == {"mu": "43/8"}

    def test_dumps_sorted(self):
        text = dumps({"b": 1, "a": [CheckStatus.PASS, {3, 1}]})
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": ["pass", [1, 3]], "b": 1}


class TestErrors:
    def test_exit_codes(self):
        assert UsageError("x").exit_code == 2
        assert LengthError("x", required=5, available=3).exit_code == 2
        assert DegenerateOrderError("x").exit_code == 1
        assert InternalConsistencyError("x").exit_code == 3

    def test_payload(self):
        payload = LengthError("prefijo corto", required=5, available=3).to_dict()
        assert payload == {
            "error": "LengthError",
            "message": "prefijo corto",
            "details": {"required": 5, "available": 3},
        }


class TestReport:
    def test_status_fails_iff_any_check_fails(self):
        report = VerificationReport(RunConfig(subcommand="families"))
        report.add(CheckResult("a", CheckStatus.PASS))
        report.add(CheckResult("b", CheckStatus.SKIPPED))
        assert report.passed
        report.add(CheckResult("c", CheckStatus.FAIL))
        assert report.status is CheckStatus.FAIL

    def test_timings_can_be_excluded(self):
        config = RunConfig(subcommand="pade", timings=False)
        report = VerificationReport(config, [CheckResult("a", CheckStatus.PASS, seconds=1.5)])
        assert "seconds" not in report.to_dict()["checks"][0]
        assert report.to_dict()["version"] == __version__


class TestFamilyRow:
    def test_csv_cells(self):
        row = ROWS[2]
        assert FamilyRow.from_csv_row(row.to_csv_row()) == row

    def test_missing_cells_rejected(self):
        with pytest.raises(ValueError):
            FamilyRow.from_csv_row(["1", "2"])
        with pytest.raises(ValueError):
            FamilyRow.from_csv_row(["1", "x", "0", "0", "0", "0", "0", "0", "0", "0"])


class TestTableCache:
    def test_round_trip(self, tmp_path):
        cache = TableCache(tmp_path)
        assert cache.get("paperfolding-closed", 3) is None
        cache.set("paperfolding-closed", 3, ROWS)
        assert cache.get("paperfolding-closed", 3) == ROWS
        stats = cache.get_stats()
        assert stats["tables"] == 1
        assert stats["hits"] == 1
        assert stats["misses"] == 1

    def test_header_fixed(self, tmp_path):
        cache = TableCache(tmp_path)
        cache.set("cantor", 3, ROWS)
        first_line = cache.path_for("cantor", 3).read_text().splitlines()[0]
        assert first_line == "n,a,b,c,d,e,g,h,x,y"

    def test_key_depends_on_size(self, tmp_path):
        cache = TableCache(tmp_path)
        assert cache.path_for("cantor", 3) != cache.path_for("cantor", 4)
        assert cache.path_for("cantor", 3) != cache.path_for("thue-morse-pm1", 3)

    @pytest.mark.parametrize("content", [
        "",
        "n,a,b\n1,1,0\n",
        "n,a,b,c,d,e,g,h,x,y\n1,1,0,-1,0,0,-1,1,1\n",
        "n,a,b,c,d,e,g,h,x,y\n1,1,0,-1,0,0,-1,1,1,zz\n",
        "n,a,b,c,d,e,g,h,x,y\n1,1,0,-1,0,0,-1,1,1,0\n",
    ])
    def test_corrupt_file_removed(self, tmp_path, caplog, content):
        cache = TableCache(tmp_path)
        path = cache.path_for("paperfolding-closed", 3)
        path.write_text(content)
        with caplog.at_level("WARNING"):
            assert cache.get("paperfolding-closed", 3) is None
        assert not path.exists()
        assert "corrupta" in caplog.text
        assert cache.get_stats()["corrupt"] == 1

    def test_clear(self, tmp_path):
        cache = TableCache(tmp_path)
        cache.set("cantor", 3, ROWS)
        cache.clear()
        assert cache.get_stats()["tables"] == 0

    def test_disabled_cache(self, tmp_path):
        cache = TableCache(tmp_path, enabled=False)
        cache.set("cantor", 3, ROWS)
        assert cache.get("cantor", 3) is None
        assert not list(tmp_path.glob("*.csv"))
