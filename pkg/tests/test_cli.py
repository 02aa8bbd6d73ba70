import json

import pytest
from click.testing import CliRunner

from knotmeta import cli
from knotmeta.cli import main
from knotmeta.knotdata import fixture_path
from knotmeta.riley import LongitudeReport


@pytest.fixture
def runner():
    return CliRunner()


SEIFERT = str(fixture_path("seifert_knots.json"))
APOLYS = str(fixture_path("apolys.json"))
CORPUS = str(fixture_path("two_bridge_p45.json"))


class TestDet:
    def test_table(self, runner):
        res = runner.invoke(main, ["det", "-i", SEIFERT])
        assert res.exit_code == 0
        assert "3_1: 3" in res.output
        assert "4_1: 5" in res.output

    def test_csv(self, runner):
        res = runner.invoke(main, ["det", "-i", SEIFERT, "-f", "csv"])
        assert res.output.splitlines()[0] == "name,det"

    def test_missing_file_exits_2(self, runner):
        res = runner.invoke(main, ["det", "-i", "/nonexistent.json"])
        assert res.exit_code == 2

    def test_malformed_json_exits_2(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        res = runner.invoke(main, ["det", "-i", str(bad)])
        assert res.exit_code == 2
        assert "error:" in res.stderr


class TestMeta:
    def test_count_json(self, runner):
        res = runner.invoke(main, ["meta-count", "-i", SEIFERT, "-f", "json"])
        assert res.exit_code == 0
        rows = json.loads(res.output)
        assert rows == [
            {"count": 1, "name": "3_1"},
            {"count": 2, "name": "4_1"},
        ]

    def test_enum_lists_classes(self, runner):
        res = runner.invoke(main, ["meta-enum", "-i", SEIFERT])
        assert res.exit_code == 0
        assert "3_1: (1/3, 2/3) order 3" in res.output

    def test_enum_rejects_two_bridge_records(self, runner):
        res = runner.invoke(main, ["meta-enum", "-i", CORPUS])
        assert res.exit_code == 2
        assert "Seifert" in res.stderr

    def test_verify_ok(self, runner):
        res = runner.invoke(main, ["meta-verify", "-i", SEIFERT])
        assert res.exit_code == 0
        assert res.output.count("ok") == 3


class TestTwoBridge:
    def test_riley_section(self, runner):
        res = runner.invoke(main, ["tb-riley", "-p", "5", "-q", "3"])
        assert res.exit_code == 0
        assert "phi: (1)*u^2 + (5)*u + (5)" in res.output
        assert "squarefree: True" in res.output

    def test_riley_roots_flag(self, runner):
        res = runner.invoke(
            main, ["tb-riley", "-p", "5", "-q", "3", "--roots", "-f", "json"]
        )
        payload = json.loads(res.output)
        assert payload["approx"]["complex_pair_count"] == 0
        assert len(payload["approx"]["real_roots"]) == 2

    def test_invalid_pq_exits_2(self, runner):
        res = runner.invoke(main, ["tb-riley", "-p", "4", "-q", "1"])
        assert res.exit_code == 2

    def test_verify(self, runner):
        res = runner.invoke(main, ["tb-verify", "-p", "7", "-q", "3"])
        assert res.exit_code == 0
        assert "relator_ok: True" in res.output
        assert "longitude: id" in res.output

    def test_verify_general_t(self, runner):
        res = runner.invoke(
            main, ["tb-verify", "-p", "5", "-q", "3", "--general-t"]
        )
        assert res.exit_code == 0
        assert "relator_general_t_ok: True" in res.output

    def test_verify_failure_exits_1(self, runner, monkeypatch):
        def fake(K):
            return LongitudeReport(knot=K.name, result="neither", trace_is_two=False)

        monkeypatch.setattr(cli.riley, "verify_longitude_mod_phi", fake)
        res = runner.invoke(main, ["tb-verify", "-p", "5", "-q", "3"])
        assert res.exit_code == 1

    def test_crosscheck(self, runner):
        res = runner.invoke(main, ["tb-crosscheck", "-p", "15", "-q", "11"])
        assert res.exit_code == 0
        assert "riley roots 7 = (p-1)/2 7 = metabelian 7 -> ok" in res.output


class TestApolyAnalyze:
    def test_table(self, runner):
        res = runner.invoke(main, ["apoly-analyze", "-i", APOLYS])
        assert res.exit_code == 0
        assert "8_20:" in res.output
        assert "factors: l^0 (l-1)^3 (l+1)^2" in res.output
        # polynomials render in the variable l, never u
        assert "*u" not in res.output
        assert "*l" in res.output

    def test_json_deterministic(self, runner):
        a = runner.invoke(main, ["apoly-analyze", "-i", APOLYS, "-f", "json"])
        b = runner.invoke(main, ["apoly-analyze", "-i", APOLYS, "-f", "json"])
        assert a.exit_code == b.exit_code == 0
        assert a.output == b.output
        json.loads(a.output)  # valid JSON

    def test_probe_with_det(self, runner):
        res = runner.invoke(main, ["apoly-analyze", "-i", APOLYS, "--det", "9"])
        assert "probe: k = 3 <= 4: True" in res.output


class TestSweep:
    def test_csv_header_and_shape(self, runner):
        res = runner.invoke(main, ["sweep", "--p-max", "9", "-f", "csv"])
        assert res.exit_code == 0
        lines = res.output.splitlines()
        assert lines[0] == cli.SWEEP_HEADER
        # S(p,q), 0 < q < p odd coprime, p in {3,5,7,9}: 1+2+3+3 rows
        assert len(lines) == 1 + 9
        assert lines[1].startswith("S(3,1),3,1,3,1,1,True,True,True")

    def test_rejects_even_p_max(self, runner):
        res = runner.invoke(main, ["sweep", "--p-max", "8"])
        assert res.exit_code == 2

    def test_json_byte_identical_across_thread_counts(self, runner, monkeypatch):
        monkeypatch.setenv("KNOTMETA_THREADS", "1")
        a = runner.invoke(main, ["sweep", "--p-max", "11", "-f", "json"])
        monkeypatch.setenv("KNOTMETA_THREADS", "4")
        b = runner.invoke(main, ["sweep", "--p-max", "11", "-f", "json"])
        assert a.exit_code == b.exit_code == 0
        assert a.output == b.output

    def test_negative_q_doubles_rows(self, runner):
        pos = runner.invoke(main, ["sweep", "--p-max", "9", "-f", "csv"])
        both = runner.invoke(
            main, ["sweep", "--p-max", "9", "--negative-q", "-f", "csv"]
        )
        assert len(both.output.splitlines()) - 1 == 2 * (
            len(pos.output.splitlines()) - 1
        )
