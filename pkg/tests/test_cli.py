"""
cli 测试 - 扫描、预置、CSV/SVG 输出与命令行入口
"""

import pytest
from ib_relay.bounds import capacity, upper_bound
from ib_relay.cli import (
    run_sweep, axis_values, figure_spec, render_csv, render_svg, format_value, emit_csv
)
from ib_relay.cli.emitters import write_text
from ib_relay.cli.main import Options, build_parser, main, read_key_value_file, tabulate_point
from ib_relay.core import Scheme, SweepAxis
from ib_relay.events import EventBus, EventType
from ib_relay.mmse import mmse_limits
from ib_relay.models import ChannelConfig, SweepSpec
from ib_relay.utils.config import Config
from ib_relay.utils.exceptions import (
    ConfigError, OutputError, UnsupportedConfigurationError, ValidationError
)

SMALL_SWEEP = ["sweep", "--axis", "capacity_bits", "--from", "0", "--to", "8", "--step", "4",
               "--k", "2", "--m", "2", "--snr-db", "10", "--qci-bits", "2"]


def small_spec(**overrides):
    values = dict(axis=SweepAxis.SNR_DB, values=(0.0, 10.0),
                  fixed=ChannelConfig.from_snr_db(2, 2, 0.0, 40.0), qci_bits=(4,))
    values.update(overrides)
    return SweepSpec(**values)


class TestPresets:

    def test_axis_values_inclusive(self):
        assert axis_values(0.0, 50.0, 5.0) == tuple(float(v) for v in range(0, 55, 5))
        values = axis_values(0.0, 1.0, 0.1)
        assert len(values) == 11
        assert values[3] == 0.3
        assert values[-1] == 1.0
        assert axis_values(5.0, 5.0, 1.0) == (5.0,)

    def test_axis_values_validation(self):
        with pytest.raises(ValidationError):
            axis_values(0.0, 1.0, 0.0)
        with pytest.raises(ValidationError):
            axis_values(2.0, 1.0, 0.5)

    def test_figures(self):
        first = figure_spec(1)
        assert first.axis is SweepAxis.SNR_DB
        assert len(first.values) == 11
        assert (first.fixed.dims.k, first.fixed.dims.m, first.fixed.capacity_bits) == (2, 2, 40.0)
        assert first.qci_bits == (4, 8)
        second = figure_spec(2)
        assert second.axis is SweepAxis.CAPACITY_BITS
        assert len(second.values) == 21
        assert figure_spec(3).axis is SweepAxis.ANTENNAS_M
        with pytest.raises(ValidationError):
            figure_spec(4)


class TestSweep:

    def test_events_and_order(self):
        bus = EventBus()
        seen = []
        for event_type in (EventType.SWEEP_STARTED, EventType.SWEEP_POINT_EVALUATED, EventType.SWEEP_FINISHED):
            bus.subscribe(event_type, lambda e: seen.append(e.type))
        rows = run_sweep(small_spec(), bus, n_jobs=1)
        assert [row.axis_value for row in rows] == [0.0, 10.0]
        assert seen[0] is EventType.SWEEP_STARTED
        assert seen[-1] is EventType.SWEEP_FINISHED
        assert seen.count(EventType.SWEEP_POINT_EVALUATED) == 2

    def test_parallel_matches_serial(self):
        serial = run_sweep(small_spec(), n_jobs=1)
        parallel = run_sweep(small_spec(), n_jobs=2)
        assert [r.series() for r in serial] == [r.series() for r in parallel]

    def test_rows_respect_bounds(self):
        for row in run_sweep(small_spec(), n_jobs=1):
            assert row.r_qci[4] <= row.r_ub + 1e-6
            assert row.r_mmse <= row.r_ub + 1e-6
            assert row.r_ub <= row.limits["capacity"] + 1e-6

    def test_low_snr_ordering(self):
        for row in run_sweep(small_spec(), n_jobs=1):
            assert row.r_ub > row.r_qci[4] > row.r_mmse

    def test_high_snr_ordering(self):
        row = run_sweep(small_spec(values=(80.0,)), n_jobs=1)[0]
        assert row.r_ub > row.r_mmse > row.r_qci[4]

    def test_infeasible_cells(self):
        spec = small_spec(axis=SweepAxis.CAPACITY_BITS, values=(0.0, 4.0, 8.0), qci_bits=(2,))
        rows = run_sweep(spec, n_jobs=1)
        assert rows[0].r_qci[2] is None
        assert rows[1].r_qci[2] is None
        assert rows[2].r_qci[2] > 0.0
        assert rows[0].r_mmse == 0.0
        assert rows[0].r_ub == 0.0

    def test_unsupported_configuration_fails_before_computing(self):
        bus = EventBus()
        seen = []
        bus.subscribe(EventType.SWEEP_STARTED, seen.append)
        spec = small_spec(axis=SweepAxis.ANTENNAS_M, values=(1.0, 2.0, 4.0))
        with pytest.raises(UnsupportedConfigurationError):
            run_sweep(spec, bus, n_jobs=1)
        assert seen == []

    def test_monte_carlo_columns(self):
        spec = small_spec(values=(10.0,), fixed=ChannelConfig.from_snr_db(2, 2, 0.0, 4.0),
                          mc_samples=20_000, seed=3)
        row = run_sweep(spec, n_jobs=1)[0]
        assert row.oracle["capacity"] == pytest.approx(row.limits["capacity"], rel=0.02)
        assert row.oracle["upper_bound"] == pytest.approx(row.r_ub, rel=0.02)
        assert spec.column_names()[-2:] == ["mc_capacity", "mc_ub"]


class TestEmitters:

    def test_format_value(self):
        assert format_value(None) == "NA"
        assert format_value(float("nan")) == "NA"
        assert format_value(0.123456789, digits=4) == "0.1235"
        assert format_value(3) == "3"
        assert format_value(0.0) == "0"

    def test_render_csv(self):
        spec = small_spec(axis=SweepAxis.CAPACITY_BITS, values=(0.0, 8.0), qci_bits=(2,))
        rows = run_sweep(spec, n_jobs=1)
        text = render_csv(rows, spec)
        assert "\r" not in text and text.endswith("\n")
        lines = text.splitlines()
        assert lines[0] == "capacity_bits,r_ub,r_qci_b2,r_mmse,limit_capacity"
        assert len(lines) == 3
        assert lines[1].split(",")[2] == "NA"
        with pytest.raises(ValidationError):
            render_csv([], spec)

    def test_render_svg(self):
        spec = small_spec(axis=SweepAxis.CAPACITY_BITS, values=(0.0, 4.0, 8.0), qci_bits=(2,))
        rows = run_sweep(spec, n_jobs=1)
        svg = render_svg(rows, spec)
        assert svg.lstrip().startswith("<?xml")
        assert svg.count('id="series-') == 3
        assert 'id="series-qci-B2"' in svg
        assert svg == render_svg(rows, spec)

    def test_emit_csv_to_file(self, tmp_path):
        spec = small_spec(values=(10.0,))
        rows = run_sweep(spec, n_jobs=1)
        path = tmp_path / "out.csv"
        emit_csv(rows, path, spec)
        assert path.read_text(encoding="utf-8") == render_csv(rows, spec)

    def test_write_error(self, tmp_path):
        with pytest.raises(OutputError):
            write_text("x", tmp_path / "missing" / "out.csv")


class TestMain:

    def test_sweep_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(SMALL_SWEEP + ["--out", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "capacity_bits,r_ub,r_qci_b2,r_mmse,limit_capacity"
        assert len(lines) == 4
        assert [line.split(",")[2] for line in lines[1:]][:2] == ["NA", "NA"]

    def test_sweep_is_deterministic(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        svg_a, svg_b = tmp_path / "a.svg", tmp_path / "b.svg"
        assert main(SMALL_SWEEP + ["--out", str(first), "--svg", str(svg_a)]) == 0
        assert main(SMALL_SWEEP + ["--out", str(second), "--svg", str(svg_b)]) == 0
        assert first.read_bytes() == second.read_bytes()
        assert svg_a.read_bytes() == svg_b.read_bytes()

    def test_single_point_sweep(self, capsys):
        assert main(["sweep", "--axis", "snr_db", "--from", "5", "--to", "5", "--step", "1",
                     "--scheme", "ub"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "snr_db,r_ub,limit_capacity"
        assert len(lines) == 2

    @pytest.mark.parametrize("argv", [
        ["sweep", "--axis", "snr_db", "--from", "0", "--to", "10"],
        ["sweep", "--axis", "snr_db", "--from", "0", "--to", "10", "--step", "-1"],
        ["sweep", "--axis", "bandwidth", "--from", "0", "--to", "10", "--step", "1"],
        ["point", "--scheme", "ub,relay"],
        ["point", "--k", "4", "--m", "2"],
    ])
    def test_errors_exit_with_one(self, argv, capsys):
        assert main(argv) == 1
        assert "ib-relay:" in capsys.readouterr().err

    def test_point(self, capsys):
        assert main(["point", "--k", "1", "--m", "1", "--snr-db", "0", "--capacity-bits", "2",
                     "--qci-bits", "1"]) == 0
        rows = dict(line.split(",") for line in capsys.readouterr().out.splitlines()[1:])
        cfg = ChannelConfig.from_snr_db(1, 1, 0.0, 2.0)
        assert float(rows["capacity"]) == pytest.approx(capacity(cfg), rel=1e-5)
        assert float(rows["r_ub"]) == pytest.approx(upper_bound(cfg), rel=1e-5)
        assert "r_qci-B1" in rows
        assert "mmse.limit_large_C" in rows

    def test_tabulate_point_more_users(self):
        cfg = ChannelConfig.from_snr_db(4, 2, 10.0, 8.0)
        entries = dict(tabulate_point(cfg, (Scheme.UB, Scheme.MMSE), ()))
        assert entries["mmse.limit_large_C"] == 0.0
        assert entries["r_mmse"] >= 0.0

    def test_config_file(self, tmp_path, capsys):
        config = tmp_path / "run.conf"
        config.write_text("# 单天线\nk = 1\nm = 1\nsnr_db = 20\nscheme = ub\n"
                          "numerics.gauss_laguerre_nodes = 80\n", encoding="utf-8")
        assert main(["--config", str(config), "point", "--snr-db", "0"]) == 0
        rows = dict(line.split(",") for line in capsys.readouterr().out.splitlines()[1:])
        cfg = ChannelConfig.from_snr_db(1, 1, 0.0, 40.0)
        assert float(rows["capacity"]) == pytest.approx(capacity(cfg), rel=1e-5)
        assert Config().get("numerics.gauss_laguerre_nodes") == 80

    def test_bad_config_file(self, tmp_path):
        config = tmp_path / "bad.conf"
        config.write_text("k 2\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            read_key_value_file(str(config))
        assert main(["--config", str(config), "point"]) == 1
        assert main(["--config", str(tmp_path / "none.conf"), "point"]) == 1

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv("IBRELAY_SEED", "7")
        assert Options(build_parser().parse_args(["oracle"]), {}).seed() == 7
        assert Options(build_parser().parse_args(["oracle", "--seed", "3"]), {}).seed() == 3
        monkeypatch.delenv("IBRELAY_SEED")
        assert Options(build_parser().parse_args(["oracle"]), {}).seed() == 0

    def test_oracle_subset(self, tmp_path, capsys):
        out = tmp_path / "oracle.csv"
        assert main(["oracle", "--only", "matrix_inequalities[k=2]", "--seed", "1", "--out", str(out)]) == 0
        assert "[PASS] matrix_inequalities[k=2]" in capsys.readouterr().out
        assert out.read_text(encoding="utf-8").startswith("check,key,value\n")

    @pytest.mark.slow
    def test_first_figure(self, tmp_path):
        out, svg = tmp_path / "fig1.csv", tmp_path / "fig1.svg"
        assert main(["sweep", "--figure", "1", "--out", str(out), "--svg", str(svg)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 12
        assert svg.read_text(encoding="utf-8").count('id="series-') == 4


def finite_column(rows, key):
    return [row.series().get(key) for row in rows if row.series().get(key) is not None]


def non_decreasing(values):
    return all(b >= a - 1e-6 for a, b in zip(values, values[1:]))


@pytest.mark.slow
class TestFigureSweeps:

    def test_rates_versus_snr(self):
        rows = run_sweep(figure_spec(1))
        for row in rows:
            assert all(v >= 0.0 for v in row.series().values() if v is not None)
            assert row.r_mmse <= row.r_ub + 1e-6
            assert all(v <= row.r_ub + 1e-6 for v in row.r_qci.values() if v is not None)
            if row.axis_value <= 10.0:
                assert row.r_qci[4] > row.r_mmse
        assert non_decreasing(finite_column(rows, "ub"))
        assert non_decreasing(finite_column(rows, "mmse"))

    def test_rates_versus_budget(self):
        spec = figure_spec(2)
        rows = run_sweep(spec)
        for key in ("ub", "qci-B4", "qci-B8", "mmse"):
            assert non_decreasing(finite_column(rows, key)), key
        last = rows[-1]
        assert last.r_ub >= 0.95 * last.limits["capacity"]
        cfg = ChannelConfig(spec.fixed.dims, spec.fixed.sigma2, last.axis_value)
        assert last.r_mmse == pytest.approx(mmse_limits(cfg).limit_large_C, abs=1e-2)

    def test_rates_versus_relay_antennas(self):
        rows = run_sweep(figure_spec(3))
        assert non_decreasing(finite_column(rows, "mmse"))
        gaps = [row.r_ub - row.r_mmse for row in rows]
        assert all(g >= -1e-6 for g in gaps)
        assert gaps[-1] < gaps[0]
