# This Python file uses the following encoding: utf-8

"""
命令行入口

    ib-relay sweep  --figure 1 --out fig1.csv --svg fig1.svg
    ib-relay sweep  --axis snr_db --from 0 --to 30 --step 5 --k 2 --m 2 --capacity-bits 40
    ib-relay point  --k 2 --m 4 --snr-db 10 --capacity-bits 8
    ib-relay oracle --level quick --seed 1
"""

import argparse
import io
import csv
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence
from ..bounds import capacity, solve_water_level, ub_limits
from ..core import OracleLevel, Scheme, SweepAxis
from ..events import Event, EventBus, EventType
from ..models import ChannelConfig, SweepSpec
from ..oracle import run_oracle_suite
from ..schemes import SchemeFactory
from ..utils.config import Config
from ..utils.logger import Logger, get_logger
from ..utils.exceptions import ConfigError, IbRelayError
from .emitters import emit_csv, emit_svg, format_value, write_text
from .presets import axis_values, figure_spec
from .sweep import run_sweep

logger = get_logger(__name__)

DEFAULTS: Dict[str, Any] = {
    "k": 2,
    "m": 2,
    "snr-db": 10.0,
    "capacity-bits": 40.0,
    "scheme": "ub,qci,mmse",
    "qci-bits": "4,8",
    "axis": SweepAxis.SNR_DB.value,
    "samples": 0,
    "level": OracleLevel.QUICK.name.lower(),
}


def read_key_value_file(path: str) -> Dict[str, str]:
    """
    读取 key=value 配置文件（# 开头为注释）

    Args:
        path: 文件路径

    Returns:
        键值字典

    Raises:
        ConfigError: 文件不可读或格式错误
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ConfigError(f"无法读取配置文件 {path}: {e}", config_key=path) from e
    values: Dict[str, str] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{number} 缺少 '=': {raw}", config_key=path)
        key, value = (part.strip() for part in line.split("=", 1))
        values[key.replace("_", "-") if "." not in key else key] = value
    return values


def _parse_scalar(text: str) -> Any:
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


class Options:
    """合并命令行参数、配置文件与默认值（命令行优先）"""

    def __init__(self, args: argparse.Namespace, file_values: Dict[str, str]):
        self._args = args
        self._file = file_values

    def raw(self, key: str) -> Any:
        attr = "from_" if key == "from" else key.replace("-", "_")
        value = getattr(self._args, attr, None)
        if value is not None:
            return value
        if key in self._file:
            return self._file[key]
        return DEFAULTS.get(key)

    def get(self, key: str, cast: Callable[[Any], Any]) -> Any:
        value = self.raw(key)
        if value is None:
            return None
        try:
            return cast(value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"参数 --{key} 无效: {value!r}", config_key=key) from e

    def seed(self) -> int:
        value = self.raw("seed")
        if value is None:
            value = os.environ.get("IBRELAY_SEED", 0)
        try:
            return int(value)
        except ValueError as e:
            raise ConfigError(f"种子无效: {value!r}", config_key="seed") from e

    def schemes(self) -> tuple:
        names = [n.strip() for n in str(self.raw("scheme")).split(",") if n.strip()]
        try:
            return tuple(Scheme(n) for n in names)
        except ValueError as e:
            raise ConfigError(f"未知方案: {names}（可选 ub、qci、mmse）", config_key="scheme") from e

    def qci_bits(self) -> tuple:
        return self.get("qci-bits", lambda v: tuple(int(b) for b in str(v).split(",") if b.strip()))

    def channel(self) -> ChannelConfig:
        return ChannelConfig.from_snr_db(self.get("k", int), self.get("m", int),
                                         self.get("snr-db", float), self.get("capacity-bits", float))


def _apply_config_overrides(file_values: Dict[str, str]) -> None:
    """带点的键（如 oracle.n_jobs）写入全局配置"""
    config = Config()
    for key, value in file_values.items():
        if "." in key:
            config.set(key, _parse_scalar(value))
    level = config.get("logging.level")
    if level:
        Logger().set_level(str(level))


def _log_event(event: Event) -> None:
    logger.info(f"{event.type.value}: {event.data}")


def _build_sweep_spec(options: Options) -> SweepSpec:
    figure = options.get("figure", int)
    if figure is not None:
        spec = figure_spec(figure)
        return SweepSpec(spec.axis, spec.values, spec.fixed, spec.schemes, spec.qci_bits,
                         options.get("samples", int), options.seed())
    try:
        axis = SweepAxis(str(options.raw("axis")))
    except ValueError as e:
        raise ConfigError(f"未知扫描轴: {options.raw('axis')}", config_key="axis") from e
    for key in ("from", "to", "step"):
        if options.raw(key) is None:
            raise ConfigError(f"扫描需要 --{key}", config_key=key)
    values = axis_values(options.get("from", float), options.get("to", float), options.get("step", float))
    return SweepSpec(axis, values, options.channel(), options.schemes(), options.qci_bits(),
                     options.get("samples", int), options.seed())


def command_sweep(options: Options, event_bus: EventBus) -> int:
    spec = _build_sweep_spec(options)
    rows = run_sweep(spec, event_bus)
    emit_csv(rows, options.raw("out") or "-", spec)
    svg = options.raw("svg")
    if svg:
        emit_svg(rows, svg, spec)
    return 0


def tabulate_point(cfg: ChannelConfig, schemes: Sequence[Scheme], qci_bits: Sequence[int]) -> List[tuple]:
    """
    单个配置下的全部速率与极限

    Returns:
        (名称, 数值) 列表，不可行为 None
    """
    entries: List[tuple] = [("capacity", capacity(cfg))]
    solution = solve_water_level(cfg)
    entries.append(("water_level_log2", solution.log2_nu))
    for name, value in ub_limits(cfg).to_dict().items():
        entries.append((f"ub.{name}", value))
    for strategy in SchemeFactory.create_all(schemes, qci_bits):
        strategy.check_supported(cfg)
        entries.append((f"r_{strategy.label}", strategy.evaluate(cfg)))
        if strategy.scheme is not Scheme.UB:
            for name, value in strategy.limits(cfg).items():
                key = f"{strategy.scheme.value}.{name}"
                if key not in dict(entries):
                    entries.append((key, value))
    return entries


def command_point(options: Options, event_bus: EventBus) -> int:
    cfg = options.channel()
    entries = tabulate_point(cfg, options.schemes(), options.qci_bits())
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["quantity", "value"])
    for name, value in entries:
        writer.writerow([name, format_value(value)])
    write_text(buffer.getvalue(), options.raw("out") or "-")
    return 0


def command_oracle(options: Options, event_bus: EventBus) -> int:
    try:
        level = OracleLevel.from_name(str(options.raw("level")))
    except ValueError as e:
        raise ConfigError(str(e), config_key="level") from e
    samples = options.get("samples", int)
    if samples:
        Config().set("oracle.full_samples" if level == OracleLevel.FULL else "oracle.quick_samples", samples)
    report = run_oracle_suite(level, options.seed(), event_bus, only=options.raw("only"))
    sys.stdout.write(report.to_text())
    out = options.raw("out")
    if out:
        write_text(report.to_csv(), out)
    return report.exit_status


COMMANDS = {"sweep": command_sweep, "point": command_point, "oracle": command_oracle}


def build_parser() -> argparse.ArgumentParser:
    """命令行解析器；未给出的参数为 None，便于与配置文件合并"""
    parser = argparse.ArgumentParser(prog="ib-relay", description="MIMO 中继信息瓶颈速率界的计算与校验")
    parser.add_argument("--config", help="key=value 配置文件，命令行参数优先")

    channel = argparse.ArgumentParser(add_help=False)
    channel.add_argument("--k", type=int, help="发射维度 K")
    channel.add_argument("--m", type=int, help="中继天线数 M")
    channel.add_argument("--snr-db", type=float, help="信噪比 (dB)")
    channel.add_argument("--capacity-bits", type=float, help="瓶颈容量 C (比特/复维度)")
    channel.add_argument("--scheme", help="逗号分隔的方案: ub,qci,mmse")
    channel.add_argument("--qci-bits", help="逗号分隔的 QCI 反馈比特数 B")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="随机种子（缺省取 IBRELAY_SEED）")
    common.add_argument("--samples", type=int, help="蒙特卡洛样本数")
    common.add_argument("--out", help="输出文件，缺省为标准输出")

    subparsers = parser.add_subparsers(dest="command", required=True)
    sweep = subparsers.add_parser("sweep", parents=[channel, common], help="参数扫描")
    sweep.add_argument("--figure", type=int, choices=(1, 2, 3), help="预置扫描")
    sweep.add_argument("--axis", help="扫描轴: snr_db, capacity_bits, antennas_m")
    sweep.add_argument("--from", dest="from_", type=float, help="扫描起点")
    sweep.add_argument("--to", type=float, help="扫描终点")
    sweep.add_argument("--step", type=float, help="扫描步长")
    sweep.add_argument("--svg", help="SVG 曲线图输出路径")

    subparsers.add_parser("point", parents=[channel, common], help="单个配置的速率与极限")

    oracle = subparsers.add_parser("oracle", parents=[common], help="蒙特卡洛校验")
    oracle.add_argument("--level", choices=("quick", "full"), help="校验级别")
    oracle.add_argument("--only", help="只运行名称以此开头的校验")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Args:
        argv: 命令行参数，缺省为 sys.argv[1:]

    Returns:
        退出状态（0 成功，1 出错或校验失败）
    """
    args = build_parser().parse_args(argv)
    try:
        file_values = read_key_value_file(args.config) if args.config else {}
        _apply_config_overrides(file_values)
        options = Options(args, file_values)
        event_bus = EventBus()
        for event_type in EventType:
            event_bus.subscribe(event_type, _log_event)
        return COMMANDS[args.command](options, event_bus)
    except IbRelayError as e:
        logger.error(str(e))
        sys.stderr.write(f"ib-relay: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
