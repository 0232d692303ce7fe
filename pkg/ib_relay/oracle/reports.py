# This Python file uses the following encoding: utf-8

"""
校验报告 - 单项报告与汇总报告的文本/CSV 渲染
"""

import csv
import io
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


@dataclass
class CheckReport:
    """单项校验报告"""

    name: str
    passed: bool = True
    metrics: Dict[str, Any] = field(default_factory=dict)
    messages: List[str] = field(default_factory=list)
    resampled: int = 0
    n_samples: int = 0

    def fail(self, message: str) -> None:
        """记录一条失败原因"""
        self.passed = False
        self.messages.append(message)

    def expect(self, condition: bool, message: str) -> bool:
        """条件不成立时记录失败"""
        if not condition:
            self.fail(message)
        return bool(condition)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"[{status}] {self.name} (n={self.n_samples}, resampled={self.resampled})"]
        for key in sorted(self.metrics):
            lines.append(f"    {key} = {_format_value(self.metrics[key])}")
        for message in self.messages:
            lines.append(f"    ! {message}")
        return "\n".join(lines)

    def to_records(self) -> List[Dict[str, str]]:
        """键值记录（check, key, value）"""
        records = [{"check": self.name, "key": "passed", "value": str(self.passed).lower()},
                   {"check": self.name, "key": "n_samples", "value": str(self.n_samples)},
                   {"check": self.name, "key": "resampled", "value": str(self.resampled)}]
        for key in sorted(self.metrics):
            records.append({"check": self.name, "key": key, "value": _format_value(self.metrics[key])})
        return records


@dataclass
class OracleSuiteReport:
    """校验汇总报告"""

    level: str
    seed: int
    checks: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def get(self, name: str) -> Optional[CheckReport]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def to_text(self) -> str:
        header = f"oracle suite level={self.level} seed={self.seed}"
        body = [c.to_text() for c in self.checks]
        summary = (f"{len(self.checks) - len(self.failed_checks)}/{len(self.checks)} checks passed")
        return "\n".join([header] + body + [summary]) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=["check", "key", "value"], lineterminator="\n")
        writer.writeheader()
        for check in self.checks:
            writer.writerows(check.to_records())
        return buffer.getvalue()
