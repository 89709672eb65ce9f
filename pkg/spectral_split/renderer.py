"""报告渲染器：执行验证任务、汇总各定理结果、输出 JSON 报告与摘要行"""

import json
import os
from typing import Dict, Optional

from .config import CampaignConfig
from .constants import REPORT_SCHEMA_VERSION
from .log import logger
from .verify import CampaignManager, VerificationReport
from .verify.tally import TheoremTally


class ReportRenderer:
    """报告渲染器，负责把 VerificationReport 转换为稳定的 JSON 文档"""

    def __init__(self, config: CampaignConfig, manager: Optional[CampaignManager] = None):
        self.config = config
        self.manager = manager or CampaignManager(config)
        self.report: Optional[VerificationReport] = None

    async def generate(self) -> Dict:
        """执行验证任务并生成报告字典"""
        self.report = await self.manager.run()
        logger.info(
            f"谱半径验证：验证完成，实例 {self.report.instances}，违例 {self.report.violations}，"
            f"耗时 {self.report.elapsed:.1f}s"
        )
        return self.build(self.report)

    def build(self, report: VerificationReport) -> Dict:
        """整理报告；只有 record_timing 打开时才写入耗时，保证同种子报告逐字节一致"""
        theorems = {name: self._theorem_section(tally) for name, tally in report.tallies.items()}
        document = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "config": self.config.to_dict(),
            "summary": {
                "instances": report.instances,
                "violations": report.violations,
                "equality_exceptions": report.exceptions,
                "errors": report.errors,
                "verified": report.violations == 0,
            },
            "theorems": theorems,
            "chunk_errors": report.chunk_errors,
        }
        if self.config.record_timing:
            document["summary"]["wall_time"] = round(report.elapsed, 3)
        return document

    def _theorem_section(self, tally: TheoremTally) -> Dict:
        section = {
            "instances": tally.instances,
            "strict": tally.strict,
            "violations": tally.violations,
            "equality_exceptions": tally.exceptions,
            "recorded_exceptions": tally.recorded,
            "errors": tally.errors,
            "histograms": tally.histograms,
            "counters": tally.counters,
        }
        if self.config.record_timing:
            section["wall_time"] = round(tally.wall_time, 3)
        return section

    @staticmethod
    def to_json(document: Dict) -> str:
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def write(self, document: Dict, path: str) -> None:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json(document))
        logger.info(f"谱半径验证：报告已写入 {path}")

    @staticmethod
    def summary_line(report: VerificationReport) -> str:
        """一行人类可读摘要：实例、违例、例外、见证情形分布、耗时"""
        cases = {}
        for tally in report.tallies.values():
            cases.update(tally.histograms.get("witness_case", {}))
        histogram = " ".join(f"{case}:{cases[case]}" for case in sorted(cases))
        parts = [
            f"instances={report.instances}",
            f"violations={report.violations}",
            f"equality-exceptions={report.exceptions}",
            f"errors={report.errors}",
        ]
        if histogram:
            parts.append(f"cases=[{histogram}]")
        parts.append(f"elapsed={report.elapsed:.1f}s")
        return " ".join(parts)
