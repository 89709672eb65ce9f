"""单个定理的验证结果累加器，以及各定理检查共享的上下文"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..cache import SpectralCache
from ..config import DEFAULT_SETTINGS, SpectralSettings
from ..constants import EQUAL, EXACT_ON_OVERLAP, OUTCOME_EXCEPTION, OUTCOME_STRICT, OUTCOME_VIOLATION
from ..graph_core import Graph, to_graph6
from ..log import logger
from ..spectral import RhoOrdering, SpectralResult, cached_spectral_radius, rho_compare
from ..utils import format_fraction


@dataclass
class CheckContext:
    """一个工作进程内的检查上下文：谱参数、精确模式与缓存"""
    settings: SpectralSettings = DEFAULT_SETTINGS
    exact_mode: str = EXACT_ON_OVERLAP
    cache: SpectralCache = field(default_factory=SpectralCache)

    def radius(self, g: Graph) -> SpectralResult:
        return cached_spectral_radius(g, self.settings, self.cache)

    def compare(self, g1: Graph, g2: Graph) -> RhoOrdering:
        return rho_compare(g1, g2, self.settings, self.exact_mode, self.cache)


def ordering_record(graph: Graph, spec: str, ordering: Optional[RhoOrdering], **extra) -> Dict:
    """可独立复现的实例记录：graph6、变换参数、两侧区间与判定依据"""
    record = {"graph6": to_graph6(graph), "spec": spec}
    if ordering is not None:
        record.update({
            "relation": ordering.relation,
            "certificate": ordering.certificate,
            "left": [format_fraction(x) for x in ordering.left],
            "right": [format_fraction(x) for x in ordering.right],
        })
    record.update(extra)
    return record


@dataclass
class TheoremTally:
    """某个定理在一批图上的累计结果"""
    theorem: str
    instances: int = 0
    strict: int = 0
    exceptions: List[Dict] = field(default_factory=list)
    violations: List[Dict] = field(default_factory=list)
    errors: List[Dict] = field(default_factory=list)
    recorded: List[Dict] = field(default_factory=list)
    histograms: Dict[str, Dict[str, int]] = field(default_factory=dict)
    counters: Dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def bump(self, histogram: str, key: str, amount: int = 1) -> None:
        bins = self.histograms.setdefault(histogram, {})
        bins[key] = bins.get(key, 0) + amount

    def count(self, counter: str, amount: int = 1) -> None:
        self.counters[counter] = self.counters.get(counter, 0) + amount

    def classify(
        self,
        graph: Graph,
        spec: str,
        ordering: RhoOrdering,
        expected: str,
        exception_family: Optional[str] = None,
    ) -> str:
        """
        按 严格 / 例外处相等 / 违例 分类一个实例

        exception_family 非空表示 graph 属于定理排除的例外图族，此时只接受相等，
        其余关系一律记为违例。
        """
        self.instances += 1
        if exception_family is None and ordering.relation == expected:
            self.strict += 1
            return OUTCOME_STRICT
        if exception_family is not None and ordering.relation == EQUAL:
            self.exceptions.append(ordering_record(graph, spec, ordering, family=exception_family))
            self.bump("exceptions", exception_family)
            return OUTCOME_EXCEPTION
        self.violation(graph, spec, ordering, expected=expected, family=exception_family)
        return OUTCOME_VIOLATION

    def violation(self, graph: Graph, spec: str, ordering: Optional[RhoOrdering], **extra) -> None:
        record = ordering_record(graph, spec, ordering, **extra)
        logger.error(f"谱半径验证：{self.theorem} 发现违例 {record['graph6']} {spec}: {record.get('relation', extra)}")
        self.violations.append(record)

    def error(self, graph: Graph, spec: str, exc: Exception) -> None:
        logger.error(f"谱半径验证：{self.theorem} 检查 {to_graph6(graph)} {spec} 失败: {exc}", exc_info=True)
        self.errors.append({
            "graph6": to_graph6(graph),
            "spec": spec,
            "error": type(exc).__name__,
            "message": str(exc),
        })

    def merge(self, other: "TheoremTally") -> None:
        """按调用顺序合并另一批结果；调用方保证顺序确定"""
        self.instances += other.instances
        self.strict += other.strict
        self.exceptions.extend(other.exceptions)
        self.violations.extend(other.violations)
        self.errors.extend(other.errors)
        self.recorded.extend(other.recorded)
        for name, bins in other.histograms.items():
            for key, amount in bins.items():
                self.bump(name, key, amount)
        for name, amount in other.counters.items():
            self.count(name, amount)
        self.wall_time += other.wall_time
