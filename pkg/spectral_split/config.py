"""配置数据类：默认值统一来自 _conf_schema.json"""

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .constants import ALL_THEOREMS, EXACT_ALWAYS, EXACT_ON_OVERLAP, EXHAUSTIVE_MAX_N
from .errors import ParameterOutOfRange, SizeCap
from .utils import parse_fraction

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "_conf_schema.json")


def load_schema_defaults() -> Dict:
    """读取配置 schema 中每一项的默认值"""
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        schema = json.load(f)
    return {key: item.get("default") for key, item in schema.items()}


SCHEMA_DEFAULTS = load_schema_defaults()


def _get(config: dict, key: str):
    return config.get(key, SCHEMA_DEFAULTS[key])


@dataclass(frozen=True)
class SpectralSettings:
    """谱计算参数"""
    enclosure_width: Fraction
    max_iterations: int
    exact_size_cap: int
    positivity_floor: float
    witness_escalations: int

    @classmethod
    def from_dict(cls, config: dict) -> "SpectralSettings":
        """从配置字典创建 SpectralSettings 实例"""
        settings = cls(
            enclosure_width=parse_fraction(_get(config, "enclosure_width")),
            max_iterations=int(_get(config, "max_iterations")),
            exact_size_cap=int(_get(config, "exact_size_cap")),
            positivity_floor=float(_get(config, "positivity_floor")),
            witness_escalations=int(_get(config, "witness_escalations")),
        )
        if settings.enclosure_width <= 0:
            raise ParameterOutOfRange(f"enclosure_width 必须为正数: {settings.enclosure_width}")
        if settings.max_iterations < 1:
            raise ParameterOutOfRange(f"max_iterations 必须 ≥ 1: {settings.max_iterations}")
        return settings


DEFAULT_SETTINGS = SpectralSettings.from_dict({})


@dataclass(frozen=True)
class CampaignConfig:
    """定理验证任务配置"""
    max_n: int
    theorems: Tuple[str, ...]
    random_samples: int
    random_n_range: Tuple[int, int]
    expand_n_range: Tuple[int, int]
    expand_partition_samples: int
    edge_prob: Fraction
    seed: int
    exact_mode: str
    jobs: int
    chunk_size: int
    record_timing: bool
    spectral: SpectralSettings = field(default=DEFAULT_SETTINGS)

    @classmethod
    def from_dict(cls, config: dict) -> "CampaignConfig":
        """从配置字典创建 CampaignConfig 实例，并做合法性检查"""
        theorems = _get(config, "theorems")
        if isinstance(theorems, str):
            theorems = list(ALL_THEOREMS) if theorems == "all" else theorems.split(",")
        campaign = cls(
            max_n=int(_get(config, "max_n")),
            theorems=tuple(t.strip() for t in theorems if t.strip()),
            random_samples=int(_get(config, "random_samples")),
            random_n_range=_int_pair(_get(config, "random_n_range"), "random_n_range"),
            expand_n_range=_int_pair(_get(config, "expand_n_range"), "expand_n_range"),
            expand_partition_samples=int(_get(config, "expand_partition_samples")),
            edge_prob=parse_fraction(_get(config, "edge_prob")),
            seed=int(_get(config, "seed")),
            exact_mode=str(_get(config, "exact_mode")),
            jobs=int(_get(config, "jobs")),
            chunk_size=int(_get(config, "chunk_size")),
            record_timing=bool(_get(config, "record_timing")),
            spectral=SpectralSettings.from_dict(config),
        )
        campaign.validate()
        return campaign

    def validate(self) -> None:
        if self.max_n > EXHAUSTIVE_MAX_N:
            raise SizeCap(f"穷举上限为 n ≤ {EXHAUSTIVE_MAX_N}，收到 max_n={self.max_n}")
        if self.max_n < 1:
            raise ParameterOutOfRange(f"max_n 必须 ≥ 1: {self.max_n}")
        unknown = [t for t in self.theorems if t not in ALL_THEOREMS]
        if unknown:
            raise ParameterOutOfRange(f"未知定理: {', '.join(unknown)}")
        if self.exact_mode not in (EXACT_ALWAYS, EXACT_ON_OVERLAP):
            raise ParameterOutOfRange(f"未知精确模式: {self.exact_mode}")
        if not 0 < self.edge_prob < 1:
            raise ParameterOutOfRange(f"edge_prob 必须在 (0, 1) 内: {self.edge_prob}")
        if self.random_samples < 0 or self.jobs < 1 or self.chunk_size < 1:
            raise ParameterOutOfRange("random_samples ≥ 0, jobs ≥ 1, chunk_size ≥ 1")
        if self.seed < 0:
            raise ParameterOutOfRange(f"seed 必须为非负整数: {self.seed}")
        lo, hi = self.random_n_range
        if lo < 2 or hi < lo:
            raise ParameterOutOfRange(f"random_n_range 不合法: {self.random_n_range}")
        lo, hi = self.expand_n_range
        if lo < 10 or hi < lo:
            raise ParameterOutOfRange(f"expand_n_range 至少需要 10 个顶点: {self.expand_n_range}")

    def to_dict(self) -> Dict:
        """报告中记录的配置，只含影响结果的字段"""
        return {
            "max_n": self.max_n,
            "theorems": list(self.theorems),
            "random_samples": self.random_samples,
            "random_n_range": list(self.random_n_range),
            "expand_n_range": list(self.expand_n_range),
            "expand_partition_samples": self.expand_partition_samples,
            "edge_prob": str(self.edge_prob),
            "seed": self.seed,
            "exact_mode": self.exact_mode,
            "enclosure_width": str(self.spectral.enclosure_width),
        }


def _int_pair(value, name: str) -> Tuple[int, int]:
    if isinstance(value, str):
        value = value.replace("-", ",").split(",")
    items: List[int] = [int(v) for v in value]
    if len(items) != 2:
        raise ParameterOutOfRange(f"{name} 需要两个整数: {value}")
    return items[0], items[1]
