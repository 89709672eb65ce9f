"""缓存：按 graph6 记录图的谱分析结果，避免同一基图被重复计算"""

from collections import OrderedDict
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .log import logger


@dataclass
class CacheEntry:
    """缓存条目"""
    data: Any
    hits: int = 0


class SpectralCache:
    """有容量上限的缓存，超出时淘汰最久未使用的条目"""

    def __init__(self, max_entries: int = 4096):
        self.max_entries = max_entries
        self.entries: "OrderedDict[str, CacheEntry]" = OrderedDict()
        self.hits = 0
        self.misses = 0

    def get(self, key: str) -> Optional[Any]:
        entry = self.entries.get(key)
        if entry is None:
            self.misses += 1
            return None
        entry.hits += 1
        self.hits += 1
        self.entries.move_to_end(key)
        return entry.data

    def put(self, key: str, data: Any) -> None:
        self.entries[key] = CacheEntry(data=data)
        self.entries.move_to_end(key)
        while len(self.entries) > self.max_entries:
            self.entries.popitem(last=False)

    def get_or_compute(self, key: str, compute: Callable[[], Any]) -> Any:
        """命中则返回缓存数据，否则计算后存入"""
        data = self.get(key)
        if data is None:
            data = compute()
            self.put(key, data)
        return data

    def clear(self) -> None:
        logger.debug(f"谱半径验证：清空缓存，命中 {self.hits} 次，未命中 {self.misses} 次")
        self.entries.clear()
        self.hits = 0
        self.misses = 0
