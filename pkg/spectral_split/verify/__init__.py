"""验证任务编排器：把穷举与随机抽样切成块，并发执行并按块序合并结果"""

import asyncio
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from ..config import CampaignConfig, SpectralSettings
from ..constants import (
    THEOREM_EXPAND,
    THEOREM_LEMMA_DEG4,
    THEOREM_PF_MONOTONE,
    THEOREM_SPLIT_ADJACENT,
    THEOREM_SPLIT_NONADJACENT,
    THEOREM_SUBDIVISION,
)
from ..graph_core import Graph
from ..log import logger
from .enumeration import (
    enumerate_connected,
    enumerate_mask_range,
    mask_count,
    random_connected_graph,
    random_hub_graph,
)
from .expand import Partition, check_expand_pairs, check_expand_sample, record_star_expansion, sample_partitions
from .lemmas import check_lemma_deg4, check_pf_monotone
from .recognize import recognize
from .split import check_split_adjacent, check_split_nonadjacent
from .subdivision import check_subdivision
from .tally import CheckContext, TheoremTally

# 穷举图上逐个执行的检查
EXHAUSTIVE_CHECKS: Dict[str, Callable[[Graph, TheoremTally, CheckContext], None]] = {
    THEOREM_SUBDIVISION: check_subdivision,
    THEOREM_SPLIT_ADJACENT: check_split_adjacent,
    THEOREM_SPLIT_NONADJACENT: check_split_nonadjacent,
    THEOREM_EXPAND: check_expand_pairs,
    THEOREM_LEMMA_DEG4: check_lemma_deg4,
}

TASK_EXHAUSTIVE = "exhaustive"
TASK_EXPAND_SAMPLE = "expand_sample"
TASK_EXPAND_STAR = "expand_star"
TASK_PF_SAMPLE = "pf_sample"

# 随机图每块的图数
RANDOM_CHUNK_GRAPHS = 8
# k = 3 扩张要求中心度数 ≥ 9
EXPAND_K = 3


@dataclass(frozen=True)
class ChunkTask:
    """一个可在子进程执行的工作块"""
    index: int
    kind: str
    n: int = 0
    start: int = 0
    stop: int = 0
    graphs: Tuple[Graph, ...] = ()
    partitions: Tuple[Tuple[Partition, ...], ...] = ()


@dataclass
class VerificationReport:
    """一次验证任务的完整结果"""
    config: CampaignConfig
    tallies: Dict[str, TheoremTally]
    chunk_errors: List[Dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def instances(self) -> int:
        return sum(t.instances for t in self.tallies.values())

    @property
    def violations(self) -> int:
        return sum(len(t.violations) for t in self.tallies.values())

    @property
    def exceptions(self) -> int:
        return sum(len(t.exceptions) for t in self.tallies.values())

    @property
    def errors(self) -> int:
        return sum(len(t.errors) for t in self.tallies.values()) + len(self.chunk_errors)


def new_tally(theorem: str) -> TheoremTally:
    tally = TheoremTally(theorem=theorem)
    if theorem == THEOREM_SPLIT_ADJACENT:
        # 四种情形都要出现在报告中，即使计数为 0
        for case in ("1", "2", "3", "4"):
            tally.bump("witness_case", case, 0)
    return tally


# 每个工作进程一份上下文，缓存跨块复用
_WORKER_CONTEXTS: Dict[Tuple[SpectralSettings, str], CheckContext] = {}


def _worker_context(config: CampaignConfig) -> CheckContext:
    key = (config.spectral, config.exact_mode)
    if key not in _WORKER_CONTEXTS:
        _WORKER_CONTEXTS[key] = CheckContext(settings=config.spectral, exact_mode=config.exact_mode)
    return _WORKER_CONTEXTS[key]


def run_chunk(task: ChunkTask, config: CampaignConfig) -> Dict[str, TheoremTally]:
    """执行一个工作块；单个实例的异常已在各检查内部记录"""
    context = _worker_context(config)
    tallies = {theorem: new_tally(theorem) for theorem in config.theorems}

    if task.kind == TASK_EXHAUSTIVE:
        checks = [(t, EXHAUSTIVE_CHECKS[t]) for t in config.theorems if t in EXHAUSTIVE_CHECKS]
        for _, g in enumerate_mask_range(task.n, task.start, task.stop):
            for theorem, check in checks:
                started = time.perf_counter()
                check(g, tallies[theorem], context)
                tallies[theorem].wall_time += time.perf_counter() - started
    elif task.kind == TASK_EXPAND_SAMPLE:
        for g, partitions in zip(task.graphs, task.partitions):
            check_expand_sample(g, 0, partitions, tallies[THEOREM_EXPAND], context)
    elif task.kind == TASK_EXPAND_STAR:
        record_star_expansion(tallies[THEOREM_EXPAND], context, EXPAND_K)
    elif task.kind == TASK_PF_SAMPLE:
        for g in task.graphs:
            check_pf_monotone(g, tallies[THEOREM_PF_MONOTONE], context)
    return tallies


def _guarded_chunk(task: ChunkTask, config: CampaignConfig):
    """子进程中执行一个块；整块失败时把异常作为结果带回父进程"""
    try:
        return run_chunk(task, config)
    except Exception as e:
        return e


class CampaignManager:
    """验证任务编排器：切块、并发执行、按块序确定性合并"""

    def __init__(self, config: CampaignConfig, semaphore: Optional[asyncio.Semaphore] = None):
        self.config = config
        self.semaphore = semaphore

    def build_tasks(self) -> List[ChunkTask]:
        """穷举块在前、随机块在后；随机图全部在父进程由同一个种子生成"""
        config = self.config
        tasks: List[ChunkTask] = []
        if any(t in EXHAUSTIVE_CHECKS for t in config.theorems):
            for n in range(1, config.max_n + 1):
                for start in range(0, mask_count(n), config.chunk_size):
                    tasks.append(ChunkTask(len(tasks), TASK_EXHAUSTIVE, n, start, start + config.chunk_size))

        if THEOREM_EXPAND in config.theorems:
            tasks.append(ChunkTask(len(tasks), TASK_EXPAND_STAR))
        if config.random_samples == 0:
            return tasks

        rng = np.random.default_rng(config.seed)
        if THEOREM_EXPAND in config.theorems:
            graphs, partitions = self._expand_samples(rng)
            for i in range(0, len(graphs), RANDOM_CHUNK_GRAPHS):
                tasks.append(ChunkTask(
                    len(tasks),
                    TASK_EXPAND_SAMPLE,
                    graphs=tuple(graphs[i:i + RANDOM_CHUNK_GRAPHS]),
                    partitions=tuple(partitions[i:i + RANDOM_CHUNK_GRAPHS]),
                ))
        if THEOREM_PF_MONOTONE in config.theorems:
            lo, hi = config.random_n_range
            graphs = [
                random_connected_graph(int(rng.integers(lo, hi + 1)), config.edge_prob, rng)
                for _ in range(config.random_samples)
            ]
            for i in range(0, len(graphs), RANDOM_CHUNK_GRAPHS):
                tasks.append(ChunkTask(len(tasks), TASK_PF_SAMPLE, graphs=tuple(graphs[i:i + RANDOM_CHUNK_GRAPHS])))
        return tasks

    def _expand_samples(self, rng: np.random.Generator):
        config = self.config
        lo, hi = config.expand_n_range
        graphs, partitions = [], []
        for _ in range(config.random_samples):
            g = random_hub_graph(int(rng.integers(lo, hi + 1)), EXPAND_K * EXPAND_K, config.edge_prob, rng)
            graphs.append(g)
            partitions.append(tuple(
                sample_partitions(g.neighbors(0), EXPAND_K, config.expand_partition_samples, rng)
            ))
        return graphs, partitions

    async def run(self) -> VerificationReport:
        """并发执行所有工作块并合并"""
        if self.semaphore is None:
            self.semaphore = asyncio.Semaphore(self.config.jobs)
        tasks = self.build_tasks()
        started = time.perf_counter()
        logger.info(f"谱半径验证：开始验证 {', '.join(self.config.theorems)}，共 {len(tasks)} 个工作块")

        if self.config.jobs > 1:
            raw_results = await asyncio.to_thread(self._run_parallel, tasks)
        else:
            raw_results = await asyncio.gather(*(self._run_task(task) for task in tasks), return_exceptions=True)

        report = self._process_results(tasks, raw_results)
        report.elapsed = time.perf_counter() - started
        for theorem, tally in report.tallies.items():
            logger.info(
                f"谱半径验证：{theorem} 完成，实例 {tally.instances}，违例 {len(tally.violations)}，"
                f"例外 {len(tally.exceptions)}，错误 {len(tally.errors)}"
            )
        for context in _WORKER_CONTEXTS.values():
            context.cache.clear()
        return report

    async def _run_task(self, task: ChunkTask) -> Dict[str, TheoremTally]:
        async with self.semaphore:
            return await asyncio.to_thread(run_chunk, task, self.config)

    def _run_parallel(self, tasks: List[ChunkTask]) -> List:
        """joblib 多进程后端执行全部工作块，结果按提交顺序返回"""
        parallel = Parallel(n_jobs=self.config.jobs, backend="multiprocessing")
        return parallel(delayed(_guarded_chunk)(task, self.config) for task in tasks)

    def _process_results(self, tasks: List[ChunkTask], raw_results: List) -> VerificationReport:
        """按块序合并；整块失败时记录错误而不中断"""
        report = VerificationReport(
            config=self.config,
            tallies={theorem: new_tally(theorem) for theorem in self.config.theorems},
        )
        for task, result in zip(tasks, raw_results):
            if isinstance(result, BaseException):
                logger.error(f"谱半径验证：工作块 {task.index} ({task.kind}) 失败: {result}")
                report.chunk_errors.append({
                    "chunk": task.index,
                    "kind": task.kind,
                    "error": type(result).__name__,
                    "message": str(result),
                })
                continue
            for theorem, tally in result.items():
                report.tallies[theorem].merge(tally)
        return report


def run_campaign(config: CampaignConfig) -> VerificationReport:
    """同步入口"""
    return asyncio.run(CampaignManager(config).run())


__all__ = [
    "CampaignManager",
    "ChunkTask",
    "VerificationReport",
    "enumerate_connected",
    "random_connected_graph",
    "random_hub_graph",
    "recognize",
    "run_campaign",
    "run_chunk",
]
