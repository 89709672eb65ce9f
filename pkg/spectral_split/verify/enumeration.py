"""图的来源：穷举带标号连通图、随机连通图、带高度数中心的随机图"""

from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np

from ..constants import EXHAUSTIVE_MAX_N
from ..errors import ParameterOutOfRange, RejectionCap, SizeCap
from ..graph_core import Graph, build_graph, is_connected

# 随机图拒绝采样的最大尝试次数
MAX_REJECTIONS = 10000


def vertex_pairs(n: int) -> List[Tuple[int, int]]:
    """上三角顶点对，按列优先：(0,1), (0,2), (1,2), (0,3), ...（与 graph6 的位序一致）"""
    return [(u, w) for w in range(n) for u in range(w)]


def mask_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def _check_exhaustive_n(n: int) -> None:
    if n < 1:
        raise ParameterOutOfRange(f"顶点数必须 ≥ 1: {n}")
    if n > EXHAUSTIVE_MAX_N:
        raise SizeCap(f"穷举上限为 n ≤ {EXHAUSTIVE_MAX_N}，收到 n={n}")


def enumerate_mask_range(n: int, start: int, stop: int) -> Iterator[Tuple[int, Graph]]:
    """位掩码 [start, stop) 内的连通图，连同其掩码一起输出"""
    _check_exhaustive_n(n)
    pairs = vertex_pairs(n)
    for mask in range(start, min(stop, mask_count(n))):
        # 连通图至少有 n - 1 条边
        if bin(mask).count("1") < n - 1:
            continue
        g = build_graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            yield mask, g


def enumerate_connected(n: int) -> Iterator[Graph]:
    """按上三角位掩码顺序输出 n 个顶点上的全部带标号连通图（不做同构去重）"""
    _check_exhaustive_n(n)
    for _, g in enumerate_mask_range(n, 0, mask_count(n)):
        yield g


def _check_probability(edge_prob: Fraction) -> float:
    if not 0 < edge_prob < 1:
        raise ParameterOutOfRange(f"edge_prob 必须在 (0, 1) 内: {edge_prob}")
    return float(edge_prob)


def random_connected_graph(n: int, edge_prob: Fraction, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi 采样，拒绝不连通的结果"""
    if n < 2:
        raise ParameterOutOfRange(f"随机图至少需要 2 个顶点: {n}")
    p = _check_probability(edge_prob)
    pairs = vertex_pairs(n)
    for _ in range(MAX_REJECTIONS):
        draws = rng.random(len(pairs)) < p
        g = build_graph(n, [pair for pair, keep in zip(pairs, draws) if keep])
        if is_connected(g):
            return g
    raise RejectionCap(f"{MAX_REJECTIONS} 次采样都未得到连通图 (n={n}, p={edge_prob})")


def random_hub_graph(n: int, min_degree: int, edge_prob: Fraction, rng: np.random.Generator) -> Graph:
    """
    0 号顶点为中心，至少与 min_degree 个顶点相邻；其余边按 Erdős–Rényi 采样

    同样拒绝不连通的结果。
    """
    if not 1 <= min_degree <= n - 1:
        raise ParameterOutOfRange(f"中心度数 {min_degree} 不能超过 n - 1 = {n - 1}")
    p = _check_probability(edge_prob)
    pairs = vertex_pairs(n)
    for _ in range(MAX_REJECTIONS):
        hub = set(int(u) for u in rng.choice(np.arange(1, n), size=min_degree, replace=False))
        draws = rng.random(len(pairs)) < p
        edges = [pair for pair, keep in zip(pairs, draws) if keep or (pair[0] == 0 and pair[1] in hub)]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise RejectionCap(f"{MAX_REJECTIONS} 次采样都未得到连通图 (n={n}, p={edge_prob})")
