"""顶点扩张为完全图：k = 2 与相邻分裂等价，k = 3 在随机中心图上抽样"""

from typing import List, Sequence, Tuple

import numpy as np

from ..constants import FAMILY_STAR, LESS
from ..graph_core import Graph, NamedFamily, make_family
from ..transforms import ExpandSpec, SplitSpec, expand_to_complete, split_vertex_adjacent
from .recognize import is_family, recognize
from .split import STAR_4, adjacent_split_specs
from .tally import CheckContext, TheoremTally, ordering_record

Partition = Tuple[Tuple[int, ...], ...]


def check_expand_pairs(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    """k = 2：扩张结果必须与相邻分裂逐边相同，且 ρ 严格下降（K_{1,4} 除外）"""
    specs = list(adjacent_split_specs(g))
    if not specs:
        return

    is_star = is_family(g, FAMILY_STAR, 4)
    for spec in specs:
        expand_spec = ExpandSpec(spec.v, (spec.x_side, spec.y_side))
        try:
            expanded = expand_to_complete(g, expand_spec)
            ordering = context.compare(expanded, g)
            tally.classify(g, str(expand_spec), ordering, LESS, str(STAR_4) if is_star else None)
            if expanded == split_vertex_adjacent(g, SplitSpec(spec.v, spec.x_side, spec.y_side)):
                tally.count("matches_adjacent_split")
            else:
                tally.violation(g, str(expand_spec), ordering, reason="k = 2 的扩张结果与相邻分裂不同")
        except Exception as e:
            tally.error(g, str(expand_spec), e)


def sample_partitions(
    neighbours: Sequence[int],
    k: int,
    count: int,
    rng: np.random.Generator,
) -> List[Partition]:
    """随机抽取 count 个 k 划分，每部分至少 k 个顶点"""
    samples = []
    for _ in range(count):
        order = [int(u) for u in rng.permutation(np.asarray(neighbours))]
        extra = np.bincount(rng.integers(0, k, size=len(order) - k * k), minlength=k)
        parts, start = [], 0
        for size in (k + extra).tolist():
            parts.append(tuple(sorted(order[start:start + size])))
            start += size
        samples.append(tuple(parts))
    return samples


def check_expand_sample(
    g: Graph,
    v: int,
    partitions: Sequence[Partition],
    tally: TheoremTally,
    context: CheckContext,
) -> None:
    """给定若干划分的扩张实例；G 恰为 K_{1,k²} 时只记录结果"""
    family = recognize(g)
    for parts in partitions:
        spec = ExpandSpec(v, tuple(parts))
        excluded = NamedFamily(FAMILY_STAR, len(parts) ** 2)
        try:
            expanded = expand_to_complete(g, spec)
            ordering = context.compare(expanded, g)
            if family == excluded:
                tally.recorded.append(ordering_record(g, str(spec), ordering, family=str(family)))
            else:
                tally.classify(g, str(spec), ordering, LESS)
        except Exception as e:
            tally.error(g, str(spec), e)


def record_star_expansion(tally: TheoremTally, context: CheckContext, k: int = 3) -> None:
    """K_{1,k²} 被定理排除；把它扩张为 K_k（各部分 k 片叶子）的比较结果作为数据记录"""
    star = make_family(NamedFamily(FAMILY_STAR, k * k))
    leaves = list(range(1, k * k + 1))
    parts = tuple(tuple(leaves[i * k:(i + 1) * k]) for i in range(k))
    check_expand_sample(star, 0, [parts], tally, context)
