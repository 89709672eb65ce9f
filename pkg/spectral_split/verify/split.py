"""顶点分裂：相邻分裂（含见证向量）与不相邻分裂"""

from ..constants import (
    FAMILY_STAR,
    FAMILY_TILDE_D,
    LESS,
    ROUTE_DOMINATION,
)
from ..graph_core import Graph, NamedFamily, is_subgraph_of, remove_edge
from ..transforms import (
    SplitSpec,
    classify_split_route,
    construct_split_witness,
    split_vertex_adjacent,
    split_vertex_nonadjacent,
    witness_summary,
)
from ..utils import bipartitions
from .recognize import is_family
from .tally import CheckContext, TheoremTally

STAR_4 = NamedFamily(FAMILY_STAR, 4)


def adjacent_split_specs(g: Graph):
    """所有 d(v) ≥ 4 的顶点及两边至少 2 个邻居的二划分（只按 x/y 互换去重）"""
    for v in range(g.n):
        if g.degree(v) >= 4:
            for x_side, y_side in bipartitions(g.neighbors(v), 2):
                yield SplitSpec(v, x_side, y_side)


def nonadjacent_split_specs(g: Graph):
    for v in range(g.n):
        if g.degree(v) >= 2:
            for x_side, y_side in bipartitions(g.neighbors(v), 1):
                yield SplitSpec(v, x_side, y_side)


def check_split_adjacent(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    """
    相邻分裂：G ≠ K_{1,4} 时 ρ(G_v) < ρ(G)，K_{1,4} 时相等且 G_v 为 TildeD(5)

    每个实例同时构造见证向量，记录情形分布；除 K_{1,4} 外要求逐行松弛量非负且至少一行严格为正。
    """
    specs = list(adjacent_split_specs(g))
    if not specs:
        return

    is_star = is_family(g, FAMILY_STAR, 4)
    base = context.radius(g)
    for spec in specs:
        try:
            split = split_vertex_adjacent(g, spec)
            ordering = context.compare(split, g)
            tally.classify(g, str(spec), ordering, LESS, str(STAR_4) if is_star else None)
            if is_star and not is_family(split, FAMILY_TILDE_D, 5):
                tally.violation(g, str(spec), ordering, reason="K_{1,4} 的分裂结果不是 TildeD(5)")

            witness = construct_split_witness(g, spec, base, context.settings)
            tally.bump("witness_case", str(witness.case_id))
            if witness.subcase is not None:
                tally.bump("witness_subcase", witness.subcase)
            if witness.escalations:
                tally.count("witness_escalations", witness.escalations)
            if is_star:
                # ρ = 2 的边界情形：松弛量为零，只记录不判定
                tally.count("witness_boundary")
                continue
            if not (witness.sound and witness.strict):
                tally.violation(g, str(spec), ordering, reason="witness", witness=witness_summary(witness))
            elif witness.upper_bound < base.lo:
                tally.count("witness_upper_bound_separates")
        except Exception as e:
            tally.error(g, str(spec), e)


def check_split_nonadjacent(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    """不相邻分裂：ρ(G') < ρ(G)，G' 不连通时取各分量的最大值"""
    for spec in nonadjacent_split_specs(g):
        try:
            split = split_vertex_nonadjacent(g, spec)
            ordering = context.compare(split, g)
            tally.classify(g, str(spec), ordering, LESS)

            route = classify_split_route(g, spec)
            tally.bump("route", route)
            if route == ROUTE_DOMINATION:
                # G' = G_v 去掉边 v_1v_2，因此 A(G') ≤ A(G_v)
                adjacent = split_vertex_adjacent(g, spec)
                if split == remove_edge(adjacent, spec.v, g.n) and is_subgraph_of(split, adjacent):
                    tally.count("domination_checked")
                else:
                    tally.violation(g, str(spec), ordering, reason="不相邻分裂结果不是相邻分裂结果的子图")
        except Exception as e:
            tally.error(g, str(spec), e)
