"""辅助引理：最大度 ≥ 4 时 ρ ≥ 2（仅 K_{1,4} 取等），以及加边后 ρ 严格增大"""

from ..constants import FAMILY_STAR, GREATER
from ..graph_core import Graph, NamedFamily, add_edge, is_subgraph_of, make_family
from ..spectral import check_perron_positive
from .enumeration import vertex_pairs
from .recognize import is_family
from .split import STAR_4
from .tally import CheckContext, TheoremTally

STAR_4_GRAPH = make_family(NamedFamily(FAMILY_STAR, 4))


def check_lemma_deg4(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    if max(g.degrees(), default=0) < 4:
        return
    spec = "compare with K_{1,4}"
    try:
        result = context.radius(g)
        ordering = context.compare(g, STAR_4_GRAPH)
        is_star = is_family(g, FAMILY_STAR, 4)
        tally.classify(g, spec, ordering, GREATER, str(STAR_4) if is_star else None)
        if result.lo < 2 - context.settings.enclosure_width:
            tally.violation(g, spec, ordering, reason=f"认证下界 {float(result.lo)} 低于 2")
    except Exception as e:
        tally.error(g, spec, e)


def check_pf_monotone(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    """Perron 向量逐分量为正；对每条缺失的边 e，ρ(G + e) > ρ(G)"""
    try:
        if check_perron_positive(g, context.radius(g), context.settings):
            tally.count("perron_positive")
        else:
            tally.violation(g, "perron vector", None, reason="Perron 向量存在低于 positivity_floor 的分量")
    except Exception as e:
        tally.error(g, "perron vector", e)
    for u, w in vertex_pairs(g.n):
        if g.has_edge(u, w):
            continue
        spec = f"add ({u},{w})"
        try:
            bigger = add_edge(g, u, w)
            ordering = context.compare(bigger, g)
            tally.classify(g, spec, ordering, GREATER)
            if not is_subgraph_of(g, bigger):
                tally.violation(g, spec, ordering, reason="加边结果不包含原图")
        except Exception as e:
            tally.error(g, spec, e)

