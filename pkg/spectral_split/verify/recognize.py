"""例外图族识别：星图、TildeD、圈、完全图"""

from typing import Optional

from ..constants import (
    FAMILY_COMPLETE,
    FAMILY_CYCLE,
    FAMILY_NONE,
    FAMILY_STAR,
    FAMILY_TILDE_D,
)
from ..graph_core import Graph, NamedFamily, is_connected

NO_FAMILY = NamedFamily(FAMILY_NONE, 0)


def _is_star(g: Graph) -> bool:
    m = g.n - 1
    return m >= 1 and g.degree_sequence() == [m] + [1] * m


def _is_tilde_d(g: Graph) -> bool:
    """两个 3 度顶点各挂两片叶子，之间由 2 度顶点连成路径的树（k ≥ 5）"""
    if g.n < 6 or g.edge_count != g.n - 1 or not is_connected(g):
        return False
    degrees = g.degrees()
    branch = [v for v in range(g.n) if degrees[v] == 3]
    if len(branch) != 2 or degrees.count(1) != 4:
        return False
    if any(d not in (1, 2, 3) for d in degrees):
        return False
    return all(sum(1 for u in g.adjacency[v] if degrees[u] == 1) == 2 for v in branch)


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def _is_complete(g: Graph) -> bool:
    return g.n >= 1 and all(d == g.n - 1 for d in g.degrees())


def recognize(g: Graph) -> NamedFamily:
    """
    按 Star > TildeD > Cycle > Complete 的优先级识别图族

    优先级自然给出规范化：TildeD(4) 即 Star(4)，Complete(2) 即 Star(1)，Complete(3) 即 Cycle(3)。
    """
    if _is_star(g):
        return NamedFamily(FAMILY_STAR, g.n - 1)
    if _is_tilde_d(g):
        return NamedFamily(FAMILY_TILDE_D, g.n - 1)
    if _is_cycle(g):
        return NamedFamily(FAMILY_CYCLE, g.n)
    if _is_complete(g):
        return NamedFamily(FAMILY_COMPLETE, g.n)
    return NO_FAMILY


def is_family(g: Graph, kind: str, parameter: Optional[int] = None) -> bool:
    family = recognize(g)
    return family.kind == kind and (parameter is None or family.parameter == parameter)
