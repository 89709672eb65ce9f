"""内部路径细分：除 TildeD 外谱半径严格下降"""

from ..constants import FAMILY_TILDE_D, LESS
from ..graph_core import Graph
from ..transforms import find_internal_paths, subdivide_edge
from .recognize import recognize
from .tally import CheckContext, TheoremTally


def check_subdivision(g: Graph, tally: TheoremTally, context: CheckContext) -> None:
    """对每条内部路径上的每条边做细分，比较 ρ(G') 与 ρ(G)"""
    paths = find_internal_paths(g)
    if not paths:
        return

    family = recognize(g)
    exception = str(family) if family.kind == FAMILY_TILDE_D else None
    for path in paths:
        tally.bump("interior_length", str(len(path.interior)))
        for u, w in path.edges():
            spec = f"subdivide ({u},{w})"
            try:
                subdivided = subdivide_edge(g, u, w)
                tally.classify(g, spec, context.compare(subdivided, g), LESS, exception)
            except Exception as e:
                tally.error(g, spec, e)
