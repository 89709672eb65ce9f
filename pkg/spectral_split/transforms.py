"""
图变换：内部路径细分、相邻/不相邻顶点分裂、顶点扩张为完全图，以及分裂定理的见证向量

顶点编号约定：v_1 沿用 v 的编号，新顶点依次追加在末尾（n, n+1, ...）。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config import DEFAULT_SETTINGS, SpectralSettings
from .constants import (
    ROUTE_CONNECTED,
    ROUTE_CYCLE,
    ROUTE_DISCONNECTED,
    ROUTE_DOMINATION,
    ROUTE_INTERNAL_PATH,
    ROUTE_PENDENT_PATH,
    SUBCASE_MANY_LEAVES,
    SUBCASE_NEIGHBOUR_DEGREE,
    SUBCASE_TWO_LEAVES,
)
from .errors import (
    BadPartition,
    DegreeTooSmall,
    NoSuchEdge,
    NotConnected,
    NotInternalPathEdge,
    ParameterOutOfRange,
    PartitionTooSmall,
)
from .graph_core import Graph, build_graph, components, delete_vertex, is_connected
from .log import logger
from .spectral import SpectralResult, spectral_radius


@dataclass(frozen=True)
class InternalPath:
    """[e_0, u_1, ..., u_k, e_1]：端点度数 > 2，内部顶点度数恰为 2"""
    vertices: Tuple[int, ...]

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> List[Tuple[int, int]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def contains_edge(self, u: int, w: int) -> bool:
        return any({a, b} == {u, w} for a, b in self.edges())


@dataclass(frozen=True)
class SplitSpec:
    """把 v 的邻居分成 x_side（连到 v_1）与 y_side（连到 v_2）"""
    v: int
    x_side: Tuple[int, ...]
    y_side: Tuple[int, ...]

    def __str__(self) -> str:
        return f"v={self.v} x={list(self.x_side)} y={list(self.y_side)}"


@dataclass(frozen=True)
class ExpandSpec:
    """把 v 的邻居分成 W_1..W_k，W_i 连到团顶点 v_i"""
    v: int
    partitions: Tuple[Tuple[int, ...], ...]

    def __str__(self) -> str:
        return f"v={self.v} parts={[list(p) for p in self.partitions]}"


@dataclass(frozen=True)
class WitnessVector:
    """
    分裂定理证明中的向量 ẑ 及逐行松弛量

    row_slack[w] = lo·ẑ_w - (A(G_v)ẑ)_w，lo 为 ρ(G) 的认证下界；
    tolerance[w] = (hi - lo)·ẑ_w 是有理化误差预算。
    """
    values: Tuple[Fraction, ...]
    case_id: int
    z_v: Fraction
    s_x: Fraction
    s_y: Fraction
    row_slack: Tuple[Fraction, ...]
    tolerance: Tuple[Fraction, ...]
    rho_bound: Fraction
    strict_rows: Tuple[int, ...]
    upper_bound: Fraction
    subcase: Optional[str] = None
    escalations: int = 0

    @property
    def sound(self) -> bool:
        """每行松弛量都不低于误差预算的负值"""
        return all(s >= -t for s, t in zip(self.row_slack, self.tolerance))

    @property
    def strict(self) -> bool:
        return bool(self.strict_rows)


# ---------------------------------------------------------------------------
# 内部路径与细分
# ---------------------------------------------------------------------------

def _canonical_path(path: List[int]) -> Tuple[int, ...]:
    if path[0] > path[-1] or (path[0] == path[-1] and path[1] > path[-2]):
        path = path[::-1]
    return tuple(path)


def find_internal_paths(g: Graph) -> List[InternalPath]:
    """所有极大内部路径，每条只报告一次，按顶点序列排序"""
    degrees = g.degrees()
    found = set()
    for start in range(g.n):
        if degrees[start] <= 2:
            continue
        for first in g.adjacency[start]:
            path = [start]
            previous, current = start, first
            while degrees[current] == 2:
                path.append(current)
                a, b = g.adjacency[current]
                previous, current = current, (b if a == previous else a)
            if degrees[current] > 2:
                path.append(current)
                found.add(_canonical_path(path))
    return [InternalPath(vertices=p) for p in sorted(found)]


def internal_path_of_edge(g: Graph, u: int, w: int) -> Optional[InternalPath]:
    for path in find_internal_paths(g):
        if path.contains_edge(u, w):
            return path
    return None


def subdivide_edge(g: Graph, u: int, w: int) -> Graph:
    """把内部路径上的边 (u, w) 替换为 u - n - w"""
    g.check_vertex(w)
    if not g.has_edge(u, w):
        raise NoSuchEdge(f"边 ({u}, {w}) 不存在")
    if internal_path_of_edge(g, u, w) is None:
        raise NotInternalPathEdge(f"边 ({u}, {w}) 不在任何内部路径上")
    target = {u, w}
    edges = [e for e in g.edges() if set(e) != target]
    edges += [(u, g.n), (w, g.n)]
    return build_graph(g.n + 1, edges)


# ---------------------------------------------------------------------------
# 顶点分裂与扩张
# ---------------------------------------------------------------------------

def _check_cover(g: Graph, v: int, parts: Sequence[Sequence[int]]) -> None:
    """各部分互不相交且恰好覆盖 N(v)"""
    seen: List[int] = [u for part in parts for u in part]
    if len(seen) != len(set(seen)):
        raise BadPartition(f"划分有重复顶点: {[list(p) for p in parts]}")
    if sorted(seen) != list(g.neighbors(v)):
        raise BadPartition(f"划分 {[list(p) for p in parts]} 不等于 N({v}) = {list(g.neighbors(v))}")


def _validate_split(g: Graph, spec: SplitSpec, min_degree: int, min_side: int) -> None:
    g.check_vertex(spec.v)
    if g.degree(spec.v) < min_degree:
        raise DegreeTooSmall(f"顶点 {spec.v} 的度数 {g.degree(spec.v)} < {min_degree}")
    _check_cover(g, spec.v, (spec.x_side, spec.y_side))
    if min(len(spec.x_side), len(spec.y_side)) < min_side:
        if min_side == 2:
            logger.warning(
                f"谱半径验证：相邻分裂要求 s, t ≥ 2（证明情形 2 用到 s ≥ 2），拒绝 {spec}"
            )
        raise BadPartition(f"划分两边至少需要 {min_side} 个顶点: {spec}")


def _edges_without(g: Graph, v: int) -> List[Tuple[int, int]]:
    return [(a, b) for a, b in g.edges() if v not in (a, b)]


def split_vertex_adjacent(g: Graph, spec: SplitSpec) -> Graph:
    """v 拆成相邻的 v_1（编号 v，连 x_side）与 v_2（编号 n，连 y_side）"""
    _validate_split(g, spec, min_degree=4, min_side=2)
    v, v2 = spec.v, g.n
    edges = _edges_without(g, v)
    edges += [(v, x) for x in spec.x_side]
    edges += [(v2, y) for y in spec.y_side]
    edges.append((v, v2))
    return build_graph(g.n + 1, edges)


def split_vertex_nonadjacent(g: Graph, spec: SplitSpec) -> Graph:
    """v 拆成不相邻的 v_1、v_2，结果可能不连通"""
    _validate_split(g, spec, min_degree=2, min_side=1)
    v, v2 = spec.v, g.n
    edges = _edges_without(g, v)
    edges += [(v, x) for x in spec.x_side]
    edges += [(v2, y) for y in spec.y_side]
    return build_graph(g.n + 1, edges)


def expand_to_complete(g: Graph, spec: ExpandSpec) -> Graph:
    """v 扩张为 K_k：v_1 = v，v_2..v_k 依次追加，v_i 连接 W_i"""
    g.check_vertex(spec.v)
    k = len(spec.partitions)
    if k < 2:
        raise BadPartition(f"至少需要 2 个划分: {spec}")
    if g.degree(spec.v) < k * k:
        raise DegreeTooSmall(f"顶点 {spec.v} 的度数 {g.degree(spec.v)} < {k * k}")
    _check_cover(g, spec.v, spec.partitions)
    if any(len(part) < k for part in spec.partitions):
        raise PartitionTooSmall(f"每个划分至少需要 {k} 个顶点: {spec}")

    clique = [spec.v] + [g.n + i for i in range(k - 1)]
    edges = _edges_without(g, spec.v)
    edges += [(clique[i], clique[j]) for j in range(k) for i in range(j)]
    for vertex, part in zip(clique, spec.partitions):
        edges += [(vertex, u) for u in part]
    return build_graph(g.n + k - 1, edges)


# ---------------------------------------------------------------------------
# 不相邻分裂的证明路径
# ---------------------------------------------------------------------------

def degree_two_context(g: Graph, v: int) -> str:
    """度数为 2 的顶点位于内部路径、悬挂路径还是圈上"""
    if g.degree(v) != 2:
        raise ParameterOutOfRange(f"顶点 {v} 的度数不是 2")
    ends = []
    for first in g.adjacency[v]:
        previous, current = v, first
        while g.degree(current) == 2 and current != v:
            a, b = g.adjacency[current]
            previous, current = current, (b if a == previous else a)
        if current == v:
            return ROUTE_CYCLE
        ends.append(g.degree(current))
    if all(d > 2 for d in ends):
        return ROUTE_INTERNAL_PATH
    return ROUTE_PENDENT_PATH


def classify_split_route(g: Graph, spec: SplitSpec) -> str:
    """不相邻分裂 ρ 严格下降所依据的论证路径"""
    _validate_split(g, spec, min_degree=2, min_side=1)
    v, degree = spec.v, g.degree(spec.v)
    if degree == 2:
        return degree_two_context(g, v)
    if degree >= 4 and min(len(spec.x_side), len(spec.y_side)) >= 2:
        return ROUTE_DOMINATION
    # G - v 中没有分量同时含 x 侧与 y 侧邻居时，分裂后不连通
    rest = delete_vertex(g, v)
    for part in map(set, components(rest)):
        if any(x - (x > v) in part for x in spec.x_side) and any(y - (y > v) in part for y in spec.y_side):
            return ROUTE_CONNECTED
    return ROUTE_DISCONNECTED


# ---------------------------------------------------------------------------
# 见证向量
# ---------------------------------------------------------------------------

def _strict_subcase(g: Graph, side: Sequence[int]) -> str:
    if any(g.degree(u) >= 2 for u in side):
        return SUBCASE_NEIGHBOUR_DEGREE
    if len(side) > 2:
        return SUBCASE_MANY_LEAVES
    return SUBCASE_TWO_LEAVES


def _witness_from(g: Graph, split: Graph, spec: SplitSpec, result: SpectralResult, escalations: int) -> WitnessVector:
    z = result.vector
    lo, hi = result.enclosure
    v, v2 = spec.v, g.n
    z_v = z[v]
    s_x = sum((z[u] for u in spec.x_side), Fraction(0))
    s_y = sum((z[u] for u in spec.y_side), Fraction(0))

    subcase = None
    if z_v >= s_x and z_v >= s_y:
        case_id, z1, z2 = 1, z_v, z_v
    elif z_v >= s_x:
        case_id, z1, z2 = 2, s_x, z_v
        subcase = _strict_subcase(g, spec.x_side)
    elif z_v >= s_y:
        case_id, z1, z2 = 3, z_v, s_y
        subcase = _strict_subcase(g, spec.y_side)
    else:
        case_id, z1, z2 = 4, z_v, z_v

    values: List[Fraction] = list(z) + [z2]
    values[v] = z1
    products = [sum((values[u] for u in split.adjacency[w]), Fraction(0)) for w in range(split.n)]
    slack = tuple(lo * values[w] - products[w] for w in range(split.n))
    tolerance = tuple((hi - lo) * values[w] for w in range(split.n))
    strict_rows = tuple(w for w in range(split.n) if slack[w] > tolerance[w])
    upper = max(products[w] / values[w] for w in range(split.n))
    return WitnessVector(
        values=tuple(values),
        case_id=case_id,
        z_v=z_v,
        s_x=s_x,
        s_y=s_y,
        row_slack=slack,
        tolerance=tolerance,
        rho_bound=lo,
        strict_rows=strict_rows,
        upper_bound=upper,
        subcase=subcase,
        escalations=escalations,
    )


def construct_split_witness(
    g: Graph,
    spec: SplitSpec,
    rho_result: SpectralResult,
    settings: SpectralSettings = DEFAULT_SETTINGS,
) -> WitnessVector:
    """
    按证明的四种情形构造 ẑ，并用 ρ(G) 的认证下界精确计算逐行松弛量

    松弛量低于误差预算时，把认证区间收窄 1000 倍重新有理化，最多 witness_escalations 次。
    """
    if not is_connected(g):
        raise NotConnected("见证向量需要连通图")
    split = split_vertex_adjacent(g, spec)

    result = rho_result
    witness = _witness_from(g, split, spec, result, 0)
    for escalation in range(1, settings.witness_escalations + 1):
        if witness.sound:
            break
        width = result.width / 1000 if result.width > 0 else settings.enclosure_width / 1000**escalation
        logger.warning(f"谱半径验证：见证向量松弛量超出误差预算，第 {escalation} 次重新有理化（宽度 {float(width):.1e}）")
        result = spectral_radius(g, enclosure_width=width, settings=settings)
        witness = _witness_from(g, split, spec, result, escalation)
    return witness


def witness_summary(witness: WitnessVector) -> Dict:
    """供报告和命令行输出的见证向量摘要"""
    return {
        "case": witness.case_id,
        "subcase": witness.subcase,
        "sound": witness.sound,
        "strict": witness.strict,
        "strict_rows": list(witness.strict_rows),
        "escalations": witness.escalations,
        "min_slack": float(min(witness.row_slack)),
        "upper_bound": float(witness.upper_bound),
    }
