"""简单无向图：构造、命名图族、连通性、graph6 编解码"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.readwrite.graph6 import data_to_n

from .constants import (
    FAMILY_COMPLETE,
    FAMILY_CYCLE,
    FAMILY_PATH,
    FAMILY_STAR,
    FAMILY_TILDE_D,
)
from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    MalformedGraph6,
    NoSuchEdge,
    ParameterOutOfRange,
)

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """
    不可变的简单无向图，顶点编号 0..n-1

    adjacency[v] 为严格递增的邻居元组；构造后不再修改，可在进程间安全传递。
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    edge_count: int

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"顶点 {v} 不在 [0, {self.n}) 内")
        return v

    def degree(self, v: int) -> int:
        return len(self.adjacency[self.check_vertex(v)])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[self.check_vertex(v)]

    def has_edge(self, u: int, w: int) -> bool:
        return w in self.adjacency[self.check_vertex(u)]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """按 (u, w), u < w 的字典序输出所有边"""
        for u, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if u < w:
                    yield u, w

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def degree_sequence(self) -> List[int]:
        """非增度序列"""
        return sorted(self.degrees(), reverse=True)

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for u, w in self.edges():
            matrix[u, w] = 1
            matrix[w, u] = 1
        return matrix

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """对应的 networkx 图（只读使用）"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __str__(self) -> str:
        return to_graph6(self)


@dataclass(frozen=True)
class NamedFamily:
    """命名图族，例如 TildeD(5)"""
    kind: str
    parameter: int

    def __str__(self) -> str:
        return f"{self.kind}({self.parameter})"


# 各图族参数的合法下限
FAMILY_MIN_PARAMETER: Dict[str, int] = {
    FAMILY_PATH: 1,
    FAMILY_CYCLE: 3,
    FAMILY_STAR: 1,
    FAMILY_COMPLETE: 1,
    FAMILY_TILDE_D: 4,
}


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """由顶点数和边列表构造图；拒绝自环、重边和越界编号"""
    if n < 0:
        raise ParameterOutOfRange(f"顶点数不能为负: {n}")
    neighbour_sets: List[set] = [set() for _ in range(n)]
    edge_count = 0
    for pair in edges:
        u, w = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= w < n):
            raise IndexOutOfRange(f"边 ({u}, {w}) 的端点不在 [0, {n}) 内")
        if u == w:
            raise LoopEdge(f"不允许自环: ({u}, {u})")
        if w in neighbour_sets[u]:
            raise DuplicateEdge(f"重复的边: ({u}, {w})")
        neighbour_sets[u].add(w)
        neighbour_sets[w].add(u)
        edge_count += 1
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbour_sets)
    return Graph(n=n, adjacency=adjacency, edge_count=edge_count)


def make_family(spec: NamedFamily) -> Graph:
    """构造命名图族；星图与 TildeD 的中心为 0 号顶点"""
    kind, p = spec.kind, spec.parameter
    if kind not in FAMILY_MIN_PARAMETER:
        raise ParameterOutOfRange(f"未知图族: {kind}")
    if p < FAMILY_MIN_PARAMETER[kind]:
        raise ParameterOutOfRange(f"{spec} 参数需 ≥ {FAMILY_MIN_PARAMETER[kind]}")

    if kind == FAMILY_PATH:
        return build_graph(p, [(i, i + 1) for i in range(p - 1)])
    if kind == FAMILY_CYCLE:
        return build_graph(p, [(i, (i + 1) % p) for i in range(p)])
    if kind == FAMILY_STAR:
        return build_graph(p + 1, [(0, leaf) for leaf in range(1, p + 1)])
    if kind == FAMILY_COMPLETE:
        return build_graph(p, [(u, w) for w in range(p) for u in range(w)])

    # TildeD(n)：n+1 个顶点，中间路径 0..n-4，两端各挂两片叶子
    last = p - 4
    edges = [(i, i + 1) for i in range(last)]
    edges += [(0, p - 3), (0, p - 2), (last, p - 1), (last, p)]
    return build_graph(p + 1, edges)


def is_connected(g: Graph) -> bool:
    """n ≤ 1 时约定为连通"""
    if g.n <= 1:
        return True
    return nx.is_connected(g.nx_graph)


def components(g: Graph) -> List[Tuple[int, ...]]:
    """连通分量列表，每个分量为递增元组，按最小顶点排序"""
    parts = [tuple(sorted(part)) for part in nx.connected_components(g.nx_graph)]
    return sorted(parts, key=lambda part: part[0])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """按 vertices 的顺序重新编号得到的导出子图"""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[w]) for u, w in g.edges() if u in index and w in index]
    return build_graph(len(vertices), edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """删除顶点 v，其余顶点保持相对顺序重新编号"""
    g.check_vertex(v)
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def add_edge(g: Graph, u: int, w: int) -> Graph:
    if g.has_edge(u, w):
        raise DuplicateEdge(f"边 ({u}, {w}) 已存在")
    return build_graph(g.n, list(g.edges()) + [(u, w)])


def remove_edge(g: Graph, u: int, w: int) -> Graph:
    if not g.has_edge(u, w):
        raise NoSuchEdge(f"边 ({u}, {w}) 不存在")
    target = (min(u, w), max(u, w))
    return build_graph(g.n, [e for e in g.edges() if e != target])


def is_subgraph_of(h: Graph, g: Graph) -> bool:
    """相同顶点编号下 E(h) ⊆ E(g)，即 A(g) - A(h) 非负"""
    if h.n != g.n:
        return False
    return all(g.has_edge(u, w) for u, w in h.edges())


def parse_graph6(text: str) -> Graph:
    """解析 graph6 字符串（可带 >>graph6<< 头）"""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    try:
        raw = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise MalformedGraph6(f"graph6 只允许 ASCII 字符: {text!r}") from e
    if not raw or any(not 63 <= c <= 126 for c in raw):
        raise MalformedGraph6(f"graph6 字符必须在 63..126 之间: {text!r}")
    try:
        n, body = data_to_n([c - 63 for c in raw])
        parsed = nx.from_graph6_bytes(raw)
    except (IndexError, ValueError, nx.NetworkXError) as e:
        raise MalformedGraph6(f"无法解析 graph6 {text!r}: {e}") from e

    # 末尾填充位必须为 0
    padding = 6 * len(body) - n * (n - 1) // 2
    if body and padding and body[-1] & ((1 << padding) - 1):
        raise MalformedGraph6(f"graph6 填充位非零: {text!r}")
    return build_graph(n, parsed.edges())


def to_graph6(g: Graph) -> str:
    """输出最短头部的规范 graph6 编码（不含 >>graph6<< 头）"""
    return nx.to_graph6_bytes(g.nx_graph, header=False).decode("ascii").strip()
