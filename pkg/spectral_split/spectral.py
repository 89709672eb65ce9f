"""
谱半径计算

快速路径：在 A + I 上做幂迭代（二部图在 A 上会出现周期 2 振荡）。
认证路径：对有理化后的正向量 w 用精确有理数计算 min (Aw)_i/w_i ≤ ρ ≤ max (Aw)_i/w_i。
精确路径：整数特征多项式 + Sturm 序列隔根 + 多项式 gcd 判等。
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from .cache import SpectralCache
from .config import DEFAULT_SETTINGS, SpectralSettings
from .constants import (
    CERT_ENCLOSURES,
    CERT_GCD,
    CERT_STURM,
    EQUAL,
    EXACT_ALWAYS,
    EXACT_ON_OVERLAP,
    FLOAT_WIDTH_FLOOR,
    GREATER,
    ITERATION_BLOCK,
    LESS,
    RATIONAL_BITS,
    SNAP_DENOMINATOR,
)
from .errors import EmptyGraph, NoConvergence, NotConnected, ParameterOutOfRange, SizeCap
from .graph_core import Graph, components, induced_subgraph, is_connected, to_graph6
from .log import logger

X = sp.Symbol("x")


@dataclass(frozen=True)
class SpectralResult:
    """
    谱半径结果

    perron 为最大范数归一化的浮点向量，只在 component 上非零；
    vector 是认证区间所用的有理化向量（同样只在 component 上非零）。
    """
    rho: float
    perron: Tuple[float, ...]
    enclosure: Tuple[Fraction, Fraction]
    component: Tuple[int, ...]
    vector: Tuple[Fraction, ...] = field(repr=False)
    iterations: int = 0

    @property
    def lo(self) -> Fraction:
        return self.enclosure[0]

    @property
    def hi(self) -> Fraction:
        return self.enclosure[1]

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class CharPoly:
    """det(xI - A) = Σ c_k x^k 的精确整数系数 c_0..c_n"""
    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_sympy(self) -> sp.Poly:
        return sp.Poly(list(reversed(self.coefficients)), X, domain=sp.ZZ)

    def __str__(self) -> str:
        return str(self.as_sympy().as_expr())


@dataclass(frozen=True)
class RhoOrdering:
    """ρ(g1) 与 ρ(g2) 的精确关系及其判定方式"""
    relation: str
    certificate: str
    left: Tuple[Fraction, Fraction]
    right: Tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# 幂迭代与认证区间
# ---------------------------------------------------------------------------

def collatz_bounds(g: Graph, w: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """对正整数向量 w 精确计算 (min, max) (Aw)_i / w_i"""
    ratios = [Fraction(sum(w[u] for u in g.adjacency[i]), w[i]) for i in range(g.n)]
    return min(ratios), max(ratios)


def _rationalize(x: np.ndarray, bits: int) -> List[int]:
    scale = 1 << bits
    return [max(1, int(round(float(value) * scale))) for value in x]


def _snap_eigenvector(g: Graph, x: np.ndarray) -> Optional[Tuple[List[int], int]]:
    """
    把浮点向量取整为小分母有理数；只有得到精确特征向量（lo == hi）时才采用

    返回 (整数向量, 公分母)。
    """
    snapped = [Fraction(float(value)).limit_denominator(SNAP_DENOMINATOR) for value in x]
    if any(value <= 0 or abs(float(value) - x_i) > 1e-9 for value, x_i in zip(snapped, x)):
        return None
    scale = math.lcm(*(value.denominator for value in snapped))
    w = [int(value * scale) for value in snapped]
    lo, hi = collatz_bounds(g, w)
    if lo != hi:
        return None
    return w, scale


def _exact_power_steps(g: Graph, w: List[int], bits: int, steps: int) -> List[int]:
    """在整数上执行 (A + I) 幂迭代，每步右移保持约 bits 位精度"""
    for _ in range(steps):
        w = [w[i] + sum(w[u] for u in g.adjacency[i]) for i in range(g.n)]
        shift = max(w).bit_length() - bits
        if shift > 0:
            w = [max(1, value >> shift) for value in w]
    return w


def _connected_radius(g: Graph, width: Fraction, max_iterations: int):
    """连通图上的幂迭代，返回 (浮点向量, 整数向量, 公分母, lo, hi, 迭代次数)"""
    if g.n == 1:
        return np.ones(1), [1], 1, Fraction(0), Fraction(0), 0

    shifted = g.adjacency_matrix() + np.eye(g.n)
    adjacency = shifted - np.eye(g.n)
    x = np.ones(g.n)
    target = max(float(width) / 4, float(FLOAT_WIDTH_FLOOR))
    iterations = 0
    previous_gap = math.inf
    while iterations < max_iterations:
        for _ in range(ITERATION_BLOCK):
            x = shifted @ x
            x /= x.max()
        iterations += ITERATION_BLOCK
        ratios = (adjacency @ x) / x
        gap = float(ratios.max() - ratios.min())
        if gap <= target:
            break
        # 浮点精度已经耗尽
        if gap < 1e-9 and gap >= previous_gap:
            break
        previous_gap = gap

    snapped = _snap_eigenvector(g, x)
    if snapped is not None:
        w, scale = snapped
        lo = collatz_bounds(g, w)[0]
        return x, w, scale, lo, lo, iterations

    bits = RATIONAL_BITS
    w = _rationalize(x, bits)
    lo, hi = collatz_bounds(g, w)
    if hi - lo > width:
        logger.warning(f"谱半径验证：浮点迭代后区间宽度 {float(hi - lo):.3e} 未达到目标，改用整数精确迭代")
    while hi - lo > width:
        if iterations >= max_iterations:
            raise NoConvergence(f"{max_iterations} 次迭代后区间宽度仍为 {float(hi - lo):.3e}")
        bits += 16
        w = _exact_power_steps(g, [value << 16 for value in w], bits, ITERATION_BLOCK)
        iterations += ITERATION_BLOCK
        lo, hi = collatz_bounds(g, w)
    return x, w, 1 << RATIONAL_BITS, lo, hi, iterations


def spectral_radius(
    g: Graph,
    enclosure_width: Optional[Fraction] = None,
    settings: SpectralSettings = DEFAULT_SETTINGS,
) -> SpectralResult:
    """
    计算谱半径、Perron 向量和认证区间

    对每个连通分量分别迭代，返回谱半径最大的分量；
    区间为各分量区间端点的最大值，因此仍然包含 ρ(G) = max ρ(分量)。
    """
    if g.n == 0:
        raise EmptyGraph("空图没有谱半径")
    width = settings.enclosure_width if enclosure_width is None else Fraction(enclosure_width)
    if width <= 0:
        raise ParameterOutOfRange(f"区间宽度必须为正数: {width}")

    best = None
    lo_max, hi_max = Fraction(0), Fraction(0)
    total_iterations = 0
    for part in components(g):
        sub = g if len(part) == g.n else induced_subgraph(g, part)
        x, w, scale, lo, hi, iterations = _connected_radius(sub, width, settings.max_iterations)
        total_iterations += iterations
        lo_max, hi_max = max(lo_max, lo), max(hi_max, hi)
        if best is None or lo + hi > best[4] + best[5]:
            best = (part, x, w, scale, lo, hi)

    part, x, w, scale, lo, hi = best
    perron = [0.0] * g.n
    vector = [Fraction(0)] * g.n
    top = x.max()
    for i, v in enumerate(part):
        perron[v] = float(x[i] / top)
        vector[v] = Fraction(w[i], scale)

    logger.debug(f"谱半径验证：{to_graph6(g)} 迭代 {total_iterations} 次，区间宽度 {float(hi_max - lo_max):.3e}")
    return SpectralResult(
        rho=float((lo_max + hi_max) / 2),
        perron=tuple(perron),
        enclosure=(lo_max, hi_max),
        component=part,
        vector=tuple(vector),
        iterations=total_iterations,
    )


def check_perron_positive(
    g: Graph,
    result: SpectralResult,
    settings: SpectralSettings = DEFAULT_SETTINGS,
) -> bool:
    """连通图的 Perron 向量每个分量都应为正（相对最大分量不低于 positivity_floor）"""
    if not is_connected(g):
        raise NotConnected("Perron 向量正性只对连通图成立")
    floor = settings.positivity_floor
    scale = max(result.perron)
    return scale > 0 and all(entry / scale > floor for entry in result.perron)


def cycle_eigenvalues(n: int) -> List[float]:
    """C_n 的全部特征值 2cos(2πj/n), j = 0..n-1"""
    if n < 3:
        raise ParameterOutOfRange(f"圈至少需要 3 个顶点: {n}")
    return (2 * np.cos(2 * np.pi * np.arange(n) / n)).tolist()


# ---------------------------------------------------------------------------
# 特征多项式与 Sturm 隔根
# ---------------------------------------------------------------------------

def char_poly(g: Graph, settings: SpectralSettings = DEFAULT_SETTINGS) -> CharPoly:
    """Faddeev–LeVerrier 递推，全程使用 Python 大整数"""
    n = g.n
    if n == 0:
        raise EmptyGraph("空图没有特征多项式")
    if n > settings.exact_size_cap:
        raise SizeCap(f"精确模式最多支持 {settings.exact_size_cap} 个顶点，收到 {n}")

    a = g.adjacency_matrix(dtype=object)
    identity = np.identity(n, dtype=object)
    coefficients = [0] * (n + 1)
    coefficients[n] = 1
    am = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = am + coefficients[n - k + 1] * identity
        am = a.dot(m)
        trace = sum(am[i, i] for i in range(n))
        coefficients[n - k] = -trace // k
    return CharPoly(coefficients=tuple(int(c) for c in coefficients))


def star_radius_poly(m: int) -> CharPoly:
    """K_{1,m} 的特征多项式 x^{m+1} - m x^{m-1}"""
    coefficients = [0] * (m + 2)
    coefficients[m + 1] = 1
    coefficients[m - 1] = -m
    return CharPoly(coefficients=tuple(coefficients))


@dataclass(frozen=True)
class SturmChain:
    """Sturm 序列，每项已清分母为整数系数（高次在前）"""
    chain: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_poly(cls, poly: sp.Poly) -> "SturmChain":
        chain = []
        for term in poly.sturm():
            _, integral = term.clear_denoms(convert=True)
            chain.append(tuple(int(c) for c in integral.all_coeffs()))
        return cls(chain=tuple(chain))

    def variations(self, point: Fraction) -> int:
        signs = [s for s in (_sign_at(p, point) for p in self.chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, a: Fraction, b: Fraction) -> int:
        """(a, b] 内不同实根的个数"""
        return self.variations(a) - self.variations(b)


def _sign_at(coefficients: Sequence[int], point: Fraction) -> int:
    """整数多项式在有理点 p/q 处的符号，避免分数运算"""
    p, q = point.numerator, point.denominator
    degree = len(coefficients) - 1
    total = 0
    for i, c in enumerate(coefficients):
        total += c * p ** (degree - i) * q ** i
    return (total > 0) - (total < 0)


def root_separation_bound(poly: CharPoly) -> Fraction:
    """
    平方自由部分不同根之间距离的下界

    sep ≥ √3 · d^{-(d+2)/2} · ‖p‖₂^{1-d}，各因子取有理的保守估计。
    """
    squarefree = [int(c) for c in poly.as_sympy().sqf_part().all_coeffs()]
    d = len(squarefree) - 1
    if d <= 1:
        return Fraction(1)
    norm = math.isqrt(sum(c * c for c in squarefree)) + 1
    return Fraction(17, 10 * d ** math.ceil((d + 2) / 2) * norm ** (d - 1))


def largest_root_interval(
    poly: CharPoly,
    lo: Fraction,
    hi: Fraction,
    width: Optional[Fraction] = None,
) -> Tuple[Fraction, Fraction]:
    """
    在认证区间 lo ≤ ρ ≤ hi 内隔离最大实根，返回 (a, b] 且 b - a ≤ width

    不变量：最大实根在 (a, b] 内，b 以上没有根。
    """
    chain = SturmChain.from_poly(poly.as_sympy())
    width = root_separation_bound(poly) if width is None else width
    a, b = lo - max(hi - lo, Fraction(1, 2**20)), hi
    while b - a > width:
        a, b = _bisect_largest(chain, a, b)
    return a, b


def _bisect_largest(chain: SturmChain, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
    mid = (a + b) / 2
    if chain.count(mid, b) >= 1:
        return mid, b
    return a, mid


# ---------------------------------------------------------------------------
# 精确比较
# ---------------------------------------------------------------------------

def cached_spectral_radius(
    g: Graph,
    settings: SpectralSettings = DEFAULT_SETTINGS,
    cache: Optional[SpectralCache] = None,
) -> SpectralResult:
    if cache is None:
        return spectral_radius(g, settings=settings)
    return cache.get_or_compute(f"rho:{to_graph6(g)}", lambda: spectral_radius(g, settings=settings))


def cached_char_poly(
    g: Graph,
    settings: SpectralSettings = DEFAULT_SETTINGS,
    cache: Optional[SpectralCache] = None,
) -> CharPoly:
    if cache is None:
        return char_poly(g, settings)
    return cache.get_or_compute(f"poly:{to_graph6(g)}", lambda: char_poly(g, settings))


def rho_compare(
    g1: Graph,
    g2: Graph,
    settings: SpectralSettings = DEFAULT_SETTINGS,
    exact_mode: str = EXACT_ON_OVERLAP,
    cache: Optional[SpectralCache] = None,
) -> RhoOrdering:
    """
    精确比较 ρ(g1) 与 ρ(g2)

    1. 认证区间不相交则直接判定；
    2. 否则用 Sturm 序列对两个特征多项式的最大根二分；
    3. 两个区间各只含一个根且重叠时，看 gcd 在重叠部分是否有根来判等。
    """
    r1 = cached_spectral_radius(g1, settings, cache)
    r2 = cached_spectral_radius(g2, settings, cache)
    if exact_mode != EXACT_ALWAYS:
        if r1.hi < r2.lo:
            return RhoOrdering(LESS, CERT_ENCLOSURES, r1.enclosure, r2.enclosure)
        if r2.hi < r1.lo:
            return RhoOrdering(GREATER, CERT_ENCLOSURES, r1.enclosure, r2.enclosure)

    p1 = cached_char_poly(g1, settings, cache)
    p2 = cached_char_poly(g2, settings, cache)
    return _compare_exact(p1, p2, r1.enclosure, r2.enclosure)


def _compare_exact(
    p1: CharPoly,
    p2: CharPoly,
    enclosure1: Tuple[Fraction, Fraction],
    enclosure2: Tuple[Fraction, Fraction],
) -> RhoOrdering:
    chain1 = SturmChain.from_poly(p1.as_sympy())
    chain2 = SturmChain.from_poly(p2.as_sympy())
    common = sp.gcd(p1.as_sympy(), p2.as_sympy())
    common_chain = SturmChain.from_poly(common) if common.degree() > 0 else None
    # 两个多项式的不同根之间的距离受乘积的根分离界约束
    product = p1.as_sympy() * p2.as_sympy()
    separation = root_separation_bound(CharPoly(tuple(int(c) for c in reversed(product.all_coeffs()))))

    a1, b1 = enclosure1[0] - max(enclosure1[1] - enclosure1[0], Fraction(1, 2**20)), enclosure1[1]
    a2, b2 = enclosure2[0] - max(enclosure2[1] - enclosure2[0], Fraction(1, 2**20)), enclosure2[1]
    while True:
        if b1 <= a2:
            return RhoOrdering(LESS, CERT_STURM, (a1, b1), (a2, b2))
        if b2 <= a1:
            return RhoOrdering(GREATER, CERT_STURM, (a1, b1), (a2, b2))

        # 各自区间只含一个根，且公因子在重叠部分有根：两最大根相同
        low, high = max(a1, a2), min(b1, b2)
        if (
            common_chain is not None
            and chain1.count(a1, b1) == 1
            and chain2.count(a2, b2) == 1
            and common_chain.count(low, high) >= 1
        ):
            return RhoOrdering(EQUAL, CERT_GCD, (a1, b1), (a2, b2))

        if 2 * (b1 - a1) < separation and 2 * (b2 - a2) < separation:
            raise NoConvergence("最大根区间已小于根分离界仍无法判定")
        if b1 - a1 >= b2 - a2:
            a1, b1 = _bisect_largest(chain1, a1, b1)
        else:
            a2, b2 = _bisect_largest(chain2, a2, b2)
