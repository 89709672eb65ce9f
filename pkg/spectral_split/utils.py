"""工具函数：有理数解析与格式化、顶点列表解析、划分枚举"""

from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple, Union

from .errors import ParameterOutOfRange


def parse_fraction(value: Union[str, int, float, Fraction]) -> Fraction:
    """解析 "p/q"、"1e-9" 或数字为 Fraction"""
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParameterOutOfRange(f"无法解析有理数 {value!r}: {e}") from e


def format_fraction(value: Fraction) -> str:
    """报告中的有理数统一写成 p/q"""
    return f"{value.numerator}/{value.denominator}"


def format_interval(lo: Fraction, hi: Fraction, digits: int = 12) -> str:
    return f"[{float(lo):.{digits}f}, {float(hi):.{digits}f}]"


def parse_index_list(text: str) -> List[int]:
    """解析 "1,2,3" 形式的顶点列表"""
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ParameterOutOfRange(f"无法解析顶点列表 {text!r}") from e


def parse_partitions(text: str) -> List[List[int]]:
    """解析 "1,2,3;4,5,6;7,8,9" 形式的多个划分"""
    return [parse_index_list(part) for part in text.split(";") if part.strip()]


def bipartitions(items: Sequence[int], min_side: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    枚举 items 的二划分 (x, y)，两边至少 min_side 个元素

    x 与 y 互换只保留一次：规定 items[0] 总在 x 中。
    """
    items = tuple(items)
    if len(items) < 2 * min_side or not items:
        return
    first, rest = items[0], items[1:]
    for size in range(min_side - 1, len(rest) + 1):
        for chosen in combinations(rest, size):
            x_side = (first,) + chosen
            y_side = tuple(item for item in rest if item not in chosen)
            if len(x_side) >= min_side and len(y_side) >= min_side:
                yield x_side, y_side
