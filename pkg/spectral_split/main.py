"""命令行入口：rho / transform / witness / verify / enumerate / family"""

import argparse
import asyncio
import json
import os
import sys
from typing import List, Optional

from .config import CampaignConfig
from .constants import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VIOLATION,
    FAMILY_CLI_NAMES,
    JOBS_ENV_VAR,
)
from .errors import ParameterOutOfRange, SpectralSplitError
from .graph_core import Graph, NamedFamily, make_family, parse_graph6, to_graph6
from .log import logger, setup_logging
from .renderer import ReportRenderer
from .spectral import char_poly, largest_root_interval, rho_compare, spectral_radius
from .transforms import (
    ExpandSpec,
    SplitSpec,
    construct_split_witness,
    expand_to_complete,
    split_vertex_adjacent,
    split_vertex_nonadjacent,
    subdivide_edge,
)
from .utils import format_fraction, format_interval, parse_fraction, parse_index_list, parse_partitions
from .verify import enumerate_connected

TRANSFORM_KINDS = ("subdivide", "split", "split-na", "expand")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectral-split",
        description="图变换下的谱半径：计算、变换、见证向量与穷举验证",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志到 stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    rho = commands.add_parser("rho", help="计算谱半径与认证区间")
    rho.add_argument("graph6")
    rho.add_argument("--width", default=None, help="认证区间宽度，如 1/1000000000")
    rho.add_argument("--exact", action="store_true", help="同时输出特征多项式与最大根隔离区间")

    transform = commands.add_parser("transform", help="执行一次图变换并比较谱半径")
    transform.add_argument("kind", choices=TRANSFORM_KINDS)
    transform.add_argument("graph6")
    transform.add_argument("--vertex", type=int, default=None, help="被分裂或扩张的顶点")
    transform.add_argument("--edge", default=None, help="被细分的边 u,w")
    transform.add_argument("--part", default=None, help="连到 v_1 的邻居 x_side，如 1,2")
    transform.add_argument("--parts", default=None, help="扩张的划分，如 1,2,3;4,5,6;7,8,9")

    witness = commands.add_parser("witness", help="构造相邻分裂的见证向量")
    witness.add_argument("graph6")
    witness.add_argument("--vertex", type=int, required=True)
    witness.add_argument("--part", required=True, help="连到 v_1 的邻居 x_side")

    verify = commands.add_parser("verify", help="穷举/抽样验证定理并写出 JSON 报告")
    verify.add_argument("--config", default=None, help="JSON 配置文件，命令行参数优先")
    verify.add_argument("--out", default="report.json", help="报告输出路径")
    verify.add_argument("--jobs", type=int, default=None, help=f"并发进程数，默认读取 {JOBS_ENV_VAR}")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    verify.add_argument("--theorems", default=None, help="逗号分隔的定理列表或 all")
    verify.add_argument("--samples", type=int, default=None, dest="random_samples", help="随机图数量")
    verify.add_argument("--exact-mode", choices=("always", "on_overlap"), default=None, dest="exact_mode")
    verify.add_argument("--width", default=None, dest="enclosure_width")
    verify.add_argument("--record-timing", action="store_true", default=None, dest="record_timing")

    enumerate_cmd = commands.add_parser("enumerate", help="列出 n 个顶点上的全部带标号连通图")
    enumerate_cmd.add_argument("n", type=int)

    family = commands.add_parser("family", help="输出命名图族的 graph6")
    family.add_argument("kind", choices=sorted(FAMILY_CLI_NAMES))
    family.add_argument("parameter", type=int)
    return parser


def _split_spec(g: Graph, vertex: Optional[int], part: Optional[str]) -> SplitSpec:
    if vertex is None or part is None:
        raise ParameterOutOfRange("分裂需要 --vertex 与 --part")
    x_side = tuple(sorted(parse_index_list(part)))
    y_side = tuple(u for u in g.neighbors(vertex) if u not in x_side)
    return SplitSpec(vertex, x_side, y_side)


def _jobs_default() -> int:
    value = os.environ.get(JOBS_ENV_VAR)
    if not value:
        return 1
    try:
        return int(value)
    except ValueError as e:
        raise ParameterOutOfRange(f"{JOBS_ENV_VAR} 必须是整数: {value!r}") from e


class SpectralSplitCli:
    """各子命令的实现；输出只写 stdout，日志只写 stderr"""

    def __init__(self, out=None):
        self.out = out or sys.stdout

    def echo(self, text: str = "") -> None:
        print(text, file=self.out)

    def cmd_rho(self, args) -> int:
        g = parse_graph6(args.graph6)
        width = parse_fraction(args.width) if args.width else None
        result = spectral_radius(g, enclosure_width=width)
        self.echo(f"rho = {result.rho:.12f}")
        self.echo(f"enclosure = {format_interval(result.lo, result.hi)}")
        self.echo(f"enclosure_exact = [{format_fraction(result.lo)}, {format_fraction(result.hi)}]")
        if args.exact:
            poly = char_poly(g)
            a, b = largest_root_interval(poly, result.lo, result.hi)
            self.echo(f"char_poly = {poly}")
            self.echo(f"largest_root in ({format_fraction(a)}, {format_fraction(b)}]  ≈ {float(b):.15f}")
        return EXIT_OK

    def cmd_transform(self, args) -> int:
        g = parse_graph6(args.graph6)
        if args.kind == "subdivide":
            if args.edge is None:
                raise ParameterOutOfRange("细分需要 --edge u,w")
            edge = parse_index_list(args.edge)
            if len(edge) != 2:
                raise ParameterOutOfRange(f"--edge 需要两个顶点: {args.edge}")
            result = subdivide_edge(g, edge[0], edge[1])
        elif args.kind == "split":
            result = split_vertex_adjacent(g, _split_spec(g, args.vertex, args.part))
        elif args.kind == "split-na":
            result = split_vertex_nonadjacent(g, _split_spec(g, args.vertex, args.part))
        else:
            if args.vertex is None or args.parts is None:
                raise ParameterOutOfRange("扩张需要 --vertex 与 --parts")
            parts = tuple(tuple(sorted(p)) for p in parse_partitions(args.parts))
            result = expand_to_complete(g, ExpandSpec(args.vertex, parts))

        ordering = rho_compare(result, g)
        self.echo(to_graph6(result))
        self.echo(f"verdict: {ordering.relation} ({ordering.certificate})")
        return EXIT_OK

    def cmd_witness(self, args) -> int:
        g = parse_graph6(args.graph6)
        spec = _split_spec(g, args.vertex, args.part)
        witness = construct_split_witness(g, spec, spectral_radius(g))
        self.echo(f"case = {witness.case_id}" + (f" ({witness.subcase})" if witness.subcase else ""))
        self.echo(f"z_v = {float(witness.z_v):.12f}  S_x = {float(witness.s_x):.12f}  S_y = {float(witness.s_y):.12f}")
        for w, (value, slack) in enumerate(zip(witness.values, witness.row_slack)):
            self.echo(f"  {w}: z = {float(value):.12f}  slack = {float(slack):+.3e}")
        self.echo(f"sound = {witness.sound}  strict = {witness.strict}  escalations = {witness.escalations}")
        self.echo(f"upper_bound = {float(witness.upper_bound):.12f}")
        return EXIT_OK

    def cmd_verify(self, args) -> int:
        values = {}
        if args.config:
            with open(args.config, "r", encoding="utf-8") as f:
                values.update(json.load(f))
        for key in ("seed", "max_n", "theorems", "random_samples", "exact_mode", "enclosure_width", "record_timing"):
            if getattr(args, key) is not None:
                values[key] = getattr(args, key)
        if args.jobs is not None:
            values["jobs"] = args.jobs
        else:
            values.setdefault("jobs", _jobs_default())

        config = CampaignConfig.from_dict(values)
        renderer = ReportRenderer(config)
        document = asyncio.run(renderer.generate())
        renderer.write(document, args.out)
        report = renderer.report
        self.echo(ReportRenderer.summary_line(report))
        return EXIT_VIOLATION if report.violations else EXIT_OK

    def cmd_enumerate(self, args) -> int:
        for g in enumerate_connected(args.n):
            self.echo(to_graph6(g))
        return EXIT_OK

    def cmd_family(self, args) -> int:
        self.echo(to_graph6(make_family(NamedFamily(FAMILY_CLI_NAMES[args.kind], args.parameter))))
        return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    cli = SpectralSplitCli()
    handler = getattr(cli, f"cmd_{args.command}")
    try:
        return handler(args)
    except SpectralSplitError as e:
        logger.debug(f"谱半径验证：命令 {args.command} 失败", exc_info=True)
        print(f"错误 {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except (OSError, json.JSONDecodeError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
