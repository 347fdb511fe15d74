#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行入口

退出码：0 成功 / 1 常数未通过校验 / 2 用法或输入错误 / 3 认证半径超过经验零点 / 4 所需矩不有限

使用示例：
    python scripts/zerofree.py constants --q 1,2,3,4,5,6 --format csv
    python scripts/zerofree.py certify --gen "hermite(1)" --out out/
    python scripts/zerofree.py certify --gen "rect(1)" --mode star --q 2
    python scripts/zerofree.py scan --gen gaussian --grid N=1024,win=-8:8 --out out/
    python scripts/zerofree.py ortho --gen "rect(1)" --side modulation
"""

from __future__ import annotations

import argparse
import logging
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler

from errors import ZerofreeError
from cli.commands import COMMAND_HANDLERS, say
from cli.config import (
    DEFAULT_DIRS,
    DEFAULT_EPS_REL,
    DEFAULT_RMAX,
    DEFAULT_SCAN_EXTENT,
    DEFAULT_SCAN_POINTS,
    FORMATS,
    MODES,
    SIDES,
    config_from_args,
)


EXIT_USAGE = 2


def setup_logging(verbose: bool = False) -> None:
    """根 logger 输出到 stderr（rich 格式）"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, markup=False)],
        force=True,
    )


def _add_common(parser: argparse.ArgumentParser, with_signal: bool = True) -> None:
    if with_signal:
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--signal", help="信号 CSV（表头 t,re,im）")
        source.add_argument("--gen", help="内置波形，如 gaussian / hermite(1) / rect(1) / chirp(0.5) / two_pulse(3,0.5)")
        parser.add_argument("--grid", help="采样网格，如 N=1024,win=-8:8")
    parser.add_argument("--q", help="矩阶数 q（constants 命令可用逗号分隔多个）")
    parser.add_argument(
        "--minorant",
        default="auto",
        help="下界常数: auto | simple | opt | exact | eta=<r> | a=<r>,c=<r>（默认: auto）"
    )
    parser.add_argument("--dirs", type=int, default=DEFAULT_DIRS, help=f"方向数（默认: {DEFAULT_DIRS}）")
    parser.add_argument("--rmax", type=float, default=DEFAULT_RMAX, help=f"射线扫描最大半径（默认: {DEFAULT_RMAX:g}）")
    parser.add_argument("--eps-rel", type=float, default=DEFAULT_EPS_REL, help="零点相对阈值（默认: 1e-6）")
    parser.add_argument("--out", help="输出目录（未指定时打印到 stdout）")
    parser.add_argument("--format", choices=FORMATS, default="json", help="表格产物格式：constants/certify/ortho 的表格文件；scan 未指定 --out 时决定 stdout 内容（默认: json）")
    parser.add_argument("--workers", type=int, default=1, help="校验线程数（默认: 1）")
    parser.add_argument("--verbose", "-v", action="store_true", help="输出调试日志")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerofree",
        description="模糊函数与分数阶傅里叶变换的认证无零区域工具"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("constants", help="余弦下界常数表"), with_signal=False)
    _add_common(sub.add_parser("analyze", help="信号范数、离散度与 Heisenberg 诊断"))

    certify = sub.add_parser("certify", help="认证无零区域并暴力校验")
    _add_common(certify)
    certify.add_argument("--mode", choices=MODES, default="rhombus", help="区域模式（默认: rhombus）")
    certify.add_argument("--revalidate", help="复验已有的 region.json")

    scan = sub.add_parser("scan", help="模糊函数网格与射线扫描")
    _add_common(scan)
    scan.add_argument("--points", type=int, default=DEFAULT_SCAN_POINTS, help="每轴网格点数（默认: 65）")
    scan.add_argument("--extent", type=float, default=DEFAULT_SCAN_EXTENT, help="网格半宽（默认: 2）")

    ortho = sub.add_parser("ortho", help="平移 / 调制正交下界")
    _add_common(ortho)
    ortho.add_argument("--side", choices=SIDES, default="both", help="检查哪一侧（默认: both）")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """解析参数并执行子命令，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.verbose)
    console = Console(stderr=True)

    try:
        config = config_from_args(args)
        return COMMAND_HANDLERS[config.command](config, console)
    except ZerofreeError as e:
        say(console, f"❌ 错误: {e}")
        return e.exit_code
    except (ValueError, OSError) as e:
        say(console, f"❌ 错误: {e}")
        return EXIT_USAGE
