#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
运行配置 - 命令行参数到 RunConfig 的转换与校验

默认值：N = 1024，窗口 [−8, 8]，32 个方向，r_max = 3，q = 2，eps_rel = 1e−6。
"""

from __future__ import annotations

import argparse
import math
import os
import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from signals.csv_io import read_signal_csv
from signals.generators import generate, parse_generator
from signals.sampled import SampledSignal


COMMANDS = ("constants", "analyze", "certify", "scan", "ortho")
FORMATS = ("json", "csv")
MODES = ("rhombus", "star")
SIDES = ("both", "translate", "modulation")

DEFAULT_N = 1024
DEFAULT_WINDOW = (-8.0, 8.0)
DEFAULT_DIRS = 32
DEFAULT_RMAX = 3.0
DEFAULT_Q = 2.0
DEFAULT_EPS_REL = 1e-6
DEFAULT_SCAN_POINTS = 65
DEFAULT_SCAN_EXTENT = 2.0


@dataclass
class GridConfig:
    """采样网格"""
    n: int = DEFAULT_N
    lo: float = DEFAULT_WINDOW[0]
    hi: float = DEFAULT_WINDOW[1]

    @property
    def window(self) -> Tuple[float, float]:
        return (self.lo, self.hi)


@dataclass
class RunConfig:
    """一次命令运行的完整配置"""
    command: str
    signal_path: Optional[str] = None
    generator: Optional[str] = None
    q: float = DEFAULT_Q
    q_list: List[float] = field(default_factory=list)
    minorant: str = "auto"
    mode: str = "rhombus"
    side: str = "both"
    grid: GridConfig = field(default_factory=GridConfig)
    dirs: int = DEFAULT_DIRS
    r_max: float = DEFAULT_RMAX
    eps_rel: float = DEFAULT_EPS_REL
    scan_points: int = DEFAULT_SCAN_POINTS
    scan_extent: float = DEFAULT_SCAN_EXTENT
    out_dir: Optional[str] = None
    fmt: str = "json"
    revalidate: Optional[str] = None
    workers: int = 1
    verbose: bool = False

    def validate(self) -> "RunConfig":
        """
        Raises:
            ValueError: 配置不合法（命令行以退出码 2 报告）
        """
        if self.command not in COMMANDS:
            raise ValueError(f"未知命令: {self.command}")
        for q in [self.q] + list(self.q_list):
            if not (math.isfinite(q) and q > 0):
                raise ValueError(f"q 必须为正: {q}")
        if self.command != "constants":
            if bool(self.signal_path) == bool(self.generator):
                raise ValueError("必须且只能指定一个信号来源: --signal <csv> 或 --gen <spec>")
        if self.fmt not in FORMATS:
            raise ValueError(f"未知输出格式: {self.fmt}")
        if self.mode not in MODES:
            raise ValueError(f"未知区域模式: {self.mode}")
        if self.side not in SIDES:
            raise ValueError(f"未知正交侧: {self.side}")
        if self.dirs < 1:
            raise ValueError(f"方向数必须 ≥ 1: {self.dirs}")
        if not self.r_max > 0:
            raise ValueError(f"r_max 必须为正: {self.r_max}")
        if not 0 < self.eps_rel < 1:
            raise ValueError(f"eps_rel 必须在 (0, 1) 内: {self.eps_rel}")
        if self.scan_points < 1 or not self.scan_extent > 0:
            raise ValueError("扫描网格参数非法")
        if self.out_dir:
            os.makedirs(self.out_dir, exist_ok=True)
            if not os.access(self.out_dir, os.W_OK):
                raise ValueError(f"输出目录不可写: {self.out_dir}")
        return self

    def output_path(self, name: str) -> Optional[str]:
        return os.path.join(self.out_dir, name) if self.out_dir else None


# ==================== 解析 ====================

_GRID_ITEM = re.compile(r"^\s*(N|n|win)\s*=\s*(.+?)\s*$")


def parse_grid(text: Optional[str]) -> GridConfig:
    """
    解析 --grid，如 "N=2048,win=-4:4"

    Raises:
        ValueError: 格式错误
    """
    grid = GridConfig()
    if not text:
        return grid
    for item in text.split(","):
        match = _GRID_ITEM.match(item)
        if not match:
            raise ValueError(f"无法解析 --grid 项: '{item}'（格式 N=<n>,win=<lo:hi>）")
        key, value = match.group(1).lower(), match.group(2)
        try:
            if key == "n":
                grid.n = int(value)
            else:
                lo, hi = value.split(":")
                grid.lo, grid.hi = float(lo), float(hi)
        except ValueError:
            raise ValueError(f"--grid 数值非法: '{item}'") from None
    if grid.n < 16 or not grid.lo < grid.hi:
        raise ValueError(f"--grid 非法: N={grid.n}, win=[{grid.lo}, {grid.hi}]")
    return grid


def parse_q_list(text: str) -> List[float]:
    """解析 "1,2,3" 形式的 q 列表"""
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ValueError(f"无法解析 q 列表: '{text}'") from None
    if not values:
        raise ValueError("q 列表为空")
    return values


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """argparse 结果 → RunConfig"""
    q_values = parse_q_list(args.q) if args.q is not None else [DEFAULT_Q]
    config = RunConfig(
        command=args.command,
        signal_path=getattr(args, "signal", None),
        generator=getattr(args, "gen", None),
        q=q_values[0],
        q_list=q_values,
        minorant=args.minorant,
        mode=getattr(args, "mode", "rhombus"),
        side=getattr(args, "side", "both"),
        grid=parse_grid(getattr(args, "grid", None)),
        dirs=args.dirs,
        r_max=args.rmax,
        eps_rel=args.eps_rel,
        scan_points=getattr(args, "points", DEFAULT_SCAN_POINTS),
        scan_extent=getattr(args, "extent", DEFAULT_SCAN_EXTENT),
        out_dir=args.out,
        fmt=args.format,
        revalidate=getattr(args, "revalidate", None),
        workers=args.workers,
        verbose=args.verbose,
    )
    return config.validate()


def load_signal(config: RunConfig) -> Tuple[SampledSignal, str]:
    """
    按配置读取或生成信号

    Returns:
        (信号, 来源描述)
    """
    if config.signal_path:
        return read_signal_csv(config.signal_path), config.signal_path
    spec = parse_generator(config.generator, n=config.grid.n, window=config.grid.window)
    return generate(spec), spec.label()
