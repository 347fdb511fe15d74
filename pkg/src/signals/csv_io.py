#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
信号 CSV 读写

格式：表头 `t,re,im`，每行一个样本，t 严格递增且等间隔
（相对间隔抖动 ≤ 1e−9）。
"""

from __future__ import annotations

import os

import numpy as np

from errors import SignalFormatError
from signals.sampled import SampledSignal


SIGNAL_HEADER = "t,re,im"
SPACING_JITTER = 1e-9


def read_signal_csv(path: str) -> SampledSignal:
    """
    读取信号 CSV

    Raises:
        SignalFormatError: 文件不存在、表头不符、为空、列数不对或非等间隔
    """
    if not os.path.isfile(path):
        raise SignalFormatError(f"信号文件不存在: {path}")

    with open(path, "r", encoding="utf-8") as f:
        header = f.readline().strip().replace(" ", "")
        if header != SIGNAL_HEADER:
            raise SignalFormatError(f"表头应为 '{SIGNAL_HEADER}'，实际为 '{header}': {path}")
        try:
            data = np.loadtxt(f, delimiter=",", ndmin=2)
        except ValueError as e:
            raise SignalFormatError(f"无法解析数值: {path}: {e}") from None

    if data.size == 0:
        raise SignalFormatError(f"信号文件为空: {path}")
    if data.shape[1] != 3:
        raise SignalFormatError(f"每行应有 3 列 (t,re,im)，实际为 {data.shape[1]}: {path}")
    if data.shape[0] < 2:
        raise SignalFormatError(f"至少需要 2 个样本: {path}")

    t = data[:, 0]
    steps = np.diff(t)
    if np.any(steps <= 0):
        raise SignalFormatError(f"时间列必须严格递增: {path}")
    dt = (t[-1] - t[0]) / (t.size - 1)
    jitter = float(np.max(np.abs(steps - dt)) / dt)
    if jitter > SPACING_JITTER:
        raise SignalFormatError(f"采样非等间隔（相对抖动 {jitter:.2e} > {SPACING_JITTER:g}）: {path}")

    return SampledSignal(data[:, 1] + 1j * data[:, 2], float(dt), float(t[0]))


def write_signal_csv(u: SampledSignal, path: str) -> None:
    """写入信号 CSV（%.17g 保证往返精确）"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    samples = np.asarray(u.samples, dtype=complex)
    table = np.column_stack([u.times(), samples.real, samples.imag])
    np.savetxt(path, table, delimiter=",", header=SIGNAL_HEADER, comments="", fmt="%.17g")
