#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
采样信号 - 均匀网格上的复信号、求积与范数

功能：
 - SampledSignal: 样本 + 网格元数据（dt, t0, 跳变点），窗口外视为零
 - l2_norm / l1_norm: 零延拓网格上的梯形求积
 - power: |u|² 权重（跳变点取两侧极限的平均）
 - translate / modulate: 时移与调制（不改变 |A(u)|）

网格约定：t_k = t0 + k·dt，k = 0..N−1。
零延拓后梯形公式恰为 dt·Σ，离散 Parseval 恒等式因此精确成立。

跳变点：u 在 t_k 处间断时样本取两侧极限的中点（半高）。|u|² 在该点的半高
是 (|u(t_k−)|² + |u(t_k+)|²)/2，与样本值的平方不同，由 power 单独处理。
矩与离散度见 signals.moments。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
import numpy.typing as npt

from errors import SignalError, WeightError


logger = logging.getLogger(__name__)

# 非负权重的负值容差（|F_αu|² 等数值产物的舍入噪声）
NEGATIVE_TOL = 1e-12


@dataclass(frozen=True)
class SampledSignal:
    """均匀采样信号，样本近似 u(t0 + k·dt)"""
    samples: npt.NDArray
    dt: float
    t0: float = 0.0
    # 跳变点下标（样本为两侧极限的中点）
    jumps: Tuple[int, ...] = ()

    def __post_init__(self):
        samples = np.asarray(self.samples)
        samples = samples.astype(complex if np.iscomplexobj(samples) else float, copy=True)
        if samples.ndim != 1 or samples.size == 0:
            raise SignalError("样本必须是非空一维数组")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise SignalError(f"采样间隔必须为正: dt={self.dt}")
        if not math.isfinite(self.t0):
            raise SignalError(f"起始时刻非有限: t0={self.t0}")
        if not np.all(np.isfinite(samples)):
            raise SignalError("样本包含非有限值")
        jumps = tuple(sorted({int(k) for k in self.jumps}))
        if jumps and not (0 <= jumps[0] and jumps[-1] < samples.size):
            raise SignalError(f"跳变点下标越界: {jumps}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "jumps", jumps)

    @property
    def n(self) -> int:
        return int(self.samples.size)

    @property
    def t_end(self) -> float:
        """最后一个样本的时刻"""
        return self.t0 + (self.n - 1) * self.dt

    @property
    def span(self) -> float:
        return self.n * self.dt

    def times(self) -> npt.NDArray[np.float64]:
        return self.t0 + np.arange(self.n) * self.dt

    def with_samples(self, samples: npt.ArrayLike, jumps: Sequence[int] = ()) -> "SampledSignal":
        """同一网格上的新样本（跳变点需显式传入）"""
        return SampledSignal(np.asarray(samples), self.dt, self.t0, tuple(jumps))

    def scaled(self, factor: complex) -> "SampledSignal":
        return self.with_samples(self.samples * factor, self.jumps)


# ==================== 求积与范数 ====================

def integrate(values: npt.ArrayLike, dt: float):
    """零延拓网格上的梯形求积（等于 dt·Σ）"""
    return dt * np.sum(values)


def power(u: SampledSignal) -> SampledSignal:
    """|u|² 作为非负权重，跳变点取 (|u_{k−1}|² + |u_{k+1}|²)/2"""
    values = np.abs(u.samples) ** 2
    if u.jumps:
        padded = np.concatenate(([0.0], values, [0.0]))
        index = np.asarray(u.jumps)
        values[index] = 0.5 * (padded[index] + padded[index + 2])
    return u.with_samples(values, u.jumps)


def l2_norm(u: SampledSignal) -> float:
    """‖u‖₂"""
    return math.sqrt(float(integrate(power(u).samples, u.dt)))


def l1_norm(u: SampledSignal) -> float:
    """‖u‖₁"""
    return float(integrate(np.abs(u.samples), u.dt))


def as_weight(w: SampledSignal) -> npt.NDArray[np.float64]:
    """
    校验并返回非负实权重

    虚部或负值超出 NEGATIVE_TOL 时拒绝；容差内的负值截断为 0。

    Raises:
        WeightError: 不是非负权重
    """
    values = w.samples
    if np.iscomplexobj(values):
        if np.max(np.abs(values.imag)) > NEGATIVE_TOL:
            raise WeightError("not a non-negative weight: 含非零虚部")
        values = values.real
    if np.min(values) < -NEGATIVE_TOL:
        raise WeightError(f"not a non-negative weight: 最小值 {np.min(values):.3e}")
    return np.clip(values, 0.0, None)


# ==================== 时移与调制 ====================

def translate(u: SampledSignal, a: float) -> SampledSignal:
    """u(t − a)：网格整体平移，样本不变"""
    return SampledSignal(u.samples, u.dt, u.t0 + a, u.jumps)


def modulate(u: SampledSignal, omega: float) -> SampledSignal:
    """u(t)·e^{iωt}"""
    return u.with_samples(u.samples * np.exp(1j * omega * u.times()), u.jumps)
