#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
波形生成器 - 内置测试信号

功能：
 - gaussian: 2^{1/4} e^{−πt²}
 - hermite(n): 傅里叶特征函数 ĥ_n = (−i)^n h_n（归一化递推）
 - rect(width): [−width/2, width/2] 的示性函数，解析单位能量
 - chirp(rate): 高斯包络线性调频 2^{1/4} e^{−πt²} e^{iπ·rate·t²}
 - two_pulse(separation, pulse_width): 位于 ±separation/2 的两个高斯脉冲

网格：t_k = lo + k·(hi − lo)/N，k = 0..N−1。

使用示例：
    spec = parse_generator("hermite(1)", n=1024, window=(-8, 8))
    u = generate(spec)
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np
import numpy.typing as npt

from errors import SignalError
from signals.sampled import SampledSignal, l2_norm


logger = logging.getLogger(__name__)

# 窗口外能量占比上限（衰减型信号）
TAIL_MASS_LIMIT = 1e-12
# rect 边界与样本点对齐的容差（以样本间隔计）
ALIGN_TOL = 1e-9
MIN_SAMPLES = 16

# 各波形的参数名（按位置参数顺序）
GENERATOR_PARAMS: Dict[str, Tuple[str, ...]] = {
    "gaussian": (),
    "hermite": ("n",),
    "rect": ("width",),
    "chirp": ("rate",),
    "two_pulse": ("separation", "pulse_width"),
}

GENERATOR_DEFAULTS: Dict[str, Dict[str, float]] = {
    "hermite": {"n": 0},
    "rect": {"width": 1.0},
    "chirp": {"rate": 1.0},
    "two_pulse": {"separation": 3.0, "pulse_width": 0.5},
}


@dataclass(frozen=True)
class GeneratorSpec:
    """生成器规格"""
    kind: str
    n: int = 1024
    window: Tuple[float, float] = (-8.0, 8.0)
    params: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in GENERATOR_PARAMS:
            raise SignalError(f"未知波形: {self.kind}（可选: {', '.join(GENERATOR_PARAMS)}）")
        if int(self.n) != self.n or self.n < MIN_SAMPLES:
            raise SignalError(f"样本数必须为 ≥ {MIN_SAMPLES} 的整数: N={self.n}")
        lo, hi = self.window
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise SignalError(f"窗口非法: [{lo}, {hi}]")
        unknown = set(self.params) - set(GENERATOR_PARAMS[self.kind])
        if unknown:
            raise SignalError(f"{self.kind} 不接受参数: {', '.join(sorted(unknown))}")
        merged = dict(GENERATOR_DEFAULTS.get(self.kind, {}))
        merged.update(self.params)
        object.__setattr__(self, "params", merged)

    @property
    def dt(self) -> float:
        lo, hi = self.window
        return (hi - lo) / self.n

    def label(self) -> str:
        """规范化文本形式，如 hermite(1)"""
        names = GENERATOR_PARAMS[self.kind]
        if not names:
            return self.kind
        args = ",".join(f"{self.params[name]:g}" for name in names)
        return f"{self.kind}({args})"


# ==================== 闭式波形 ====================

def hermite_function(order: int, t: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """
    归一化 Hermite 函数 h_n(t)，对应傅里叶约定 e^{−2iπξt}

    h_n(t) = (2π)^{1/4}·φ_n(√(2π)t)，φ_n 为标准 Hermite 函数，用递推
    φ_{k+1} = √(2/(k+1))·x·φ_k − √(k/(k+1))·φ_{k−1} 计算，避免阶乘溢出。
    """
    if order < 0:
        raise SignalError(f"Hermite 阶数必须 ≥ 0: {order}")
    x = math.sqrt(2 * math.pi) * np.asarray(t, dtype=float)
    previous = np.zeros_like(x)
    current = math.pi ** -0.25 * np.exp(-0.5 * x * x)
    for k in range(order):
        previous, current = current, math.sqrt(2.0 / (k + 1)) * x * current - math.sqrt(k / (k + 1)) * previous
    return (2 * math.pi) ** 0.25 * current


def _evaluate(spec: GeneratorSpec, t: np.ndarray) -> np.ndarray:
    params = spec.params
    if spec.kind == "gaussian":
        return hermite_function(0, t)
    if spec.kind == "hermite":
        order = params["n"]
        if int(order) != order:
            raise SignalError(f"Hermite 阶数必须为整数: {order}")
        return hermite_function(int(order), t)
    if spec.kind == "chirp":
        return hermite_function(0, t) * np.exp(1j * math.pi * params["rate"] * t * t)
    if spec.kind == "two_pulse":
        half = 0.5 * params["separation"]
        width = params["pulse_width"]
        if width <= 0:
            raise SignalError(f"pulse_width 必须为正: {width}")
        return np.exp(-math.pi * ((t - half) / width) ** 2) + np.exp(-math.pi * ((t + half) / width) ** 2)
    raise SignalError(f"{spec.kind} 没有闭式求值")


def _rect(spec: GeneratorSpec) -> SampledSignal:
    """
    示性函数，幅度 1/√width

    ±width/2 必须落在样本点上；跳变点取半高 h/2 并记入 jumps，
    power 在跳变点给出 |u|² 的半高 h²/2。对齐网格上 ‖u‖₁ 与 ‖u‖₂² 离散精确。
    """
    width = spec.params["width"]
    if width <= 0:
        raise SignalError(f"rect 宽度必须为正: {width}")
    lo, _ = spec.window
    dt = spec.dt
    edges = []
    for edge in (-0.5 * width, 0.5 * width):
        position = (edge - lo) / dt
        index = round(position)
        if abs(position - index) > ALIGN_TOL * max(1.0, abs(position)) or not 0 <= index < spec.n:
            raise SignalError(
                f"rect 边界 {edge:g} 未落在样本点上，请调整窗口或 N（dt={dt:g}）"
            )
        edges.append(int(index))

    height = 1.0 / math.sqrt(width)
    samples = np.zeros(spec.n)
    samples[edges[0]:edges[1] + 1] = height
    samples[edges[0]] = samples[edges[1]] = 0.5 * height
    return SampledSignal(samples, dt, lo, tuple(edges))


def generate(spec: GeneratorSpec) -> SampledSignal:
    """
    生成单位能量采样信号

    衰减型波形在窗口两侧各延拓一个窗口宽度检查尾部能量，
    超过总能量的 TAIL_MASS_LIMIT 时拒绝；随后按离散 ‖u‖₂ 归一化。

    Args:
        spec: 生成器规格

    Returns:
        SampledSignal

    Raises:
        SignalError: 参数非法或窗口过小
    """
    if spec.kind == "rect":
        return _rect(spec)

    lo, _ = spec.window
    dt = spec.dt
    n = spec.n
    extended = lo + np.arange(-n, 2 * n) * dt
    values = _evaluate(spec, extended)
    energy = np.abs(values) ** 2
    inside = float(np.sum(energy[n:2 * n]))
    tail = float(np.sum(energy[:n]) + np.sum(energy[2 * n:]))
    total = inside + tail
    if total == 0 or tail > TAIL_MASS_LIMIT * total:
        raise SignalError(
            f"窗口过小: {spec.label()} 在 [{spec.window[0]:g}, {spec.window[1]:g}] 外的能量占比 "
            f"{tail / total if total else float('nan'):.2e} > {TAIL_MASS_LIMIT:g}"
        )

    u = SampledSignal(values[n:2 * n], dt, lo)
    norm = l2_norm(u)
    logger.debug("生成 %s: N=%d, 归一化前 ‖u‖₂=%.15f", spec.label(), n, norm)
    return u.scaled(1.0 / norm)


# ==================== 文本解析 ====================

_SPEC_PATTERN = re.compile(r"^\s*([a-z_]+)\s*(?:\((.*)\))?\s*$")


def parse_generator(text: str, n: int = 1024, window: Tuple[float, float] = (-8.0, 8.0)) -> GeneratorSpec:
    """
    解析生成器文本

    支持位置参数与关键字参数：
        gaussian / hermite(1) / rect(width=1) / chirp(0.5) / two_pulse(3, 0.5)
    """
    match = _SPEC_PATTERN.match(text or "")
    if not match:
        raise SignalError(f"无法解析生成器: {text!r}")
    kind, body = match.group(1), match.group(2)
    if kind not in GENERATOR_PARAMS:
        raise SignalError(f"未知波形: {kind}")

    names = GENERATOR_PARAMS[kind]
    params: Dict[str, float] = {}
    if body and body.strip():
        for position, item in enumerate(part.strip() for part in body.split(",")):
            if "=" in item:
                key, raw = (s.strip() for s in item.split("=", 1))
            elif position < len(names):
                key, raw = names[position], item
            else:
                raise SignalError(f"{kind} 参数过多: {text!r}")
            try:
                params[key] = float(raw)
            except ValueError:
                raise SignalError(f"参数 {key} 不是数值: {raw!r}") from None
    return GeneratorSpec(kind=kind, n=n, window=(float(window[0]), float(window[1])), params=params)
