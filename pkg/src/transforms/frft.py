#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
分数阶傅里叶变换 F_α

定义（c_α 为 1 − i·cot α 的主平方根，α 约化到 (−π, π]）：

    F_α f(ξ) = c_α e^{iπξ²cot α} ∫ f(t) e^{iπt²cot α} e^{−2iπtξ/sin α} dt

F_0 为恒等，F_{π/2} 为傅里叶变换 û(ξ) = ∫u e^{−2iπξt}，F_π 为反射 f(−ξ)，
且 F_α F_β = F_{α+β}。高斯 2^{1/4}e^{−πt²} 是特征值为 1 的特征函数。

实现：
 - 直接 O(N²) 求积（参考实现）；
 - |sin α| < sin(π/8) 时走分解 F_α = F_{α−π/2} ∘ F_{π/2}，
   保证实际执行的每次直接求积都有 |sin| ≥ cos(π/8)。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from signals.moments import moment_l1
from signals.sampled import SampledSignal, power
from signals.spectral import CHUNK_ROWS, fourier, interpolate


logger = logging.getLogger(__name__)

DECOMPOSE_THRESHOLD = math.sin(math.pi / 8)
DEGENERATE_TOL = 1e-12

ROUTE_IDENTITY = "identity"
ROUTE_REFLECTION = "reflection"
ROUTE_DIRECT = "direct"
ROUTE_DECOMPOSED = "decomposed"


@dataclass(frozen=True)
class FrftPlan:
    """F_α 的求值计划"""
    alpha: float
    c_alpha: complex
    degenerate: bool
    route: str


def reduce_angle(alpha: float) -> float:
    """把 α 约化到 (−π, π]"""
    reduced = math.remainder(float(alpha), 2 * math.pi)
    if reduced <= -math.pi + DEGENERATE_TOL:
        reduced += 2 * math.pi
    return reduced


def plan_frft(alpha: float) -> FrftPlan:
    """为角度 α 选择求值路线并计算 c_α"""
    reduced = reduce_angle(alpha)
    if abs(reduced) < DEGENERATE_TOL:
        return FrftPlan(alpha=0.0, c_alpha=1 + 0j, degenerate=True, route=ROUTE_IDENTITY)
    if abs(reduced - math.pi) < DEGENERATE_TOL:
        return FrftPlan(alpha=math.pi, c_alpha=1 + 0j, degenerate=True, route=ROUTE_REFLECTION)

    c_alpha = complex(np.sqrt(1 - 1j / math.tan(reduced)))
    route = ROUTE_DIRECT if abs(math.sin(reduced)) >= DECOMPOSE_THRESHOLD else ROUTE_DECOMPOSED
    return FrftPlan(alpha=reduced, c_alpha=c_alpha, degenerate=False, route=route)


def _direct(u: SampledSignal, plan: FrftPlan, xi: np.ndarray) -> np.ndarray:
    """直接求积，要求 |sin α| 远离 0"""
    sin_a = math.sin(plan.alpha)
    cot_a = math.cos(plan.alpha) / sin_a
    t = u.times()
    chirped = u.samples * np.exp(1j * math.pi * cot_a * t * t)
    out = np.empty(xi.size, dtype=complex)
    for start in range(0, xi.size, CHUNK_ROWS):
        block = xi[start:start + CHUNK_ROWS]
        kernel = np.exp(-2j * math.pi * np.outer(block, t) / sin_a)
        out[start:start + block.size] = u.dt * (kernel @ chirped)
    return plan.c_alpha * np.exp(1j * math.pi * cot_a * xi * xi) * out


def _on_grid(u: SampledSignal, plan: FrftPlan) -> SampledSignal:
    """在与输入一致的网格上求 F_α u"""
    xi = u.times()
    if plan.route == ROUTE_IDENTITY:
        return u
    if plan.route == ROUTE_REFLECTION:
        # 网格关于 0 对称（整数个样本偏移）时直接重排，否则带限插值
        position = -2 * u.t0 / u.dt
        offset = round(position)
        if abs(position - offset) <= 1e-9 * max(1.0, abs(position)):
            index = offset - np.arange(u.n)
            valid = (index >= 0) & (index < u.n)
            values = np.zeros(u.n, dtype=complex)
            values[valid] = u.samples[index[valid]]
            jumps = [offset - m for m in u.jumps if 0 <= offset - m < u.n]
            return u.with_samples(values, jumps)
        return u.with_samples(interpolate(u, -xi))
    if plan.route == ROUTE_DIRECT:
        return u.with_samples(_direct(u, plan, xi))

    first = _on_grid(u, plan_frft(math.pi / 2))
    return first.with_samples(_direct(first, plan_frft(plan.alpha - math.pi / 2), xi))


def frft(u: SampledSignal, alpha: float) -> SampledSignal:
    """
    分数阶傅里叶变换，输出网格与输入窗口一致

    Args:
        u: 输入信号
        alpha: 角度（弧度），任意实数

    Returns:
        F_α u 的采样
    """
    plan = plan_frft(alpha)
    logger.debug("F_α: α=%.6f 路线=%s", plan.alpha, plan.route)
    return _on_grid(u, plan)


def frft_eval(u: SampledSignal, alpha: float, xi: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """
    在任意输出点 ξ 上求 F_α u(ξ)

    恒等与反射路线用带限插值；分解路线先在输入网格上做 F_{π/2}。
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    plan = plan_frft(alpha)
    if plan.route == ROUTE_IDENTITY:
        return interpolate(u, xi)
    if plan.route == ROUTE_REFLECTION:
        return interpolate(u, -xi)
    if plan.route == ROUTE_DIRECT:
        return _direct(u, plan, xi)
    first = _on_grid(u, plan_frft(math.pi / 2))
    return _direct(first, plan_frft(plan.alpha - math.pi / 2), xi)


# ==================== 矩转移 ====================

def frft_moment(u: SampledSignal, alpha: float) -> float:
    """‖t·F_α u‖₂"""
    return math.sqrt(moment_l1(power(frft(u, alpha)), 2.0, 0.0))


def frft_moment_rhs(u: SampledSignal, alpha: float) -> float:
    """
    ‖t·F_α u‖₂ 的上界 ‖tu‖₂|cos α| + ‖ξû‖₂|sin α|

    由 F_α^{-1}·ξ·F_α = cos α·t + sin α·D（D 为频率算子）与三角不等式得到。
    """
    time_moment = math.sqrt(moment_l1(power(u), 2.0, 0.0))
    freq_moment = math.sqrt(moment_l1(power(fourier(u)), 2.0, 0.0))
    return time_moment * abs(math.cos(alpha)) + freq_moment * abs(math.sin(alpha))
