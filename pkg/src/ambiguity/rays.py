#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
射线零点扫描 - 沿方向 ±θ 寻找 A(u) 的经验首零点

流程：
 1. 以步长 r_max/1024 采样 |A| 于两条射线；
 2. 取内部局部极小点，在相邻两个采样区间内用黄金分割细化；
 3. 细化后 |A| ≤ eps_rel·‖u‖₂² 视为零点；两条射线上最小者为首零点。

沿射线 A 为复值，零点要求实部虚部同时为零，因此用 |A| 而不是符号变化检测。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from numerics.search import golden_minimize
from signals.sampled import SampledSignal, l2_norm
from signals.spectral import PaddedSpectrum, fourier_at
from ambiguity.surface import ambiguity_points, section_weight


logger = logging.getLogger(__name__)

RAY_STEPS = 1024
DEFAULT_EPS_REL = 1e-6
# 细化半径容差（不大于 1e-6）
REFINE_TOL = 1e-9

ROUTE_SECTION = "section"
ROUTE_DIRECT = "direct"


@dataclass(frozen=True)
class RayScan:
    """方向 θ 上的扫描结果"""
    theta: float
    radii: np.ndarray
    magnitudes_plus: np.ndarray
    magnitudes_minus: np.ndarray
    first_zero: Optional[float]
    threshold: float
    route: str = ROUTE_SECTION


def _ray_evaluator(u: SampledSignal, theta: float, route: str) -> Callable[[np.ndarray], np.ndarray]:
    """返回 r ↦ A(u)(r cos θ, r sin θ)，r 可为负"""
    if route == ROUTE_SECTION:
        weight = section_weight(u, theta)
        return lambda rs: fourier_at(weight, rs)
    if route == ROUTE_DIRECT:
        spectrum = PaddedSpectrum(u)
        # 坐标轴方向上 cos/sin 的舍入残差置零，使 x = 0 走 power(u)
        c, s = (0.0 if abs(v) < 1e-15 else v for v in (math.cos(theta), math.sin(theta)))
        return lambda rs: ambiguity_points(u, rs * c, rs * s, spectrum)
    raise ValueError(f"未知扫描路线: {route}")


def _refine_zeros(
    evaluate: Callable[[np.ndarray], np.ndarray],
    radii: np.ndarray,
    magnitudes: np.ndarray,
    sign: float,
    threshold: float
) -> List[float]:
    """细化一条射线上的局部极小点，返回判定为零点的半径"""
    zeros = []
    inner = np.arange(1, radii.size - 1)
    local_min = (magnitudes[inner] <= magnitudes[inner - 1]) & (magnitudes[inner] <= magnitudes[inner + 1])
    for i in inner[local_min]:
        def objective(r: float) -> float:
            return float(abs(evaluate(np.array([sign * r]))[0]))

        r, value = golden_minimize(objective, radii[i - 1], radii[i + 1], REFINE_TOL)
        if value <= threshold:
            zeros.append(r)
            break
    return zeros


def first_zero_on_ray(
    u: SampledSignal,
    theta: float,
    r_max: float,
    eps_rel: float = DEFAULT_EPS_REL,
    route: str = ROUTE_SECTION
) -> RayScan:
    """
    沿 ±θ 射线搜索首零点

    Args:
        u: 信号
        theta: 方向角
        r_max: 最大半径 (> 0)
        eps_rel: 相对阈值，零点判据 |A| ≤ eps_rel·‖u‖₂²
        route: "section"（FrFT 截面）或 "direct"（直接求积）

    Returns:
        RayScan；无零点时 first_zero 为 None
    """
    if not r_max > 0:
        raise ValueError(f"r_max 必须为正: {r_max}")
    if not 0 < eps_rel < 1:
        raise ValueError(f"eps_rel 必须在 (0, 1) 内: {eps_rel}")

    evaluate = _ray_evaluator(u, theta, route)
    radii = np.linspace(0.0, r_max, RAY_STEPS + 1)
    plus = np.abs(evaluate(radii))
    minus = np.abs(evaluate(-radii))
    threshold = eps_rel * l2_norm(u) ** 2

    zeros = _refine_zeros(evaluate, radii, plus, 1.0, threshold)
    zeros += _refine_zeros(evaluate, radii, minus, -1.0, threshold)
    first_zero = min(zeros) if zeros else None
    logger.debug("θ=%.4f 首零点=%s（路线 %s）", theta, first_zero, route)

    return RayScan(
        theta=float(theta),
        radii=radii,
        magnitudes_plus=plus,
        magnitudes_minus=minus,
        first_zero=first_zero,
        threshold=threshold,
        route=route,
    )
