#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
下界校验 - 判定 a·cos x ≥ 1 − c|x|^q 对所有实数 x 成立

记 g(x) = a·cos x − 1 + c·x^q = (a − 1) − 2a·sin²(x/2) + c·x^q（x ≥ 0，g 为偶函数）。

校验分三段：
 1. x ≥ x_cut = ((1 + a)/c)^{1/q}：1 − c·x^q ≤ −a ≤ a·cos x，平凡成立
    （要求 x_cut ≤ π，否则 g(π) < 0 直接失败）；
 2. [0, x_a]：由 a·cos x ≥ a − a·x²/2 得 g ≥ c·x^q − a·x²/2 ≥ 0，
    q < 2 时 x_a = (2c/a)^{1/(2−q)}，q = 2 且 2c ≥ a 时覆盖全部；
 3. [x_a, x_cut]：步长 1e−4 的网格，区间下界取一阶 L·h/2 与二阶 M·h²/8 的较小扣除量，
    未通过的区间逐层 8 等分（至多 4 层）。

网格上出现负值即判定不成立，见证点为最小值位置。
"""

from __future__ import annotations

import logging
import math
from typing import NamedTuple, Optional

import numpy as np
import numpy.typing as npt


logger = logging.getLogger(__name__)

GRID_STEP = 1e-4
REFINE_FACTOR = 8
REFINE_LEVELS = 4


class Verdict(NamedTuple):
    """校验结论"""
    verified: bool
    margin: float
    witness: Optional[float]


def minorant_gap(a: float, c: float, q: float, x: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """g(x) = a·cos x − 1 + c|x|^q（数值稳定形式）"""
    x = np.abs(np.asarray(x, dtype=float))
    return (a - 1.0) - 2.0 * a * np.sin(0.5 * x) ** 2 + c * x ** q


def cutoff_radius(a: float, c: float, q: float) -> float:
    """x_cut = ((1 + a)/c)^{1/q}"""
    return ((1.0 + a) / c) ** (1.0 / q)


def _analytic_limit(a: float, c: float, q: float, x_cut: float) -> float:
    if q < 2:
        return min((2.0 * c / a) ** (1.0 / (2.0 - q)), x_cut)
    if q == 2 and 2.0 * c >= a:
        return x_cut
    return 0.0


def _derivative_bounds(a: float, c: float, q: float, x_a: float, x_cut: float):
    """[x_a, x_cut] 上 |g'| 与 |g''| 的上界"""
    if q >= 1:
        lipschitz = a + c * q * max(x_cut, 1.0) ** (q - 1.0)
    else:
        lipschitz = a + c * q * x_a ** (q - 1.0)
    if q < 2:
        curvature = a + c * q * abs(q - 1.0) * x_a ** (q - 2.0)
    else:
        curvature = a + c * q * abs(q - 1.0) * x_cut ** (q - 2.0)
    return lipschitz, curvature


def verify_minorant(a: float, c: float, q: float) -> Verdict:
    """
    校验 a·cos x ≥ 1 − c|x|^q

    Args:
        a, c, q: 正常数

    Returns:
        Verdict(verified, margin, witness)：margin 为所有求值点上 g 的最小值，
        不成立时 witness 为违例点（无法定论时为最差区间的位置）
    """
    if not (a > 0 and c > 0 and q > 0):
        raise ValueError(f"a, c, q 必须为正: a={a}, c={c}, q={q}")

    def g(x):
        return minorant_gap(a, c, q, x)

    if a < 1:
        return Verdict(False, float(g(0.0)), 0.0)

    x_cut = cutoff_radius(a, c, q)
    if x_cut > math.pi:
        return Verdict(False, float(g(math.pi)), math.pi)

    x_a = _analytic_limit(a, c, q, x_cut)
    margin = float(min(g(0.0), g(x_a), g(x_cut)))
    if x_a >= x_cut:
        logger.debug("(%g, %g, %g) 解析下界覆盖 [0, %.6f]", a, c, q, x_cut)
        return Verdict(True, margin, None)

    lipschitz, curvature = _derivative_bounds(a, c, q, x_a, x_cut)
    steps = max(1, int(math.ceil((x_cut - x_a) / GRID_STEP)))
    h = (x_cut - x_a) / steps
    lefts = x_a + h * np.arange(steps)

    for level in range(REFINE_LEVELS + 1):
        points = np.stack([lefts, lefts + h], axis=1)
        values = g(points)
        worst = np.unravel_index(np.argmin(values), values.shape)
        margin = min(margin, float(values[worst]))
        if values[worst] < 0:
            witness = float(points[worst])
            logger.debug("(%g, %g, %g) 不成立: g(%.6f) = %.3e", a, c, q, witness, values[worst])
            return Verdict(False, margin, witness)

        slack = min(lipschitz * h / 2.0, curvature * h * h / 8.0)
        lower = values.min(axis=1) - slack
        failing = lower < 0
        if not np.any(failing):
            logger.debug("(%g, %g, %g) 成立: margin=%.3e，细分 %d 层", a, c, q, margin, level)
            return Verdict(True, margin, None)
        if level == REFINE_LEVELS:
            break

        lefts = lefts[failing]
        h /= REFINE_FACTOR
        lefts = (lefts[:, None] + h * np.arange(REFINE_FACTOR)[None, :]).ravel()

    witness = float(lefts[np.argmin(lower)])
    logger.debug("(%g, %g, %g) 无法定论: 区间 %.6f 处下界为负", a, c, q, witness)
    return Verdict(False, margin, witness)
