#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
一维求解器 - 黄金分割极小化与二分求根

功能：
 - golden_section: 单峰函数的最小值区间收缩
 - golden_minimize: 返回极小点与函数值
 - bisect_root: 区间二分求根（scipy.optimize.bisect）
"""

from __future__ import annotations

import math
from typing import Callable, Tuple

import numpy as np
from scipy import optimize


INV_PHI = (math.sqrt(5) - 1) / 2          # 1/φ
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2   # 1/φ²


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-9
) -> Tuple[float, float]:
    """
    黄金分割搜索

    f 在 [a, b] 上单峰时，返回包含极小点且宽度 ≤ tol 的子区间 [c, d]。

    Args:
        f: 目标函数
        a, b: 搜索区间端点
        tol: 区间宽度容差

    Returns:
        (c, d) 子区间
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    # 达到容差所需步数
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    if yc < yd:
        return a, d
    return c, b


def golden_minimize(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-9
) -> Tuple[float, float]:
    """
    黄金分割极小化，返回 (x*, f(x*))，x* 取最终区间中点

    比较的是函数值，极小点附近 f(x) − f(x*) ≈ f″·(x − x*)²/2 低于 f 的舍入量级时无法区分，
    因此 x* 的实际精度约为 √(2·eps·|f(x*)|/f″)，tol 再小也不会更好。
    """
    lo, hi = golden_section(f, a, b, tol)
    x = 0.5 * (lo + hi)
    return x, f(x)


def bisect_root(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-12
) -> float:
    """
    二分求根

    Args:
        f: 连续函数，f(a) 与 f(b) 异号
        a, b: 区间端点
        tol: 自变量容差

    Returns:
        根的近似值
    """
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0:
        raise ValueError(f"区间 [{a}, {b}] 端点同号，无法二分")
    return optimize.bisect(f, a, b, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=200)
