#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
模糊函数求值

    A(u)(x, y) = ∫ u(t + x/2)·conj(u(t − x/2))·e^{−2iπyt} dt

两条计算路线：
 - 直接求积：u(t ± x/2) 由零填充谱插值（PaddedSpectrum）得到，x = 0 时乘积取 power(u)；
 - FrFT 截面：A(u)(r cos θ, r sin θ) = F[|F_{θ−π/2} u|²](r)。
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from signals.sampled import SampledSignal, power
from signals.spectral import CHUNK_ROWS, PaddedSpectrum, fourier_at
from transforms.frft import frft


def ambiguity_points(
    u: SampledSignal,
    xs: npt.ArrayLike,
    ys: npt.ArrayLike,
    spectrum: PaddedSpectrum = None
) -> npt.NDArray[np.complex128]:
    """
    逐点直接求积，点 i 为 (xs[i], ys[i])

    乘积 u(t + x/2)·conj(u(t − x/2)) 的支撑落在原窗口内，因此只在原网格上求和。
    x = 0 时乘积即 |u|²，取 power(u)（跳变点按半高处理）。
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    if xs.shape != ys.shape:
        raise ValueError("xs 与 ys 长度不一致")
    spectrum = spectrum or PaddedSpectrum(u)
    energy = power(u).samples
    t = u.times()
    out = np.empty(xs.size, dtype=complex)
    for start in range(0, xs.size, CHUNK_ROWS):
        bx = xs[start:start + CHUNK_ROWS]
        by = ys[start:start + CHUNK_ROWS]
        products = spectrum.shifted(0.5 * bx) * np.conj(spectrum.shifted(-0.5 * bx))
        products[bx == 0] = energy
        phase = np.exp(-2j * math.pi * np.outer(by, t))
        out[start:start + bx.size] = u.dt * np.sum(products * phase, axis=1)
    return out


def ambiguity_point(u: SampledSignal, x: float, y: float) -> complex:
    """单点 A(u)(x, y)"""
    return complex(ambiguity_points(u, [x], [y])[0])


def ambiguity_grid(u: SampledSignal, xs: npt.ArrayLike, ys: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """
    网格上的模糊函数

    Returns:
        矩阵 M，M[i, j] = A(u)(xs[j], ys[i])（x 沿行变化，行对应 y）
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    ys = np.atleast_1d(np.asarray(ys, dtype=float))
    spectrum = PaddedSpectrum(u)
    energy = power(u).samples
    t = u.times()
    phase = np.exp(-2j * math.pi * np.outer(ys, t))
    out = np.empty((ys.size, xs.size), dtype=complex)
    for j, x in enumerate(xs):
        if x == 0:
            products = energy
        else:
            plus, minus = spectrum.shifted([0.5 * x, -0.5 * x])
            products = plus * np.conj(minus)
        out[:, j] = u.dt * (phase @ products)
    return out


def section_weight(u: SampledSignal, theta: float) -> SampledSignal:
    """方向 θ 的截面权重 |F_{θ−π/2} u|²"""
    return power(frft(u, theta - math.pi / 2))


def cross_section(u: SampledSignal, theta: float, rs: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """
    沿方向 θ 的截面 A(u)(r cos θ, r sin θ)，r 可正可负

    由 F[|F_{θ−π/2} u|²](r) 计算。
    """
    return fourier_at(section_weight(u, theta), rs)
