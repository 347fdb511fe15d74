#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
谱工具 - 相位校正离散傅里叶变换与带限插值

功能：
 - fourier: û(ξ) = ∫u(t)e^{−2iπξt}dt 在频率网格上的求积（FFT + 显式相位因子）
 - fourier_at: 任意频点上的直接求积
 - PaddedSpectrum: 零填充（因子 ≥ 4）谱插值，计算 u(t_k + s)
 - interpolate: 任意时刻的带限（三角）插值
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
import numpy.typing as npt
from scipy import fft as sfft

from signals.sampled import SampledSignal


# 谱插值零填充因子
PAD_FACTOR = 4
# 批量计算时每块的行数
CHUNK_ROWS = 256


def fourier(u: SampledSignal) -> SampledSignal:
    """
    傅里叶变换 û，频率网格 ξ_k = (k − N/2)/(N·dt)

    û(ξ_k) = dt·Σ_j u_j e^{−2iπξ_k t_j}
           = dt·e^{−2iπξ_k t0}·FFT(u_j·(−1)^j)[k]

    频率网格覆盖 [−1/(2dt), 1/(2dt))，即 [−N/(2·span), N/(2·span))。

    Returns:
        û 的采样（dt_ξ = 1/span，t0_ξ = −1/(2dt)）
    """
    n = u.n
    d_xi = 1.0 / (n * u.dt)
    xi = (np.arange(n) - n / 2) * d_xi
    alternating = (-1.0) ** np.arange(n)
    spectrum = sfft.fft(u.samples * alternating)
    values = u.dt * np.exp(-2j * np.pi * xi * u.t0) * spectrum
    return SampledSignal(values, d_xi, float(xi[0]))


def fourier_at(u: SampledSignal, freqs: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """任意频点上的直接求积 Σ u_j e^{−2iπξ t_j} dt"""
    freqs = np.atleast_1d(np.asarray(freqs, dtype=float))
    times = u.times()
    out = np.empty(freqs.size, dtype=complex)
    for start in range(0, freqs.size, CHUNK_ROWS):
        block = freqs[start:start + CHUNK_ROWS]
        kernel = np.exp(-2j * np.pi * np.outer(block, times))
        out[start:start + block.size] = u.dt * (kernel @ u.samples)
    return out


class PaddedSpectrum:
    """
    零填充谱插值器

    把样本零填充到 ≥ PAD_FACTOR·N 后做一次 FFT，之后对任意平移量 s
    用相位斜坡 e^{2iπfs} 得到 u(t_k + s)（k 为原网格下标）。
    """

    def __init__(self, u: SampledSignal, pad_factor: int = PAD_FACTOR):
        if pad_factor < 1:
            raise ValueError(f"零填充因子必须 ≥ 1: {pad_factor}")
        self.signal = u
        self.size = sfft.next_fast_len(pad_factor * u.n)
        self.offset = (self.size - u.n) // 2
        padded = np.zeros(self.size, dtype=complex)
        padded[self.offset:self.offset + u.n] = u.samples
        self.spectrum = sfft.fft(padded)
        self.freqs = sfft.fftfreq(self.size, u.dt)

    def shifted(self, shifts: Sequence[float]) -> npt.NDArray[np.complex128]:
        """
        批量平移

        Args:
            shifts: 平移量数组 s_i

        Returns:
            形状 (len(shifts), N) 的数组，第 i 行为 u(t_k + s_i)
        """
        shifts = np.atleast_1d(np.asarray(shifts, dtype=float))
        n = self.signal.n
        out = np.empty((shifts.size, n), dtype=complex)
        for start in range(0, shifts.size, CHUNK_ROWS):
            block = shifts[start:start + CHUNK_ROWS]
            ramp = np.exp(2j * np.pi * np.outer(block, self.freqs))
            values = sfft.ifft(self.spectrum[None, :] * ramp, axis=1)
            out[start:start + block.size] = values[:, self.offset:self.offset + n]
        return out

    def shift(self, s: float) -> npt.NDArray[np.complex128]:
        return self.shifted([s])[0]


def interpolate(u: SampledSignal, points: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """
    任意时刻的带限插值

    在零填充网格上以三角多项式 (1/M)·Σ_k C_k e^{2iπf_k(p − t_pad)} 求值。
    """
    points = np.atleast_1d(np.asarray(points, dtype=float))
    padded = PaddedSpectrum(u)
    origin = u.t0 - padded.offset * u.dt
    out = np.empty(points.size, dtype=complex)
    for start in range(0, points.size, CHUNK_ROWS):
        block = points[start:start + CHUNK_ROWS]
        kernel = np.exp(2j * np.pi * np.outer(block - origin, padded.freqs))
        out[start:start + block.size] = kernel @ padded.spectrum / padded.size
    return out
