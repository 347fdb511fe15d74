#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
认证上界 - 由矩数据给出首零点下界

核心不等式（w ≥ 0，κ_q 来自余弦下界证书）：

    τ^q · inf_{t0} ∫|t − t0|^q w(t) dt ≥ κ_q·‖w‖₁

其中 τ 为 ŵ 在 (−τ, τ) 内无零点的半径。应用：
 - first_zero_bound: 任意非负权重
 - direction_bound: w = |F_{θ−π/2} u|²，得到 A(u) 沿方向 θ 的无零半径
 - translate / modulation_orthogonality_bound: 平移 / 调制正交的最小距离
 - transfer_radius: q = 2 时以范数转移上界 σ_t|sin θ| + σ_ξ|cos θ| 代替方向矩
 - heisenberg_diagnostic: ρ = 4π·σ_t·σ_ξ/‖u‖₂² ≥ 1
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from errors import MomentNotFiniteError, WeightError
from minorant.constants import MinorantCert, minorant_explicit, METHOD_CLASSICAL
from signals.moments import dispersion_inf, moment_is_finite
from signals.sampled import SampledSignal, as_weight, integrate, l2_norm, power
from signals.spectral import fourier
from ambiguity.surface import section_weight


logger = logging.getLogger(__name__)


def classical_cert() -> MinorantCert:
    """q = 2 的经典下界 cos x ≥ 1 − x²/2"""
    return minorant_explicit(1.0, 0.5, 2.0, method=METHOD_CLASSICAL)


def first_zero_bound(w: SampledSignal, q: float, cert: MinorantCert) -> float:
    """
    τ = (κ_q·‖w‖₁ / inf_{t0}‖|t − t0|^q w‖₁)^{1/q}

    Args:
        w: 非零非负权重
        q: 阶数
        cert: 已校验且阶数为 q 的证书

    Returns:
        ŵ 在 (−τ, τ) 内无零点的半径

    Raises:
        WeightError: 权重非法或为零
        CertificateError: 证书未校验或 q 不匹配
    """
    cert.require(q)
    mass = float(integrate(as_weight(w), w.dt))
    if mass <= 0:
        raise WeightError("零权重没有首零点下界")
    profile = dispersion_inf(w, q)
    if profile.value <= 0:
        raise WeightError("离散度为零（权重集中于单点）")
    return (cert.kappa * mass / profile.value) ** (1.0 / q)


def direction_bound(u: SampledSignal, theta: float, q: float, cert: MinorantCert) -> float:
    """A(u) 沿 ±θ 的认证无零半径，由 |F_{θ−π/2} u|² 的 q 阶离散度给出"""
    tau = first_zero_bound(section_weight(u, theta), q, cert)
    logger.debug("θ=%.4f q=%g 认证半径 %.6f", theta, q, tau)
    return tau


# ==================== 矩有限性 ====================

def require_finite_moment(w: SampledSignal, q: float, moment: str, hint: str = "") -> None:
    """
    Raises:
        MomentNotFiniteError: 采样权重的 q 阶矩在窗口边缘未衰减
    """
    if not moment_is_finite(w, q):
        raise MomentNotFiniteError(moment, hint)


def sigma_time(u: SampledSignal) -> float:
    """inf_a ‖(t − a)u‖₂"""
    w = power(u)
    require_finite_moment(w, 2.0, "‖(t − a)u‖₂ (time dispersion)")
    return math.sqrt(dispersion_inf(w, 2.0).value)


def sigma_frequency(u: SampledSignal) -> float:
    """inf_ω ‖(ξ − ω)û‖₂"""
    w = power(fourier(u))
    require_finite_moment(
        w, 2.0, "‖(ξ − ω)û‖₂ (frequency dispersion)",
        "use direction_bound with q < 1 instead",
    )
    return math.sqrt(dispersion_inf(w, 2.0).value)


def transfer_radius(u: SampledSignal, theta: float, cert: Optional[MinorantCert] = None) -> float:
    """
    q = 2 时的方向半径 ‖u‖₂/(2π√c·(σ_t|sin θ| + σ_ξ|cos θ|))

    ‖(ξ − ω)F_{θ−π/2}u‖₂ ≤ σ_t|sin θ| + σ_ξ|cos θ|，代入 q = 2 的首零点下界。
    """
    cert = (cert or classical_cert()).require(2.0)
    spread = sigma_time(u) * abs(math.sin(theta)) + sigma_frequency(u) * abs(math.cos(theta))
    return l2_norm(u) / (2.0 * math.pi * math.sqrt(cert.c) * spread)


# ==================== 正交性 ====================

def translate_orthogonality_bound(f: SampledSignal, q: float, cert: MinorantCert) -> float:
    """
    平移正交的最小距离 a_min = (κ_q‖f‖₂² / inf_{t0}‖|ξ − t0|^{q/2} f̂‖₂²)^{1/q}

    ⟨f, f(· − a)⟩ = F[|f̂|²](a)，因此 0 < |a| < a_min 的平移都不与 f 正交。

    Raises:
        MomentNotFiniteError: f̂ 的 q 阶矩不有限
    """
    w = power(fourier(f))
    require_finite_moment(w, q, f"‖|ξ − ω|^{{{q:g}/2}} f̂‖₂² (frequency moment)")
    return first_zero_bound(w, q, cert)


def modulation_orthogonality_bound(f: SampledSignal, q: float, cert: MinorantCert) -> float:
    """
    调制正交的最小频偏 ω_min = (κ_q‖f‖₂² / inf_{t0}‖|t − t0|^{q/2} f‖₂²)^{1/q}

    Raises:
        MomentNotFiniteError: f 的 q 阶时间矩不有限
    """
    w = power(f)
    require_finite_moment(w, q, f"‖|t − a|^{{{q:g}/2}} f‖₂² (time moment)")
    return first_zero_bound(w, q, cert)


# ==================== Heisenberg 诊断 ====================

@dataclass(frozen=True)
class HeisenbergReport:
    """时频离散度与菱形面积"""
    rho: float
    sigma_t: float
    sigma_xi: float
    norm_squared: float
    dx: float
    dy: float

    @property
    def area(self) -> float:
        return 2.0 * self.dx * self.dy


def heisenberg_diagnostic(u: SampledSignal) -> float:
    """ρ = 4π·σ_t·σ_ξ/‖u‖₂²，Heisenberg 不等式 ρ ≥ 1，高斯取等"""
    return heisenberg_report(u).rho


def heisenberg_report(u: SampledSignal, cert: Optional[MinorantCert] = None) -> HeisenbergReport:
    """
    ρ 与菱形面积 2·d_x·d_y（不对面积做额外断言）

    Raises:
        MomentNotFiniteError: 任一离散度不有限
    """
    cert = (cert or classical_cert()).require(2.0)
    s_t = sigma_time(u)
    s_xi = sigma_frequency(u)
    norm_squared = l2_norm(u) ** 2
    multiplier = 1.0 / (2.0 * math.pi * math.sqrt(cert.c))
    norm = math.sqrt(norm_squared)
    report = HeisenbergReport(
        rho=4.0 * math.pi * s_t * s_xi / norm_squared,
        sigma_t=s_t,
        sigma_xi=s_xi,
        norm_squared=norm_squared,
        dx=multiplier * norm / s_xi,
        dy=multiplier * norm / s_t,
    )
    logger.debug("Heisenberg: σ_t=%.6g σ_ξ=%.6g ρ=%.9f", s_t, s_xi, report.rho)
    return report
