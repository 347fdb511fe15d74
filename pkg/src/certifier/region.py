#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
认证无零区域

 - 菱形：(±d_x, 0)、(0, ±d_y) 的凸包，d_x 由频率离散度给出、d_y 由时间离散度给出
 - 星形：若干方向 θ 上的认证半径 τ_θ（两侧对称）

A(u)(−x, −y) = conj(A(u)(x, y))，方向只需取 [0, π)。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from errors import CertificateError
from minorant.constants import MinorantCert, cert_from_dict, cert_to_dict
from signals.sampled import SampledSignal, l2_norm
from certifier.bounds import classical_cert, direction_bound, sigma_frequency, sigma_time


logger = logging.getLogger(__name__)

# 方向角匹配容差
THETA_TOL = 1e-12

MODE_RHOMBUS = "rhombus"
MODE_STAR = "star"


def canonical_theta(theta: float) -> float:
    """把方向角约化到 [0, π)"""
    reduced = math.fmod(float(theta), math.pi)
    if reduced < 0:
        reduced += math.pi
    if math.pi - reduced < THETA_TOL:
        reduced = 0.0
    return reduced


@dataclass(frozen=True)
class ZeroFreeRegion:
    """认证无零区域"""
    q: float
    cert: MinorantCert
    dx: Optional[float] = None
    dy: Optional[float] = None
    star: Tuple[Tuple[float, float], ...] = ()

    @property
    def mode(self) -> str:
        return MODE_RHOMBUS if self.has_rhombus else MODE_STAR

    @property
    def has_rhombus(self) -> bool:
        return self.dx is not None and self.dy is not None

    @property
    def area(self) -> float:
        """菱形为 2·d_x·d_y；星形为各方向顶点连成的多边形面积"""
        if self.has_rhombus:
            return 2.0 * self.dx * self.dy
        if len(self.star) < 2:
            return 0.0
        ordered = sorted(self.star)
        angles = [t for t, _ in ordered] + [ordered[0][0] + math.pi]
        radii = [r for _, r in ordered] + [ordered[0][1]]
        # 上半平面扇形三角形之和，关于原点对称再乘 2
        half = sum(
            0.5 * radii[i] * radii[i + 1] * math.sin(angles[i + 1] - angles[i])
            for i in range(len(ordered))
        )
        return 2.0 * half

    def star_radius(self, theta: float) -> Optional[float]:
        """θ 恰为星形方向时返回其半径"""
        theta = canonical_theta(theta)
        for t, r in self.star:
            if abs(t - theta) <= THETA_TOL or abs(abs(t - theta) - math.pi) <= THETA_TOL:
                return r
        return None

    def rhombus_radius(self, theta: float) -> Optional[float]:
        if not self.has_rhombus:
            return None
        return 1.0 / (abs(math.cos(theta)) / self.dx + abs(math.sin(theta)) / self.dy)

    def radius(self, theta: float) -> float:
        """
        方向 θ 上已认证的半径

        菱形对任意方向有效；星形只在采样方向上有效，其余方向不计入（需要时用
        validation.certified_radius 就地计算）。两者都没有时为 0。
        """
        candidates = [r for r in (self.rhombus_radius(theta), self.star_radius(theta)) if r is not None]
        return max(candidates) if candidates else 0.0

    def contains(self, x: float, y: float) -> bool:
        """点 (x, y) 是否严格位于已认证部分内（星形只含采样方向上的线段）"""
        r = math.hypot(x, y)
        if r == 0:
            return True
        return r < self.radius(math.atan2(y, x))


# ==================== 构造 ====================

def rhombus_region(u: SampledSignal, cert: Optional[MinorantCert] = None) -> ZeroFreeRegion:
    """
    菱形区域，q = 2

    d_x = ‖u‖₂/(2π√c·σ_ξ)，d_y = ‖u‖₂/(2π√c·σ_t)，
    σ_t = inf_a‖(t − a)u‖₂，σ_ξ = inf_ω‖(ξ − ω)û‖₂。

    Args:
        u: 信号
        cert: q = 2 的已校验证书，默认经典 (1, 1/2)

    Raises:
        MomentNotFiniteError: 任一离散度不有限（如 rect 的频率侧）
        CertificateError: 证书不可用
    """
    cert = (cert or classical_cert()).require(2.0)
    s_t = sigma_time(u)
    s_xi = sigma_frequency(u)
    scale = l2_norm(u) / (2.0 * math.pi * math.sqrt(cert.c))
    region = ZeroFreeRegion(q=2.0, cert=cert, dx=scale / s_xi, dy=scale / s_t)
    logger.info("菱形区域: d_x=%.6f d_y=%.6f (c=%g)", region.dx, region.dy, cert.c)
    return region


def star_region(u: SampledSignal, q: float, cert: MinorantCert, thetas: Sequence[float]) -> ZeroFreeRegion:
    """逐方向 direction_bound 构成的星形区域，方向按 [0, π) 升序"""
    cert.require(q)
    directions = sorted({canonical_theta(t) for t in thetas})
    if not directions:
        raise ValueError("星形区域至少需要一个方向")
    star = tuple((theta, direction_bound(u, theta, q, cert)) for theta in directions)
    logger.info("星形区域: %d 个方向, 最小半径 %.6f", len(star), min(r for _, r in star))
    return ZeroFreeRegion(q=float(q), cert=cert, star=star)


def default_directions(count: int) -> np.ndarray:
    """kπ/count，k = 0..count−1"""
    if count < 1:
        raise ValueError(f"方向数必须 ≥ 1: {count}")
    return np.pi * np.arange(count) / count


# ==================== 序列化 ====================

def region_to_dict(region: ZeroFreeRegion) -> Dict[str, Any]:
    """区域 JSON：{q, mode, minorant, rhombus, star}"""
    rhombus = None
    if region.has_rhombus:
        rhombus = {"dx": region.dx, "dy": region.dy, "area": region.area}
    return {
        "q": region.q,
        "mode": region.mode,
        "minorant": cert_to_dict(region.cert),
        "rhombus": rhombus,
        "star": [{"theta": t, "tau": r} for t, r in region.star],
    }


def region_from_dict(data: Dict[str, Any]) -> ZeroFreeRegion:
    """
    Raises:
        CertificateError: 字段缺失或证书不一致
    """
    try:
        rhombus = data.get("rhombus") or {}
        star = tuple((float(item["theta"]), float(item["tau"])) for item in data.get("star") or [])
        return ZeroFreeRegion(
            q=float(data["q"]),
            cert=cert_from_dict(data["minorant"]),
            dx=float(rhombus["dx"]) if "dx" in rhombus else None,
            dy=float(rhombus["dy"]) if "dy" in rhombus else None,
            star=star,
        )
    except (KeyError, TypeError, ValueError) as e:
        raise CertificateError(f"区域 JSON 字段缺失或非法: {e}") from None
