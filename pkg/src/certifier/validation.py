#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
区域校验 - 用暴力射线扫描检验认证半径

对 32 个方向 kπ/32 与区域的星形方向，沿 ±θ 搜索经验首零点（r_max = 3 × 认证半径），
若存在经验零点且认证半径超过它（容差 1e−4）即判定失败。

星形区域在非星形方向上不做插值，而是就地重新计算 direction_bound。
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ambiguity.rays import DEFAULT_EPS_REL, ROUTE_SECTION, first_zero_on_ray
from signals.sampled import SampledSignal
from certifier.bounds import direction_bound
from certifier.region import ZeroFreeRegion, canonical_theta, default_directions


logger = logging.getLogger(__name__)

RADIUS_TOL = 1e-4
VALIDATION_DIRECTIONS = 32
SCAN_FACTOR = 3.0

REASON_NO_ZERO = "no-zero"
REASON_BELOW = "below-empirical"
REASON_VIOLATION = "exceeds-empirical"


@dataclass(frozen=True)
class ValidationRow:
    """单方向校验结果，无经验零点时 tau_empirical 为 None"""
    theta: float
    tau_cert: float
    tau_empirical: Optional[float]
    passed: bool
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    rows: Tuple[ValidationRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def violations(self) -> List[ValidationRow]:
        return [row for row in self.rows if not row.passed]


def judge(theta: float, tau_cert: float, tau_empirical: Optional[float]) -> ValidationRow:
    if tau_empirical is None:
        return ValidationRow(theta, tau_cert, None, True, REASON_NO_ZERO)
    if tau_cert <= tau_empirical + RADIUS_TOL:
        return ValidationRow(theta, tau_cert, tau_empirical, True, REASON_BELOW)
    return ValidationRow(theta, tau_cert, tau_empirical, False, REASON_VIOLATION)


def certified_radius(u: SampledSignal, region: ZeroFreeRegion, theta: float) -> float:
    """方向 θ 上可认证的半径（星形非采样方向就地计算）"""
    radii = []
    if region.has_rhombus:
        radii.append(region.rhombus_radius(theta))
    if region.star:
        exact = region.star_radius(theta)
        radii.append(exact if exact is not None else direction_bound(u, theta, region.q, region.cert))
    return max(radii) if radii else 0.0


def validation_directions(region: ZeroFreeRegion, count: int = VALIDATION_DIRECTIONS) -> List[float]:
    """kπ/count 与星形方向的并集，升序去重"""
    thetas = [canonical_theta(t) for t in default_directions(count)]
    thetas += [t for t, _ in region.star]
    unique: List[float] = []
    for theta in sorted(thetas):
        if not unique or theta - unique[-1] > 1e-12:
            unique.append(theta)
    return unique


def validate_region(
    u: SampledSignal,
    region: ZeroFreeRegion,
    eps_rel: float = DEFAULT_EPS_REL,
    directions: int = VALIDATION_DIRECTIONS,
    route: str = ROUTE_SECTION,
    max_workers: Optional[int] = None
) -> ValidationReport:
    """
    校验区域

    Args:
        u: 生成该区域的信号
        region: 认证区域
        eps_rel: 零点相对阈值
        directions: 等分方向数
        route: 射线扫描路线
        max_workers: 线程数，None 或 1 时串行

    Returns:
        ValidationReport，行按方向升序
    """
    thetas = validation_directions(region, directions)

    def check(theta: float) -> ValidationRow:
        tau_cert = certified_radius(u, region, theta)
        scan = first_zero_on_ray(u, theta, SCAN_FACTOR * tau_cert, eps_rel, route)
        return judge(theta, tau_cert, scan.first_zero)

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            rows = list(executor.map(check, thetas))
    else:
        rows = [check(theta) for theta in thetas]

    report = ValidationReport(rows=tuple(rows))
    zeros = sum(1 for row in rows if row.tau_empirical is not None)
    logger.info("校验 %d 个方向: 经验零点 %d 个, %s", len(rows), zeros, "通过" if report.passed else "失败")
    for row in report.violations:
        logger.warning("θ=%.4f 认证半径 %.6f > 经验零点 %.6f", row.theta, row.tau_cert, row.tau_empirical)
    return report


# ==================== 序列化 ====================

def report_to_dict(report: ValidationReport) -> Dict[str, Any]:
    return {
        "rows": [
            {
                "theta": row.theta,
                "tau_cert": row.tau_cert,
                "tau_empirical": row.tau_empirical,
                "pass": row.passed,
                "reason": row.reason,
            }
            for row in report.rows
        ],
        "pass": report.passed,
    }


def report_from_dict(data: Dict[str, Any]) -> ValidationReport:
    rows = []
    for item in data.get("rows", []):
        tau_empirical = item.get("tau_empirical")
        rows.append(ValidationRow(
            theta=float(item["theta"]),
            tau_cert=float(item["tau_cert"]),
            tau_empirical=None if tau_empirical is None else float(tau_empirical),
            passed=bool(item["pass"]),
            reason=item.get("reason", ""),
        ))
    return ValidationReport(rows=tuple(rows))


def report_rows_csv(report: ValidationReport) -> List[Sequence]:
    """CSV 行：theta,tau_cert,tau_empirical,pass"""
    return [
        (row.theta, row.tau_cert, "" if row.tau_empirical is None else row.tau_empirical, int(row.passed))
        for row in report.rows
    ]
