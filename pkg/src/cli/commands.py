#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
子命令实现

 - constants: 各 q 的下界常数表与经典不等式裁决
 - analyze:   范数、离散度、Heisenberg ρ、FrFT 矩上界
 - certify:   认证无零区域（菱形 / 星形）+ 暴力校验
 - scan:      模糊函数网格 CSV + 射线扫描 JSON
 - ortho:     平移 / 调制正交的最小距离 + 内积扫描

每个命令返回退出码；数据产物写入 --out 目录，未指定时 JSON/CSV 打印到 stdout。
"""

from __future__ import annotations

import json
import logging
import math
import sys
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from rich.console import Console
from rich.table import Table

from errors import MomentNotFiniteError, SoundnessViolation
from ambiguity.export import write_grid_csv, write_ray_scans_json
from ambiguity.rays import first_zero_on_ray
from ambiguity.surface import ambiguity_grid
from certifier.bounds import (
    heisenberg_report,
    modulation_orthogonality_bound,
    translate_orthogonality_bound,
)
from certifier.region import (
    default_directions,
    region_from_dict,
    region_to_dict,
    rhombus_region,
    star_region,
)
from certifier.validation import (
    RADIUS_TOL,
    report_from_dict,
    report_rows_csv,
    report_to_dict,
    validate_region,
)
from minorant.constants import (
    cert_to_dict,
    minorant_exact_concave,
    minorant_optimize,
    reference_inequalities,
    select_minorant,
)
from signals.sampled import l1_norm, l2_norm
from transforms.frft import frft_moment, frft_moment_rhs
from cli.config import RunConfig, load_signal


logger = logging.getLogger(__name__)

ANALYZE_ANGLES = 8


def say(console: Console, text: str) -> None:
    """状态行（不解析 rich 标记）"""
    console.print(text, markup=False, highlight=False)


def _emit_json(config: RunConfig, name: str, payload: Any, console: Console) -> None:
    path = config.output_path(name)
    if path is None:
        json.dump(payload, sys.stdout, ensure_ascii=False, indent=2)
        sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, ensure_ascii=False, indent=2)
    say(console, f"  → {path}")


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_csv(config: RunConfig, name: str, header: Sequence[str], rows: List[Sequence], console: Console) -> None:
    """CSV 产物，与信号/网格 CSV 一样由 np.savetxt 写出"""
    table = np.array([[_csv_cell(v) for v in row] for row in rows], dtype=object).reshape(len(rows), len(header))
    options = dict(fmt="%s", delimiter=",", header=",".join(header), comments="")
    path = config.output_path(name)
    if path is None:
        np.savetxt(sys.stdout, table, **options)
        return
    np.savetxt(path, table, **options)
    say(console, f"  → {path}")


# ==================== constants ====================

def cmd_constants(config: RunConfig, console: Console) -> int:
    """
    常数表：每个 q 的优化证书，q ≤ 1 时另加精确凹证书

    全部成立返回 0；内置构造未通过校验属于实现缺陷，返回 3（与 SoundnessViolation 相同）。
    """
    certs = []
    for q in config.q_list:
        certs.append(minorant_optimize(q))
        if q <= 1:
            certs.append(minorant_exact_concave(q))

    table = Table(title="余弦下界常数 a·cos x ≥ 1 − c|x|^q")
    for column in ("q", "方法", "a", "c", "κ_q", "校验", "margin"):
        table.add_column(column, justify="right")
    for cert in certs:
        table.add_row(
            f"{cert.q:g}", cert.method, f"{cert.a:.6f}", f"{cert.c:.6f}", f"{cert.kappa:.6g}",
            "✓" if cert.verified else "❌", f"{cert.margin:.3e}",
        )
    console.print(table)

    checks = reference_inequalities()
    reference = Table(title="经典不等式裁决")
    for column in ("a", "c", "q", "成立", "margin", "见证点", "菱形乘子", "宣称值"):
        reference.add_column(column, justify="right")
    for check in checks:
        reference.add_row(
            f"{check.a:g}", f"{check.c:g}", f"{check.q:g}",
            "✓" if check.verified else "❌",
            f"{check.margin:.4f}",
            "" if check.witness is None else f"{check.witness:.4f}",
            "" if check.multiplier is None else f"{check.multiplier:.4f}",
            "" if check.claimed_multiplier is None else f"{check.claimed_multiplier:.3f}",
        )
    console.print(reference)

    if config.fmt == "csv":
        rows = [(c.q, c.a, c.c, c.kappa, int(c.verified), c.method) for c in certs]
        _emit_csv(config, "constants.csv", ("q", "a", "c", "kappa", "verified", "method"), rows, console)
    else:
        payload = {
            "constants": [cert_to_dict(c) for c in certs],
            "reference": [
                {
                    "a": c.a, "c": c.c, "q": c.q,
                    "verified": c.verified, "margin": c.margin, "witness": c.witness,
                    "multiplier": c.multiplier, "claimed_multiplier": c.claimed_multiplier,
                }
                for c in checks
            ],
        }
        _emit_json(config, "constants.json", payload, console)

    failed = [c for c in certs if not c.verified]
    if failed:
        say(console, f"❌ {len(failed)} 个证书未通过校验")
        return SoundnessViolation.exit_code
    say(console, f"✓ {len(certs)} 个证书全部通过校验")
    return 0


# ==================== analyze ====================

def cmd_analyze(config: RunConfig, console: Console) -> int:
    """信号诊断；离散度不有限时对应字段为 null"""
    u, source = load_signal(config)
    payload: Dict[str, Any] = {
        "signal": source,
        "n": u.n,
        "dt": u.dt,
        "t0": u.t0,
        "l2_norm": l2_norm(u),
        "l1_norm": l1_norm(u),
    }

    cert = select_minorant(config.minorant, 2.0).require(2.0)
    try:
        report = heisenberg_report(u, cert)
        payload["heisenberg"] = {
            "rho": report.rho,
            "sigma_t": report.sigma_t,
            "sigma_xi": report.sigma_xi,
            "dx": report.dx,
            "dy": report.dy,
            "area": report.area,
        }
        finite = True
        say(console, f"✓ ρ = {report.rho:.6f}，菱形 d_x = {report.dx:.6f}，d_y = {report.dy:.6f}")
    except MomentNotFiniteError as e:
        payload["heisenberg"] = None
        finite = False
        say(console, f"⚠️ {e}")

    moments = []
    for k in range(ANALYZE_ANGLES):
        alpha = math.pi * k / ANALYZE_ANGLES
        moments.append({
            "alpha": alpha,
            "moment": frft_moment(u, alpha),
            "rhs": frft_moment_rhs(u, alpha) if finite else None,
        })
    payload["frft_moments"] = moments

    _emit_json(config, "analysis.json", payload, console)
    return 0


# ==================== certify ====================

def _build_region(config: RunConfig, u):
    if config.mode == "rhombus":
        if config.q != 2:
            logger.warning("菱形模式固定 q = 2，忽略 --q %g", config.q)
        cert = select_minorant(config.minorant, 2.0).require(2.0)
        return rhombus_region(u, cert)
    cert = select_minorant(config.minorant, config.q).require(config.q)
    return star_region(u, config.q, cert, default_directions(config.dirs))


def _write_validation(config: RunConfig, report, console: Console) -> None:
    if config.fmt == "csv":
        _emit_csv(config, "validation.csv", ("theta", "tau_cert", "tau_empirical", "pass"), report_rows_csv(report), console)
    else:
        _emit_json(config, "validation.json", report_to_dict(report), console)


def cmd_certify(config: RunConfig, console: Console) -> int:
    """
    认证区域并校验

    Raises:
        MomentNotFiniteError: 菱形所需离散度不有限（退出码 4）
        SoundnessViolation: 认证半径超过经验零点（退出码 3）
    """
    u, source = load_signal(config)

    if config.revalidate:
        return _revalidate(config, u, console)

    region = _build_region(config, u)
    report = validate_region(u, region, config.eps_rel, config.dirs, max_workers=config.workers)

    payload = region_to_dict(region)
    payload["signal"] = source
    payload["validation"] = report_to_dict(report)
    _emit_json(config, "region.json", payload, console)
    if config.out_dir:
        _write_validation(config, report, console)

    if region.has_rhombus:
        say(console, f"✓ 菱形区域: d_x = {region.dx:.6f}，d_y = {region.dy:.6f}，面积 {region.area:.6f}")
    else:
        radii = [r for _, r in region.star]
        say(console, f"✓ 星形区域: {len(radii)} 个方向，半径 {min(radii):.6f} ~ {max(radii):.6f}")

    zeros = [row for row in report.rows if row.tau_empirical is not None]
    say(console, f"  校验 {len(report.rows)} 个方向，经验零点 {len(zeros)} 个")
    if not report.passed:
        worst = report.violations[0]
        raise SoundnessViolation(
            f"θ={worst.theta:.4f} 认证半径 {worst.tau_cert:.6f} 超过经验零点 {worst.tau_empirical:.6f}"
        )
    say(console, "✓ 校验通过")
    return 0


def _revalidate(config: RunConfig, u, console: Console) -> int:
    """重新读取区域 JSON 并复验，判定须与文件中的一致"""
    with open(config.revalidate, "r", encoding="utf-8") as f:
        data = json.load(f)
    region = region_from_dict(data)
    stored = report_from_dict(data["validation"]) if data.get("validation") else None
    report = validate_region(u, region, config.eps_rel, config.dirs, max_workers=config.workers)

    if stored is not None and stored.passed != report.passed:
        raise SoundnessViolation(f"复验判定与原结果不一致: 原 {stored.passed}，现 {report.passed}")
    if not report.passed:
        raise SoundnessViolation(f"复验失败: {len(report.violations)} 个方向违例")
    say(console, f"✓ 复验通过: {config.revalidate}（{len(report.rows)} 个方向）")
    return 0


# ==================== scan ====================

def cmd_scan(config: RunConfig, console: Console) -> int:
    """
    网格 CSV（x,y,re,im,abs）与各方向射线扫描

    指定 --out 时写出 grid.csv 与 rays.json；否则 --format csv 把网格 CSV 打印到 stdout，
    --format json 打印各方向首零点摘要。
    """
    u, source = load_signal(config)
    axis = np.linspace(-config.scan_extent, config.scan_extent, config.scan_points)
    values = ambiguity_grid(u, axis, axis)
    peak = float(np.max(np.abs(values)))

    scans = [first_zero_on_ray(u, theta, config.r_max, config.eps_rel) for theta in default_directions(config.dirs)]
    zeros = [s.first_zero for s in scans if s.first_zero is not None]

    grid_path = config.output_path("grid.csv")
    rays_path = config.output_path("rays.json")
    if grid_path:
        write_grid_csv(grid_path, axis, axis, values)
        write_ray_scans_json(rays_path, scans)
        say(console, f"  → {grid_path}")
        say(console, f"  → {rays_path}")
    elif config.fmt == "csv":
        write_grid_csv(sys.stdout, axis, axis, values)
    else:
        summary = [{"theta": s.theta, "first_zero": s.first_zero} for s in scans]
        json.dump({"signal": source, "max_abs": peak, "rays": summary}, sys.stdout, ensure_ascii=False, indent=2)
        sys.stdout.write("\n")

    say(console, f"✓ {source}: max|A| = {peak:.6f}，{len(zeros)}/{len(scans)} 个方向发现零点")
    if zeros:
        say(console, f"  首零点范围 {min(zeros):.6f} ~ {max(zeros):.6f}")
    return 0


# ==================== ortho ====================

def _empirical_side(u, theta: float, bound: float, eps_rel: float) -> Optional[float]:
    """⟨f, f_a⟩ = A(f)(a, 0)，⟨f, f^{(ω)}⟩ = A(f)(0, ω)"""
    return first_zero_on_ray(u, theta, 3.0 * bound, eps_rel).first_zero


def cmd_ortho(config: RunConfig, console: Console) -> int:
    """
    正交性下界与内积扫描

    Raises:
        MomentNotFiniteError: 任一请求侧的矩不有限（退出码 4）
        SoundnessViolation: 扫描到比下界更近的正交点（退出码 3）
    """
    u, source = load_signal(config)
    cert = select_minorant(config.minorant, config.q).require(config.q)
    payload: Dict[str, Any] = {
        "signal": source,
        "q": config.q,
        "minorant": cert_to_dict(cert),
        "a_min": None,
        "omega_min": None,
    }

    sides = []
    if config.side in ("both", "translate"):
        sides.append(("translate", "a_min", 0.0, translate_orthogonality_bound))
    if config.side in ("both", "modulation"):
        sides.append(("modulation", "omega_min", math.pi / 2, modulation_orthogonality_bound))

    for name, key, theta, bound_fn in sides:
        bound = bound_fn(u, config.q, cert)
        empirical = _empirical_side(u, theta, bound, config.eps_rel)
        payload[key] = bound
        payload[name] = {"bound": bound, "empirical": empirical}
        shown = "未发现" if empirical is None else f"{empirical:.6f}"
        say(console, f"✓ {name}: 下界 {bound:.6f}，经验首个正交点 {shown}")
        if empirical is not None and bound > empirical + RADIUS_TOL:
            raise SoundnessViolation(f"{name}: 下界 {bound:.6f} 超过经验正交点 {empirical:.6f}")

    if config.fmt == "csv":
        rows = [(name, config.q, payload[name]["bound"], payload[name]["empirical"]) for name, *_ in sides]
        _emit_csv(config, "ortho.csv", ("side", "q", "bound", "empirical"), rows, console)
    else:
        _emit_json(config, "ortho.json", payload, console)
    return 0


COMMAND_HANDLERS = {
    "constants": cmd_constants,
    "analyze": cmd_analyze,
    "certify": cmd_certify,
    "scan": cmd_scan,
    "ortho": cmd_ortho,
}
