#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
模糊函数导出 - 网格 CSV 与射线扫描 JSON

格式：
 - 网格 CSV：表头 x,y,re,im,abs，按 y 行主序（同一行内 x 递增）
 - 射线 JSON：[{theta, route, radii, magnitudes_plus, magnitudes_minus, first_zero, threshold}]
   无零点时 first_zero 为 null
"""

from __future__ import annotations

import json
import os
from typing import Dict, List, TextIO, Union

import numpy as np
import numpy.typing as npt

from ambiguity.rays import RayScan


GRID_HEADER = "x,y,re,im,abs"


def _ensure_parent(path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def write_grid_csv(
    target: Union[str, TextIO],
    xs: npt.ArrayLike,
    ys: npt.ArrayLike,
    values: npt.ArrayLike
) -> None:
    """
    写出网格 CSV

    Args:
        target: 输出路径或已打开的文本流（如 sys.stdout）
        xs, ys: 坐标轴
        values: ambiguity_grid 的结果，values[i, j] 对应 (xs[j], ys[i])
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    values = np.asarray(values, dtype=complex)
    if values.shape != (ys.size, xs.size):
        raise ValueError(f"网格形状 {values.shape} 与坐标轴 ({ys.size}, {xs.size}) 不一致")

    gx, gy = np.meshgrid(xs, ys)
    flat = values.ravel()
    table = np.column_stack([gx.ravel(), gy.ravel(), flat.real, flat.imag, np.abs(flat)])
    if isinstance(target, str):
        _ensure_parent(target)
    np.savetxt(target, table, delimiter=",", header=GRID_HEADER, comments="", fmt="%.17g")


def ray_scan_to_dict(scan: RayScan) -> Dict:
    return {
        "theta": scan.theta,
        "route": scan.route,
        "radii": scan.radii.tolist(),
        "magnitudes_plus": scan.magnitudes_plus.tolist(),
        "magnitudes_minus": scan.magnitudes_minus.tolist(),
        "first_zero": scan.first_zero,
        "threshold": scan.threshold,
    }


def ray_scan_from_dict(data: Dict) -> RayScan:
    return RayScan(
        theta=float(data["theta"]),
        radii=np.asarray(data["radii"], dtype=float),
        magnitudes_plus=np.asarray(data["magnitudes_plus"], dtype=float),
        magnitudes_minus=np.asarray(data["magnitudes_minus"], dtype=float),
        first_zero=None if data.get("first_zero") is None else float(data["first_zero"]),
        threshold=float(data["threshold"]),
        route=data.get("route", "section"),
    )


def write_ray_scans_json(path: str, scans: List[RayScan]) -> None:
    """按方向升序写出射线扫描"""
    ordered = sorted(scans, key=lambda s: s.theta)
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump([ray_scan_to_dict(s) for s in ordered], f, ensure_ascii=False, indent=2)


def read_ray_scans_json(path: str) -> List[RayScan]:
    with open(path, "r", encoding="utf-8") as f:
        return [ray_scan_from_dict(item) for item in json.load(f)]
