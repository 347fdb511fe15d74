#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
余弦下界常数 - 构造、优化与证书

对每个 q > 0 给出 (a, c) 使 a·cos x ≥ 1 − c|x|^q，并导出 κ_q = 1/(c·(2π)^q)。

构造：
 - simple: a = 2，c = 3·(3/π)^q
 - parametric(η): a = 1 + η，c = (2 + η)/arccos(1/(1 + η))^q
 - optimize: 在 η ∈ [1e−6, 50] 上对 c(η) 做黄金分割
 - exact_concave (0 < q ≤ 1): a = 1，切点 x₀ 满足 cos x + x·sin x/q = 1
 - explicit: 用户给定 (a, c)

所有构造返回的证书都经过 verify_minorant 校验。

使用示例：
    cert = select_minorant("auto", q=2.0)
    cert.kappa   # 1/(2π²)
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from errors import CertificateError
from minorant.verifier import verify_minorant
from numerics.search import bisect_root, golden_minimize


logger = logging.getLogger(__name__)

ETA_RANGE = (1e-6, 50.0)
ETA_TOL = 1e-8
ROOT_TOL = 1e-12
# 切点常数上取整因子，保证不等式严格成立
TANGENCY_INFLATION = 1e-10
KAPPA_TOL = 1e-12

# 以 1.1·cos x ≥ 1 − 0.41·x² 推出的 q = 2 菱形乘子宣称值
CLAIMED_MULTIPLIER = 0.248

METHOD_CLASSICAL = "classical"
METHOD_SIMPLE = "simple"
METHOD_PARAMETRIC = "parametric"
METHOD_OPT = "opt"
METHOD_EXACT = "exact"
METHOD_EXPLICIT = "explicit"


def kappa(q: float, c: float) -> float:
    """κ_q = 1/(c·(2π)^q)"""
    if not (q > 0 and c > 0):
        raise ValueError(f"q 与 c 必须为正: q={q}, c={c}")
    return 1.0 / (c * (2.0 * math.pi) ** q)


@dataclass(frozen=True)
class MinorantCert:
    """余弦下界证书"""
    q: float
    a: float
    c: float
    kappa: float
    verified: bool
    margin: float
    witness: Optional[float] = None
    method: str = METHOD_EXPLICIT
    eta: Optional[float] = None
    # 精确凹构造的切点 x₀
    tangent: Optional[float] = None

    @property
    def rhombus_multiplier(self) -> float:
        """q = 2 时菱形顶点的乘子 1/(2π√c)"""
        return 1.0 / (2.0 * math.pi * math.sqrt(self.c))

    def require(self, q: Optional[float] = None) -> "MinorantCert":
        """
        断言证书可用

        Raises:
            CertificateError: 未通过校验或 q 不匹配
        """
        if not self.verified:
            raise CertificateError(
                f"证书未通过校验: a={self.a}, c={self.c}, q={self.q}"
                + (f"，见证点 x={self.witness:.6f}" if self.witness is not None else "")
            )
        if q is not None and abs(q - self.q) > 1e-12:
            raise CertificateError(f"证书阶数 q={self.q} 与所需 q={q} 不匹配")
        return self


def _certify(q: float, a: float, c: float, method: str, **extra) -> MinorantCert:
    verdict = verify_minorant(a, c, q)
    logger.debug("%s 证书 q=%g: a=%.6g c=%.6g → %s", method, q, a, c, "成立" if verdict.verified else "不成立")
    return MinorantCert(
        q=q,
        a=a,
        c=c,
        kappa=kappa(q, c),
        verified=verdict.verified,
        margin=verdict.margin,
        witness=verdict.witness,
        method=method,
        **extra,
    )


def _require_q(q: float) -> None:
    if not (isinstance(q, (int, float)) and math.isfinite(q) and q > 0):
        raise ValueError(f"q 必须为正: {q}")


# ==================== 构造 ====================

def minorant_explicit(a: float, c: float, q: float, method: str = METHOD_EXPLICIT) -> MinorantCert:
    """用户给定常数的证书"""
    _require_q(q)
    if not (a > 0 and c > 0):
        raise ValueError(f"a 与 c 必须为正: a={a}, c={c}")
    return _certify(q, float(a), float(c), method)


def minorant_simple(q: float) -> MinorantCert:
    """a = 2，c = 3·(3/π)^q（|x| ≶ π/3 分情况）"""
    _require_q(q)
    return _certify(q, 2.0, 3.0 * (3.0 / math.pi) ** q, METHOD_SIMPLE)


def parametric_c(q: float, eta: float) -> float:
    """c(η) = (2 + η)/arccos(1/(1 + η))^q"""
    return (2.0 + eta) / math.acos(1.0 / (1.0 + eta)) ** q


def minorant_parametric(q: float, eta: float) -> MinorantCert:
    """a = 1 + η 的单参数族"""
    _require_q(q)
    if not eta > 0:
        raise ValueError(f"η 必须为正: {eta}")
    return _certify(q, 1.0 + eta, parametric_c(q, eta), METHOD_PARAMETRIC, eta=float(eta))


def minorant_optimize(q: float) -> MinorantCert:
    """
    在 η ∈ [1e−6, 50] 上最小化 c(η)

    c(η) 在两端趋于无穷或线性增长，极小点在内部；结果仍与两端点比较。
    """
    _require_q(q)
    lo, hi = ETA_RANGE
    eta, c = golden_minimize(lambda e: parametric_c(q, e), lo, hi, ETA_TOL)
    for endpoint in (lo, hi):
        value = parametric_c(q, endpoint)
        if value < c:
            logger.warning("q=%g: η 端点 %g 优于内部极小 %g", q, endpoint, eta)
            eta, c = endpoint, value
    return _certify(q, 1.0 + eta, c, METHOD_OPT, eta=float(eta))


def tangency_residual(q: float, a: float, c: float, x0: float) -> float:
    """|a·sin x₀ − c·q·x₀^{q−1}|"""
    return abs(a * math.sin(x0) - c * q * x0 ** (q - 1.0))


def minorant_exact_concave(q: float) -> MinorantCert:
    """
    a = 1 时的最优常数（0 < q ≤ 1）

    x ↦ 1 − c·x^q 在 q ≤ 1 时凹，与 cos x 在 [π/2, π] 内唯一切点 x₀ 处相切，
    x₀ 为 cos x + x·sin x/q = 1 的根，c = sin x₀/(q·x₀^{q−1})。

    Raises:
        CertificateError: q > 1（凹性不成立）
    """
    _require_q(q)
    if q > 1:
        raise CertificateError(f"精确凹构造只适用于 0 < q ≤ 1: q={q}")

    x0 = bisect_root(lambda x: math.cos(x) + x * math.sin(x) / q - 1.0, math.pi / 2, math.pi, ROOT_TOL)
    c = math.sin(x0) / (q * x0 ** (q - 1.0)) * (1.0 + TANGENCY_INFLATION)
    return _certify(q, 1.0, c, METHOD_EXACT, tangent=float(x0))


# ==================== 选择 ====================

_NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_ETA_PATTERN = re.compile(rf"^eta\s*=\s*({_NUMBER})$")
_EXPLICIT_PATTERN = re.compile(rf"^a\s*=\s*({_NUMBER})\s*,\s*c\s*=\s*({_NUMBER})$")


def select_minorant(selector: str, q: float) -> MinorantCert:
    """
    按选择器构造证书

    Args:
        selector: auto | simple | opt | exact | eta=<r> | a=<r>,c=<r>
        q: 阶数

    Returns:
        MinorantCert（未必已通过校验，调用方用 require() 断言）

    Raises:
        ValueError: 选择器格式错误
    """
    _require_q(q)
    text = (selector or "auto").strip().lower()

    if text == "auto":
        if q == 2:
            return minorant_explicit(1.0, 0.5, 2.0, method=METHOD_CLASSICAL)
        if q <= 1:
            return minorant_exact_concave(q)
        return minorant_optimize(q)
    if text == METHOD_SIMPLE:
        return minorant_simple(q)
    if text in (METHOD_OPT, "optimal"):
        return minorant_optimize(q)
    if text == METHOD_EXACT:
        return minorant_exact_concave(q)

    match = _ETA_PATTERN.match(text)
    if match:
        return minorant_parametric(q, float(match.group(1)))
    match = _EXPLICIT_PATTERN.match(text)
    if match:
        return minorant_explicit(float(match.group(1)), float(match.group(2)), q)

    raise ValueError(f"无法解析下界选择器: '{selector}'（可选 auto|simple|opt|exact|eta=<r>|a=<r>,c=<r>）")


# ==================== 经典不等式裁决 ====================

@dataclass(frozen=True)
class ReferenceCheck:
    """经典不等式的裁决"""
    a: float
    c: float
    q: float
    verified: bool
    margin: float
    witness: Optional[float]
    multiplier: Optional[float]
    claimed_multiplier: Optional[float] = None


REFERENCE_TRIPLES = (
    (1.0, 0.5, 2.0),
    (1.1, 0.42, 2.0),
    (1.1, 0.41, 2.0),
    (1.02, 0.52, 1.5),
)


def reference_inequalities() -> List[ReferenceCheck]:
    """
    裁决四个常见的 (a, c, q) 不等式

    q = 2 的行给出菱形乘子 1/(2π√c)；c = 0.41 一行并列宣称值 0.248。
    """
    rows = []
    for a, c, q in REFERENCE_TRIPLES:
        verdict = verify_minorant(a, c, q)
        multiplier = 1.0 / (2.0 * math.pi * math.sqrt(c)) if q == 2 else None
        claimed = CLAIMED_MULTIPLIER if (q == 2 and c == 0.41) else None
        rows.append(ReferenceCheck(
            a=a, c=c, q=q,
            verified=verdict.verified,
            margin=verdict.margin,
            witness=verdict.witness,
            multiplier=multiplier,
            claimed_multiplier=claimed,
        ))
    return rows


# ==================== 序列化 ====================

def cert_to_dict(cert: MinorantCert) -> Dict[str, Any]:
    """证书 JSON：{q, a, c, kappa, verified, margin, witness?, method, eta?}"""
    data: Dict[str, Any] = {
        "q": cert.q,
        "a": cert.a,
        "c": cert.c,
        "kappa": cert.kappa,
        "verified": cert.verified,
        "margin": cert.margin,
    }
    if cert.witness is not None:
        data["witness"] = cert.witness
    data["method"] = cert.method
    if cert.eta is not None:
        data["eta"] = cert.eta
    if cert.tangent is not None:
        data["tangent"] = cert.tangent
    return data


def cert_from_dict(data: Dict[str, Any]) -> MinorantCert:
    """
    从 JSON 重建证书

    Raises:
        CertificateError: 字段缺失或 κ 与 (q, c) 不一致
    """
    try:
        q, a, c = float(data["q"]), float(data["a"]), float(data["c"])
    except (KeyError, TypeError, ValueError) as e:
        raise CertificateError(f"证书字段缺失或非法: {e}") from None
    expected = kappa(q, c)
    stored = float(data.get("kappa", expected))
    if abs(stored - expected) > KAPPA_TOL * max(1.0, expected):
        raise CertificateError(f"κ 与 (q, c) 不一致: {stored} ≠ {expected}")
    return MinorantCert(
        q=q,
        a=a,
        c=c,
        kappa=expected,
        verified=bool(data.get("verified", False)),
        margin=float(data.get("margin", float("nan"))),
        witness=data.get("witness"),
        method=data.get("method", METHOD_EXPLICIT),
        eta=data.get("eta"),
        tangent=data.get("tangent"),
    )
