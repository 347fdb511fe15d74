# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from errors import CertificateError
from minorant.constants import (
    METHOD_CLASSICAL,
    METHOD_EXACT,
    METHOD_EXPLICIT,
    METHOD_OPT,
    METHOD_PARAMETRIC,
    cert_from_dict,
    cert_to_dict,
    kappa,
    minorant_exact_concave,
    minorant_explicit,
    minorant_optimize,
    minorant_parametric,
    minorant_simple,
    parametric_c,
    reference_inequalities,
    select_minorant,
    tangency_residual,
)
from minorant.verifier import cutoff_radius, minorant_gap, verify_minorant


# 单参数族在若干 q 下的已知最优点 (η, c)
PARAMETRIC_TABLE = [
    (3.0, 2.26, 2.134),
    (4.0, 2.94, 1.6565),
    (6.0, 4.27, 0.9078),
]


# ==================== 校验器 ====================

def test_gap_is_even():
    xs = np.linspace(0.0, 3.0, 7)
    assert np.allclose(minorant_gap(1.1, 0.42, 2.0, xs), minorant_gap(1.1, 0.42, 2.0, -xs))


def test_cutoff_radius():
    assert abs(cutoff_radius(1.1, 0.42, 2.0) - math.sqrt(5.0)) < 1e-12


def test_verifier_rejects_bad_inputs():
    with pytest.raises(ValueError):
        verify_minorant(0.0, 0.5, 2.0)
    with pytest.raises(ValueError):
        verify_minorant(1.0, -0.5, 2.0)


def test_verifier_trivial_failures():
    assert verify_minorant(0.9, 10.0, 2.0) == (False, pytest.approx(-0.1), 0.0)
    # x_cut > π：g(π) < 0
    verdict = verify_minorant(1.0, 0.1, 2.0)
    assert not verdict.verified
    assert verdict.witness == math.pi


@pytest.mark.parametrize("a, c, q, verified, margin", [
    (1.0, 0.5, 2.0, True, 0.0),
    (1.1, 0.42, 2.0, True, 0.003),
    (1.1, 0.41, 2.0, False, -0.013),
    (1.02, 0.52, 1.5, True, 0.021),
])
def test_reference_verdicts(a, c, q, verified, margin):
    verdict = verify_minorant(a, c, q)
    assert verdict.verified is verified
    assert abs(verdict.margin - margin) < 2e-3


def test_failing_witness_location():
    verdict = verify_minorant(1.1, 0.41, 2.0)
    assert abs(verdict.witness - 1.29) < 0.05
    assert minorant_gap(1.1, 0.41, 2.0, verdict.witness) < 0


# ==================== 构造 ====================

@pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 3.0, 6.0])
def test_simple_construction(q):
    cert = minorant_simple(q)
    assert cert.verified
    assert cert.a == 2.0
    assert abs(cert.c - 3.0 * (3.0 / math.pi) ** q) < 1e-12
    # x_cut 恰为 π/3
    assert abs(cutoff_radius(cert.a, cert.c, q) - math.pi / 3) < 1e-12


@pytest.mark.parametrize("q, eta, c", PARAMETRIC_TABLE)
def test_parametric_table(q, eta, c):
    cert = minorant_parametric(q, eta)
    assert cert.verified
    assert cert.method == METHOD_PARAMETRIC
    assert abs(cert.c - c) < 1e-3
    assert 0 < cert.margin <= eta


def test_parametric_rejects_nonpositive_eta():
    with pytest.raises(ValueError):
        minorant_parametric(2.0, 0.0)


@pytest.mark.parametrize("q, eta, c", PARAMETRIC_TABLE)
def test_optimize_matches_table(q, eta, c):
    cert = minorant_optimize(q)
    assert cert.verified
    assert cert.method == METHOD_OPT
    assert abs(cert.c - c) / c < 5e-3
    assert abs(cert.a - (1.0 + eta)) / (1.0 + eta) < 1e-2


@pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 3.0, 5.0])
def test_optimize_beats_fixed_eta(q):
    best = minorant_optimize(q).c
    for eta in (0.05, 0.3, 1.0, 2.0, 4.0, 10.0, 40.0):
        assert best <= parametric_c(q, eta) * (1 + 1e-9)


def test_exact_concave_constants():
    one = minorant_exact_concave(1.0)
    assert one.verified
    assert one.method == METHOD_EXACT
    assert 0.72 <= one.c <= 0.73
    assert math.pi / 2 <= one.tangent <= math.pi
    small = minorant_exact_concave(0.01)
    assert small.verified
    assert 1.9 <= small.c <= 2.1


@pytest.mark.parametrize("q", [0.1, 0.5, 1.0])
def test_exact_concave_is_tangent_and_sharp(q):
    cert = minorant_exact_concave(q)
    assert tangency_residual(q, cert.a, cert.c, cert.tangent) <= 1e-9
    worse = minorant_explicit(1.0, 0.999 * cert.c, q)
    assert not worse.verified
    assert worse.witness is not None


def test_exact_concave_requires_concavity():
    with pytest.raises(CertificateError):
        minorant_exact_concave(1.5)


def test_random_points_satisfy_certificates():
    rng = np.random.default_rng(20240601)
    certs = [
        minorant_simple(2.0),
        minorant_simple(0.7),
        minorant_optimize(4.0),
        minorant_parametric(2.0, 1.0),
        minorant_exact_concave(0.5),
        minorant_exact_concave(1.0),
    ]
    for cert in certs:
        assert cert.verified
        x_cut = cutoff_radius(cert.a, cert.c, cert.q)
        xs = rng.uniform(-2 * x_cut, 2 * x_cut, 1_000_000)
        assert np.min(minorant_gap(cert.a, cert.c, cert.q, xs)) >= 0


# ==================== κ 与经典不等式 ====================

def test_kappa_values():
    assert abs(kappa(2.0, 0.5) - 1.0 / (2 * math.pi ** 2)) < 1e-15
    assert kappa(2.0, 0.42) > kappa(2.0, 0.5)
    with pytest.raises(ValueError):
        kappa(0.0, 1.0)


def test_reference_inequalities():
    rows = {(r.a, r.c, r.q): r for r in reference_inequalities()}
    assert len(rows) == 4
    assert rows[(1.0, 0.5, 2.0)].verified
    assert abs(rows[(1.0, 0.5, 2.0)].multiplier - 0.2251) < 1e-4
    assert rows[(1.1, 0.42, 2.0)].verified
    assert abs(rows[(1.1, 0.42, 2.0)].multiplier - 0.2456) < 1e-4

    doubtful = rows[(1.1, 0.41, 2.0)]
    assert not doubtful.verified
    assert doubtful.claimed_multiplier == 0.248
    assert abs(doubtful.multiplier - 0.2486) < 1e-4

    fractional = rows[(1.02, 0.52, 1.5)]
    assert fractional.verified
    assert fractional.multiplier is None


# ==================== 选择与证书 ====================

def test_select_auto():
    assert select_minorant("auto", 2.0).method == METHOD_CLASSICAL
    assert select_minorant("auto", 0.5).method == METHOD_EXACT
    assert select_minorant("auto", 3.0).method == METHOD_OPT
    assert select_minorant(None, 2.0).c == 0.5


def test_select_forms():
    assert select_minorant("simple", 2.0).a == 2.0
    assert select_minorant("optimal", 3.0).method == METHOD_OPT
    assert select_minorant("eta=1.5", 2.0).eta == 1.5
    explicit = select_minorant("a=1.1, c=0.42", 2.0)
    assert explicit.method == METHOD_EXPLICIT
    assert (explicit.a, explicit.c) == (1.1, 0.42)


@pytest.mark.parametrize("selector", ["best", "eta=", "a=1", "c=1,a=2"])
def test_select_rejects(selector):
    with pytest.raises(ValueError):
        select_minorant(selector, 2.0)


def test_select_rejects_bad_q():
    with pytest.raises(ValueError):
        select_minorant("auto", -1.0)
    with pytest.raises(CertificateError):
        select_minorant("exact", 2.0)


def test_require():
    cert = select_minorant("auto", 2.0)
    assert cert.require(2.0) is cert
    with pytest.raises(CertificateError):
        cert.require(3.0)
    with pytest.raises(CertificateError):
        minorant_explicit(1.1, 0.41, 2.0).require()


def test_cert_dict():
    cert = minorant_exact_concave(1.0)
    data = cert_to_dict(cert)
    assert list(data)[:6] == ["q", "a", "c", "kappa", "verified", "margin"]
    assert "witness" not in data
    assert data["tangent"] == cert.tangent
    assert cert_from_dict(data) == cert

    failing = cert_to_dict(minorant_explicit(1.1, 0.41, 2.0))
    assert failing["witness"] > 0

    with pytest.raises(CertificateError):
        cert_from_dict(dict(data, kappa=data["kappa"] * 1.01))
    with pytest.raises(CertificateError):
        cert_from_dict({"q": 2.0, "a": 1.0})
