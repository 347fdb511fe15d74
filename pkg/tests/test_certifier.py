# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from ambiguity.rays import first_zero_on_ray
from ambiguity.surface import section_weight
from errors import CertificateError, MomentNotFiniteError, WeightError
from minorant.constants import minorant_explicit, select_minorant
from signals.sampled import SampledSignal, modulate, power, translate
from certifier.bounds import (
    classical_cert,
    direction_bound,
    first_zero_bound,
    heisenberg_diagnostic,
    heisenberg_report,
    modulation_orthogonality_bound,
    transfer_radius,
    translate_orthogonality_bound,
)
from certifier.region import (
    MODE_RHOMBUS,
    MODE_STAR,
    ZeroFreeRegion,
    canonical_theta,
    default_directions,
    region_from_dict,
    region_to_dict,
    rhombus_region,
    star_region,
)
from certifier.validation import (
    REASON_BELOW,
    REASON_NO_ZERO,
    REASON_VIOLATION,
    certified_radius,
    judge,
    report_from_dict,
    report_rows_csv,
    report_to_dict,
    validate_region,
    validation_directions,
)


GAUSSIAN_RADIUS = math.sqrt(2 / math.pi)
HERMITE_RADIUS = math.sqrt(2 / (3 * math.pi))
RECT_DOPPLER_RADIUS = math.sqrt(6) / math.pi


# ==================== 首零点下界 ====================

def test_rect_power_bound(rect1):
    tau = first_zero_bound(power(rect1), 2.0, classical_cert())
    # sinc 的首零点在 1
    assert abs(tau - RECT_DOPPLER_RADIUS) < 1e-3
    assert tau < 1.0


def test_bound_ignores_scaling(rect1):
    w = power(rect1)
    cert = classical_cert()
    assert abs(first_zero_bound(w.scaled(3.0), 2.0, cert) - first_zero_bound(w, 2.0, cert)) < 1e-12


def test_bound_rejects_zero_weight():
    with pytest.raises(WeightError):
        first_zero_bound(SampledSignal(np.zeros(8), 0.1), 2.0, classical_cert())


def test_bound_requires_usable_cert(gaussian):
    w = power(gaussian)
    with pytest.raises(CertificateError):
        first_zero_bound(w, 2.0, minorant_explicit(1.1, 0.41, 2.0))
    with pytest.raises(CertificateError):
        first_zero_bound(w, 3.0, classical_cert())


@pytest.mark.parametrize("theta", [0.0, 0.5, math.pi / 2, 2.8])
def test_direction_bound_closed_forms(gaussian, hermite1, theta):
    cert = classical_cert()
    assert abs(direction_bound(gaussian, theta, 2.0, cert) - GAUSSIAN_RADIUS) < 1e-6
    assert abs(direction_bound(hermite1, theta, 2.0, cert) - HERMITE_RADIUS) < 1e-6


@pytest.mark.parametrize("q, expected", [(2.0, 0.149), (1.0, 0.146), (3.0, 0.082), (0.5, 0.114)])
def test_two_pulse_doppler_bounds(two_pulse, q, expected):
    tau = direction_bound(two_pulse, math.pi / 2, q, select_minorant("auto", q))
    assert abs(tau - expected) < 2e-3
    assert tau < 1 / 6


# ==================== 菱形 ====================

def test_rhombus_of_gaussian(gaussian):
    region = rhombus_region(gaussian)
    assert region.mode == MODE_RHOMBUS
    assert abs(region.dx - GAUSSIAN_RADIUS) < 1e-6
    assert abs(region.dy - GAUSSIAN_RADIUS) < 1e-6
    assert abs(region.area - 4 / math.pi) < 1e-5


def test_rhombus_of_hermite(hermite1):
    region = rhombus_region(hermite1)
    assert abs(region.dx - HERMITE_RADIUS) < 1e-6
    assert not region.contains(1 / math.sqrt(math.pi), 0.0)


def test_rhombus_of_rect_needs_frequency_moment(rect1):
    with pytest.raises(MomentNotFiniteError) as info:
        rhombus_region(rect1)
    assert "frequency" in str(info.value)
    assert info.value.exit_code == 4


def test_rhombus_scales_with_constant(gaussian):
    classical = rhombus_region(gaussian)
    improved = rhombus_region(gaussian, minorant_explicit(1.1, 0.42, 2.0))
    assert abs(improved.dx / classical.dx - math.sqrt(0.5 / 0.42)) < 1e-9


def test_rhombus_requires_second_order(gaussian):
    with pytest.raises(CertificateError):
        rhombus_region(gaussian, select_minorant("auto", 3.0))


@pytest.mark.parametrize("name", ["gaussian", "hermite1", "chirp1"])
def test_rhombus_vertices_match_axis_bounds(request, name):
    u = request.getfixturevalue(name)
    region = rhombus_region(u)
    cert = classical_cert()
    assert abs(direction_bound(u, 0.0, 2.0, cert) - region.dx) < 1e-6 * region.dx
    assert abs(direction_bound(u, math.pi / 2, 2.0, cert) - region.dy) < 1e-9 * region.dy
    assert abs(transfer_radius(u, 0.0) - region.dx) < 1e-12
    assert abs(transfer_radius(u, math.pi / 2) - region.dy) < 1e-12


@pytest.mark.parametrize("theta", [0.3, math.pi / 4, 1.2, 2.0, 2.9])
def test_transfer_radius_is_conservative(chirp1, hermite1, theta):
    cert = classical_cert()
    for u in (chirp1, hermite1):
        assert transfer_radius(u, theta) <= direction_bound(u, theta, 2.0, cert) * (1 + 1e-6)


# ==================== 星形 ====================

def test_star_region_directions(gaussian):
    region = star_region(gaussian, 2.0, classical_cert(), [0.0, math.pi / 2, math.pi, -math.pi / 4])
    assert region.mode == MODE_STAR
    assert [t for t, _ in region.star] == pytest.approx([0.0, math.pi / 2, 3 * math.pi / 4])
    for _, tau in region.star:
        assert abs(tau - GAUSSIAN_RADIUS) < 1e-6


def test_star_region_rejects(gaussian):
    with pytest.raises(ValueError):
        star_region(gaussian, 2.0, classical_cert(), [])
    with pytest.raises(CertificateError):
        star_region(gaussian, 2.0, minorant_explicit(1.1, 0.41, 2.0), [0.0])


def test_star_region_of_rect(rect1):
    region = star_region(rect1, 2.0, classical_cert(), [math.pi / 2])
    assert abs(region.star_radius(math.pi / 2) - RECT_DOPPLER_RADIUS) < 1e-3


def test_default_directions():
    assert np.allclose(default_directions(4), [0, math.pi / 4, math.pi / 2, 3 * math.pi / 4])
    with pytest.raises(ValueError):
        default_directions(0)


def test_canonical_theta():
    assert canonical_theta(math.pi) == 0.0
    assert abs(canonical_theta(-math.pi / 4) - 3 * math.pi / 4) < 1e-15
    assert abs(canonical_theta(5 * math.pi / 2) - math.pi / 2) < 1e-12


# ==================== 区域几何 ====================

def test_rhombus_geometry():
    region = ZeroFreeRegion(q=2.0, cert=classical_cert(), dx=1.0, dy=2.0)
    assert region.radius(0.0) == 1.0
    assert abs(region.radius(math.pi / 2) - 2.0) < 1e-12
    assert region.contains(0.5, 0.9)
    assert not region.contains(0.6, 0.9)
    assert region.contains(0.0, 0.0)
    assert region.area == 4.0


def test_star_geometry():
    region = ZeroFreeRegion(q=2.0, cert=classical_cert(), star=((0.0, 1.0), (math.pi / 2, 2.0)))
    # 与同顶点菱形面积相同
    assert abs(region.area - 4.0) < 1e-12
    assert region.radius(-math.pi / 2) == 2.0
    assert region.radius(math.pi) == 1.0
    assert region.contains(0.0, -1.9)
    assert region.contains(-0.9, 0.0)
    # 采样方向之间没有认证半径
    assert region.radius(math.pi / 4) == 0.0
    assert region.radius(3 * math.pi / 4) == 0.0
    assert not region.contains(0.3, 0.3)


def test_star_extends_rhombus_on_sampled_directions():
    region = ZeroFreeRegion(
        q=2.0, cert=classical_cert(), dx=1.0, dy=2.0, star=((math.pi / 4, 1.5), (math.pi / 2, 1.0))
    )
    assert region.radius(math.pi / 4) == 1.5
    assert region.radius(math.pi / 2) == pytest.approx(2.0)
    assert region.radius(math.pi / 8) == pytest.approx(1.0 / (math.cos(math.pi / 8) + math.sin(math.pi / 8) / 2.0))
    assert region.contains(1.0, 1.0)
    assert region.contains(0.8, 0.0)
    assert not region.contains(1.2 * math.cos(math.pi / 8), 1.2 * math.sin(math.pi / 8))


def test_region_dict(hermite1):
    region = rhombus_region(hermite1)
    data = region_to_dict(region)
    assert data["mode"] == MODE_RHOMBUS
    assert data["star"] == []
    assert region_from_dict(data) == region

    star = star_region(hermite1, 1.0, select_minorant("auto", 1.0), default_directions(4))
    assert region_from_dict(region_to_dict(star)) == star

    with pytest.raises(CertificateError):
        region_from_dict({"q": 2.0, "rhombus": None})


# ==================== 正交性 ====================

def test_orthogonality_bounds_of_gaussian(gaussian):
    cert = classical_cert()
    assert abs(translate_orthogonality_bound(gaussian, 2.0, cert) - GAUSSIAN_RADIUS) < 1e-6
    assert abs(modulation_orthogonality_bound(gaussian, 2.0, cert) - GAUSSIAN_RADIUS) < 1e-6


def test_orthogonality_bounds_of_rect(rect1):
    cert = classical_cert()
    assert abs(modulation_orthogonality_bound(rect1, 2.0, cert) - RECT_DOPPLER_RADIUS) < 1e-3
    with pytest.raises(MomentNotFiniteError):
        translate_orthogonality_bound(rect1, 2.0, cert)


SHIFT_INVARIANCE_GENERATORS = ["gaussian", "hermite(1)", "chirp(0.5)", "two_pulse(3, 0.5)"]


@pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 3.0])
@pytest.mark.parametrize("text", SHIFT_INVARIANCE_GENERATORS)
def test_bounds_ignore_shift_and_modulation(make, text, q):
    u = make(text)
    cert = select_minorant("auto", q)
    moved = translate(modulate(u, 2.0), 0.7)
    for bound in (translate_orthogonality_bound, modulation_orthogonality_bound):
        assert abs(bound(moved, q, cert) - bound(u, q, cert)) < 1e-6
    for theta in (0.0, 0.9, math.pi / 2, 2.5):
        before = direction_bound(u, theta, q, cert)
        assert abs(direction_bound(moved, theta, q, cert) - before) < 1e-6


@pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 3.0])
def test_rect_doppler_bound_ignores_shift_and_modulation(rect1, q):
    # rect 的频率侧权重在窗口边缘不衰减，只比较时间轴截面
    cert = select_minorant("auto", q)
    moved = translate(modulate(rect1, 2.0), 0.7)
    before = direction_bound(rect1, math.pi / 2, q, cert)
    assert abs(direction_bound(moved, math.pi / 2, q, cert) - before) < 1e-6


# ==================== Heisenberg ====================

@pytest.mark.parametrize("text, rho", [
    ("gaussian", 1.0),
    ("hermite(1)", 3.0),
    ("hermite(2)", 5.0),
    ("hermite(3)", 7.0),
    ("chirp(1)", math.sqrt(2)),
])
def test_heisenberg_ratio(make, text, rho):
    assert abs(heisenberg_diagnostic(make(text)) - rho) < 1e-6


@pytest.mark.parametrize("text", [
    "gaussian", "hermite(1)", "hermite(2)", "hermite(3)", "chirp(0.5)", "chirp(1)", "two_pulse(3, 0.5)",
])
def test_heisenberg_lower_bound(make, text):
    assert heisenberg_diagnostic(make(text)) >= 1.0 - 1e-9


def test_heisenberg_report(gaussian, rect1):
    report = heisenberg_report(gaussian)
    assert abs(report.sigma_t - 1 / math.sqrt(4 * math.pi)) < 1e-9
    assert abs(report.area - 4 / math.pi) < 1e-5
    assert abs(report.norm_squared - 1.0) < 1e-12
    with pytest.raises(MomentNotFiniteError):
        heisenberg_report(rect1)


# ==================== 暴力校验 ====================

def test_judge():
    assert judge(0.0, 0.5, None).reason == REASON_NO_ZERO
    assert judge(0.0, 0.5, 0.49995).passed
    row = judge(0.0, 0.5, 0.49)
    assert not row.passed
    assert row.reason == REASON_VIOLATION


def test_validation_directions_include_star():
    region = ZeroFreeRegion(q=2.0, cert=classical_cert(), star=((0.1, 1.0), (math.pi / 2, 1.0)))
    thetas = validation_directions(region, 4)
    assert thetas == pytest.approx([0.0, 0.1, math.pi / 4, math.pi / 2, 3 * math.pi / 4])


def test_validate_gaussian_rhombus(gaussian):
    report = validate_region(gaussian, rhombus_region(gaussian), directions=8)
    assert report.passed
    assert len(report.rows) == 8
    assert all(row.reason == REASON_NO_ZERO for row in report.rows)


def test_validate_hermite_rhombus(hermite1):
    report = validate_region(hermite1, rhombus_region(hermite1), directions=8, max_workers=4)
    assert report.passed
    assert [row.theta for row in report.rows] == sorted(row.theta for row in report.rows)
    for row in report.rows:
        assert row.reason == REASON_BELOW
        assert abs(row.tau_empirical - 1 / math.sqrt(math.pi)) < 1e-3


def test_validate_rect_star(rect1):
    region = star_region(rect1, 2.0, classical_cert(), default_directions(4))
    report = validate_region(rect1, region, directions=4)
    assert report.passed
    doppler = [row for row in report.rows if abs(row.theta - math.pi / 2) < 1e-12][0]
    assert abs(doppler.tau_empirical - 1.0) < 1e-3


def test_overclaimed_region_is_caught(rect1):
    region = ZeroFreeRegion(q=2.0, cert=classical_cert(), star=((math.pi / 2, 1.5),))
    report = validate_region(rect1, region, directions=1)
    assert not report.passed
    [violation] = report.violations
    assert abs(violation.theta - math.pi / 2) < 1e-12
    assert abs(violation.tau_empirical - 1.0) < 1e-3


def test_certified_radius_off_star(hermite1):
    region = star_region(hermite1, 2.0, classical_cert(), [0.0])
    assert certified_radius(hermite1, region, 0.0) == region.star[0][1]
    assert abs(certified_radius(hermite1, region, 1.0) - HERMITE_RADIUS) < 1e-6


def test_report_serialization(hermite1):
    report = validate_region(hermite1, rhombus_region(hermite1), directions=2)
    data = report_to_dict(report)
    assert data["pass"] is True
    assert set(data["rows"][0]) == {"theta", "tau_cert", "tau_empirical", "pass", "reason"}
    assert report_from_dict(data) == report
    rows = report_rows_csv(report)
    assert rows[0][3] == 1


SWEEP_GENERATORS = ["gaussian", "hermite(1)", "rect(1)", "chirp(0.5)", "two_pulse(3, 0.5)"]
SWEEP_ORDERS = [0.5, 1.0, 2.0, 3.0]


@pytest.fixture(scope="module")
def sweep_scans(make):
    """每个信号、每个方向的截面权重与射线扫描只算一次"""
    scans = {}
    for text in SWEEP_GENERATORS:
        u = make(text)
        for theta in default_directions(32):
            scans[text, theta] = (section_weight(u, theta), first_zero_on_ray(u, theta, 2.5).first_zero)
    return scans


@pytest.mark.parametrize("selector", ["auto", "simple"])
@pytest.mark.parametrize("q", SWEEP_ORDERS)
def test_certified_radius_never_exceeds_first_zero(sweep_scans, q, selector):
    cert = select_minorant(selector, q)
    for (text, theta), (weight, empirical) in sweep_scans.items():
        tau = first_zero_bound(weight, q, cert)
        if empirical is not None:
            assert tau <= empirical + 1e-4, f"{text} θ={theta:.4f} q={q}"
