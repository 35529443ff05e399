import math
import time

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PSI, scan_radius
from petalstar import radii
from petalstar.errors import DomainError
from petalstar.kernel import ASINH1, rho
from petalstar.radii import Method, RadiusResult

A = ASINH1
mpmath.mp.dps = 30

STATED = {
    "lemniscate": (0.985928, 1e-6),
    "rl": (0.964694, 1e-6),
    "cardioid": (0.523831, 1e-6),
    "exponential": (0.632002, 1e-6),
    "crescent": (0.674924, 1e-6),
}


@pytest.mark.parametrize("cls", sorted(STATED))
def test_named_class_stated_values(cls):
    value, tol = STATED[cls]
    assert radii.named_class_radius(cls).value == pytest.approx(value, abs=tol)


def test_booth_stated_values():
    assert radii.named_class_radius("booth", 1.0).value == pytest.approx(0.58241, abs=1e-5)
    assert radii.named_class_radius("booth", 0.0).value == pytest.approx(0.881374, abs=1e-6)


def test_stated_F_value():
    assert radii.radius_F().value == pytest.approx(0.178105, abs=1e-6)
    assert not radii.radius_F().sharp


@pytest.mark.parametrize("cls", sorted(PSI))
def test_named_class_against_scan(cls):
    assert radii.named_class_radius(cls).value == pytest.approx(scan_radius(PSI[cls]), abs=1e-6)


@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.7, 1.0])
def test_booth_against_scan(alpha):
    psi = lambda z: 1 + z / (1 - alpha * z * z)
    assert radii.named_class_radius("booth", alpha).value == pytest.approx(scan_radius(psi), abs=1e-6)


@pytest.mark.parametrize("alpha", [0.2, 0.5, 0.8])
def test_starlike_order_against_scan(alpha):
    expected = scan_radius(rho, inside=lambda w: w.real > alpha)
    got = radii.starlike_order_radius(alpha)
    assert got.value == pytest.approx(expected, abs=1e-6)
    assert got.sharp == (alpha > 1 - A)


@pytest.mark.parametrize("beta", [1.2, 1.5, 1.8, 2.5])
def test_m_beta_against_scan(beta):
    expected = scan_radius(rho, inside=lambda w: w.real < beta)
    assert radii.m_beta_radius(beta).value == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("k", [0.5, 1.0, 2.0])
def test_k_st_against_scan(k):
    expected = scan_radius(rho, inside=lambda w: w.real > k * np.abs(w - 1))
    assert radii.k_st_radius(k).value == pytest.approx(expected, abs=1e-6)


def test_k_st_at_one_is_sinh_half():
    assert radii.k_st_radius(1.0).value == pytest.approx(math.sinh(0.5), abs=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_Sn_against_scan(n):
    # extremal z(1 + z^n)/(1 - z^n): zf'/f = 1 + 2n z^n / (1 - z^2n)
    psi = lambda z: 1 + 2 * n * z**n / (1 - z ** (2 * n))
    assert radii.radius_Sn(n).value == pytest.approx(scan_radius(psi), abs=1e-6)


@pytest.mark.parametrize("n,alpha", [(1, 0.0), (2, 0.5), (3, 0.25)])
def test_CSn_solves_its_polynomial(n, alpha):
    res = radii.radius_CSn(n, alpha)
    x = mpmath.findroot(
        lambda x: (2 - 2 * alpha + mpmath.asinh(1)) * x**2 + 2 * (n - alpha + 1) * x - mpmath.asinh(1),
        0.2,
    )
    assert res.value == pytest.approx(float(x ** (mpmath.mpf(1) / n)), abs=1e-12)
    assert radii.defining_polynomial(res)(res.value) == pytest.approx(0.0, abs=1e-12)


JANOWSKI = [(1, 1.0, -1.0), (1, 0.5, -0.5), (2, 1.0, -0.5), (1, 1.0, 0.0), (1, 1.0, 0.5), (2, 1.0, 0.3)]


@pytest.mark.parametrize("n,C,D", JANOWSKI)
def test_janowski_against_scan(n, C, D):
    psi = lambda z: (1 + C * z**n) / (1 + D * z**n)
    assert radii.radius_janowski(n, C, D).value == pytest.approx(scan_radius(psi), abs=1e-6)


def test_janowski_whole_disk_clamped():
    res = radii.radius_janowski(1, 0.2, 0.0)
    assert res.value == 1.0 and res.whole_disk


@pytest.mark.parametrize("n", [1, 2])
def test_ratio_class_values_independent(n):
    # r^n solves A x^2 + 4n x - A = 0 for F1 and (n + A) x^2 + 3n x - A = 0 for F2
    x1 = (-4 * n + math.sqrt(16 * n * n + 4 * A * A)) / (2 * A)
    x2 = (-3 * n + math.sqrt(9 * n * n + 4 * A * (n + A))) / (2 * (n + A))
    assert radii.ratio_class_radius("f1", n).value == pytest.approx(x1 ** (1 / n), abs=1e-12)
    assert radii.ratio_class_radius("f2", n).value == pytest.approx(x2 ** (1 / n), abs=1e-12)
    assert radii.ratio_class_radius("f3", n).value == radii.ratio_class_radius("f2", n).value


def test_ratio_class_n1_values():
    assert radii.ratio_class_radius("f1", 1).value == pytest.approx(0.210573, abs=1e-6)
    assert radii.ratio_class_radius("f2", 1).value == pytest.approx(0.253493, abs=1e-6)


def q_convexity(r, alpha=0.0):
    s = mpmath.asinh(r)
    return 1 - s - r / ((1 - s) * (1 - r * r) * mpmath.sqrt(1 + r * r)) - alpha


@pytest.mark.parametrize("alpha", [0.0, 0.2, 0.5])
def test_convex_order_root_matches_mpmath(alpha):
    res = radii.convex_order_radius(alpha)
    root = mpmath.findroot(lambda r: q_convexity(r, alpha), 0.3)
    assert res.value == pytest.approx(float(root), abs=1e-12)
    assert res.method is Method.ROOT and not res.sharp


def test_convex_order_radius_zero():
    t0 = time.perf_counter()
    res = radii.convex_order_radius(0.0)
    elapsed = time.perf_counter() - t0
    assert res.value == pytest.approx(0.37198, abs=5e-5)
    assert abs(radii.rconv_lhs(res.value)) < 1e-10
    assert elapsed < 0.1


@settings(max_examples=25, deadline=None)
@given(st.floats(0.0, 0.95))
def test_convex_order_radius_decreases_in_alpha(alpha):
    assert radii.convex_order_radius(alpha).value <= radii.convex_order_radius(0.0).value + 1e-15


@settings(max_examples=50)
@given(st.floats(0.0, 0.999))
def test_starlike_order_monotone(alpha):
    a = radii.starlike_order_radius(alpha).value
    b = radii.starlike_order_radius(min(alpha + 0.01, 0.999)).value
    assert b <= a + 1e-15


@settings(max_examples=50)
@given(st.integers(1, 12))
def test_Sn_polynomial_root(n):
    res = radii.radius_Sn(n)
    assert 0 < res.value < 1
    assert radii.defining_polynomial(res)(res.value) == pytest.approx(0.0, abs=1e-12)


def test_to_dict_schema():
    d = radii.named_class_radius("lemniscate").to_dict()
    assert set(d) == {"class", "target", "params", "value", "method", "sharp", "ref"}
    assert d["method"] == "closed_form"


def test_domain_errors():
    with pytest.raises(DomainError):
        radii.starlike_order_radius(1.0)
    with pytest.raises(DomainError):
        radii.m_beta_radius(1.0)
    with pytest.raises(DomainError):
        radii.k_st_radius(0.0)
    with pytest.raises(DomainError):
        radii.radius_Sn(0)
    with pytest.raises(DomainError):
        radii.radius_janowski(1, -0.5, 0.5)
    with pytest.raises(DomainError):
        radii.named_class_radius("booth", 1.5)
    with pytest.raises(DomainError):
        radii.named_class_radius("sine")
    with pytest.raises(DomainError):
        radii.ratio_class_radius("f4", 1)


def test_solve_bracketed_rejects_unbracketed():
    from petalstar.errors import BracketError

    with pytest.raises(BracketError):
        radii.solve_bracketed(lambda x: x * x + 1, 0.0, 1.0)


def test_radius_result_is_frozen():
    res = radii.radius_Sn(1)
    assert isinstance(res, RadiusResult)
    with pytest.raises(Exception):
        res.value = 0.5
