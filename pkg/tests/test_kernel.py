import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petalstar.errors import DomainError
from petalstar.kernel import (
    ASINH1,
    PowerSeries,
    asinh_principal,
    asinh_series,
    rho,
    series_exp,
    series_integrate,
    sinh_c,
)

mpmath.mp.dps = 40

disk_points = st.builds(
    lambda r, t: r * complex(math.cos(t), math.sin(t)),
    st.floats(0.0, 0.999),
    st.floats(0.0, 2 * math.pi),
)


def test_asinh1_constant():
    assert ASINH1 == pytest.approx(float(mpmath.asinh(1)), abs=1e-16)
    assert ASINH1 == pytest.approx(0.881373587019543, abs=1e-15)


@given(disk_points)
def test_asinh_matches_mpmath_in_disk(z):
    ref = complex(mpmath.asinh(mpmath.mpc(z.real, z.imag)))
    assert abs(asinh_principal(z) - ref) < 1e-14


@given(disk_points)
def test_sinh_inverts_asinh(z):
    assert abs(sinh_c(asinh_principal(z)) - z) < 1e-13


@given(disk_points)
def test_rho_conjugate_symmetry(z):
    assert abs(rho(z.conjugate()) - rho(z).conjugate()) < 1e-14


def test_rho_fixed_values():
    assert rho(0) == 1
    assert rho(1) == pytest.approx(1 + ASINH1, abs=1e-15)
    assert rho(-1) == pytest.approx(1 - ASINH1, abs=1e-15)
    assert abs(rho(1j) - (1 + 1j * math.pi / 2)) < 1e-15


def test_branch_points_accepted_and_cuts_rejected():
    assert abs(asinh_principal(1j) - 1j * math.pi / 2) < 1e-15
    assert abs(asinh_principal(-1j) + 1j * math.pi / 2) < 1e-15
    with pytest.raises(DomainError):
        asinh_principal(2j)
    with pytest.raises(DomainError):
        asinh_principal(np.array([0.1, -1.5j]))
    with pytest.raises(DomainError):
        asinh_principal(complex("nan"))


def test_vectorised_shape_preserved():
    z = np.linspace(-0.9, 0.9, 12).reshape(3, 4) + 0.1j
    assert asinh_principal(z).shape == (3, 4)
    assert isinstance(asinh_principal(0.3), complex)


def test_asinh_series_matches_mpmath_taylor():
    s = asinh_series(15, exact=True)
    ref = mpmath.taylor(mpmath.asinh, 0, 15)
    for k in range(16):
        assert float(s[k]) == pytest.approx(float(ref[k]), abs=1e-30)
    assert s[1] == 1 and s[3] == Fraction(-1, 6) and s[5] == Fraction(3, 40)


@given(st.floats(-0.5, 0.5))
def test_series_evaluation_converges(x):
    assert abs(asinh_series(60)(x) - math.asinh(x)) < 1e-14


def test_series_exp_of_z_is_exp():
    s = PowerSeries([Fraction(0), Fraction(1)] + [Fraction(0)] * 8)
    b = series_exp(s)
    assert list(b.coeffs) == [Fraction(1, math.factorial(k)) for k in range(10)]


@settings(max_examples=30)
@given(st.lists(st.floats(-2, 2), min_size=2, max_size=10))
def test_series_exp_log_derivative_identity(tail):
    # b = exp(s) satisfies z b' = (z s') b
    s = PowerSeries([0.0] + tail)
    b = series_exp(s)
    lhs = b.derivative().shift(1)
    rhs = s.derivative().shift(1) * b
    for k in range(1, s.order + 1):
        assert lhs[k] == pytest.approx(rhs[k], rel=1e-12, abs=1e-12)


def test_series_integrate_termwise():
    s = PowerSeries([Fraction(0), Fraction(2), Fraction(6), Fraction(-4)])
    assert list(series_integrate(s).coeffs) == [0, 2, 3, Fraction(-4, 3)]


def test_series_ops_require_zero_constant():
    with pytest.raises(DomainError):
        series_exp(PowerSeries([1.0, 1.0]))
    with pytest.raises(DomainError):
        series_integrate(PowerSeries([1.0, 1.0]))
    with pytest.raises(DomainError):
        asinh_series(-1)


def test_power_series_product_truncates():
    p = PowerSeries([1, 1]) * PowerSeries([1, 1, 5])
    assert list(p.coeffs) == [1, 2]
