"""Complex arcsinh with explicit branch handling and a small power-series engine.

All evaluation routines accept Python scalars or numpy arrays and return the
same shape. The arcsinh branch is fixed as ``log(z + sqrt(1 + z**2))`` with the
principal square root and principal logarithm, which is analytic on the open
unit disk and has its cuts on the imaginary axis outside ``[-i, i]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import DomainError

Number = Union[int, float, complex, Fraction]

DEFAULT_ORDER = 64

#: arcsinh(1) = ln(1 + sqrt 2), the half-width of the petal along the real axis.
ASINH1 = math.asinh(1.0)


def _as_complex(z):
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("non-finite complex input")
    return arr


def _unwrap(arr, like):
    if np.ndim(like) == 0:
        return complex(arr)
    return arr


def asinh_principal(z):
    """Principal-branch inverse hyperbolic sine.

    Points on the cuts ``(-i*inf, -i) U (i, i*inf)`` raise :class:`DomainError`.
    The end points ``+-i`` are accepted and map to ``+-i*pi/2``.
    """
    arr = _as_complex(z)
    on_cut = (arr.real == 0.0) & (np.abs(arr.imag) > 1.0)
    if np.any(on_cut):
        bad = arr[on_cut].ravel()[0] if arr.ndim else arr
        raise DomainError(
            f"asinh is cut along the imaginary axis beyond +-i; got {complex(bad)}"
        )
    out = np.log(arr + np.sqrt(1.0 + arr * arr))
    return _unwrap(out, z)


def rho(z):
    """The petal generator ``1 + asinh(z)``."""
    return _unwrap(1.0 + np.asarray(asinh_principal(z)), z)


def sinh_c(w):
    """Complex hyperbolic sine."""
    return _unwrap(np.sinh(_as_complex(w)), w)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Taylor series ``c0 + c1 z + ... + cN z**N`` about the origin.

    Coefficients may be floats or :class:`fractions.Fraction`; the arithmetic
    below works for either and never reads past ``order``.
    """

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __call__(self, z):
        """Evaluate by Horner's rule (floats)."""
        zz = np.asarray(z, dtype=complex)
        acc = np.zeros_like(zz)
        for c in reversed(self.coeffs):
            acc = acc * zz + complex(c)
        return _unwrap(acc, z)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            out.append(sum(self.coeffs[j] * other.coeffs[k - j] for j in range(k + 1)))
        return PowerSeries(out)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries([0 * self.coeffs[0]])
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def shift(self, by: int = 1) -> "PowerSeries":
        """Multiply by ``z**by`` keeping the order increased by ``by``."""
        zero = 0 * self.coeffs[0]
        return PowerSeries([zero] * by + list(self.coeffs))

    def as_float(self) -> "PowerSeries":
        return PowerSeries([float(c) for c in self.coeffs])


def asinh_series(N: int, exact: bool = False) -> PowerSeries:
    """Taylor coefficients of ``asinh(z)`` up to ``z**N``.

    ``c_{2k+1} = (-1)**k (2k)! / (4**k (k!)**2 (2k+1))``; even coefficients vanish.
    """
    if N < 0:
        raise DomainError("series order must be non-negative")
    coeffs: list = [Fraction(0)] * (N + 1)
    for k in range((N - 1) // 2 + 1):
        p = 2 * k + 1
        if p > N:
            break
        coeffs[p] = Fraction((-1) ** k * math.comb(2 * k, k), 4**k * p)
    series = PowerSeries(coeffs)
    return series if exact else series.as_float()


def _require_zero_constant(s: PowerSeries, what: str):
    if s.coeffs[0] != 0:
        raise DomainError(f"{what} requires a zero constant term, got {s.coeffs[0]!r}")


def series_exp(s: PowerSeries) -> PowerSeries:
    """``exp`` of a series with zero constant term.

    Uses ``b0 = 1`` and ``k b_k = sum_{j=1..k} j c_j b_{k-j}``.
    """
    _require_zero_constant(s, "series_exp")
    c = s.coeffs
    one = c[0] + 1
    b = [one]
    for k in range(1, s.order + 1):
        acc = sum(j * c[j] * b[k - j] for j in range(1, k + 1))
        b.append(acc / k)
    return PowerSeries(b)


def series_integrate(s: PowerSeries) -> PowerSeries:
    """Termwise ``int_0^z s(t)/t dt``; requires ``c0 = 0``."""
    _require_zero_constant(s, "series_integrate")
    c = s.coeffs
    return PowerSeries([c[0]] + [c[k] / k for k in range(1, s.order + 1)])
