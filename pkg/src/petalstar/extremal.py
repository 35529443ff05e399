"""Extremal and witness functions.

A function ``f`` in the normalised class is described either by a Ma-Minda
generator ``q`` through ``f(z) = z exp(int_0^z (q(t) - 1)/t dt)``, by one of
the named closed forms below, or by a truncated Taylor series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from .errors import ComputationError, DomainError
from .kernel import ASINH1, DEFAULT_ORDER, PowerSeries, asinh_principal, asinh_series, series_exp, series_integrate
from .radii import RadiusResult

A = ASINH1
SQRT2 = math.sqrt(2.0)
_RL_C = 2.0 * (SQRT2 - 1.0)

GENERATOR_KINDS = (
    "petal", "lemniscate", "rl", "cardioid", "exponential", "crescent",
    "sine", "booth", "janowski", "strong_power",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """A Ma-Minda generator ``q`` with ``q(0) = 1``.

    ``d1`` and ``d2`` are ``q'(0)`` and ``q''(0)``; they feed the two-term
    expansion of ``(q(t) - 1)/t`` near the origin.
    """

    kind: str
    alpha: float = 0.0
    C: float = 0.0
    D: float = 0.0
    gamma: float = 1.0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise DomainError(f"unknown generator {self.kind!r}")
        if self.kind == "booth" and not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"Booth alpha must lie in [0, 1], got {self.alpha}")
        if self.kind == "janowski" and not -1.0 <= self.D < self.C <= 1.0:
            raise DomainError(f"need -1 <= D < C <= 1, got C={self.C}, D={self.D}")
        if self.kind == "strong_power" and not 0.0 < self.gamma <= 1.0:
            raise DomainError(f"gamma must lie in (0, 1], got {self.gamma}")
        q0 = complex(self(0.0))
        if abs(q0 - 1.0) > 1e-15:
            raise ComputationError(f"generator {self.kind} has q(0) = {q0}")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        k = self.kind
        if k == "petal":
            out = 1.0 + np.asarray(asinh_principal(z))
        elif k == "lemniscate":
            out = np.sqrt(1.0 + z)
        elif k == "rl":
            out = SQRT2 - (SQRT2 - 1.0) * np.sqrt((1.0 - z) / (1.0 + _RL_C * z))
        elif k == "cardioid":
            out = 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0
        elif k == "exponential":
            out = np.exp(z)
        elif k == "crescent":
            out = z + np.sqrt(1.0 + z * z)
        elif k == "sine":
            out = 1.0 + np.sin(z)
        elif k == "booth":
            out = 1.0 + z / (1.0 - self.alpha * z * z)
        elif k == "janowski":
            out = (1.0 + self.C * z) / (1.0 + self.D * z)
        else:
            out = ((1.0 + z) / (1.0 - z)) ** self.gamma
        return complex(out) if out.ndim == 0 else out

    @property
    def d1(self) -> float:
        k = self.kind
        return {
            "petal": 1.0,
            "lemniscate": 0.5,
            "rl": (SQRT2 - 1.0) * (1.0 + _RL_C) / 2.0,
            "cardioid": 4.0 / 3.0,
            "exponential": 1.0,
            "crescent": 1.0,
            "sine": 1.0,
            "booth": 1.0,
            "janowski": self.C - self.D,
            "strong_power": 2.0 * self.gamma,
        }[k]

    @property
    def d2(self) -> float:
        k = self.kind
        c = _RL_C
        return {
            "petal": 0.0,
            "lemniscate": -0.25,
            "rl": -(SQRT2 - 1.0) * (c * (1.0 + c) - (1.0 + c) ** 2 / 4.0),
            "cardioid": 4.0 / 3.0,
            "exponential": 1.0,
            "crescent": 1.0,
            "sine": 0.0,
            "booth": 0.0,
            "janowski": 2.0 * self.D * (self.D - self.C),
            "strong_power": 4.0 * self.gamma**2,
        }[k]


def table1_generator(j: int) -> GeneratorSpec:
    """Generators ``1 + z/5``, ``(5+2z)/(5+z)`` and ``(7+4z)/(7+z)``."""
    rows = {1: (1 / 5, 0.0), 2: (2 / 5, 1 / 5), 3: (4 / 7, 1 / 7)}
    if j not in rows:
        raise DomainError(f"table row must be 1, 2 or 3, got {j}")
    C, D = rows[j]
    return GeneratorSpec("janowski", C=C, D=D)


@dataclass(frozen=True)
class _CallableGenerator:
    """Adapter for an arbitrary analytic ``q``; derivatives by central differences."""

    q: Callable
    d1: float
    d2: float

    def __call__(self, z):
        return self.q(z)


# closed-form ids whose f has no elementary expression: evaluated through the generator
_INTEGRAL_IDS = {
    "f0_petal": lambda p: GeneratorSpec("petal"),
    "rl_ext": lambda p: GeneratorSpec("rl"),
    "exp_ext": lambda p: GeneratorSpec("exponential"),
    "crescent_ext": lambda p: GeneratorSpec("crescent"),
}


def _closed_value(fid: str, p: Dict[str, float], z):
    n = int(p.get("n", 1))
    if fid == "table1_f1":
        return z * np.exp(z / 5.0)
    if fid == "table1_f2":
        return z + z * z / 5.0
    if fid == "table1_f3":
        return z * (1.0 + z / 7.0) ** 3
    if fid == "lemniscate_ext":
        s = np.sqrt(1.0 + z)
        return 4.0 * z / (1.0 + s) ** 2 * np.exp(2.0 * (s - 1.0))
    if fid == "cardioid_ext":
        return z * np.exp((4.0 * z + z * z) / 3.0)
    if fid == "booth_ext":
        sa = math.sqrt(p["alpha"])
        return z * ((1.0 + sa * z) / (1.0 - sa * z)) ** (1.0 / (2.0 * sa))
    zn = z**n
    if fid == "sn_ext":
        return z * (1.0 + zn) / (1.0 - zn)
    if fid == "csn_ext":
        return z * (1.0 + zn) / (1.0 - zn) ** ((n + 2.0 - 2.0 * p["alpha"]) / n)
    if fid == "f1_pair":
        return z * ((1.0 + zn) / (1.0 - zn)) ** 2
    if fid == "f2_pair":
        return z * (1.0 + zn) / (1.0 - zn) ** 2
    if fid == "f3_pair":
        return z * (1.0 + zn) ** 2 / (1.0 - zn)
    raise DomainError(f"unknown closed-form id {fid!r}")


def _closed_logderiv(fid: str, p: Dict[str, float], z):
    n = int(p.get("n", 1))
    if fid == "table1_f1":
        return 1.0 + z / 5.0
    if fid == "table1_f2":
        return (5.0 + 2.0 * z) / (5.0 + z)
    if fid == "table1_f3":
        return (7.0 + 4.0 * z) / (7.0 + z)
    if fid == "lemniscate_ext":
        return np.sqrt(1.0 + z)
    if fid == "cardioid_ext":
        return 1.0 + (4.0 * z + 2.0 * z * z) / 3.0
    if fid == "booth_ext":
        return 1.0 + z / (1.0 - p["alpha"] * z * z)
    zn = z**n
    if fid == "sn_ext":
        return 1.0 + 2.0 * n * zn / (1.0 - zn * zn)
    if fid == "csn_ext":
        al = p["alpha"]
        return (1.0 + 2.0 * (n - al + 1.0) * zn + (1.0 - 2.0 * al) * zn * zn) / (1.0 - zn * zn)
    if fid == "f1_pair":
        return 1.0 + 4.0 * n * zn / (1.0 - zn * zn)
    if fid == "f2_pair":
        return 1.0 + (3.0 * n * zn + n * zn * zn) / (1.0 - zn * zn)
    if fid == "f3_pair":
        return 1.0 + (3.0 * n * zn - n * zn * zn) / (1.0 - zn * zn)
    raise DomainError(f"unknown closed-form id {fid!r}")


CLOSED_FORM_IDS = (
    "f0_petal", "table1_f1", "table1_f2", "table1_f3", "lemniscate_ext", "rl_ext",
    "cardioid_ext", "exp_ext", "crescent_ext", "booth_ext", "sn_ext", "csn_ext",
    "f1_pair", "f2_pair", "f3_pair",
)


@dataclass(frozen=True)
class FunctionSpec:
    """An analytic ``f`` with ``f(0) = 0`` and ``f'(0) = 1``.

    ``form`` is ``"integral_rep"`` (with ``generator``), ``"closed_form"`` (with
    ``fid`` and ``params``) or ``"series"`` (with ``series``).
    """

    form: str
    generator: Optional[Union[GeneratorSpec, _CallableGenerator]] = None
    fid: Optional[str] = None
    params: Tuple[Tuple[str, float], ...] = ()
    series: Optional[PowerSeries] = None

    @classmethod
    def closed_form(cls, fid: str, **params) -> "FunctionSpec":
        if fid not in CLOSED_FORM_IDS:
            raise DomainError(f"unknown closed-form id {fid!r}")
        if fid == "booth_ext":
            a = params.get("alpha")
            if a is None or not 0.0 <= a <= 1.0:
                raise DomainError(f"Booth alpha must lie in [0, 1], got {a}")
            if a == 0.0:
                # no closed form at alpha = 0; the generator 1 + z is used instead
                return build_integral_rep(GeneratorSpec("booth", alpha=0.0))
        if fid in ("sn_ext", "csn_ext", "f1_pair", "f2_pair", "f3_pair"):
            n = params.get("n", 1)
            if int(n) != n or n < 1:
                raise DomainError(f"n must be a positive integer, got {n}")
        if fid == "csn_ext" and not 0.0 <= params.get("alpha", -1.0) < 1.0:
            raise DomainError("csn_ext needs 0 <= alpha < 1")
        return cls("closed_form", fid=fid, params=tuple(sorted(params.items())))

    @classmethod
    def from_series(cls, series: PowerSeries) -> "FunctionSpec":
        return cls("series", series=series)

    @property
    def param_dict(self) -> Dict[str, float]:
        return dict(self.params)

    def resolved(self) -> "FunctionSpec":
        """Integral-representation form for closed-form ids without elementary f."""
        if self.form == "closed_form" and self.fid in _INTEGRAL_IDS:
            return build_integral_rep(_INTEGRAL_IDS[self.fid](self.param_dict))
        return self


def build_integral_rep(q) -> FunctionSpec:
    """``f(z) = z exp(int_0^z (q(t) - 1)/t dt)`` for a generator with ``q(0) = 1``.

    ``q`` is a :class:`GeneratorSpec` or any vectorised analytic callable.
    """
    if isinstance(q, GeneratorSpec):
        return FunctionSpec("integral_rep", generator=q)
    q0 = complex(q(0.0))
    if abs(q0 - 1.0) > 1e-12:
        raise DomainError(f"generator must satisfy q(0) = 1, got {q0}")
    h = 1e-3
    qp, qm = complex(q(h)), complex(q(-h))
    d1 = (qp - qm) / (2 * h)
    d2 = (qp - 2.0 * q0 + qm) / (h * h)
    return FunctionSpec("integral_rep", generator=_CallableGenerator(q, d1, d2))


_GL_X, _GL_W = np.polynomial.legendre.leggauss(12)


def _gauss(g, a: float, b: float) -> complex:
    x = 0.5 * (b - a) * _GL_X + 0.5 * (a + b)
    return 0.5 * (b - a) * complex(np.dot(_GL_W, g(x)))


def integrate_panels(g, a: float, b: float, tol: float = 1e-12, max_depth: int = 40) -> complex:
    """Adaptive panel-halving Gauss-Legendre quadrature of a vectorised ``g``.

    A panel is accepted when its 12-point rule agrees with the sum over its
    two halves to within its share of ``tol``.

    Raises:
        ComputationError: if some panel still disagrees at ``max_depth``.
    """
    total = 0.0 + 0.0j
    stack = [(a, b, _gauss(g, a, b), 0)]
    worst = 0.0
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left, right = _gauss(g, lo, mid), _gauss(g, mid, hi)
        err = abs(left + right - whole)
        if err <= tol * (hi - lo) / (b - a):
            total += left + right
            continue
        if depth >= max_depth:
            worst = max(worst, err)
            total += left + right
            continue
        stack.append((lo, mid, left, depth + 1))
        stack.append((mid, hi, right, depth + 1))
    if worst:
        raise ComputationError(f"quadrature did not converge; panel error {worst:.3g}")
    return total


def _log_integral(gen, z: complex, tol: float = 1e-12) -> complex:
    """``int_0^z (q(t) - 1)/t dt`` along the segment ``[0, z]``, as ``int_0^1 (q(sz) - 1)/s ds``."""
    if z == 0:
        return 0.0 + 0.0j
    d1, d2 = gen.d1, gen.d2

    def g(s):
        t = s * z
        small = np.abs(t) < 1e-4
        tt = np.where(small, 1.0, t)
        val = (np.asarray(gen(tt)) - 1.0) / tt
        val = np.where(small, d1 + 0.5 * d2 * t, val)
        return val * z

    return integrate_panels(g, 0.0, 1.0, tol)


def _check_disk(z):
    if np.any(np.abs(np.asarray(z)) >= 1.0):
        raise DomainError("functions are evaluated on the open unit disk |z| < 1")


def evaluate(f: FunctionSpec, z) -> complex:
    """Value ``f(z)`` for ``|z| < 1``."""
    _check_disk(z)
    z = complex(z)
    f = f.resolved()
    if f.form == "integral_rep":
        return z * complex(np.exp(_log_integral(f.generator, z)))
    if f.form == "series":
        return complex(f.series(z))
    return complex(_closed_value(f.fid, f.param_dict, z))


def log_derivative(f: FunctionSpec, z):
    """``z f'(z) / f(z)``; the limit value 1 is returned at ``z = 0``.

    Vectorised over ``z``. For the integral representation this is ``q(z)``.
    """
    zarr = np.asarray(z, dtype=complex)
    _check_disk(zarr)
    f = f.resolved()
    zero = zarr == 0
    zs = np.where(zero, 0.5, zarr)
    if f.form == "integral_rep":
        out = np.asarray(f.generator(zs), dtype=complex)
    elif f.form == "series":
        out = zs * np.asarray(f.series.derivative()(zs)) / np.asarray(f.series(zs))
    else:
        out = np.asarray(_closed_logderiv(f.fid, f.param_dict, zs), dtype=complex)
    out = np.where(zero, 1.0 + 0.0j, out)
    return complex(out) if out.ndim == 0 else out


def f0_coefficients(N: int, exact: bool = False) -> PowerSeries:
    """Taylor coefficients ``a_0..a_N`` of ``f0(z) = z exp(int_0^z asinh(t)/t dt)``."""
    if N < 1:
        raise DomainError(f"order must be at least 1, got {N}")
    inner = series_exp(series_integrate(asinh_series(N - 1, exact=exact)))
    return inner.shift(1)


def f0_series_function(order: int = DEFAULT_ORDER) -> FunctionSpec:
    return FunctionSpec.from_series(f0_coefficients(order))


@dataclass(frozen=True)
class Witness:
    f: FunctionSpec
    z_star: complex
    expected_w: complex
    note: str = ""


def sharpness_witness(result: RadiusResult) -> Witness:
    """The extremal function and boundary point showing ``result`` cannot be enlarged."""
    if not result.sharp:
        raise DomainError(f"{result.source_class} -> {result.target_class} is not a sharp result")
    R = result.value
    p = result.params
    src, tgt = result.source_class, result.target_class
    f0 = FunctionSpec.closed_form("f0_petal")
    if tgt == "S_alpha":
        return Witness(f0, complex(-R), complex(p["alpha"]), "Re w = alpha")
    if tgt == "M_beta":
        return Witness(f0, complex(R), complex(p["beta"]), "Re w = beta")
    if tgt == "K_ST":
        k = p["k"]
        return Witness(f0, complex(-R), complex(k / (k + 1.0)), "Re w = k |w - 1|")
    lower, upper = complex(1.0 - A), complex(1.0 + A)
    if src == "S_n":
        return Witness(FunctionSpec.closed_form("sn_ext", n=p["n"]), complex(R), upper)
    if src == "CS_n":
        fn = FunctionSpec.closed_form("csn_ext", n=p["n"], alpha=p["alpha"])
        return Witness(fn, complex(R), upper)
    if src == "lemniscate":
        return Witness(FunctionSpec.closed_form("lemniscate_ext"), complex(-R), lower)
    if src == "rl":
        return Witness(FunctionSpec.closed_form("rl_ext"), complex(-R), lower)
    if src == "cardioid":
        return Witness(FunctionSpec.closed_form("cardioid_ext"), complex(R), upper)
    if src == "exponential":
        return Witness(FunctionSpec.closed_form("exp_ext"), complex(R), upper)
    if src == "crescent":
        return Witness(FunctionSpec.closed_form("crescent_ext"), complex(R), upper)
    if src == "booth":
        return Witness(FunctionSpec.closed_form("booth_ext", alpha=p["alpha"]), complex(-R), lower)
    if src in ("F1", "F3"):
        n = p["n"]
        fid = "f1_pair" if src == "F1" else "f3_pair"
        z = R * complex(math.cos(math.pi / n), math.sin(math.pi / n))
        return Witness(FunctionSpec.closed_form(fid, n=n), z, lower)
    if src == "F2":
        return Witness(FunctionSpec.closed_form("f2_pair", n=p["n"]), complex(R), upper)
    raise DomainError(f"no witness registered for {src} -> {tgt}")
