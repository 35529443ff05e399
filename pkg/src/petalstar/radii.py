"""Radius constants of the petal starlike class.

Each function returns a :class:`RadiusResult`: the largest ``r`` for which the
source class maps into the target class on ``|z| < r``, tagged with how the
value was obtained and whether an extremal function attains it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict

import numpy as np

from .errors import BracketError, ComputationError, DomainError
from .kernel import ASINH1

A = ASINH1
SQRT2 = math.sqrt(2.0)


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    ROOT = "root_of_equation"


NAMED_CLASSES = ("lemniscate", "rl", "cardioid", "exponential", "crescent", "booth")
RATIO_CLASSES = ("f1", "f2", "f3")


@dataclass(frozen=True)
class RadiusResult:
    value: float
    source_class: str
    target_class: str
    params: Dict[str, float] = field(default_factory=dict)
    method: Method = Method.CLOSED_FORM
    sharp: bool = False
    ref: str = ""

    def __post_init__(self):
        if not 0.0 < self.value <= 1.0:
            raise ComputationError(f"radius {self.value} outside (0, 1]")

    @property
    def whole_disk(self) -> bool:
        return self.value == 1.0

    def to_dict(self) -> dict:
        return {
            "class": self.source_class,
            "target": self.target_class,
            "params": dict(self.params),
            "value": self.value,
            "method": self.method.value,
            "sharp": self.sharp,
            "ref": self.ref,
        }


def solve_bracketed(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-15, maxiter: int = 200
) -> float:
    """Root of ``f`` in ``[lo, hi]`` by bisection followed by one secant step.

    The secant step is kept only if it stays inside the final bracket and
    does not increase ``|f|``.

    Raises:
        BracketError: if ``f(lo)`` and ``f(hi)`` have the same sign.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if np.sign(flo) == np.sign(fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = {flo:.3g}, {fhi:.3g}")
    for _ in range(maxiter):
        if hi - lo < tol:
            break
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if np.sign(fmid) == np.sign(flo):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    best = lo if abs(flo) <= abs(fhi) else hi
    fbest = min(abs(flo), abs(fhi))
    if fhi != flo:
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if lo <= x <= hi and abs(f(x)) <= fbest:
            best = x
    return best


def _check_alpha(alpha: float):
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")


def _check_n(n: int):
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


def starlike_order_radius(alpha: float) -> RadiusResult:
    """Radius of starlikeness of order ``alpha``: ``sinh(1 - alpha)``, or 1."""
    _check_alpha(alpha)
    params = {"alpha": alpha}
    if alpha <= 1.0 - A:
        return RadiusResult(1.0, "S_rho", "S_alpha", params, sharp=False,
                            ref="whole-disk inclusion S*_rho in S*_alpha")
    return RadiusResult(math.sinh(1.0 - alpha), "S_rho", "S_alpha", params, sharp=True,
                        ref="S*_alpha radius; extremal f0")


def m_beta_radius(beta: float) -> RadiusResult:
    """Radius for ``Re(zf'/f) < beta``: ``sinh(beta - 1)``, or 1."""
    if beta <= 1.0:
        raise DomainError(f"beta must exceed 1, got {beta}")
    params = {"beta": beta}
    if beta >= 1.0 + A:
        return RadiusResult(1.0, "S_rho", "M_beta", params, sharp=False,
                            ref="whole-disk inclusion S*_rho in M(beta)")
    return RadiusResult(math.sinh(beta - 1.0), "S_rho", "M_beta", params, sharp=True,
                        ref="M(beta) radius; extremal f0")


def k_st_radius(k: float) -> RadiusResult:
    """k-starlike radius ``sinh(1/(k+1))``."""
    if k <= 0:
        raise DomainError(f"k must be positive (k = 0 gives the whole disk), got {k}")
    return RadiusResult(math.sinh(1.0 / (k + 1.0)), "S_rho", "K_ST", {"k": k}, sharp=True,
                        ref="k-ST radius; extremal f0 at -sinh(1/(k+1))")


def rconv_lhs(r: float, alpha: float = 0.0) -> float:
    """Left side of the convexity-of-order-alpha radius equation."""
    s = math.asinh(r)
    return (1.0 - r * r) * math.sqrt(1.0 + r * r) * (1.0 - s) * (1.0 - alpha - s) - r


def convex_order_radius(alpha: float, panels: int = 64) -> RadiusResult:
    """Least root in (0, 1) of the convexity radius equation (not sharp).

    The interval is scanned in ``panels`` pieces for the first sign change,
    which is then refined by :func:`solve_bracketed`.
    """
    _check_alpha(alpha)
    f = lambda r: rconv_lhs(r, alpha)
    grid = np.linspace(0.0, 1.0, panels + 1)
    prev = f(grid[0])
    for lo, hi in zip(grid[:-1], grid[1:]):
        cur = f(hi)
        if np.sign(cur) != np.sign(prev):
            root = solve_bracketed(f, float(lo), float(hi))
            if abs(f(root)) >= 1e-10:
                raise ComputationError(f"root residual {f(root):.3g} too large")
            return RadiusResult(root, "S_rho", "K_alpha", {"alpha": alpha}, Method.ROOT,
                                sharp=False, ref="K_alpha radius as root of the convexity equation")
        prev = cur
    raise ComputationError(f"no sign change of the convexity equation for alpha={alpha}")


def radius_Sn(n: int) -> RadiusResult:
    """``S_n = {f in A_n : f(z)/z in P_n}``."""
    _check_n(n)
    v = (A / (n + math.sqrt(n * n + A * A))) ** (1.0 / n)
    return RadiusResult(v, "S_n", "S_rho_n", {"n": n}, sharp=True,
                        ref="S_n radius; extremal z(1+z^n)/(1-z^n)")


def radius_F() -> RadiusResult:
    """Value stated for ``F = {f : f(z)/z in P}``: ``-e + sqrt(1 + e**2)``.

    Reported as stated; it is not certified (see ``radius_Sn(1)``, the radius
    of the same class) and carries no extremal witness.
    """
    e = math.e
    return RadiusResult(-e + math.sqrt(1.0 + e * e), "F", "S_rho", {}, sharp=False,
                        ref="F radius, stated closed form")


def radius_CSn(n: int, alpha: float) -> RadiusResult:
    """Close-to-starlike type class ``CS_n(alpha)``."""
    _check_n(n)
    _check_alpha(alpha)
    m = n - alpha + 1.0
    v = (A / (m + math.sqrt(m * m + (A + 2.0 * (1.0 - alpha)) * A))) ** (1.0 / n)
    return RadiusResult(v, "CS_n", "S_rho_n", {"n": n, "alpha": alpha}, sharp=True,
                        ref="CS_n(alpha) radius; extremal pair f0, g0")


def janowski_R1(n: int, C: float, D: float) -> float:
    disc = (C - D) ** 2 + 4.0 * (D * D * (1.0 + A) - C * D) * A
    return (2.0 * A / (C - D + math.sqrt(disc))) ** (1.0 / n)


def janowski_R2(n: int, C: float, D: float) -> float:
    disc = (C - D) ** 2 + 4.0 * (D * D * (A - 1.0) + C * D) * A
    return (2.0 * A / (C - D + math.sqrt(disc))) ** (1.0 / n)


def radius_janowski(n: int, C: float, D: float) -> RadiusResult:
    """Janowski class ``S*_n[C, D]``; the three cases follow the sign of ``D``."""
    _check_n(n)
    if not -1.0 <= D < C <= 1.0:
        raise DomainError(f"need -1 <= D < C <= 1, got C={C}, D={D}")
    if D < 0:
        v = janowski_R1(n, C, D)
    elif D == 0:
        v = (A / C) ** (1.0 / n)
    else:
        v = janowski_R2(n, C, D)
    return RadiusResult(min(1.0, v), "Janowski_n", "S_rho_n", {"n": n, "C": C, "D": D},
                        sharp=False, ref="S*_n[C,D] radius")


def named_class_radius(cls: str, alpha: float | None = None) -> RadiusResult:
    """Sharp radii for the lemniscate, RL, cardioid, exponential, crescent and Booth classes."""
    cls = cls.lower()
    params: Dict[str, float] = {}
    if cls == "lemniscate":
        v = A * (2.0 - A)
    elif cls == "rl":
        v = (2.0 + (1.0 + SQRT2) * A) * A / (5.0 - 3.0 * SQRT2 + (4.0 * (SQRT2 - 1.0) + 2.0 * A) * A)
    elif cls == "cardioid":
        v = 0.5 * (math.sqrt(2.0 * (2.0 + 3.0 * A)) - 2.0)
    elif cls == "exponential":
        v = math.log(1.0 + A)
    elif cls == "crescent":
        v = A * (2.0 + A) / (2.0 * (1.0 + A))
    elif cls == "booth":
        if alpha is None or not 0.0 <= alpha <= 1.0:
            raise DomainError(f"Booth alpha must lie in [0, 1], got {alpha}")
        params["alpha"] = alpha
        if alpha == 0.0:
            v = A
        else:
            v = (-1.0 + math.sqrt(1.0 + alpha * (2.0 * A) ** 2)) / (2.0 * alpha * A)
    else:
        raise DomainError(f"unknown named class {cls!r}; expected one of {NAMED_CLASSES}")
    return RadiusResult(v, cls, "S_rho", params, sharp=True, ref=f"{cls} radius; boundary touch of the petal")


def ratio_class_radius(cls: str, n: int) -> RadiusResult:
    """Radii for the ratio classes F1, F2, F3 (F3 coincides with F2)."""
    cls = cls.lower()
    _check_n(n)
    if cls == "f1":
        v = ((math.sqrt(4.0 * n * n + A * A) - 2.0 * n) / A) ** (1.0 / n)
    elif cls in ("f2", "f3"):
        v = ((math.sqrt(9.0 * n * n + 4.0 * A * (n + A)) - 3.0 * n) / (2.0 * (n + A))) ** (1.0 / n)
    else:
        raise DomainError(f"unknown ratio class {cls!r}; expected one of {RATIO_CLASSES}")
    return RadiusResult(v, cls.upper(), "S_rho_n", {"n": n}, sharp=True,
                        ref=f"{cls.upper()} ratio-class radius")


def defining_polynomial(result: RadiusResult) -> Callable[[float], float]:
    """Polynomial in ``r`` whose least positive root is ``result.value``.

    Available for the S_n, CS_n, Janowski and ratio classes (unclamped values).
    """
    p = result.params
    src = result.source_class
    if src == "S_n":
        n = p["n"]
        return lambda r: A * r ** (2 * n) + 2 * n * r**n - A
    if src == "CS_n":
        n, al = p["n"], p["alpha"]
        return lambda r: (2 - 2 * al + A) * r ** (2 * n) + 2 * (n - al + 1) * r**n - A
    if src == "Janowski_n":
        n, C, D = p["n"], p["C"], p["D"]
        if D < 0:
            return lambda r: (D * D * (1 + A) - C * D) * r ** (2 * n) + (C - D) * r**n - A
        if D == 0:
            return lambda r: C * r**n - A
        return lambda r: (D * D * (A - 1) + C * D) * r ** (2 * n) + (C - D) * r**n - A
    if src == "F1":
        n = p["n"]
        return lambda r: A * r ** (2 * n) + 4 * n * r**n - A
    if src in ("F2", "F3"):
        n = p["n"]
        return lambda r: (n + A) * r ** (2 * n) + 3 * n * r**n - A
    raise DomainError(f"no defining polynomial registered for {src}")
