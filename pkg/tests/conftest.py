"""Shared independent oracles.

These deliberately avoid the package's own oracle and targets so that a
defect in ``petalstar.verify`` cannot hide a defect in ``petalstar.radii``.
"""

import math

import numpy as np

A = math.asinh(1.0)
SQRT2 = math.sqrt(2.0)


def in_petal(w):
    w = np.asarray(w, dtype=complex)
    return (np.abs(np.sinh(w - 1.0)) < 1.0) & (np.abs(w.imag) < math.pi / 2)


def scan_radius(w_on_circle, inside=in_petal, angles=4096, tol=1e-9):
    """Bisection for the largest ``r`` whose circle image stays inside."""
    th = np.linspace(0.0, 2.0 * np.pi, angles, endpoint=False)

    def ok(r):
        with np.errstate(all="ignore"):
            w = w_on_circle(r * np.exp(1j * th))
            return bool(np.all(np.isfinite(w)) and np.all(inside(w)))

    lo, hi = 0.0, 1.0 - 1e-12
    if ok(hi):
        return 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if ok(mid) else (lo, mid)
    return lo


# Ma-Minda generators written out directly
PSI = {
    "lemniscate": lambda z: np.sqrt(1 + z),
    "rl": lambda z: SQRT2 - (SQRT2 - 1) * np.sqrt((1 - z) / (1 + 2 * (SQRT2 - 1) * z)),
    "cardioid": lambda z: 1 + 4 * z / 3 + 2 * z**2 / 3,
    "exponential": np.exp,
    "crescent": lambda z: z + np.sqrt(1 + z**2),
}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
