"""One-dimensional global maximization on the open unit interval.

Dense grid scan followed by golden-section refinement.  Unimodality is
never assumed: several distinct local grid maxima are refined and the
best refined point wins.
"""

from __future__ import annotations

import math
from typing import Callable, Tuple

import numpy as np

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, xtol: float = 1e-12
) -> Tuple[float, float]:
    """Maximize a scalar function on [lo, hi] by golden-section search."""
    a, b = float(lo), float(hi)
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while (b - a) > xtol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    return x, f(x)


def maximize_on_unit_interval(
    f: Callable,
    grid_points: int = 4096,
    xtol: float = 1e-12,
    restarts: int = 3,
) -> Tuple[float, float]:
    """Global maximum of ``f`` on (0, 1).

    ``f`` must accept both a float and a 1-d ndarray.  The grid scan uses
    ``grid_points`` interior points; the ``restarts`` highest local grid
    maxima (plus the grid endpoints) are refined by golden section, which
    guards against picking a secondary hump.

    Returns ``(x_star, value)``.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    ts = np.linspace(0.0, 1.0, grid_points + 2)[1:-1]
    vals = np.asarray(f(ts), dtype=float)
    n = len(ts)

    interior = np.nonzero((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:]))[0] + 1
    candidates = set(int(i) for i in interior)
    candidates.update((0, n - 1))
    top = sorted(candidates, key=lambda i: vals[i], reverse=True)[:restarts]

    best_x = float(ts[int(np.argmax(vals))])
    best_v = float(np.max(vals))
    for i in top:
        lo = ts[i - 1] if i > 0 else 0.5 * ts[0]
        hi = ts[i + 1] if i < n - 1 else 0.5 * (1.0 + ts[-1])
        x, v = golden_section_max(lambda t: float(f(t)), float(lo), float(hi), xtol)
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v
