"""Chromatic-number lower bounds from truncated partial theta maximization.

For a query with m forbidden distances and clique parameter k, set
gamma = k / (m + 1).  The exponential base of the lower bound is

    max over l of  max_{0 < t < 1}  theta(t^gamma; l) / (1 + t + ... + t^(l-1)),

a ratio of an l-term truncated partial theta sum to an l-term geometric
sum.  The reported ``l_star`` counts terms, so numerator and denominator
always have the same length.  The argmax over l sits below 2/gamma + 1,
and the search window extends two steps past that for safety.

All functions are pure; table cells can be computed in parallel and the
results are deterministic regardless of evaluation order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .optimize import maximize_on_unit_interval
from .special_functions import gamma_chi, theta_truncated

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class BoundQuery:
    """Number of forbidden distances ``m`` and clique parameter ``k``.

    The bound is nontrivial only for k <= m (gamma < 1); larger k is
    accepted but flagged.
    """

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1:
            raise ValueError("m and k must be positive integers")

    @property
    def gamma(self) -> float:
        return self.k / (self.m + 1)


@dataclass(frozen=True)
class BoundResult:
    """One cell of the lower-bound table with its maximizing parameters."""

    m: int
    k: int
    gamma: float
    l_star: int
    t_star: float
    value: float
    warning: Optional[str] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "m": self.m,
            "k": self.k,
            "gamma": self.gamma,
            "l_star": self.l_star,
            "t_star": self.t_star,
            "value": self.value,
        }


def theta_ratio(t: ArrayLike, gamma: float, l: int) -> ArrayLike:
    """Ratio  theta(t^gamma; l) / (1 + t + ... + t^(l-1)).

    Both sums have l terms.  Defined on [0, 1]; the value at t = 0 is the
    t -> 0 limit, which is 1, and the value at t = 1 is l / l = 1.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    num = theta_truncated(t, gamma, l)
    if np.ndim(t) == 0:
        tt = float(t)
        den, p = 1.0, 1.0
        for _ in range(l - 1):
            p *= tt
            den += p
        return num / den
    arr = np.asarray(t, dtype=float)
    den = np.ones_like(arr)
    p = np.ones_like(arr)
    for _ in range(l - 1):
        p = p * arr
        den = den + p
    return num / den


def maximize_over_t(gamma: float, l: int, tol: float = 1e-12) -> Tuple[float, float]:
    """Global maximum of the l-term ratio over t in (0, 1).

    Returns ``(t_star, value)`` with value >= 1; when the interior never
    exceeds the common endpoint limit 1 (gamma >= 1), the supremum 1 is
    reported at t_star = 0.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    t_star, value = maximize_on_unit_interval(
        lambda t: theta_ratio(t, gamma, l), xtol=tol
    )
    if value < 1.0:
        return 0.0, 1.0
    return t_star, value


def best_l(gamma: float, tol: float = 1e-12) -> Tuple[int, float, float]:
    """Maximize the ratio jointly over t and the term count l.

    Scans l = 1 .. ceil(2/gamma) + 2 (the argmax is known to lie below
    2/gamma + 1; the margin guards the window edge) and returns
    ``(l_star, t_star, value)``.  Ties break toward smaller l.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    l_star, t_star, value = 1, 0.0, 1.0
    for l in range(1, math.ceil(2.0 / gamma) + 3):
        t, v = maximize_over_t(gamma, l, tol)
        if v > value:
            l_star, t_star, value = l, t, v
    return l_star, t_star, value


def chromatic_lower_bound(query: BoundQuery, tol: float = 1e-12) -> BoundResult:
    """Certified lower bound on limsup chi_k(R^n, A_m)^(1/n).

    A_m is the distance set {1, sqrt(2), ..., sqrt(m)}.  For k > m the
    result carries a warning: the bound may be trivial (<= 1).
    """
    gamma = query.gamma
    l_star, t_star, value = best_l(gamma, tol)
    warning = None
    if query.k > query.m:
        warning = "k > m: bound may be trivial"
    return BoundResult(
        m=query.m,
        k=query.k,
        gamma=gamma,
        l_star=l_star,
        t_star=t_star,
        value=value,
        warning=warning,
    )


def asymptotic_lower_bound(query: BoundQuery) -> float:
    """The closed-form rate GAMMA_CHI * sqrt((m + 1) / k)."""
    return gamma_chi().value * math.sqrt((query.m + 1) / query.k)


def kupavskii_upper_base(m: int) -> float:
    """Base 2(sqrt(m) + 1) of the known upper bound for chi(R^n, A_m)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return 2.0 * (math.sqrt(m) + 1.0)


def table(
    m_max: int, k_max: int, tol: float = 1e-12, max_workers: int = 1
) -> List[BoundResult]:
    """All cells (m, k) with 1 <= m <= m_max and 1 <= k <= min(m, k_max).

    Ordered by m ascending, then k ascending, independent of how many
    workers compute the cells.
    """
    if m_max < 1 or k_max < 1:
        raise ValueError("m_max and k_max must be positive integers")
    queries = [
        BoundQuery(m=m, k=k)
        for m in range(1, m_max + 1)
        for k in range(1, min(m, k_max) + 1)
    ]
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(lambda q: chromatic_lower_bound(q, tol), queries))
    return [chromatic_lower_bound(q, tol) for q in queries]
