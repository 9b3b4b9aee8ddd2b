"""Partial theta function, Jacobi theta functions, and the base constant.

The partial theta series

    theta(t) = sum_{j >= 1} t^(j(j-1)/2) = 1 + t + t^3 + t^6 + t^10 + ...

and its l-term truncation drive every bound produced by this package.
The classical Jacobi theta functions enter through the functional
equation

    theta(exp(-pi x)) = exp(pi x / 8) / sqrt(2 x) * theta4(exp(-2 pi / x)),

which doubles as a correctness check, and the growth constant

    GAMMA_CHI = sqrt(pi / 2) * max_{u > 0} (1 - exp(-u)) / sqrt(u)
              = 0.7998308498...

is the asymptotic rate extracted from it.

All evaluators accept a float or an ndarray for the series argument,
are pure functions of their arguments, and hold no shared state, so
they are safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .optimize import maximize_on_unit_interval

ArrayLike = Union[float, np.ndarray]

#: Stop a series once the next term falls below this fraction of the sum.
_TERM_CUTOFF = 1e-18

_MAX_TERMS = 5_000_000


@dataclass(frozen=True)
class ExponentialSum:
    """Finite sum  sum_i c_i * t^(e_i)  with strictly increasing exponents.

    Used to represent truncated partial theta numerators and geometric
    denominators as explicit term lists.  Evaluation defines t**0 = 1 even
    at t = 0, so sums with a constant term are continuous on [0, 1].
    """

    terms: Tuple[Tuple[float, float], ...]

    def __post_init__(self) -> None:
        prev = -math.inf
        for coeff, expo in self.terms:
            if not (math.isfinite(coeff) and math.isfinite(expo)):
                raise ValueError("coefficients and exponents must be finite")
            if expo < 0:
                raise ValueError(f"negative exponent {expo}")
            if expo <= prev:
                raise ValueError("exponents must be strictly increasing")
            prev = expo

    @classmethod
    def theta_truncation(cls, gamma: float, l: int) -> "ExponentialSum":
        """The l-term sum  sum_{j=1..l} t^(gamma * j(j-1)/2)."""
        if l < 1:
            raise ValueError("l must be a positive integer")
        if gamma <= 0:
            raise ValueError("gamma must be positive")
        return cls(tuple((1.0, gamma * j * (j - 1) / 2.0) for j in range(1, l + 1)))

    @classmethod
    def geometric(cls, l: int) -> "ExponentialSum":
        """The l-term sum  1 + t + ... + t^(l-1)."""
        if l < 1:
            raise ValueError("l must be a positive integer")
        return cls(tuple((1.0, float(i)) for i in range(l)))

    def __call__(self, t: ArrayLike) -> ArrayLike:
        arr = np.asarray(t, dtype=float)
        out = np.zeros_like(arr)
        for coeff, expo in self.terms:
            if expo == 0.0:
                out = out + coeff
            else:
                out = out + coeff * np.power(arr, expo)
        return float(out) if np.ndim(t) == 0 else out


@dataclass(frozen=True)
class GammaChiResult:
    """The constant sqrt(pi/2) * max (1 - e^-u)/sqrt(u) with its maximizer."""

    value: float
    u_star: float
    inner_max: float

    def stationarity_residual(self) -> float:
        """|e^u - 1 - 2u| at the reported maximizer (0 at a true optimum)."""
        return abs(math.exp(self.u_star) - 1.0 - 2.0 * self.u_star)


def _check_domain(t: ArrayLike, hi_open: bool, name: str = "t") -> np.ndarray:
    arr = np.asarray(t, dtype=float)
    bad = (arr < 0.0) | (arr >= 1.0 if hi_open else arr > 1.0)
    if np.any(bad):
        rng = "[0, 1)" if hi_open else "[0, 1]"
        raise ValueError(f"{name} must lie in {rng}")
    return arr


def theta_truncated(t: ArrayLike, gamma: float, l: int) -> ArrayLike:
    """Truncated partial theta sum  sum_{j=1..l} t^(gamma * j(j-1)/2).

    The j = 1 term has exponent 0 and contributes 1.  Requires t in [0, 1]
    and l >= 1; gamma must be positive (values above 1 are allowed and
    arise for flagged, trivial bound queries).
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    arr = _check_domain(t, hi_open=False)
    if np.ndim(t) == 0:
        tt = float(arr)
        if tt == 0.0 or l == 1:
            return 1.0
        r = tt ** gamma
        total, term, q = 1.0, 1.0, r
        for _ in range(l - 1):
            term *= q
            total += term
            q *= r
        return total
    r = np.power(arr, gamma)
    total = np.ones_like(arr)
    term = np.ones_like(arr)
    q = r.copy()
    for _ in range(l - 1):
        term = term * q
        total = total + term
        q = q * r
    return total


def theta_full(t: ArrayLike, gamma: float = 1.0, tail_tol: float = 1e-15) -> ArrayLike:
    """Full partial theta series  sum_{j >= 1} t^(gamma * j(j-1)/2)  for t < 1.

    Terms are accumulated until the next term is below 1e-18 of the partial
    sum and an explicit geometric tail bound (consecutive term ratios are
    t^(gamma*j), decreasing in j) certifies the remainder below
    ``tail_tol`` relative to the sum.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    if tail_tol <= 0:
        raise ValueError("tail_tol must be positive")
    arr = _check_domain(t, hi_open=True)
    if np.ndim(t) == 0:
        tt = float(arr)
        if tt == 0.0:
            return 1.0
        r = tt ** gamma
        total, term, q = 1.0, 1.0, r
        for _ in range(_MAX_TERMS):
            nxt = term * q          # term j+1
            step = q * r            # ratio of term j+2 to term j+1
            if nxt < _TERM_CUTOFF * total and nxt <= tail_tol * total * (1.0 - step):
                return total
            total += nxt
            term, q = nxt, step
        raise RuntimeError("series did not converge within the term budget")
    r = np.power(arr, gamma)
    total = np.ones_like(arr)
    term = np.ones_like(arr)
    q = r.copy()
    for _ in range(_MAX_TERMS):
        nxt = term * q
        step = q * r
        done = (nxt < _TERM_CUTOFF * total) & (nxt <= tail_tol * total * (1.0 - step))
        if np.all(done):
            return total
        total = total + nxt
        term, q = nxt, step
    raise RuntimeError("series did not converge within the term budget")


def jacobi_theta(kind: int, q: ArrayLike) -> ArrayLike:
    """Jacobi theta function theta2, theta3 or theta4 at nome q in [0, 1).

    theta2(q) = sum_{n in Z} q^((n+1/2)^2)
    theta3(q) = sum_{n in Z} q^(n^2)
    theta4(q) = 1 + 2 sum_{n >= 1} (-1)^n q^(n^2)

    Summation stops once a term drops below 1e-18 of the partial sum.
    """
    if kind not in (2, 3, 4):
        raise ValueError("kind must be one of 2, 3, 4")
    arr = _check_domain(q, hi_open=True, name="q")
    scalar = np.ndim(q) == 0
    a = np.atleast_1d(arr).astype(float)

    if kind == 2:
        # 2 * sum_{n >= 0} q^((n+1/2)^2); consecutive exponent gaps 2n+2
        total = 2.0 * np.power(a, 0.25)
        term = total / 2.0
        w = np.power(a, 2.0)  # q^(2n+2) at n = 0
        q2 = a * a
        while True:
            term = term * w
            total = total + 2.0 * term
            if not np.any(2.0 * term > _TERM_CUTOFF * np.abs(total)):
                break
            w = w * q2
    else:
        sign = 1.0 if kind == 3 else -1.0
        total = np.ones_like(a)
        term = np.ones_like(a)  # q^(n^2)
        w = a.copy()            # q^(2n+1) at n = 0
        q2 = a * a
        s = sign
        while True:
            term = term * w
            total = total + 2.0 * s * term
            if not np.any(2.0 * term > _TERM_CUTOFF * np.abs(total)):
                break
            w = w * q2
            s *= sign
    return float(total[0]) if scalar else total.reshape(np.shape(arr))


def functional_equation_residual(x: float) -> float:
    """|theta(e^(-pi x)) - e^(pi x/8)/sqrt(2x) * theta4(e^(-2 pi/x))| for x > 0."""
    if x <= 0:
        raise ValueError("x must be positive")
    lhs = theta_full(math.exp(-math.pi * x), 1.0, 1e-16)
    rhs = (
        math.exp(math.pi * x / 8.0)
        / math.sqrt(2.0 * x)
        * jacobi_theta(4, math.exp(-2.0 * math.pi / x))
    )
    return abs(lhs - rhs)


def gamma_chi(tol: float = 1e-12) -> GammaChiResult:
    """The constant sqrt(pi/2) * max_{u>0} (1 - e^-u)/sqrt(u).

    The maximizer satisfies e^u = 1 + 2u; the root is bracketed on
    (0, 10) by bisection and polished by Newton steps, which gives a
    checkable stationarity residual rather than a bare maximization.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    def g(u: float) -> float:
        return math.exp(u) - 1.0 - 2.0 * u

    lo, hi = 1e-3, 10.0
    if not (g(lo) < 0 < g(hi)):  # pragma: no cover - fixed bracket
        raise RuntimeError("stationarity bracket lost")
    while hi - lo > max(tol, 1e-14):
        mid = 0.5 * (lo + hi)
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    u = 0.5 * (lo + hi)
    for _ in range(6):
        u = u - g(u) / (math.exp(u) - 2.0)
    inner = (1.0 - math.exp(-u)) / math.sqrt(u)
    return GammaChiResult(value=math.sqrt(math.pi / 2.0) * inner, u_star=u, inner_max=inner)


def one_minus_t_theta_max(gamma: float, tol: float = 1e-12) -> Tuple[float, float]:
    """Global maximum of (1 - t) * theta(t^gamma) over t in (0, 1).

    Returns ``(t_star, value)``.  Grid scan with at least 4096 points plus
    golden-section refinement; the objective exceeds 1 for gamma < 1.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    return maximize_on_unit_interval(
        lambda t: (1.0 - t) * theta_full(t, gamma, 1e-14), xtol=tol
    )
