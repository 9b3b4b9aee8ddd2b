"""Lattice theta series and the double-cap quantities they bound.

For an even integral lattice L of dimension d, the theta series is

    theta_L(t) = sum_{v in L} t^(|v|^2) = sum_{j >= 0} N_j t^(2j),

where N_j counts lattice vectors of squared norm 2j and the series
converges on [0, 1).  The associated double-cap quantity is

    mu_L = ( max_{0 < t < 1} theta_L(t) (1 - t)^d )^(-1/d),

an upper bound for the exponential rate of orthogonality-avoiding
spherical sets.  Coefficients are exact integers:

  * D_n:   vectors of Z^n with even squared norm, counted by convolution;
           closed form theta_{D_n}(t) = (theta3(t)^n + theta4(t)^n) / 2.
  * E8:    N_j = 240 * sigma_3(j).
  * Leech: N_j = (65520 / 691) * (sigma_11(j) - tau(j)), with tau the
           coefficients of q * prod (1 - q^n)^24; the division by 691 is
           exact, and anything else is a hard failure.

Series objects are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple, Union

import numpy as np

from .optimize import golden_section_max, maximize_on_unit_interval
from .special_functions import jacobi_theta

ArrayLike = Union[float, np.ndarray]

SQRT3_OVER_2 = math.sqrt(3.0) / 2.0
INV_SQRT_2 = 1.0 / math.sqrt(2.0)

DEFAULT_SERIES_LENGTH = 512


class TailBoundError(ValueError):
    """Raised when a truncated series cannot certify its tail; increase K."""


@dataclass(frozen=True)
class ThetaSeries:
    """Truncated theta series of an even integral lattice.

    ``coeffs[j]`` is the exact number of lattice vectors with squared
    norm 2j, for j = 0 .. K.  ``growth_exponent`` g is a polynomial
    degree such that N_j <= A * j^g describes the coefficient growth;
    A is fitted from the stored coefficients with a 2x safety factor
    and feeds the tail bound.
    """

    dim: int
    coeffs: Tuple[int, ...]
    growth_exponent: float
    label: str = ""

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be a positive integer")
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("coefficient 0 must count exactly the zero vector")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")

    @property
    def truncation_index(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def _float_coeffs(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    @cached_property
    def _amplitude(self) -> float:
        # Fitted A with N_j <= A * j^g over the stored range, 2x safety.
        g = self.growth_exponent
        best = 0.0
        for j in range(1, len(self.coeffs)):
            ratio = float(self.coeffs[j]) / j ** g
            if ratio > best:
                best = ratio
        return 2.0 * best

    def evaluate(self, t: ArrayLike) -> ArrayLike:
        """Truncated series value  sum_j N_j t^(2j)  for t in [0, 1)."""
        arr = np.asarray(t, dtype=float)
        if np.any((arr < 0.0) | (arr >= 1.0)):
            raise ValueError("t must lie in [0, 1)")
        if np.ndim(t) == 0:
            u = float(arr) ** 2
            acc = 0.0
            for c in self._float_coeffs[::-1]:
                acc = acc * u + c
            return float(acc)
        u = arr * arr
        acc = np.zeros_like(u)
        for c in self._float_coeffs[::-1]:
            acc = acc * u + c
        return acc

    def tail_bound(self, t: ArrayLike) -> ArrayLike:
        """Upper bound on the omitted tail  sum_{j > K} N_j t^(2j).

        Uses N_j <= A j^g and (1 + i/(K+1))^g <= exp(g i / (K+1)); infinite
        where the resulting geometric comparison does not converge.
        """
        arr = np.asarray(t, dtype=float)
        if np.any((arr < 0.0) | (arr >= 1.0)):
            raise ValueError("t must lie in [0, 1)")
        u = arr * arr
        kp1 = len(self.coeffs)
        growth = math.exp(self.growth_exponent / kp1)
        denom = 1.0 - u * growth
        lead = self._amplitude * float(kp1) ** self.growth_exponent
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            tail = np.where(denom > 0.0, lead * u ** kp1 / np.maximum(denom, 1e-300), np.inf)
        return float(tail) if np.ndim(t) == 0 else tail

    def to_json(self) -> str:
        return json.dumps(
            {
                "label": self.label,
                "dim": self.dim,
                "K": self.truncation_index,
                "growth_exponent": self.growth_exponent,
                "coeffs": list(self.coeffs),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ThetaSeries":
        doc = json.loads(text)
        coeffs = tuple(int(c) for c in doc["coeffs"])
        if len(coeffs) != doc["K"] + 1:
            raise ValueError("coefficient list does not match K")
        return cls(
            dim=int(doc["dim"]),
            coeffs=coeffs,
            growth_exponent=float(doc["growth_exponent"]),
            label=str(doc.get("label", "")),
        )


@dataclass(frozen=True)
class MuResult:
    """Double-cap quantity mu = (max theta(t)(1-t)^d)^(-1/d) with maximizer.

    ``tail_bound`` certifies the series truncation error of theta at the
    reported maximizer.
    """

    lattice_label: str
    dim: int
    t_star: float
    mu: float
    max_value: float
    tail_bound: float


def dn_theta(n: int, t: ArrayLike) -> ArrayLike:
    """Theta series of D_n, the even-norm vectors of Z^n.

    Equals (theta3(t)^n + theta4(t)^n) / 2; the odd-norm contributions of
    theta3^n cancel against theta4^n.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    t3 = jacobi_theta(3, t)
    t4 = jacobi_theta(4, t)
    return 0.5 * (t3 ** n + t4 ** n)


def dn_series(n: int, K: int = DEFAULT_SERIES_LENGTH) -> ThetaSeries:
    """Exact D_n coefficients N_j = #{v in Z^n : |v|^2 = 2j} for j <= K.

    Built by convolving the one-dimensional square-norm counts n times
    and keeping the even exponents.
    """
    if n < 1 or K < 1:
        raise ValueError("n and K must be positive integers")
    limit = 2 * K
    counts = [1] + [0] * limit
    squares = []
    c = 1
    while c * c <= limit:
        squares.append(c * c)
        c += 1
    for _ in range(n):
        new = counts[:]  # the coordinate value 0 contributes identity
        for sq in squares:
            for e in range(limit - sq + 1):
                if counts[e]:
                    new[e + sq] += 2 * counts[e]
        counts = new
    coeffs = tuple(counts[2 * j] for j in range(K + 1))
    growth = max(0.5, n / 2.0 - 0.5)
    return ThetaSeries(dim=n, coeffs=coeffs, growth_exponent=growth, label=f"D{n}")


def _divisor_power_sums(K: int, power: int) -> List[int]:
    sums = [0] * (K + 1)
    for d in range(1, K + 1):
        step = d ** power
        for j in range(d, K + 1, d):
            sums[j] += step
    return sums


def e8_series(K: int = DEFAULT_SERIES_LENGTH) -> ThetaSeries:
    """E8 theta coefficients N_0 = 1, N_j = 240 * sigma_3(j)."""
    if K < 1:
        raise ValueError("K must be a positive integer")
    sigma3 = _divisor_power_sums(K, 3)
    coeffs = (1,) + tuple(240 * sigma3[j] for j in range(1, K + 1))
    return ThetaSeries(dim=8, coeffs=coeffs, growth_exponent=3.25, label="E8")


def _poly_mul(a: List[int], b: List[int], limit: int) -> List[int]:
    out = [0] * (limit + 1)
    for i, ai in enumerate(a):
        if ai:
            top = limit - i
            for j, bj in enumerate(b[: top + 1]):
                if bj:
                    out[i + j] += ai * bj
    return out


def ramanujan_tau(K: int) -> List[int]:
    """tau(1..K) from the exact integer expansion of q * prod (1 - q^n)^24.

    The Euler product is expanded by the pentagonal number theorem and
    raised to the 24th power by repeated squaring; index 0 of the result
    is unused.
    """
    if K < 1:
        raise ValueError("K must be a positive integer")
    limit = K - 1
    euler = [0] * (limit + 1)
    euler[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= limit:
        sign = -1 if k % 2 else 1
        euler[k * (3 * k - 1) // 2] += sign
        if k * (3 * k + 1) // 2 <= limit:
            euler[k * (3 * k + 1) // 2] += sign
        k += 1
    p2 = _poly_mul(euler, euler, limit)
    p4 = _poly_mul(p2, p2, limit)
    p8 = _poly_mul(p4, p4, limit)
    p16 = _poly_mul(p8, p8, limit)
    p24 = _poly_mul(p16, p8, limit)
    return [0] + [p24[j - 1] for j in range(1, K + 1)]


def leech_series(K: int = DEFAULT_SERIES_LENGTH) -> ThetaSeries:
    """Leech lattice coefficients N_j = (65520/691)(sigma_11(j) - tau(j)).

    The division must come out exact; a nonzero remainder means the tau
    expansion is wrong and raises immediately.
    """
    if K < 1:
        raise ValueError("K must be a positive integer")
    sigma11 = _divisor_power_sums(K, 11)
    tau = ramanujan_tau(K)
    coeffs = [1]
    for j in range(1, K + 1):
        numerator = 65520 * (sigma11[j] - tau[j])
        quotient, remainder = divmod(numerator, 691)
        if remainder:
            raise ArithmeticError(
                f"65520 * (sigma11({j}) - tau({j})) is not divisible by 691; "
                "tau expansion is inconsistent"
            )
        coeffs.append(quotient)
    return ThetaSeries(
        dim=24, coeffs=tuple(coeffs), growth_exponent=11.25, label="Leech"
    )


def mu_lattice(
    series: ThetaSeries, tol: float = 1e-9, grid_points: int = 4096
) -> MuResult:
    """Maximize theta(t)(1-t)^d over (0, 1) and report mu = (max)^(-1/d).

    Only t with a certified truncation tail below ``tol`` participate; if
    the maximizer lands on the edge of the certified region the result
    would be unreliable and a TailBoundError asks for a larger K.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    d = series.dim
    ts = np.linspace(0.0, 1.0, grid_points + 2)[1:-1]
    tails = series.tail_bound(ts)
    mask = tails < tol  # certified prefix: the tail bound increases with t
    certified = len(ts) if bool(mask.all()) else int(np.argmin(mask))
    if certified < 3:
        raise TailBoundError(
            f"tail bound below {tol} on too small a region; request larger K"
        )
    ts = ts[:certified]
    vals = series.evaluate(ts) * (1.0 - ts) ** d
    i = int(np.argmax(vals))
    if i == 0 or i >= certified - 1:
        raise TailBoundError(
            "maximizer sits at the edge of the certified region; request larger K"
        )
    t_star, max_value = golden_section_max(
        lambda t: series.evaluate(t) * (1.0 - t) ** d,
        float(ts[i - 1]),
        float(ts[i + 1]),
        xtol=1e-12,
    )
    return MuResult(
        lattice_label=series.label or f"dim{d}",
        dim=d,
        t_star=t_star,
        mu=max_value ** (-1.0 / d),
        max_value=max_value,
        tail_bound=float(series.tail_bound(t_star)),
    )


def _jacobi_tail(q: float) -> float:
    # Truncation error bound for the theta3/theta4 summation at nome q:
    # terms stop once 2 q^(n^2) < 1e-18 * sum, and the remainder is
    # dominated by the geometric series with ratio q^(2n+3) < q.
    if q == 0.0:
        return 0.0
    total, term, w, n = 1.0, 1.0, q, 0
    while True:
        term = term * w
        total = total + 2.0 * term
        if not 2.0 * term > 1e-18 * total:
            break
        w = w * q * q
        n += 1
    nxt = 2.0 * term * q ** (2 * n + 3)
    return nxt / (1.0 - q)


def mu_z(tol: float = 1e-10) -> MuResult:
    """Limit quantity (max theta3(t)(1-t))^(-1) of the D_n family.

    Computed directly from theta3 rather than as an actual limit; known
    to exceed sqrt(3)/2, so it does not improve the double-cap bracket.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    t_star, max_value = maximize_on_unit_interval(
        lambda t: jacobi_theta(3, t) * (1.0 - t), xtol=tol
    )
    return MuResult(
        lattice_label="Z",
        dim=1,
        t_star=t_star,
        mu=1.0 / max_value,
        max_value=max_value,
        tail_bound=_jacobi_tail(t_star) * (1.0 - t_star),
    )


def mu_dn(n: int, tol: float = 1e-10) -> MuResult:
    """Double-cap quantity of D_n from the closed form, as a convergence
    diagnostic toward mu_Z."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    t_star, max_value = maximize_on_unit_interval(
        lambda t: dn_theta(n, t) * (1.0 - t) ** n, xtol=tol
    )
    t3 = jacobi_theta(3, t_star)
    tail = n * t3 ** (n - 1) * _jacobi_tail(t_star)  # dominates both powers
    return MuResult(
        lattice_label=f"D{n}",
        dim=n,
        t_star=t_star,
        mu=max_value ** (-1.0 / n),
        max_value=max_value,
        tail_bound=tail * (1.0 - t_star) ** n,
    )


def double_cap_compare(mu: float) -> str:
    """Classify mu against the known double-cap upper bound sqrt(3)/2.

    Returns "improvement" only for a strict improvement.
    """
    if not 0.0 < mu < 1.0:
        raise ValueError("mu must lie in (0, 1)")
    return "improvement" if mu < SQRT3_OVER_2 else "no improvement"
