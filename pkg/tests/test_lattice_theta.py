import itertools
import json
import math

import pytest

from chromabound import (
    TailBoundError,
    ThetaSeries,
    dn_series,
    dn_theta,
    double_cap_compare,
    e8_series,
    leech_series,
    mu_dn,
    mu_lattice,
    mu_z,
    ramanujan_tau,
)

SQRT3_OVER_2 = math.sqrt(3.0) / 2.0


def enumerate_even_norm_counts(n, max_norm):
    """Oracle: count vectors of Z^n with even squared norm by brute force."""
    reach = int(math.isqrt(max_norm)) + 1
    counts = {}
    for v in itertools.product(range(-reach, reach + 1), repeat=n):
        norm = sum(c * c for c in v)
        if norm <= max_norm and norm % 2 == 0:
            counts[norm] = counts.get(norm, 0) + 1
    return counts


def divisors(j):
    return [d for d in range(1, j + 1) if j % d == 0]


class TestDnTheta:
    def test_at_zero(self):
        for n in (1, 2, 5):
            assert dn_theta(n, 0.0) == 1.0

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_against_vector_enumeration(self, n):
        max_norm = 120  # tail below 1e-30 for t <= 0.5
        counts = enumerate_even_norm_counts(n, max_norm)
        for t in (0.1, 0.3, 0.5):
            oracle = sum(c * t ** norm for norm, c in counts.items())
            assert dn_theta(n, t) == pytest.approx(oracle, abs=1e-10)

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            dn_theta(2, 1.0)
        with pytest.raises(ValueError):
            dn_theta(0, 0.5)


class TestDnSeries:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_coefficients_against_enumeration(self, n):
        series = dn_series(n, 20)
        counts = enumerate_even_norm_counts(n, 40)
        for j in range(21):
            assert series.coeffs[j] == counts.get(2 * j, 0)

    def test_d8_kissing_number(self):
        assert dn_series(8, 4).coeffs[1] == 112

    def test_evaluation_matches_closed_form(self):
        series = dn_series(3, 128)
        for t in (0.1, 0.3, 0.5):
            assert series.evaluate(t) == pytest.approx(dn_theta(3, t), rel=1e-12)


class TestE8Series:
    def test_first_coefficients(self):
        series = e8_series(8)
        oracle = [240 * sum(d ** 3 for d in divisors(j)) for j in (1, 2, 3)]
        assert oracle == [240, 2160, 6720]
        assert list(series.coeffs[1:4]) == oracle

    def test_metadata(self):
        series = e8_series(16)
        assert series.dim == 8
        assert series.truncation_index == 16
        assert series.coeffs[0] == 1


class TestLeechSeries:
    def test_tau_against_jacobi_identity(self):
        # Independent expansion: prod (1-q^n)^3 = sum (-1)^m (2m+1) q^(m(m+1)/2),
        # so the 24th power is the 8th power of that sparse series.
        K = 64
        limit = K - 1
        cube = [0] * (limit + 1)
        m = 0
        while m * (m + 1) // 2 <= limit:
            cube[m * (m + 1) // 2] += (-1) ** m * (2 * m + 1)
            m += 1

        def mul(a, b):
            out = [0] * (limit + 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b[: limit - i + 1]):
                        if bj:
                            out[i + j] += ai * bj
            return out

        p2 = mul(cube, cube)
        p4 = mul(p2, p2)
        p8 = mul(p4, p4)
        oracle = [0] + [p8[j - 1] for j in range(1, K + 1)]
        assert ramanujan_tau(K) == oracle

    def test_anchor_coefficients(self):
        series = leech_series(8)
        assert series.coeffs[1] == 0
        assert series.coeffs[2] == 196560
        sigma11_3 = sum(d ** 11 for d in divisors(3))
        tau3 = ramanujan_tau(3)[3]
        assert 65520 * (sigma11_3 - tau3) // 691 == 16773120
        assert series.coeffs[3] == 16773120

    def test_integrality_and_nonnegativity(self):
        series = leech_series(512)
        assert all(isinstance(c, int) and c >= 0 for c in series.coeffs)

    def test_metadata(self):
        assert leech_series(16).dim == 24


class TestMu:
    def test_mu_z(self):
        result = mu_z()
        assert result.mu == pytest.approx(0.883337, abs=1e-6)
        assert result.mu > 1.0 / math.sqrt(2.0)
        assert result.mu > SQRT3_OVER_2
        assert result.mu == pytest.approx(1.0 / result.max_value, rel=1e-12)

    def test_mu_e8(self):
        result = mu_lattice(e8_series(512))
        assert result.mu == pytest.approx(0.88406, abs=1e-5)
        assert result.mu == pytest.approx(result.max_value ** (-1.0 / 8.0), rel=1e-12)
        assert result.tail_bound < 1e-9

    def test_mu_leech(self):
        result = mu_lattice(leech_series(512))
        assert result.mu == pytest.approx(0.88407, abs=1e-5)
        assert 0.0 < result.mu < 1.0

    def test_all_three_worse_than_known_bracket(self):
        values = [mu_z().mu, mu_lattice(e8_series(256)).mu, mu_lattice(leech_series(256)).mu]
        assert all(SQRT3_OVER_2 < v < 1.0 for v in values)

    def test_dn_convergence_to_mu_z(self):
        # The exact gap is mu_Z * (2^(1/n) - 1) up to a factor 1 + O(rho^n):
        # the odd-part theta contribution decays geometrically.
        base = mu_z().mu
        gaps = []
        for n in (8, 16, 32, 64):
            gap = mu_dn(n).mu - base
            model = base * (2.0 ** (1.0 / n) - 1.0)
            assert gap == pytest.approx(model, rel=1e-2)
            gaps.append(gap)
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_dn_series_route_matches_closed_form(self):
        for n in (8, 16):
            via_series = mu_lattice(dn_series(n, 128)).mu
            assert via_series == pytest.approx(mu_dn(n).mu, abs=1e-9)

    def test_insufficient_truncation_raises(self):
        with pytest.raises(TailBoundError):
            mu_lattice(e8_series(2))


class TestDoubleCapCompare:
    def test_mu_z_is_no_improvement(self):
        assert double_cap_compare(mu_z().mu) == "no improvement"

    def test_hypothetical_improvement(self):
        assert double_cap_compare(0.85) == "improvement"

    def test_boundary_is_not_strict_improvement(self):
        assert double_cap_compare(SQRT3_OVER_2) == "no improvement"

    def test_domain(self):
        with pytest.raises(ValueError):
            double_cap_compare(1.5)


class TestThetaSeriesType:
    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            ThetaSeries(dim=2, coeffs=(2, 4), growth_exponent=1.0)

    def test_rejects_negative_coefficients(self):
        with pytest.raises(ValueError):
            ThetaSeries(dim=2, coeffs=(1, -4), growth_exponent=1.0)

    def test_json_round_trip(self):
        series = leech_series(32)
        text = series.to_json()
        back = ThetaSeries.from_json(text)
        assert back == series
        doc = json.loads(text)
        assert doc["dim"] == 24 and doc["K"] == 32

    def test_tail_bound_dominates_true_tail(self):
        full = e8_series(64)
        short = ThetaSeries(
            dim=8, coeffs=full.coeffs[:33], growth_exponent=3.25, label="E8"
        )
        for t in (0.2, 0.4, 0.6):
            true_tail = sum(
                c * t ** (2 * j) for j, c in enumerate(full.coeffs) if j > 32
            )
            assert short.tail_bound(t) >= true_tail
