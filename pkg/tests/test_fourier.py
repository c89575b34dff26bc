"""Spectra, convolution counts, the moment chain, and the coefficient estimates."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb import (
    CyclicGroup,
    GSet,
    IntegerWindow,
    TorsionGroup,
    certified_large_coefficient,
    character_sum,
    convolution_counts,
    eta_largecoeff,
    eta_largecoeff2,
    moment_lower_bound_check,
    smallest_prime_in,
    spectrum,
)
from oracles import dft_coefficient, dirichlet_magnitude


class TestSpectrum:
    def test_full_group_has_flat_spectrum(self):
        g = CyclicGroup(12)
        rep = spectrum(GSet(g, range(12)))
        assert rep.max_magnitude == pytest.approx(0.0, abs=1e-9)
        assert rep.parseval_residual <= 1e-9

    def test_singleton_is_flat_at_one(self):
        g = CyclicGroup(17)
        rep = spectrum(GSet(g, [5]))
        assert rep.magnitudes == pytest.approx(np.ones(17), abs=1e-9)
        assert rep.max_magnitude == pytest.approx(1.0)
        assert rep.eta_achieved == pytest.approx(0.0, abs=1e-12)

    def test_interval_matches_dirichlet_kernel(self):
        N, L = 101, 7
        rep = spectrum(GSet(CyclicGroup(N), range(L)))
        for r in range(N):
            assert rep.magnitudes[r] == pytest.approx(
                dirichlet_magnitude(L, r, N), abs=1e-9
            )

    def test_direct_agrees_with_fft(self):
        g = CyclicGroup(97)
        B = GSet(g, [0, 3, 10, 44, 90])
        fast = spectrum(B, method="fft")
        slow = spectrum(B, method="direct")
        assert fast.magnitudes == pytest.approx(slow.magnitudes, abs=1e-9)
        assert fast.max_index == slow.max_index

    def test_max_index_matches_oracle(self):
        N = 53
        B = GSet(CyclicGroup(N), [0, 1, 2, 9])
        rep = spectrum(B)
        mags = [abs(dft_coefficient(B.elements, N, r)) for r in range(N)]
        best = max(range(1, N), key=lambda r: mags[r])
        assert rep.max_magnitude == pytest.approx(mags[best], abs=1e-9)
        assert mags[rep.max_index] == pytest.approx(mags[best], abs=1e-9)

    def test_torsion_spectrum(self):
        g = TorsionGroup(2, 3)
        B = GSet(g, [(0, 0, 0), (1, 0, 0)])
        rep = spectrum(B)
        assert rep.order == 8
        assert rep.parseval_residual <= 1e-9
        # characters orthogonal to the line through e1 see the full mass
        assert rep.max_magnitude == pytest.approx(2.0)
        direct = spectrum(B, method="direct")
        assert rep.magnitudes == pytest.approx(direct.magnitudes, abs=1e-9)

    def test_top_listing_sorted(self):
        B = GSet(CyclicGroup(31), [0, 1, 4, 9, 16])
        rep = spectrum(B, top=5)
        mags = [m for _, m in rep.top]
        assert len(mags) == 5
        assert mags == sorted(mags, reverse=True)
        assert mags[0] == pytest.approx(rep.max_magnitude)

    def test_window_rejected(self):
        A = GSet(IntegerWindow(-10, 10), [0, 1])
        with pytest.raises(ValueError):
            spectrum(A)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            spectrum(GSet(CyclicGroup(7), []))

    @given(st.sets(st.integers(0, 96), min_size=1, max_size=10))
    @settings(max_examples=60)
    def test_parseval_random(self, elems):
        rep = spectrum(GSet(CyclicGroup(97), elems))
        assert rep.parseval_residual <= 1e-9


class TestCharacterSum:
    def test_matches_oracle(self):
        N = 41
        B = GSet(CyclicGroup(N), [0, 2, 7, 30])
        for r in (0, 1, 5, 40):
            assert character_sum(B, r) == pytest.approx(
                dft_coefficient(B.elements, N, r), abs=1e-12
            )

    def test_principal_is_size(self):
        B = GSet(CyclicGroup(19), [1, 2, 3])
        assert character_sum(B, 0) == pytest.approx(3.0)

    def test_torsion_character(self):
        g = TorsionGroup(3, 2)
        B = GSet(g, [(0, 0), (1, 0), (2, 0)])
        # a character acting only on the second coordinate sums the full set
        assert character_sum(B, (0, 1)) == pytest.approx(3.0)
        # the line summed against a nontrivial character on itself cancels
        assert abs(character_sum(B, (1, 0))) == pytest.approx(0.0, abs=1e-12)


class TestConvolutionCounts:
    def test_pair_in_z101(self):
        B = GSet(CyclicGroup(101), [0, 1])
        conv = convolution_counts(B, 1)
        assert conv.fold == 2
        assert conv.support.elements == (0, 1, 2)
        assert [conv.count_at(x) for x in (0, 1, 2)] == [1, 2, 1]
        assert conv.total == 4

    def test_mass_identity_large_fold(self):
        # 12^18 exceeds 2^62, exercising the exact python-int path
        B = GSet(CyclicGroup(23), range(12))
        conv = convolution_counts(B, 17)
        assert conv.total == 12 ** 18
        assert conv.counts.dtype == object

    def test_support_is_iterated_sumset(self):
        from addcomb import iterated_sum

        B = GSet(CyclicGroup(37), [0, 1, 5])
        conv = convolution_counts(B, 3)
        assert conv.support == iterated_sum(B, 4)

    def test_torsion_counts(self):
        g = TorsionGroup(2, 2)
        B = GSet(g, [(0, 0), (1, 0), (0, 1)])
        conv = convolution_counts(B, 1)
        assert conv.total == 9
        assert conv.count_at((0, 0)) == 3  # 0+0, e1+e1, e2+e2
        assert conv.count_at((1, 1)) == 2  # e1+e2 both orders

    def test_bad_m(self):
        with pytest.raises(ValueError):
            convolution_counts(GSet(CyclicGroup(7), [0]), 0)


class TestMomentChain:
    def test_singleton_z7(self):
        rep = moment_lower_bound_check(GSet(CyclicGroup(7), [0]), 1)
        assert rep.support_size == 1
        assert rep.sum_of_squares == 1
        assert rep.cauchy_schwarz_holds
        # bound is (1 - 1/7) * 1; the max magnitude 1 satisfies 1 >= sqrt(6/7)
        assert rep.max_power_bound == pytest.approx(6 / 7)
        assert rep.max_bound_holds
        assert rep.ok

    def test_three_points_z101(self):
        rep = moment_lower_bound_check(GSet(CyclicGroup(101), [0, 1, 3]), 2)
        assert rep.cauchy_schwarz_holds
        assert rep.parseval_holds
        assert rep.max_bound_holds
        assert rep.ok

    def test_parseval_is_exact_statement(self):
        B = GSet(CyclicGroup(64), [0, 1, 2, 3])
        rep = moment_lower_bound_check(B, 3)
        assert rep.parseval_residual <= 1e-9

    @given(
        st.sets(st.integers(0, 58), min_size=1, max_size=8),
        st.integers(1, 3),
    )
    @settings(max_examples=60, deadline=None)
    def test_chain_never_fails(self, elems, m):
        rep = moment_lower_bound_check(GSet(CyclicGroup(59), elems), m)
        assert rep.ok


class TestEtaLargeCoeff:
    def test_k2_at_gate(self):
        params = eta_largecoeff(Fraction(1, 14**3), 2)
        assert params.m == 5  # floor(2 * (2/14^3)^(-1/2) / 14) = floor(5.29)
        assert params.eta == pytest.approx(
            18 * 14 ** (-3 / 2) * math.log(14**3) / 2
        )

    def test_k2_above_gate_rejected(self):
        with pytest.raises(ValueError):
            eta_largecoeff(Fraction(1, 14**2), 2)

    def test_k3_small_density(self):
        params = eta_largecoeff(1e-6, 3)
        assert params.m >= 3
        assert 0 < params.eta < 1

    def test_m_scales_with_sparsity(self):
        m_values = [eta_largecoeff(Fraction(1, 14**3 * 10**j), 2).m for j in range(4)]
        assert m_values == sorted(m_values)
        assert m_values[0] < m_values[-1]

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            eta_largecoeff(Fraction(1, 1000), 0)
        with pytest.raises(ValueError):
            eta_largecoeff(Fraction(0), 2)
        with pytest.raises(ValueError):
            eta_largecoeff(Fraction(3, 2), 2)


class TestEtaLargeCoeff2:
    def test_k1_at_gate(self):
        # equality with the gate is accepted
        eta = eta_largecoeff2(14**-2, 1.0)
        assert eta == pytest.approx(9 * 14**-1 * math.log(196))

    def test_k1_small_tau(self):
        eta = eta_largecoeff2(1e-6, 1.0)
        assert eta == pytest.approx(9 * 1e-3 * 6 * math.log(10))

    def test_above_gate_rejected(self):
        with pytest.raises(ValueError):
            eta_largecoeff2(0.01, 1.0)

    def test_cover_size_gate(self):
        with pytest.raises(ValueError):
            eta_largecoeff2(14**-8, 2.0, k_cover=8)
        eta_largecoeff2(14**-8, 2.0, k_cover=7)

    def test_eta_decreases_with_tau(self):
        etas = [eta_largecoeff2(10**-e, 1.0) for e in range(6, 12)]
        assert etas == sorted(etas, reverse=True)

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            eta_largecoeff2(0.0, 1.0)
        with pytest.raises(ValueError):
            eta_largecoeff2(1e-6, 0.5)


class TestCertifiedLargeCoefficient:
    def test_singleton_dense_enough(self):
        N = smallest_prime_in(196, 400)
        g = CyclicGroup(N)
        B = T = GSet(g, [0])
        cert = certified_large_coefficient(B, T)
        assert cert.k == 1
        assert cert.beta == Fraction(1, N)
        assert cert.magnitude == pytest.approx(1.0)
        assert cert.holds

    def test_interval_with_endpoints(self):
        L = 10
        N = smallest_prime_in(14**4 * L, 14**4 * L + 1000)
        g = CyclicGroup(N)
        B = GSet(g, range(L))
        T = GSet(g, [0, L - 1])
        cert = certified_large_coefficient(B, T)
        assert cert.k == 2
        assert cert.eta < 1
        assert cert.magnitude >= cert.threshold
        assert cert.holds

    def test_uncovered_rejected(self):
        g = CyclicGroup(101)
        with pytest.raises(ValueError):
            certified_large_coefficient(GSet(g, [0, 1, 50]), GSet(g, [0]))

    def test_dense_set_rejected(self):
        g = CyclicGroup(101)
        B = GSet(g, range(10))
        with pytest.raises(ValueError):
            certified_large_coefficient(B, GSet(g, [0, 9]))
