"""Translate covers, the subset witness search, and the growth counts."""

import pytest
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb import (
    BudgetError,
    CyclicGroup,
    GSet,
    IntegerWindow,
    covering_certificate,
    difference_set,
    greedy_translates,
    growth_bound_check,
    growth_table,
    is_k_covering,
    is_subset,
    j_bound_report,
    j_count,
    j_count_table,
    pluennecke_witness,
    sumset,
    verify_incm,
)
from oracles import brute_j_count

W = IntegerWindow(-2000, 2000)


def greedy_is_maximal(core, candidates, T):
    """Every leftover candidate translate adds fewer than |core|/2 new points."""
    union = set()
    for t in T.elements:
        union |= {core.group.add(a, t) for a in core.elements}
    for u in candidates.elements:
        gain = len({core.group.add(a, u) for a in core.elements} - union)
        if 2 * gain >= len(core):
            return False
    return True


class TestGreedy:
    def test_single_translate(self):
        g = CyclicGroup(11)
        T = greedy_translates(GSet(g, [0]), GSet(g, [0]))
        assert T.elements == (0,)

    def test_interval_over_sumset_z101(self):
        g = CyclicGroup(101)
        core = GSet(g, range(5))
        cand = GSet(g, range(9))
        T = greedy_translates(core, cand)
        assert T.elements == (0, 5, 8)
        assert greedy_is_maximal(core, cand, T)

    def test_interval_over_sumset_z1009(self):
        g = CyclicGroup(1009)
        core = GSet(g, range(10))
        cand = GSet(g, range(19))
        T = greedy_translates(core, cand)
        assert T.elements == (0, 10, 18)
        assert greedy_is_maximal(core, cand, T)

    def test_empty_core_rejected(self):
        g = CyclicGroup(7)
        with pytest.raises(ValueError):
            greedy_translates(GSet(g, []), GSet(g, [0]))

    @given(
        st.sets(st.integers(0, 36), min_size=1, max_size=5),
        st.sets(st.integers(0, 36), min_size=1, max_size=8),
    )
    @settings(max_examples=80)
    def test_union_growth_and_maximality(self, core_elems, cand_elems):
        g = CyclicGroup(37)
        core = GSet(g, core_elems)
        cand = GSet(g, cand_elems)
        T = greedy_translates(core, cand)
        union = set()
        for t in T.elements:
            union |= {(a + t) % 37 for a in core.elements}
        # the first translate contributes |core| points and each later
        # one at least |core|/2, so 2|union| >= (|T|+1)|core|
        assert 2 * len(union) >= (1 + len(T)) * len(core)
        assert greedy_is_maximal(core, cand, T)


class TestWitness:
    def test_trivial_singleton(self):
        g = CyclicGroup(7)
        A = GSet(g, [0])
        w = pluennecke_witness(A, A, A)
        assert w.subset.elements == (0,)
        assert w.ratio == 1

    def test_window_013(self):
        """Exhaustive over the 7 nonempty subsets of a K=2 set."""
        A = GSet(W, [0, 1, 3])
        w = pluennecke_witness(A, A, A)
        assert w.ratio <= 4
        best = min(
            Fraction(
                len({a + b + c for a in sub for b in A.elements for c in A.elements}),
                len(sub),
            )
            for size in (1, 2, 3)
            for sub in __import__("itertools").combinations(A.elements, size)
        )
        assert w.ratio == best

    def test_budget(self):
        g = CyclicGroup(101)
        A = GSet(g, range(20))
        with pytest.raises(BudgetError):
            pluennecke_witness(A, A, A, budget=18)

    @given(st.sets(st.integers(0, 100), min_size=1, max_size=6))
    @settings(max_examples=50)
    def test_ratio_never_exceeds_k1k2(self, elems):
        g = CyclicGroup(101)
        A = GSet(g, elems)
        B = GSet(g, [0, 1])
        k = Fraction(len(sumset(A, B)), len(A))
        assert pluennecke_witness(A, B, B).ratio <= k * k


class TestCertificate:
    def test_window_013_bound(self):
        A = GSet(W, [0, 1, 3])
        cert = covering_certificate(A, A, A)
        assert cert.witness_is_optimal
        assert cert.size_bound == 7  # 2*K1*K2 - 1 with K1 = K2 = 2
        assert len(cert.translates) <= 7
        assert cert.inclusion_verified
        assert is_subset(cert.translates, sumset(A, A))

    def test_singleton(self):
        g = CyclicGroup(5)
        A = GSet(g, [0])
        cert = covering_certificate(A, A, A)
        assert cert.translates.elements == (0,)
        assert cert.inclusion_verified

    def test_interval_z1009(self):
        g = CyclicGroup(1009)
        A = GSet(g, range(10))
        cert = covering_certificate(A, A, A)
        assert cert.inclusion_verified
        lhs = sumset(difference_set(A, A), difference_set(A, A))
        rhs = sumset(
            difference_set(A, A), difference_set(cert.translates, cert.translates)
        )
        assert is_subset(lhs, rhs)

    def test_fallback_bound(self):
        """Above the witness budget the counting bound 2|A+B1+B2|/|A| - 1 applies."""
        g = CyclicGroup(1009)
        A = GSet(g, range(10))
        cert = covering_certificate(A, A, A, witness_budget=4)
        assert not cert.witness_is_optimal
        assert cert.witness == A
        # |A+A+A| = 28, ratio 2.8, bound floor(4.6) = 4
        assert cert.size_bound == 4
        assert len(cert.translates) <= 4
        assert cert.inclusion_verified

    def test_fallback_bound_never_below_one(self):
        g = CyclicGroup(7)
        A = GSet(g, [0])
        cert = covering_certificate(A, A, A, use_witness=False)
        assert cert.size_bound >= 1
        assert len(cert.translates) == 1

    def test_check_m_recorded(self):
        A = GSet(W, [0, 1, 3])
        cert = covering_certificate(A, A, A, check_m=3)
        assert cert.m_checked == 3

    @given(st.sets(st.integers(0, 60), min_size=1, max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_random_certificates_verify(self, elems):
        g = CyclicGroup(61)
        A = GSet(g, elems)
        cert = covering_certificate(A, A, A)
        assert cert.inclusion_verified
        assert len(cert.translates) <= cert.size_bound


class TestIncm:
    def test_trivial(self):
        g = CyclicGroup(7)
        A = GSet(g, [0])
        assert verify_incm(A, GSet(g, [0]), 5) == 5

    def test_window_013(self):
        A = GSet(W, [0, 1, 3])
        cert = covering_certificate(A, A, A)
        assert verify_incm(A, cert.translates, 3) == 3

    def test_z101(self):
        g = CyclicGroup(101)
        A = GSet(g, [0, 1, 4])
        cert = covering_certificate(A, A, A)
        assert verify_incm(A, cert.translates, 4) == 4

    def test_shortfall_reported(self):
        # T = {0} covers nothing extra, so (m+1)(A-A) outgrows (A-A)+m(T-T)
        g = CyclicGroup(101)
        A = GSet(g, [0, 1, 5])
        assert verify_incm(A, GSet(g, [0]), 3) == 0


class TestKCovering:
    def test_singleton(self):
        g = CyclicGroup(7)
        assert is_k_covering(GSet(g, [0]), GSet(g, [0]))

    def test_difference_set_is_covered(self):
        A = GSet(W, [0, 1, 3])
        cert = covering_certificate(A, A, A)
        assert is_k_covering(difference_set(A, A), cert.translates)

    def test_empty_t_fails(self):
        g = CyclicGroup(7)
        assert not is_k_covering(GSet(g, [0, 1]), GSet(g, []))

    def test_self_cover(self):
        # any B containing 0 is |B|-covered by T = B
        g = CyclicGroup(53)
        B = GSet(g, [0, 1, 17, 18])
        assert is_k_covering(B, B)


class TestJCount:
    def test_zero_m(self):
        for k in range(1, 8):
            assert j_count(k, 0) == 1

    def test_k1_forced(self):
        for m in range(9):
            assert j_count(1, m) == 1

    def test_known_small(self):
        assert j_count(2, 2) == 5
        assert j_count(2, 3) == 7

    def test_table_prefix_consistent(self):
        table = j_count_table(3, 8)
        assert len(table) == 9
        for m in range(9):
            assert table[m] == j_count(3, m)

    def test_matches_brute_force(self):
        for k in range(1, 5):
            for m in range(6):
                assert j_count(k, m) == brute_j_count(k, m)

    def test_monotone_in_m(self):
        table = j_count_table(4, 12)
        assert all(a <= b for a, b in zip(table, table[1:]))

    def test_bad_args(self):
        with pytest.raises(ValueError):
            j_count(0, 3)
        with pytest.raises(ValueError):
            j_count(2, -1)


class TestJBound:
    def test_k1(self):
        rep = j_bound_report(1, 1)
        assert rep.count == 1 and rep.bound == 14 and rep.holds

    def test_k2_m2(self):
        rep = j_bound_report(2, 2)
        assert rep.count == 5
        assert rep.bound == 196
        assert rep.holds

    def test_k3_m8(self):
        rep = j_bound_report(3, 8)
        assert rep.count == brute_j_count(3, 8)
        assert rep.holds

    def test_requires_m_at_least_k(self):
        with pytest.raises(ValueError):
            j_bound_report(3, 2)

    def test_bound_is_exact_rational(self):
        assert j_bound_report(3, 8).bound == Fraction(112, 3) ** 3


class TestGrowth:
    def test_trivial(self):
        g = CyclicGroup(7)
        B = T = GSet(g, [0])
        rep = growth_bound_check(B, T, 3)
        assert rep.grown_size == 1 and rep.j_value == 1 and rep.j_bound_holds

    def test_difference_set_both_bounds(self):
        A = GSet(W, [0, 1, 3])
        cert = covering_certificate(A, A, A)
        B = difference_set(A, A)
        k = len(cert.translates)
        rep = growth_bound_check(B, cert.translates, k)
        assert rep.j_bound_holds
        assert rep.ratio_bound_holds

    def test_pair(self):
        g = CyclicGroup(101)
        B = GSet(g, [0, 1])
        rep = growth_bound_check(B, B, 2)
        assert rep.grown_size == 4
        assert rep.j_value == 5
        assert rep.j_bound_holds and rep.ratio_bound_holds

    def test_ratio_bound_needs_m_ge_k(self):
        g = CyclicGroup(101)
        B = GSet(g, [0, 1])
        rep = growth_bound_check(B, B, 1)
        assert rep.ratio_bound is None and rep.ratio_bound_holds is None

    def test_not_covering_rejected(self):
        g = CyclicGroup(101)
        with pytest.raises(ValueError):
            growth_bound_check(GSet(g, [0, 1]), GSet(g, []), 2)

    def test_table_matches_single_checks(self):
        g = CyclicGroup(101)
        B = GSet(g, [0, 1, 2])
        rows = growth_table(B, B, 4)
        assert [r.m for r in rows] == [1, 2, 3, 4]
        for row in rows:
            single = growth_bound_check(B, B, row.m)
            assert (row.grown_size, row.j_value) == (single.grown_size, single.j_value)
            assert row.j_bound_holds and single.j_bound_holds
