"""Subgroup generation and coset covers in bounded-exponent groups."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb import (
    GSet,
    TorsionGroup,
    difference_set,
    is_subset,
    subgroup_generated,
    sumset,
    torsion_cover,
    translate,
)
from oracles import naive_subgroup


def torsion_sets(r, n, max_size):
    g = TorsionGroup(r, n)
    all_elems = [g.element_at(i) for i in range(g.order)]
    return st.builds(
        lambda xs: GSet(g, xs),
        st.sets(st.sampled_from(all_elems), min_size=1, max_size=max_size),
    )


class TestSubgroupGenerated:
    def test_zero_only(self):
        g = TorsionGroup(2, 3)
        H = subgroup_generated(GSet(g, [(0, 0, 0)]))
        assert H.elements == ((0, 0, 0),)

    def test_two_basis_vectors(self):
        g = TorsionGroup(2, 3)
        H = subgroup_generated(GSet(g, [(1, 0, 0), (0, 1, 0)]))
        assert len(H) == 4
        assert set(H.elements) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)}

    def test_diagonal_in_z4_squared(self):
        g = TorsionGroup(4, 2)
        H = subgroup_generated(GSet(g, [(1, 1)]))
        assert set(H.elements) == {(0, 0), (1, 1), (2, 2), (3, 3)}

    def test_matches_naive_closure(self):
        for r, n in [(2, 4), (3, 3), (4, 2), (6, 2)]:
            g = TorsionGroup(r, n)
            gens = [g.element_at(i) for i in (1, g.order // 2, g.order - 1)]
            H = subgroup_generated(GSet(g, gens))
            assert list(H.elements) == naive_subgroup(gens, r, n)

    def test_idempotent(self):
        g = TorsionGroup(3, 2)
        X = GSet(g, [(1, 2), (2, 2)])
        H = subgroup_generated(X)
        assert subgroup_generated(H) == H

    def test_window_rejected(self):
        from addcomb import CyclicGroup

        with pytest.raises(ValueError):
            subgroup_generated(GSet(CyclicGroup(8), [2]))

    @given(torsion_sets(2, 5, 4))
    @settings(max_examples=60)
    def test_closure_properties(self, X):
        H = subgroup_generated(X)
        assert (0,) * 5 in H.elements
        assert is_subset(X, H)
        assert sumset(H, H) == H
        # Lagrange: |H| divides 2^5
        assert (1 << 5) % len(H) == 0


class TestTorsionCover:
    def test_basis_plus_origin(self):
        g = TorsionGroup(2, 3)
        A = GSet(g, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        cert = torsion_cover(A)
        assert cert.doubling == Fraction(7, 4)
        assert cert.subgroup_size == 8
        assert cert.bound_a_raw == Fraction(196)
        assert cert.bound_a == 8
        assert cert.contains_a
        assert cert.gen_inclusion_holds
        assert cert.size_factor_holds
        assert cert.bound_a_holds and cert.bound_b_holds

    def test_single_pair(self):
        g = TorsionGroup(2, 4)
        A = GSet(g, [(0, 0, 0, 0), (1, 0, 0, 0)])
        cert = torsion_cover(A)
        assert cert.doubling == 1
        assert cert.subgroup_size == 2
        assert cert.contains_a

    def test_coset(self):
        g = TorsionGroup(2, 3)
        H = subgroup_generated(GSet(g, [(1, 0, 0), (0, 1, 0)]))
        A = translate(H, (0, 0, 1))
        cert = torsion_cover(A)
        assert cert.doubling == 1
        assert cert.subgroup_size == len(H)
        assert cert.contains_a
        # the certified coset really is a translate of the subgroup
        shifted = translate(cert.subgroup, cert.coset_rep)
        assert is_subset(A, shifted)

    def test_difference_generators_certified(self):
        g = TorsionGroup(3, 2)
        A = GSet(g, [(0, 0), (1, 0), (0, 1), (2, 2)])
        cert = torsion_cover(A)
        D = difference_set(A, A)
        H = subgroup_generated(D)
        # gen(A-A) is inside (A-A) + gen(T-T); certificate stores gen(A-A)
        assert cert.subgroup == H
        assert cert.gen_inclusion_holds
        assert cert.contains_a

    def test_route_uses_smaller_t(self):
        g = TorsionGroup(4, 2)
        A = GSet(g, [(0, 0), (1, 0), (3, 1)])
        cert = torsion_cover(A)
        assert cert.route in ("sum", "negated")
        assert len(cert.covering.translates) >= 1

    def test_witness_flag_propagates(self):
        g = TorsionGroup(2, 3)
        A = GSet(g, [(0, 0, 0), (1, 1, 0)])
        cert = torsion_cover(A, use_witness=True)
        assert cert.witness_used == cert.covering.witness_is_optimal

    def test_empty_rejected(self):
        g = TorsionGroup(2, 2)
        with pytest.raises(ValueError):
            torsion_cover(GSet(g, []))

    @given(torsion_sets(2, 6, 6))
    @settings(max_examples=50, deadline=None)
    def test_certificates_always_verify(self, A):
        cert = torsion_cover(A)
        assert cert.contains_a
        assert cert.gen_inclusion_holds
        assert cert.size_factor_holds
        assert cert.bound_b_holds
        assert cert.subgroup_size <= cert.bound_b_raw
        # a subgroup in (Z/2)^6 has order a power of two
        assert cert.subgroup_size & (cert.subgroup_size - 1) == 0

    @given(torsion_sets(3, 3, 4))
    @settings(max_examples=40, deadline=None)
    def test_size_factor_exponent(self, A):
        cert = torsion_cover(A)
        k = len(cert.covering.translates)
        D = difference_set(A, A)
        assert cert.subgroup_size <= len(D) * 3 ** (k - 1)
        assert cert.size_factor_holds
