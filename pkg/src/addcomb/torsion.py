"""Coset covers in bounded-exponent groups.

In (Z/rZ)^n a set with small doubling sits inside a coset of a subgroup not
much larger than the set itself.  The subgroup is gen(A-A); the covering
module supplies a translate set T whose differences generate everything
gen(A-A) needs beyond A-A, and |gen(T-T)| <= r^(|T|-1) turns the covering
size bound into a subgroup size bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .covering import CoveringCertificate, covering_certificate
from .groups import (
    Element,
    GSet,
    TorsionGroup,
    _torsion_index_add,
    difference_set,
    is_subset,
    negate,
    sumset,
    translate,
)

__all__ = ["SubgroupCosetCertificate", "subgroup_generated", "torsion_cover"]


def _require_torsion(A: GSet) -> TorsionGroup:
    if A.group.kind != "torsion":
        raise ValueError("this operation needs a bounded-exponent product group")
    return A.group  # type: ignore[return-value]


def subgroup_generated(X: GSet) -> GSet:
    """Smallest subgroup containing X, by breadth-first closure under the generators."""
    g = _require_torsion(X)
    r, n = g.exponent, g.rank
    member = np.zeros(g.order, dtype=bool)
    member[0] = True
    frontier = np.array([0], dtype=np.int64)
    gens = X.packed()
    while frontier.size and gens.size:
        grown = []
        for gi in gens:
            cand = np.unique(_torsion_index_add(frontier, gi, r, n))
            new = cand[~member[cand]]
            if new.size:
                member[new] = True
                grown.append(new)
        frontier = np.unique(np.concatenate(grown)) if grown else np.array([], dtype=np.int64)
    return GSet(g, tuple(g.element_at(int(i)) for i in np.flatnonzero(member)))


@dataclass(frozen=True)
class SubgroupCosetCertificate:
    """A <= coset_rep + subgroup, with the subgroup size certified against both bounds.

    bound_a uses the doubling ratio in factor and exponent; bound_b the
    difference ratio.  The *_raw fields are the exact uncapped values (they
    can exceed |G|); bound_a / bound_b are capped at the group order.  The
    *_holds flags compare subgroup_size against the raw bounds.
    """

    base: GSet
    generators: Tuple[Element, ...]
    subgroup: GSet
    coset_rep: Element
    subgroup_size: int
    doubling: Fraction
    diff_ratio: Fraction
    bound_a_raw: Fraction
    bound_b_raw: Fraction
    bound_a: int
    bound_b: int
    contains_a: bool
    gen_inclusion_holds: bool
    size_factor_holds: bool   # |gen(A-A)| <= |A-A| * r^(|T|-1)
    bound_a_holds: bool
    bound_b_holds: bool
    witness_used: bool
    route: str                # covering ran on (A, A, A) or (A, -A, -A)
    covering: CoveringCertificate


def torsion_cover(A: GSet, use_witness: bool = True, witness_budget: int = 18) -> SubgroupCosetCertificate:
    """Certified subgroup-coset cover of A in (Z/rZ)^n.

    Runs the covering construction with summands A and, when A is not
    symmetric, also -A, keeping the smaller translate set; 2(A-A) is inside
    (A-A)+(T-T) either way, so gen(A-A) <= (A-A)+gen(T-T).  Every inclusion
    and size comparison is re-verified on the actual sets.
    """
    g = _require_torsion(A)
    if not A.elements:
        raise ValueError("cover of the empty set is undefined")
    r = g.exponent
    n = len(A)
    D = difference_set(A, A)
    k_double = Fraction(len(sumset(A, A)), n)
    k_diff = Fraction(len(D), n)
    neg_a = negate(A)
    routes = [("sum", A)]
    if neg_a != A:
        routes.append(("difference", neg_a))
    route, cert = None, None
    for name, B in routes:
        c = covering_certificate(A, B, B, use_witness=use_witness, witness_budget=witness_budget)
        if cert is None or len(c.translates) < len(cert.translates):
            route, cert = name, c
    T = cert.translates
    t0 = T.elements[0]
    gens = tuple(g.add(t, g.neg(t0)) for t in T.elements[1:])
    zero = (0,) * g.rank
    h_t = subgroup_generated(GSet(g, gens)) if gens else GSet(g, (zero,))
    subgroup = subgroup_generated(D)
    size = len(subgroup)
    e_a = math.floor(2 * k_double * k_double - 2)
    e_b = math.floor(2 * k_diff * k_diff - 2)
    raw_a = k_double * k_double * Fraction(r) ** e_a * n
    raw_b = k_diff * Fraction(r) ** e_b * n
    return SubgroupCosetCertificate(
        base=A,
        generators=gens,
        subgroup=subgroup,
        coset_rep=A.elements[0],
        subgroup_size=size,
        doubling=k_double,
        diff_ratio=k_diff,
        bound_a_raw=raw_a,
        bound_b_raw=raw_b,
        bound_a=min(math.floor(raw_a), g.order),
        bound_b=min(math.floor(raw_b), g.order),
        contains_a=is_subset(A, translate(subgroup, A.elements[0])),
        gen_inclusion_holds=is_subset(subgroup, sumset(D, h_t)),
        size_factor_holds=size <= len(D) * r ** (len(T) - 1),
        bound_a_holds=size <= raw_a,
        bound_b_holds=size <= raw_b,
        witness_used=cert.witness_is_optimal,
        route=route,
        covering=cert,
    )
