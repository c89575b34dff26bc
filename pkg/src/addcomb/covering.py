"""Translate covers of sumsets and the growth bounds they certify.

The central object is a certificate (A, B1, B2, A', T) where T is a greedy
maximal set of translates: each selected t added at least |A'|/2 new points
to the union of A'+t_i, and at termination no candidate can.  Maximality
alone forces B1-B1+B2-B2 to lie inside A-A+T-T, which the certificate
re-verifies by exhaustive inclusion.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from .groups import (
    BudgetError,
    GSet,
    difference_set,
    is_subset,
    iterated_sum,
    negate,
    sumset,
)

__all__ = [
    "PluenneckeWitness",
    "CoveringCertificate",
    "GrowthBoundReport",
    "greedy_translates",
    "pluennecke_witness",
    "covering_certificate",
    "verify_incm",
    "is_k_covering",
    "j_count",
    "j_count_table",
    "j_bound_report",
    "JBoundReport",
    "growth_bound_check",
    "growth_table",
]


def greedy_translates(core: GSet, candidates: GSet) -> GSet:
    """Greedy maximal T <= candidates whose translates of core each add >= |core|/2 new points.

    Selection is deterministic: largest gain first, ties broken by canonical
    element order.  The comparison 2*gain >= |core| is exact integer
    arithmetic.
    """
    if not core.elements:
        raise ValueError("core set must be nonempty")
    n = len(core)
    add = core.group.add
    trans = {u: frozenset(add(a, u) for a in core.elements) for u in candidates.elements}
    covered: set = set()
    chosen = []
    while True:
        best_u = None
        best_gain = -1
        for u in candidates.elements:
            gain = len(trans[u] - covered)
            if 2 * gain >= n and gain > best_gain:
                best_gain = gain
                best_u = u
        if best_u is None:
            break
        chosen.append(best_u)
        covered |= trans[best_u]
    return GSet(candidates.group, chosen)


@dataclass(frozen=True)
class PluenneckeWitness:
    """A nonempty A' <= A minimizing |A' + B1 + B2| / |A'|."""

    subset: GSet
    ratio: Fraction
    subsets_searched: int


def pluennecke_witness(A: GSet, B1: GSet, B2: GSet, budget: int = 18) -> PluenneckeWitness:
    """Exhaustive search for the subset of A with least sumset expansion.

    Enumerates nonempty subsets by decreasing size, lexicographically within
    a size, pruning a whole size class once |B1+B2|/size can no longer beat
    the incumbent (any union of translates has at least |B1+B2| points).
    """
    n = len(A)
    if n == 0:
        raise ValueError("witness search needs a nonempty base set")
    if n > budget:
        raise BudgetError(f"witness search over {n} elements exceeds budget {budget}")
    sigma = sumset(B1, B2)
    universe = sumset(A, sigma)
    bit_of = {x: i for i, x in enumerate(universe.elements)}
    g = A.group
    masks = {}
    for a in A.elements:
        m = 0
        for s in sigma.elements:
            v = a + s if g.kind == "window" else g.add(a, s)
            m |= 1 << bit_of[v]
        masks[a] = m

    best_ratio: Optional[Fraction] = None
    best_subset: Tuple = ()
    searched = 0
    floor_size = len(sigma)
    for size in range(n, 0, -1):
        if best_ratio is not None and Fraction(floor_size, size) >= best_ratio:
            break
        for combo in itertools.combinations(A.elements, size):
            searched += 1
            m = 0
            for a in combo:
                m |= masks[a]
            ratio = Fraction(m.bit_count(), size)
            if best_ratio is None or ratio < best_ratio:
                best_ratio = ratio
                best_subset = combo
    return PluenneckeWitness(GSet(g, best_subset), best_ratio, searched)


@dataclass(frozen=True)
class CoveringCertificate:
    base: GSet
    summand1: GSet
    summand2: GSet
    witness: GSet
    translates: GSet
    ratio1: Fraction          # |A+B1| / |A|
    ratio2: Fraction          # |A+B2| / |A|
    witness_ratio: Fraction   # |A'+B1+B2| / |A'|
    witness_is_optimal: bool  # True when the exhaustive subset search ran
    size_bound: int
    inclusion_verified: bool
    m_checked: int = 0


def covering_certificate(
    A: GSet,
    B1: GSet,
    B2: GSet,
    use_witness: bool = True,
    witness_budget: int = 18,
    check_m: int = 0,
) -> CoveringCertificate:
    """Build and verify a translate-cover certificate for (A, B1, B2).

    With the witness path, |T| <= 2*K1*K2 - 1 where Ki = |A+Bi|/|A|; without
    it the weaker counting bound 2*|A+B1+B2|/|A| - 1 applies.  The inclusion
    B1-B1+B2-B2 <= A-A+T-T is checked exhaustively either way.
    """
    if not A.elements:
        raise ValueError("base set must be nonempty")
    n = len(A)
    k1 = Fraction(len(sumset(A, B1)), n)
    k2 = Fraction(len(sumset(A, B2)), n)
    sigma = sumset(B1, B2)
    if use_witness and n <= witness_budget:
        found = pluennecke_witness(A, B1, B2, budget=witness_budget)
        core, ratio, optimal = found.subset, found.ratio, True
        if ratio > k1 * k2:
            raise RuntimeError(
                f"witness ratio {ratio} exceeds K1*K2 = {k1 * k2}; this should be impossible"
            )
        size_bound = math.floor(2 * k1 * k2 - 1)
    else:
        core = A
        ratio = Fraction(len(sumset(A, sigma)), n)
        optimal = False
        # first translate is wholly new, each later one adds >= |A|/2,
        # so |A|(k+1)/2 <= |A + B1 + B2| and k <= 2*ratio - 1
        size_bound = math.floor(2 * ratio - 1)
    T = greedy_translates(core, sigma)
    if len(T) > size_bound:
        raise RuntimeError(
            f"greedy produced {len(T)} translates, above the certified bound {size_bound}"
        )
    lhs = sumset(difference_set(B1, B1), difference_set(B2, B2))
    rhs = sumset(difference_set(A, A), difference_set(T, T))
    cert = CoveringCertificate(
        base=A,
        summand1=B1,
        summand2=B2,
        witness=core,
        translates=T,
        ratio1=k1,
        ratio2=k2,
        witness_ratio=ratio,
        witness_is_optimal=optimal,
        size_bound=size_bound,
        inclusion_verified=is_subset(lhs, rhs),
    )
    if check_m > 0:
        cert = replace(cert, m_checked=verify_incm(A, T, check_m))
    return cert


def verify_incm(A: GSet, T: GSet, m_max: int) -> int:
    """Largest m <= m_max with (m+1)(A-A) contained in (A-A) + m(T-T).

    Returns 0 as soon as the m = 1 inclusion fails.
    """
    D = difference_set(A, A)
    E = difference_set(T, T)
    lhs = D
    rhs = D
    for m in range(1, m_max + 1):
        lhs = sumset(lhs, D)
        rhs = sumset(rhs, E)
        if not is_subset(lhs, rhs):
            return m - 1
    return m_max


def is_k_covering(B: GSet, T: GSet) -> bool:
    """Whether B + B <= B + (T - T)."""
    return is_subset(sumset(B, B), sumset(B, difference_set(T, T)))


@functools.lru_cache(maxsize=1024)
def j_count_table(k: int, m_max: int) -> Tuple[int, ...]:
    """(J(k,0), J(k,1), ..., J(k,m_max)) from a single dynamic-programming pass.

    f[p][q] counts i-tuples with positive-part sum p and negative-part sum q;
    one pass at m_max yields every smaller m as a diagonal prefix sum.
    Arbitrary-precision throughout.
    """
    if k < 1 or m_max < 0:
        raise ValueError(f"need k >= 1 and m >= 0, got k={k}, m={m_max}")
    m = m_max
    f = [[0] * (m + 1) for _ in range(m + 1)]
    f[0][0] = 1
    for _ in range(k):
        # prefix sums along p (for appending x > 0) and along q (x < 0)
        pref_p = [[0] * (m + 1) for _ in range(m + 1)]
        pref_q = [[0] * (m + 1) for _ in range(m + 1)]
        for p in range(m + 1):
            for q in range(m + 1):
                pref_p[p][q] = f[p][q] + (pref_p[p - 1][q] if p else 0)
                pref_q[p][q] = f[p][q] + (pref_q[p][q - 1] if q else 0)
        nxt = [[0] * (m + 1) for _ in range(m + 1)]
        for p in range(m + 1):
            for q in range(m + 1):
                total = f[p][q]
                if p:
                    total += pref_p[p - 1][q]
                if q:
                    total += pref_q[p][q - 1]
                nxt[p][q] = total
        f = nxt
    out = []
    running = 0
    for p in range(m + 1):
        running += f[p][p]
        out.append(running)
    return tuple(out)


def j_count(k: int, m: int) -> int:
    """Number of integer k-tuples whose positive parts and negative parts both sum to at most m, equally."""
    return j_count_table(k, m)[m]


@dataclass(frozen=True)
class JBoundReport:
    k: int
    m: int
    count: int
    bound: Fraction  # (14m/k)^k, exact
    holds: bool


def j_bound_report(k: int, m: int) -> JBoundReport:
    """Exact comparison of the tuple count against (14m/k)^k; requires m >= k."""
    if m < k:
        raise ValueError(f"the bound needs m >= k, got k={k}, m={m}")
    count = j_count(k, m)
    bound = Fraction(14 * m, k) ** k
    return JBoundReport(k, m, count, bound, count < bound)


@dataclass(frozen=True)
class GrowthBoundReport:
    m: int
    k: int
    grown_size: int          # |(m+1)B|
    j_value: int
    j_bound_holds: bool      # |(m+1)B| <= |B| * J(k, m)
    ratio_bound: Optional[Fraction]   # (14m/k)^k when m >= k
    ratio_bound_holds: Optional[bool]


def growth_bound_check(B: GSet, T: GSet, m: int, _j: Optional[int] = None) -> GrowthBoundReport:
    """Certify |(m+1)B| against the covering growth bounds for a k-covering pair."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if not is_k_covering(B, T):
        raise ValueError("B is not covered by T: B+B is not inside B+(T-T)")
    k = len(T)
    j = j_count(k, m) if _j is None else _j
    grown = len(iterated_sum(B, m + 1))
    j_ok = grown <= len(B) * j
    if m >= k:
        bound = Fraction(14 * m, k) ** k
        ratio_ok = grown < bound * len(B)
    else:
        bound = None
        ratio_ok = None
    return GrowthBoundReport(m, k, grown, j, j_ok, bound, ratio_ok)


def growth_table(B: GSet, T: GSet, m_max: int) -> Tuple[GrowthBoundReport, ...]:
    """Growth reports for m = 1..m_max, sharing one covering check and one sum chain."""
    if m_max < 1:
        raise ValueError(f"need m_max >= 1, got {m_max}")
    if not is_k_covering(B, T):
        raise ValueError("B is not covered by T: B+B is not inside B+(T-T)")
    k = len(T)
    table = j_count_table(k, m_max)
    rows = []
    grown = B
    for m in range(1, m_max + 1):
        grown = sumset(grown, B)
        j = table[m]
        j_ok = len(grown) <= len(B) * j
        if m >= k:
            bound = Fraction(14 * m, k) ** k
            ratio_ok = len(grown) < bound * len(B)
        else:
            bound = None
            ratio_ok = None
        rows.append(GrowthBoundReport(m, k, len(grown), j, j_ok, bound, ratio_ok))
    return tuple(rows)
