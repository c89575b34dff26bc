"""Diameter search, interval concentration, and order-k linearization.

A subset of Z/NZ has diameter l when l is the least integer such that the
set fits in an arithmetic progression {a, a+d, ..., a+l*d}.  Diameter is
what links a dominant character to linear structure: a difference set whose
transform nearly peaks at some frequency forces the set into a progression
shorter than delta*N, and a short progression can be mapped into the
integers preserving all k-term sum equalities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from .fourier import character_sum, spectrum
from .groups import (
    CyclicGroup,
    Element,
    GSet,
    IntegerWindow,
    difference_set,
    dilate,
    translate,
)
from .primes import is_prime, smallest_prime_in

__all__ = [
    "DiameterWitness",
    "LevWindow",
    "GapCoverResult",
    "SpectralDiameterResult",
    "IsoCheckResult",
    "RectificationWitness",
    "RectifyOutcome",
    "diameter",
    "lev_interval",
    "gap_cover",
    "diam_from_spectrum",
    "freiman_iso_check",
    "rectify",
    "minimal_integer_model",
]


def _require_cyclic(A: GSet) -> CyclicGroup:
    if A.group.kind != "cyclic":
        raise ValueError("this operation needs a cyclic ambient group")
    return A.group  # type: ignore[return-value]


@dataclass(frozen=True)
class DiameterWitness:
    """Certified minimal progression cover: A <= {start, start+step, ..., start+length*step}."""

    length: int
    step: int
    start: int
    normalized: GSet        # step^-1 * (A - start), a subset of {0..length}
    units_searched: int

    def progression(self) -> Tuple[int, ...]:
        g: CyclicGroup = self.normalized.group  # type: ignore[assignment]
        N = g.modulus
        return tuple((self.start + j * self.step) % N for j in range(self.length + 1))


def _min_cover_for_unit(vals: np.ndarray, N: int) -> Tuple[int, int]:
    """(interval length, start value) of the shortest circular interval holding vals."""
    vals = np.sort(vals)
    if len(vals) == 1:
        return 0, int(vals[0])
    gaps = np.diff(vals)
    wrap = N - int(vals[-1]) + int(vals[0])
    i = int(np.argmax(gaps)) if len(gaps) else 0
    best_gap = int(gaps[i]) if len(gaps) else 0
    if wrap >= best_gap:
        return N - wrap, int(vals[0])
    return N - best_gap, int(vals[i + 1])


def diameter(A: GSet) -> DiameterWitness:
    """Exhaustive minimal-diameter search over all dilations.

    For each unit u the shortest interval containing u*A is N minus the
    largest circular gap; u and N-u give mirror intervals, so only half the
    units are visited.  Returns the first witness among the smallest.
    """
    g = _require_cyclic(A)
    N = g.modulus
    if not A.elements:
        raise ValueError("diameter of the empty set is undefined")
    if N == 1 or len(A) == 1:
        return DiameterWitness(0, 1 % N, A.elements[0], dilate(translate(A, -A.elements[0]), 1), 1)
    best = (N, 1, 0)  # (length, unit, start in dilated coordinates)
    searched = 0
    floor = len(A) - 1  # cannot do better than a full progression
    if len(A) <= 64:
        xs = A.elements
        for u in range(1, N // 2 + 1):
            if math.gcd(u, N) != 1:
                continue
            searched += 1
            vals = sorted((u * x) % N for x in xs)
            # largest circular gap; ties prefer the wraparound gap
            gap = vals[0] + N - vals[-1]
            start = vals[0]
            prev = vals[0]
            for v in vals[1:]:
                if v - prev > gap:
                    gap = v - prev
                    start = v
                prev = v
            if N - gap < best[0]:
                best = (N - gap, u, start)
                if N - gap == floor:
                    break
    else:
        arr = A.packed()
        for u in range(1, N // 2 + 1):
            if math.gcd(u, N) != 1:
                continue
            searched += 1
            length, start = _min_cover_for_unit((u * arr) % N, N)
            if length < best[0]:
                best = (length, u, start)
                if length == floor:
                    break
    length, u, start = best
    d = pow(u, -1, N)
    a = (d * start) % N
    normalized = translate(dilate(A, u), -start)
    if any(x > length for x in normalized.elements):
        raise RuntimeError("diameter witness failed its own containment check")
    return DiameterWitness(length, d, a, normalized, searched)


@dataclass(frozen=True)
class LevWindow:
    """Outcome of the concentration step at frequency one."""

    hypothesis_met: bool
    coefficient: float                # |B^(1)|
    threshold: float                  # (1 - 8 eps delta^2) |B|
    start: Optional[int] = None
    length: Optional[int] = None      # window is [start, start+length], length < delta*N
    exceptions: Optional[int] = None  # |B| minus points inside the window
    bound: Optional[float] = None     # eps * |B|
    conclusion_ok: Optional[bool] = None


def lev_interval(B: GSet, eps: float, delta: float) -> LevWindow:
    """Best near-covering interval of length < delta*N when B^(1) is nearly maximal.

    Scans every circular window of length ceil(delta*N) - 1 and returns the
    one with fewest exceptions (smallest start on ties).  Not-applicable is
    a value: hypothesis_met=False with the measured coefficient.
    """
    g = _require_cyclic(B)
    if not B.elements:
        raise ValueError("empty set has no concentration interval")
    if not 0 < eps < 1:
        raise ValueError(f"eps must be in (0,1), got {eps}")
    if not 0 < delta < 0.5:
        raise ValueError(f"delta must be in (0, 1/2), got {delta}")
    N = g.modulus
    size = len(B)
    coeff = abs(character_sum(B, 1))
    threshold = (1 - 8 * eps * delta * delta) * size
    if coeff < threshold:
        return LevWindow(False, coeff, threshold)
    length = max(0, math.ceil(delta * N) - 1)
    ind = np.zeros(N, dtype=np.int64)
    ind[B.packed()] = 1
    window = np.convolve(np.concatenate([ind, ind[: length]]), np.ones(length + 1, dtype=np.int64), mode="valid")[:N]
    start = int(np.argmax(window))
    inside = int(window[start])
    exceptions = size - inside
    bound = eps * size
    return LevWindow(True, coeff, threshold, start, length, exceptions, bound, exceptions < bound)


@dataclass(frozen=True)
class GapCoverResult:
    """Outcome of the gap-normalization step."""

    hypothesis_met: bool
    outside: int              # |(A-A) \ [b, b+l]|
    threshold: Fraction       # |A| / 2
    length: int
    start: Optional[int] = None   # A <= [start, start+length] when the hypothesis held


def gap_cover(A: GSet, b: int, l: int) -> GapCoverResult:
    """If all but < |A|/2 of A-A sits in [b, b+l] with l < N/3, produce an interval cover of A.

    The covering interval starts where the largest circular gap of A ends;
    the containment is re-verified, not assumed.
    """
    g = _require_cyclic(A)
    N = g.modulus
    if not A.elements:
        raise ValueError("empty set has no gap cover")
    if 3 * l >= N:
        raise ValueError(f"interval length {l} must satisfy l < N/3 = {N}/3")
    D = difference_set(A, A)
    b = b % N
    outside = sum(1 for x in D.elements if (x - b) % N > l)
    threshold = Fraction(len(A), 2)
    if outside >= threshold:
        return GapCoverResult(False, outside, threshold, l)
    _, start = _min_cover_for_unit(A.packed(), N)
    span = max((x - start) % N for x in A.elements)
    if span > l:
        raise RuntimeError("gap normalization exceeded the certified length")
    return GapCoverResult(True, outside, threshold, l, start)


@dataclass(frozen=True)
class SpectralDiameterResult:
    """Outcome of the dominant-frequency to short-progression implication."""

    hypothesis_met: bool
    threshold: float                 # |D| - 4 delta^2 |A|
    frequency: Optional[int] = None
    coefficient: Optional[float] = None
    interval_start: Optional[int] = None
    interval_length: Optional[int] = None
    diameter_upper: Optional[int] = None   # certified diam A <= this
    diameter_bound: float = 0.0            # delta * N, strict upper target
    conclusion_ok: Optional[bool] = None


def diam_from_spectrum(A: GSet, delta: float) -> SpectralDiameterResult:
    """Derive a diameter bound < delta*N from a dominant difference-set frequency.

    Dilating by the dominant frequency r moves it to frequency one (the
    transform of r*D at 1 equals that of D at r), where the concentration
    and gap steps apply with eps = |A| / (2|D|).
    """
    g = _require_cyclic(A)
    if not 0 < delta < Fraction(1, 3):
        raise ValueError(f"delta must be in (0, 1/3), got {delta}")
    N = g.modulus
    n = len(A)
    if n == 0:
        raise ValueError("empty set has no diameter")
    D = difference_set(A, A)
    m = len(D)
    threshold = m - 4 * delta * delta * n
    rep = spectrum(D)
    if rep.magnitudes is not None:
        mags = rep.magnitudes
    else:
        mags = np.array([abs(character_sum(D, r)) for r in range(N)])
    best_r: Optional[int] = None
    best_mag = -1.0
    nz = mags[1:]
    if nz.size and float(nz.max()) >= threshold:
        best_r = 1 + int(np.argmax(nz))
        best_mag = float(nz[best_r - 1])
    if best_r is None:
        return SpectralDiameterResult(False, threshold, diameter_bound=delta * N)
    A1 = dilate(A, best_r)
    D1 = dilate(D, best_r)
    eps = n / (2 * m)
    lev = lev_interval(D1, eps, delta)
    if not lev.hypothesis_met or not lev.conclusion_ok:
        raise RuntimeError("frequency-one concentration failed after dilation")
    cover = gap_cover(A1, lev.start, lev.length)
    if not cover.hypothesis_met:
        raise RuntimeError("gap hypothesis failed although concentration held")
    return SpectralDiameterResult(
        True,
        threshold,
        frequency=best_r,
        coefficient=best_mag,
        interval_start=cover.start,
        interval_length=cover.length,
        diameter_upper=cover.length,
        diameter_bound=delta * N,
        conclusion_ok=cover.length < delta * N,
    )


@dataclass(frozen=True)
class IsoCheckResult:
    ok: bool
    order: int
    tuples_compared: int
    # two k-multisets witnessing the failure, with their sums on both sides
    counterexample: Optional[Tuple[Tuple[Element, ...], Tuple[Element, ...]]] = None

    def __bool__(self) -> bool:
        return self.ok


def freiman_iso_check(
    A: GSet, B: GSet, mapping: Mapping[Element, Element], k: int
) -> IsoCheckResult:
    """Whether mapping preserves equality of k-term sums in both directions.

    Compares the partitions of all k-multisets of A induced by domain sums
    and by image sums; they must coincide exactly.
    """
    if k < 2:
        raise ValueError(f"isomorphism order must be >= 2, got {k}")
    for a in A.elements:
        if a not in mapping:
            raise ValueError(f"mapping is not defined on {a!r}")
    if len({mapping[a] for a in A.elements}) != len(A.elements):
        raise ValueError("mapping is not injective on A")
    ga, gb = A.group, B.group
    by_domain_sum: Dict = {}
    count = 0
    for combo in itertools.combinations_with_replacement(A.elements, k):
        count += 1
        sa = combo[0]
        sb = mapping[combo[0]]
        for x in combo[1:]:
            sa = ga.add(sa, x)
            sb = gb.add(sb, mapping[x])
        prev = by_domain_sum.get(sa)
        if prev is None:
            by_domain_sum[sa] = (sb, combo)
        elif prev[0] != sb:
            return IsoCheckResult(False, k, count, (prev[1], combo))
    seen_image: Dict = {}
    for sa, (sb, combo) in by_domain_sum.items():
        if sb in seen_image:
            return IsoCheckResult(False, k, count, (seen_image[sb], combo))
        seen_image[sb] = combo
    return IsoCheckResult(True, k, count)


@dataclass(frozen=True)
class RectificationWitness:
    order: int
    dilation: int        # unit applied to A
    shift: int           # subtracted after dilation
    length: int          # image fits in {0..length}, order*length < N
    image: GSet          # integer window set
    verified: Optional[bool]   # None when the multiset check was over budget


@dataclass(frozen=True)
class RectifyOutcome:
    witness: Optional[RectificationWitness]
    diameter: DiameterWitness
    required: int        # order * diameter length, must be < N

    @property
    def succeeded(self) -> bool:
        return self.witness is not None


def rectify(
    A: GSet,
    k: int,
    diam: Optional[DiameterWitness] = None,
    iso_budget: int = 200_000,
) -> RectifyOutcome:
    """Map A <= Z/NZ (N prime) into the integers preserving k-term sum equalities.

    Succeeds exactly when k * diam(A) < N; the witness composes the optimal
    dilation with a shift, and is certified by the independent multiset
    check when that fits the budget.
    """
    g = _require_cyclic(A)
    N = g.modulus
    if not is_prime(N):
        raise ValueError(f"modulus {N} is not prime")
    if k < 2:
        raise ValueError(f"isomorphism order must be >= 2, got {k}")
    if diam is None:
        diam = diameter(A)
    required = k * diam.length
    if required >= N:
        return RectifyOutcome(None, diam, required)
    u = pow(diam.step, -1, N)
    shift = (u * diam.start) % N
    image_elems = tuple(sorted((u * x - shift) % N for x in A.elements))
    image = GSet(IntegerWindow(0, max(diam.length, 0)), image_elems)
    mapping = {x: (u * x - shift) % N for x in A.elements}
    verified: Optional[bool]
    if math.comb(len(A) + k - 1, k) <= iso_budget:
        check = freiman_iso_check(A, image, mapping, k)
        if not check.ok:
            raise RuntimeError("rectification witness failed the multiset check")
        verified = True
    else:
        verified = None
    witness = RectificationWitness(k, u, shift, diam.length, image, verified)
    return RectifyOutcome(witness, diam, required)


def minimal_integer_model(A: GSet, k: int, rounds: int = 8, iso_budget: int = 200_000) -> GSet:
    """Shrink an integer set to a short representative with the same k-term sum structure.

    Each round embeds the current set (normalized to start at 1, max L) into
    Z/p for the least prime p in (kL, 2kL], takes the optimal progression
    cover there, and pulls the positions back to [1, l+1].  Stops when the
    length stops shrinking.
    """
    if A.group.kind != "window":
        raise ValueError("minimal model reduction starts from an integer set")
    if not A.elements:
        raise ValueError("empty set has no minimal model")
    if k < 2:
        raise ValueError(f"isomorphism order must be >= 2, got {k}")
    cur = translate(A, 1 - min(A.elements))
    for _ in range(rounds):
        L = max(cur.elements)
        if L == len(cur):
            break  # already an interval starting at 1; nothing shorter exists
        p = smallest_prime_in(k * L, 2 * k * L)
        emb = GSet(CyclicGroup(p), cur.elements)
        out = rectify(emb, k, iso_budget=iso_budget)
        if out.witness is None:
            raise RuntimeError("embedding round lost the progression structure")
        new = translate(out.witness.image, 1)
        if max(new.elements) >= L:
            break
        if math.comb(len(cur) + k - 1, k) <= iso_budget:
            u, shift = out.witness.dilation, out.witness.shift
            step_map = {c: (u * c - shift) % p + 1 for c in cur.elements}
            check = freiman_iso_check(cur, new, step_map, k)
            if not check.ok:
                raise RuntimeError("reduction round failed the multiset check")
        cur = new
    return cur
