"""Character sums, convolution counts, and the large-coefficient estimates.

The transform convention is B^(r) = sum over b in B of e(b*r/N) with
e(x) = exp(2*pi*i*x); for torsion products the character indexed by c is
e((c.x)/r).  numpy's FFT computes the conjugate convention, so the fast
path conjugates its output.  A direct summation path exists for
cross-validation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np

from .covering import is_k_covering
from .groups import Element, GSet, iterated_sum

__all__ = [
    "SpectrumReport",
    "ConvolutionCounts",
    "MomentChainReport",
    "LargeCoeffParams",
    "LargeCoeffCertificate",
    "spectrum",
    "character_sum",
    "convolution_counts",
    "moment_lower_bound_check",
    "eta_largecoeff",
    "eta_largecoeff2",
    "certified_large_coefficient",
]

# keep full magnitude arrays on the report below this order
_KEEP_MAGNITUDES = 1 << 16


def _require_finite(B: GSet) -> int:
    order = B.group.order
    if order is None:
        raise ValueError("spectral operations need a finite ambient group")
    if not B.elements:
        raise ValueError("spectral operations need a nonempty set")
    return order


@dataclass(frozen=True)
class SpectrumReport:
    order: int
    size: int
    density: Fraction
    max_index: Element          # nonprincipal character with the largest magnitude
    max_magnitude: float
    eta_achieved: float         # 1 - max_magnitude / size
    parseval_residual: float    # | sum |B^|^2 - N*|B| | / (N*|B|)
    magnitudes: Optional[np.ndarray]   # flat, index order = packed element order
    top: Tuple[Tuple[Element, float], ...]


def _transform(B: GSet) -> np.ndarray:
    g = B.group
    if g.kind == "cyclic":
        return np.conj(np.fft.fft(B.indicator().astype(np.float64)))
    return np.conj(np.fft.fftn(B.indicator().astype(np.float64))).ravel()


def _transform_direct(B: GSet) -> np.ndarray:
    g = B.group
    n = g.order
    out = np.zeros(n, dtype=np.complex128)
    if g.kind == "cyclic":
        N = g.modulus
        for r in range(n):
            out[r] = sum(cmath.exp(2j * math.pi * ((b * r) % N) / N) for b in B.elements)
        return out
    r_mod = g.exponent
    packed = [g.element_at(i) for i in range(n)]
    for i, chi in enumerate(packed):
        out[i] = sum(
            cmath.exp(2j * math.pi * (sum(c * x for c, x in zip(chi, b)) % r_mod) / r_mod)
            for b in B.elements
        )
    return out


def spectrum(B: GSet, method: str = "fft", top: int = 8) -> SpectrumReport:
    """All character magnitudes of the indicator of B, with the Parseval residual.

    method="direct" evaluates the defining sums termwise; it is the slow
    reference the fast path is tested against.
    """
    n = _require_finite(B)
    if method == "fft":
        coeffs = _transform(B)
    elif method == "direct":
        coeffs = _transform_direct(B)
    else:
        raise ValueError(f"unknown method {method!r}")
    mags = np.abs(coeffs)
    size = len(B)
    power = float(np.sum(mags * mags))
    residual = abs(power - n * size) / (n * size)
    if n > 1:
        idx = 1 + int(np.argmax(mags[1:]))
        max_mag = float(mags[idx])
    else:
        idx, max_mag = 0, float(size)
    g = B.group
    def unpack(i: int) -> Element:
        return g.element_at(i) if g.kind == "torsion" else i
    order_desc = np.argsort(-mags[1:], kind="stable")[: max(0, top)] + 1 if n > 1 else []
    top_list = tuple((unpack(int(i)), float(mags[i])) for i in order_desc)
    return SpectrumReport(
        order=n,
        size=size,
        density=Fraction(size, n),
        max_index=unpack(idx),
        max_magnitude=max_mag,
        eta_achieved=1.0 - max_mag / size,
        parseval_residual=residual,
        magnitudes=mags if n <= _KEEP_MAGNITUDES else None,
        top=top_list,
    )


def character_sum(B: GSet, index: Element) -> complex:
    """Single coefficient B^(index) by direct summation."""
    _require_finite(B)
    g = B.group
    if g.kind == "cyclic":
        N = g.modulus
        r = int(index) % N
        return sum(cmath.exp(2j * math.pi * ((b * r) % N) / N) for b in B.elements)
    chi = g.normalize(index)
    r = g.exponent
    return sum(
        cmath.exp(2j * math.pi * (sum(c * x for c, x in zip(chi, b)) % r) / r)
        for b in B.elements
    )


@dataclass(frozen=True)
class ConvolutionCounts:
    """Exact representation counts r_{m+1}(x) = #{(b_1..b_{m+1}) : sum = x}."""

    fold: int                  # m + 1
    counts: np.ndarray         # flat over the packed index space; int64 or object
    support: GSet
    total: int                 # |B|^{m+1}, verified against the count sum

    def count_at(self, x: Element) -> int:
        g = self.support.group
        return int(self.counts[g.index(x) if g.kind == "torsion" else x])


def _fold_once(counts: np.ndarray, B: GSet) -> np.ndarray:
    g = B.group
    if g.kind == "cyclic":
        out = np.zeros_like(counts)
        for b in B.elements:
            out += np.roll(counts, b)
        return out
    shape = (g.exponent,) * g.rank
    cube = counts.reshape(shape)
    out = np.zeros_like(cube)
    axes = tuple(range(g.rank))
    for b in B.elements:
        out += np.roll(cube, shift=b, axis=axes)
    return out.ravel()


def convolution_counts(B: GSet, m: int) -> ConvolutionCounts:
    """The (m+1)-fold representation counts of B, exact in integers."""
    n = _require_finite(B)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    # int64 suffices while |B|^{m+1} stays below 2^62; otherwise python ints
    dtype: Union[type, np.dtype] = np.int64 if len(B) ** (m + 1) < (1 << 62) else object
    counts = np.zeros(n, dtype=dtype)
    if dtype is object:
        counts[:] = 0
    idx = B.packed()
    counts[idx] = 1
    for _ in range(m):
        counts = _fold_once(counts, B)
    total = int(counts.sum())
    expected = len(B) ** (m + 1)
    if total != expected:
        raise RuntimeError(f"count mass {total} != |B|^(m+1) = {expected}")
    nz = np.nonzero(counts)[0]
    g = B.group
    if g.kind == "torsion":
        elems = tuple(g.element_at(int(i)) for i in nz)
    else:
        elems = tuple(int(i) for i in nz)
    support = GSet._from_sorted(g, elems)
    return ConvolutionCounts(m + 1, counts, support, total)


@dataclass(frozen=True)
class MomentChainReport:
    m: int
    support_size: int                 # R = |(m+1)B|
    sum_of_squares: int               # sum_x r_{m+1}(x)^2, exact
    cauchy_schwarz_holds: bool        # R * sum_sq >= |B|^{2m+2}, exact
    parseval_residual: float          # vs N * sum_sq, relative
    parseval_holds: bool
    max_magnitude: float              # largest nonprincipal |B^|
    max_power_bound: float            # (1/R - 1/N) * |B|^{2m+1}
    max_bound_holds: bool
    ok: bool


def moment_lower_bound_check(B: GSet, m: int, tol: float = 1e-9) -> MomentChainReport:
    """Verify the moment chain that forces one large nonprincipal coefficient.

    Chain: r-counts mass, Cauchy-Schwarz on the support (exact), Parseval for
    the (2m+2)-th moment (float, relative tol), and the resulting lower bound
    max |B^(gamma)|^{2m} >= (1/R - 1/N) * |B|^{2m+1}.
    """
    n = _require_finite(B)
    conv = convolution_counts(B, m)
    R = len(conv.support)
    size = len(B)
    sum_sq = int((conv.counts.astype(object) ** 2).sum())
    cs = R * sum_sq >= size ** (2 * m + 2)
    rep = spectrum(B)
    mags = rep.magnitudes if rep.magnitudes is not None else np.abs(_transform(B))
    moment = float(np.sum(mags ** (2 * m + 2)))
    target = n * sum_sq
    parseval_res = abs(moment - target) / target
    parseval_ok = parseval_res <= tol
    max_mag = rep.max_magnitude
    rhs = (Fraction(1, R) - Fraction(1, n)) * Fraction(size) ** (2 * m + 1)
    rhs_f = float(rhs)
    max_ok = max_mag ** (2 * m) >= rhs_f * (1.0 - tol)
    return MomentChainReport(
        m=m,
        support_size=R,
        sum_of_squares=sum_sq,
        cauchy_schwarz_holds=cs,
        parseval_residual=parseval_res,
        parseval_holds=parseval_ok,
        max_magnitude=max_mag,
        max_power_bound=rhs_f,
        max_bound_holds=max_ok,
        ok=cs and parseval_ok and max_ok,
    )


@dataclass(frozen=True)
class LargeCoeffParams:
    k: int
    beta: Fraction
    m: int          # floor(k * (2 beta)^(-1/k) / 14)
    eta: float      # 18 * beta^(1/k) * log(1/beta) / k


def eta_largecoeff(beta: Union[Fraction, float], k: int) -> LargeCoeffParams:
    """Quality parameter eta and moment order m for a k-covered set of density beta.

    Requires beta <= 14^-(k+1); that gate also forces m >= k and
    m >= k * beta^(-1/k) / 36, both of which are re-asserted here.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    beta_frac = beta if isinstance(beta, Fraction) else Fraction(beta)
    if not 0 < beta_frac <= 1:
        raise ValueError(f"density must be in (0, 1], got {beta}")
    if beta_frac > Fraction(1, 14 ** (k + 1)):
        raise ValueError(f"density {float(beta_frac):.3g} above the gate 14^-(k+1)")
    b = float(beta_frac)
    m = math.floor(k * (2 * b) ** (-1 / k) / 14)
    if m < k:
        raise RuntimeError(f"derived m = {m} < k = {k}; gate arithmetic is broken")
    if m < k * b ** (-1 / k) / 36:
        raise RuntimeError("derived m violates the 1/36 lower bound")
    eta = 18 * b ** (1 / k) * math.log(1 / b) / k
    return LargeCoeffParams(k, beta_frac, m, eta)


def eta_largecoeff2(tau: float, K: float, k_cover: Optional[int] = None) -> float:
    """Quality parameter for difference sets: eta = 9 K^-2 tau^(1/2K^2) log(1/tau).

    tau is |A-A|/N and K the growth ratio; requires tau <= 14^(-2K^2).  When
    the covering size k_cover is supplied it must satisfy k <= 2K^2 - 1.
    """
    K = float(K)
    tau = float(tau)
    if not 0 < tau <= 1:
        raise ValueError(f"tau must be in (0, 1], got {tau}")
    if K < 1:
        raise ValueError(f"growth ratio below 1 is impossible, got {K}")
    gate_log = -2 * K * K * math.log(14)
    if math.log(tau) > gate_log + 1e-15:
        raise ValueError(f"tau {tau:.3g} above the gate 14^(-2K^2)")
    if k_cover is not None and k_cover > 2 * K * K - 1:
        raise ValueError(f"covering size {k_cover} exceeds 2K^2 - 1")
    return 9 / (K * K) * tau ** (1 / (2 * K * K)) * math.log(1 / tau)


@dataclass(frozen=True)
class LargeCoeffCertificate:
    k: int
    beta: Fraction
    m: int
    eta: float
    index: Element
    magnitude: float
    threshold: float    # (1 - eta) * |B|
    holds: bool


def certified_large_coefficient(B: GSet, T: GSet) -> LargeCoeffCertificate:
    """End-to-end check: a k-covered sparse set has a near-maximal coefficient.

    Verifies the covering precondition, gates the density exactly, computes
    eta, and compares the true maximal nonprincipal magnitude against
    (1 - eta)|B|.
    """
    n = _require_finite(B)
    if not is_k_covering(B, T):
        raise ValueError("B is not covered by T: B+B is not inside B+(T-T)")
    k = len(T)
    beta = Fraction(len(B), n)
    params = eta_largecoeff(beta, k)
    rep = spectrum(B)
    threshold = (1.0 - params.eta) * len(B)
    return LargeCoeffCertificate(
        k=k,
        beta=beta,
        m=params.m,
        eta=params.eta,
        index=rep.max_index,
        magnitude=rep.max_magnitude,
        threshold=threshold,
        holds=rep.max_magnitude >= threshold,
    )
