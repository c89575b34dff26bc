"""Numeric replay of the explicit constant chains behind the main theorems.

The theorem-level density thresholds, (16K)^(-12K^2) and (16kK)^(-12K^2),
are far below anything a desk-scale set can meet, so the calculators work in
log space: log(1/alpha) is the primary quantity and the tiny densities are
reconstructed as floats only for display (they may underflow to 0.0).  The
chain itself is

    tau = K^2 alpha
    eta = 9 K^-2 tau^(1/2K^2) log(1/tau)
    delta = 2 K sqrt(eta)

and the claims under replay are delta < 1/3 at the first threshold and
delta < 1/k at the second.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

from .fourier import eta_largecoeff2, spectrum
from .groups import GSet, difference_set, sumset
from .primes import is_prime
from .rectify import DiameterWitness, SpectralDiameterResult, diam_from_spectrum, diameter

__all__ = [
    "BoundReport",
    "PipelineReport",
    "bound_calculator",
    "threshold_chain",
    "theorem1_pipeline",
]

_LOG14 = math.log(14.0)


@dataclass(frozen=True)
class BoundReport:
    """Threshold and chain values for one (alpha, K, k) input.

    log_inv_alpha is authoritative; alpha, threshold_thm1, threshold_thm2
    and tau are the corresponding floats and may underflow to 0.0.  eta and
    delta are None when tau >= 1, where the chain formula is meaningless.
    """

    log_inv_alpha: float
    K: float
    k: Optional[int]
    alpha: float
    log_threshold_thm1: float      # log(1/threshold), i.e. 12 K^2 log(16K)
    threshold_thm1: float
    log_threshold_thm2: Optional[float]
    threshold_thm2: Optional[float]
    alpha_below_thm1: bool
    alpha_below_thm2: Optional[bool]
    log_inv_tau: float             # tau = K^2 alpha
    tau: float
    largecoeff_applicable: bool    # tau <= 14^(-2K^2)
    eta: Optional[float]
    delta: Optional[float]         # 2 K sqrt(eta)
    delta_below_third: bool
    delta_below_inv_k: Optional[bool]
    diam_bound_fraction: float     # 12 alpha^(1/4K^2) sqrt(log(1/alpha))


def _chain(log_inv_alpha: float, K: float, k: Optional[int]) -> BoundReport:
    if not math.isfinite(log_inv_alpha) or log_inv_alpha <= 0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if K < 1:
        raise ValueError(f"doubling parameter must be >= 1, got {K}")
    if k is not None and k < 2:
        raise ValueError(f"isomorphism order must be >= 2, got {k}")
    ksq = K * K
    log_t1 = 12 * ksq * math.log(16 * K)
    log_t2 = 12 * ksq * math.log(16 * k * K) if k is not None else None
    log_inv_tau = log_inv_alpha - 2 * math.log(K)
    applicable = log_inv_tau >= 2 * ksq * _LOG14
    if log_inv_tau > 0:
        eta: Optional[float] = 9 / ksq * math.exp(-log_inv_tau / (2 * ksq)) * log_inv_tau
        delta: Optional[float] = 2 * K * math.sqrt(eta)
    else:
        eta = delta = None
    return BoundReport(
        log_inv_alpha=log_inv_alpha,
        K=K,
        k=k,
        alpha=math.exp(-log_inv_alpha),
        log_threshold_thm1=log_t1,
        threshold_thm1=math.exp(-log_t1),
        log_threshold_thm2=log_t2,
        threshold_thm2=math.exp(-log_t2) if log_t2 is not None else None,
        # closed inequalities; the 1e-9 log-space slack keeps an exactly-at-
        # threshold alpha on the passing side of float noise
        alpha_below_thm1=log_inv_alpha >= log_t1 - 1e-9,
        alpha_below_thm2=(log_inv_alpha >= log_t2 - 1e-9) if log_t2 is not None else None,
        log_inv_tau=log_inv_tau,
        tau=math.exp(-log_inv_tau),
        largecoeff_applicable=applicable,
        eta=eta,
        delta=delta,
        delta_below_third=delta is not None and delta < 1 / 3,
        delta_below_inv_k=(delta is not None and delta < 1 / k) if k is not None else None,
        diam_bound_fraction=12 * math.exp(-log_inv_alpha / (4 * ksq)) * math.sqrt(log_inv_alpha),
    )


def bound_calculator(alpha: Union[float, Fraction], K: float, k: Optional[int] = None) -> BoundReport:
    """Evaluate every threshold and the eta/delta chain at a given density."""
    if isinstance(alpha, Rational):
        if not 0 < alpha < 1:
            raise ValueError(f"alpha must lie in (0,1), got {alpha}")
        frac = Fraction(alpha)
        log_inv = math.log(frac.denominator) - math.log(frac.numerator)
    else:
        if not 0 < alpha < 1:
            raise ValueError(f"alpha must lie in (0,1), got {alpha}")
        log_inv = -math.log(alpha)
    return _chain(log_inv, float(K), k)


def threshold_chain(K: float, k: Optional[int] = None) -> BoundReport:
    """The chain evaluated exactly at the theorem threshold.

    With k=None alpha is set to (16K)^(-12K^2); with k it is set to
    (16kK)^(-12K^2).  Working from log(1/alpha) directly keeps the boundary
    comparison exact even where alpha itself underflows.
    """
    if K < 1:
        raise ValueError(f"doubling parameter must be >= 1, got {K}")
    base = 16 * K if k is None else 16 * k * K
    return _chain(12 * K * K * math.log(base), float(K), k)


@dataclass(frozen=True)
class PipelineReport:
    """All intermediate quantities of the density-to-diameter argument on one set."""

    modulus: int
    size: int
    alpha: Fraction
    doubling: Fraction
    diff_ratio: Fraction
    K: float                        # min of the two ratios
    bounds: Optional[BoundReport]   # None when alpha = 1 (the whole group)
    tau: Fraction                   # actual |A-A| / N
    gate_alpha: bool                # alpha <= (16K)^(-12K^2)
    gate_tau: bool                  # tau <= 14^(-2K^2)
    largecoeff_eta: Optional[float]
    largecoeff_holds: Optional[bool]
    spectral: SpectralDiameterResult
    diam: DiameterWitness
    diam_bound: Optional[float]     # 12 alpha^(1/4K^2) sqrt(log(1/alpha)) N
    diam_bound_holds: Optional[bool]


def theorem1_pipeline(A: GSet, delta: Optional[float] = None) -> PipelineReport:
    """Run the full small-density argument on a concrete set, gates and all.

    The theorem gates are evaluated honestly; at desk scale they normally
    fail and the report says so, while the unconditional parts (spectrum,
    concentration implication, true diameter) still run.  When delta is not
    given, the chain's own delta is used if it lands in (0, 1/3), else 0.3.
    """
    if A.group.kind != "cyclic":
        raise ValueError("the pipeline runs on cyclic groups")
    N = A.group.modulus
    if not is_prime(N):
        raise ValueError(f"modulus {N} is not prime")
    if not A.elements:
        raise ValueError("pipeline needs a nonempty set")
    n = len(A)
    alpha = Fraction(n, N)
    D = difference_set(A, A)
    k_double = Fraction(len(sumset(A, A)), n)
    k_diff = Fraction(len(D), n)
    K = float(min(k_double, k_diff))
    tau = Fraction(len(D), N)
    bounds = bound_calculator(alpha, K) if alpha < 1 else None
    gate_alpha = bounds.alpha_below_thm1 if bounds is not None else False
    log_inv_tau = math.log(tau.denominator) - math.log(tau.numerator) if tau < 1 else 0.0
    gate_tau = tau < 1 and log_inv_tau >= 2 * K * K * _LOG14
    eta = holds = None
    if gate_tau:
        eta = eta_largecoeff2(tau, K)
        rep = spectrum(D)
        holds = rep.max_magnitude >= (1 - eta) * len(D)
    if delta is None:
        delta = bounds.delta if bounds is not None and bounds.delta is not None else None
        if delta is None or not 0 < delta < 1 / 3:
            delta = 0.3
    spectral = diam_from_spectrum(A, delta)
    diam = diameter(A)
    diam_bound = bounds.diam_bound_fraction * N if bounds is not None else None
    return PipelineReport(
        modulus=N,
        size=n,
        alpha=alpha,
        doubling=k_double,
        diff_ratio=k_diff,
        K=K,
        bounds=bounds,
        tau=tau,
        gate_alpha=gate_alpha,
        gate_tau=gate_tau,
        largecoeff_eta=eta,
        largecoeff_holds=holds,
        spectral=spectral,
        diam=diam,
        diam_bound=diam_bound,
        diam_bound_holds=diam.length < diam_bound if diam_bound is not None else None,
    )
