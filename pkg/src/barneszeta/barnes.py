"""Barnes double zeta-function: evaluation away from the poles at s = 1, 2,
derivatives in s at the origin, the double log-gamma, and double
poly-gamma values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import EvalConfig, DEFAULT_CONFIG
from .errors import DomainError, PoleError
from .hurwitz import hurwitz_zeta
from .numerics import (
    ContourSpec,
    bernoulli_numbers,
    central_difference,
    contour_coefficients,
    frac_part_integral_1d,
    frac_part_integral_2d,
)

__all__ = [
    "BarnesParams",
    "zeta2_direct",
    "zeta2",
    "zeta2_integral_rep",
    "zeta2_s_derivatives_at_0",
    "log_gamma2",
    "polygamma2",
]

_B = bernoulli_numbers(64)


@dataclass(frozen=True)
class BarnesParams:
    """Parameter triple (alpha, v, w), all strictly positive."""

    alpha: float
    v: float
    w: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.v > 0 and self.w > 0):
            raise ValueError("alpha, v, w must all be positive")

    def swapped(self) -> "BarnesParams":
        return BarnesParams(self.alpha, self.w, self.v)


def zeta2_direct(s, p: BarnesParams, M: int, with_error: bool = False):
    """Truncated double sum sum_{m,n<=M} (alpha+m*v+n*w)^(-s), Re(s) > 2.

    Monotone increasing in M for real s > 2.  ``with_error`` also returns
    an analytic bound on the discarded tail.
    """
    s = complex(s)
    if s.real <= 2:
        raise DomainError("zeta2_direct requires Re(s) > 2")
    if M < 0:
        raise ValueError("M must be non-negative")
    alpha, v, w = p.alpha, p.v, p.w
    n = np.arange(M + 1)
    total = 0.0 + 0.0j
    chunk = max(1, 4_000_000 // (M + 1))
    for lo in range(0, M + 1, chunk):
        m = np.arange(lo, min(lo + chunk, M + 1))
        grid = alpha + v * m[:, None] + w * n[None, :]
        total += (grid ** (-s)).sum()
    if not with_error:
        return total
    # Union bound over the two half-strips m > M and n > M.
    sig = s.real
    a_v, a_w = alpha + v * M, alpha + w * M
    tail = (a_v ** (1 - sig) / (v * (sig - 1))
            + a_v ** (2 - sig) / (v * w * (sig - 1) * (sig - 2))
            + a_w ** (1 - sig) / (w * (sig - 1))
            + a_w ** (2 - sig) / (v * w * (sig - 1) * (sig - 2)))
    return total, tail


def _em_tail_terms(s_arr, a_m, ratio, j_len):
    """Outer Euler-Maclaurin Bernoulli corrections.

    sum_j B_2j/(2j)! * ratio^(2j-1) * (s)_{2j-1} * zeta_H(s+2j-1, a_m),
    with the 0 * pole cancellation at s = 2-2j evaluated analytically.
    """
    out = np.zeros_like(s_arr)
    poch = None
    for j in range(1, j_len + 1):
        poch = s_arr.copy() if j == 1 else poch * (s_arr + (2 * j - 3)) * (s_arr + (2 * j - 2))
        coef = _B[2 * j] / math.factorial(2 * j) * ratio ** (2 * j - 1)
        hit = s_arr == (2.0 - 2.0 * j)  # zeta_H argument lands on its pole
        if np.any(hit):
            safe = np.where(hit, s_arr + 0.5, s_arr)
            term = _recompute_poch(safe, 2 * j - 1) * hurwitz_zeta(safe + 2 * j - 1, a_m)
            # (s)_{2j-1} has a simple zero exactly cancelling the simple
            # pole (residue 1); the limit is the product of the remaining
            # Pochhammer factors.
            limit = np.ones_like(s_arr)
            for i in range(2 * j - 1):
                if i != 2 * j - 2:
                    limit = limit * (s_arr + i)
            term = np.where(hit, limit, term)
        else:
            term = poch * hurwitz_zeta(s_arr + 2 * j - 1, a_m)
        out = out + coef * term
    return out


def _recompute_poch(s_arr, m):
    out = np.ones_like(s_arr)
    for i in range(m):
        out = out * (s_arr + i)
    return out


def zeta2(s, p: BarnesParams, cfg: EvalConfig = DEFAULT_CONFIG):
    """zeta_2(s, alpha; v, w) for s away from the poles at 1 and 2.

    Row decomposition sum_m w^(-s) zeta_H(s, (alpha+m*v)/w) with the outer
    m-sum continued by Euler-Maclaurin; every m-derivative reduces to a
    shifted Hurwitz value via d/da zeta_H(s, a) = -s zeta_H(s+1, a).
    Accepts scalar or ndarray s.
    """
    s_in = np.asarray(s, dtype=complex)
    if np.any(s_in == 1.0):
        raise PoleError(1)
    if np.any(s_in == 2.0):
        raise PoleError(2)
    alpha, v, w = p.alpha, p.v, p.w
    m_len, j_len = cfg.direct_M, cfg.em_order

    s_arr = np.atleast_1d(s_in)
    a_rows = (alpha + v * np.arange(m_len)) / w
    head = hurwitz_zeta(s_arr[:, None], a_rows, cfg).sum(axis=-1)

    a_m = (alpha + m_len * v) / w
    mid = (w / (v * (s_arr - 1.0))) * hurwitz_zeta(s_arr - 1.0, a_m, cfg) \
        + 0.5 * hurwitz_zeta(s_arr, a_m, cfg)
    tail = _em_tail_terms(s_arr, a_m, v / w, j_len)
    out = w ** (-s_arr) * (head + mid + tail)
    if s_in.ndim == 0:
        return complex(out[0])
    return out.reshape(s_in.shape)


def zeta2_integral_rep(s, p: BarnesParams, cfg: EvalConfig = DEFAULT_CONFIG):
    """Seven-term integral representation of zeta_2, valid for Re(s) > 1.

    Closed Hurwitz terms, a rational term carrying both poles, two 1-D and
    one 2-D sawtooth integrals.  Used as an independent cross-check of
    :func:`zeta2` near s = 2.
    """
    s = complex(s)
    if s.real <= 1:
        raise DomainError("zeta2_integral_rep requires Re(s) > 1")
    if s in (1.0 + 0j, 2.0 + 0j):
        raise PoleError(int(s.real))
    alpha, v, w = p.alpha, p.v, p.w
    quad = cfg.quad
    value = (
        -alpha ** (-s)
        + v ** (-s) * hurwitz_zeta(s, alpha / v, cfg)
        + w ** (-s) * hurwitz_zeta(s, alpha / w, cfg)
        + alpha ** (2.0 - s) / (v * w * (s - 1.0) * (s - 2.0))
        - (w / v) * frac_part_integral_1d(alpha, w, s, quad)
        - (v / w) * frac_part_integral_1d(alpha, v, s, quad)
        + v * w * s * (s + 1.0) * frac_part_integral_2d(alpha, v, w, s + 2.0, quad)
    )
    return value


def zeta2_s_derivatives_at_0(p: BarnesParams, k_max: int,
                             cfg: EvalConfig = DEFAULT_CONFIG):
    """Derivatives d^k/ds^k zeta_2(s, alpha; v, w) at s = 0, k = 0..k_max.

    Contour extraction about the origin (radius below 1 keeps the pole at
    s = 1 outside); k! times the Taylor coefficients.
    """
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    radius = min(cfg.contour_radius, 0.5)
    spec = ContourSpec(center=0.0, radius=radius,
                       nodes=cfg.contour_nodes, max_order=k_max)
    coeffs = contour_coefficients(lambda z: zeta2(z, p, cfg), spec, pole_order=0)
    return [math.factorial(k) * coeffs[k] for k in range(k_max + 1)]


def log_gamma2(p: BarnesParams, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """log Gamma_2(alpha; v, w), i.e. the first s-derivative of zeta_2 at 0."""
    return zeta2_s_derivatives_at_0(p, 1, cfg)[1].real


def polygamma2(k: int, p: BarnesParams, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """k-th derivative in alpha of log Gamma_2(alpha; v, w), k <= 4.

    Central differences with one Richardson refinement over fd_step and
    fd_step/2.
    """
    if not 0 <= k <= 4:
        raise ValueError("k must be in 0..4")
    if k == 0:
        return log_gamma2(p, cfg)
    h = cfg.fd_step
    if not 0 < h < p.alpha / 4:
        raise ValueError("fd_step must lie in (0, alpha/4)")

    def f(x):
        return log_gamma2(BarnesParams(x, p.v, p.w), cfg)

    value, _ = central_difference(f, p.alpha, h, order=k)
    return float(value)
