"""Laurent coefficients of the Barnes double zeta-function at s = 2 and
s = 1, by contour extraction, by finite-M limit formulas, and by the
closed integral representation of the constant term at s = 2.

Coefficients are raw Laurent coefficients:

    zeta_2(s) = g_{-1}/(s-c) + sum_{k>=0} g_k (s-c)^k,   c in {1, 2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .barnes import BarnesParams, zeta2
from .config import EvalConfig, DEFAULT_CONFIG
from .errors import ConsistencyError
from .hurwitz import hurwitz_zeta
from .numerics import (
    ContourSpec,
    contour_coefficients_with_error,
    frac_part_integral_1d,
    frac_part_integral_2d,
    richardson_extrapolate,
)

__all__ = [
    "LaurentExpansion",
    "residue_at_2",
    "residue_at_1",
    "laurent_at_2",
    "laurent_at_1",
    "gamma0_at_2_integral",
    "gammak_at_2_limit",
]

_M_CAP = 1e15  # beyond this, log-power cancellation degrades


@dataclass(frozen=True)
class LaurentExpansion:
    """Expansion about one of the two poles.

    gamma_minus1 is the extracted residue; err_minus1 folds in both the
    node-halving estimate and the deviation from the exact closed form.
    """

    center: int
    gamma_minus1: float
    err_minus1: float
    gammas: tuple
    errs: tuple
    method: str

    def __post_init__(self):
        if self.center not in (1, 2):
            raise ValueError("center must be 1 or 2")
        if len(self.gammas) != len(self.errs):
            raise ValueError("gammas and errs must have equal length")

    def evaluate(self, s: complex) -> complex:
        """Reconstruct the expansion at s (principal part included)."""
        ds = s - self.center
        out = self.gamma_minus1 / ds
        for k, g in enumerate(self.gammas):
            out += g * ds ** k
        return out


def residue_at_2(p: BarnesParams) -> float:
    """Exact residue of zeta_2 at s = 2."""
    return 1.0 / (p.v * p.w)


def residue_at_1(p: BarnesParams) -> float:
    """Exact residue of zeta_2 at s = 1."""
    return (p.v + p.w - 2.0 * p.alpha) / (2.0 * p.v * p.w)


def _laurent_contour(p, center, exact_residue, k_max, cfg):
    radius = min(cfg.contour_radius, 0.75)  # keep the other pole outside
    spec = ContourSpec(center=float(center), radius=radius,
                       nodes=cfg.contour_nodes, max_order=k_max)
    coeffs, errs = contour_coefficients_with_error(
        lambda z: zeta2(z, p, cfg), spec, pole_order=1)
    g_m1 = coeffs[0].real
    err_m1 = errs[0] + abs(g_m1 - exact_residue)
    return LaurentExpansion(
        center=center,
        gamma_minus1=g_m1,
        err_minus1=err_m1,
        gammas=tuple(c.real for c in coeffs[1:]),
        errs=tuple(errs[1:]),
        method="contour",
    )


def laurent_at_2(p: BarnesParams, k_max: int,
                 cfg: EvalConfig = DEFAULT_CONFIG) -> LaurentExpansion:
    """Coefficients g_{-1}..g_k_max of zeta_2 about s = 2 (contour route)."""
    if not 0 <= k_max <= 12:
        raise ValueError("k_max must be in 0..12")
    return _laurent_contour(p, 2, residue_at_2(p), k_max, cfg)


def laurent_at_1(p: BarnesParams, k_max: int,
                 cfg: EvalConfig = DEFAULT_CONFIG) -> LaurentExpansion:
    """Coefficients g_{-1}..g_k_max of zeta_2 about s = 1 (contour route)."""
    if not 0 <= k_max <= 12:
        raise ValueError("k_max must be in 0..12")
    return _laurent_contour(p, 1, residue_at_1(p), k_max, cfg)


def gamma0_at_2_integral(p: BarnesParams,
                         cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Constant term at s = 2 via the closed integral representation:

    g_0(2) = -1/alpha^2 - (1+log alpha)/(v w)
             + zeta_H(2, alpha/v)/v^2 + zeta_H(2, alpha/w)/w^2
             - (w/v) I(alpha, w) - (v/w) I(alpha, v)
             + 6 v w J(alpha, v, w)

    with I the 1-D and J the 2-D sawtooth integral at exponents 2 and 4.
    """
    alpha, v, w = p.alpha, p.v, p.w
    quad = cfg.quad
    return float(
        -1.0 / alpha ** 2
        - (1.0 + math.log(alpha)) / (v * w)
        + hurwitz_zeta(2.0, alpha / v, cfg).real / v ** 2
        + hurwitz_zeta(2.0, alpha / w, cfg).real / w ** 2
        - (w / v) * frac_part_integral_1d(alpha, w, 2.0, quad).real
        - (v / w) * frac_part_integral_1d(alpha, v, 2.0, quad).real
        + 6.0 * v * w * frac_part_integral_2d(alpha, v, w, 4.0, quad).real
    )


def _lattice_log_sums(p: BarnesParams, k: int, m_list, power: int = 2):
    """sum_{m,n<=M} log^k(A)/A^power over the square lattice, for each M."""
    alpha, v, w = p.alpha, p.v, p.w
    ms = sorted(m_list)
    m_max = ms[-1]
    n = np.arange(m_max + 1)
    totals = {m: 0.0 for m in ms}
    chunk = max(1, 2_000_000 // (m_max + 1))
    for lo in range(0, m_max + 1, chunk):
        rows = np.arange(lo, min(lo + chunk, m_max + 1))
        grid = alpha + v * rows[:, None] + w * n[None, :]
        vals = np.log(grid) ** k / grid ** power if k else grid ** (-float(power))
        csum = np.cumsum(vals, axis=1)
        for m in ms:
            if m >= lo:
                upto = min(m, rows[-1])
                totals[m] += float(csum[: upto - lo + 1, m].sum())
    return totals


def _counterterm(p: BarnesParams, k: int, m: int) -> float:
    """Divergent part to subtract from the square-lattice log sum.

    Exact square integral of log^k(A)/A^2 over [0,M]^2 (corner-evaluated
    double antiderivative), shifted by the Laurent tail of the infinite
    integral alpha^(2-s)/(vw(s-1)(s-2)) so that the limit is the raw
    Laurent coefficient itself.
    """
    alpha, v, w = p.alpha, p.v, p.w
    la = math.log(alpha)
    lv = math.log(alpha + v * m)
    lw = math.log(alpha + w * m)
    l2 = math.log(alpha + v * m + w * m)
    kfac = math.factorial(k)
    acc = 0.0
    for j in range(k + 1):
        pw = j + 1
        acc -= (kfac / math.factorial(pw)) * (
            la ** pw - lv ** pw - lw ** pw + l2 ** pw)
    acc += kfac * sum(la ** i / math.factorial(i) for i in range(k + 2))
    return acc / (v * w)


def gammak_at_2_limit(p: BarnesParams, k: int, m_list=None,
                      accelerate: bool = True):
    """Finite-M limit-formula value of g_k at s = 2.

    g_k(2) = lim_M (-1)^k/k! [ sum_{m,n<=M} log^k(A)/A^2 - counterterm(M) ],
    A = alpha+m*v+n*w.  Remainder decays like log^(k+1)(M)/M; with
    ``accelerate`` the samples are Richardson-accelerated under that model.
    Returns (value, err).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if m_list is None:
        m_list = [2 ** e for e in range(6, 13)]
    m_list = sorted(int(m) for m in m_list)
    if any(m < 16 for m in m_list):
        raise ValueError("every M must be >= 16")
    m_list = [m for m in m_list
              if p.alpha + (p.v + p.w) * m < _M_CAP] or m_list[:1]

    sums = _lattice_log_sums(p, k, m_list)
    pref = (-1) ** k / math.factorial(k)
    samples = [(m, pref * (sums[m] - _counterterm(p, k, m))) for m in m_list]

    ys = [y for _, y in samples]
    if len(ys) >= 3:
        d1 = abs(ys[-1] - ys[-2])
        d2 = abs(ys[-2] - ys[-3])
        if d1 > 10.0 * d2 and d1 > 1e-6:
            raise ConsistencyError(
                "finite-M samples diverge non-monotonically; "
                f"last corrections {d2:.3g} -> {d1:.3g}")
    if accelerate and len(samples) >= 3:
        return richardson_extrapolate(samples, model=k + 1)
    err = abs(ys[-1] - ys[-2]) if len(ys) > 1 else float("inf")
    return ys[-1], err
