"""Shared numerical kernels.

Bernoulli numbers, quadrature of sawtooth-kernel integrals, sequence
extrapolation with log-power remainder models, and circle-contour
extraction of Taylor/Laurent coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import AccuracyError, DomainError

__all__ = [
    "ContourSpec",
    "QuadratureSpec",
    "bernoulli_numbers",
    "frac_part_integral_1d",
    "frac_part_integral_2d",
    "richardson_extrapolate",
    "e_algorithm",
    "contour_coefficients",
    "contour_coefficients_with_error",
    "central_difference",
]

_BERNOULLI_MAX = 64


@dataclass(frozen=True)
class ContourSpec:
    """Circle for Cauchy coefficient extraction.

    ``nodes`` must be a power of two with at least 4*(max_order+1) points so
    the wanted coefficients are clear of trapezoid aliasing.  The disc must
    not contain singularities other than (possibly) a pole at the center;
    that is the caller's responsibility.
    """

    center: complex
    radius: float
    nodes: int = 256
    max_order: int = 12

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.max_order < 0:
            raise ValueError("max_order must be non-negative")
        if self.nodes < 4 * (self.max_order + 1):
            raise ValueError("nodes must be >= 4*(max_order+1)")
        if self.nodes & (self.nodes - 1):
            raise ValueError("nodes must be a power of two")


@dataclass(frozen=True)
class QuadratureSpec:
    """Knobs for the sawtooth-kernel integrals.

    ``cell_order`` Gauss-Legendre points per unit cell, a hard cap on the
    number of cells, and the absolute tolerance allotted to the analytic
    tail beyond the last cell.
    """

    cell_order: int = 12
    max_cells: int = 200_000
    tail_tol: float = 1e-10

    def __post_init__(self):
        if self.cell_order < 4:
            raise ValueError("cell_order must be >= 4")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")
        if self.max_cells < 1:
            raise ValueError("max_cells must be >= 1")


def bernoulli_numbers(n_max: int) -> list[float]:
    """Bernoulli numbers B_0..B_n_max with the convention B_1 = -1/2.

    Computed exactly in rational arithmetic via the defining recurrence
    sum_{j<=n} C(n+1,j) B_j = 0, then rounded once to float.
    """
    if not 0 <= n_max <= _BERNOULLI_MAX:
        raise ValueError(f"n_max must be in 0..{_BERNOULLI_MAX}")
    bs = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(n):
            acc += math.comb(n + 1, j) * bs[j]
        bs.append(-acc / (n + 1))
    return [float(b) for b in bs]


# Frozen even-index Bernoulli values B_2, B_4, ... used by the tail formulas.
_B_EVEN = bernoulli_numbers(16)[2::2]


def _poch(s, m: int):
    """Rising factorial s(s+1)...(s+m-1); (s)_0 = 1.  Broadcasts over s."""
    out = np.ones_like(np.asarray(s, dtype=complex))
    for i in range(m):
        out = out * (s + i)
    return out


def _gauss_cell(order: int):
    """Gauss-Legendre nodes/weights mapped to the unit interval (0, 1)."""
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


_TAIL_TERMS = 3  # Euler-Maclaurin correction terms kept in the tail


def _frac1d_tail(a, c, s, n_cells):
    """Tail integral_{N}^{inf} (x-[x]) (a+cx)^(-s) dx, N = n_cells.

    Sawtooth mean plus Euler-Maclaurin corrections in the periodic part;
    valid because the integrand factor (a+cx)^(-s) is smooth on [N, inf).
    """
    base = a + c * n_cells
    tail = 0.5 * base ** (1.0 - s) / (c * (s - 1.0))
    for j in range(1, _TAIL_TERMS + 1):
        coef = _B_EVEN[j - 1] / math.factorial(2 * j)
        tail = tail - coef * c ** (2 * j - 2) * _poch(s, 2 * j - 2) * base ** (-s - 2 * j + 2)
    return tail


def _frac1d_tail_bound(a_min, c, s, n_cells):
    """Magnitude of the first omitted tail correction term."""
    j = _TAIL_TERMS + 1
    coef = abs(_B_EVEN[j - 1]) / math.factorial(2 * j)
    sig = np.real(s)
    return (
        coef
        * float(np.max(np.abs(_poch(s, 2 * j - 2))))
        * c ** (2 * j - 2)
        * (a_min + c * n_cells) ** (-sig - 2 * j + 2)
    )


def _frac1d_cells_needed(a_min, c, s, tol):
    """Smallest N with the omitted tail term below tol/2."""
    j = _TAIL_TERMS + 1
    coef = abs(_B_EVEN[j - 1]) / math.factorial(2 * j)
    sig = float(np.real(s))
    k = coef * float(np.max(np.abs(_poch(s, 2 * j - 2)))) * c ** (2 * j - 2)
    if k == 0.0:
        return 1
    base = (k / (0.5 * tol)) ** (1.0 / (sig + 2 * j - 2))
    return max(1, int(math.ceil((base - a_min) / c)))


def _frac1d_core(a, c, s, spec: QuadratureSpec):
    """Vectorized integral_0^inf (x-[x]) (a+cx)^(-s) dx over an array of a.

    Returns (values, error_bound).  Caller guarantees Re(s) > 1 and a > 0.
    """
    a = np.asarray(a, dtype=float)
    a_min = float(np.min(a))
    n_cells = _frac1d_cells_needed(a_min, c, s, spec.tail_tol)
    clipped = n_cells > spec.max_cells
    if clipped:
        n_cells = spec.max_cells
    xi, wts = _gauss_cell(spec.cell_order)
    xs = np.arange(n_cells)[:, None] + xi[None, :]          # (cells, q)
    integrand = (a[..., None, None] + c * xs) ** (-s) * xi  # (..., cells, q)
    vals = np.tensordot(integrand, wts, axes=([-1], [0])).sum(axis=-1)
    vals = vals + _frac1d_tail(a, c, s, n_cells)
    err = _frac1d_tail_bound(a_min, c, s, n_cells)
    err += 1e-15 * float(np.max(np.abs(vals))) * math.sqrt(n_cells)
    if clipped and err > spec.tail_tol:
        raise AccuracyError(
            f"tail tolerance {spec.tail_tol:g} not reached within "
            f"{spec.max_cells} cells (achieved {err:g})",
            value=vals, achieved=err,
        )
    return vals, err


def frac_part_integral_1d(a, c, s, spec: QuadratureSpec | None = None,
                          with_error: bool = False):
    """integral_0^inf (x-[x]) (a+cx)^(-s) dx for Re(s) > 1.

    Integrated cell-by-cell over [j, j+1] where the sawtooth is smooth,
    with an Euler-Maclaurin tail beyond the last cell.  ``with_error``
    additionally returns the absolute error bound.
    """
    if spec is None:
        spec = QuadratureSpec()
    s = complex(s)
    if not (a > 0 and c > 0):
        raise ValueError("a and c must be positive")
    if s.real <= 1:
        raise DomainError("frac_part_integral_1d requires Re(s) > 1")
    vals, err = _frac1d_core(np.asarray(a, dtype=float), c, s, spec)
    value = complex(vals)
    return (value, err) if with_error else value


def frac_part_integral_2d(alpha, v, w, s, spec: QuadratureSpec | None = None,
                          with_error: bool = False):
    """integral_0^inf integral_0^inf (x-[x])(y-[y]) (alpha+v*y+w*x)^(-s) dx dy.

    Requires Re(s) > 2.  The inner x-integral is done by the 1-D sawtooth
    machinery; the outer y-integral sees a smooth function of y multiplied
    by the sawtooth, so the same per-cell Gauss rule plus Euler-Maclaurin
    tail applies again.  All y-derivatives of the inner integral reduce to
    further 1-D sawtooth integrals at shifted exponents.
    """
    if spec is None:
        spec = QuadratureSpec()
    s = complex(s)
    if not (alpha > 0 and v > 0 and w > 0):
        raise ValueError("alpha, v, w must be positive")
    if s.real <= 2:
        raise DomainError("frac_part_integral_2d requires Re(s) > 2")
    sig = s.real

    inner_spec = QuadratureSpec(cell_order=spec.cell_order,
                                max_cells=spec.max_cells,
                                tail_tol=spec.tail_tol / 10.0)

    # Outer cell count: first omitted outer Euler-Maclaurin term, with the
    # inner integral at shift 2j-2 bounded by A^(3-sigma-2j)/(w*(sigma+2j-3)).
    j = _TAIL_TERMS + 1
    coef = abs(_B_EVEN[j - 1]) / math.factorial(2 * j)
    k = coef * abs(_poch(s, 2 * j - 2)) * v ** (2 * j - 2) / (w * (sig + 2 * j - 3))
    base = (k / (0.5 * spec.tail_tol)) ** (1.0 / (sig + 2 * j - 3))
    n_cells = max(1, int(math.ceil((base - alpha) / v)))
    if n_cells > spec.max_cells:
        raise AccuracyError(
            f"outer cell budget exhausted ({n_cells} > {spec.max_cells})")

    xi, wts = _gauss_cell(spec.cell_order)
    ys = (np.arange(n_cells)[:, None] + xi[None, :]).ravel()
    inner_vals, inner_err = _frac1d_core(alpha + v * ys, w, s, inner_spec)
    frac = np.tile(xi, n_cells)
    value = np.dot(inner_vals * frac, np.tile(wts, n_cells))

    # Outer tail about y = N: sawtooth mean plus periodic-Bernoulli corrections.
    a_n = alpha + v * n_cells
    half, e0 = _frac1d_core(np.asarray(a_n), w, s - 1.0, inner_spec)
    tail = complex(half) / (2.0 * v * (s - 1.0))
    errs = [e0 / (2.0 * v * abs(s - 1.0))]
    for jj in range(1, _TAIL_TERMS + 1):
        cjj = _B_EVEN[jj - 1] / math.factorial(2 * jj)
        inner, ej = _frac1d_core(np.asarray(a_n), w, s + 2 * jj - 2, inner_spec)
        tail = tail - cjj * _poch(s, 2 * jj - 2) * v ** (2 * jj - 2) * complex(inner)
        errs.append(abs(cjj) * abs(_poch(s, 2 * jj - 2)) * v ** (2 * jj - 2) * ej)
    value = complex(value) + tail

    err = 0.5 * spec.tail_tol + inner_err * 0.5 * n_cells + sum(errs)
    return (value, err) if with_error else value


def richardson_extrapolate(values, model: int):
    """Accelerate a sequence whose remainder decays like log^p(M)/M.

    ``values`` is a sequence of (M, y) samples at increasing (ideally
    geometric) M; ``model`` is the log power p.  Successively eliminates
    the remainder basis log^p(M)/M, ..., 1/M, log^p(M)/M^2, ... with the
    E-algorithm.  Returns (limit, err) where err is the magnitude of the
    last correction.
    """
    if len(values) < 3:
        raise ValueError("need at least 3 samples")
    if model < 0:
        raise ValueError("model power must be non-negative")
    ms = np.array([float(m) for m, _ in values])
    ys = np.array([float(y) for _, y in values])
    if np.any(ms[1:] <= ms[:-1]):
        raise ValueError("M values must be strictly increasing")
    if np.all(ys == ys[0]):
        return float(ys[0]), 0.0

    n = len(ys)
    funcs = []
    b = 1
    while len(funcs) < n - 1:
        for a in range(model, -1, -1):
            funcs.append((a, b))
            if len(funcs) == n - 1:
                break
        b += 1
    g = [np.log(ms) ** a / ms ** b for a, b in funcs]
    return e_algorithm(ys, g)


def e_algorithm(ys, remainder_funcs):
    """Brezinski E-algorithm: eliminate the given remainder basis in order.

    ``remainder_funcs`` are arrays of the basis functions sampled at the
    same points as ``ys``.  Returns (limit, err) with err the size of the
    final correction.
    """
    n = len(ys)
    e = np.asarray(ys, dtype=float)
    g = [np.asarray(gj, dtype=float) for gj in remainder_funcs]
    prev_last = e[-1]
    for k in range(min(n - 1, len(g))):
        gk = g[k]
        denom = gk[1:] - gk[:-1]
        e = (gk[1:] * e[:-1] - gk[:-1] * e[1:]) / denom
        new_g = []
        for j in range(len(g)):
            if j <= k:
                new_g.append(None)
            else:
                gj = g[j]
                new_g.append((gk[1:] * gj[:-1] - gk[:-1] * gj[1:]) / denom)
        g = new_g
        if len(e) > 1:
            prev_last = e[-1]
    limit = float(e[-1])
    err = abs(limit - float(prev_last))
    return limit, err


def contour_coefficients(f, spec: ContourSpec, pole_order: int = 0):
    """Laurent coefficients c_{-pole_order}..c_{max_order} of f about the center.

    Trapezoidal rule on the circle; spectrally accurate when f is analytic
    on the closed disc apart from a pole of order <= pole_order at the
    center.  Deterministic for a fixed spec.
    """
    coeffs, _ = contour_coefficients_with_error(f, spec, pole_order)
    return coeffs


def contour_coefficients_with_error(f, spec: ContourSpec, pole_order: int = 0):
    """Like :func:`contour_coefficients` plus per-coefficient error estimates.

    The estimate is the difference against the half-resolution rule obtained
    from every other node (free: it reuses the same samples).
    """
    if pole_order not in (0, 1):
        raise ValueError("pole_order must be 0 or 1")
    n = spec.nodes
    theta = 2.0 * np.pi * np.arange(n) / n
    z = spec.center + spec.radius * np.exp(1j * theta)
    try:
        samples = np.asarray(f(z), dtype=complex)
        if samples.shape != z.shape:
            raise TypeError
    except TypeError:
        samples = np.array([complex(f(zi)) for zi in z])
    if not np.all(np.isfinite(samples)):
        raise ArithmeticError("non-finite sample on the contour")

    def _extract(vals):
        nn = len(vals)
        fft = np.fft.fft(vals) / nn
        out = []
        for m in range(-pole_order, spec.max_order + 1):
            out.append(fft[m % nn] * spec.radius ** (-m))
        return np.array(out)

    full = _extract(samples)
    half = _extract(samples[::2])
    errs = np.abs(full - half) + 1e-16 * float(np.max(np.abs(samples)))
    return list(full), list(errs)


_CD_STENCILS = {
    # order -> (offsets in units of h, coefficients, h power)
    1: ((-1, 1), (-0.5, 0.5), 1),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0), 2),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5), 3),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0), 4),
}


def central_difference(f, x, h, order=1, refine=True):
    """Central finite-difference derivative of given order, O(h^2) accurate.

    With ``refine`` the stencil is evaluated at h and h/2 and combined by
    one Richardson step (O(h^4)); returns (value, err) with err taken from
    the h vs h/2 discrepancy.
    """
    if order == 0:
        return f(x), 0.0
    if order not in _CD_STENCILS:
        raise ValueError("order must be 0..4")
    offs, coefs, p = _CD_STENCILS[order]

    def stencil(step):
        return sum(c * f(x + o * step) for o, c in zip(offs, coefs)) / step ** p

    d1 = stencil(h)
    if not refine:
        return d1, abs(h) ** 2
    d2 = stencil(h / 2.0)
    return (4.0 * d2 - d1) / 3.0, abs(d2 - d1) / 3.0
