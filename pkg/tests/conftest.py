"""Shared frozen reference constants and brute-force oracles.

All expected values here were computed by routes independent of the
package (closed forms, high-precision library values, or direct
truncated summation) and then frozen.
"""

import numpy as np
import pytest

from barneszeta import BarnesParams

# Classical constants (frozen from independent high-precision sources).
EULER = 0.5772156649015329
ZETA2 = 1.6449340668482264      # pi^2/6
ZETA3 = 1.2020569031595943
ZETA4 = 1.0823232337111382      # pi^4/90
ZETA_PRIME_0 = -0.9189385332046727    # -log(2 pi)/2
ZETA_PRIME_M1 = -0.16542114370045092

# Raw Laurent coefficients of zeta(s) about s = 1:
#   g_k = (-1)^k / k! * (classical Stieltjes gamma_k).
RAW_STIELTJES_1 = (
    0.5772156649015329,          # g_0 = Euler's constant
    0.0728158454836767,          # g_1 = -gamma_1
    -0.0048451815964361592,      # g_2 = gamma_2 / 2
    -0.00034230573671722428,     # g_3 = -gamma_3 / 6
    9.6890419394470833e-05,      # g_4 = gamma_4 / 24
)

# gamma_0(1/2) = -psi(1/2) = Euler + 2 log 2 (raw == classical at k = 0).
GAMMA0_HALF = 1.9635100260214235

# I2 = int int (x-[x])(y-[y])/(1+x+y)^4, pinned by the closed loop
# -2 + pi^2/3 - 2(1-Euler) + 6*I2 = Euler (alpha=v=w=1 reduction).
I2_1114 = 0.022152700233669074


def brute_frac_1d(a, c, s, t_max, h):
    """Midpoint-rule oracle for int_0^inf (x-[x]) (a+cx)^(-s) dx.

    The tail beyond t_max is closed with the sawtooth mean value 1/2 and
    the first Bernoulli correction -B_2/2! f(t_max); the next omitted
    term is O((a+c*t_max)^(-s-2))."""
    x = np.arange(0.0, t_max, h) + h / 2.0
    head = float(np.sum((x - np.floor(x)) * (a + c * x) ** (-s)) * h)
    edge = a + c * t_max
    return (head + 0.5 * edge ** (1.0 - s) / (c * (s - 1.0))
            - edge ** (-s) / 12.0)


def brute_frac_2d(alpha, v, w, s, t_max, h):
    """Midpoint-rule oracle for the 2-D sawtooth integral (chunked)."""
    x = np.arange(0.0, t_max, h) + h / 2.0
    fx = x - np.floor(x)
    total = 0.0
    chunk = max(1, 2_000_000 // len(x))
    for lo in range(0, len(x), chunk):
        y = x[lo:lo + chunk]
        fy = fx[lo:lo + chunk]
        grid = (alpha + v * y[:, None] + w * x[None, :]) ** (-s)
        total += float(fy @ grid @ fx)
    return total * h * h


def brute_zeta2(s, p, m_max):
    """Chunked truncated double sum, written independently of the package."""
    n = np.arange(m_max + 1)
    total = 0.0j
    chunk = max(1, 2_000_000 // (m_max + 1))
    for lo in range(0, m_max + 1, chunk):
        m = np.arange(lo, min(lo + chunk, m_max + 1))
        total += np.sum((p.alpha + p.v * m[:, None] + p.w * n[None, :])
                        ** (-complex(s)))
    return complex(total)


@pytest.fixture(scope="session")
def fixed_suite():
    return [
        BarnesParams(1.0, 1.0, 1.0),
        BarnesParams(0.5, 1.0, 1.0),
        BarnesParams(1.0, 1.0, 2.0),
        BarnesParams(2.0, 3.0, 1.0),
        BarnesParams(0.7, 1.3, 2.1),
    ]
