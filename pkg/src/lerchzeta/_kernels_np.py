"""Pure-numpy implementations of the hot numeric primitives.

Mirror of _kernels_nb; keep the formulas literally identical so the two
backends agree to rounding.
"""

from __future__ import annotations

import numpy as np

TWO_PI_I = 2j * np.pi


def series_sum(x: complex, s: complex, t: complex, n0: int, n1: int) -> complex:
    """sum_{n=n0}^{n1-1} (n+x)^(-s) exp(2 pi i t n), principal powers."""
    n = np.arange(n0, n1, dtype=np.float64)
    return complex(np.sum(np.exp(-s * np.log(n + x) + (TWO_PI_I * t) * n)))


def lerch_kernel_values(u: np.ndarray, x: complex, coefs: np.ndarray,
                        pcoefs: np.ndarray) -> np.ndarray:
    """m-th derivative of exp(2 pi i u x)/(1 - exp(2 pi i u)) at points u.

    coefs[j] = C(m,j) (2 pi i x)^(m-j) (2 pi i)^j and pcoefs[j, :j+1] holds
    the polynomial P_j with (q d/dq)^j [1/(1-q)] = P_j(q)/(1-q)^(j+1).
    """
    m = coefs.shape[0] - 1
    q = np.exp(TWO_PI_I * u)
    e = np.exp(TWO_PI_I * x * u)
    omq = 1.0 - q
    acc = np.zeros(u.shape[0], np.complex128)
    dpow = omq.copy()
    for j in range(m + 1):
        pj = np.zeros(u.shape[0], np.complex128)
        for c in range(j, -1, -1):
            pj = pj * q + pcoefs[j, c]
        acc += coefs[j] * pj / dpow
        dpow *= omq
    return e * acc


def exp_sum_values(u: np.ndarray, ks: np.ndarray, cs: np.ndarray) -> np.ndarray:
    """sum_j cs[j] exp(ks[j] * u) at points u."""
    return np.exp(u[:, None] * ks[None, :]) @ cs


def weight_values(v: np.ndarray, sm1: complex) -> np.ndarray:
    """v**sm1 for strictly positive real v (sm1 = sigma - 1, complex)."""
    return np.exp(sm1 * np.log(v)).astype(np.complex128)


def power_values(z: np.ndarray, expo: complex) -> np.ndarray:
    """Principal z**expo for complex z off the cut (validated by caller)."""
    return np.exp(expo * np.log(z))
