"""Numba-compiled implementations of the hot numeric primitives.

Mirror of _kernels_np; keep the formulas identical so the two backends
agree to rounding.  The one deliberate difference: series_sum compensates
its sequential accumulation (numpy gets the same effect from pairwise
np.sum), because a naive loop drifts by ~N*eps over the ~1e6-term sums
real-t evaluation needs, which would exceed the advertised tail bound.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from numba import njit

TWO_PI = 2.0 * math.pi


@njit(cache=True)
def series_sum(x, s, t, n0, n1):
    w = 2j * math.pi * t
    acc = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for n in range(n0, n1):
        term = cmath.exp(-s * cmath.log(n + x) + w * n) - comp
        tmp = acc + term
        comp = (tmp - acc) - term
        acc = tmp
    return acc


@njit(cache=True)
def lerch_kernel_values(u, x, coefs, pcoefs):
    m = coefs.shape[0] - 1
    out = np.empty(u.shape[0], np.complex128)
    for i in range(u.shape[0]):
        q = cmath.exp(2j * math.pi * u[i])
        e = cmath.exp(2j * math.pi * x * u[i])
        omq = 1.0 - q
        acc = 0.0 + 0.0j
        dpow = omq
        for j in range(m + 1):
            pj = 0.0 + 0.0j
            for c in range(j, -1, -1):
                pj = pj * q + pcoefs[j, c]
            acc += coefs[j] * pj / dpow
            dpow *= omq
        out[i] = e * acc
    return out


@njit(cache=True)
def exp_sum_values(u, ks, cs):
    out = np.empty(u.shape[0], np.complex128)
    for i in range(u.shape[0]):
        acc = 0.0 + 0.0j
        for j in range(ks.shape[0]):
            acc += cs[j] * cmath.exp(ks[j] * u[i])
        out[i] = acc
    return out


@njit(cache=True)
def weight_values(v, sm1):
    out = np.empty(v.shape[0], np.complex128)
    for i in range(v.shape[0]):
        out[i] = cmath.exp(sm1 * math.log(v[i]))
    return out


@njit(cache=True)
def power_values(z, expo):
    out = np.empty(z.shape[0], np.complex128)
    for i in range(z.shape[0]):
        out[i] = cmath.exp(expo * cmath.log(z[i]))
    return out
