"""Pure numpy versions of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the compiled kernels are tested against.  Signatures match
``_kernels.pyx`` exactly.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def laguerre(k: int, j: int, x) -> np.ndarray:
    """Generalized Laguerre L^k_j(x) by the forward three-term recurrence in j."""
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if j == 0:
        return prev
    cur = 1.0 + k - x
    for i in range(1, j):
        prev, cur = cur, ((2 * i + 1 + k - x) * cur - (i + k) * prev) / (i + 1)
    return cur


def radial_norm(n: int, l: int) -> float:
    # sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!))
    return math.sqrt((2.0 / n) ** 3 / (2.0 * n)
                     * math.exp(math.lgamma(n - l) - math.lgamma(n + l + 1)))


def radial_values(n: int, l: int, r) -> np.ndarray:
    """Unit-normalized hydrogen radial function R_nl(r), r in Bohr radii."""
    r = np.asarray(r, dtype=float)
    rho = 2.0 * r / n
    return radial_norm(n, l) * np.exp(-0.5 * rho) * rho**l * laguerre(2 * l + 1, n - l - 1, rho)


def legendre(l: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if l == 0:
        return prev
    cur = x.copy()
    for i in range(1, l):
        prev, cur = cur, ((2 * i + 1) * x * cur - i * prev) / (i + 1)
    return cur


def plane_density(ns, ls, coeffs, xs, zs) -> np.ndarray:
    """|sum_k c_k R_{n_k l_k}(r) Y_{l_k}^0(theta)|^2 on the y = 0 plane.

    Returns an array of shape ``(len(zs), len(xs))``; row i is ``zs[i]``.
    """
    xs = np.asarray(xs, dtype=float)
    zs = np.asarray(zs, dtype=float)
    X, Z = np.meshgrid(xs, zs)
    r = np.hypot(X, Z)
    with np.errstate(invalid="ignore", divide="ignore"):
        cos_t = np.where(r > 0, Z / np.where(r > 0, r, 1.0), 1.0)
    psi = np.zeros_like(r)
    for n, l, c in zip(ns, ls, coeffs):
        ylm = math.sqrt((2 * l + 1) / (4 * math.pi)) * legendre(int(l), cos_t)
        psi += c * radial_values(int(n), int(l), r) * ylm
    return psi * psi
