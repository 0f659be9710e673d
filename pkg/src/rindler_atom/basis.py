"""Flat-space hydrogen eigenstates and their dipole-type matrix elements.

Conventions
-----------
* Atomic units throughout: lengths in a0, energies in Hartree unless a
  function says eV.
* ``R_nl(r) = N rho^l exp(-rho/2) L^{2l+1}_{n-l-1}(rho)``, ``rho = 2r/n``, with
  ``N = sqrt((2/n)^3 (n-l-1)! / (2n (n+l)!))`` and the Laguerre convention
  ``L^k_j(0) = binom(j+k, j)``.  This makes ``int R^2 r^2 dr = 1`` and every
  R_nl positive near the origin.
* Spherical harmonics carry the Condon-Shortley phase, so that
  ``phi_{21+-1} = -+ (1/64 pi)^{1/2} r exp(-r/2) sin(theta) exp(+-i phi)``.

Angular integrals are done with the cos(theta) ladder and are exact; radial
integrals use Gauss-Laguerre quadrature, which is exact for the
polynomial-times-exponential integrands that appear here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_laguerre

from . import kernels
from .units import DEFAULT_CONTEXT, UnitContext

N_MAX = 64
L_MAX_HARMONIC = 8
QUADRATURE_ORDER = 200


@dataclass(frozen=True, order=True)
class QuantumNumbers:
    n: int
    l: int
    m: int = 0

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        if not 0 <= self.l <= self.n - 1:
            raise ValueError(f"need 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if not -self.l <= self.m <= self.l:
            raise ValueError(f"need |m| <= l, got l={self.l}, m={self.m}")

    @property
    def label(self) -> str:
        return f"{self.n}{self.l}{self.m}"


def as_qn(state) -> QuantumNumbers:
    """Accept a QuantumNumbers or an ``(n, l, m)`` tuple."""
    if isinstance(state, QuantumNumbers):
        return state
    return QuantumNumbers(*(int(v) for v in state))


@dataclass(frozen=True)
class Point3:
    """Cartesian point in units of a0."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.y, self.z)):
            raise ValueError(f"non-finite coordinate in {self!r}")

    def spherical(self) -> tuple[float, float, float]:
        return cartesian_to_spherical(self.x, self.y, self.z)


def cartesian_to_spherical(x, y, z):
    """Return ``(r, theta, phi)`` with theta measured from +z."""
    x, y, z = (np.asarray(v, dtype=float) for v in (x, y, z))
    r = np.sqrt(x * x + y * y + z * z)
    theta = np.arctan2(np.hypot(x, y), z)
    phi = np.arctan2(y, x)
    return r, theta, phi


@dataclass(frozen=True)
class BasisState:
    """A normalized hydrogen eigenfunction phi_nlm."""

    qn: QuantumNumbers

    @property
    def normalization(self) -> float:
        return kernels.radial_norm(self.qn.n, self.qn.l)

    def __call__(self, x, y, z):
        return evaluate_basis_state(self.qn, x, y, z)


# --- special functions -----------------------------------------------------

def assoc_laguerre(k: int, j: int, x):
    """Generalized Laguerre polynomial L^k_j(x), ``L^k_j(0) = binom(j+k, j)``."""
    if k < 0 or j < 0:
        raise ValueError("k and j must be non-negative")
    if j > N_MAX:
        raise ValueError(f"degree {j} exceeds the supported maximum {N_MAX}")
    out = kernels.laguerre(int(k), int(j), x)
    return float(out) if np.ndim(x) == 0 else out


def _check_nl(n: int, l: int):
    QuantumNumbers(n, l, 0)
    if n > N_MAX:
        raise ValueError(f"n = {n} exceeds the supported maximum {N_MAX}")


def radial_wavefunction(n: int, l: int, r):
    """Normalized radial function R_nl(r) in a0^(-3/2)."""
    _check_nl(n, l)
    if np.any(np.asarray(r) < 0):
        raise ValueError("r must be non-negative")
    out = kernels.radial_values(int(n), int(l), r)
    return float(out) if np.ndim(r) == 0 else out


def _assoc_legendre(l: int, m: int, x):
    """P_l^m(x) for m >= 0, including the Condon-Shortley (-1)^m."""
    x = np.asarray(x, dtype=float)
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    pmm = np.ones_like(x)
    for i in range(1, m + 1):
        pmm = -pmm * (2 * i - 1) * s
    if l == m:
        return pmm
    pm1 = x * (2 * m + 1) * pmm
    for ll in range(m + 2, l + 1):
        pmm, pm1 = pm1, ((2 * ll - 1) * x * pm1 - (ll + m - 1) * pmm) / (ll - m)
    return pm1


def spherical_harmonic(l: int, m: int, theta, phi):
    """Orthonormal Y_l^m(theta, phi) with the Condon-Shortley phase."""
    if not 0 <= abs(m) <= l <= L_MAX_HARMONIC:
        raise ValueError(f"need |m| <= l <= {L_MAX_HARMONIC}, got l={l}, m={m}")
    am = abs(m)
    norm = math.sqrt((2 * l + 1) / (4 * math.pi)
                     * math.exp(math.lgamma(l - am + 1) - math.lgamma(l + am + 1)))
    y = norm * _assoc_legendre(l, am, np.cos(theta)) * np.exp(1j * am * np.asarray(phi, dtype=float))
    if m < 0:
        y = (-1) ** am * np.conj(y)
    return complex(y) if np.ndim(y) == 0 else y


def eigen_energy(n: int, ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """E_n^0 in eV, rest energy included."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return -ctx.hartree_eV / (2.0 * n * n) + ctx.mc2_eV


def binding_energy_hartree(n: int) -> float:
    """Non-relativistic E_n^0 - m in Hartree."""
    return -0.5 / (n * n)


def evaluate_basis_state(qn, x, y=None, z=None):
    """phi^0_nlm at Cartesian point(s), in a0^(-3/2).

    ``x`` may be a :class:`Point3`, in which case ``y`` and ``z`` are omitted.
    """
    qn = as_qn(qn)
    if isinstance(x, Point3):
        x, y, z = x.x, x.y, x.z
    r, theta, phi = cartesian_to_spherical(x, y, z)
    val = radial_wavefunction(qn.n, qn.l, r) * spherical_harmonic(qn.l, qn.m, theta, phi)
    # R_nl(0) = 0 for l > 0, so the arbitrary angle at the origin is harmless.
    return complex(val) if np.ndim(val) == 0 else val


# --- radial quadrature ------------------------------------------------------

@lru_cache(maxsize=None)
def _gauss_laguerre(order: int = QUADRATURE_ORDER):
    t, w = roots_laguerre(order)
    keep = w > 0
    return t[keep], w[keep]


def _poly_value(n: int, l: int, r):
    """R_nl(r) * exp(r/n)."""
    rho = 2.0 * r / n
    return kernels.radial_norm(n, l) * rho**l * kernels.laguerre(2 * l + 1, n - l - 1, rho)


def _poly_lower(n: int, l: int, r):
    """(dR/dr - l R / r) * exp(r/n); uses dL^k_j/dx = -L^{k+1}_{j-1}."""
    rho = 2.0 * r / n
    j = n - l - 1
    lag = kernels.laguerre(2 * l + 1, j, rho)
    if j > 0:
        lag = lag + 2.0 * kernels.laguerre(2 * l + 2, j - 1, rho)
    return -kernels.radial_norm(n, l) / n * rho**l * lag


def _poly_upper(n: int, l: int, r):
    """(dR/dr + (l+1) R / r) * exp(r/n), valid for l >= 1."""
    rho = 2.0 * r / n
    r_over = kernels.radial_norm(n, l) * (2.0 / n) * rho ** (l - 1) \
        * kernels.laguerre(2 * l + 1, n - l - 1, rho)
    return _poly_lower(n, l, r) + (2 * l + 1) * r_over


def _integrate(fa, fb, decay: float, power: int) -> float:
    t, w = _gauss_laguerre()
    r = t / decay
    vals = fa(r) * fb(r) * r**power
    return math.fsum(w * vals) / decay


def radial_integral(na: int, la: int, nb: int, lb: int, power: int = 2) -> float:
    """int_0^inf R_{na la}(r) R_{nb lb}(r) r^power dr."""
    _check_nl(na, la)
    _check_nl(nb, lb)
    return _integrate(lambda r: _poly_value(na, la, r), lambda r: _poly_value(nb, lb, r),
                      1.0 / na + 1.0 / nb, power)


def _radial_derivative_integral(bra: QuantumNumbers, ket: QuantumNumbers, branch: str) -> float:
    poly = _poly_lower if branch == "lower" else _poly_upper
    return _integrate(lambda r: _poly_value(bra.n, bra.l, r), lambda r: poly(ket.n, ket.l, r),
                      1.0 / bra.n + 1.0 / ket.n, 2)


# --- angular ladder ---------------------------------------------------------

def cos_ladder(l: int, m: int, l_out: int) -> float:
    """<l_out, m| cos(theta) |l, m>, nonzero only for l_out = l +- 1."""
    if l_out == l + 1:
        return math.sqrt(((l + 1) ** 2 - m * m) / ((2 * l + 1) * (2 * l + 3)))
    if l_out == l - 1 and l >= 1:
        return math.sqrt((l * l - m * m) / ((2 * l - 1) * (2 * l + 1)))
    return 0.0


def _dipole_allowed(bra: QuantumNumbers, ket: QuantumNumbers) -> bool:
    return bra.m == ket.m and abs(bra.l - ket.l) == 1


def _check_range(*states: QuantumNumbers):
    for s in states:
        if s.n > N_MAX:
            raise ValueError(f"n = {s.n} exceeds the supported maximum {N_MAX}")


def overlap(bra, ket) -> float:
    """<bra|ket> with the radial part by quadrature."""
    bra, ket = as_qn(bra), as_qn(ket)
    _check_range(bra, ket)
    if bra.l != ket.l or bra.m != ket.m:
        return 0.0
    return radial_integral(bra.n, bra.l, ket.n, ket.l, 2)


def z_matrix_element(bra, ket) -> float:
    """<bra| z |ket> in a0."""
    bra, ket = as_qn(bra), as_qn(ket)
    _check_range(bra, ket)
    if not _dipole_allowed(bra, ket):
        return 0.0
    return cos_ladder(ket.l, ket.m, bra.l) * radial_integral(bra.n, bra.l, ket.n, ket.l, 3)


def z_over_r_matrix_element(bra, ket) -> float:
    """<bra| z/r |ket> (dimensionless); equals -<bra| z V |ket> for V = -1/r."""
    bra, ket = as_qn(bra), as_qn(ket)
    _check_range(bra, ket)
    if not _dipole_allowed(bra, ket):
        return 0.0
    return cos_ladder(ket.l, ket.m, bra.l) * radial_integral(bra.n, bra.l, ket.n, ket.l, 2)


def dz_matrix_element(bra, ket) -> float:
    """<bra| d/dz |ket> in 1/a0.

    Uses the gradient formula
    d/dz (f Y_lm) = A_lm (f' - l f/r) Y_{l+1,m} + B_lm (f' + (l+1) f/r) Y_{l-1,m}
    with A, B the same coefficients as the cos(theta) ladder.
    """
    bra, ket = as_qn(bra), as_qn(ket)
    _check_range(bra, ket)
    if not _dipole_allowed(bra, ket):
        return 0.0
    ang = cos_ladder(ket.l, ket.m, bra.l)
    branch = "lower" if bra.l == ket.l + 1 else "upper"
    return ang * _radial_derivative_integral(bra, ket, branch)


def states_up_to(n_max: int):
    """All (n, l, m) with n <= n_max in (n, l, m) ascending order."""
    return [QuantumNumbers(n, l, m) for n in range(1, n_max + 1)
            for l in range(n) for m in range(-l, l + 1)]
