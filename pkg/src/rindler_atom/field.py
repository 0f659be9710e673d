"""Static fields seen in the uniformly accelerated frame.

* :func:`whittaker_at` -- potential A_t of a point charge held at rest at the
  origin of the accelerated frame.
* :func:`external_bt` -- the compensating potential that keeps a test
  electron at rest, gauged to vanish at z = 0.
* :func:`axial_effective_potential` -- the on-axis Coulomb plus linear
  potential felt by an electron that is *not* held by the external field,
  with its barrier located analytically and checked numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .units import DEFAULT_CONTEXT, UnitContext, _eps_value


class FieldDomainError(ValueError):
    """Evaluation point outside the region where the static potential is defined."""


@dataclass(frozen=True)
class FieldParams:
    eps: float
    q: float = 1.0

    def __post_init__(self):
        e = _eps_value(self.eps)
        if not (math.isfinite(e) and e >= 0):
            raise ValueError(f"epsilon must be finite and >= 0, got {self.eps!r}")
        object.__setattr__(self, "eps", e)


def _wedge_argument(eps, x, y, z):
    r2 = x * x + y * y + z * z
    return 1.0 + eps * z + 0.25 * eps * eps * r2


def whittaker_grid(fp: FieldParams, x, y, z) -> np.ndarray:
    """Vectorized A_t; returns NaN at the origin and outside the static patch."""
    x, y, z = (np.asarray(v, dtype=float) for v in (x, y, z))
    eps = fp.eps
    r2 = x * x + y * y + z * z
    arg = _wedge_argument(eps, x, y, z)
    ok = (r2 > 0) & (arg > 0)
    r = np.sqrt(np.where(ok, r2, 1.0))
    num = 1.0 + eps * z + 0.5 * eps * eps * r2
    val = fp.q / r * num / np.sqrt(np.where(ok, arg, 1.0))
    return np.where(ok, val, np.nan)


def whittaker_at(p, fp: FieldParams) -> float:
    """A_t at point ``p`` (a0 units) in atomic units per unit test charge.

    ``A_t = (q/r) (1 + a z + a^2 r^2 / 2) / sqrt(1 + a z + a^2 r^2 / 4)`` with
    ``a = epsilon / a0``.  The spatial components vanish identically.
    """
    x, y, z = (p.x, p.y, p.z) if hasattr(p, "x") else p
    if x == 0 and y == 0 and z == 0:
        raise FieldDomainError("potential is singular at the source charge")
    if _wedge_argument(fp.eps, x, y, z) <= 0:
        raise FieldDomainError(f"point {(x, y, z)} lies outside the static patch for epsilon={fp.eps}")
    return float(whittaker_grid(fp, x, y, z))


def external_bt(z, eps, ctx: UnitContext = DEFAULT_CONTEXT):
    """Compensating potential energy -m a z in eV, z in a0."""
    val = -ctx.mc2_eV * _eps_value(eps) * np.asarray(z, dtype=float)
    return float(val) if np.ndim(z) == 0 else val


def axial_potential(z, eps, ctx: UnitContext = DEFAULT_CONTEXT):
    """V(z) - m in eV on the z axis: Coulomb attraction plus m a z."""
    z = np.asarray(z, dtype=float)
    return -ctx.hartree_eV / np.abs(z) + ctx.mc2_eV * _eps_value(eps) * z


def barrier_location(eps, ctx: UnitContext = DEFAULT_CONTEXT) -> float | None:
    """z* in a0 where dV/dz = 0 on the negative axis; None without acceleration."""
    e = _eps_value(eps)
    if e == 0:
        return None
    return -math.sqrt(ctx.hartree_eV / (ctx.mc2_eV * e))


def barrier_height(eps, ctx: UnitContext = DEFAULT_CONTEXT) -> float | None:
    """V(z*) - m in eV, i.e. -2 sqrt(E_h m c^2 epsilon)."""
    e = _eps_value(eps)
    if e == 0:
        return None
    return -2.0 * math.sqrt(ctx.hartree_eV * ctx.mc2_eV * e)


@dataclass
class AxialPotentialProfile:
    epsilon: float
    z_samples: np.ndarray
    v_samples: np.ndarray
    z_star: float | None
    v_max: float | None
    bound_possible: bool
    rest_energy_eV: float
    checks: dict = field(default_factory=dict)

    def sidecar(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "z_star_a0": self.z_star,
            "v_max_eV": self.v_max,
            "bound_possible": self.bound_possible,
        }


def _profile_grid(window, resolution):
    lo, hi = window
    step = (hi - lo) / resolution
    # cell centres; with a symmetric window and even resolution z = 0 is never hit
    return lo + (np.arange(resolution) + 0.5) * step


def axial_effective_potential(eps, ctx: UnitContext = DEFAULT_CONTEXT,
                              window: tuple[float, float] | None = None,
                              resolution: int = 512) -> AxialPotentialProfile:
    """Sample V(z) - m along the axis and locate the barrier on z < 0.

    The rest energy m is reported separately, not folded into the samples.
    The closed-form barrier is cross-checked two ways: golden-section search
    on V (limited to ~sqrt(machine eps) in z by the flat maximum) and a
    bracketing root of dV/dz.
    """
    e = _eps_value(eps)
    z_star = barrier_location(e, ctx)
    if window is None:
        half = 3.0 * abs(z_star) if z_star is not None else 8.0
        window = (-half, half)
    lo, hi = window
    if not lo < 0:
        raise ValueError("window must extend to negative z")
    if resolution < 16:
        raise ValueError("resolution must be >= 16")
    z = _profile_grid(window, resolution)
    z = z[z != 0.0]
    v = axial_potential(z, e, ctx)
    ground = -ctx.hartree_eV / 2.0
    checks: dict = {}
    if z_star is None:
        return AxialPotentialProfile(e, z, v, None, None, True, ctx.mc2_eV, checks)

    v_max = barrier_height(e, ctx)
    neg = z < 0
    i = int(np.argmax(np.where(neg, v, -np.inf)))
    if 0 < i < len(z) - 1 and z[i + 1] < 0:
        f = lambda s: -float(axial_potential(s, e, ctx))
        gold = minimize_scalar(f, bracket=(z[i - 1], z[i], z[i + 1]), method="golden",
                               options={"xtol": 1e-12})
        checks["golden_z_star"] = float(gold.x)
    dv = lambda s: -ctx.hartree_eV / (s * s) + ctx.mc2_eV * e  # dV/dz on s < 0
    checks["root_z_star"] = brentq(dv, 2.0 * z_star, 0.5 * z_star, xtol=1e-14, rtol=1e-15)
    checks["sampled_z_star"] = float(z[i])
    return AxialPotentialProfile(e, z, v, z_star, v_max, bool(v_max > ground), ctx.mc2_eV, checks)
