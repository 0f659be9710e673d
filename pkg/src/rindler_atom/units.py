"""Physical constants and the handful of unit conversions the package needs.

Internally everything is Hartree atomic units (m = e = hbar = 1, lengths in
Bohr radii, energies in Hartree).  The acceleration of the frame is always
carried as the dimensionless product ``epsilon = a * a0 / c**2``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class UnitContext:
    """Constants used for every conversion in the package.

    Values are CODATA 2018 except the Bohr radius, which is kept at the
    5.2917721067e-11 m figure the tables were computed with.
    """

    alpha: float = 7.2973525693e-3
    mc2_eV: float = 510998.95
    a0_m: float = 5.2917721067e-11
    hartree_eV: float = 27.211386245988
    c_si: float = 299792458.0
    hbar_eVs: float = 6.582119569e-16

    @property
    def atomic_time_s(self) -> float:
        """hbar / E_h in seconds."""
        return self.hbar_eVs / self.hartree_eV

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


DEFAULT_CONTEXT = UnitContext()


@dataclass(frozen=True)
class AccelerationParam:
    """Dimensionless acceleration ``epsilon = a a0`` (hbar = c = 1)."""

    epsilon: float

    def __post_init__(self):
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise ValueError(f"epsilon must be finite and >= 0, got {self.epsilon!r}")

    def __float__(self) -> float:
        return float(self.epsilon)


def _eps_value(eps) -> float:
    return float(eps.epsilon) if isinstance(eps, AccelerationParam) else float(eps)


def eps_from_si(a_si: float, ctx: UnitContext = DEFAULT_CONTEXT) -> AccelerationParam:
    """Convert an acceleration in m/s^2 to ``epsilon = a a0 / c^2``."""
    if not a_si >= 0:
        raise ValueError(f"acceleration must be >= 0, got {a_si!r}")
    return AccelerationParam(a_si * ctx.a0_m / ctx.c_si**2)


def si_from_eps(eps, ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Inverse of :func:`eps_from_si`; accepts a float or an AccelerationParam."""
    return _eps_value(eps) * ctx.c_si**2 / ctx.a0_m


_ENERGY_UNITS = {
    "hartree": "hartree_eV",
    "ev": None,
    "rest-mass": "mc2_eV",
    "rest-mass-units": "mc2_eV",
    "mc2": "mc2_eV",
}


def _ev_per_unit(unit: str, ctx: UnitContext) -> float:
    key = unit.strip().lower()
    if key not in _ENERGY_UNITS:
        raise ValueError(f"unknown energy unit {unit!r}; expected one of hartree, eV, rest-mass-units")
    attr = _ENERGY_UNITS[key]
    return 1.0 if attr is None else getattr(ctx, attr)


def energy_convert(value: float, from_unit: str, to_unit: str,
                   ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Convert an energy between ``hartree``, ``eV`` and ``rest-mass-units``."""
    src = _ev_per_unit(from_unit, ctx)
    dst = _ev_per_unit(to_unit, ctx)
    if src == dst:
        return value
    return value * src / dst
