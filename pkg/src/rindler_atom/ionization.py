"""Field-ionization estimates for an electron dragged along by its proton.

The tunneling time is ``tau = (8 m w^2 / pi) exp(2 gamma)`` with suppression
exponent ``gamma = 2 sqrt(2m) V0^(3/2) / (3 m a)``.  Everything is evaluated
in natural units (hbar = c = 1, energies in eV) where an acceleration is the
energy ``hbar a / c``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .field import barrier_height
from .units import DEFAULT_CONTEXT, UnitContext, eps_from_si, si_from_eps

# exp(2 gamma) overflows a double shortly past 2 gamma = 709
MAX_EXPONENT = 700.0


@dataclass(frozen=True)
class IonizationInputs:
    v0_eV: float = 13.605693122994  # E_h / 2
    w_a0: float = 0.5

    def __post_init__(self):
        if not self.v0_eV > 0:
            raise ValueError(f"v0_eV must be > 0, got {self.v0_eV!r}")
        if not self.w_a0 > 0:
            raise ValueError(f"w_a0 must be > 0, got {self.w_a0!r}")


@dataclass(frozen=True)
class IonizationReport:
    a_si: float
    gamma: float
    tau_s: float
    stable: bool
    a_crit_si: float
    barrier_suppression_si: float
    v0_eV: float
    w_a0: float

    def as_dict(self) -> dict:
        return asdict(self)


def _accel_energy(a_si: float, ctx: UnitContext) -> float:
    return ctx.hbar_eVs * a_si / ctx.c_si


def tunneling_gamma(a_si: float, inputs: IonizationInputs = IonizationInputs(),
                    ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    if not a_si > 0:
        raise ValueError(f"acceleration must be > 0, got {a_si!r}")
    m = ctx.mc2_eV
    a = _accel_energy(a_si, ctx)
    return 2.0 * math.sqrt(2.0 * m) * inputs.v0_eV ** 1.5 / (3.0 * m * a)


def tunneling_time(a_si: float, inputs: IonizationInputs = IonizationInputs(),
                   ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """tau in seconds; ``math.inf`` once 2 gamma exceeds MAX_EXPONENT (atom effectively stable).

    ``m w^2 / hbar`` is taken in atomic time units, i.e. ``w_a0^2 * hbar / E_h``.
    """
    two_gamma = 2.0 * tunneling_gamma(a_si, inputs, ctx)
    if two_gamma > MAX_EXPONENT:
        return math.inf
    prefactor = 8.0 * inputs.w_a0 ** 2 / math.pi * ctx.atomic_time_s
    return prefactor * math.exp(two_gamma)


def critical_acceleration(inputs: IonizationInputs = IonizationInputs(),
                          ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Acceleration in m/s^2 at which gamma = 1: ``2 sqrt(2) V0^(3/2) / (3 sqrt(m))``."""
    a = 2.0 * math.sqrt(2.0) * inputs.v0_eV ** 1.5 / (3.0 * math.sqrt(ctx.mc2_eV))
    return a * ctx.c_si / ctx.hbar_eVs


def barrier_suppression_acceleration(inputs: IonizationInputs = IonizationInputs(),
                                     ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Acceleration in m/s^2 at which the axial barrier top drops to -V0.

    ``2 sqrt(E_h m epsilon) = V0``  =>  ``epsilon = V0^2 / (4 E_h m)``.
    """
    eps = inputs.v0_eV ** 2 / (4.0 * ctx.hartree_eV * ctx.mc2_eV)
    return si_from_eps(eps, ctx)


def ionization_report(a_si: float | None = None, inputs: IonizationInputs = IonizationInputs(),
                      ctx: UnitContext = DEFAULT_CONTEXT) -> IonizationReport:
    """Evaluate everything at ``a_si`` (defaults to the critical acceleration)."""
    a_crit = critical_acceleration(inputs, ctx)
    a = a_crit if a_si is None else a_si
    tau = tunneling_time(a, inputs, ctx)
    return IonizationReport(
        a_si=a,
        gamma=tunneling_gamma(a, inputs, ctx),
        tau_s=tau,
        stable=math.isinf(tau),
        a_crit_si=a_crit,
        barrier_suppression_si=barrier_suppression_acceleration(inputs, ctx),
        v0_eV=inputs.v0_eV,
        w_a0=inputs.w_a0,
    )


def barrier_height_at(a_si: float, ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Axial barrier top V_max - m in eV for an acceleration in m/s^2."""
    return barrier_height(eps_from_si(a_si, ctx), ctx)
