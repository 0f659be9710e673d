"""Sampling densities and potentials on the x-z plane, and writing them out.

Grids are sampled at pixel centres, so an even resolution never lands on the
proton.  Arrays are stored row-major with rows running from +z down to -z
and columns from -x to +x, matching the orientation of the figures
(vertical axis is z).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .field import FieldParams, whittaker_grid
from .perturbation import (DEFAULT_N_MAX, HamiltonianSpec, expansion_coefficients,
                           mixed_state_terms)
from .units import DEFAULT_CONTEXT, UnitContext, _eps_value

STATES = ("ground", "excited-plus", "excited-minus")
AXES = {"plane": "y=0", "rows": "z descending", "columns": "x ascending", "vertical": "z"}


@dataclass(frozen=True)
class GridSpec:
    window_a0: float
    resolution: int = 256

    def __post_init__(self):
        if not (self.window_a0 > 0 and math.isfinite(self.window_a0)):
            raise ValueError(f"window must be a positive half-width, got {self.window_a0!r}")
        if int(self.resolution) != self.resolution or self.resolution < 16:
            raise ValueError(f"resolution must be an integer >= 16, got {self.resolution!r}")

    @property
    def step(self) -> float:
        return 2.0 * self.window_a0 / self.resolution

    @property
    def xs(self) -> np.ndarray:
        return -self.window_a0 + (np.arange(self.resolution) + 0.5) * self.step

    @property
    def zs(self) -> np.ndarray:
        return self.xs[::-1].copy()


@dataclass
class DensityGrid:
    spec: GridSpec
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def centroid(self) -> tuple[float, float]:
        """Density-weighted (x, z) over the plane samples."""
        w = np.nan_to_num(self.values)
        total = w.sum()
        return (float((w * self.spec.xs[None, :]).sum() / total),
                float((w * self.spec.zs[:, None]).sum() / total))

    def normalization_3d(self) -> float:
        """Integral of the density over the solid obtained by rotating the
        window about z, assuming axial symmetry (``pi |x| dx dz`` per pixel)."""
        h = self.spec.step
        return float(math.pi * (self.values * np.abs(self.spec.xs)[None, :]).sum() * h * h)

    def sidecar(self) -> dict:
        return {**self.metadata, "window_a0": self.spec.window_a0,
                "resolution": self.spec.resolution, "axes": AXES,
                "x_a0": self.spec.xs.tolist(), "z_a0": self.spec.zs.tolist()}


def render_density_grid(state: str, spec: HamiltonianSpec, eps, grid: GridSpec,
                        n_max: int = DEFAULT_N_MAX, allow_nonperturbative: bool = False,
                        ctx: UnitContext = DEFAULT_CONTEXT) -> DensityGrid:
    """|phi|^2 in a0^-3 on the x-z plane.

    ``ground`` is the renormalized first-order ground state; the excited
    states are the zeroth-order mixtures phi+- = (phi_200 +- phi_210)/sqrt(2).
    """
    if state not in STATES:
        raise ValueError(f"unknown state {state!r}; expected one of {', '.join(STATES)}")
    e = _eps_value(eps)
    meta = {"state": state, **spec.as_dict(), "epsilon": e, "proton_marker_a0": [0.0, 0.0],
            "units": "a0^-3", "normalization": "unit L2 norm"}
    if state == "ground":
        exp = expansion_coefficients(spec, n_max, ctx).with_epsilon(e, allow_nonperturbative)
        terms = exp.terms()
        meta.update(n_max=n_max, admixture=exp.admixture, perturbative=exp.perturbative,
                    nonperturbative_override=not exp.perturbative,
                    renormalization=exp.norm)
    else:
        terms = mixed_state_terms(state.split("-", 1)[1])
        meta.update(order="zeroth")
    ns, ls, amps = zip(*terms)
    values = kernels.plane_density(np.array(ns), np.array(ls), np.array(amps, dtype=float),
                                   grid.xs, grid.zs)
    return DensityGrid(grid, values, meta)


def render_field_contour(fp: FieldParams, grid: GridSpec) -> DensityGrid:
    """A_t (atomic units per unit charge) on the x-z plane; NaN where undefined."""
    X, Z = np.meshgrid(grid.xs, grid.zs)
    values = whittaker_grid(fp, X, np.zeros_like(X), Z)
    meta = {"kind": "field-contour", "epsilon": fp.eps, "q": fp.q,
            "units": "e/a0 (atomic)", "missing": "nan", "proton_marker_a0": [0.0, 0.0]}
    return DensityGrid(grid, values, meta)


# --- file output ------------------------------------------------------------

def format_float(v: float) -> str:
    return "nan" if v != v else repr(float(v))


def write_matrix_csv(path, values: np.ndarray):
    with open(path, "w", newline="") as fh:
        for row in values:
            fh.write(",".join(format_float(v) for v in row) + "\n")


def write_rows_csv(path, header: list[str], rows):
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_float(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def _jsonable(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if obj != obj else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def write_json(path, obj):
    with open(path, "w") as fh:
        json.dump(_jsonable(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")
