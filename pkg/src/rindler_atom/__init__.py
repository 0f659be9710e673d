"""Hydrogen atom in a uniformly accelerated (Rindler) frame."""

from .basis import QuantumNumbers, eigen_energy, evaluate_basis_state
from .field import FieldParams, axial_effective_potential, whittaker_at, whittaker_grid
from .grids import GridSpec, render_density_grid, render_field_contour
from .ionization import IonizationInputs, critical_acceleration, ionization_report
from .kernels import BACKEND
from .perturbation import (DegenerateStateError, HamiltonianSpec, NonPerturbativeError,
                           degenerate_block, expansion_coefficients, matrix_element)
from .units import DEFAULT_CONTEXT, AccelerationParam, UnitContext, eps_from_si, si_from_eps

__version__ = "0.1.0"
