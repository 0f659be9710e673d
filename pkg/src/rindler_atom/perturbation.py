"""First-order perturbation theory for the accelerated hydrogen atom.

Two perturbations are supported (energies per unit epsilon = a a0):

``gravity``
    Electron held only by the proton.  ``H1 = -z lap/2m - d_z/2m + m z + (z/2) qe/r``.
``comoving``
    Electron also held by the external field, which removes the ``m z`` term.

and two ways of evaluating them:

``effective``
    Pure dipole reduction: ``m z`` (gravity) or ``(E_ket - m) z`` (comoving).
    This is the reduction behind the published coefficient tables and n = 2
    splittings.
``full``
    The operator term by term.  The Laplacian is replaced through the H0
    eigenrelation, ``-lap/2 |ket> = (E_ket - V)|ket>``, so that every piece is
    one of <z>, <z/r> or <d_z>.  ``dz_sign`` picks the sign of the d_z term:
    ``printed`` keeps the minus (the Hermitian operator), ``cancelling`` flips
    it, which makes the d_z and z V / 2 terms cancel on the ground state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from . import basis
from .basis import QuantumNumbers, as_qn
from .units import DEFAULT_CONTEXT, UnitContext, _eps_value

PERTURBATIVE_LIMIT = 0.01
DEFAULT_N_MAX = 30


class Variant(str, Enum):
    GRAVITY = "gravity"
    COMOVING = "comoving"


class Mode(str, Enum):
    EFFECTIVE_DIPOLE = "effective"
    FULL_QUADRATURE = "full"


class DzSign(str, Enum):
    AS_PRINTED = "printed"
    CANCELLING = "cancelling"


class DegenerateStateError(ValueError):
    pass


class NonPerturbativeError(ValueError):
    pass


def _coerce(enum_cls, value):
    try:
        return enum_cls(value)
    except ValueError:
        choices = ", ".join(e.value for e in enum_cls)
        raise ValueError(f"invalid {enum_cls.__name__} {value!r}; expected one of {choices}") from None


@dataclass(frozen=True)
class HamiltonianSpec:
    variant: Variant = Variant.GRAVITY
    mode: Mode = Mode.EFFECTIVE_DIPOLE
    dz_sign: DzSign = DzSign.AS_PRINTED

    def __post_init__(self):
        object.__setattr__(self, "variant", _coerce(Variant, self.variant))
        object.__setattr__(self, "mode", _coerce(Mode, self.mode))
        object.__setattr__(self, "dz_sign", _coerce(DzSign, self.dz_sign))

    def as_dict(self) -> dict:
        return {"variant": self.variant.value, "mode": self.mode.value,
                "dz_sign": self.dz_sign.value}


def matrix_element(spec: HamiltonianSpec, bra, ket, ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """<bra| H |ket> in eV per unit epsilon.

    Exactly zero, without any quadrature, unless m_bra = m_ket and
    |l_bra - l_ket| = 1.
    """
    if not isinstance(spec, HamiltonianSpec):
        raise TypeError(f"expected HamiltonianSpec, got {type(spec).__name__}")
    bra, ket = as_qn(bra), as_qn(ket)
    if bra.m != ket.m or abs(bra.l - ket.l) != 1:
        return 0.0
    z = basis.z_matrix_element(bra, ket)
    gravity = ctx.mc2_eV * z if spec.variant is Variant.GRAVITY else 0.0
    e_ket = basis.binding_energy_hartree(ket.n)
    if spec.mode is Mode.EFFECTIVE_DIPOLE:
        if spec.variant is Variant.GRAVITY:
            return gravity
        return ctx.hartree_eV * e_ket * z
    sign = -1.0 if spec.dz_sign is DzSign.AS_PRINTED else 1.0
    hartree_part = (e_ket * z
                    + 0.5 * basis.z_over_r_matrix_element(bra, ket)
                    + sign * 0.5 * basis.dz_matrix_element(bra, ket))
    return ctx.hartree_eV * hartree_part + gravity


def first_order_energy_shift(target, spec: HamiltonianSpec,
                             ctx: UnitContext = DEFAULT_CONTEXT) -> float:
    """Diagonal first-order shift in eV per epsilon for a non-degenerate level."""
    target = as_qn(target)
    if target.n != 1:
        raise DegenerateStateError(
            f"level n={target.n} is degenerate; use degenerate_block(spec, n={target.n})")
    return matrix_element(spec, target, target, ctx)


@dataclass(frozen=True)
class PerturbationExpansion:
    """First-order correction ``phi = phi_target + epsilon * sum_n c_n phi_n10``."""

    target: QuantumNumbers
    spec: HamiltonianSpec
    n_max: int
    coefficients: dict
    epsilon: float = 0.0
    allow_nonperturbative: bool = False
    energy_shift: float = 0.0

    def with_epsilon(self, eps, allow_nonperturbative: bool = False) -> "PerturbationExpansion":
        new = replace(self, epsilon=_eps_value(eps), allow_nonperturbative=allow_nonperturbative)
        new.check_guard()
        return new

    @property
    def admixture(self) -> float:
        """epsilon^2 sum c_n^2, the squared norm of the correction."""
        return self.epsilon ** 2 * math.fsum(c * c for c in self.coefficients.values())

    @property
    def perturbative(self) -> bool:
        return self.admixture < PERTURBATIVE_LIMIT

    def check_guard(self):
        if not self.perturbative and not self.allow_nonperturbative:
            raise NonPerturbativeError(
                f"epsilon={self.epsilon!r} gives admixture {self.admixture:.3g} >= {PERTURBATIVE_LIMIT}; "
                "first-order theory does not apply (pass allow_nonperturbative to override)")

    @property
    def norm(self) -> float:
        return math.sqrt(1.0 + self.admixture)

    def terms(self):
        """``(n, l, amplitude)`` for every m = 0 component of the normalized state."""
        inv = 1.0 / self.norm
        out = [(self.target.n, self.target.l, inv)]
        out += [(n, 1, self.epsilon * c * inv) for n, c in sorted(self.coefficients.items())]
        return out

    def expectation_z(self) -> float:
        """<z> of the normalized state in a0 (correction-correction terms vanish by parity)."""
        cross = math.fsum(c * basis.z_matrix_element(self.target, (n, 1, 0))
                          for n, c in sorted(self.coefficients.items()))
        return 2.0 * self.epsilon * cross / (1.0 + self.admixture)

    def convergence(self) -> dict:
        ns = sorted(self.coefficients)
        lead = abs(self.coefficients[ns[0]])
        tail = abs(self.coefficients[ns[-1]]) / lead
        return {"tail_to_leading": tail, "converged": tail < 1e-3}

    def to_json_dict(self) -> dict:
        return {
            **self.spec.as_dict(),
            "target": self.target.label,
            "n_max": self.n_max,
            "epsilon": self.epsilon,
            "coefficients": [[n, self.coefficients[n]] for n in sorted(self.coefficients)],
            "energy_shifts_eV_per_eps": {self.target.label: self.energy_shift},
            "convergence": self.convergence(),
        }


def expansion_coefficients(spec: HamiltonianSpec, n_max: int = DEFAULT_N_MAX,
                           ctx: UnitContext = DEFAULT_CONTEXT, target=(1, 0, 0),
                           epsilon=0.0) -> PerturbationExpansion:
    """Ground-state first-order coefficients, dimensionless per epsilon.

    ``c_n = <n10|H|100> / (E_1 - E_n)``; only n, l=1, m=0 states couple.
    """
    target = as_qn(target)
    if target != QuantumNumbers(1, 0, 0):
        raise DegenerateStateError("expansions are only available for the ground state 100")
    if n_max > basis.N_MAX:
        raise ValueError(f"n_max = {n_max} exceeds the supported maximum {basis.N_MAX}")
    if n_max < 6:
        raise ValueError("n_max must be >= 6")
    e1 = basis.eigen_energy(1, ctx)
    coeffs = {}
    for n in range(2, n_max + 1):
        coeffs[n] = matrix_element(spec, (n, 1, 0), target, ctx) / (e1 - basis.eigen_energy(n, ctx))
    exp = PerturbationExpansion(target, spec, n_max, coeffs,
                                energy_shift=first_order_energy_shift(target, spec, ctx))
    return exp.with_epsilon(epsilon) if _eps_value(epsilon) else exp


def perturbed_amplitude(expansion: PerturbationExpansion, x, y=None, z=None):
    """Normalized first-order state at Cartesian point(s), complex a0^(-3/2)."""
    expansion.check_guard()
    if isinstance(x, basis.Point3):
        x, y, z = x.x, x.y, x.z
    total = 0.0
    for n, l, amp in expansion.terms():
        total = total + amp * basis.evaluate_basis_state((n, l, 0), x, y, z)
    return total


# --- degenerate n = 2 -------------------------------------------------------

N2_BASIS = (QuantumNumbers(2, 0, 0), QuantumNumbers(2, 1, 0),
            QuantumNumbers(2, 1, 1), QuantumNumbers(2, 1, -1))


@dataclass(frozen=True)
class Eigenpair:
    label: str
    shift: float  # eV per epsilon
    vector: np.ndarray


@dataclass
class DegenerateBlock:
    spec: HamiltonianSpec
    basis_order: tuple
    matrix: np.ndarray  # eV per epsilon
    eigenpairs: list = field(default_factory=list)

    @property
    def lower(self) -> Eigenpair:
        return min(self.eigenpairs, key=lambda p: p.shift)

    def energies(self, eps, ctx: UnitContext = DEFAULT_CONTEXT) -> dict:
        e2 = basis.eigen_energy(2, ctx)
        return {p.label: e2 + p.shift * _eps_value(eps) for p in self.eigenpairs}

    def to_json_dict(self, ctx: UnitContext = DEFAULT_CONTEXT) -> dict:
        mixed = [p for p in self.eigenpairs if p.label in ("plus", "minus")]
        h = max(abs(p.shift) for p in mixed) if mixed else 0.0
        lower = self.lower.label
        sign = "-+" if lower == "plus" else "+-"
        return {
            **self.spec.as_dict(),
            "basis_order": [s.label for s in self.basis_order],
            "matrix_eV_per_eps": self.matrix.tolist(),
            "eigenpairs": [{"label": p.label, "shift_eV_per_eps": p.shift,
                            "vector": p.vector.tolist()} for p in self.eigenpairs],
            "E2_0_eV": basis.eigen_energy(2, ctx),
            "lower_state": lower,
            "summary": f"E2^0 {sign} {h:.6g}*eps eV (phi+ / phi-), lower state phi{'+' if lower == 'plus' else '-'}",
        }


def degenerate_block(spec: HamiltonianSpec, n: int = 2,
                     ctx: UnitContext = DEFAULT_CONTEXT) -> DegenerateBlock:
    """First-order matrix on {200, 210, 211, 21-1} and its eigenpairs."""
    if n != 2:
        raise ValueError(f"degenerate block only implemented for n = 2, got n = {n}")
    mat = np.array([[matrix_element(spec, b, k, ctx) for k in N2_BASIS] for b in N2_BASIS])
    block = DegenerateBlock(spec, N2_BASIS, mat)
    block.eigenpairs = diagonalize_block(block)
    return block


def _label(vec: np.ndarray) -> str:
    a, b = vec[0], vec[1]
    if abs(a) > 1e-8 and abs(b) > 1e-8:
        return "plus" if a * b > 0 else "minus"
    return N2_BASIS[int(np.argmax(np.abs(vec)))].label


def diagonalize_block(block: DegenerateBlock, tol: float = 1e-9) -> list:
    """Eigenpairs in ascending energy, with a canonical basis for degenerate clusters."""
    mat = block.matrix
    scale = max(float(np.max(np.abs(mat))), 1.0)
    vals, vecs = np.linalg.eigh(mat)
    out = []
    i = 0
    while i < len(vals):
        j = i + 1
        while j < len(vals) and abs(vals[j] - vals[i]) <= tol * scale:
            j += 1
        sub = vecs[:, i:j]
        if j - i > 1:
            # project unit vectors onto the cluster and orthonormalize in basis order
            proj = sub @ sub.T
            chosen = []
            for k in range(len(vals)):
                v = proj[:, k].copy()
                for c in chosen:
                    v -= (c @ v) * c
                if np.linalg.norm(v) > 1e-6:
                    chosen.append(v / np.linalg.norm(v))
                if len(chosen) == j - i:
                    break
            sub = np.array(chosen).T
        for k in range(sub.shape[1]):
            v = sub[:, k]
            lead = v[np.argmax(np.abs(v) > 1e-12)]
            v = v if lead > 0 else -v
            shift = 0.0 if abs(vals[i + k]) <= tol * scale else float(vals[i + k])
            out.append(Eigenpair(_label(v), shift, v))
        i = j
    return out


def mixed_state_terms(label: str):
    """``(n, l, amplitude)`` for phi+- = (phi_200 +- phi_210) / sqrt(2)."""
    if label not in ("plus", "minus"):
        raise ValueError(f"mixed state label must be 'plus' or 'minus', got {label!r}")
    s = 1.0 if label == "plus" else -1.0
    h = 1.0 / math.sqrt(2.0)
    return [(2, 0, h), (2, 1, s * h)]


def mixed_state_amplitude(label: str, x, y=None, z=None):
    if isinstance(x, basis.Point3):
        x, y, z = x.x, x.y, x.z
    total = 0.0
    for n, l, amp in mixed_state_terms(label):
        total = total + amp * basis.evaluate_basis_state((n, l, 0), x, y, z)
    return total


def preferred_state(variant) -> str:
    """Label of the lower-energy mixed state for the given variant."""
    return degenerate_block(HamiltonianSpec(variant)).lower.label
