"""Antiferromagnetic Heisenberg chains (n <= 12 sites) and their exact spectra.

H = sum over bonds of [ (S+ S- + S- S+)/2 + Sz Sz ] with spin-1/2 operators,
coupling 1 and no constant shift, so a ferromagnetic bond contributes +1/4 on
the diagonal and an antiferromagnetic one -1/4 plus an exchange element 1/2.
The matrix is real symmetric in the computational basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NumericError, ResourceError, ShapeError

MAX_SITES = 12


class BoundaryCondition(str, Enum):
    OPEN = "open"
    PERIODIC = "periodic"


def _as_bc(bc: BoundaryCondition | str) -> BoundaryCondition:
    return BoundaryCondition(bc)


@dataclass(frozen=True)
class SectorBasis:
    """Ascending full-space indices of the fixed-magnetization sector."""

    n: int
    n_down: int
    indices: tuple[int, ...]


def hamiltonian(n: int, bc: BoundaryCondition | str = BoundaryCondition.PERIODIC) -> np.ndarray:
    """Dense 2^n x 2^n Heisenberg Hamiltonian; real symmetric."""
    if not 2 <= n <= MAX_SITES:
        raise ResourceError(f"site count {n} outside the supported range 2..{MAX_SITES}")
    bonds = [(i, i + 1) for i in range(n - 1)]
    if _as_bc(bc) is BoundaryCondition.PERIODIC:
        bonds.append((n - 1, 0))
    dim = 1 << n
    h = np.zeros((dim, dim))
    states = np.arange(dim)
    for i, j in bonds:
        bi = (states >> (n - 1 - i)) & 1
        bj = (states >> (n - 1 - j)) & 1
        aligned = bi == bj
        h[states, states] += np.where(aligned, 0.25, -0.25)
        anti = states[~aligned]
        flipped = anti ^ ((1 << (n - 1 - i)) | (1 << (n - 1 - j)))
        h[flipped, anti] += 0.5
    return h


def sector_basis(n: int, n_down: int) -> SectorBasis:
    """All basis states with exactly ``n_down`` down spins, ascending."""
    if not 0 <= n_down <= n:
        raise DomainError(f"down-spin count {n_down} invalid for {n} sites")
    indices = tuple(m for m in range(1 << n) if bin(m).count("1") == n_down)
    return SectorBasis(n=n, n_down=n_down, indices=indices)


def project_sector(h: np.ndarray, basis: SectorBasis) -> np.ndarray:
    """Submatrix of ``h`` on the sector's rows and columns."""
    h = np.asarray(h)
    dim = 1 << basis.n
    if h.shape != (dim, dim):
        raise ShapeError(f"matrix shape {h.shape} does not match a {basis.n}-site register")
    idx = np.asarray(basis.indices)
    return h[np.ix_(idx, idx)]


def _fix_phase(state: np.ndarray) -> np.ndarray:
    """Make the largest-magnitude amplitude real positive (ties: lowest index)."""
    mags = np.abs(state)
    top = float(mags.max())
    candidates = np.flatnonzero(mags >= top * (1.0 - 1e-12))
    pivot = state[int(candidates[0])]
    return state * (np.conj(pivot) / abs(pivot))


def ground_state(
    n: int, bc: BoundaryCondition | str = BoundaryCondition.PERIODIC
) -> tuple[float, np.ndarray]:
    """Lowest eigenpair of the chain; the state is normalized and phase-fixed."""
    h = hamiltonian(n, bc)
    values, vectors = np.linalg.eigh(h)
    state = vectors[:, 0].astype(complex)
    state = state / np.linalg.norm(state)
    return float(values[0]), _fix_phase(state)


def energy_expectation(h: np.ndarray, psi: np.ndarray) -> float:
    """Rayleigh quotient <psi|H|psi>/<psi|psi>; the result must be real."""
    h = np.asarray(h)
    psi = np.asarray(psi, dtype=complex)
    if h.shape[0] != h.shape[1] or h.shape[0] != psi.shape[0]:
        raise ShapeError(f"incompatible shapes {h.shape} and {psi.shape}")
    norm_sq = float(np.vdot(psi, psi).real)
    if norm_sq <= 0.0:
        raise DomainError("cannot score a zero state vector")
    value = complex(np.vdot(psi, h @ psi)) / norm_sq
    if abs(value.imag) > 1e-12:
        raise NumericError(f"expectation has imaginary residue {value.imag:.3e}")
    return value.real
