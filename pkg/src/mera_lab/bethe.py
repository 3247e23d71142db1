"""Bethe equations for the short periodic chain and quantities from roots.

Rapidity convention: poles at +/- i in the single-magnon phase and at
+/- 2i in the pairwise scattering factor,

    ((lambda_j + i)/(lambda_j - i))^L
        = prod_{k != j} (lambda_j - lambda_k + 2i)/(lambda_j - lambda_k - 2i).

Momentum and energy follow the same convention: e^{ip} = (lambda+i)/(lambda-i)
and E = L/4 - sum_j 2/(lambda_j^2 + 1), which reproduces the chain Hamiltonian
normalization used in :mod:`mera_lab.heisenberg` (no shift, coupling 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError

_POLE_TOL = 1e-10
_REAL_TOL = 1e-12


@dataclass(frozen=True)
class BetheRoots:
    """Rapidities of one solution plus the worst equation residual."""

    L: int
    roots: tuple[complex, ...]
    residual_norm: float


def bethe_residual(roots: list[complex] | tuple[complex, ...], L: int) -> list[complex]:
    """Per-root residual LHS - RHS of the Bethe system; zero iff solved."""
    roots = [complex(r) for r in roots]
    for lam in roots:
        if abs(lam - 1j) < _POLE_TOL or abs(lam + 1j) < _POLE_TOL:
            raise DomainError(f"rapidity {lam} sits on a pole of the phase factor")
    for j, lj in enumerate(roots):
        for k, lk in enumerate(roots):
            if j < k and (abs(lj - lk - 2j) < _POLE_TOL or abs(lj - lk + 2j) < _POLE_TOL):
                raise DomainError(f"pair ({lj}, {lk}) sits on a scattering pole")
    out = []
    for j, lj in enumerate(roots):
        lhs = ((lj + 1j) / (lj - 1j)) ** L
        rhs = complex(1.0)
        for k, lk in enumerate(roots):
            if k != j:
                rhs *= (lj - lk + 2j) / (lj - lk - 2j)
        out.append(lhs - rhs)
    return out


def solve_two_magnon(L: int = 4) -> BetheRoots:
    """Symmetric two-magnon solution lambda_1 = -lambda_2 of the L=4 system.

    Newton iteration on the log (additive-phase) form of the equations,
    which for the symmetric pair reduces to

        L * phase(lambda) - phase_pair(2 lambda) = 2 pi,

    with phase(lambda) = 2 atan(1/lambda).  The analytic derivative is
    -2 (L - 1) / (lambda^2 + 1).  Starting from 0.5 this converges to
    1/sqrt(3) in a handful of steps.
    """
    if L != 4:
        raise DomainError("only the 4-site two-magnon system is supported")

    def phase_gap(lam: float) -> float:
        return 2.0 * (L - 1) * np.arctan(1.0 / lam) - 2.0 * np.pi

    def phase_gap_prime(lam: float) -> float:
        return -2.0 * (L - 1) / (lam * lam + 1.0)

    lam = 0.5
    for _ in range(100):
        step = phase_gap(lam) / phase_gap_prime(lam)
        lam -= step
        if abs(step) < 1e-15:
            break
    else:
        raise NumericError("Newton iteration for the two-magnon roots did not converge")
    residuals = bethe_residual([lam, -lam], L)
    residual_norm = max(abs(r) for r in residuals)
    if residual_norm > 1e-12:
        raise NumericError(f"two-magnon solution has residual {residual_norm:.3e}")
    return BetheRoots(L=L, roots=(complex(lam), complex(-lam)), residual_norm=float(residual_norm))


def one_magnon_roots(L: int = 4) -> list[float]:
    """Finite rapidities of the single-magnon states: cot(pi m / L), m = 1..L-1.

    The momentum-zero state corresponds to an infinite rapidity and is left
    out of the table.
    """
    if L < 2:
        raise DomainError(f"chain length {L} too short")
    return [float(1.0 / np.tan(np.pi * m / L)) for m in range(1, L)]


def momenta_from_roots(roots: list[complex] | tuple[complex, ...]) -> list[float]:
    """Momenta p_j in (-pi, pi] with e^{ip_j} = (lambda_j + i)/(lambda_j - i)."""
    out = []
    for lam in roots:
        lam = complex(lam)
        if abs(lam.imag) > _REAL_TOL:
            raise DomainError(f"momentum is defined for real rapidities, got {lam}")
        p = float(np.angle((lam.real + 1j) / (lam.real - 1j)))
        if p <= -np.pi:
            p += 2.0 * np.pi
        out.append(p)
    return out


def energy_from_roots(roots: list[complex] | tuple[complex, ...], L: int) -> float:
    """Chain energy L/4 - sum_j 2/(lambda_j^2 + 1) for real roots."""
    total = L / 4.0
    for lam in roots:
        lam = complex(lam)
        if abs(lam.imag) > _REAL_TOL:
            raise DomainError(f"energy from complex rapidities is unsupported, got {lam}")
        total -= 2.0 / (lam.real ** 2 + 1.0)
    return float(total)
