"""Circuit-form trial states for the four-site ring and their optimization.

The raw ansatz alternates two layers twice: a parallel swap layer and an
entangler embedded on the middle pair,

    |psi> = (S x S) (I2 x U x I2) (S x S) (I2 x U x I2) |Omega>,

applied to a product IR state |Omega> = L-vector (x) R-vector.  Conjugating
the middle entangler by the swap layer turns it into an entangler across the
outer pair (sites 1 and 4), so the ansatz entangles both ring bonds of the
coarse lattice.

A subtlety matters for optimization.  Under a global spin flip the rotation
entangler maps to its transpose (theta -> -theta), so the raw circuit breaks
the flip symmetry of the target ground state: the two halves of its output
differ by that sign.  The variational family used by the solvers therefore
keeps the left half of the circuit output (amplitudes with site 1 up) and
completes the state with its own spin-flip image.  On that two-amplitude
family the exact ground state of the periodic four-site chain is reachable,
and the optimal entangler angle has the closed form sin(-2 theta) = 1/sqrt(5).
The discrepancy between the raw circuit and the mirrored family is measured
and reported by the check suite rather than hidden.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.optimize

from . import gates
from .errors import ContractError, DomainError, NumericError, ShapeError
from .heisenberg import BoundaryCondition, ground_state, hamiltonian

#: Norm below which a constructed state counts as degenerate.
_DEGENERATE_NORM = 1e-12


@dataclass(frozen=True)
class IsometryParams:
    """The eight real amplitudes of the two coarse-graining tensors.

    Each quadruple (l00, l01, l10, l11) and (r00, r01, r10, r11) must be
    normalized to 1 in the squared sum.
    """

    l00: float
    l01: float
    l10: float
    l11: float
    r00: float
    r01: float
    r10: float
    r11: float

    @classmethod
    def trivial(
        cls, l01: float, l10: float, r01: float, r10: float, l11: float = 0.0
    ) -> "IsometryParams":
        """Weakly entangled family: l00 = r00 = r11 = 0.

        l11 defaults to 0 as well so the resulting states stay inside the
        zero-magnetization sector.
        """
        return cls(0.0, l01, l10, l11, 0.0, r01, r10, 0.0)

    def left_vector(self) -> np.ndarray:
        return np.array([self.l00, self.l01, self.l10, self.l11], dtype=complex)

    def right_vector(self) -> np.ndarray:
        return np.array([self.r00, self.r01, self.r10, self.r11], dtype=complex)

    def validate(self, tol: float = 1e-12) -> None:
        for name, vec in (("left", self.left_vector()), ("right", self.right_vector())):
            total = float(np.sum(np.abs(vec) ** 2))
            if abs(total - 1.0) > tol:
                raise ContractError(f"{name} tensor is not normalized: sum of squares = {total!r}")


@dataclass(frozen=True)
class TrialState:
    """Normalized 16-dimensional circuit output plus bookkeeping."""

    spec: gates.EntanglerSpec
    iso: IsometryParams
    state: np.ndarray
    raw_norm: float
    norm_applied: bool


@dataclass(frozen=True)
class ThetaSolution:
    """Optimal entangler angle together with the ratio r = -R01/R10."""

    theta: float
    r: float
    sin_m2theta: float
    cos_m2theta: float
    energy: float
    fidelity: float


@dataclass(frozen=True)
class NuFitResult:
    """Roots of the spectral-parameter fit and diagnostics at quoted values."""

    roots: tuple[complex, complex]
    residual_derived: float
    nu_quoted: tuple[complex, complex]
    residual_quoted: float
    b_at_nu_quoted: complex


def ir_state(iso: IsometryParams, tol: float = 1e-12) -> np.ndarray:
    """Product IR state: Kronecker product of the two coarse tensors."""
    iso.validate(tol)
    return np.kron(iso.left_vector(), iso.right_vector())


def circuit_matrix(gate: np.ndarray) -> np.ndarray:
    """The full 16x16 four-layer circuit for a given two-site gate."""
    inner = gates.embed(gate, 2, 4)
    swaps = gates.swap_layer(4)
    return swaps @ inner @ swaps @ inner


def trial_state(
    spec: gates.EntanglerSpec,
    iso: IsometryParams,
    bc: BoundaryCondition | str = BoundaryCondition.PERIODIC,
    tol: float = 1e-12,
) -> TrialState:
    """Apply the circuit layers to the IR state of ``iso`` and normalize.

    The periodic form applies all four layers; the open form keeps only the
    inner entangler (no wrap-around bond).  Renormalization only kicks in
    for non-unitary gates (complex spectral parameter); ``norm_applied``
    records whether it did.
    """
    omega = ir_state(iso, tol)
    gate = spec.matrix()
    if BoundaryCondition(bc) is BoundaryCondition.PERIODIC:
        matrix = circuit_matrix(gate)
    else:
        matrix = gates.embed(gate, 2, 4)
    state = matrix @ omega
    raw_norm = float(np.linalg.norm(state))
    if raw_norm < _DEGENERATE_NORM:
        raise DomainError("circuit annihilated the IR state (degenerate input)")
    norm_applied = abs(raw_norm - 1.0) > 1e-13
    return TrialState(spec=spec, iso=iso, state=state / raw_norm, raw_norm=raw_norm, norm_applied=norm_applied)


def _mirrored_unnormalized(gate: np.ndarray, u: complex, q: complex) -> np.ndarray:
    """Left half of the circuit output, completed by its spin-flip image.

    The inputs are the two free amplitudes of the weakly entangled IR family:
    ``u`` on |0101> and ``q`` on |0110> (their flip partners are implied).
    """
    wl = np.zeros(8, dtype=complex)
    wl[5] = u
    wl[6] = q
    omega = np.concatenate([wl, wl[::-1]])
    left = (circuit_matrix(gate) @ omega)[:8]
    return np.concatenate([left, left[::-1]])


def variational_state(spec: gates.EntanglerSpec, r: float) -> np.ndarray:
    """Normalized state of the mirrored family at ratio r = -R01/R10."""
    r10 = 1.0 / np.hypot(1.0, r)
    r01 = -r * r10
    psi = _mirrored_unnormalized(spec.matrix(), r01, r10)
    norm = float(np.linalg.norm(psi))
    if norm < _DEGENERATE_NORM:
        raise DomainError("variational state degenerated to zero norm")
    return psi / norm


def optimal_ratio(gate: np.ndarray, h: np.ndarray) -> tuple[float, float, np.ndarray]:
    """Closed-form energy minimum over the two-amplitude family at fixed gate.

    Solves the 2x2 generalized eigenproblem in the span of the two basis
    states and returns (energy, r, normalized state).
    """
    basis = [_mirrored_unnormalized(gate, 1.0, 0.0), _mirrored_unnormalized(gate, 0.0, 1.0)]
    hm = np.array([[np.vdot(x, h @ y) for y in basis] for x in basis])
    sm = np.array([[np.vdot(x, y) for y in basis] for x in basis])
    try:
        values, vectors = scipy.linalg.eigh(hm, sm)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise NumericError(f"ratio optimization failed: {exc}") from exc
    u, q = vectors[:, 0]
    if abs(q) < 1e-300:
        raise NumericError("optimal ratio diverged (q amplitude vanished)")
    ratio = -u / q
    if abs(ratio.imag) > 1e-9 * max(1.0, abs(ratio.real)):
        raise NumericError(f"optimal ratio is not real: {ratio!r}")
    state = u * basis[0] + q * basis[1]
    state = state / np.linalg.norm(state)
    return float(values[0]), float(ratio.real), state


def solve_theta_analytic(target: tuple[float, float, float] = (1.0, -2.0, 1.0)) -> ThetaSolution:
    """Closed-form entangler angle matching the target amplitude ratios.

    The mirrored family carries amplitudes proportional to
    (r sin(-2 theta), -r cos(-2 theta), 1) on the states |0011>, |0101>,
    |0110>; matching them to the exact-diagonalization ratios A : B : C
    determines theta and r algebraically.  For the default target 1 : -2 : 1
    this gives sin(-2 theta) = 1/sqrt(5), cos(-2 theta) = 2/sqrt(5),
    r = sqrt(5), with theta in (-pi/4, 0).
    """
    a, b, c = (float(x) for x in target)
    if c == 0.0:
        raise DomainError("target ratio needs a nonzero third component")
    rho1 = a / c
    rho2 = b / c
    r = float(np.hypot(rho1, rho2))
    sin_m2 = rho1 / r
    cos_m2 = -rho2 / r
    theta = -0.5 * float(np.arctan2(sin_m2, cos_m2))
    state = variational_state(gates.EntanglerSpec.rotation(theta), r)
    energy_exact, ground = ground_state(4, BoundaryCondition.PERIODIC)
    h = hamiltonian(4, BoundaryCondition.PERIODIC)
    energy = float(np.vdot(state, h @ state).real)
    return ThetaSolution(
        theta=theta,
        r=r,
        sin_m2theta=sin_m2,
        cos_m2theta=cos_m2,
        energy=energy,
        fidelity=fidelity(state, ground),
    )


def solve_theta_numeric(
    n: int = 4, bc: BoundaryCondition | str = BoundaryCondition.PERIODIC
) -> ThetaSolution:
    """Derivative-free cross-check of the closed-form optimum.

    Minimizes the energy of the mirrored family over theta in (-pi/2, pi/2),
    with the ratio r eliminated per angle through the closed-form 2x2
    eigenproblem: coarse grid bracketing, bounded scalar minimization to
    1e-12 in theta, then a parabolic vertex fit to average out the flat
    floating-point floor around the minimum.
    """
    if n != 4 or BoundaryCondition(bc) is not BoundaryCondition.PERIODIC:
        raise DomainError("numeric optimization is supported for the periodic 4-site ring only")
    return _solve_theta_numeric_cached()


@functools.cache
def _solve_theta_numeric_cached() -> ThetaSolution:
    h = hamiltonian(4, BoundaryCondition.PERIODIC)
    _, ground = ground_state(4, BoundaryCondition.PERIODIC)

    def energy_at(theta: float) -> float:
        return optimal_ratio(gates.entangler_rotation(theta), h)[0]

    grid = np.linspace(-np.pi / 2, np.pi / 2, 2001)
    values = [energy_at(t) for t in grid]
    k = int(np.argmin(values))
    lo = grid[max(k - 1, 0)]
    hi = grid[min(k + 1, len(grid) - 1)]
    result = scipy.optimize.minimize_scalar(
        energy_at, bounds=(lo, hi), method="bounded", options={"xatol": 1e-12}
    )
    if not result.success:
        raise NumericError(f"scalar minimization failed: {result.message}")
    theta = float(result.x)

    step = 1e-5
    e_minus, e_zero, e_plus = energy_at(theta - step), energy_at(theta), energy_at(theta + step)
    curvature = e_minus - 2.0 * e_zero + e_plus
    if curvature > 0.0:
        theta += 0.5 * step * (e_minus - e_plus) / curvature

    energy, r, state = optimal_ratio(gates.entangler_rotation(theta), h)
    return ThetaSolution(
        theta=theta,
        r=r,
        sin_m2theta=float(np.sin(-2.0 * theta)),
        cos_m2theta=float(np.cos(-2.0 * theta)),
        energy=energy,
        fidelity=fidelity(state, ground),
    )


def fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """Squared normalized overlap |<a|b>|^2 / (|a|^2 |b|^2), in [0, 1]."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeError(f"vectors of shapes {a.shape} and {b.shape} cannot overlap")
    na = float(np.vdot(a, a).real)
    nb = float(np.vdot(b, b).real)
    if na <= 0.0 or nb <= 0.0:
        raise DomainError("fidelity of a zero vector is undefined")
    return float(abs(np.vdot(a, b)) ** 2 / (na * nb))


def entanglement_entropy(psi: np.ndarray, cut: int) -> float:
    """Von Neumann entropy (nats) of the leftmost ``cut`` sites.

    Computed from the singular values of the cut-reshaped amplitude matrix;
    squared singular values below 1e-15 are dropped.
    """
    psi = np.asarray(psi, dtype=complex)
    dim = psi.shape[0]
    n = dim.bit_length() - 1
    if psi.ndim != 1 or 2 ** n != dim:
        raise ShapeError(f"state length {dim} is not a power of two")
    if not 1 <= cut < n:
        raise ShapeError(f"cut {cut} invalid for {n} sites")
    singulars = np.linalg.svd(psi.reshape(2 ** cut, -1), compute_uv=False)
    weights = singulars ** 2
    total = float(weights.sum())
    if total <= 0.0:
        raise DomainError("entropy of a zero vector is undefined")
    weights = weights / total
    weights = weights[weights > 1e-15]
    return float(-(weights * np.log(weights)).sum()) + 0.0


def solve_nu_fit() -> NuFitResult:
    """Spectral parameters for which the weight entangler matches the target.

    Matching the mirrored-family amplitudes to the exact ratios requires
    2 b c : (b^2 + c^2) = 1 : -2, i.e. b^2 + c^2 + 4 b c = 0.  Substituting
    the weight functions and clearing (nu + 2i)^2 leaves the quadratic
    nu^2 + 8 i nu - 4 = 0 with roots nu = (-4 +/- 2 sqrt(3)) i.  Both are
    verified by direct substitution.  The same residual is also evaluated at
    the often-quoted values -4i +/- 2 sqrt(3) (real offsets instead of
    imaginary ones), where it does not vanish; that number is reported, not
    asserted against.
    """
    offset = 2.0 * np.sqrt(3.0)
    roots = (complex(0.0, offset - 4.0), complex(0.0, -offset - 4.0))

    def residual(nu: complex) -> complex:
        w = gates.bc(nu)
        return w.b ** 2 + w.c ** 2 + 4.0 * w.b * w.c

    residual_derived = max(abs(residual(nu)) for nu in roots)
    if residual_derived > 1e-12:
        raise NumericError(f"derived roots fail the fit condition: residual {residual_derived:.3e}")
    quoted = (offset - 4j, -offset - 4j)
    residual_quoted = max(abs(residual(nu)) for nu in quoted)
    return NuFitResult(
        roots=roots,
        residual_derived=float(residual_derived),
        nu_quoted=quoted,
        residual_quoted=float(residual_quoted),
        b_at_nu_quoted=gates.bc(quoted[0]).b,
    )
