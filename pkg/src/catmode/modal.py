"""Constrained small-oscillation modes.

Coefficient vectors are restricted to the subspace orthogonal to the
constraint gradient, ``a = Q zeta``, giving the pencil
``(Q'MQ) zeta'' = lambda0 (Q'BQ) zeta``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cholesky, solve_triangular

from .assembly import AssembledSystem, assemble, first_order_u_fields
from .basis import TrialBasis, fourier_sine_basis, sampled_basis
from .equilibrium import EquilibriumShape
from .errors import DegenerateSystem, IndefiniteMass, InputError, ZeroVector
from .quadrature import DEFAULT_RULE, QuadratureRule

DEFAULT_SAMPLES = 401


def nullspace_basis(constraints) -> np.ndarray:
    """Orthonormal basis of the vectors orthogonal to every given constraint gradient.

    ``constraints`` is an N-vector or an (N, k) array of k gradients; the
    result has shape (N, N - k).
    """
    G = np.asarray(constraints, dtype=float)
    if G.ndim == 1:
        G = G[:, None]
    if G.ndim != 2 or G.shape[1] >= G.shape[0]:
        raise InputError("need fewer constraints than coordinates")
    if np.any(np.linalg.norm(G, axis=0) == 0):
        raise ZeroVector("constraint gradient is zero")
    Q, _ = np.linalg.qr(G, mode="complete")
    return Q[:, G.shape[1]:]


def generalized_eigh(K: np.ndarray, A: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Solve K x = w A x for symmetric K and SPD A via a Cholesky reduction.

    Eigenvectors are returned as A-orthonormal columns, eigenvalues ascending.
    """
    try:
        Lc = cholesky(A, lower=True)
    except LinAlgError as exc:
        raise IndefiniteMass("reduced mass matrix is not positive definite") from exc
    X = solve_triangular(Lc, K, lower=True)
    S = solve_triangular(Lc, X.T, lower=True)
    w, Y = np.linalg.eigh(0.5 * (S + S.T))
    return w, solve_triangular(Lc.T, Y, lower=False)


@dataclass(frozen=True)
class ModeSet:
    frequencies: np.ndarray  # ascending
    coefficients: np.ndarray  # (N, n_modes), columns are mode vectors a_i
    x: np.ndarray
    v: np.ndarray  # (n_modes, len(x))
    u: np.ndarray  # (n_modes, len(x))
    lambda0: float
    basis: TrialBasis
    shape: EquilibriumShape

    def __len__(self):
        return len(self.frequencies)

    @property
    def sampled_shapes(self):
        return [np.column_stack([self.x, self.v[i], self.u[i]]) for i in range(len(self))]

    def as_basis(self, count: int | None = None) -> TrialBasis:
        """The sampled vertical mode shapes as a spline trial basis."""
        count = len(self) if count is None else count
        return sampled_basis(self.shape.b, [(self.x, self.v[i]) for i in range(count)])


def _reduced_pencil(system: AssembledSystem, lambda0: float | None):
    if system.degenerate:
        if lambda0 is None:
            raise DegenerateSystem(
                "constraint gradient q vanishes for this basis; supply lambda0 "
                "or use the one-mode second-order treatment")
        Q = np.eye(system.N)
    else:
        Q = nullspace_basis(system.q)
        lambda0 = system.lambda0 if lambda0 is None else lambda0
    return Q, lambda0


def solve_modes(system: AssembledSystem, n_output_samples: int = DEFAULT_SAMPLES, *,
                lambda0: float | None = None, Q: np.ndarray | None = None) -> ModeSet:
    """Frequencies and mode shapes of the constrained linear system.

    Modes are scaled to unit peak |v| on the output grid with v'(0) > 0.
    ``Q`` may be passed to use a different orthonormal basis of the
    constraint tangent space.
    """
    Qd, lam = _reduced_pencil(system, lambda0)
    Q = Qd if Q is None else np.asarray(Q, dtype=float)
    Mt = Q.T @ system.M @ Q
    Kt = -lam * (Q.T @ system.B @ Q)
    w2, Z = generalized_eigh(Kt, Mt)
    if w2[0] <= 0:
        raise IndefiniteMass(f"non-positive squared frequency {w2[0]:.3g}")
    A = Q @ Z

    if n_output_samples < 2:
        raise InputError("need at least two output samples")
    b = system.shape.b
    x = np.linspace(0.0, b, n_output_samples)
    phi = system.basis.value(x)
    v = A.T @ phi
    slope0 = A.T @ system.basis.derivative(np.array([0.0]))[:, 0]
    for i in range(A.shape[1]):
        sign = np.sign(slope0[i]) or np.sign(v[i][np.argmax(np.abs(v[i]))])
        scale = sign / np.max(np.abs(v[i]))
        A[:, i] *= scale
        v[i] *= scale
    u = A.T @ first_order_u_fields(system.shape, system.basis, x, system.rule)
    return ModeSet(np.sqrt(w2), A, x, v, u, lam, system.basis, system.shape)


def frequencies_vs_basis_size(shape: EquilibriumShape, N_list,
                              rule: QuadratureRule = DEFAULT_RULE, n_modes: int = 3):
    """Rows (N, w_1, ..., w_k) for nested sine bases."""
    rows = []
    for N in N_list:
        if N < 2:
            raise InputError("basis size must be at least 2")
        system = assemble(shape, fourier_sine_basis(shape.b, N), rule, check_convergence=False)
        w = solve_modes(system, 2).frequencies[:n_modes]
        rows.append((N, *map(float, w)))
    return rows
