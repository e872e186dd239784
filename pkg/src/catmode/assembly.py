"""Mass matrix, end-fixity constraint and gravity terms for a trial basis.

With ``v = sum_k a_k phi_k`` the horizontal displacement at the right
support expands as ``u(b) = a.q + a.B.a/2 + ...`` and the potential energy
is ``a.p``. Equilibrium of the linearised equations needs ``p = lambda0 q``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import cholesky, LinAlgError

from .basis import TrialBasis
from .equilibrium import EquilibriumShape
from .errors import AmplitudeTooLarge, InputError, SingularMass
from .quadrature import DEFAULT_RULE, QuadratureRule, cumulative_integrate


def first_order_u_fields(shape: EquilibriumShape, basis: TrialBasis, x,
                         rule: QuadratureRule = DEFAULT_RULE) -> np.ndarray:
    """U_j(x) = -int_0^x y' phi_j' for every basis function, shape (N, len(x)).

    Evaluated in the integrated-by-parts form
    ``-y'(x) phi_j(x) + (1/W) int_0^x sec(theta) phi_j``.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    running = cumulative_integrate(lambda s: shape._sec(s) * basis.value(s), x, rule,
                                   0.0, shape.b)
    return -shape._slope(x) * basis.value(x) + running / shape.W


@dataclass(frozen=True)
class _Integrals:
    M: np.ndarray
    B: np.ndarray
    p: np.ndarray
    q: np.ndarray


def _integrals(shape: EquilibriumShape, basis: TrialBasis, rule: QuadratureRule) -> _Integrals:
    x, w = rule.nodes_weights(0.0, shape.b)
    phi = basis.value(x)
    dphi = basis.derivative(x)
    yp = shape._slope(x)
    sec = shape._sec(x)
    U = first_order_u_fields(shape, basis, x, rule)

    q = -(dphi * yp) @ w
    B = -(dphi * ((1 + yp**2) * w)) @ dphi.T
    p = shape.geometry.weight * ((phi * sec) @ w)
    ws = sec * w
    M = shape.geometry.m_bar * ((U * ws) @ U.T + (phi * ws) @ phi.T)
    # Symmetrise away rounding so downstream factorisations see exact symmetry.
    return _Integrals(0.5 * (M + M.T), 0.5 * (B + B.T), p, q)


def default_threshold(B: np.ndarray) -> float:
    return 1e-6 * max(1.0, float(np.linalg.norm(B)))


@dataclass(frozen=True)
class AssembledSystem:
    shape: EquilibriumShape
    basis: TrialBasis
    rule: QuadratureRule
    M: np.ndarray
    B: np.ndarray
    p: np.ndarray
    q: np.ndarray
    lambda0: float | None  # None when the multiplier is indeterminate
    parallelism_residual: float
    threshold: float
    quadrature_change: float | None = field(default=None)

    @property
    def N(self) -> int:
        return self.basis.size

    @property
    def degenerate(self) -> bool:
        return self.lambda0 is None


def assemble(shape: EquilibriumShape, basis: TrialBasis,
             rule: QuadratureRule = DEFAULT_RULE, *,
             threshold: float | None = None,
             check_convergence: bool = True) -> AssembledSystem:
    """Assemble M, B, p, q and the equilibrium multiplier.

    With ``check_convergence`` the integrals are recomputed with twice as many
    panels and the largest change, relative to each array's magnitude, is
    stored as ``quadrature_change``.
    """
    if abs(basis.b - shape.b) > 1e-12 * shape.b:
        raise InputError(f"basis span {basis.b} differs from shape span {shape.b}")
    ints = _integrals(shape, basis, rule)
    try:
        cholesky(ints.M, lower=True)
    except LinAlgError as exc:
        raise SingularMass("mass matrix is not positive definite; "
                           "is the basis linearly dependent?") from exc

    change = None
    if check_convergence:
        fine = _integrals(shape, basis, rule.refined())
        change = max(_rel_change(getattr(ints, k), getattr(fine, k)) for k in "MBpq")

    thr = default_threshold(ints.B) if threshold is None else threshold
    qq = float(ints.q @ ints.q)
    if np.sqrt(qq) < thr:
        lambda0, resid = None, float("nan")
    else:
        lambda0 = float(ints.p @ ints.q) / qq
        pn = np.linalg.norm(ints.p)
        resid = float(np.linalg.norm(ints.p - lambda0 * ints.q) / pn) if pn > 0 else 0.0
    return AssembledSystem(shape, basis, rule, ints.M, ints.B, ints.p, ints.q,
                           lambda0, resid, thr, change)


def _rel_change(a, b) -> float:
    scale = np.max(np.abs(a))
    if scale == 0:
        return float(np.max(np.abs(b)))
    return float(np.max(np.abs(a - b)) / scale)


def detect_degeneracy(system: AssembledSystem, threshold: float | None = None) -> bool:
    thr = system.threshold if threshold is None else threshold
    return bool(np.linalg.norm(system.q) < thr)


def first_order_u(system: AssembledSystem, a, x):
    """Horizontal displacement sum_j a_j U_j(x), linear in the coefficients."""
    a = np.asarray(a, dtype=float)
    xs = system.shape._check(x)
    U = first_order_u_fields(system.shape, system.basis, np.atleast_1d(xs), system.rule)
    out = a @ U
    return out if np.ndim(x) else float(out[0])


def quadratic_constraint_residual(system: AssembledSystem, a) -> float:
    """u(b) to second order: a.q + a.B.a / 2."""
    a = np.asarray(a, dtype=float)
    return float(a @ system.q + 0.5 * a @ system.B @ a)


def exact_constraint_residual(shape: EquilibriumShape, basis: TrialBasis, a,
                              rule: QuadratureRule = DEFAULT_RULE) -> float:
    """u(b) from the full inextensibility relation, without expansion."""
    a = np.asarray(a, dtype=float)
    x, w = rule.nodes_weights(0.0, shape.b)
    vx = a @ basis.derivative(x)
    z = -2.0 * shape._slope(x) * vx - vx**2
    if np.any(1.0 + z <= 0):
        raise AmplitudeTooLarge("inextensibility radicand is not positive")
    # sqrt(1+z) - 1 without cancellation
    return float((z / (np.sqrt(1.0 + z) + 1.0)) @ w)
