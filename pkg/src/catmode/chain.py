"""Rigid-link chain used as an independent check on the continuum frequencies.

``n`` uniform rods of length ``l = L/n`` are pinned end to end between the
supports. The coordinates are the link inclinations, and two closure
equations pin the far end. At a stationary point of the potential energy
with multipliers (H, V) every link satisfies
``tan(theta_i) = (V - m g l w_i) / H``, where ``w_i`` is the number of
link-weights hanging beyond the first node of link ``i``. H is the
horizontal support reaction and V the vertical reaction at the left support.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .equilibrium import SpanGeometry, solve_equilibrium
from .errors import IndefiniteHessian, InputError, NoConvergence
from .modal import generalized_eigh, nullspace_basis

MAX_NEWTON = 100


def _weights_beyond(n: int) -> np.ndarray:
    return n - np.arange(n) - 0.5


@dataclass(frozen=True)
class DiscreteChain:
    geometry: SpanGeometry
    n_links: int
    angles: np.ndarray
    H: float  # horizontal reaction
    V: float  # vertical reaction at the left support

    @property
    def link_length(self) -> float:
        return self.geometry.L / self.n_links

    def closure_residual(self) -> np.ndarray:
        l = self.link_length
        return np.array([l * np.cos(self.angles).sum() - self.geometry.b,
                         l * np.sin(self.angles).sum() - self.geometry.h])

    def nodes(self) -> np.ndarray:
        """Joint positions, shape (n+1, 2), from the left support."""
        l = self.link_length
        steps = l * np.column_stack([np.cos(self.angles), np.sin(self.angles)])
        return np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)])

    def potential_energy(self, angles=None) -> float:
        th = self.angles if angles is None else np.asarray(angles)
        l, g = self.link_length, self.geometry
        return g.weight * l * l * float(_weights_beyond(self.n_links) @ np.sin(th))

    def constraint_jacobian(self) -> np.ndarray:
        """Gradients of the two closure equations, shape (n, 2)."""
        l = self.link_length
        return np.column_stack([-l * np.sin(self.angles), l * np.cos(self.angles)])

    def stiffness(self) -> np.ndarray:
        """Hessian of PE - H*closure_x - V*closure_y in the angles.

        Diagonal with entries ``l * H / cos(theta_i)``, i.e. link length
        times link tension.
        """
        return np.diag(self.link_length * self.H / np.cos(self.angles))

    def kinetic_metric(self) -> np.ndarray:
        """A such that KE = theta_dot' A theta_dot / 2 for uniform rods."""
        n, l, m = self.n_links, self.link_length, self.geometry.m_bar
        c = np.tril(np.ones((n, n)), -1) + 0.5 * np.eye(n)  # midpoint i moves with joint j
        A = m * l**3 * (c.T @ c) * np.cos(self.angles[:, None] - self.angles[None, :])
        A[np.diag_indices(n)] += m * l**3 / 12.0
        return A


def _angles(H, V, n, l, weight):
    return np.arctan2(V - weight * l * _weights_beyond(n), H)


def static_equilibrium(geom: SpanGeometry, n_links: int, tol: float = 1e-12) -> DiscreteChain:
    """Minimum-energy configuration subject to closure, by Newton on (H, V)."""
    if n_links < 3:
        raise InputError("need at least three links")
    n, l, wt = n_links, geom.L / n_links, geom.weight
    wb = _weights_beyond(n)

    # Start from the continuum catenary; any reasonable guess converges.
    cont = solve_equilibrium(geom)
    H = wt * cont.W
    V = H * math.sinh(cont.C + 0.5 * l / cont.W) + wt * l * wb[0]

    def residual(H, V):
        th = _angles(H, V, n, l, wt)
        return th, np.array([l * np.cos(th).sum() - geom.b, l * np.sin(th).sum() - geom.h])

    th, r = residual(H, V)
    for _ in range(MAX_NEWTON):
        if np.max(np.abs(r)) < tol * geom.L:
            break
        s = V - wt * l * wb
        den = H * H + s * s
        dth = np.column_stack([-s / den, H / den])
        J = np.vstack([-l * np.sin(th) @ dth, l * np.cos(th) @ dth])
        step = np.linalg.solve(J, -r)
        t = 1.0
        while True:
            Hn, Vn = H + t * step[0], V + t * step[1]
            if Hn > 0:
                thn, rn = residual(Hn, Vn)
                if np.linalg.norm(rn) < np.linalg.norm(r) or t < 1e-10:
                    break
            t *= 0.5
            if t < 1e-12:
                raise NoConvergence("line search failed in chain equilibrium")
        H, V, th, r = Hn, Vn, thn, rn
    else:
        raise NoConvergence(f"chain equilibrium residual {np.max(np.abs(r)):.3g}")
    return DiscreteChain(geom, n, th, float(H), float(V))


def reduced_matrices(chain: DiscreteChain) -> tuple[np.ndarray, np.ndarray]:
    Z = nullspace_basis(chain.constraint_jacobian())
    return Z.T @ chain.stiffness() @ Z, Z.T @ chain.kinetic_metric() @ Z


def linearized_frequencies(chain: DiscreteChain, n_modes: int = 3) -> np.ndarray:
    K, A = reduced_matrices(chain)
    if np.linalg.eigvalsh(K)[0] <= 0:
        raise IndefiniteHessian("reduced stiffness is not positive definite")
    w2, _ = generalized_eigh(K, A)
    if w2[0] <= 0:
        raise IndefiniteHessian(f"non-positive squared frequency {w2[0]:.3g}")
    return np.sqrt(w2[:n_modes])


def lagrangian_hessian_fd(chain: DiscreteChain, step: float = 1e-5) -> np.ndarray:
    """Central-difference Hessian of PE - H*closure_x - V*closure_y (for small n)."""
    l, n = chain.link_length, chain.n_links

    def grad(th):
        gpe = chain.geometry.weight * l * l * _weights_beyond(n) * np.cos(th)
        return gpe - chain.H * (-l * np.sin(th)) - chain.V * (l * np.cos(th))

    Hs = np.empty((n, n))
    for j in range(n):
        e = np.zeros(n)
        e[j] = step
        Hs[:, j] = (grad(chain.angles + e) - grad(chain.angles - e)) / (2 * step)
    return 0.5 * (Hs + Hs.T)
