"""Trial functions for the vertical displacement, vanishing at both supports."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import EndpointViolation, InputError
from .quadrature import DEFAULT_RULE, QuadratureRule

ENDPOINT_TOL = 1e-9


@dataclass(frozen=True)
class TrialBasis:
    """N functions on [0, b].

    ``value(x)`` and ``derivative(x)`` take a 1-D array of positions and
    return an ``(N, len(x))`` array.
    """

    b: float
    size: int
    value: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    derivative: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    kind: str = "custom"

    def __call__(self, x):
        return self.value(np.atleast_1d(np.asarray(x, dtype=float)))

    def gram_matrix(self, rule: QuadratureRule = DEFAULT_RULE) -> np.ndarray:
        x, w = rule.nodes_weights(0.0, self.b)
        phi = self.value(x)
        return (phi * w) @ phi.T

    def is_independent(self, rule: QuadratureRule = DEFAULT_RULE, rcond: float = 1e-12) -> bool:
        s = np.linalg.eigvalsh(self.gram_matrix(rule))
        return bool(s[0] > rcond * max(s[-1], np.finfo(float).tiny))

    def subset(self, indices: Sequence[int]) -> "TrialBasis":
        idx = list(indices)
        return TrialBasis(self.b, len(idx),
                          lambda x: self.value(x)[idx],
                          lambda x: self.derivative(x)[idx],
                          self.kind)


def fourier_sine_basis(b: float, N: int) -> TrialBasis:
    """sin(k pi x / b) for k = 1..N."""
    if N < 1:
        raise InputError("N must be at least 1")
    if not b > 0:
        raise InputError("b must be positive")
    kw = np.arange(1, N + 1)[:, None] * np.pi / b

    def value(x):
        return np.sin(kw * np.asarray(x, dtype=float))

    def derivative(x):
        return kw * np.cos(kw * np.asarray(x, dtype=float))

    return TrialBasis(b, N, value, derivative, kind="sine")


def sampled_basis(b: float, samples) -> TrialBasis:
    """Natural cubic-spline interpolants through sampled functions.

    ``samples`` is a sequence of ``(x, values)`` pairs, one per function.
    Each ``x`` must be increasing and run from 0 to b.
    """
    splines = []
    for i, (xs, vs) in enumerate(samples):
        xs = np.asarray(xs, dtype=float)
        vs = np.asarray(vs, dtype=float)
        if xs.ndim != 1 or xs.shape != vs.shape or xs.size < 4:
            raise InputError(f"function {i}: need matching 1-D x/value arrays with >= 4 points")
        if abs(xs[0]) > ENDPOINT_TOL * b or abs(xs[-1] - b) > ENDPOINT_TOL * b:
            raise InputError(f"function {i}: samples must cover [0, {b}]")
        if abs(vs[0]) > ENDPOINT_TOL or abs(vs[-1]) > ENDPOINT_TOL:
            raise EndpointViolation(
                f"function {i}: endpoint values {vs[0]:.3g}, {vs[-1]:.3g} are not zero")
        splines.append(CubicSpline(xs, vs, bc_type="natural"))
    if not splines:
        raise InputError("at least one sampled function is required")
    derivs = [s.derivative() for s in splines]

    def value(x):
        return np.array([s(x) for s in splines])

    def derivative(x):
        return np.array([d(x) for d in derivs])

    return TrialBasis(b, len(splines), value, derivative, kind="sampled")
