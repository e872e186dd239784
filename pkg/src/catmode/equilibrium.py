"""Static catenary between (0, 0) and (b, h).

The equilibrium curve is ``y = W cosh(C + x/W) - W cosh(C)`` where ``W`` is
the horizontal tension divided by the weight per unit length. Eliminating
``C`` from the end condition and the length condition gives

    2 W sinh(b / 2W) = sqrt(L^2 - h^2),     C = atanh(h/L) - b/(2W),

so only a scalar root find in ``W`` is needed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .errors import InputError, NoConvergence, OutOfDomain, TautOrImpossible

MAX_ITER = 200


@dataclass(frozen=True)
class SpanGeometry:
    b: float
    h: float = 0.0
    L: float = 1.0
    m_bar: float = 1.0
    g: float = 1.0

    def __post_init__(self):
        for name in ("b", "L", "m_bar", "g"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise InputError(f"{name} must be positive and finite, got {val!r}")
        if not math.isfinite(self.h):
            raise InputError(f"h must be finite, got {self.h!r}")
        if math.hypot(self.b, self.h) >= self.L:
            raise TautOrImpossible(
                f"chord {math.hypot(self.b, self.h):.6g} is not shorter than length {self.L:.6g}"
            )

    @property
    def weight(self) -> float:
        """Weight per unit length, m_bar * g."""
        return self.m_bar * self.g


class ShapePoint(NamedTuple):
    y: np.ndarray | float
    y_prime: np.ndarray | float
    sec_theta: np.ndarray | float


@dataclass(frozen=True)
class EquilibriumShape:
    geometry: SpanGeometry
    W: float
    C: float

    @property
    def b(self) -> float:
        return self.geometry.b

    @property
    def h(self) -> float:
        return self.geometry.h

    @property
    def L(self) -> float:
        return self.geometry.L

    @property
    def horizontal_tension(self) -> float:
        return self.geometry.weight * self.W

    def _check(self, x):
        x = np.asarray(x, dtype=float)
        slack = 1e-12 * self.b
        if np.any(x < -slack) or np.any(x > self.b + slack):
            raise OutOfDomain(f"x must lie in [0, {self.b}]")
        return np.clip(x, 0.0, self.b)

    def y(self, x):
        x = self._check(x)
        return self.W * (np.cosh(self.C + x / self.W) - np.cosh(self.C))

    def slope(self, x):
        return np.sinh(self.C + self._check(x) / self.W)

    def sec_theta(self, x):
        return np.cosh(self.C + self._check(x) / self.W)

    def curvature(self, x):
        """y'' = sec(theta) / W."""
        return self.sec_theta(x) / self.W

    def residuals(self) -> tuple[float, float]:
        """(y(b) - h, arc length - L), both from the closed forms."""
        end = float(self.y(self.b)) - self.h
        length = self.W * (math.sinh(self.C + self.b / self.W) - math.sinh(self.C)) - self.L
        return end, length

    # Unchecked evaluators for quadrature nodes, which are always interior.
    def _slope(self, x):
        return np.sinh(self.C + x / self.W)

    def _sec(self, x):
        return np.cosh(self.C + x / self.W)


def _length_gap(W: float, b: float, target: float) -> float:
    with np.errstate(over="ignore"):
        return float(2.0 * W * np.sinh(b / (2.0 * W))) - target


def solve_equilibrium(geom: SpanGeometry, tol: float = 1e-12) -> EquilibriumShape:
    """Solve for (W, C) given the span geometry.

    The length gap ``2W sinh(b/2W) - sqrt(L^2 - h^2)`` decreases monotonically
    from +inf to ``b - sqrt(L^2 - h^2) < 0`` as W grows, so a bracket is found
    by geometric expansion from ``W = b/4`` and refined with Brent's method.
    """
    if not tol > 0:
        raise InputError("tol must be positive")
    b, h, L = geom.b, geom.h, geom.L
    target = math.sqrt(L * L - h * h)

    lo = hi = b / 4.0
    for _ in range(MAX_ITER):
        if _length_gap(hi, b, target) < 0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise NoConvergence("could not bracket W from above")
    for _ in range(MAX_ITER):
        if _length_gap(lo, b, target) > 0:
            break
        lo, hi = lo / 2.0, lo
    else:
        raise NoConvergence("could not bracket W from below")

    rtol = max(tol, 4 * np.finfo(float).eps)
    try:
        W, info = brentq(_length_gap, lo, hi, args=(b, target), rtol=rtol,
                         xtol=1e-300, maxiter=MAX_ITER, full_output=True)
    except RuntimeError as exc:
        raise NoConvergence(str(exc)) from exc
    if not info.converged:
        raise NoConvergence(info.flag)

    C = math.atanh(h / L) - b / (2.0 * W)
    shape = EquilibriumShape(geom, W, C)
    end, length = shape.residuals()
    scale = max(1.0, L)
    if abs(end) > 1e3 * rtol * scale or abs(length) > 1e3 * rtol * scale:
        raise NoConvergence(f"equilibrium residuals too large: {end:.3g}, {length:.3g}")
    return shape


def shape_eval(shape: EquilibriumShape, x) -> ShapePoint:
    return ShapePoint(shape.y(x), shape.slope(x), shape.sec_theta(x))


def arc_length(shape: EquilibriumShape, x):
    """Length along the chain from the left support to abscissa x."""
    x = shape._check(x)
    W, C = shape.W, shape.C
    return W * (np.sinh(C + x / W) - math.sinh(C))
