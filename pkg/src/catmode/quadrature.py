"""Composite Gauss-Legendre quadrature, plain and cumulative."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError, NonFinite

PANELS_ENV = "CATMODE_QUAD_PANELS"


@lru_cache(maxsize=None)
def _gauss_legendre(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@dataclass(frozen=True)
class QuadratureRule:
    panel_count: int = 16
    nodes_per_panel: int = 10

    def __post_init__(self):
        if self.panel_count < 1 or self.nodes_per_panel < 1:
            raise InputError("panel_count and nodes_per_panel must be positive")

    @classmethod
    def from_env(cls, nodes_per_panel: int = 10) -> "QuadratureRule":
        panels = os.environ.get(PANELS_ENV)
        if panels is None:
            return cls(nodes_per_panel=nodes_per_panel)
        try:
            return cls(int(panels), nodes_per_panel)
        except ValueError as exc:
            raise InputError(f"{PANELS_ENV} must be a positive integer, got {panels!r}") from exc

    def refined(self) -> "QuadratureRule":
        return QuadratureRule(2 * self.panel_count, self.nodes_per_panel)

    @property
    def size(self) -> int:
        return self.panel_count * self.nodes_per_panel

    def edges(self, a: float, b: float) -> np.ndarray:
        return np.linspace(a, b, self.panel_count + 1)

    def nodes_weights(self, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
        """Flattened nodes and weights on [a, b], panel by panel."""
        t, w = _gauss_legendre(self.nodes_per_panel)
        e = self.edges(a, b)
        half = 0.5 * np.diff(e)[:, None]
        mid = 0.5 * (e[:-1] + e[1:])[:, None]
        return (mid + half * t).ravel(), (half * w).ravel()


DEFAULT_RULE = QuadratureRule()


def _evaluate(f, x):
    fx = np.asarray(f(x), dtype=float)
    if not np.all(np.isfinite(fx)):
        raise NonFinite("integrand is not finite at some quadrature node")
    return fx


def integrate(f, a: float, b: float, rule: QuadratureRule = DEFAULT_RULE):
    """Integrate a vectorised ``f`` over [a, b].

    ``f`` may return extra leading axes (e.g. one row per basis function);
    the integral is taken over the last axis.
    """
    if a > b:
        raise InputError("integration limits must satisfy a <= b")
    if a == b:
        return 0.0 * _evaluate(f, np.array([a]))[..., 0]
    x, w = rule.nodes_weights(a, b)
    return _evaluate(f, x) @ w


def cumulative_integrate(f, grid, rule: QuadratureRule = DEFAULT_RULE,
                         a: float = 0.0, b: float | None = None):
    """Running integrals ``int_a^{grid[i]} f`` for a sorted grid in [a, b].

    Whole panels of ``rule`` over [a, b] below each grid point are summed;
    the partial panel up to the point gets its own Gauss-Legendre rule of
    the same order. Returns an array shaped like ``f(grid)``.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1:
        raise InputError("grid must be one-dimensional")
    if b is None:
        b = float(grid[-1]) if grid.size else a
    if grid.size and (np.any(np.diff(grid) < 0) or grid[0] < a or grid[-1] > b * (1 + 1e-14) + 1e-300):
        raise InputError("grid must be sorted and lie within [a, b]")
    if b <= a:
        return np.zeros_like(_evaluate(f, grid))

    t, wt = _gauss_legendre(rule.nodes_per_panel)
    nodes, weights = rule.nodes_weights(a, b)
    fn = _evaluate(f, nodes)
    n = rule.nodes_per_panel
    panel_sums = (fn * weights).reshape(fn.shape[:-1] + (rule.panel_count, n)).sum(-1)
    prefix = np.concatenate([np.zeros(fn.shape[:-1] + (1,)), np.cumsum(panel_sums, -1)], -1)

    edges = rule.edges(a, b)
    k = np.clip(np.searchsorted(edges, grid, side="right") - 1, 0, rule.panel_count - 1)
    start = edges[k]
    half = 0.5 * (grid - start)
    sub = (start + half)[:, None] + half[:, None] * t  # (len(grid), n)
    fs = _evaluate(f, sub.ravel()).reshape(fn.shape[:-1] + sub.shape)
    partial = (fs * (half[:, None] * wt)).sum(-1)
    return prefix[..., k] + partial
