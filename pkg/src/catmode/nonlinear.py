"""Second-order frequency of a single trial shape that already keeps the far end fixed.

For such a shape the gravity term vanishes at first order. The second-order
correction to the vertical displacement is eliminated through the end-fixity
condition, which turns the potential energy into a quadratic in the modal
amplitude. Neither the correction field nor a multiplier is ever built.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assembly import first_order_u_fields
from .basis import TrialBasis
from .equilibrium import EquilibriumShape
from .errors import ConstraintViolated, InputError
from .quadrature import DEFAULT_RULE, QuadratureRule

CONSTRAINT_TOL = 1e-6


@dataclass(frozen=True)
class OneModeResult:
    C1: float  # potential coefficient: V = C1 alpha^2
    C2: float  # kinetic coefficient: T = C2 alpha_dot^2
    omega_tilde: float
    first_order_u_end: float  # -int y' psi', should be ~0


def one_mode_frequency(shape: EquilibriumShape, psi: TrialBasis, index: int = 0,
                       rule: QuadratureRule = DEFAULT_RULE,
                       tol: float = CONSTRAINT_TOL) -> OneModeResult:
    """omega = sqrt(C1 / C2) for trial function ``psi[index]``."""
    if not 0 <= index < psi.size:
        raise InputError(f"index {index} out of range for basis of size {psi.size}")
    one = psi.subset([index])
    x, w = rule.nodes_weights(0.0, shape.b)
    f = one.value(x)[0]
    df = one.derivative(x)[0]
    yp = shape._slope(x)
    sec = shape._sec(x)

    q = -float((yp * df) @ w)
    scale = math.sqrt(float((yp**2) @ w) * float((df**2) @ w))
    if not abs(q) < tol * scale:
        raise ConstraintViolated(
            f"trial function moves the far support at first order (|u(b)| = {abs(q):.3g}, "
            f"scale {scale:.3g})")

    g = shape.geometry
    C1 = 0.5 * shape.W * g.weight * float(((1 + yp**2) * df**2) @ w)
    U = first_order_u_fields(shape, one, x, rule)[0]
    C2 = 0.5 * g.m_bar * float(((U**2 + f**2) * sec) @ w)
    if not (C1 > 0 and C2 > 0):
        raise InputError("trial function has zero energy")
    return OneModeResult(C1, C2, math.sqrt(C1 / C2), q)
