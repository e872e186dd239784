"""Small in-plane oscillations of an inextensible slack catenary by constrained assumed modes."""
from .assembly import (AssembledSystem, assemble, detect_degeneracy, exact_constraint_residual,
                       first_order_u, quadratic_constraint_residual)
from .basis import TrialBasis, fourier_sine_basis, sampled_basis
from .chain import DiscreteChain, linearized_frequencies, static_equilibrium
from .equilibrium import EquilibriumShape, SpanGeometry, arc_length, shape_eval, solve_equilibrium
from .errors import *  # noqa: F401,F403
from .modal import ModeSet, frequencies_vs_basis_size, nullspace_basis, solve_modes
from .nonlinear import OneModeResult, one_mode_frequency
from .quadrature import QuadratureRule, cumulative_integrate, integrate

__version__ = "0.1.0"
