import numpy as np
import pytest

from catmode import fourier_sine_basis, one_mode_frequency, sampled_basis
from catmode.errors import ConstraintViolated

import reference_values as pv


def test_first_mode_symmetric_case(shapes, mode_sets):
    res = one_mode_frequency(shapes[0.0], mode_sets[0.0].as_basis(1))
    assert abs(res.omega_tilde - pv.ONE_MODE_OMEGA_H0) <= 5e-4
    assert res.C1 > 0 and res.C2 > 0


@pytest.mark.parametrize("i", range(3))
def test_matches_linear_solve(shapes, mode_sets, h, i):
    modes = mode_sets[h]
    res = one_mode_frequency(shapes[h], modes.as_basis(3), i)
    assert res.omega_tilde == pytest.approx(modes.frequencies[i], rel=1e-4)


def test_four_term_modes_also_agree(shapes, systems, h):
    from catmode import solve_modes
    modes = solve_modes(systems[h])
    basis = modes.as_basis(3)
    for i in range(3):
        w = one_mode_frequency(shapes[h], basis, i).omega_tilde
        assert w == pytest.approx(modes.frequencies[i], rel=1e-4)


@pytest.mark.parametrize("c", [-3.0, 0.01, 250.0])
def test_scale_invariance(shapes, mode_sets, c):
    modes = mode_sets[0.1]
    base = one_mode_frequency(shapes[0.1], modes.as_basis(1))
    scaled = sampled_basis(modes.shape.b, [(modes.x, c * modes.v[0])])
    res = one_mode_frequency(shapes[0.1], scaled)
    assert res.omega_tilde == pytest.approx(base.omega_tilde, rel=1e-12)
    assert res.C1 == pytest.approx(c**2 * base.C1, rel=1e-10)
    assert res.C2 == pytest.approx(c**2 * base.C2, rel=1e-10)


def test_generic_shape_rejected(shapes, h):
    with pytest.raises(ConstraintViolated):
        one_mode_frequency(shapes[h], fourier_sine_basis(0.6, 1))


def test_antisymmetric_sine_accepted(shapes):
    # sin(2 pi x / b) keeps the far end fixed at first order when h = 0
    res = one_mode_frequency(shapes[0.0], fourier_sine_basis(0.6, 2), 1)
    assert abs(res.first_order_u_end) < 1e-12
    assert res.omega_tilde > 0


def test_coefficients_against_assembly(shapes, systems):
    # C1 = -lambda0 a.B.a / 2 and C2 = a.M.a / 2 for a = e_2 in the h=0 sine system
    s = systems[0.0]
    res = one_mode_frequency(shapes[0.0], s.basis, 1)
    assert res.C1 == pytest.approx(-0.5 * s.lambda0 * s.B[1, 1], rel=1e-10)
    assert res.C2 == pytest.approx(0.5 * s.M[1, 1], rel=1e-10)
