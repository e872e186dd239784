import pytest

from catmode import SpanGeometry, assemble, fourier_sine_basis, solve_equilibrium, solve_modes

from reference_values import B_SPAN

CASES = (0.0, 0.1)


@pytest.fixture(scope="session")
def shapes():
    return {h: solve_equilibrium(SpanGeometry(B_SPAN, h)) for h in CASES}


@pytest.fixture(scope="session")
def systems(shapes):
    """N=4 sine-basis systems for both cases."""
    return {h: assemble(s, fourier_sine_basis(B_SPAN, 4)) for h, s in shapes.items()}


@pytest.fixture(scope="session")
def mode_sets(shapes):
    """Modes at the basis size matching the printed frequencies."""
    from reference_values import FREQUENCY_N
    return {h: solve_modes(assemble(s, fourier_sine_basis(B_SPAN, FREQUENCY_N[h])))
            for h, s in shapes.items()}


@pytest.fixture(params=CASES, ids=["h0", "h0.1"])
def h(request):
    return request.param
