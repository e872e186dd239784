import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from catmode import QuadratureRule, cumulative_integrate, fourier_sine_basis, integrate
from catmode.errors import NonFinite
from catmode.quadrature import PANELS_ENV


def test_polynomial():
    assert integrate(lambda x: x**2, 0.0, 1.0) == pytest.approx(1 / 3, abs=1e-15)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(1, 8), st.lists(st.floats(-3, 3), min_size=1, max_size=12))
def test_exact_for_low_degree(panels, order, coeffs):
    # degree <= 2*order - 1 is integrated exactly
    c = np.array(coeffs[: 2 * order])
    poly = np.polynomial.Polynomial(c)
    exact = poly.integ()(1.3) - poly.integ()(-0.2)
    got = integrate(poly, -0.2, 1.3, QuadratureRule(panels, order))
    assert got == pytest.approx(exact, abs=1e-12 * max(1, np.abs(c).sum()))


def test_sine_orthogonality():
    f = lambda x: np.sin(np.pi * x / 0.6) * np.sin(2 * np.pi * x / 0.6)
    assert abs(integrate(f, 0, 0.6)) < 1e-15


def test_chain_length(shapes, h):
    s = shapes[h]
    assert integrate(s._sec, 0, s.b) == pytest.approx(1.0, abs=1e-12)
    assert cumulative_integrate(s._sec, [s.b], b=s.b)[0] == pytest.approx(1.0, abs=1e-12)


def test_cumulative_constant():
    out = cumulative_integrate(lambda x: np.ones_like(x), [0.0, 0.3, 0.6], b=0.6)
    np.testing.assert_allclose(out, [0, 0.3, 0.6], atol=1e-15)


def test_cumulative_matches_prefix_integrals():
    f = lambda x: np.exp(np.sin(5 * x))
    grid = np.sort(np.random.default_rng(1).uniform(0, 0.6, 25))
    run = cumulative_integrate(f, grid, b=0.6)
    prefix = [integrate(f, 0.0, g) for g in grid]
    np.testing.assert_allclose(run, prefix, atol=1e-12)


def test_by_parts_running_integral(shapes, h):
    # -int_0^x y' phi' = -y' phi + (1/W) int_0^x sec phi, checked pointwise
    s = shapes[h]
    basis = fourier_sine_basis(s.b, 1)
    x = np.linspace(0, s.b, 41)
    lhs = cumulative_integrate(lambda t: -s._slope(t) * basis.derivative(t)[0], x, b=s.b)
    rhs = -s._slope(x) * basis.value(x)[0] + cumulative_integrate(
        lambda t: s._sec(t) * basis.value(t)[0], x, b=s.b) / s.W
    np.testing.assert_allclose(lhs, rhs, atol=1e-10)


def test_vector_valued_integrand():
    basis = fourier_sine_basis(0.6, 3)
    got = integrate(basis.value, 0, 0.6)
    k = np.arange(1, 4)
    np.testing.assert_allclose(got, 0.6 / (k * np.pi) * (1 - np.cos(k * np.pi)), atol=1e-14)


def test_nonfinite():
    with pytest.raises(NonFinite):
        integrate(lambda x: np.full_like(x, np.nan), 0, 1)


def test_env_override(monkeypatch):
    monkeypatch.setenv(PANELS_ENV, "32")
    assert QuadratureRule.from_env().panel_count == 32
    monkeypatch.delenv(PANELS_ENV)
    assert QuadratureRule.from_env() == QuadratureRule(16, 10)


def test_nodes_inside():
    x, w = QuadratureRule().nodes_weights(0, 0.6)
    assert x.size == 160 and np.all((x > 0) & (x < 0.6))
    assert w.sum() == pytest.approx(0.6, abs=1e-15)
