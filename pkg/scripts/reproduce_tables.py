"""Print equilibrium constants, assembled matrices, multipliers, frequencies and
one-mode second-order frequencies for the two reference suspensions."""
import numpy as np

from catmode import (SpanGeometry, assemble, fourier_sine_basis, one_mode_frequency,
                     solve_equilibrium, solve_modes)

np.set_printoptions(precision=4, suppress=True, linewidth=100)

for h in (0.0, 0.1):
    shape = solve_equilibrium(SpanGeometry(0.6, h))
    print(f"=== b=0.6, h={h} ===")
    print(f"W = {shape.W:.7f}   C = {shape.C:.7f}")
    system = assemble(shape, fourier_sine_basis(0.6, 4))
    print("M =\n", system.M, "\nB =\n", system.B)
    print("p =", system.p, "  q =", system.q)
    print(f"lambda0 = {system.lambda0:.7f}   (quadrature change {system.quadrature_change:.1e})")
    for N in (4, 7):
        modes = solve_modes(assemble(shape, fourier_sine_basis(0.6, N)))
        basis = modes.as_basis(3)
        tilde = [one_mode_frequency(shape, basis, i).omega_tilde for i in range(3)]
        print(f"N={N}: omega = {modes.frequencies[:3]}   one-mode omega = {np.array(tilde)}")
    print()
