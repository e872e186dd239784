"""Convergence of the first three frequencies with sine-basis size and with
the number of links in the discrete chain."""
import argparse

from catmode import (SpanGeometry, frequencies_vs_basis_size, linearized_frequencies,
                     solve_equilibrium, static_equilibrium)

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--h", type=float, default=0.0)
ap.add_argument("--b", type=float, default=0.6)
ap.add_argument("--max-links", type=int, default=800)
args = ap.parse_args()

geom = SpanGeometry(args.b, args.h)
shape = solve_equilibrium(geom)
print("N      w1          w2          w3")
for row in frequencies_vs_basis_size(shape, [2, 3, 4, 5, 6, 7, 8, 10, 12, 16, 20, 24]):
    print(f"{row[0]:<4d}" + "".join(f"{w:12.6f}" for w in row[1:]))

print("\nlinks  w1          w2          w3          H/(m g W)")
n = 25
while n <= args.max_links:
    chain = static_equilibrium(geom, n)
    w = linearized_frequencies(chain, 3)
    print(f"{n:<6d}" + "".join(f"{x:12.6f}" for x in w) + f"{chain.H / (geom.weight * shape.W):14.8f}")
    n *= 2
