"""From a lattice L in Z^n back to an equation.

Rescaling each axis by its first lattice point gives L' containing Z^n;
greedy exponents from the unit box of L' give a series, and its minimal
polynomial cuts out a hypersurface with the same normalization.
"""

from puiseuxnorm import hj_to_puiseux, lattice_from_generators, lipman_lattice
from puiseuxnorm.expr import format_poly, format_series

for k, n in [(2, 2), (3, 2), (2, 3), (4, 3)]:
    res = hj_to_puiseux(lipman_lattice(k, n))
    print(f"k={k} n={n}: m={res.m} xi={format_series(res.xi)}  f={format_poly(res.f)}")

# a lattice that is not of that shape
lat = lattice_from_generators([(5, 0), (0, 5), (1, 2)], 2)
res = hj_to_puiseux(lat)
print()
print("L basis:", lat.basis, " m =", res.m)
print("L' = (1/%d) *" % res.l_prime.k, res.l_prime.scaled.basis)
print("exponents:", [tuple(map(str, e)) for e in res.exponents])
print("f =", format_poly(res.f))
print("forward pipeline gives back L':", res.round_trip)

res = hj_to_puiseux(lattice_from_generators([(1, 0), (0, 1)], 2))
print()
print("L = Z^2 is smooth:", res.smooth, "| hypersurface needed:", res.hypersurface)
