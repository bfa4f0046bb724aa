"""Normalizing y^3 with root xi = x + x^(2/3) y^(1/3) + y.

One fractional exponent generates everything. The saturation needs a
fourth generator, and the normalization is the cone over the twisted cubic.
"""

from puiseuxnorm import (
    AffineSemigroup,
    distinguished_exponents,
    format_series,
    is_saturated,
    is_smooth,
    minimal_polynomial,
    parse_series,
    saturate,
    toric_presentation,
)
from puiseuxnorm.expr import format_monomial, format_poly

xi = parse_series("x + x^(2/3)*y^(1/3) + y")
print("xi =", format_series(xi))

exps = distinguished_exponents(xi)
print("distinguished exponents:", [tuple(map(str, e)) for e in exps])

f = minimal_polynomial(xi)
print("f =", format_poly(f))

s = AffineSemigroup(2, exps)
sat = saturate(s)
print("saturated already?", is_saturated(s))
print("Hilbert basis of the saturation:")
for v in sat.hilbert_basis:
    print("   ", tuple(map(str, v)))
print("smooth?", is_smooth(sat.span_group))

# one coordinate per Hilbert basis element, in the order printed above
tp = toric_presentation(sat.hilbert_basis, sat.span_group.k, degree_bound=2)
names = ["x", "y", "z", "w"]
print("exponent matrix:", tp.exponent_matrix)
for plus, minus in tp.binomials:
    print("   ", format_monomial(plus, names) or "1", "-", format_monomial(minus, names) or "1")
