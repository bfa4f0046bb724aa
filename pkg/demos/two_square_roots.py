"""xi = x^(1/2) + y^(1/2): a Puiseux hypersurface that is not quasi-ordinary.

The four conjugates are the sign flips, the quartic they define has a
non-normal singularity, and its normalization is smooth.
"""

from puiseuxnorm import (
    AffineSemigroup,
    character_group,
    conjugates,
    distinguished_exponents,
    format_series,
    is_saturated,
    is_smooth,
    minimal_polynomial,
    parse_series,
    saturate,
    support_group,
)
from puiseuxnorm.expr import format_poly
from puiseuxnorm.minpoly import evaluate

xi = parse_series("x^(1/2) + y^(1/2)")
m = support_group(xi)
print("M / Z^2 has order", m.index())

for c in conjugates(xi, character_group(m)):
    print("  conjugate:", format_series(c))

f = minimal_polynomial(xi)
print("f =", format_poly(f))
print("f(xi) =", format_series(evaluate(f, xi)))

# (Y^2 - x - y)^2 - 4xy, expanded by hand with series arithmetic
x, y = parse_series("x", 2), parse_series("y", 2)
print("constant term matches (x - y)^2:", f.coeffs[0] == (x - y) ** 2)

s = AffineSemigroup(2, distinguished_exponents(xi))
print("saturated:", is_saturated(s))
print("Hilbert basis:", [tuple(map(str, v)) for v in saturate(s).hilbert_basis])
print("smooth:", is_smooth(saturate(s).span_group))
