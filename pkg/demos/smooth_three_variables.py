"""Two characteristic exponents in three variables whose saturation is free."""

from fractions import Fraction as F

from puiseuxnorm import AffineSemigroup, is_smooth, m_vector, saturate

lam = [(F(3, 2), 1, 0), (2, F(3, 2), 1)]
sat = saturate(AffineSemigroup(3, lam))

print("span group: k =", sat.span_group.k, "basis", sat.span_group.scaled.basis)
print("first point on each axis:", [str(t) for t in m_vector(sat.span_group)])
print("Hilbert basis:")
for v in sat.hilbert_basis:
    print("   ", tuple(map(str, v)))
print("three generators, so the saturation is a copy of N^3:", is_smooth(sat.span_group))
