"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

A :class:`CycloNumber` is a polynomial in a primitive N-th root of unity
with rational coefficients, reduced modulo the N-th cyclotomic polynomial.
Numbers of different conductors are combined in Q(zeta_lcm).
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm


def _poly_divmod(num, den):
    """Divide integer/rational coefficient lists (low degree first); den monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic: conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(num)


def _reduce(coeffs, n):
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs)
    if len(c) <= deg:
        return tuple(c) + (0,) * (deg - len(c))
    _, rem = _poly_divmod(c, phi)
    return tuple(rem)


class CycloNumber:
    """Element of Q(zeta_N), kept reduced modulo Phi_N.

    Coefficients are ints or Fractions; ``coeffs[i]`` multiplies zeta_N**i.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs):
        self.conductor = conductor
        self.coeffs = _reduce(coeffs, conductor)

    @classmethod
    def rational(cls, q):
        return cls(1, (q,))

    @classmethod
    def root_of_unity(cls, n, j=1):
        """zeta_n ** j."""
        j %= n
        return cls(n, [0] * j + [1])

    def lift(self, m):
        """Same number written in conductor m (a multiple of the current one)."""
        if m == self.conductor:
            return self
        step = m // self.conductor
        if step * self.conductor != m:
            raise ValueError("cyclotomic: conductor does not divide target")
        c = [0] * ((len(self.coeffs) - 1) * step + 1)
        for i, x in enumerate(self.coeffs):
            c[i * step] = x
        return CycloNumber(m, c)

    def _common(self, other):
        if not isinstance(other, CycloNumber):
            other = CycloNumber.rational(other)
        m = lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m), m

    def __add__(self, other):
        a, b, m = self._common(other)
        return CycloNumber(m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b, m = self._common(other)
        prod = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber(m, prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("cyclotomic: negative powers are not supported")
        result, base = CycloNumber.rational(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNumber):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("cyclotomic: not a rational number")
        return Fraction(self.coeffs[0])

    def __repr__(self):
        if self.is_rational():
            return f"CycloNumber({Fraction(self.coeffs[0])})"
        terms = [f"{Fraction(c)}*z{self.conductor}^{i}" for i, c in enumerate(self.coeffs) if c]
        return "CycloNumber(" + " + ".join(terms) + ")"


def as_cyclo(x):
    return x if isinstance(x, CycloNumber) else CycloNumber.rational(Fraction(x))
