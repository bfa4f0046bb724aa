"""Finite Puiseux series, weighted monomial orders, distinguished exponents."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclotomic import as_cyclo
from .errors import NormalizationError
from .lattice import FracLattice


def expvec(values):
    """Normalize an exponent vector to a tuple of Fractions."""
    return tuple(Fraction(x) for x in values)


def is_integral(v):
    return all(x.denominator == 1 for x in v)


class PuiseuxSeries:
    """A finite sum of terms ``c * X^lambda`` with lambda in (Q>=0)^n.

    ``terms`` maps exponent tuples (Fractions) to nonzero CycloNumbers.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for exp, c in (terms or {}).items():
            exp = expvec(exp)
            if len(exp) != n:
                raise NormalizationError("puiseux", f"exponent {exp} is not {n}-dimensional")
            if any(x < 0 for x in exp):
                raise NormalizationError("puiseux", "exponents must be nonnegative")
            c = as_cyclo(c)
            if exp in clean:
                c = clean[exp] + c
            if c.is_zero():
                clean.pop(exp, None)
            else:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = expvec(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(Fraction(0),) * n: c})

    def support(self):
        return list(self.terms)

    def is_zero(self):
        return not self.terms

    def denominator(self):
        return lcm(1, *(x.denominator for e in self.terms for x in e))

    def is_integral(self):
        """All exponents integral and all coefficients rational."""
        return all(is_integral(e) and c.is_rational() for e, c in self.terms.items())

    def _check(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = PuiseuxSeries.constant(self.n, other)
        if other.n != self.n:
            raise NormalizationError("puiseux", "dimension mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return PuiseuxSeries(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return PuiseuxSeries(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = PuiseuxSeries.constant(self.n, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxSeries.constant(self.n, other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.n == other.n and self.terms.keys() == other.terms.keys() and all(
            c == other.terms[e] for e, c in self.terms.items()
        )

    __hash__ = None

    def sorted_terms(self, order=None):
        order = order or MonomialOrder.default(self.n)
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]))

    def __repr__(self):
        from .expr import format_series

        return f"PuiseuxSeries({format_series(self)!r})"


@dataclass(frozen=True)
class MonomialOrder:
    """Weight order on (Q>=0)^n with lexicographic tie-break.

    Compares ``weight . v`` first, then ``v`` lexicographically with the first
    coordinate most significant. This is a total additive order.
    """

    weight: tuple

    def __post_init__(self):
        w = expvec(self.weight)
        if not w or any(x <= 0 for x in w):
            raise NormalizationError("puiseux", "weight entries must be positive")
        object.__setattr__(self, "weight", w)

    @classmethod
    def default(cls, n):
        return cls((1,) * n)

    def key(self, v):
        if len(v) != len(self.weight):
            raise NormalizationError("puiseux", "dimension mismatch")
        return (sum(w * x for w, x in zip(self.weight, v)), tuple(v))


def omega_compare(a, b, order):
    """-1, 0 or 1 as a is less than, equal to or greater than b."""
    ka, kb = order.key(expvec(a)), order.key(expvec(b))
    return (ka > kb) - (ka < kb)


def greedy_exponents(candidates, n, order, target=None):
    """Repeatedly pick the order-minimal candidate outside the current group.

    The group starts as Z^n and absorbs each pick. Stops when every candidate
    lies in the group (or the group equals ``target``). Returns the picks and
    the final group.
    """
    group = FracLattice.integral(n)
    ranked = sorted({expvec(c) for c in candidates}, key=order.key)
    picked = []
    for c in ranked:
        if target is not None and group == target:
            break
        if c in group:
            continue
        picked.append(c)
        group = group.add([c])
    return tuple(picked), group


def support_group(xi):
    """Z^n + Z.Supp(xi)."""
    if xi.is_zero():
        raise NormalizationError("puiseux", "empty support")
    return FracLattice.from_generators(xi.support(), xi.n)


def distinguished_exponents(xi, order=None):
    """Distinguished exponents of ``xi`` chosen greedily along ``order``.

    Each exponent is the smallest support element not already in the group
    generated by Z^n and the previously chosen exponents. Scanning the
    support once in increasing order is enough: an element skipped because it
    was in the group stays in the (growing) group.
    """
    if xi.is_zero():
        raise NormalizationError("puiseux", "empty support")
    order = order or MonomialOrder.default(xi.n)
    picked, _ = greedy_exponents(xi.support(), xi.n, order)
    return picked
