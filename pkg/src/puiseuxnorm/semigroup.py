"""Affine semigroups generated by (Z>=0)^n and finitely many rational vectors.

All semigroups here live in the positive orthant, so their cone is the
orthant itself and the saturation is ``M & (Q>=0)^n`` with ``M = Z S``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NormalizationError
from .lattice import FracLattice, Lattice, member
from .puiseux import expvec, is_integral


def canonical_key(v):
    """Canonical order on exponent vectors: by total degree, then larger
    leading coordinates first. For equal degrees, (1,0) precedes (0,1)."""
    return (sum(v), tuple(-x for x in v))


def unit_vectors(n):
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


@dataclass(frozen=True)
class AffineSemigroup:
    """Semigroup generated by e_1, ..., e_n and ``generators``.

    Integral generators are absorbed and duplicates removed on construction.
    """

    n: int
    generators: tuple = ()

    def __post_init__(self):
        seen = []
        for g in self.generators:
            g = expvec(g)
            if len(g) != self.n:
                raise NormalizationError("semigroup", f"generator {g} is not {self.n}-dimensional")
            if any(x < 0 for x in g):
                raise NormalizationError("semigroup", "generators must lie in the positive orthant")
            if not is_integral(g) and g not in seen:
                seen.append(g)
        object.__setattr__(self, "generators", tuple(seen))

    def all_generators(self):
        return unit_vectors(self.n) + list(self.generators)

    def __contains__(self, t):
        return decompose(t, self.all_generators()) is not None


@dataclass(frozen=True)
class SaturatedSemigroup:
    n: int
    span_group: FracLattice
    hilbert_basis: tuple


def decompose(target, gens):
    """Nonnegative integer coefficients writing ``target`` over ``gens``, or None.

    Every generator must be a nonzero vector in the orthant, which bounds the
    coefficient of each generator by the target's coordinates.
    """
    target = expvec(target)
    gens = [expvec(g) for g in gens]
    if any(x < 0 for x in target):
        return None
    if any(not any(g) for g in gens):
        raise NormalizationError("semigroup", "zero generator")
    memo = {}

    def rec(j, t):
        if not any(t):
            return ()
        if j == len(gens):
            return None
        key = (j, t)
        if key in memo:
            return memo[key]
        g = gens[j]
        bound = min(ti / gi for ti, gi in zip(t, g) if gi > 0)
        result = None
        a, cur = 0, t
        while a <= bound:
            rest = rec(j + 1, cur)
            if rest is not None:
                result = (a,) + rest
                break
            a += 1
            cur = tuple(x - y for x, y in zip(cur, g))
            if any(x < 0 for x in cur):
                break
        memo[key] = result
        return result

    res = rec(0, target)
    if res is None:
        return None
    return res + (0,) * (len(gens) - len(res))


def span_group(s):
    """M = Z^n + sum of Z*lambda over the extra generators."""
    return FracLattice.from_generators(list(s.generators), s.n)


def m_vector(m):
    """Per-axis generator of the group on each coordinate axis.

    Entry i is the least positive t with t*e_i in the lattice. For an integer
    :class:`Lattice` these are integers; for a :class:`FracLattice` containing
    Z^n they are unit fractions.
    """
    if isinstance(m, Lattice):
        scaled, k = m, 1
    else:
        scaled, k = m.scaled, m.k
    n = scaled.n
    out = []
    for i in range(n):
        t = 1
        while not member(scaled, [t * int(i == j) for j in range(n)]):
            t += 1
        out.append(Fraction(t, k))
    return tuple(out)


def hilbert_basis(m):
    """Minimal generating set of ``M & (Q>=0)^n`` in canonical order.

    Irreducible elements lie in the box prod [0, m_i]: subtracting m_i*e_i
    from a point with i-th coordinate beyond m_i stays in the semigroup. So it
    suffices to enumerate the box and drop the points that split as a sum of
    two nonzero box points.
    """
    box = m_vector(m)
    pts = {p for p in m.points_in_box(box) if any(p)}
    basis = []
    for p in pts:
        reducible = any(
            q != p and tuple(a - b for a, b in zip(p, q)) in pts for q in pts
        )
        if not reducible:
            basis.append(p)
    return tuple(sorted(basis, key=canonical_key))


def saturate(s):
    m = span_group(s)
    return SaturatedSemigroup(s.n, m, hilbert_basis(m))


def is_saturated(s):
    return all(p in s for p in saturate(s).hilbert_basis)


def rescaled_lattice(m):
    """The lattice obtained by dividing coordinate i by m_i."""
    mv = m_vector(m)
    if isinstance(m, Lattice):
        rows = [tuple(Fraction(x) for x in r) for r in m.basis]
    else:
        rows = m.basis()
    scaled = [tuple(x / mi for x, mi in zip(r, mv)) for r in rows]
    return mv, FracLattice.from_generators(scaled, m.n)


def is_smooth(m):
    """True iff the rescaled lattice is Z^n, i.e. M & (Q>=0)^n is free."""
    _, lp = rescaled_lattice(m)
    return lp.index() == 1
