"""From Hirzebruch-Jung lattice data back to a Puiseux hypersurface.

Given a full-rank L <= Z^n, rescale each axis so the first lattice point on
it becomes e_i. The rescaled lattice L' contains Z^n, and L' & (Q>=0)^n is
isomorphic to L & (R>=0)^n. Exponents chosen greedily from L' give the
series xi = sum X^lambda, whose minimal polynomial defines the hypersurface.
"""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import FracLattice, Lattice, lattice_from_generators
from .minpoly import PolyY, minimal_polynomial
from .puiseux import MonomialOrder, PuiseuxSeries, greedy_exponents
from .semigroup import (
    AffineSemigroup,
    decompose,
    is_smooth,
    rescaled_lattice,
    saturate,
)


@dataclass(frozen=True)
class HJResult:
    m: tuple
    l_prime: FracLattice
    exponents: tuple
    xi: PuiseuxSeries
    f: PolyY
    smooth: bool
    round_trip: bool

    @property
    def hypersurface(self):
        """False when L' = Z^n: the point is smooth and no equation is needed."""
        return bool(self.exponents)


def as_lattice(data, n=None):
    if isinstance(data, Lattice):
        return data
    rows = [tuple(r) for r in data]
    return lattice_from_generators(rows, n or len(rows[0]))


def rescale(lat):
    """(m, L') with m_i e_i the first point of L on axis i and L' = L / m."""
    m, lp = rescaled_lattice(lat)
    return tuple(int(x) for x in m), lp


def hj_exponents(l_prime, order=None):
    """Greedy exponents over L' & (Q>=0)^n.

    Every minimum lies in [0,1)^n: subtracting e_i keeps a point outside the
    current group (which contains Z^n) and lowers its weight. So only the
    box points of L' are candidates.
    """
    order = order or MonomialOrder.default(l_prime.n)
    box = l_prime.points_in_box([1] * l_prime.n, half_open=True)
    picked, group = greedy_exponents(box, l_prime.n, order, target=l_prime)
    assert group == l_prime
    return picked


def _regenerates(hb, lp):
    """Every point of L' in [0,2]^n decomposes over the Hilbert basis."""
    return all(decompose(p, hb) is not None for p in lp.points_in_box([2] * lp.n) if any(p))


def hj_to_puiseux(lat, order=None):
    """Run the converse construction and check it against the forward one."""
    lat = as_lattice(lat)
    n = lat.n
    m, lp = rescale(lat)
    exps = hj_exponents(lp, order)
    smooth = is_smooth(lp)
    if not exps:
        return HJResult(m, lp, (), PuiseuxSeries(n), PolyY(n, ()), smooth, True)
    xi = PuiseuxSeries(n, {lam: 1 for lam in exps})
    f = minimal_polynomial(xi)
    sat = saturate(AffineSemigroup(n, exps))
    ok = sat.span_group == lp and _regenerates(sat.hilbert_basis, lp)
    return HJResult(m, lp, exps, xi, f, smooth, ok)


def lipman_lattice(k, n):
    """kZ^n + Z(1,...,1): the lattice whose cone gives y^k = x_1...x_n."""
    rows = [tuple(k * int(i == j) for j in range(n)) for i in range(n)]
    rows.append((1,) * n)
    return lattice_from_generators(rows, n)


def l_prime_degree_identity(result):
    """deg f * det(k' L') == k'^n, computed on independent sides."""
    lp = result.l_prime
    return result.f.degree * lp.scaled.det == Fraction(lp.k) ** lp.n
