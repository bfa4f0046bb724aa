import random
from fractions import Fraction as F

import pytest

from puiseuxnorm.errors import NormalizationError
from puiseuxnorm.expr import parse_series
from puiseuxnorm.hj import (
    hj_exponents,
    hj_to_puiseux,
    l_prime_degree_identity,
    lipman_lattice,
    rescale,
)
from puiseuxnorm.lattice import FracLattice, lattice_from_generators, standard_lattice
from puiseuxnorm.minpoly import PolyY
from puiseuxnorm.puiseux import PuiseuxSeries

from oracles import span_contains


def frac(gens, n):
    return FracLattice.from_generators(gens, n)


class TestRescale:
    def test_identity(self):
        m, lp = rescale(standard_lattice(2))
        assert m == (1, 1) and lp == FracLattice.integral(2)

    def test_diagonal_pair(self):
        m, lp = rescale(lattice_from_generators([(1, 1), (1, -1)], 2))
        assert m == (2, 2)
        assert lp == frac([(F(1, 2), F(1, 2))], 2)

    def test_lipman_three(self):
        m, lp = rescale(lipman_lattice(2, 3))
        assert m == (2, 2, 2)
        assert lp == frac([(F(1, 2),) * 3], 3)

    def test_m_is_minimal_by_search(self):
        rng = random.Random(6)
        for _ in range(15):
            gens = [tuple(rng.randint(-4, 4) for _ in range(2)) for _ in range(3)]
            try:
                lat = lattice_from_generators(gens, 2)
            except NormalizationError:
                continue
            m, _ = rescale(lat)
            for i in range(2):
                e = lambda t: tuple(t * int(i == j) for j in range(2))  # noqa: E731
                assert span_contains(gens, e(m[i]), bound=15)
                assert not any(span_contains(gens, e(t), bound=15) for t in range(1, m[i]))


class TestExponents:
    def test_integral(self):
        assert hj_exponents(FracLattice.integral(2)) == ()

    def test_half(self):
        assert hj_exponents(frac([(F(1, 2), F(1, 2))], 2)) == ((F(1, 2), F(1, 2)),)

    def test_thirds_takes_box_minimum(self):
        assert hj_exponents(frac([(F(2, 3), F(1, 3))], 2)) == ((F(1, 3), F(2, 3)),)


class TestPipeline:
    def test_diagonal_pair(self):
        res = hj_to_puiseux(lattice_from_generators([(1, 1), (1, -1)], 2))
        assert res.xi == parse_series("x^(1/2)*y^(1/2)")
        assert res.f == PolyY(2, (parse_series("-x*y"), PuiseuxSeries(2)))
        assert res.round_trip and not res.smooth

    @pytest.mark.parametrize("k, n", [(2, 2), (3, 2), (2, 3), (4, 3), (3, 3)])
    def test_lipman(self, k, n):
        res = hj_to_puiseux(lipman_lattice(k, n))
        prod_ = PuiseuxSeries.monomial((1,) * n)
        assert res.f.degree == k
        assert res.f.coeffs[0] == -prod_
        assert all(c.is_zero() for c in res.f.coeffs[1:])
        assert res.round_trip
        assert l_prime_degree_identity(res)

    def test_smooth_input(self):
        res = hj_to_puiseux(standard_lattice(2))
        assert res.smooth and not res.hypersurface
        assert res.xi.is_zero() and res.exponents == ()

    def test_rank_deficient(self):
        with pytest.raises(NormalizationError, match="not full rank"):
            hj_to_puiseux([(1, 1), (2, 2)])

    def test_sequence_input(self):
        res = hj_to_puiseux([(3, 0), (0, 3), (1, 1)])
        assert res.m == (3, 3)
        assert res.f.degree == 3 and res.f.coeffs[0] == -parse_series("x*y")
