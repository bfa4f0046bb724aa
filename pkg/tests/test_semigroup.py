import random
from fractions import Fraction as F

import pytest

from puiseuxnorm.errors import NormalizationError
from puiseuxnorm.lattice import FracLattice, lattice_from_generators, standard_lattice
from puiseuxnorm.semigroup import (
    AffineSemigroup,
    decompose,
    hilbert_basis,
    is_saturated,
    is_smooth,
    m_vector,
    saturate,
    span_group,
)

from oracles import brute_hilbert_basis, decomposes, lattice_points

VERONESE = ((1, 0), (F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)), (0, 1))


def frac(gens, n):
    return FracLattice.from_generators([tuple(F(x) for x in g) for g in gens], n)


class TestSpanGroup:
    def test_empty(self):
        m = span_group(AffineSemigroup(2))
        assert m.k == 1 and m == FracLattice.integral(2)

    def test_veronese(self):
        m = span_group(AffineSemigroup(2, [(F(2, 3), F(1, 3))]))
        assert m.k == 3
        assert m.scaled.basis == ((1, 2), (0, 3))
        assert m.index() == 3

    def test_half_lattice(self):
        m = span_group(AffineSemigroup(2, [(F(1, 2), 0), (0, F(1, 2))]))
        assert m.k == 2 and m.scaled == standard_lattice(2)

    def test_rejects_negative(self):
        with pytest.raises(NormalizationError):
            AffineSemigroup(2, [(F(-1, 2), 0)])


class TestHilbertBasis:
    @pytest.mark.parametrize(
        "gens, n, expected",
        [
            ([], 2, ((1, 0), (0, 1))),
            ([(F(2, 3), F(1, 3))], 2, VERONESE),
            ([(F(1, 2), F(1, 2))], 2, ((1, 0), (F(1, 2), F(1, 2)), (0, 1))),
            ([(F(1, 2), 0), (0, F(1, 2))], 2, ((F(1, 2), 0), (0, F(1, 2)))),
        ],
    )
    def test_examples(self, gens, n, expected):
        hb = saturate(AffineSemigroup(n, gens)).hilbert_basis
        assert hb == tuple(tuple(F(x) for x in v) for v in expected)
        assert set(hb) == brute_hilbert_basis(gens, n)

    def test_three_dimensional_smooth(self):
        gens = [(F(3, 2), 1, 0), (2, F(3, 2), 1)]
        hb = saturate(AffineSemigroup(3, gens)).hilbert_basis
        assert hb == ((F(1, 2), 0, 0), (0, F(1, 2), 0), (0, 0, 1))

    def test_random_against_oracle(self):
        rng = random.Random(21)
        for _ in range(25):
            n = rng.randint(1, 3)
            gens = [tuple(F(rng.randint(0, 4), rng.randint(1, 4)) for _ in range(n)) for _ in range(rng.randint(0, 2))]
            m = frac(gens, n)
            hb = hilbert_basis(m)
            assert set(hb) == brute_hilbert_basis(gens, n)
            for p in lattice_points(gens, n, 2):
                assert decomposes(p, hb)
            for i, b in enumerate(hb):
                assert not decomposes(b, hb[:i] + hb[i + 1:])
            assert is_smooth(m) == (len(hb) == n)
            # idempotence
            again = saturate(AffineSemigroup(n, hb)).hilbert_basis
            assert again == hb


class TestSaturated:
    def test_examples(self):
        assert is_saturated(AffineSemigroup(2))
        assert not is_saturated(AffineSemigroup(2, [(F(2, 3), F(1, 3))]))
        assert is_saturated(AffineSemigroup(2, [(F(1, 2), 0), (0, F(1, 2))]))

    def test_membership_search(self):
        gens = [(1, 0), (0, 1), (F(2, 3), F(1, 3))]
        assert decompose((F(4, 3), F(2, 3)), gens) == (0, 0, 2)
        assert decompose((F(1, 3), F(2, 3)), gens) is None
        assert decompose((F(5, 3), F(4, 3)), gens) is not None


class TestMVector:
    def test_integral(self):
        assert m_vector(FracLattice.integral(3)) == (1, 1, 1)

    def test_integer_lattice(self):
        assert m_vector(lattice_from_generators([(1, 1), (1, -1)], 2)) == (2, 2)

    def test_fractional(self):
        # smooth three-variable case: M contains (1/2,0,0) and (0,1/2,0)
        m = frac([(F(3, 2), 1, 0), (2, F(3, 2), 1)], 3)
        assert m_vector(m) == (F(1, 2), F(1, 2), 1)


class TestSmooth:
    def test_examples(self):
        assert is_smooth(frac([(F(3, 2), 1, 0), (2, F(3, 2), 1)], 3))
        assert not is_smooth(frac([(F(2, 3), F(1, 3))], 2))
        assert is_smooth(FracLattice.integral(2))
