import itertools
import random
from fractions import Fraction as F

import pytest

from puiseuxnorm.errors import NormalizationError
from puiseuxnorm.toric import (
    default_degree_bound,
    exponent_matrix,
    fibers_connected,
    kernel_check,
    toric_binomials,
    toric_presentation,
)

VERONESE_A = ((3, 2, 1, 0), (0, 1, 2, 3))


def as_pair(binomial):
    """Unordered form, so that relations are compared up to sign."""
    return frozenset(map(tuple, binomial))


def is_subsequence(short, long):
    it = iter(long)
    return all(any(x == y for y in it) for x in short)


def brute_connected(a, binomials, degree):
    """Every fiber of degree <= D is connected under the moves (plain BFS)."""
    s = len(a[0])
    img = lambda u: tuple(sum(r[j] * u[j] for j in range(s)) for r in a)  # noqa: E731
    fibers = {}
    for u in itertools.product(range(degree + 1), repeat=s):
        if sum(u) <= degree:
            fibers.setdefault(img(u), set())
    for b in fibers:
        top = max(b) + 1
        for u in itertools.product(range(top + 1), repeat=s):
            if img(u) == b:
                fibers[b].add(u)
    for pts in fibers.values():
        start = next(iter(pts))
        seen, stack = {start}, [start]
        while stack:
            u = stack.pop()
            for p, m in binomials:
                for src, dst in ((p, m), (m, p)):
                    if all(x >= y for x, y in zip(u, src)):
                        v = tuple(x - y + z for x, y, z in zip(u, src, dst))
                        if v not in seen:
                            seen.add(v)
                            stack.append(v)
        if seen != pts:
            return False
    return True


class TestExponentMatrix:
    def test_identity(self):
        assert exponent_matrix([(1, 0), (0, 1)], 1) == ((1, 0), (0, 1))

    def test_veronese(self):
        hb = [(1, 0), (F(2, 3), F(1, 3)), (F(1, 3), F(2, 3)), (0, 1)]
        assert exponent_matrix(hb, 3) == VERONESE_A

    def test_half(self):
        hb = [(1, 0), (F(1, 2), F(1, 2)), (0, 1)]
        assert exponent_matrix(hb, 2) == ((2, 1, 0), (0, 1, 2))

    def test_uncleared(self):
        with pytest.raises(NormalizationError):
            exponent_matrix([(F(1, 2), 0)], 1)


class TestBinomials:
    def test_free(self):
        assert toric_binomials(((1, 0), (0, 1)), 4) == []

    def test_veronese(self):
        # x, y, z, w for the columns (3,0), (2,1), (1,2), (0,3)
        expected = {
            as_pair(((1, 0, 0, 1), (0, 1, 1, 0))),  # xw - yz
            as_pair(((0, 2, 0, 0), (1, 0, 1, 0))),  # y^2 - xz
            as_pair(((0, 0, 2, 0), (0, 1, 0, 1))),  # z^2 - yw
        }
        for d in (2, 3, 6):
            got = toric_binomials(VERONESE_A, d)
            assert {as_pair(b) for b in got} == expected

    def test_conic(self):
        got = toric_binomials(((2, 1, 0), (0, 1, 2)), 2)
        assert [as_pair(b) for b in got] == [as_pair(((0, 2, 0), (1, 0, 1)))]

    def test_not_pointed(self):
        with pytest.raises(NormalizationError, match="not pointed"):
            toric_binomials(((1, 0), (0, 0)), 2)

    def test_leading_term_first(self):
        for p, m in toric_binomials(VERONESE_A, 3):
            assert (sum(p), p) > (sum(m), m)


class TestKernelCheck:
    def test_examples(self):
        assert kernel_check(VERONESE_A, toric_binomials(VERONESE_A, 2))
        assert not kernel_check(VERONESE_A, [((1, 0, 0, 0), (0, 1, 0, 0))])
        assert kernel_check(VERONESE_A, [])


class TestRandom:
    def test_properties(self):
        rng = random.Random(13)
        done = 0
        while done < 15:
            n, s = rng.randint(1, 3), rng.randint(2, 4)
            a = tuple(tuple(rng.randint(0, 3) for _ in range(s)) for _ in range(n))
            if any(not any(r[j] for r in a) for j in range(s)):
                continue
            done += 1
            d = 3
            b = toric_binomials(a, d)
            assert kernel_check(a, b)
            for p, m in b:
                assert any(p) and any(m)
                assert all(x == 0 or y == 0 for x, y in zip(p, m))
            assert fibers_connected(a, b, d)
            assert brute_connected(a, b, d)
            assert is_subsequence(b, toric_binomials(a, d + 1))


def test_presentation_defaults():
    tp = toric_presentation([(1, 0), (F(1, 2), F(1, 2)), (0, 1)], 2)
    assert tp.degree_bound == default_degree_bound(tp.exponent_matrix) == 4
    assert tp.variables == 3 and len(tp.binomials) == 1
