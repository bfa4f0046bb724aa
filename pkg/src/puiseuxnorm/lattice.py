"""Exact integer lattices: Hermite and Smith normal forms, membership, index,
quotient structure and integer kernels.

Matrices are plain lists of rows of Python ints. A :class:`Lattice` is a
full-rank sublattice of Z^n stored by its row-style Hermite basis; a
:class:`FracLattice` is a lattice M with Z^n <= M <= (1/k)Z^n stored as the
integer lattice k*M.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm, prod

from .errors import NormalizationError


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def det(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _check_matrix(m):
    if not m or not m[0]:
        raise NormalizationError("lattice", "empty matrix")
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise NormalizationError("lattice", "ragged matrix")
    if all(x == 0 for r in m for x in r):
        raise NormalizationError("lattice", "rank zero")


def hnf(m):
    """Row-style Hermite normal form.

    Returns ``(h, u)`` where ``u`` is a square unimodular matrix and ``u @ m``
    equals ``h`` followed by zero rows. ``h`` keeps only the nonzero rows: it is
    upper echelon with positive pivots and every entry above a pivot reduced
    into ``[0, pivot)``.
    """
    _check_matrix(m)
    a = [[int(x) for x in r] for r in m]
    rows, cols = len(a), len(a[0])
    u = identity(rows)
    p = 0
    for c in range(cols):
        if p == rows:
            break
        for i in range(p + 1, rows):
            if a[i][c] == 0:
                continue
            x, y = a[p][c], a[i][c]
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            for mat in (a, u):
                rp, ri = mat[p], mat[i]
                mat[p] = [s * e + t * f for e, f in zip(rp, ri)]
                mat[i] = [-yg * e + xg * f for e, f in zip(rp, ri)]
        if a[p][c] == 0:
            continue
        if a[p][c] < 0:
            a[p] = [-e for e in a[p]]
            u[p] = [-e for e in u[p]]
        piv = a[p][c]
        for i in range(p):
            q = a[i][c] // piv
            if q:
                a[i] = [e - q * f for e, f in zip(a[i], a[p])]
                u[i] = [e - q * f for e, f in zip(u[i], u[p])]
        p += 1
    return a[:p], u


def snf(m):
    """Smith normal form ``d = u @ m @ v`` with ``d1 | d2 | ...`` on the diagonal.

    Returns ``(d, u, v)``; ``d`` has the shape of ``m`` and nonnegative
    diagonal entries.
    """
    _check_matrix(m)
    a = [[int(x) for x in r] for r in m]
    rows, cols = len(a), len(a[0])
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for r in mat:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        a[dst] = [e + q * f for e, f in zip(a[dst], a[src])]
        u[dst] = [e + q * f for e, f in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for mat in (a, v):
            for r in mat:
                r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            piv = a[t][t]
            moved = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // piv))
                    if a[i][t]:
                        moved = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // piv))
                    if a[t][j]:
                        moved = True
            if moved:
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
                _, i0, j0 = min(cand)
                swap_rows(t, i0)
                swap_cols(t, j0)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-e for e in a[t]]
            u[t] = [-e for e in u[t]]
    return a, u, v


@dataclass(frozen=True)
class Lattice:
    """Full-rank sublattice of Z^n given by its Hermite basis (rows)."""

    n: int
    basis: tuple

    @property
    def det(self):
        return prod(self.basis[i][i] for i in range(self.n))

    def __contains__(self, v):
        return member(self, v)


def lattice_from_generators(rows, n):
    rows = [tuple(int(x) for x in r) for r in rows]
    if not rows or any(len(r) != n for r in rows):
        raise NormalizationError("lattice", f"generators must be {n}-dimensional")
    if all(x == 0 for r in rows for x in r):
        raise NormalizationError("lattice", "not full rank")
    h, _ = hnf(rows)
    if len(h) < n:
        raise NormalizationError("lattice", "not full rank")
    return Lattice(n, tuple(tuple(r) for r in h))


def standard_lattice(n, scale=1):
    return Lattice(n, tuple(tuple(scale * int(i == j) for j in range(n)) for i in range(n)))


def coordinates(lat, v):
    """Integer coefficients of ``v`` in the basis of ``lat``, or None if v is not in it."""
    if len(v) != lat.n:
        raise NormalizationError("lattice", "dimension mismatch")
    res = list(v)
    coeffs = []
    for j, row in enumerate(lat.basis):
        q, r = divmod(res[j], row[j])
        if r:
            return None
        coeffs.append(q)
        if q:
            res = [e - q * f for e, f in zip(res, row)]
    return coeffs


def member(lat, v):
    return coordinates(lat, v) is not None


def echelon_member(rows, v):
    """Membership of ``v`` in the span of integer rows in (row) echelon form.

    Works for lattices of any rank, such as the output of :func:`kernel_lattice`.
    """
    res = list(v)
    for row in rows:
        pc = next(i for i, x in enumerate(row) if x)
        q, r = divmod(res[pc], row[pc])
        if r:
            return False
        res = [e - q * f for e, f in zip(res, row)]
    return not any(res)


def index(sub, sup):
    """[sup : sub] for full-rank lattices with sub <= sup."""
    if sub.n != sup.n:
        raise NormalizationError("lattice", "dimension mismatch")
    if not all(member(sup, r) for r in sub.basis):
        raise NormalizationError("lattice", "not a sublattice")
    return sub.det // sup.det


@dataclass(frozen=True)
class QuotientStructure:
    """Finite abelian group sup/sub as a sum of cyclic groups Z/d_i."""

    invariant_factors: tuple
    order: int
    _sup: Lattice = field(repr=False, compare=False)
    _v: tuple = field(repr=False, compare=False)
    _positions: tuple = field(repr=False, compare=False)

    def coordinates(self, w):
        """Class of ``w`` (an element of sup) in the product of Z/d_i."""
        c = coordinates(self._sup, w)
        if c is None:
            raise NormalizationError("lattice", "element not in the superlattice")
        out = []
        for pos, d in zip(self._positions, self.invariant_factors):
            col = sum(ci * self._v[i][pos] for i, ci in enumerate(c))
            out.append(col % d)
        return tuple(out)


def quotient_structure(sub, sup):
    order = index(sub, sup)
    # rows of sub expressed in the basis of sup
    change = [coordinates(sup, r) for r in sub.basis]
    d, _, v = snf(change)
    diag = [d[i][i] for i in range(sub.n)]
    positions = tuple(i for i, x in enumerate(diag) if x >= 2)
    factors = tuple(diag[i] for i in positions)
    if prod(factors) != order:
        raise AssertionError("invariant factors disagree with the index")
    return QuotientStructure(factors, order, sup, tuple(tuple(r) for r in v), positions)


def kernel_lattice(a):
    """Basis (Hermite rows) of the integer kernel ``{u : a @ u = 0}``."""
    s = len(a[0])
    if all(x == 0 for r in a for x in r):
        return [tuple(r) for r in identity(s)]
    d, _, v = snf(a)
    rank = sum(1 for i in range(min(len(a), s)) if d[i][i])
    vecs = [[v[i][j] for i in range(s)] for j in range(rank, s)]
    if not vecs:
        return []
    h, _ = hnf(vecs)
    return [tuple(r) for r in h]


@dataclass(frozen=True)
class FracLattice:
    """A lattice M with Z^n <= M <= (1/k)Z^n, stored as the integer lattice k*M.

    ``k`` is always the least denominator. Build instances with
    :meth:`from_generators`.
    """

    n: int
    k: int
    scaled: Lattice

    @classmethod
    def from_generators(cls, vectors, n):
        """Lattice generated by Z^n and the given rational vectors."""
        vecs = [tuple(Fraction(x) for x in v) for v in vectors]
        if any(len(v) != n for v in vecs):
            raise NormalizationError("lattice", f"generators must be {n}-dimensional")
        k = lcm(1, *(x.denominator for v in vecs for x in v))
        rows = [tuple(int(x * k) for x in v) for v in vecs]
        rows += [tuple(k * int(i == j) for j in range(n)) for i in range(n)]
        return cls._minimized(n, k, lattice_from_generators(rows, n))

    @classmethod
    def integral(cls, n):
        return cls(n, 1, standard_lattice(n))

    @classmethod
    def _minimized(cls, n, k, scaled):
        g = gcd(k, *(x for r in scaled.basis for x in r))
        if g > 1:
            scaled = Lattice(n, tuple(tuple(x // g for x in r) for r in scaled.basis))
            k //= g
        return cls(n, k, scaled)

    def basis(self):
        return [tuple(Fraction(x, self.k) for x in r) for r in self.scaled.basis]

    def __contains__(self, v):
        if len(v) != self.n:
            raise NormalizationError("lattice", "dimension mismatch")
        w = [Fraction(x) * self.k for x in v]
        if any(x.denominator != 1 for x in w):
            return False
        return member(self.scaled, [int(x) for x in w])

    def index(self):
        """[M : Z^n]."""
        return self.k ** self.n // self.scaled.det

    def add(self, vectors):
        return FracLattice.from_generators(self.basis() + [tuple(v) for v in vectors], self.n)

    def quotient(self):
        """Structure of M / Z^n, acting on vectors of k*M."""
        return quotient_structure(standard_lattice(self.n, self.k), self.scaled)

    def points_in_box(self, upper, half_open=False):
        """All points of M in the box prod [0, upper_i] (or [0, upper_i)).

        Points are returned as tuples of Fractions, in no particular order.
        """
        k, n, b = self.k, self.n, self.scaled.basis
        hi = [Fraction(u) * k for u in upper]
        out = []

        def rec(j, partial):
            if j == n:
                out.append(tuple(Fraction(x, k) for x in partial))
                return
            piv = b[j][j]
            base = partial[j]
            # coordinate j: base + c * piv in [0, hi_j]
            c_lo = -(base // piv)
            c_hi = (hi[j] - base) // piv
            for c in range(c_lo, int(c_hi) + 1):
                val = base + c * piv
                if half_open and val >= hi[j]:
                    continue
                rec(j + 1, [e + c * f for e, f in zip(partial, b[j])])

        rec(0, [0] * n)
        return out
