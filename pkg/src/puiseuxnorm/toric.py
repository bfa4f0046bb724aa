"""Binomial presentation of the semigroup algebra K[S] from its Hilbert basis.

One polynomial variable per Hilbert-basis element; the relations are the
binomials ``X^u+ - X^u-`` with ``A u+ = A u-`` for the exponent matrix A.
Generators are found fiber by fiber up to a degree bound.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NormalizationError
from .lattice import echelon_member, kernel_lattice
from .semigroup import canonical_key


@dataclass(frozen=True)
class ToricPresentation:
    variables: int
    exponent_matrix: tuple
    binomials: tuple
    degree_bound: int


def exponent_matrix(hb, k):
    """n x s integer matrix whose columns are k times the basis vectors."""
    if not hb:
        raise NormalizationError("toric", "empty Hilbert basis")
    cols = []
    for v in hb:
        col = [Fraction(x) * k for x in v]
        if any(x.denominator != 1 for x in col):
            raise NormalizationError("toric", f"denominator of {tuple(v)} not cleared by k={k}")
        cols.append([int(x) for x in col])
    return tuple(tuple(c[i] for c in cols) for i in range(len(hb[0])))


def _columns(a):
    cols = [tuple(r[j] for r in a) for j in range(len(a[0]))]
    for c in cols:
        if any(x < 0 for x in c):
            raise NormalizationError("toric", "columns must be nonnegative")
        if not any(c):
            raise NormalizationError("toric", "not pointed")
    return cols


def _image(cols, u):
    return tuple(sum(c[i] * x for c, x in zip(cols, u)) for i in range(len(cols[0])))


def fiber(cols, b):
    """All u >= 0 with A u = b, in canonical order."""
    s = len(cols)
    out = []

    def rec(j, rest, u):
        if j == s:
            if not any(rest):
                out.append(tuple(u))
            return
        c = cols[j]
        bound = min(r // x for r, x in zip(rest, c) if x > 0)
        for t in range(bound + 1):
            rec(j + 1, tuple(r - t * x for r, x in zip(rest, c)), u + [t])

    rec(0, tuple(b), [])
    return sorted(out, key=canonical_key)


def _vectors_up_to(s, degree):
    out = []

    def rec(j, left, u):
        if j == s:
            out.append(tuple(u))
            return
        for t in range(left + 1):
            rec(j + 1, left - t, u + [t])

    rec(0, degree, [])
    return out


def _fibers(cols, degree_bound):
    """Fibers to process: images of degree <= D, closed under divisibility."""
    fibers = {}
    todo = {_image(cols, u) for u in _vectors_up_to(len(cols), degree_bound)}
    while todo:
        b = todo.pop()
        if b in fibers:
            continue
        fibers[b] = fiber(cols, b)
        for u in fibers[b]:
            for j, x in enumerate(u):
                if x:
                    smaller = tuple(p - q for p, q in zip(b, cols[j]))
                    if smaller not in fibers:
                        todo.add(smaller)
    return fibers


def _components(points, moves):
    parent = {p: p for p in points}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for plus, minus in moves:
        for src, dst in ((plus, minus), (minus, plus)):
            for u in points:
                if all(x >= y for x, y in zip(u, src)):
                    v = tuple(x - y + z for x, y, z in zip(u, src, dst))
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
    comps = {}
    for p in points:
        comps.setdefault(find(p), []).append(p)
    return sorted((sorted(c, key=canonical_key) for c in comps.values()), key=lambda c: canonical_key(c[0]))


def _normalize(u, v):
    """Order a binomial so the first vector leads in graded-lex (x1 > x2 > ...)."""
    return (u, v) if (sum(u), u) > (sum(v), v) else (v, u)


def toric_binomials(a, degree_bound):
    """Binomials connecting every processed fiber of A.

    Fibers are processed in canonical order of their image. In each one,
    the moves selected so far define a graph; if it is disconnected, the
    canonical representative of the first component is joined to that of
    every other component.
    """
    if degree_bound < 1:
        raise NormalizationError("toric", "degree bound must be positive")
    cols = _columns(a)
    fibers = _fibers(cols, degree_bound)
    chosen = []
    for b in sorted(fibers, key=canonical_key):
        pts = fibers[b]
        if len(pts) < 2:
            continue
        comps = _components(pts, chosen)
        for comp in comps[1:]:
            chosen.append(_normalize(comps[0][0], comp[0]))
    return chosen


def fibers_connected(a, binomials, degree_bound):
    """Fresh check that every processed fiber is connected by ``binomials``."""
    cols = _columns(a)
    return all(
        len(_components(pts, binomials)) <= 1 for pts in _fibers(cols, degree_bound).values()
    )


def kernel_violations(a, binomials):
    """Binomials whose difference is not in the integer kernel of A."""
    ker = kernel_lattice(a)
    return [
        (p, m) for p, m in binomials
        if not echelon_member(ker, [x - y for x, y in zip(p, m)])
    ]


def kernel_check(a, binomials):
    return not kernel_violations(a, binomials)


def default_degree_bound(a):
    return 2 * max(sum(r[j] for r in a) for j in range(len(a[0])))


def toric_presentation(hb, k, degree_bound=None):
    a = exponent_matrix(hb, k)
    d = degree_bound or default_degree_bound(a)
    return ToricPresentation(len(hb), a, tuple(toric_binomials(a, d)), d)
