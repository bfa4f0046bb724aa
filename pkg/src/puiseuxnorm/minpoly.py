"""Galois conjugates of a Puiseux series and its minimal polynomial over K[[X]].

The Galois group of K((X))(xi) over K((X)) is the character group of
M / Z^n with M = Z^n + Z.Supp(xi); a character chi acts on monomials by
``X^lam -> chi(lam) X^lam``. The minimal polynomial is the product of
``y - xi_chi`` over all characters.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .cyclotomic import CycloNumber, cyclotomic_polynomial
from .errors import CertificateError, NormalizationError
from .puiseux import PuiseuxSeries, is_integral, support_group


class CharacterGroup:
    """All characters of M / Z^n with values in the e-th roots of unity.

    A character is a tuple ``a`` with ``0 <= a_i < d_i``; it sends the i-th
    invariant-factor generator to ``zeta_e ** (a_i * e / d_i)``. The trivial
    character comes first.
    """

    def __init__(self, lattice):
        self.lattice = lattice
        self.quotient = lattice.quotient()
        self.factors = self.quotient.invariant_factors
        self.exponent = self.factors[-1] if self.factors else 1
        self.order = self.quotient.order
        self.characters = list(product(*(range(d) for d in self.factors)))

    def __len__(self):
        return self.order

    def power(self, chi, v):
        """The t with chi(v) = zeta_e ** t, for v in M."""
        w = [Fraction(x) * self.lattice.k for x in v]
        if any(x.denominator != 1 for x in w):
            raise NormalizationError("minpoly", f"exponent {tuple(v)} is not in the lattice")
        cls = self.quotient.coordinates([int(x) for x in w])
        e = self.exponent
        return sum(a * c * (e // d) for a, c, d in zip(chi, cls, self.factors)) % e

    def value(self, chi, v):
        return CycloNumber.root_of_unity(self.exponent, self.power(chi, v))

    def values(self, chi):
        """Values on the invariant-factor generators."""
        e = self.exponent
        return [CycloNumber.root_of_unity(e, a * (e // d)) for a, d in zip(chi, self.factors)]


def character_group(m):
    return CharacterGroup(m)


def conjugates(xi, cg):
    """``xi_chi`` for every character, in the group's enumeration order."""
    for lam in xi.support():
        if lam not in cg.lattice:
            raise NormalizationError("minpoly", f"support element {lam} is not in the lattice")
    return [
        PuiseuxSeries(xi.n, {lam: c * cg.value(chi, lam) for lam, c in xi.terms.items()})
        for chi in cg.characters
    ]


@dataclass(frozen=True)
class PolyY:
    """Monic ``y^d + c_{d-1} y^{d-1} + ... + c_0``; ``coeffs`` is (c_0, ..., c_{d-1})."""

    n: int
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs)

    @classmethod
    def from_roots(cls, roots):
        """Slow reference expansion of prod (y - r) with generic series arithmetic."""
        n = roots[0].n
        poly = [PuiseuxSeries.constant(n, 1)]
        for r in roots:
            new = [PuiseuxSeries(n) for _ in range(len(poly) + 1)]
            for j, c in enumerate(poly):
                new[j + 1] = new[j + 1] + c
                new[j] = new[j] - c * r
            poly = new
        assert poly[-1] == 1
        return cls(n, tuple(poly[:-1]))

    def all_coeffs(self):
        return list(self.coeffs) + [PuiseuxSeries.constant(self.n, 1)]


class _Ring:
    """Fast arithmetic for series over Q(zeta_L) with exponents in (1/k)Z^n.

    Exponents are stored as integer tuples (scaled by k), coefficients as
    tuples of length phi(L) in the power basis of zeta_L.
    """

    def __init__(self, conductor, k):
        self.L = conductor
        self.k = k
        phi = cyclotomic_polynomial(conductor)
        self.deg = len(phi) - 1
        table = []
        for j in range(2 * self.deg - 1):
            table.append(CycloNumber.root_of_unity(conductor, j).coeffs)
        self.table = table

    def coeff(self, c):
        return c.lift(self.L).coeffs

    def mul(self, a, b):
        if self.deg == 1:
            return (a[0] * b[0],)
        conv = [0] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[: self.deg]
        for i in range(self.deg, len(conv)):
            if conv[i]:
                row = self.table[i]
                out = [o + conv[i] * r for o, r in zip(out, row)]
        return tuple(out)

    def root(self, t):
        return CycloNumber.root_of_unity(self.L, t).coeffs

    def series(self, xi):
        out = {}
        for lam, c in xi.terms.items():
            exp = tuple(int(x * self.k) for x in lam)
            out[exp] = self.coeff(c)
        return out

    @staticmethod
    def acc(target, exp, c):
        cur = target.get(exp)
        if cur is None:
            target[exp] = c
        else:
            s = tuple(x + y for x, y in zip(cur, c))
            if any(s):
                target[exp] = s
            else:
                del target[exp]

    def to_series(self, n, d):
        terms = {}
        for exp, c in d.items():
            terms[tuple(Fraction(x, self.k) for x in exp)] = CycloNumber(self.L, c)
        return PuiseuxSeries(n, terms)

    def times(self, a, b):
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                self.acc(out, tuple(x + y for x, y in zip(e1, e2)), self.mul(c1, c2))
        return out


def _scaled_terms(xi, ring):
    """Terms of D*xi in the fast ring, with D clearing coefficient denominators."""
    den = lcm(1, *(Fraction(x).denominator for c in xi.terms.values() for x in c.coeffs))
    terms = {}
    for lam, c in xi.terms.items():
        exp = tuple(int(x * ring.k) for x in lam)
        terms[exp] = tuple(int(x * den) for x in ring.coeff(c))
    return den, terms


def _unscale(expanded, den):
    """Coefficients of D^-d * g(D*y) from those of g (low degree first)."""
    d = len(expanded) - 1
    out = []
    for j, coeffs in enumerate(expanded):
        f = Fraction(1, den ** (d - j))
        out.append({e: tuple(x * f for x in c) for e, c in coeffs.items()})
    return out


def _expand_product(xi, cg):
    """Coefficients of prod_chi (y - xi_chi), multiplying one linear factor at a time."""
    conductor = lcm(cg.exponent, *(c.conductor for c in xi.terms.values()))
    ring = _Ring(conductor, cg.lattice.k)
    den, base = _scaled_terms(xi, ring)
    lams = {tuple(int(x * ring.k) for x in lam): lam for lam in xi.terms}
    scale = conductor // cg.exponent
    one = (1,) + (0,) * (ring.deg - 1)
    poly = [{(0,) * xi.n: one}]
    for chi in cg.characters:
        root = [
            (exp, ring.mul(vec, ring.root(cg.power(chi, lams[exp]) * scale)))
            for exp, vec in base.items()
        ]
        new = [dict() for _ in range(len(poly) + 1)]
        for j, coeffs in enumerate(poly):
            tgt_up, tgt = new[j + 1], new[j]
            for exp, c in coeffs.items():
                ring.acc(tgt_up, exp, c)
                for e2, c2 in root:
                    prod_ = ring.mul(c, c2)
                    ring.acc(tgt, tuple(x + y for x, y in zip(exp, e2)), tuple(-x for x in prod_))
        poly = new
    return ring, _unscale(poly, den)


def _expand_newton(xi, cg):
    """Same polynomial from power sums.

    sum_chi xi_chi^m = d * (part of xi^m with exponents in Z^n), because the
    characters of M / Z^n sum to d on Z^n and to 0 elsewhere. Newton's
    identities turn the power sums into elementary symmetric functions.
    """
    conductor = lcm(1, *(c.conductor for c in xi.terms.values()))
    ring = _Ring(conductor, cg.lattice.k)
    den, base = _scaled_terms(xi, ring)
    d, k = cg.order, ring.k
    power = {(0,) * xi.n: (1,) + (0,) * (ring.deg - 1)}
    sums = [None]
    for _ in range(d):
        power = ring.times(power, base)
        sums.append({
            e: tuple(d * x for x in c) for e, c in power.items() if all(x % k == 0 for x in e)
        })
    elem = [{(0,) * xi.n: (1,) + (0,) * (ring.deg - 1)}]
    for j in range(1, d + 1):
        acc = {}
        for i in range(1, j + 1):
            if not sums[i] or not elem[j - i]:
                continue
            term = ring.times(elem[j - i], sums[i])
            sign = 1 if i % 2 else -1
            for e, c in term.items():
                ring.acc(acc, e, tuple(sign * x for x in c))
        # the roots D*xi_chi are integral over Z[X], so the division is exact
        quot = {}
        for e, c in acc.items():
            q = tuple(x // j for x in c)
            if any(x % j for x in c):
                raise CertificateError("minpoly", f"Newton step {j} is not integral at {e}")
            quot[e] = q
        elem.append(quot)
    poly = []
    for j in range(d, -1, -1):
        sign = -1 if j % 2 else 1
        poly.append({e: tuple(sign * x for x in c) for e, c in elem[j].items()})
    return ring, _unscale(poly, den)


def minimal_polynomial(xi, verify=True, method="newton"):
    """Minimal polynomial of ``xi`` over K[[X]], expanded exactly.

    ``method="newton"`` goes through power sums; ``"product"`` multiplies the
    d linear factors ``y - xi_chi`` directly (much slower for large d).

    With ``verify`` the result is certified: integral nonnegative exponents,
    rational coefficients when xi has rational coefficients, degree equal to
    [M : Z^n], and f(xi) = 0. A failed check raises :class:`CertificateError`.
    """
    if xi.is_zero():
        raise NormalizationError("minpoly", "empty support")
    m = support_group(xi)
    cg = character_group(m)
    if method == "newton":
        ring, expanded = _expand_newton(xi, cg)
    elif method == "product":
        ring, expanded = _expand_product(xi, cg)
    else:
        raise NormalizationError("minpoly", f"unknown method {method!r}")
    rational_input = all(c.is_rational() for c in xi.terms.values())
    if expanded[-1] != {(0,) * xi.n: (1,) + (0,) * (ring.deg - 1)}:
        raise CertificateError("minpoly", "result is not monic")
    coeffs = []
    for j, d in enumerate(expanded[:-1]):
        series = ring.to_series(xi.n, d)
        for lam, c in series.terms.items():
            if not is_integral(lam):
                raise CertificateError("minpoly", f"coefficient of y^{j} has exponent {lam}")
            if rational_input and not c.is_rational():
                raise CertificateError("minpoly", f"coefficient of y^{j} at {lam} is {c!r}")
        coeffs.append(series)
    f = PolyY(xi.n, tuple(coeffs))
    if verify:
        if f.degree != m.index():
            raise CertificateError("minpoly", f"degree {f.degree} differs from index {m.index()}")
        residue = evaluate(f, xi)
        if not residue.is_zero():
            raise CertificateError("minpoly", f"f(xi) = {residue!r} is not zero")
    return f


def evaluate(f, xi):
    """f(xi) computed exactly.

    Runs Horner's scheme on integers: with D clearing xi's coefficients and C
    clearing those of f, ``G(y) = C * D^d * f(y / D)`` has integral
    coefficients and ``G(D * xi) = C * D^d * f(xi)``.
    """
    if f.n != xi.n:
        raise NormalizationError("minpoly", "dimension mismatch")
    coeffs = f.all_coeffs()
    d = f.degree
    k = lcm(*(s.denominator() for s in coeffs + [xi]))
    conductor = lcm(1, *(c.conductor for s in coeffs + [xi] for c in s.terms.values()))
    ring = _Ring(conductor, k)
    den, x = _scaled_terms(xi, ring)
    cden = lcm(1, *(Fraction(v).denominator for s in coeffs for c in s.terms.values() for v in c.coeffs))
    acc = {}
    for j in range(d, -1, -1):
        acc = ring.times(acc, x)
        mult = cden * den ** (d - j)
        for e, v in ring.series(coeffs[j]).items():
            ring.acc(acc, e, tuple(int(t * mult) for t in v))
    total = cden * den ** d
    return ring.to_series(xi.n, {e: tuple(Fraction(t, total) for t in c) for e, c in acc.items()})


def certify_galois_invariance(f, m):
    """Every character twist fixes every coefficient of ``f``."""
    cg = character_group(m)
    return all(all(t == c for t in conjugates(c, cg)) for c in f.coeffs)
