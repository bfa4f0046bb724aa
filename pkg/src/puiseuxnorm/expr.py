"""Text format for Puiseux series, exponent lists and lattice generators.

Series grammar (whitespace is ignored)::

    series   := sign? term (sign term)*
    term     := item ('*'? item)*
    item     := rational | 'zeta(' int ')' ('^' int)? | var ('^' exponent)?
    exponent := int | '(' int ('/' int)? ')'

Variables are ``x1 ... xn``; for n <= 4 the aliases ``x, y, z, w`` name the
first four. Tuple lists look like ``(1,1);(1,-1)`` or ``(2/3,1/3)``.
"""

import re
from fractions import Fraction

from .cyclotomic import CycloNumber
from .errors import NormalizationError
from .puiseux import MonomialOrder, PuiseuxSeries

ALIASES = "xyzw"

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


class ParseError(NormalizationError):
    def __init__(self, message, pos):
        self.pos = pos
        super().__init__("parser", f"{message} at position {pos}")


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start()))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start()))
        else:
            tokens.append(("op", m.group(3), m.start()))
    tokens.append(("end", None, len(text)))
    return tokens


def variable_index(name, n):
    """0-based index of a variable name, or None if unknown for dimension n."""
    if re.fullmatch(r"x[1-9]\d*", name):
        i = int(name[1:]) - 1
        return i if n is None or i < n else None
    if len(name) == 1 and name in ALIASES:
        i = ALIASES.index(name)
        if n is None:
            return i
        return i if n <= 4 and i < n else None
    return None


def infer_dimension(text):
    """Smallest n covering every variable mentioned in ``text``."""
    n = 1
    for kind, val, _ in _tokenize(text):
        if kind == "name" and val != "zeta":
            i = variable_index(val, None)
            if i is not None:
                n = max(n, i + 1)
    return n


class _Parser:
    def __init__(self, text, n):
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}", tok[2])
        return tok

    def is_op(self, value):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def series(self):
        terms = {}
        sign = 1
        if self.is_op("+") or self.is_op("-"):
            sign = -1 if self.next()[1] == "-" else 1
        while True:
            exp, coeff = self.term()
            coeff = coeff * sign
            terms[exp] = terms[exp] + coeff if exp in terms else coeff
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if self.next()[1] == "-" else 1
                continue
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return PuiseuxSeries(self.n, terms)

    def term(self):
        exp = [Fraction(0)] * self.n
        coeff_box = [CycloNumber.rational(1)]
        self.item(exp, coeff_box)
        while True:
            if self.is_op("*"):
                self.next()
                self.item(exp, coeff_box)
            elif self.peek()[0] in ("int", "name"):
                self.item(exp, coeff_box)
            else:
                break
        return tuple(exp), coeff_box[0]

    def item(self, exp, coeff_box):
        tok = self.next()
        kind, val, pos = tok
        if kind == "int":
            q = Fraction(val)
            if self.is_op("/"):
                self.next()
                den = self.expect("int")
                if den[1] == 0:
                    raise ParseError("division by zero", den[2])
                q /= den[1]
            coeff_box[0] = coeff_box[0] * q
        elif kind == "name" and val == "zeta":
            self.expect("op", "(")
            cond = self.expect("int")
            if cond[1] == 0:
                raise ParseError("conductor must be positive", cond[2])
            self.expect("op", ")")
            power = 1
            if self.is_op("^"):
                self.next()
                power = self.expect("int")[1]
            coeff_box[0] = coeff_box[0] * CycloNumber.root_of_unity(cond[1], power)
        elif kind == "name":
            idx = variable_index(val, self.n)
            if idx is None:
                raise ParseError(f"unknown variable {val!r} for {self.n} variables", pos)
            e = Fraction(1)
            if self.is_op("^"):
                self.next()
                e = self.exponent()
            exp[idx] += e
        elif kind == "op" and val == "(":
            raise ParseError("parenthesized expressions are not supported", pos)
        else:
            raise ParseError(f"unexpected {val if val is not None else 'end of input'!r}", pos)

    def exponent(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            raise NormalizationError("parser", "exponents must be nonnegative")
        if tok[0] == "int":
            return Fraction(self.next()[1])
        self.expect("op", "(")
        if self.is_op("-"):
            raise NormalizationError("parser", "exponents must be nonnegative")
        num = self.expect("int")[1]
        den = 1
        if self.is_op("/"):
            self.next()
            d = self.expect("int")
            if d[1] == 0:
                raise ParseError("division by zero", d[2])
            den = d[1]
        self.expect("op", ")")
        return Fraction(num, den)


def parse_series(text, n=None):
    """Parse a series expression. ``n`` defaults to the inferred dimension."""
    if not text or not text.strip():
        raise NormalizationError("parser", "empty input")
    if n is None:
        n = infer_dimension(text)
    return _Parser(text, n).series()


def parse_tuples(text, integer=False):
    """Parse ``(a,b,...);(c,d,...)`` into a list of tuples."""
    groups = re.findall(r"\(([^()]*)\)", text)
    leftover = re.sub(r"\(([^()]*)\)", "", text).replace(";", "").strip()
    if not groups or leftover:
        raise NormalizationError("parser", f"cannot read tuple list {text!r}")
    out = []
    for g in groups:
        try:
            vals = [Fraction(x.strip()) for x in g.split(",")]
        except (ValueError, ZeroDivisionError):
            raise NormalizationError("parser", f"bad entry in ({g})") from None
        if integer:
            if any(v.denominator != 1 for v in vals):
                raise NormalizationError("parser", f"lattice generators must be integers: ({g})")
            vals = [int(v) for v in vals]
        out.append(tuple(vals))
    if len({len(t) for t in out}) != 1:
        raise NormalizationError("parser", "tuples have different lengths")
    return out


def variable_names(n):
    return list(ALIASES[:n]) if n <= 4 else [f"x{i + 1}" for i in range(n)]


def format_monomial(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif e.denominator == 1:
            parts.append(f"{name}^{e.numerator}")
        else:
            parts.append(f"{name}^({e})")
    return "*".join(parts)


def _signed_terms(xi):
    names = variable_names(xi.n)
    out = []
    for exp, c in reversed(xi.sorted_terms(MonomialOrder.default(xi.n))):
        mono = format_monomial(exp, names)
        for power, q in enumerate(c.coeffs):
            q = Fraction(q)
            if not q:
                continue
            factors = []
            if abs(q) != 1 or (not mono and power == 0):
                factors.append(str(abs(q)))
            if power:
                factors.append(f"zeta({c.conductor})" + (f"^{power}" if power > 1 else ""))
            if mono:
                factors.append(mono)
            out.append((q < 0, "*".join(factors)))
    return out


def format_series(xi):
    """Inverse of :func:`parse_series`; leading terms first."""
    terms = _signed_terms(xi)
    if not terms:
        return "0"
    neg, body = terms[0]
    text = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        text += (" - " if neg else " + ") + body
    return text


def format_poly(f, var="Y"):
    """Human-readable form of a monic PolyY, highest degree first."""
    out = [f"{var}^{f.degree}" if f.degree > 1 else var]
    for j in range(f.degree - 1, -1, -1):
        c = f.coeffs[j]
        if c.is_zero():
            continue
        ypart = "" if j == 0 else (f"*{var}" if j == 1 else f"*{var}^{j}")
        out.append(f"({format_series(c)}){ypart}")
    return " + ".join(out)
