"""
Exact Laurent polynomials in several commuting variables.

A :class:`MultiLaurent` is an element of the group ring Z[H] for a free
abelian group H = Z^m, written as a finite sum of monomials
``c * t1^e1 * ... * tm^em`` with integer exponents of either sign.
Coefficients are Python integers (arbitrary precision); rational
coefficients are tolerated so that monic invariant factors over
Q[t^{+-1}] can be expressed with the same type.

Terms are ordered graded-lexicographically: first by total degree, then
lexicographically on the exponent vector.  This order is compatible with
multiplication, which is what makes exact division by leading terms work.

    >>> t = MultiLaurent.variable(0, 1)
    >>> str((t - 1) * (t + 1))
    't^2 - 1'
    >>> str((-t**-1 + 1 - t).normalize_unit())
    't^2 - t + 1'
"""

from fractions import Fraction
from math import gcd
import re

__all__ = ["MultiLaurent", "parse_laurent", "gcd_one_var", "gcd_list"]


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _key(exps):
    return (sum(exps), exps)


class MultiLaurent:
    """
    Immutable Laurent polynomial with exact coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero
    coefficients.  Two polynomials are equal iff they have the same number
    of variables and the same terms.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("number of variables must be nonnegative")
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                if c:
                    clean[e] = _clean(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls._raw(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def variable(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs, low=0):
        """One-variable polynomial ``sum coeffs[i] * t^(low + i)``."""
        return cls(1, {(low + i,): c for i, c in enumerate(coeffs)})

    # basic access

    @property
    def terms(self):
        """Terms as ``(exponents, coefficient)`` pairs, descending order."""
        return sorted(self._terms.items(), key=lambda kv: _key(kv[0]), reverse=True)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def is_unit(self):
        """True for +-monomials, the units of Z[H]."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def leading_term(self):
        e = max(self._terms, key=_key)
        return e, self._terms[e]

    def trailing_term(self):
        e = min(self._terms, key=_key)
        return e, self._terms[e]

    def min_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self._terms) for i in range(self.nvars))

    def max_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(e[i] for e in self._terms) for i in range(self.nvars))

    def content(self):
        """Gcd of the (integer) coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, int(c))
        return g

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, MultiLaurent):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _clean(s)
            else:
                out.pop(e, None)
        return MultiLaurent._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiLaurent.zero(self.nvars)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        if self.nvars == 1:
            for (ea,), ca in a.items():
                for (eb,), cb in b.items():
                    e = (ea + eb,)
                    out[e] = get(e, 0) + ca * cb
        else:
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    out[e] = get(e, 0) + ca * cb
        return MultiLaurent._raw(self.nvars, {e: _clean(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            inv = Fraction(1, 1) / c
            return MultiLaurent(self.nvars, {tuple(x * n for x in e): inv ** -n})
        result = MultiLaurent.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale_monomial(self, exps, coeff=1):
        """Multiply by ``coeff * t^exps`` (a shift of all exponents)."""
        exps = tuple(exps)
        return MultiLaurent._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(e, exps)): _clean(c * coeff)
             for e, c in self._terms.items()} if coeff else {})

    def exact_div(self, other):
        """
        Quotient ``self / other`` in the Laurent ring, which must exist.

        Raises ``ArithmeticError`` when the division is not exact.
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return MultiLaurent.zero(self.nvars)
        if other.is_monomial():
            (e, c), = other._terms.items()
            out = {}
            for f, d in self._terms.items():
                if isinstance(d, int) and isinstance(c, int):
                    qd, r = divmod(d, c)
                    if r:
                        raise ArithmeticError("inexact division")
                else:
                    qd = _clean(Fraction(d) / c)
                out[tuple(x - y for x, y in zip(f, e))] = qd
            return MultiLaurent._raw(self.nvars, out)
        lo_q, lc_q = other.leading_term()
        low_bound = sum(self.trailing_term()[0]) - sum(other.trailing_term()[0])
        rational = any(isinstance(v, Fraction)
                       for v in list(self._terms.values()) + list(other._terms.values()))
        rem = dict(self._terms)
        quot = {}
        neg = {e: -c for e, c in other._terms.items()}
        while rem:
            e = max(rem, key=_key)
            c = rem[e]
            if rational:
                qc = _clean(Fraction(c) / lc_q)
            else:
                qc, r = divmod(c, lc_q)
                if r:
                    raise ArithmeticError("inexact division")
            qe = tuple(x - y for x, y in zip(e, lo_q))
            if sum(qe) < low_bound:
                raise ArithmeticError("inexact division")
            quot[qe] = qc
            for f, d in neg.items():
                g = tuple(x + y for x, y in zip(qe, f))
                s = rem.get(g, 0) + qc * d
                if s:
                    rem[g] = s
                else:
                    rem.pop(g, None)
        return MultiLaurent._raw(self.nvars, quot)

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiLaurent.constant(other, self.nvars)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # normal forms and evaluation

    def normalize_unit(self):
        """
        The representative of ``self`` up to multiplication by +-monomials
        whose minimum exponent in every variable is 0 and whose leading
        coefficient is positive.  Integer content is kept.
        """
        if not self:
            return self
        shifted = self.scale_monomial(tuple(-x for x in self.min_exponents()))
        if shifted.leading_term()[1] < 0:
            shifted = -shifted
        return shifted

    def is_associate(self, other):
        """Equality up to a unit +-t^a."""
        return self.normalize_unit() == other.normalize_unit()

    def evaluate(self, values):
        """Exact value at a point with every coordinate nonzero."""
        values = [Fraction(v) for v in values]
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        if any(v == 0 for v in values):
            raise ValueError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, x in zip(values, e):
                term *= v ** x
            total += term
        return _clean(total)

    def substitute_monomials(self, images):
        """Ring map sending variable i to the monomial ``images[i]``."""
        out = MultiLaurent.zero(images[0].nvars if images else 0)
        for e, c in self._terms.items():
            term = MultiLaurent.constant(c, out.nvars)
            for img, x in zip(images, e):
                term = term * img ** x
            out = out + term
        return out

    # printing

    def var_names(self):
        if self.nvars == 1:
            return ["t"]
        return [f"t{i + 1}" for i in range(self.nvars)]

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.var_names()
        pieces = []
        for e, c in self.terms:
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiLaurent({self.nvars}, {dict(self.terms)!r})"


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*((?:[a-z]\d*(?:\^-?\d+)?\s*\*?\s*)*)")
_FACTOR = re.compile(r"([a-z]\d*)(?:\^(-?\d+))?")


def parse_laurent(text, nvars=1):
    """
    Read the canonical text form back, e.g. ``"t^2 - t + 1"`` or
    ``"t1*t2^-1 - 2"``.  Variable ``t`` is an alias of ``t1``.
    """
    text = text.strip()
    if text == "0":
        return MultiLaurent.zero(nvars)
    terms = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        sign, coeff, mono = m.groups()
        if coeff is None and not mono.strip():
            raise ValueError(f"empty term at position {pos}: {text!r}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        e = [0] * nvars
        for name, power in _FACTOR.findall(mono):
            idx = 0 if name == "t" else int(name[1:]) - 1
            if not 0 <= idx < nvars:
                raise ValueError(f"variable {name} out of range for {nvars} variables")
            e[idx] += int(power) if power else 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return MultiLaurent(nvars, terms)


# one-variable gcd over Z[t^{+-1}]

def _to_qpoly(p):
    """Coefficient list (ascending, Fractions) of p shifted to start at t^0."""
    lo = p.min_exponents()[0]
    hi = p.max_exponents()[0]
    return [Fraction(p.coefficient((lo + i,))) for i in range(hi - lo + 1)]


def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        s = len(a) - len(b)
        q[s] = f
        for i, c in enumerate(b):
            a[s + i] -= f * c
        a.pop()
        _qpoly_trim(a)
    return _qpoly_trim(q), a


def _qpoly_gcd(a, b):
    a, b = _qpoly_trim(list(a)), _qpoly_trim(list(b))
    while b:
        _, r = _qpoly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _primitive_from_q(coeffs):
    """Scale a rational coefficient list to a primitive integer one."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def gcd_one_var(p, q):
    """
    Gcd in Z[t^{+-1}], unit-normalized: gcd of contents times the
    primitive gcd found by the Euclidean algorithm over Q.
    """
    for x in (p, q):
        if x.nvars != 1:
            raise ValueError("gcd_one_var needs single-variable polynomials")
    if not q:
        return p.normalize_unit()
    if not p:
        return q.normalize_unit()
    content = gcd(p.content(), q.content())
    g = _qpoly_gcd(_to_qpoly(p), _to_qpoly(q))
    prim = _primitive_from_q(g)
    return (MultiLaurent.from_coeffs(prim) * content).normalize_unit()


def gcd_list(polys, nvars=1):
    """Gcd of a list; the empty gcd is 0."""
    out = MultiLaurent.zero(nvars)
    for p in polys:
        out = gcd_one_var(out, p)
        if out == 1:
            break
    return out
