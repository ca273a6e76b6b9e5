"""Sparse multivariate polynomials, multivariate gcd and binary forms.

Monomials are packed into a single Python int: variable ``i`` owns bits
``8*i .. 8*i+7`` (7 usable bits plus a guard bit) and the total degree
sits above all variable fields.  With that layout

* multiplying monomials is integer addition,
* comparing packed ints is the graded-lexicographic order with
  ``x_0 < x_1 < ... < x_{n-1}``,
* a monomial divides another iff subtracting it borrows from no field.

Coefficients live in ``QQ`` (ints or ``Fraction``) or in a prime field
(ints reduced mod p).
"""
from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd as igcd

from .fields import QQ, Field, PrimeField, RationalField

BITS = 8
MAX_EXP = (1 << (BITS - 1)) - 1


class VariableCountMismatch(ValueError):
    pass


class _Layout:
    __slots__ = ("n", "degshift", "guard", "units")

    _cache: dict = {}

    def __init__(self, n: int):
        self.n = n
        self.degshift = BITS * n
        self.guard = sum(1 << (BITS * i + BITS - 1) for i in range(n))
        self.units = [(1 << self.degshift) | (1 << (BITS * i)) for i in range(n)]

    @classmethod
    def get(cls, n: int) -> "_Layout":
        lay = cls._cache.get(n)
        if lay is None:
            lay = cls._cache[n] = cls(n)
        return lay

    def pack(self, exps) -> int:
        if len(exps) != self.n:
            raise VariableCountMismatch(f"expected {self.n} exponents, got {len(exps)}")
        e = 0
        for i, x in enumerate(exps):
            if x < 0 or x > MAX_EXP:
                raise OverflowError(f"exponent {x} outside [0, {MAX_EXP}]")
            e += x * self.units[i]
        return e

    def unpack(self, e: int) -> tuple:
        mask = (1 << BITS) - 1
        return tuple((e >> (BITS * i)) & mask for i in range(self.n))

    def degree(self, e: int) -> int:
        return e >> self.degshift

    def var_degree(self, e: int, i: int) -> int:
        return (e >> (BITS * i)) & ((1 << BITS) - 1)

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``b`` divides monomial ``a``."""
        g = self.guard
        return ((a | g) - b) & g == g


def _qnorm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _modulus(ring: Field):
    return ring.p if isinstance(ring, PrimeField) else 0


def _clean(d: dict, mod: int) -> dict:
    if mod:
        out = {}
        for e, c in d.items():
            c %= mod
            if c:
                out[e] = c
        return out
    return {e: c for e, c in d.items() if c}


def _mul_dicts(p: dict, q: dict, mod: int) -> dict:
    if len(p) > len(q):
        p, q = q, p
    r: dict = {}
    get = r.get
    qi = list(q.items())
    for e1, c1 in p.items():
        for e2, c2 in qi:
            e = e1 + e2
            r[e] = get(e, 0) + c1 * c2
    return _clean(r, mod)


class SparsePolynomial:
    """Polynomial in ``nvars`` variables with exact coefficients.

    Immutable by convention: every operation returns a new object.
    """

    __slots__ = ("nvars", "ring", "_t", "_lay")

    def __init__(self, nvars: int, terms: dict | None = None, ring: Field = QQ, *, _packed=False):
        self.nvars = nvars
        self.ring = ring
        self._lay = _Layout.get(nvars)
        if terms is None:
            self._t = {}
        elif _packed:
            self._t = terms
        else:
            mod = _modulus(ring)
            t: dict = {}
            for exps, c in terms.items():
                e = self._lay.pack(exps)
                t[e] = t.get(e, 0) + _coerce_coeff(c, ring)
            self._t = _clean(t, mod)

    # --- construction --------------------------------------------------
    @classmethod
    def _raw(cls, nvars, t, ring):
        return cls(nvars, t, ring, _packed=True)

    @classmethod
    def constant(cls, nvars: int, c, ring: Field = QQ) -> "SparsePolynomial":
        c = _coerce_coeff(c, ring)
        return cls._raw(nvars, {0: c} if c else {}, ring)

    @classmethod
    def variable(cls, nvars: int, i: int, ring: Field = QQ) -> "SparsePolynomial":
        lay = _Layout.get(nvars)
        if not 0 <= i < nvars:
            raise IndexError(i)
        return cls._raw(nvars, {lay.units[i]: 1}, ring)

    @classmethod
    def gens(cls, nvars: int, ring: Field = QQ) -> list:
        return [cls.variable(nvars, i, ring) for i in range(nvars)]

    # --- inspection ----------------------------------------------------
    def __len__(self):
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def terms(self) -> list:
        """``(exponents, coefficient)`` pairs in descending grlex order."""
        unpack = self._lay.unpack
        return [(unpack(e), _qnorm(self._t[e])) for e in sorted(self._t, reverse=True)]

    def coefficients(self) -> list:
        return [c for _, c in self.terms()]

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return self._lay.degree(max(self._t))

    def degree(self, i: int) -> int:
        if not self._t:
            return -1
        return max(self._lay.var_degree(e, i) for e in self._t)

    def is_homogeneous(self) -> bool:
        degs = {self._lay.degree(e) for e in self._t}
        return len(degs) <= 1

    def leading_term(self):
        e = max(self._t)
        return self._lay.unpack(e), _qnorm(self._t[e])

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        return _qnorm(self._t.get(0, 0))

    # --- arithmetic ----------------------------------------------------
    def _check(self, other: "SparsePolynomial"):
        if other.nvars != self.nvars:
            raise VariableCountMismatch(f"{self.nvars} vs {other.nvars} variables")
        if other.ring != self.ring:
            raise ValueError("coefficient fields differ")

    def _lift(self, other):
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        return SparsePolynomial.constant(self.nvars, other, self.ring)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self._t)
        for e, c in other._t.items():
            t[e] = t.get(e, 0) + c
        return self._raw(self.nvars, _clean(t, _modulus(self.ring)), self.ring)

    __radd__ = __add__

    def __neg__(self):
        mod = _modulus(self.ring)
        if mod:
            return self._raw(self.nvars, {e: (-c) % mod for e, c in self._t.items()}, self.ring)
        return self._raw(self.nvars, {e: -c for e, c in self._t.items()}, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            c = _coerce_coeff(other, self.ring)
            return self._raw(self.nvars, _clean({e: v * c for e, v in self._t.items()},
                                                _modulus(self.ring)), self.ring)
        self._check(other)
        t = _mul_dicts(self._t, other._t, _modulus(self.ring))
        g = self._lay.guard
        for e in t:
            if e & g:
                raise OverflowError(f"exponent exceeds {MAX_EXP}")
        return self._raw(self.nvars, t, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePolynomial.constant(self.nvars, 1, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "SparsePolynomial":
        return self * c

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return (self.nvars == other.nvars and self.ring == other.ring
                    and self._t == other._t)
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(self.nvars, other, self.ring)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    # --- division ------------------------------------------------------
    def exact_div(self, d: "SparsePolynomial"):
        """Quotient ``q`` with ``self == q*d``, or ``None`` if ``d`` does not divide."""
        self._check(d)
        if not d._t:
            raise ZeroDivisionError("division by the zero polynomial")
        q = _exact_div(self._t, d._t, self._lay, _modulus(self.ring))
        return None if q is None else self._raw(self.nvars, q, self.ring)

    def __floordiv__(self, d):
        q = self.exact_div(d)
        if q is None:
            raise ValueError("inexact polynomial division")
        return q

    def divmod(self, d: "SparsePolynomial"):
        """Multivariate division by a single divisor in grlex order."""
        self._check(d)
        if not d._t:
            raise ZeroDivisionError("division by the zero polynomial")
        mod = _modulus(self.ring)
        lay = self._lay
        p = dict(self._t)
        lt = max(d._t)
        lc = d._t[lt]
        q: dict = {}
        r: dict = {}
        while p:
            e = max(p)
            c = p.pop(e)
            if lay.divides(e, lt):
                qe = e - lt
                qc = _cdiv(c, lc, mod)
                q[qe] = qc
                for de, dc in d._t.items():
                    if de == lt:
                        continue
                    ne = qe + de
                    v = p.get(ne, 0) - qc * dc
                    if mod:
                        v %= mod
                    if v:
                        p[ne] = v
                    else:
                        p.pop(ne, None)
            else:
                r[e] = c
        return self._raw(self.nvars, q, self.ring), self._raw(self.nvars, r, self.ring)

    def monic(self) -> "SparsePolynomial":
        if not self._t:
            return self
        lc = self._t[max(self._t)]
        mod = _modulus(self.ring)
        if mod:
            inv = pow(lc, -1, mod)
            return self._raw(self.nvars, {e: c * inv % mod for e, c in self._t.items()}, self.ring)
        return self._raw(self.nvars, {e: _qnorm(Fraction(c) / lc) for e, c in self._t.items()},
                         self.ring)

    # --- evaluation ----------------------------------------------------
    def evaluate(self, values, field: Field | None = None):
        """Evaluate at ``values`` (raw values of ``field``, default the coefficient ring)."""
        field = field or self.ring
        if len(values) != self.nvars:
            raise VariableCountMismatch(f"need {self.nvars} values")
        lay = self._lay
        maxdeg = [0] * self.nvars
        for e in self._t:
            for i in range(self.nvars):
                d = lay.var_degree(e, i)
                if d > maxdeg[i]:
                    maxdeg[i] = d
        powers = []
        for i, v in enumerate(values):
            row = [field.one]
            for _ in range(maxdeg[i]):
                row.append(field.mul(row[-1], v))
            powers.append(row)
        total = field.zero
        mask = (1 << BITS) - 1
        for e, c in self._t.items():
            term = field.convert(_qnorm(c)) if not isinstance(field, RationalField) else Fraction(c)
            i = 0
            x = e
            while i < self.nvars:
                d = x & mask
                if d:
                    term = field.mul(term, powers[i][d])
                x >>= BITS
                i += 1
            total = field.add(total, term)
        return total

    def __call__(self, *values):
        return self.evaluate(values)

    # --- serialization -------------------------------------------------
    def to_json(self) -> list:
        return [{"coeff": str(c), "exps": list(e)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None, ring: Field = QQ):
        if nvars is None:
            if not data:
                raise ValueError("cannot infer the variable count of an empty polynomial")
            nvars = len(data[0]["exps"])
        terms: dict = {}
        for item in data:
            exps = tuple(int(x) for x in item["exps"])
            c = _coerce_coeff(Fraction(item["coeff"]), ring)
            terms[exps] = terms.get(exps, 0) + c
        return cls(nvars, terms, ring)

    def to_text(self, names=None) -> str:
        names = names or default_names(self.nvars)
        if not self._t:
            return "0"
        pieces = []
        for exps, c in self.terms():
            factors = []
            for i in range(self.nvars - 1, -1, -1):
                if exps[i] == 1:
                    factors.append(names[i])
                elif exps[i] > 1:
                    factors.append(f"{names[i]}^{exps[i]}")
            neg = c < 0 if not isinstance(self.ring, PrimeField) else False
            mag = -c if neg else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "·".join(factors)
            else:
                body = "·".join([str(mag)] + factors)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        if len(self._t) > 12:
            return f"<SparsePolynomial nvars={self.nvars} terms={len(self._t)}>"
        return f"SparsePolynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


def default_names(n: int) -> list:
    return [f"x{i}" for i in range(n)]


def _coerce_coeff(c, ring: Field):
    if isinstance(ring, PrimeField):
        return ring.convert(c)
    if isinstance(c, Fraction):
        return _qnorm(c)
    if isinstance(c, int):
        return c
    return _qnorm(QQ.convert(c))


def _cdiv(c, lc, mod):
    if mod:
        return c * pow(lc, -1, mod) % mod
    if type(c) is int and type(lc) is int and c % lc == 0:
        return c // lc
    return _qnorm(Fraction(c) / lc)


def _exact_div(p: dict, d: dict, lay: _Layout, mod: int):
    """Heap-driven exact division of term dicts; ``None`` when inexact."""
    if not p:
        return {}
    lt = max(d)
    lc = d[lt]
    if not lay.divides(max(p), lt):
        return None
    rest = [(de, dc) for de, dc in d.items() if de != lt]
    integral = not mod and type(lc) is int
    p = dict(p)
    heap = [-e for e in p]
    heapq.heapify(heap)
    q: dict = {}
    divides = lay.divides
    while p:
        e = -heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        if not divides(e, lt):
            return None
        if integral and type(c) is int:
            qc, r = divmod(c, lc)
            if r:
                qc = Fraction(c, lc)
        else:
            qc = _cdiv(c, lc, mod)
        qe = e - lt
        q[qe] = qc
        for de, dc in rest:
            ne = qe + de
            v = p.get(ne, 0) - qc * dc
            if mod:
                v %= mod
            if v:
                if ne not in p:
                    heapq.heappush(heap, -ne)
                p[ne] = v
            else:
                p.pop(ne, None)
    return q


# ---------------------------------------------------------------------------
# multivariate gcd: recursive content / primitive part + subresultant PRS
# ---------------------------------------------------------------------------

def _split(t: dict, lay: _Layout, v: int) -> dict:
    """Group terms by the degree of variable ``v``: ``{deg: term dict without x_v}``."""
    out: dict = {}
    unit = lay.units[v]
    for e, c in t.items():
        d = lay.var_degree(e, v)
        out.setdefault(d, {})[e - d * unit] = c
    return out


def _join(parts: dict, lay: _Layout, v: int) -> dict:
    unit = lay.units[v]
    t = {}
    for d, cd in parts.items():
        for e, c in cd.items():
            t[e + d * unit] = c
    return t


def _vars_in(t: dict, lay: _Layout) -> list:
    present = 0
    for e in t:
        present |= e
    mask = (1 << BITS) - 1
    return [i for i in range(lay.n) if (present >> (BITS * i)) & mask]


def _scalar_gcd_content(t: dict, mod: int):
    if mod:
        return 1
    num = 0
    den = 1
    for c in t.values():
        c = Fraction(c)
        num = igcd(num, c.numerator)
        den = den * c.denominator // igcd(den, c.denominator)
    return Fraction(num, den)


class _Ctx:
    def __init__(self, lay: _Layout, mod: int):
        self.lay = lay
        self.mod = mod

    def mul(self, a, b):
        return _mul_dicts(a, b, self.mod)

    def add(self, a, b, s=1):
        r = dict(a)
        for e, c in b.items():
            r[e] = r.get(e, 0) + s * c
        return _clean(r, self.mod)

    def div(self, a, b):
        q = _exact_div(a, b, self.lay, self.mod)
        if q is None:
            raise ArithmeticError("inexact division inside gcd")
        return q

    def pow(self, a, n):
        r = {0: 1}
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def gcd(self, a: dict, b: dict) -> dict:
        """Gcd of term dicts, up to a unit."""
        if not a:
            return dict(b)
        if not b:
            return dict(a)
        vs = sorted(set(_vars_in(a, self.lay)) | set(_vars_in(b, self.lay)))
        if not vs:
            return {0: 1}
        v = vs[-1]
        pa, pb = _split(a, self.lay, v), _split(b, self.lay, v)
        if len(pa) == 1 and 0 in pa:
            return self.gcd(a, self._content(pb))
        if len(pb) == 1 and 0 in pb:
            return self.gcd(b, self._content(pa))
        ca, cb = self._content(pa), self._content(pb)
        c = self.gcd(ca, cb)
        pa = {d: self.div(x, ca) for d, x in pa.items()}
        pb = {d: self.div(x, cb) for d, x in pb.items()}
        g = self._prs(pa, pb)
        gc = self._content(g)
        g = {d: self.div(x, gc) for d, x in g.items()}
        return self.mul(c, _join(g, self.lay, v))

    def _content(self, parts: dict) -> dict:
        c: dict = {}
        for x in parts.values():
            c = self.gcd(c, x)
            if c == {0: 1} or (len(c) == 1 and 0 in c):
                return {0: 1}
        return c

    def _prem(self, a: dict, b: dict) -> dict:
        da, db = max(a), max(b)
        lb = b[db]
        r = dict(a)
        e = da - db + 1
        while r and max(r) >= db:
            dr = max(r)
            lr = r[dr]
            shift = dr - db
            new = {}
            for d, x in r.items():
                new[d] = self.mul(x, lb)
            for d, x in b.items():
                dd = d + shift
                new[dd] = self.add(new.get(dd, {}), self.mul(x, lr), -1)
            r = {d: x for d, x in new.items() if x}
            e -= 1
        if e > 0:
            f = self.pow(lb, e)
            r = {d: self.mul(x, f) for d, x in r.items()}
        return r

    def _prs(self, a: dict, b: dict) -> dict:
        """Subresultant PRS on polynomials in the main variable (``{deg: coeff}``)."""
        if max(a) < max(b):
            a, b = b, a
        g = {0: 1}
        h = {0: 1}
        while True:
            delta = max(a) - max(b)
            r = self._prem(a, b)
            if not r:
                return b
            if max(r) == 0:
                return {0: {0: 1}}
            den = self.mul(g, self.pow(h, delta))
            a, b = b, {d: self.div(x, den) for d, x in r.items()}
            g = a[max(a)]
            if delta == 0:
                continue
            h = self.div(self.pow(g, delta), self.pow(h, delta - 1))


def multivariate_gcd(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    """Monic gcd of two polynomials; ``gcd(0, 0) == 0``."""
    p._check(q)
    if p.is_zero() and q.is_zero():
        return p
    mod = _modulus(p.ring)
    a, b = dict(p._t), dict(q._t)
    if not mod:
        # clear denominators so the PRS runs over Z[...]
        for t in (a, b):
            if t:
                cont = _scalar_gcd_content(t, 0)
                for e in t:
                    t[e] = _qnorm(Fraction(t[e]) / cont)
    g = _Ctx(p._lay, mod).gcd(a, b)
    return SparsePolynomial._raw(p.nvars, g, p.ring).monic()


# ---------------------------------------------------------------------------
# text parsing
# ---------------------------------------------------------------------------


def parse_polynomial(text: str, names, ring: Field = QQ) -> SparsePolynomial:
    """Parse ``"2·b_{32}^2·b_{30} - b_{10}"`` (factor separators optional)."""
    index = {name: i for i, name in enumerate(names)}
    # longest names first so b_{1} never shadows b_{10}
    name_re = re.compile("|".join(re.escape(n) for n in sorted(names, key=len, reverse=True)))
    s = re.sub(r"\s+", "", text)
    if s in ("", "0"):
        return SparsePolynomial(len(names), None, ring)
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = re.compile(r"([+-]?)(\d+(?:/\d+)?)?[·*]?").match(s, pos)
        sign, coef = m.group(1), m.group(2)
        pos = m.end()
        exps = [0] * len(names)
        seen_var = False
        while pos < len(s) and s[pos] not in "+-":
            if s[pos] in "·*":
                pos += 1
                continue
            vm = name_re.match(s, pos)
            if not vm:
                raise ValueError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
            pos = vm.end()
            power = 1
            pm = re.compile(r"\^(\d+)").match(s, pos)
            if pm:
                power = int(pm.group(1))
                pos = pm.end()
            exps[index[vm.group(0)]] += power
            seen_var = True
        if coef is None and not seen_var:
            raise ValueError(f"empty term in {text[:40]!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
    return SparsePolynomial(len(names), terms, ring)


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------

class BinaryForm:
    """``sum(c[i] * x**(d-i) * y**i)`` over ``field``; coefficients are raw values."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a binary form needs degree + 1 >= 1 coefficients")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def linear(cls, field, a, b) -> "BinaryForm":
        """``a*x + b*y``."""
        return cls(field, (a, b))

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        F = self.field
        out = [F.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return BinaryForm(F, out)

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise ValueError("adding binary forms of different degree")
        F = self.field
        return BinaryForm(F, [F.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        F = self.field
        return BinaryForm(F, [F.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x, y):
        F = self.field
        d = self.degree
        total = F.zero
        for i, c in enumerate(self.coeffs):
            total = F.add(total, F.mul(c, F.mul(F.pow(x, d - i), F.pow(y, i))))
        return total

    def substitute(self, a, b, c, d) -> "BinaryForm":
        """The form ``f(a*x + b*y, c*x + d*y)``."""
        F = self.field
        X = BinaryForm(F, (a, b))
        Y = BinaryForm(F, (c, d))
        deg = self.degree
        total = BinaryForm(F, [F.zero] * (deg + 1))
        for i, coef in enumerate(self.coeffs):
            term = BinaryForm(F, (coef,))
            for _ in range(deg - i):
                term = term * X
            for _ in range(i):
                term = term * Y
            total = total + term
        return total

    def dehomogenize(self) -> list:
        """Univariate coefficients (low degree first) of ``f(t, 1)``."""
        return list(reversed(self.coeffs))

    def __repr__(self):
        return f"BinaryForm({[self.field.format(c) for c in self.coeffs]})"


def _uni_trim(f, F):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def univariate_gcd(f, g, F: Field) -> list:
    """Monic gcd of coefficient lists (low degree first) by Euclid over ``F``."""
    f, g = _uni_trim(f, F), _uni_trim(g, F)
    while g:
        inv = F.inv(g[-1])
        r = list(f)
        while len(r) >= len(g):
            c = F.mul(r[-1], inv)
            shift = len(r) - len(g)
            for i, gc in enumerate(g):
                r[i + shift] = F.sub(r[i + shift], F.mul(c, gc))
            r.pop()
            r = _uni_trim(r, F)
        f, g = g, r
    if not f:
        return []
    inv = F.inv(f[-1])
    return [F.mul(c, inv) for c in f]


def binary_form_common_root(forms) -> bool:
    """True iff the forms share a projective zero over the algebraic closure."""
    forms = list(forms)
    if not forms:
        raise ValueError("binary_form_common_root needs at least one form")
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        return True
    F = nonzero[0].field
    # the point (1:0) is a zero of f iff its x^d coefficient vanishes
    if all(F.is_zero(f.coeffs[0]) for f in nonzero):
        return True
    g = nonzero[0].dehomogenize()
    for f in nonzero[1:]:
        g = univariate_gcd(g, f.dehomogenize(), F)
        if len(_uni_trim(g, F)) <= 1:
            return False
    return len(_uni_trim(g, F)) > 1
