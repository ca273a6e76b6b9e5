"""The field Q(x_0, ..., x_{n-1}) of rational functions.

Two ideas keep symbolic elimination tractable:

* **Lazy evaluation.**  Arithmetic builds a small expression DAG and only
  forces a value when somebody asks (zero tests, output).  Cheap
  structural rules fire at construction time: ``x + 0``, ``x * 1``,
  ``x - x`` and ``x * x**-1``.  Entries that an elimination clears again
  without ever inspecting are never expanded.
* **Factored values.**  A forced value is ``const * num * prod(f_i**e_i)``
  where ``f_i`` are primitive integer polynomials from a per-field factor
  basis and ``e_i`` may be negative.  Inverting a value moves its
  numerator into the basis, so denominators never need a polynomial gcd;
  cancellation is trial division by basis factors.

:meth:`RationalFunction.reduced` gives a gcd-reduced ``(numerator,
denominator)`` pair when a canonical form is wanted.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .fields import Field, FieldError
from .polynomials import (
    QQ,
    SparsePolynomial,
    _exact_div,
    _Layout,
    _mul_dicts,
    _qnorm,
    multivariate_gcd,
)


class InfeasibleError(RuntimeError):
    """A symbolic computation exceeded its configured resource budget."""


def _content(t: dict) -> int:
    g = 0
    for c in t.values():
        g = igcd(g, c)
        if g == 1:
            break
    return g


def _add_dicts(a: dict, b: dict) -> dict:
    r = dict(a)
    for e, c in b.items():
        v = r.get(e, 0) + c
        if v:
            r[e] = v
        else:
            r.pop(e, None)
    return r


def _scale_dict(t: dict, c: int) -> dict:
    if c == 1:
        return t
    return {e: v * c for e, v in t.items()}


_ONE_TERMS = {0: 1}


class _Value:
    """Forced value ``const * num * prod(basis[i] ** exps[i])``.

    ``num`` has integer coefficients with content 1; zero is ``num == {}``.
    """

    __slots__ = ("const", "num", "exps")

    def __init__(self, const: Fraction, num: dict, exps: dict):
        self.const = const
        self.num = num
        self.exps = exps

    def is_zero(self):
        return not self.num

    def size(self):
        return len(self.num)


class RationalFunctionField(Field):
    """Rational functions over Q in ``nvars`` named indeterminates.

    ``term_budget`` caps the total number of numerator terms produced
    while forcing values; crossing it raises :class:`InfeasibleError`.
    """

    def __init__(self, nvars: int, names=None, term_budget: int | None = 10**6):
        self.nvars = nvars
        self.names = list(names) if names is not None else [f"x{i}" for i in range(nvars)]
        if len(self.names) != nvars:
            raise FieldError("need one name per variable")
        self.name = f"Q({', '.join(self.names)})"
        self._lay = _Layout.get(nvars)
        self._basis: list[dict] = []
        self._basis_index: dict = {}
        self._powers: dict = {}
        self.term_budget = term_budget
        self.terms_used = 0
        self.zero = RationalFunction(self, "c", val=_Value(Fraction(0), {}, {}))
        self.one = RationalFunction(self, "c", val=_Value(Fraction(1), dict(_ONE_TERMS), {}))

    def _key(self):
        return (id(self),)

    def __repr__(self):
        return f"RationalFunctionField({self.nvars})"

    # --- Field protocol ------------------------------------------------
    def gens(self) -> list:
        return [self.variable(i) for i in range(self.nvars)]

    def variable(self, i: int) -> "RationalFunction":
        return RationalFunction(self, "c", val=_Value(Fraction(1), {self._lay.units[i]: 1}, {}))

    def convert(self, value):
        if isinstance(value, RationalFunction):
            if value.field is not self:
                raise FieldError("rational function from a different field")
            return value
        if isinstance(value, SparsePolynomial):
            if value.nvars != self.nvars:
                raise FieldError("variable count mismatch")
            return self._from_terms(value._t)
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if value == 0:
                return self.zero
            if value == 1:
                return self.one
            return RationalFunction(self, "c", val=_Value(value, dict(_ONE_TERMS), {}))
        raise TypeError(f"cannot convert {value!r} into {self.name}")

    def _from_terms(self, t: dict) -> "RationalFunction":
        if not t:
            return self.zero
        den = 1
        for c in t.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // igcd(den, c.denominator)
        ti = {e: int(c * den) for e, c in t.items()}
        g = _content(ti)
        if g != 1:
            ti = {e: c // g for e, c in ti.items()}
        return RationalFunction(self, "c", val=_Value(Fraction(g, den), ti, {}))

    def inv(self, a):
        return a.inverse()

    def pow(self, a, n):
        return a ** n

    def is_zero(self, a):
        return a.is_zero()

    def is_one(self, a):
        return a is self.one or a == self.one

    def skippable(self, a):
        return a.op == "c" and not a.val.num

    def eq(self, a, b):
        return a == b

    def format(self, raw):
        return str(raw)

    # kernels: the generic operator-based ones from Field already build DAG nodes

    # --- factor basis --------------------------------------------------
    def _factor(self, i: int) -> dict:
        return self._basis[i]

    def _basis_pow(self, i: int, n: int) -> dict:
        key = (i, n)
        p = self._powers.get(key)
        if p is None:
            if n == 1:
                p = self._basis[i]
            else:
                p = _mul_dicts(self._basis_pow(i, n - 1), self._basis[i], 0)
            self._powers[key] = p
        return p

    def _register(self, t: dict) -> int:
        key = frozenset(t.items())
        idx = self._basis_index.get(key)
        if idx is None:
            idx = len(self._basis)
            self._basis.append(t)
            self._basis_index[key] = idx
        return idx

    def _into_basis(self, num: dict):
        """Write ``num`` as ``unit * prod(basis**e)``, growing the basis."""
        lay = self._lay
        exps: dict = {}
        unit = Fraction(1)
        if len(num) == 1:
            (e, c), = num.items()
            unit *= c
            for v, d in enumerate(lay.unpack(e)):
                if d:
                    i = self._register({lay.units[v]: 1})
                    exps[i] = exps.get(i, 0) + d
            return unit, exps
        # monomial content
        common = None
        for e in num:
            common = e if common is None else _min_monomial(common, e, lay)
        if common:
            for v, d in enumerate(lay.unpack(common)):
                if d:
                    i = self._register({lay.units[v]: 1})
                    exps[i] = exps.get(i, 0) + d
            num = {e - common: c for e, c in num.items()}
        # known factors
        for i, f in enumerate(self._basis):
            if len(f) == 1 or len(f) > len(num):
                continue
            while len(num) > 1:
                q = _exact_div(num, f, lay, 0)
                if q is None or any(type(c) is not int for c in q.values()):
                    break
                num = q
                exps[i] = exps.get(i, 0) + 1
        if len(num) == 1:
            (e, c), = num.items()
            return unit * c, exps
        g = _content(num)
        lead = num[max(num)]
        if lead < 0:
            g = -g
        if g != 1:
            num = {e: c // g for e, c in num.items()}
            unit *= g
        i = self._register(num)
        exps[i] = exps.get(i, 0) + 1
        return unit, exps

    # --- arithmetic on forced values -----------------------------------
    def _charge(self, v: _Value) -> _Value:
        self.terms_used += len(v.num)
        if self.term_budget is not None and self.terms_used > self.term_budget:
            raise InfeasibleError(
                f"symbolic term budget of {self.term_budget} exceeded")
        return v

    def _cancel(self, num: dict, exps: dict) -> tuple:
        """Trial-divide ``num`` by factors that sit in the denominator."""
        if not num:
            return num, {}
        exps = {i: e for i, e in exps.items() if e}
        for i, e in list(exps.items()):
            if e >= 0:
                continue
            f = self._basis[i]
            while e < 0 and len(num) >= len(f):
                q = _exact_div(num, f, self._lay, 0)
                if q is None or any(type(c) is not int for c in q.values()):
                    break
                num = q
                e += 1
            if e:
                exps[i] = e
            else:
                del exps[i]
        return num, exps

    def _vmul(self, a: _Value, b: _Value) -> _Value:
        if not a.num or not b.num:
            return _Value(Fraction(0), {}, {})
        exps = dict(a.exps)
        for i, e in b.exps.items():
            exps[i] = exps.get(i, 0) + e
        num = _mul_dicts(a.num, b.num, 0)
        num, exps = self._cancel(num, exps)
        return self._charge(_Value(a.const * b.const, num, exps))

    def _lift(self, v: _Value, target: dict) -> dict:
        num = v.num
        for i in set(v.exps) | set(target):
            extra = v.exps.get(i, 0) - target.get(i, 0)
            if extra:
                num = _mul_dicts(num, self._basis_pow(i, extra), 0)
        return num

    def _vadd(self, a: _Value, b: _Value) -> _Value:
        if not a.num:
            return b
        if not b.num:
            return a
        common = {}
        for i in set(a.exps) | set(b.exps):
            e = min(a.exps.get(i, 0), b.exps.get(i, 0))
            if e:
                common[i] = e
        na = self._lift(a, common)
        nb = self._lift(b, common)
        den = a.const.denominator * b.const.denominator // igcd(a.const.denominator,
                                                                b.const.denominator)
        ca = a.const.numerator * (den // a.const.denominator)
        cb = b.const.numerator * (den // b.const.denominator)
        num = _add_dicts(_scale_dict(na, ca), _scale_dict(nb, cb))
        if not num:
            return _Value(Fraction(0), {}, {})
        g = _content(num)
        if g != 1:
            num = {e: c // g for e, c in num.items()}
        num, exps = self._cancel(num, common)
        return self._charge(_Value(Fraction(g, den), num, exps))

    def _vneg(self, a: _Value) -> _Value:
        return _Value(-a.const, a.num, a.exps)

    def _vinv(self, a: _Value):
        """Return ``(1/a, a rewritten with its numerator in the basis)``."""
        if not a.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        unit, nexps = self._into_basis(a.num)
        exps = dict(a.exps)
        for i, e in nexps.items():
            exps[i] = exps.get(i, 0) + e
        exps = {i: e for i, e in exps.items() if e}
        const = a.const * unit
        same = _Value(const, dict(_ONE_TERMS), exps)
        inv = _Value(1 / const, dict(_ONE_TERMS), {i: -e for i, e in exps.items()})
        return inv, same

    # --- output --------------------------------------------------------
    def _expand(self, v: _Value):
        """``(numerator terms, denominator terms)`` with rational numerator coefficients."""
        num = v.num
        den = dict(_ONE_TERMS)
        for i, e in v.exps.items():
            if e > 0:
                num = _mul_dicts(num, self._basis_pow(i, e), 0)
            else:
                den = _mul_dicts(den, self._basis_pow(i, -e), 0)
        if num and den != _ONE_TERMS:
            q = _exact_div(num, den, self._lay, 0)
            if q is not None:
                num, den = q, dict(_ONE_TERMS)
        c = v.const
        num = {e: _qnorm(c * x) for e, x in num.items()}
        return num, den


def _min_monomial(a: int, b: int, lay: _Layout) -> int:
    mask = (1 << 8) - 1
    out = 0
    for i in range(lay.n):
        s = 8 * i
        x = min((a >> s) & mask, (b >> s) & mask)
        if x:
            out += x * lay.units[i]
    return out


class RationalFunction:
    """Element of a :class:`RationalFunctionField` (lazily evaluated)."""

    __slots__ = ("field", "op", "a", "b", "val")

    def __init__(self, field, op, a=None, b=None, val=None):
        self.field = field
        self.op = op
        self.a = a
        self.b = b
        self.val = val

    # --- structural helpers --------------------------------------------
    def _zero_leaf(self):
        return self.op == "c" and not self.val.num

    def _one_leaf(self):
        v = self.val
        return (self.op == "c" and v.const == 1 and not v.exps
                and len(v.num) == 1 and v.num.get(0) == 1)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field is not self.field:
                raise FieldError("rational functions from different fields")
            return other
        if isinstance(other, (int, Fraction, SparsePolynomial)):
            return self.field.convert(other)
        return NotImplemented

    # --- arithmetic (lazy) ---------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self._zero_leaf():
            return o
        if o._zero_leaf():
            return self
        if (o.op == "-" and o.a is self) or (self.op == "-" and self.a is o):
            return self.field.zero
        return RationalFunction(self.field, "+", self, o)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        if self._zero_leaf():
            return self
        if self.op == "-":
            return self.a
        return RationalFunction(self.field, "-", self)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o is self:
            return self.field.zero
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self._zero_leaf() or o._zero_leaf():
            return self.field.zero
        if self._one_leaf():
            return o
        if o._one_leaf():
            return self
        if (self.op == "i" and self.a is o) or (o.op == "i" and o.a is self):
            return self.field.one
        return RationalFunction(self.field, "*", self, o)

    def __rmul__(self, other):
        return self.__mul__(other)

    def inverse(self) -> "RationalFunction":
        if self.op == "i":
            return self.a
        node = RationalFunction(self.field, "i", self)
        if self.val is not None:
            # forced operand: invert now so the operand's value is refactored too
            node._force()
        return node

    def __invert__(self):
        return self.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # --- forcing -------------------------------------------------------
    def _force(self) -> _Value:
        if self.val is not None:
            return self.val
        F = self.field
        stack = [self]
        while stack:
            node = stack[-1]
            if node.val is not None:
                stack.pop()
                continue
            pending = [c for c in (node.a, node.b) if c is not None and c.val is None]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            op = node.op
            if op == "+":
                node.val = F._vadd(node.a.val, node.b.val)
            elif op == "*":
                node.val = F._vmul(node.a.val, node.b.val)
            elif op == "-":
                node.val = F._vneg(node.a.val)
            elif op == "i":
                inv, same = F._vinv(node.a.val)
                node.a.val = same
                node.val = inv
            else:  # pragma: no cover - leaves always carry a value
                raise AssertionError(op)
            if op in "+*":
                # unary nodes keep their operand so x - x and x * x**-1 stay detectable
                node.op = "c"
                node.a = node.b = None
        return self.val

    def is_zero(self) -> bool:
        return not self._force().num

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        if o is self:
            return True
        F = self.field
        return not F._vadd(self._force(), F._vneg(o._force())).num

    def __hash__(self):  # values are not canonical; equal objects may hash apart
        return id(self)

    # --- output --------------------------------------------------------
    def size(self) -> int:
        return len(self._force().num)

    def numerator_denominator(self):
        """``(numerator, denominator)`` SparsePolynomials (denominator has integer coefficients)."""
        num, den = self.field._expand(self._force())
        n = self.field.nvars
        return SparsePolynomial._raw(n, num, QQ), SparsePolynomial._raw(n, den, QQ)

    @property
    def numerator(self) -> SparsePolynomial:
        return self.numerator_denominator()[0]

    @property
    def denominator(self) -> SparsePolynomial:
        return self.numerator_denominator()[1]

    def reduced(self):
        """gcd-reduced ``(numerator, denominator)`` with a monic denominator."""
        num, den = self.numerator_denominator()
        if num.is_zero():
            return num, SparsePolynomial.constant(num.nvars, 1)
        g = multivariate_gcd(num, den)
        num, den = num // g, den // g
        lead = den.leading_term()[1]
        return num * Fraction(1, 1) * (1 / Fraction(lead)), den.monic()

    def to_polynomial(self) -> SparsePolynomial:
        """The value as a polynomial; ``ValueError`` if it is not one."""
        num, den = self.numerator_denominator()
        if den.is_constant():
            return num * (1 / Fraction(den.constant_value()))
        num, den = self.reduced()
        if not den.is_constant():
            raise ValueError("rational function is not a polynomial")
        return num * (1 / Fraction(den.constant_value()))

    def __repr__(self):
        num, den = self.numerator_denominator()
        names = self.field.names
        if den.is_constant() and den.constant_value() == 1:
            return num.to_text(names)
        return f"({num.to_text(names)}) / ({den.to_text(names)})"

    __str__ = __repr__
