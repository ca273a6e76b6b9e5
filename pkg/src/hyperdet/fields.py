"""Exact fields used throughout the package.

A :class:`Field` object knows how to do arithmetic on *raw* values and
wraps them into user-facing scalars.  Raw values are what hypermatrices
store internally:

* ``PrimeField(p)``: raw values are ints in ``[0, p)``; scalars are
  :class:`PrimeFieldScalar`.
* ``RationalField()``: raw values and scalars are :class:`fractions.Fraction`.
* ``RationalFunctionField``: see :mod:`hyperdet.rational_functions`.

The row/column kernels (``axpy``, ``scale``, ``col_axpy``, ``col_scale``)
are the inner loops of every elimination in the package, so each field
provides its own.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Base class: generic kernels written with Python operators."""

    name = "field"
    characteristic = 0

    zero = None
    one = None

    # --- scalar arithmetic on raw values -------------------------------
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.one / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def skippable(self, a) -> bool:
        """True when multiplying by ``a`` is known to be a no-op addend.

        Numeric fields answer exactly; lazy fields only report values that
        are zero without evaluation.
        """
        return self.is_zero(a)

    def eq(self, a, b) -> bool:
        return a == b

    # --- conversion ----------------------------------------------------
    def __call__(self, value):
        """Return the user-facing scalar for ``value``."""
        return self.element(self.convert(value))

    def convert(self, value):
        """Coerce an int, string or scalar into a raw value."""
        raise NotImplementedError

    def element(self, raw):
        return raw

    def format(self, raw) -> str:
        return str(raw)

    def parse(self, text: str):
        return self.convert(text)

    def random(self, rng: random.Random, nonzero: bool = False):
        raise NotImplementedError

    # --- vector kernels (lists of raw values) --------------------------
    def axpy(self, u, v, c):
        """Return ``u + c*v`` elementwise."""
        return [x + c * y for x, y in zip(u, v)]

    def scale(self, u, c):
        return [x * c for x in u]

    def col_axpy(self, rows, i, j, c):
        """In place: ``row[i] += c*row[j]`` for every row."""
        for row in rows:
            row[i] = row[i] + c * row[j]

    def col_scale(self, rows, i, c):
        for row in rows:
            row[i] = row[i] * c

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()


class PrimeFieldScalar:
    """Element of F_p.  ``residue`` is always reduced into ``[0, p)``."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: "PrimeField"):
        self.residue = residue % field.p
        self.field = field

    @property
    def modulus(self) -> int:
        return self.field.p

    def _other(self, other):
        if isinstance(other, PrimeFieldScalar):
            if other.field.p != self.field.p:
                raise FieldError(f"mixing F_{self.field.p} and F_{other.field.p}")
            return other.residue
        if isinstance(other, int):
            return other % self.field.p
        if isinstance(other, Fraction):
            return self.field.convert(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.residue + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.residue - o, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(o - self.residue, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.residue * o, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.residue * self.field.inv(o), self.field)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(o * self.field.inv(self.residue), self.field)

    def __neg__(self):
        return PrimeFieldScalar(-self.residue, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        return PrimeFieldScalar(self.field.pow(self.residue, n), self.field)

    def inverse(self) -> "PrimeFieldScalar":
        return PrimeFieldScalar(self.field.inv(self.residue), self.field)

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return False
        return self.residue == o

    def __hash__(self):
        return hash((self.residue, self.field.p))

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"{self.residue} (mod {self.field.p})"

    def __str__(self):
        return str(self.residue)


class PrimeField(Field):
    """The prime field F_p for a word-sized prime ``p``."""

    def __init__(self, p: int):
        p = int(p)
        if p >= 1 << 63 or not is_prime(p):
            raise FieldError(f"{p} is not a word-sized prime")
        self.p = p
        self.characteristic = p
        self.name = f"F_{p}"
        self.zero = 0
        self.one = 1

    def _key(self):
        return (self.p,)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a):
        return a == 0

    def is_one(self, a):
        return a == 1

    def convert(self, value):
        if isinstance(value, PrimeFieldScalar):
            if value.field.p != self.p:
                raise FieldError(f"element of F_{value.field.p} given to F_{self.p}")
            return value.residue
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        raise TypeError(f"cannot convert {value!r} to F_{self.p}")

    def element(self, raw):
        return PrimeFieldScalar(raw, self)

    def format(self, raw):
        return str(raw)

    def random(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    # kernels with modular reduction folded in
    def axpy(self, u, v, c):
        p = self.p
        return [(x + c * y) % p for x, y in zip(u, v)]

    def scale(self, u, c):
        p = self.p
        return [x * c % p for x in u]

    def col_axpy(self, rows, i, j, c):
        p = self.p
        for row in rows:
            row[i] = (row[i] + c * row[j]) % p

    def col_scale(self, rows, i, c):
        p = self.p
        for row in rows:
            row[i] = row[i] * c % p


_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class RationalField(Field):
    """The field Q; raw values are ``Fraction`` instances."""

    name = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "RationalField()"

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def pow(self, a, n):
        return a ** n

    def convert(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            return Fraction(int(value))
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            if not _RATIONAL_RE.match(value):
                raise FieldError(f"not a rational number: {value!r}")
            return Fraction(value.replace(" ", ""))
        if isinstance(value, PrimeFieldScalar):
            raise FieldError("cannot coerce a prime-field element into Q")
        raise TypeError(f"cannot convert {value!r} to Q")

    def format(self, raw):
        return str(raw)

    def random(self, rng, nonzero=False, bound=9):
        while True:
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if x or not nonzero:
                return x

    def axpy(self, u, v, c):
        if c == 1:
            return [x + y for x, y in zip(u, v)]
        return [x + c * y for x, y in zip(u, v)]


QQ = RationalField()


def GF(p: int) -> PrimeField:
    """Shorthand for ``PrimeField(p)``."""
    return PrimeField(p)


def invert(a):
    """Multiplicative inverse of a field scalar.

    Raises ``ZeroDivisionError`` for zero.
    """
    if isinstance(a, PrimeFieldScalar):
        return a.inverse()
    if isinstance(a, int):
        a = Fraction(a)
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    return 1 / a


def scalar_pow(a, n: int):
    """``a**n`` for any integer ``n``; ``scalar_pow(a, 0) == 1``."""
    if isinstance(a, int):
        a = Fraction(a)
    if n < 0 and a == 0:
        raise ZeroDivisionError("negative power of zero")
    return a ** n


def field_from_json(obj: dict) -> Field:
    """Build the field named by a JSON header (``"fp"`` + ``"p"`` or ``"rational"``)."""
    kind = obj.get("field")
    if kind == "fp":
        if "p" not in obj:
            raise FieldError('field "fp" needs a prime "p"')
        return PrimeField(int(obj["p"]))
    if kind == "rational":
        return QQ
    raise FieldError(f"unknown field {kind!r}")


def field_to_json(field: Field) -> dict:
    if isinstance(field, PrimeField):
        return {"field": "fp", "p": field.p}
    if isinstance(field, RationalField):
        return {"field": "rational"}
    raise FieldError(f"{field!r} has no JSON encoding")
