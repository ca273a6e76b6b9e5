"""Checks that do not go through the reduction algorithm.

* q-analogs, |GL_n(F_q)| and the closed-form count of nondegenerate
  2 x k x (k+1) hypermatrices over F_q;
* a degeneracy oracle built on the pencil criterion: M is degenerate iff
  the maximal minors of ``x M0 + y M1`` share a projective root over the
  algebraic closure;
* exhaustive enumeration over small prime fields.
"""
from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

from . import matrices as mx
from .fields import Field, PrimeField, is_prime
from .hypermatrix import Hypermatrix
from .polynomials import BinaryForm, binary_form_common_root
from .reduction import _double_gaussian, _Engine, _first_slice

DEFAULT_ENUMERATION_BUDGET = 3 ** 12


class BudgetExceeded(RuntimeError):
    pass


# --- q-analogs ---------------------------------------------------------------

def q_int(n: int, q: int) -> int:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(q ** i for i in range(n))


def q_factorial(n: int, q: int) -> int:
    out = 1
    for i in range(1, n + 1):
        out *= q_int(i, q)
    return out


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = q^C(n,2) (q-1)^n [n]!_q."""
    return q ** comb(n, 2) * (q - 1) ** n * q_factorial(n, q)


def count_formula(k: int, q: int) -> int:
    """Number of nondegenerate 2 x k x (k+1) hypermatrices over F_q."""
    if k < 1 or q < 2:
        raise ValueError("need k >= 1 and q >= 2")
    return q ** (k * k) * (q - 1) ** (2 * k) * q_factorial(k, q) * q_factorial(k + 1, q)


# --- pencil oracle -----------------------------------------------------------

def _poly_mul(F, a, b):
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _poly_add(F, a, b):
    return [F.add(x, y) for x, y in zip(a, b)]


def pencil_minors_laplace(F: Field, s0, s1, k: int) -> list:
    """Maximal minors of the pencil as coefficient lists (x^k first).

    ``out[r]`` is the minor with pencil column ``r`` deleted.  Row-by-row
    Laplace expansion over column subsets (2^(k+1) subsets).
    """
    cols = k + 1
    # pencil row i is slice column i; its entries are linear forms (s0, s1)
    lin = [[(s0[r][i], s1[r][i]) for r in range(cols)] for i in range(k)]
    prev = {0: [F.one]}
    for t in range(k):
        cur = {}
        row = lin[t]
        for mask, det in prev.items():
            for c in range(cols):
                bit = 1 << c
                if mask & bit:
                    continue
                a, b = row[c]
                if F.is_zero(a) and F.is_zero(b):
                    continue
                # sign: number of chosen columns to the right of c
                sign = bin(mask >> (c + 1)).count("1") & 1
                term = _poly_mul(F, [a, b], det)
                if sign:
                    term = [F.neg(x) for x in term]
                new = mask | bit
                cur[new] = _poly_add(F, cur[new], term) if new in cur else term
        prev = cur
    full = (1 << cols) - 1
    zero = [F.zero] * (k + 1)
    return [prev.get(full ^ (1 << r), zero) for r in range(cols)]


def pencil_minors_interpolate(F: Field, s0, s1, k: int) -> list:
    """Same minors by evaluating at y/x = t_0..t_k and interpolating.

    Needs k+1 distinct field elements.
    """
    if F.characteristic and F.characteristic <= k:
        raise ValueError("field too small for interpolation")
    cols = k + 1
    pts = [F.convert(i) for i in range(k + 1)]
    values = [[None] * (k + 1) for _ in range(cols)]
    for pi, t in enumerate(pts):
        P = [[F.add(s0[r][i], F.mul(t, s1[r][i])) for r in range(cols)] for i in range(k)]
        for r in range(cols):
            sub = [[row[c] for c in range(cols) if c != r] for row in P]
            values[r][pi] = mx.det(F, sub)
    # coefficients come out low degree first in t = y/x, i.e. indexed by the power of y
    return [_interpolate(F, pts, values[r]) for r in range(cols)]


def _interpolate(F: Field, xs, ys) -> list:
    """Coefficients (low degree first) of the polynomial through the points."""
    n = len(xs)
    coeffs = [F.zero] * n
    for i in range(n):
        basis = [F.one]
        denom = F.one
        for j in range(n):
            if j == i:
                continue
            basis = _poly_mul(F, basis, [F.neg(xs[j]), F.one])
            denom = F.mul(denom, F.sub(xs[i], xs[j]))
        scale = F.mul(ys[i], F.inv(denom))
        for d, b in enumerate(basis):
            coeffs[d] = F.add(coeffs[d], F.mul(scale, b))
    return coeffs


LAPLACE_MAX_K = 6


def pencil_minors(M: Hypermatrix) -> list:
    """The k+1 maximal minors of ``x M0 + y M1`` as :class:`BinaryForm` objects."""
    F, k = M.field, M.k
    s0, s1 = M.slices
    if k <= LAPLACE_MAX_K or (F.characteristic and F.characteristic <= k):
        raw = pencil_minors_laplace(F, s0, s1, k)
    else:
        raw = pencil_minors_interpolate(F, s0, s1, k)
    return [BinaryForm(F, c) for c in raw]


def degenerate_pencil_oracle(M: Hypermatrix) -> bool:
    """True iff some nonzero ``(x:y)`` over the closure makes the pencil rank-deficient."""
    return binary_form_common_root(pencil_minors(M))


def _oracle_raw(F: Field, s0, s1, k: int) -> bool:
    return binary_form_common_root(
        [BinaryForm(F, c) for c in pencil_minors_laplace(F, s0, s1, k)])


def _algorithm_raw(F: Field, s0, s1, k: int) -> bool:
    E = _Engine(F, k, [s0, s1], log=False, track=False)
    return (_first_slice(E) or _double_gaussian(E)) is not None


# --- enumeration -------------------------------------------------------------

@dataclass
class EnumerationResult:
    k: int
    q: int
    total: int
    algorithm: int | None
    oracle: int | None
    disagreements: int


def _check_enumeration(k: int, q: int, budget: int | None):
    if not is_prime(q):
        raise ValueError(f"enumeration needs a prime q, got {q}")
    states = q ** (2 * k * (k + 1))
    limit = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    if states > limit:
        raise BudgetExceeded(f"{states} states exceed the enumeration budget of {limit}")
    return states


def _enumerate_chunk(args):
    k, q, prefix, methods = args
    F = PrimeField(q)
    n = 2 * k * (k + 1)
    half = k * (k + 1)
    alg = orc = dis = total = 0
    for rest in itertools.product(range(q), repeat=n - len(prefix)):
        flat = prefix + rest
        total += 1
        a_deg = o_deg = None
        if "algorithm" in methods:
            s0 = [list(flat[r * k:(r + 1) * k]) for r in range(k + 1)]
            s1 = [list(flat[half + r * k:half + (r + 1) * k]) for r in range(k + 1)]
            a_deg = _algorithm_raw(F, s0, s1, k)
            if not a_deg:
                alg += 1
        if "oracle" in methods:
            s0 = [flat[r * k:(r + 1) * k] for r in range(k + 1)]
            s1 = [flat[half + r * k:half + (r + 1) * k] for r in range(k + 1)]
            o_deg = _oracle_raw(F, s0, s1, k)
            if not o_deg:
                orc += 1
        if a_deg is not None and o_deg is not None and a_deg != o_deg:
            dis += 1
    return total, alg, orc, dis


def enumerate_nondegenerate(k: int, q: int, methods=("algorithm", "oracle"),
                            budget: int | None = None, threads: int = 1) -> EnumerationResult:
    """Count nondegenerate hypermatrices over F_q by exhaustive iteration.

    The iteration space is split by a prefix of the entry vector; chunk
    results are summed, so the totals do not depend on ``threads``.
    """
    _check_enumeration(k, q, budget)
    methods = tuple(methods)
    for m in methods:
        if m not in ("algorithm", "oracle"):
            raise ValueError(f"unknown method {m!r}")
    n = 2 * k * (k + 1)
    plen = min(2, n)
    chunks = [(k, q, prefix, methods) for prefix in itertools.product(range(q), repeat=plen)]
    if threads and threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_enumerate_chunk, chunks))
    else:
        parts = [_enumerate_chunk(c) for c in chunks]
    total = sum(p[0] for p in parts)
    alg = sum(p[1] for p in parts) if "algorithm" in methods else None
    orc = sum(p[2] for p in parts) if "oracle" in methods else None
    dis = sum(p[3] for p in parts)
    return EnumerationResult(k, q, total, alg, orc, dis)


def count_enumerate(k: int, q: int, method: str = "algorithm", budget: int | None = None,
                    threads: int = 1) -> int:
    """Exhaustive count using either the reduction or the pencil oracle."""
    res = enumerate_nondegenerate(k, q, (method,), budget, threads)
    return res.algorithm if method == "algorithm" else res.oracle


@dataclass
class CountReport:
    k: int
    q: int
    formula: int
    enumerated: int | None = None

    @property
    def agree(self) -> bool:
        return self.enumerated is None or self.enumerated == self.formula

    def to_json(self) -> dict:
        return {"k": self.k, "q": self.q, "formula": str(self.formula),
                "enumerated": None if self.enumerated is None else str(self.enumerated),
                "agree": self.agree}

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def default_threads() -> int:
    return os.cpu_count() or 1
