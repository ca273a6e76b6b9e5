"""Hyperdeterminants of 2 x k x (k+1) hypermatrices.

The reduction to I_{k,k+1} supplies ``detA`` and ``detB``, the products of
the determinants of every column and row operation.  With the
normalization Det(I_{k,k+1}) = 1 and the transformation law
``Det(g.M) = det(A)^(k+1) det(B)^k Det(M)``::

    Det(M) = detA^-(k+1) * detB^-k

Running the same reduction over a rational-function field gives the
hyperdeterminant as an explicit polynomial.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .fields import Field, PrimeField
from .hypermatrix import SWAP, Hypermatrix
from .polynomials import SparsePolynomial
from .rational_functions import InfeasibleError, RationalFunctionField
from .reduction import _double_gaussian, _Engine, _first_slice


@dataclass
class DetResult:
    value: object
    op_count: int
    degenerate: bool
    reason: str | None = None

    def to_json(self, field: Field) -> dict:
        return {"det": field.format(field.convert(self.value)),
                "degenerate": self.degenerate, "ops": self.op_count}


def _pow_cost(n: int) -> int:
    """Multiplications used by square-and-multiply for ``x**n``."""
    return max(n.bit_length() - 1, 0) + max(bin(n).count("1") - 1, 0)


def det_from_factors(F: Field, k: int, detA, detB):
    """``detA^-(k+1) * detB^-k`` and the number of field operations it costs."""
    value = F.mul(F.pow(detA, -(k + 1)), F.pow(detB, -k))
    return value, _pow_cost(k + 1) + _pow_cost(k) + 3


def _reduce(M: Hypermatrix, engine_cls=_Engine):
    E = engine_cls(M.field, M.k, [[list(r) for r in sl] for sl in M.slices], log=False, track=False)
    reason = _first_slice(E) or _double_gaussian(E)
    return E, reason


def hyperdeterminant(M: Hypermatrix) -> DetResult:
    """Det(M) in O(k^4) field operations; zero exactly when M is degenerate."""
    F = M.field
    E, reason = _reduce(M)
    if reason is not None:
        return DetResult(F.element(F.zero), E.ops, True, reason)
    value, cost = det_from_factors(F, M.k, E.detA, E.detB)
    return DetResult(F.element(value), E.ops + cost, False)


# --- symbolic generation ---------------------------------------------------

def _index_name(letter: str, r: int, c: int) -> str:
    if r < 10 and c < 10:
        return f"{letter}_{{{r}{c}}}"
    return f"{letter}_{{{r},{c}}}"


def variable_names(k: int, reduced: bool = True) -> list:
    """Names in canonical variable order: ``b_{rc}`` row-major for slice 1,
    preceded by ``a_{rc}`` for slice 0 in the general case."""
    names = [_index_name("b", r, c) for r in range(k + 1) for c in range(k)]
    if not reduced:
        names = [_index_name("a", r, c) for r in range(k + 1) for c in range(k)] + names
    return names


class SymbolicPivotError(RuntimeError):
    """A generic symbolic pivot came out zero or needed a swap."""


class _SymbolicEngine(_Engine):
    def op(self, side, kind, i, j=None, c=None):
        if kind == SWAP:
            raise SymbolicPivotError("generic pivots are nonzero; a swap indicates a bug")
        super().op(side, kind, i, j, c)


def symbolic_hyperdet(k: int, reduced: bool = True, term_budget: int | None = 10**6) -> SparsePolynomial:
    """The hyperdeterminant as a polynomial in the entries.

    With ``reduced`` slice 0 is fixed to ``[I_k; 0]`` and slice 1 holds the
    indeterminates ``b_{rc}``; otherwise slice 0 holds ``a_{rc}`` too.
    Raises :class:`InfeasibleError` past ``term_budget`` intermediate terms.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    names = variable_names(k, reduced)
    F = RationalFunctionField(len(names), names, term_budget=term_budget)
    gens = F.gens()
    n = (k + 1) * k
    if reduced:
        s0 = [[F.one if r == c else F.zero for c in range(k)] for r in range(k + 1)]
        s1 = [[gens[r * k + c] for c in range(k)] for r in range(k + 1)]
    else:
        s0 = [[gens[r * k + c] for c in range(k)] for r in range(k + 1)]
        s1 = [[gens[n + r * k + c] for c in range(k)] for r in range(k + 1)]
    M = Hypermatrix._wrap(F, k, [s0, s1])
    E, reason = _reduce(M, _SymbolicEngine)
    if reason is not None:
        raise SymbolicPivotError(f"generic symbolic hypermatrix reported degenerate ({reason})")
    value, _ = det_from_factors(F, k, E.detA, E.detB)
    return value.to_polynomial()


@dataclass
class ConsistencyReport:
    k: int
    trials: int
    mismatches: int
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def random_reduced_hypermatrix(k: int, F: Field, rng: random.Random) -> Hypermatrix:
    s0 = [[F.one if r == c else F.zero for c in range(k)] for r in range(k + 1)]
    s1 = [[F.random(rng) for _ in range(k)] for _ in range(k + 1)]
    return Hypermatrix._wrap(F, k, [s0, s1])


def eval_consistency_check(k: int, trials: int, poly: SparsePolynomial | None = None,
                           field: Field | None = None, seed: int = 0) -> ConsistencyReport:
    """Compare the symbolic polynomial with numeric Det on random reduced inputs."""
    F = field or PrimeField(10007)
    if poly is None:
        poly = symbolic_hyperdet(k, reduced=True)
    rng = random.Random(seed)
    report = ConsistencyReport(k, trials, 0)
    for _ in range(trials):
        M = random_reduced_hypermatrix(k, F, rng)
        values = [x for row in M.slices[1] for x in row]
        expected = poly.evaluate(values, F)
        got = F.convert(hyperdeterminant(M).value)
        if not F.eq(expected, got):
            report.mismatches += 1
            if len(report.failures) < 10:
                report.failures.append((M, expected, got))
    return report


__all__ = [
    "DetResult",
    "ConsistencyReport",
    "InfeasibleError",
    "SymbolicPivotError",
    "det_from_factors",
    "eval_consistency_check",
    "hyperdeterminant",
    "random_reduced_hypermatrix",
    "symbolic_hyperdet",
    "variable_names",
]
