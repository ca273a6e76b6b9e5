"""Reduction of nondegenerate hypermatrices to I_{k,k+1}.

``reduce_first_slice`` brings slice 0 to ``[I_k; 0]`` with row operations,
then ``double_gaussian`` runs the double Gaussian elimination on slice 1
using row operations paired with compensating column operations.  Every
operation is optionally logged, its determinant multiplied into
``detA``/``detB`` and its matrix folded into an accumulated group element.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from enum import Enum

from . import matrices as mx
from .fields import Field
from .hypermatrix import (
    ADDMUL,
    COLUMN,
    ROW,
    SCALE,
    SWAP,
    DimensionMismatch,
    GroupElement,
    Hypermatrix,
    _apply_raw,
    elementary_op,
    identity_hypermatrix,
)


class Status(str, Enum):
    REDUCED = "reduced"
    DEGENERATE = "degenerate"


# reason codes for degenerate verdicts
FIRST_SLICE_RANK = "first-slice-rank-deficient"
ZERO_PIVOT_ROW = "zero-pivot-row"


class Degenerate(ArithmeticError):
    """Raised by operations that require a nondegenerate input."""

    def __init__(self, reason: str, message: str = "hypermatrix is degenerate"):
        super().__init__(f"{message} ({reason})")
        self.reason = reason


@dataclass(frozen=True)
class OperationRecord:
    side: str
    kind: str
    i: int
    j: int | None = None
    scalar: object = None

    def to_json(self, F: Field) -> dict:
        d = {"side": self.side, "kind": self.kind, "i": self.i}
        if self.j is not None:
            d["j"] = self.j
        if self.scalar is not None:
            d["scalar"] = F.format(self.scalar)
        return d

    @classmethod
    def from_json(cls, d: dict, F: Field) -> "OperationRecord":
        scalar = d.get("scalar")
        return cls(d["side"], d["kind"], int(d["i"]),
                   None if d.get("j") is None else int(d["j"]),
                   None if scalar is None else F.parse(str(scalar)))


@dataclass
class ReductionOutcome:
    status: Status
    log: list = dc_field(default_factory=list)
    detA: object = None
    detB: object = None
    group: GroupElement | None = None
    reason: str | None = None
    op_count: int = 0
    hypermatrix: Hypermatrix | None = None

    @property
    def reduced(self) -> bool:
        return self.status is Status.REDUCED

    def log_json(self, F: Field) -> list:
        return [rec.to_json(F) for rec in self.log]


class _Engine:
    """Applies elementary operations to raw slices with optional bookkeeping."""

    def __init__(self, F: Field, k: int, slices, log: bool = True, track: bool = True):
        self.F = F
        self.k = k
        self.slices = slices
        self.log = [] if log else None
        self.track = track
        self.A = mx.identity(F, k) if track else None
        self.B = mx.identity(F, k + 1) if track else None
        self.detA = F.one
        self.detB = F.one
        self.ops = 0

    def op(self, side, kind, i, j=None, c=None):
        F = self.F
        k = self.k
        _apply_raw(F, self.slices, side, kind, i, j, c)
        length = k if side == ROW else k + 1
        if kind == ADDMUL:
            self.ops += 4 * length
        elif kind == SCALE:
            self.ops += 2 * length + 1
            if side == ROW:
                self.detB = F.mul(self.detB, c)
            else:
                self.detA = F.mul(self.detA, c)
        else:
            if side == ROW:
                self.detB = F.neg(self.detB)
            else:
                self.detA = F.neg(self.detA)
        if self.log is not None:
            self.log.append(OperationRecord(side, kind, i, j, c))
        if self.track:
            # both sides accumulate as left multiplication by the elementary matrix
            _apply_raw(F, [self.A if side == COLUMN else self.B], ROW, kind, i, j, c)


def _first_slice(E: _Engine):
    """Gauss-Jordan on slice 0; returns a reason code or None."""
    F, k = E.F, E.k
    s0 = E.slices[0]
    for c in range(k):
        piv = None
        for r in range(c, k + 1):
            if not F.is_zero(s0[r][c]):
                piv = r
                break
        if piv is None:
            return FIRST_SLICE_RANK
        if piv != c:
            E.op(ROW, SWAP, c, piv)
        p = s0[c][c]
        if not F.is_one(p):
            E.op(ROW, SCALE, c, None, F.inv(p))
        for r in range(k + 1):
            if r != c:
                x = s0[r][c]
                if not F.is_zero(x):
                    E.op(ROW, ADDMUL, r, c, F.neg(x))
    return None


def _double_gaussian(E: _Engine):
    """Algorithm body on slice 1; returns a reason code or None."""
    F, k = E.F, E.k
    op = E.op
    a = E.slices[1]
    for j in range(k - 1, -1, -1):
        if F.is_zero(a[j + 1][j]):
            for l in range(j):
                if not F.is_zero(a[j + 1][l]):
                    op(COLUMN, SWAP, l, j)
                    op(ROW, SWAP, l, j)
                    break
            if F.is_zero(a[j + 1][j]):
                return ZERO_PIVOT_ROW
        c = a[j + 1][j]
        if not F.is_one(c):
            ci = F.inv(c)
            for r in range(j + 1, k + 1):
                op(ROW, SCALE, r, None, ci)
            for col in range(j + 1, k):
                op(COLUMN, SCALE, col, None, c)
        # clear the rest of row j+1
        for l in range(j):
            c = a[j + 1][l]
            if F.skippable(c):
                continue
            op(COLUMN, ADDMUL, l, j, F.neg(c))
            op(ROW, ADDMUL, j, l, c)
        # clear the rest of the column, chasing down and to the right
        for m in range(j + 1, k + 1):
            for l in range(m):
                c = a[l][m - 1]
                if F.skippable(c):
                    continue
                op(ROW, ADDMUL, l, m, F.neg(c))
                if m < k:
                    op(COLUMN, ADDMUL, m, l, c)
    return None


def _is_first_slice_reduced(F: Field, s0, k: int) -> bool:
    return all(F.eq(s0[r][c], F.one if r == c else F.zero)
               for r in range(k + 1) for c in range(k))


def _outcome(E: _Engine, M: Hypermatrix, reason) -> ReductionOutcome:
    final = Hypermatrix._wrap(M.field, M.k, E.slices)
    if reason is not None:
        return ReductionOutcome(Status.DEGENERATE, E.log or [], reason=reason,
                                op_count=E.ops, hypermatrix=final)
    group = GroupElement._wrap(E.F, E.A, E.B) if E.track else None
    return ReductionOutcome(Status.REDUCED, E.log if E.log is not None else [],
                            E.detA, E.detB, group, None, E.ops, final)


def _engine_for(M: Hypermatrix, log: bool, track: bool) -> _Engine:
    slices = [[list(row) for row in sl] for sl in M.slices]
    return _Engine(M.field, M.k, slices, log, track)


def reduce_first_slice(M: Hypermatrix, *, log: bool = True, track: bool = True) -> ReductionOutcome:
    """Row-reduce slice 0 to ``[I_k; 0]``; slice 1 is carried along."""
    E = _engine_for(M, log, track)
    return _outcome(E, M, _first_slice(E))


def double_gaussian(M: Hypermatrix, *, log: bool = True, track: bool = True) -> ReductionOutcome:
    """Reduce slice 1 of a hypermatrix whose slice 0 is already ``[I_k; 0]``."""
    if not _is_first_slice_reduced(M.field, M.slices[0], M.k):
        raise ValueError("double_gaussian needs slice 0 equal to [I_k; 0]")
    E = _engine_for(M, log, track)
    return _outcome(E, M, _double_gaussian(E))


def canonicalize(M: Hypermatrix, *, log: bool = True, track: bool = True) -> ReductionOutcome:
    """Reduce ``M`` to I_{k,k+1} (or report it degenerate)."""
    E = _engine_for(M, log, track)
    reason = _first_slice(E)
    if reason is None:
        reason = _double_gaussian(E)
    return _outcome(E, M, reason)


def is_degenerate(M: Hypermatrix) -> bool:
    """Degeneracy verdict of the reduction, without any bookkeeping."""
    E = _engine_for(M, False, False)
    return (_first_slice(E) or _double_gaussian(E)) is not None


def replay(M: Hypermatrix, log) -> Hypermatrix:
    """Apply a logged operation sequence to a copy of ``M``."""
    out = M.copy()
    for rec in log:
        elementary_op(out, rec.side, rec.kind, rec.i, rec.j, rec.scalar)
    return out


def log_to_json(log, F: Field) -> str:
    return json.dumps([rec.to_json(F) for rec in log])


def log_from_json(text, F: Field) -> list:
    data = json.loads(text) if isinstance(text, str) else text
    return [OperationRecord.from_json(d, F) for d in data]


def canonical_group_element(M: Hypermatrix) -> GroupElement:
    out = canonicalize(M, log=False)
    if not out.reduced:
        raise Degenerate(out.reason)
    return out.group


def transporter(M1: Hypermatrix, M2: Hypermatrix) -> GroupElement:
    """Group element ``g`` with ``g . M1 == M2``."""
    if M1.k != M2.k:
        raise DimensionMismatch("hypermatrices of different size")
    if M1.field != M2.field:
        raise ValueError("hypermatrices over different fields")
    g1 = canonical_group_element(M1)
    g2 = canonical_group_element(M2)
    return g2.inverse().compose(g1)


def is_trivial_in_G(g: GroupElement) -> bool:
    """True iff ``g = (cI, c^-1 I)`` for a nonzero scalar ``c``."""
    F = g.field
    c = g.A[0][0]
    d = g.B[0][0]
    if F.is_zero(c):
        return False
    for n, X, s in ((g.k, g.A, c), (g.k + 1, g.B, d)):
        for r in range(n):
            for col in range(n):
                want = s if r == col else F.zero
                if not F.eq(X[r][col], want):
                    return False
    return F.is_one(F.mul(c, d))


def is_identity_hypermatrix(M: Hypermatrix) -> bool:
    return M == identity_hypermatrix(M.k, M.field)
