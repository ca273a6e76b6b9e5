"""2 x k x (k+1) hypermatrices and the action of GL_k x GL_{k+1}.

Storage is ``slices[s][r][c]`` with slice ``s`` in {0, 1}, row ``r`` in
0..k and column ``c`` in 0..k-1, so each slice reads as a (k+1) x k
matrix.  ``B`` in GL_{k+1} acts on rows from the left and ``A`` in GL_k
acts on columns, slice by slice::

    S  ->  B . S . A^T
"""
from __future__ import annotations

import json

from . import matrices as mx
from .fields import QQ, Field, field_from_json, field_to_json


class DimensionMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


class ZeroScale(ValueError):
    pass


class Hypermatrix:
    """Dense 2 x k x (k+1) array of raw field values."""

    __slots__ = ("field", "k", "slices")

    def __init__(self, field: Field, k: int, slices=None):
        if k < 1:
            raise DimensionMismatch("k must be at least 1")
        self.field = field
        self.k = k
        if slices is None:
            slices = [[[field.zero] * k for _ in range(k + 1)] for _ in range(2)]
        else:
            if len(slices) != 2:
                raise DimensionMismatch("a hypermatrix has exactly two slices")
            conv = field.convert
            out = []
            for sl in slices:
                if len(sl) != k + 1 or any(len(row) != k for row in sl):
                    raise DimensionMismatch(f"each slice must be {k + 1} x {k}")
                out.append([[conv(x) for x in row] for row in sl])
            slices = out
        self.slices = slices

    @classmethod
    def _wrap(cls, field, k, slices):
        m = cls.__new__(cls)
        m.field, m.k, m.slices = field, k, slices
        return m

    @classmethod
    def from_slices(cls, slice0, slice1, field: Field = QQ) -> "Hypermatrix":
        return cls(field, len(slice0) - 1, [slice0, slice1])

    @classmethod
    def from_flat(cls, field: Field, k: int, values) -> "Hypermatrix":
        """Entries in ``(s, r, c)`` row-major order."""
        values = list(values)
        if len(values) != 2 * k * (k + 1):
            raise DimensionMismatch("wrong number of entries")
        it = iter(values)
        return cls(field, k, [[[next(it) for _ in range(k)] for _ in range(k + 1)]
                              for _ in range(2)])

    def flat(self) -> list:
        return [x for sl in self.slices for row in sl for x in row]

    def copy(self) -> "Hypermatrix":
        return Hypermatrix._wrap(self.field, self.k,
                                 [[list(row) for row in sl] for sl in self.slices])

    def __getitem__(self, idx):
        s, r, c = idx
        return self.field.element(self.slices[s][r][c])

    def __setitem__(self, idx, value):
        s, r, c = idx
        self.slices[s][r][c] = self.field.convert(value)

    def slice(self, s: int) -> list:
        """Slice ``s`` as a (k+1) x k list of user-facing scalars."""
        el = self.field.element
        return [[el(x) for x in row] for row in self.slices[s]]

    def __eq__(self, other):
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        if self.k != other.k or self.field != other.field:
            return False
        eq = self.field.eq
        return all(eq(x, y) for x, y in zip(self.flat(), other.flat()))

    def __hash__(self):
        return hash((self.k, tuple(str(x) for x in self.flat())))

    def __repr__(self):
        return f"Hypermatrix(k={self.k}, field={self.field.name})\n{self.display()}"

    def display(self) -> str:
        """Both slices side by side, each as a (k+1) x k block."""
        fmt = self.field.format
        cells = [[[fmt(x) for x in row] for row in sl] for sl in self.slices]
        width = max(len(x) for sl in cells for row in sl for x in row)
        lines = []
        for r in range(self.k + 1):
            left = " ".join(x.rjust(width) for x in cells[0][r])
            right = " ".join(x.rjust(width) for x in cells[1][r])
            lines.append(f"[{left}]   [{right}]")
        return "\n".join(lines)

    # --- JSON ---------------------------------------------------------
    def to_json(self) -> dict:
        d = field_to_json(self.field)
        fmt = self.field.format
        d["k"] = self.k
        d["slices"] = [[[fmt(x) for x in row] for row in sl] for sl in self.slices]
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "Hypermatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        field = field_from_json(obj)
        if "k" not in obj or "slices" not in obj:
            raise KeyError('hypermatrix JSON needs "k" and "slices"')
        k = obj["k"]
        if not isinstance(k, int) or isinstance(k, bool):
            raise DimensionMismatch('"k" must be an integer')
        return cls(field, k, [[[field.parse(str(x)) for x in row] for row in sl]
                              for sl in obj["slices"]])


def identity_hypermatrix(k: int, field: Field = QQ) -> Hypermatrix:
    """I_{k,k+1}: slice 0 is I_k over a zero row, slice 1 a zero row over I_k."""
    if k < 1:
        raise DimensionMismatch("k must be at least 1")
    F = field
    s0 = [[F.one if r == c else F.zero for c in range(k)] for r in range(k + 1)]
    s1 = [[F.one if r == c + 1 else F.zero for c in range(k)] for r in range(k + 1)]
    return Hypermatrix._wrap(F, k, [s0, s1])


class GroupElement:
    """A pair ``(A, B)`` in GL_k x GL_{k+1}, compared modulo scalars ``(cI, c^-1 I)``."""

    __slots__ = ("field", "k", "A", "B")

    def __init__(self, A, B, field: Field = QQ, *, check: bool = True):
        k = len(A)
        if any(len(r) != k for r in A) or len(B) != k + 1 or any(len(r) != k + 1 for r in B):
            raise DimensionMismatch("need A of size k x k and B of size (k+1) x (k+1)")
        conv = field.convert
        self.field = field
        self.k = k
        self.A = [[conv(x) for x in r] for r in A]
        self.B = [[conv(x) for x in r] for r in B]
        if check and (field.is_zero(mx.det(field, self.A)) or field.is_zero(mx.det(field, self.B))):
            raise ValueError("group element matrices must be invertible")

    @classmethod
    def _wrap(cls, field, A, B):
        g = cls.__new__(cls)
        g.field, g.k, g.A, g.B = field, len(A), A, B
        return g

    @classmethod
    def identity(cls, k: int, field: Field = QQ) -> "GroupElement":
        return cls._wrap(field, mx.identity(field, k), mx.identity(field, k + 1))

    def compose(self, other: "GroupElement") -> "GroupElement":
        """``self o other``: act by ``other`` first."""
        F = self.field
        if other.k != self.k:
            raise DimensionMismatch("group elements of different size")
        return GroupElement._wrap(F, mx.matmul(F, self.A, other.A), mx.matmul(F, self.B, other.B))

    __matmul__ = compose

    def inverse(self) -> "GroupElement":
        F = self.field
        return GroupElement._wrap(F, mx.inverse(F, self.A), mx.inverse(F, self.B))

    def det_A(self):
        return mx.det(self.field, self.A)

    def det_B(self):
        return mx.det(self.field, self.B)

    def canonical(self) -> "GroupElement":
        """Representative whose A has first nonzero entry (row-major) equal to 1."""
        F = self.field
        lead = next(x for row in self.A for x in row if not F.is_zero(x))
        inv = F.inv(lead)
        A = [[F.mul(x, inv) for x in row] for row in self.A]
        B = [[F.mul(x, lead) for x in row] for row in self.B]
        return GroupElement._wrap(F, A, B)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.k != other.k or self.field != other.field:
            return False
        a, b = self.canonical(), other.canonical()
        eq = self.field.eq
        return all(eq(x, y) for ra, rb in zip(a.A + a.B, b.A + b.B) for x, y in zip(ra, rb))

    def __hash__(self):
        c = self.canonical()
        return hash(tuple(str(x) for row in c.A + c.B for x in row))

    def to_json(self) -> dict:
        d = field_to_json(self.field)
        fmt = self.field.format
        d["k"] = self.k
        d["A"] = [[fmt(x) for x in r] for r in self.A]
        d["B"] = [[fmt(x) for x in r] for r in self.B]
        return d

    @classmethod
    def from_json(cls, obj) -> "GroupElement":
        if isinstance(obj, str):
            obj = json.loads(obj)
        F = field_from_json(obj)
        return cls([[F.parse(str(x)) for x in r] for r in obj["A"]],
                   [[F.parse(str(x)) for x in r] for r in obj["B"]], F)

    def __repr__(self):
        return f"GroupElement(A={self.A}, B={self.B})"


def apply_group(g: GroupElement, M: Hypermatrix) -> Hypermatrix:
    """Return ``g . M`` with each slice mapped to ``B S A^T``."""
    if g.k != M.k:
        raise DimensionMismatch(f"group element for k={g.k} applied to k={M.k}")
    F = M.field
    At = mx.transpose(g.A)
    slices = [mx.matmul(F, mx.matmul(F, g.B, S), At) for S in M.slices]
    return Hypermatrix._wrap(F, M.k, slices)


# --- elementary operations -------------------------------------------------

ROW, COLUMN = "row", "column"
SWAP, SCALE, ADDMUL = "swap", "scale", "addmul"


def elementary_matrix(F: Field, n: int, kind: str, i: int, j=None, scalar=None) -> list:
    """The matrix X with ``row_i += c row_j`` etc. equal to left multiplication by X.

    For columns, ``col_i += c col_j`` is ``S -> S X^T`` with the same X.
    """
    X = mx.identity(F, n)
    if kind == SWAP:
        X[i][i] = X[j][j] = F.zero
        X[i][j] = X[j][i] = F.one
    elif kind == SCALE:
        X[i][i] = scalar
    elif kind == ADDMUL:
        X[i][j] = scalar
    else:
        raise ValueError(f"unknown operation kind {kind!r}")
    return X


def elementary_op(M: Hypermatrix, side: str, kind: str, i: int, j: int | None = None,
                  scalar=None) -> Hypermatrix:
    """Apply one elementary row or column operation to both slices, in place.

    * ``swap``: exchange ``i`` and ``j``
    * ``scale``: multiply ``i`` by ``scalar`` (nonzero)
    * ``addmul``: add ``scalar`` times ``j`` to ``i``
    """
    F = M.field
    n = M.k + 1 if side == ROW else M.k
    if side not in (ROW, COLUMN):
        raise ValueError(f"side must be 'row' or 'column', not {side!r}")
    if not 0 <= i < n or (kind != SCALE and (j is None or not 0 <= j < n)):
        raise IndexOutOfRange(f"index out of range for {side} operation")
    if scalar is not None:
        scalar = F.convert(scalar)
    if kind == SCALE and (scalar is None or F.is_zero(scalar)):
        raise ZeroScale("scale factor must be nonzero")
    if kind == ADDMUL and i == j:
        raise ValueError("addmul needs two distinct indices")
    _apply_raw(F, M.slices, side, kind, i, j, scalar)
    return M


def _apply_raw(F, slices, side, kind, i, j, c):
    if side == ROW:
        for S in slices:
            if kind == SWAP:
                S[i], S[j] = S[j], S[i]
            elif kind == SCALE:
                S[i] = F.scale(S[i], c)
            elif kind == ADDMUL:
                S[i] = F.axpy(S[i], S[j], c)
            else:
                raise ValueError(f"unknown operation kind {kind!r}")
    else:
        for S in slices:
            if kind == SWAP:
                for row in S:
                    row[i], row[j] = row[j], row[i]
            elif kind == SCALE:
                F.col_scale(S, i, c)
            elif kind == ADDMUL:
                F.col_axpy(S, i, j, c)
            else:
                raise ValueError(f"unknown operation kind {kind!r}")


# --- pencils and the multilinear form ----------------------------------------

class PencilMatrix:
    """A k x (k+1) matrix ``c0 M0 + c1 M1`` (slices transposed)."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: list):
        self.field = field
        self.rows = rows

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def rank(self) -> int:
        return mx.rank(self.field, self.rows)

    def __getitem__(self, idx):
        r, c = idx
        return self.field.element(self.rows[r][c])

    def __eq__(self, other):
        if not isinstance(other, PencilMatrix):
            return NotImplemented
        eq = self.field.eq
        return self.shape == other.shape and all(
            eq(x, y) for ra, rb in zip(self.rows, other.rows) for x, y in zip(ra, rb))

    def __repr__(self):
        return f"PencilMatrix({self.rows})"


def pencil(M: Hypermatrix, c0, c1) -> PencilMatrix:
    F = M.field
    c0, c1 = F.convert(c0), F.convert(c1)
    s0, s1 = M.slices
    rows = [[F.add(F.mul(c0, s0[r][c]), F.mul(c1, s1[r][c])) for r in range(M.k + 1)]
            for c in range(M.k)]
    return PencilMatrix(F, rows)


def matrix_rank(P, field: Field | None = None) -> int:
    if isinstance(P, PencilMatrix):
        return P.rank()
    F = field or QQ
    return mx.rank(F, [[F.convert(x) for x in r] for r in P])


def matrix_det(m, field: Field = QQ):
    """Determinant of a square matrix of values convertible into ``field``."""
    F = field
    return F.element(mx.det(F, [[F.convert(x) for x in r] for r in m]))


def multilinear_form_eval(M: Hypermatrix, u, v, w):
    """``sum a[s][r][c] u_s v_c w_r`` for vectors of length 2, k and k+1."""
    k = M.k
    if len(u) != 2 or len(v) != k or len(w) != k + 1:
        raise DimensionMismatch("vectors must have lengths 2, k and k+1")
    F = M.field
    u = [F.convert(x) for x in u]
    v = [F.convert(x) for x in v]
    w = [F.convert(x) for x in w]
    acc = F.zero
    for s in range(2):
        if F.is_zero(u[s]):
            continue
        for r in range(k + 1):
            row = M.slices[s][r]
            inner = F.zero
            for c in range(k):
                inner = F.add(inner, F.mul(row[c], v[c]))
            acc = F.add(acc, F.mul(F.mul(u[s], w[r]), inner))
    return F.element(acc)
