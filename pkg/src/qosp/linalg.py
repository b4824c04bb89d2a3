"""Exact matrices and sparse echelon forms over a ScalarField."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .scalars import FieldMismatchError, ScalarField


class NotScalar:
    """Marker returned when a matrix is not a multiple of the identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "not-scalar"

    def __bool__(self):
        return False


NOT_SCALAR = NotScalar()


class ExactMatrix:
    """Square matrix with entries in one field; rows are tuples of scalars."""

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field: ScalarField, rows):
        self.field = field
        rows = [tuple(field(x) for x in r) for r in rows]
        self.dim = len(rows)
        if any(len(r) != self.dim for r in rows):
            raise ValueError("matrix must be square")
        self.rows = tuple(rows)

    @classmethod
    def _raw(cls, field, rows):
        obj = object.__new__(cls)
        obj.field, obj.dim, obj.rows = field, len(rows), tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def zeros(cls, field, d):
        z = field.zero
        return cls._raw(field, [[z] * d for _ in range(d)])

    @classmethod
    def identity(cls, field, d):
        return cls.diag(field, [field.one] * d)

    @classmethod
    def diag(cls, field, values):
        values = [field(v) for v in values]
        z = field.zero
        d = len(values)
        return cls._raw(field, [[values[i] if i == j else z for j in range(d)] for i in range(d)])

    @classmethod
    def from_entries(cls, field, d, entries: Mapping[tuple[int, int], object]):
        z = field.zero
        rows = [[z] * d for _ in range(d)]
        for (i, j), v in entries.items():
            rows[i][j] = field(v)
        return cls._raw(field, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> dict[tuple[int, int], object]:
        return {(i, j): v for i, r in enumerate(self.rows) for j, v in enumerate(r) if v}

    def _check(self, other):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return ExactMatrix._raw(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix._raw(self.field, [[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return ExactMatrix._raw(self.field, [[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        self._check(other)
        d = self.dim
        z = self.field.zero
        cols = [[(k, other.rows[k][j]) for k in range(d) if other.rows[k][j]] for j in range(d)]
        out = []
        for r in self.rows:
            nz = {k: a for k, a in enumerate(r) if a}
            row = []
            for j in range(d):
                acc = z
                for k, b in cols[j]:
                    a = nz.get(k)
                    if a is not None:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix._raw(self.field, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ExactMatrix.identity(self.field, self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    __hash__ = None

    def apply(self, vec):
        return [sum((a * x for a, x in zip(r, vec)), self.field.zero) for r in self.rows]

    def column(self, j):
        return [r[j] for r in self.rows]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def scalar_value(self):
        """c if self == c * identity, else NOT_SCALAR."""
        if self.dim == 0:
            return NOT_SCALAR
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if (v != c) if i == j else bool(v):
                    return NOT_SCALAR
        return c

    def rank(self) -> int:
        span = EchelonSpan()
        for r in self.rows:
            span.add({j: v for j, v in enumerate(r) if v})
        return span.dim

    def is_invertible(self) -> bool:
        return self.rank() == self.dim

    def inverse(self) -> "ExactMatrix":
        d = self.dim
        field = self.field
        one, z = field.one, field.zero
        aug = [list(r) + [one if i == j else z for j in range(d)] for i, r in enumerate(self.rows)]
        for col in range(d):
            piv = next((i for i in range(col, d) if aug[i][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [x * inv for x in aug[col]]
            for i in range(d):
                if i != col and aug[i][col]:
                    c = aug[i][col]
                    aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
        return ExactMatrix._raw(field, [r[d:] for r in aug])

    def to_json(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.rows]

    def __repr__(self):
        return "ExactMatrix(" + "; ".join(", ".join(str(v) for v in r) for r in self.rows) + ")"


class EchelonSpan:
    """Incremental row echelon form of sparse vectors (dicts key -> scalar).

    Each stored row has coefficient 1 at its pivot, and all of its other keys
    sort after the pivot, so reducing against pivots in increasing order
    terminates.
    """

    def __init__(self):
        self.rows: dict[Hashable, dict] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        vec = {k: v for k, v in vec.items() if v}
        rows = self.rows
        while True:
            hits = [k for k in vec if k in rows]
            if not hits:
                return vec
            p = min(hits)
            c = vec[p]
            for k, v in rows[p].items():
                if k in vec:
                    nv = vec[k] - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        del vec[k]
                else:
                    vec[k] = -(c * v)

    def add(self, vec: Mapping) -> bool:
        """Insert vec; return True if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = r[p].inverse()
        self.rows[p] = {k: v * inv for k, v in r.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def nullspace(equations: Iterable[Mapping[int, object]], nvars: int, field: ScalarField) -> list[list]:
    """Basis of {x : sum_j eq[j] x_j = 0 for every equation}."""
    span = EchelonSpan()
    for eq in equations:
        span.add(eq)
    # back-substitute to reduced echelon form
    pivots = sorted(span.rows, reverse=True)
    reduced: dict[int, dict] = {}
    for p in pivots:
        row = dict(span.rows[p])
        for k in [k for k in row if k != p and k in reduced]:
            c = row.pop(k)
            for kk, v in reduced[k].items():
                if kk == k:
                    continue
                nv = row.get(kk, field.zero) - c * v
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
        reduced[p] = row
    free = [j for j in range(nvars) if j not in reduced]
    basis = []
    for j in free:
        x = [field.zero] * nvars
        x[j] = field.one
        for p, row in reduced.items():
            v = row.get(j)
            if v:
                x[p] = -v
        basis.append(x)
    return basis

