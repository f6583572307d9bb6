"""
Immutable exact matrices over ``QQ`` or ``GF(p)``.

Every linear map V -> W is a (dim W x dim V) matrix whose columns are the
images of the basis vectors of V. Storage is sparse: only nonzero entries
are kept, grouped by column, which keeps the large permutation and tensor
matrices produced by the axiom checkers cheap to compose.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from ..exceptions import SingularMatrixError, ValidationError
from .field import Field, Scalar

Column = Dict[int, Scalar]


class Matrix:
    """A rows x cols matrix over ``field``; nonzero entries only."""

    __slots__ = ("rows", "cols", "field", "_columns", "_hash")

    def __init__(
        self,
        rows: int,
        cols: int,
        field: Field,
        columns: Optional[Mapping[int, Mapping[int, object]]] = None,
    ):
        if rows < 0 or cols < 0:
            raise ValidationError(f"negative shape {rows}x{cols}")
        store = {}
        for j, column in (columns or {}).items():
            if not 0 <= j < cols:
                raise ValidationError(f"column {j} outside a {rows}x{cols} matrix")
            kept = {}
            for i, value in column.items():
                if not 0 <= i < rows:
                    raise ValidationError(f"row {i} outside a {rows}x{cols} matrix")
                value = field(value)
                if value:
                    kept[i] = value
            if kept:
                store[j] = kept
        self._init(rows, cols, field, store)

    def _init(self, rows, cols, field, store):
        self.rows = rows
        self.cols = cols
        self.field = field
        self._columns = store
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, field: Field, store: Dict[int, Column]):
        """Build from already-normalized column storage (no zeros, coerced)."""
        obj = cls.__new__(cls)
        obj._init(rows, cols, field, store)
        return obj

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        return cls._raw(rows, cols, field, {})

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        one = field.one
        return cls._raw(n, n, field, {i: {i: one} for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], field: Field) -> "Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        columns: Dict[int, Dict[int, object]] = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValidationError("ragged rows")
            for j, value in enumerate(row):
                columns.setdefault(j, {})[i] = value
        return cls(nrows, ncols, field, columns)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[object]], field: Field, rows: int = None
    ) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        store = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValidationError("ragged columns")
            store[j] = dict(enumerate(column))
        return cls(rows, len(columns), field, store)

    @classmethod
    def from_entries(
        cls, rows: int, cols: int, field: Field, entries: Mapping[tuple, object]
    ) -> "Matrix":
        """Build from a ``{(row, col): value}`` mapping; missing entries are zero."""
        columns: Dict[int, Dict[int, object]] = {}
        for (i, j), value in entries.items():
            columns.setdefault(j, {})[i] = value
        return cls(rows, cols, field, columns)

    @classmethod
    def column_vector(cls, values: Sequence[object], field: Field) -> "Matrix":
        return cls(len(values), 1, field, {0: dict(enumerate(values))})

    @classmethod
    def row_vector(cls, values: Sequence[object], field: Field) -> "Matrix":
        return cls(1, len(values), field, {j: {0: v} for j, v in enumerate(values)})

    @classmethod
    def scalar(cls, value: object, field: Field) -> "Matrix":
        return cls(1, 1, field, {0: {0: value}})

    # access

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index) -> Scalar:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self._columns.get(j, {}).get(i, self.field.zero)

    def column(self, j: int) -> Column:
        """Nonzero entries of column ``j`` as ``{row: value}``."""
        return dict(self._columns.get(j, {}))

    def nonzero(self) -> Iterable[tuple]:
        """Yield ``(row, col, value)`` for every nonzero entry, column by column."""
        for j in sorted(self._columns):
            column = self._columns[j]
            for i in sorted(column):
                yield i, j, column[i]

    @property
    def entries(self) -> List[Scalar]:
        """Row-major dense listing."""
        zero = self.field.zero
        out = [zero] * (self.rows * self.cols)
        for i, j, value in self.nonzero():
            out[i * self.cols + j] = value
        return out

    def to_rows(self) -> List[List[Scalar]]:
        flat = self.entries
        return [flat[i * self.cols : (i + 1) * self.cols] for i in range(self.rows)]

    # arithmetic

    def _same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise ValidationError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.cols != other.rows:
            raise ValidationError(
                f"cannot compose {self.rows}x{self.cols} after {other.rows}x{other.cols}"
            )
        left = self._columns
        store = {}
        for j, column in other._columns.items():
            acc: Column = {}
            for k, b in column.items():
                source = left.get(k)
                if not source:
                    continue
                for i, a in source.items():
                    if i in acc:
                        acc[i] = acc[i] + a * b
                    else:
                        acc[i] = a * b
            acc = {i: v for i, v in acc.items() if v}
            if acc:
                store[j] = acc
        return Matrix._raw(self.rows, other.cols, self.field, store)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ValidationError(f"shape mismatch: {self.shape} vs {other.shape}")
        store = {j: dict(c) for j, c in self._columns.items()}
        for j, column in other._columns.items():
            target = store.setdefault(j, {})
            for i, v in column.items():
                value = target.get(i, self.field.zero) + (v if sign > 0 else -v)
                if value:
                    target[i] = value
                else:
                    target.pop(i, None)
            if not target:
                del store[j]
        return Matrix._raw(self.rows, self.cols, self.field, store)

    def __add__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, 1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self._combine(other, -1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, factor: object) -> "Matrix":
        c = self.field(factor)
        if not c:
            return Matrix.zeros(self.rows, self.cols, self.field)
        store = {j: {i: v * c for i, v in col.items()} for j, col in self._columns.items()}
        return Matrix._raw(self.rows, self.cols, self.field, store)

    def transpose(self) -> "Matrix":
        store: Dict[int, Column] = {}
        for i, j, value in self.nonzero():
            store.setdefault(i, {})[j] = value
        return Matrix._raw(self.cols, self.rows, self.field, store)

    def power(self, exponent: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValidationError("only square matrices have powers")
        if exponent < 0:
            return invert(self).power(-exponent)
        result = Matrix.identity(self.rows, self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return not self._columns

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.field == other.field
            and self._columns == other._columns
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.field, tuple(self.nonzero())))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field}, {self.to_rows()})"


def kron(*factors: Matrix) -> Matrix:
    """Kronecker product; ``kron(f, g)`` is the map f (x) g."""
    if not factors:
        raise ValidationError("kron needs at least one factor")
    result = factors[0]
    for right in factors[1:]:
        result._same_field(right)
        store = {}
        for ja, ca in result._columns.items():
            for jb, cb in right._columns.items():
                store[ja * right.cols + jb] = {
                    ia * right.rows + ib: a * b
                    for ia, a in ca.items()
                    for ib, b in cb.items()
                }
        result = Matrix._raw(
            result.rows * right.rows, result.cols * right.cols, result.field, store
        )
    return result


def compose(*maps: Matrix) -> Matrix:
    """``compose(f, g, h)`` is f o g o h."""
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = m @ result
    return result


def invert(matrix: Matrix) -> Matrix:
    """Gauss-Jordan inverse over the matrix's field.

    Raises ``ValidationError`` for a non-square input and
    ``SingularMatrixError`` when no inverse exists.
    """
    if matrix.rows != matrix.cols:
        raise ValidationError(f"matrix is not square (shape = {matrix.shape})")
    n = matrix.rows
    field = matrix.field
    zero, one = field.zero, field.one

    # [X I] row by row
    work = [row + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix.to_rows())]

    for i in range(n):
        pivot = next((r for r in range(i, n) if work[r][i]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        if pivot != i:
            work[i], work[pivot] = work[pivot], work[i]
        scale = one / work[i][i]
        work[i] = [v * scale for v in work[i]]
        for r in range(n):
            if r != i and work[r][i]:
                factor = work[r][i]
                work[r] = [a - factor * b for a, b in zip(work[r], work[i])]

    return Matrix.from_rows([row[n:] for row in work], field) if n else Matrix.zeros(0, 0, field)


@dataclass(frozen=True)
class Comparison:
    """Outcome of comparing two maps entry by entry.

    On mismatch ``row``/``col`` locate the first differing entry in the
    requested scan order and ``left``/``right`` hold the two values.
    """

    equal: bool
    row: Optional[int] = None
    col: Optional[int] = None
    left: Optional[Scalar] = None
    right: Optional[Scalar] = None

    def __bool__(self):
        return self.equal


def maps_equal(f: Matrix, g: Matrix, order: str = "row") -> Comparison:
    """Compare two maps; ``order`` is ``"row"`` (row-major) or ``"column"``."""
    if f.shape != g.shape:
        raise ValidationError(f"cannot compare {f.shape} with {g.shape}")
    f._same_field(g)
    if order not in ("row", "column"):
        raise ValidationError(f"unknown scan order {order!r}")
    differing = []
    zero = f.field.zero
    for j in set(f._columns) | set(g._columns):
        a = f._columns.get(j, {})
        b = g._columns.get(j, {})
        if a == b:
            continue
        for i in set(a) | set(b):
            if a.get(i, zero) != b.get(i, zero):
                differing.append((i, j))
    if not differing:
        return Comparison(True)
    if order == "row":
        i, j = min(differing)
    else:
        j, i = min((j, i) for i, j in differing)
    return Comparison(False, i, j, f[i, j], g[i, j])
