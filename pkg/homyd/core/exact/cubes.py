"""Structure-constant containers for multiplications and comultiplications."""

from typing import Dict, Iterable, Mapping, Sequence, Tuple

from ..exceptions import ValidationError
from .field import Field, Scalar
from .matrix import Matrix


class MultCube:
    """Structure constants of a bilinear product on an n-dimensional space.

    ``entries[(i, j)]`` is the coefficient vector of e_i * e_j; absent pairs
    multiply to zero.
    """

    def __init__(self, dim: int, field: Field, entries: Mapping[Tuple[int, int], Sequence[object]]):
        self.dim = dim
        self.field = field
        self.entries: Dict[Tuple[int, int], Tuple[Scalar, ...]] = {}
        for (i, j), vector in entries.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValidationError(f"product index ({i}, {j}) outside dimension {dim}")
            if len(vector) != dim:
                raise ValidationError(f"product e{i}*e{j} needs {dim} coefficients")
            self.entries[(i, j)] = tuple(field(v) for v in vector)

    def matrix(self) -> Matrix:
        n = self.dim
        columns = {
            i * n + j: dict(enumerate(vector)) for (i, j), vector in self.entries.items()
        }
        return Matrix(n, n * n, self.field, columns)

    @classmethod
    def from_matrix(cls, mu: Matrix) -> "MultCube":
        n = mu.rows
        if mu.cols != n * n:
            raise ValidationError(f"a product on dimension {n} is {n}x{n * n}, got {mu.shape}")
        entries = {}
        for col in range(mu.cols):
            column = mu.column(col)
            if column:
                entries[divmod(col, n)] = [column.get(k, 0) for k in range(n)]
        return cls(n, mu.field, entries)


class ComultMap:
    """Comultiplication as a term list: ``terms[i]`` lists (j, k, c) with
    Delta(e_i) = sum c e_j (x) e_k. Repeated (j, k) pairs and zero
    coefficients are rejected."""

    def __init__(self, dim: int, field: Field, terms: Mapping[int, Iterable[Tuple[int, int, object]]]):
        self.dim = dim
        self.field = field
        self.terms: Dict[int, Tuple[Tuple[int, int, Scalar], ...]] = {}
        for i, items in terms.items():
            if not 0 <= i < dim:
                raise ValidationError(f"comultiplication index {i} outside dimension {dim}")
            seen = set()
            kept = []
            for j, k, c in items:
                if not (0 <= j < dim and 0 <= k < dim):
                    raise ValidationError(f"term ({j}, {k}) outside dimension {dim}")
                if (j, k) in seen:
                    raise ValidationError(f"Delta(e{i}) repeats the term e{j}(x)e{k}")
                c = field(c)
                if not c:
                    raise ValidationError(f"Delta(e{i}) has a zero coefficient on e{j}(x)e{k}")
                seen.add((j, k))
                kept.append((j, k, c))
            self.terms[i] = tuple(kept)

    def matrix(self) -> Matrix:
        n = self.dim
        columns = {i: {j * n + k: c for j, k, c in items} for i, items in self.terms.items()}
        return Matrix(n * n, n, self.field, columns)

    @classmethod
    def from_matrix(cls, delta: Matrix) -> "ComultMap":
        n = delta.cols
        if delta.rows != n * n:
            raise ValidationError(f"a coproduct on dimension {n} is {n * n}x{n}, got {delta.shape}")
        terms = {
            i: [(*divmod(row, n), c) for row, c in sorted(delta.column(i).items())]
            for i in range(n)
        }
        return cls(n, delta.field, terms)
