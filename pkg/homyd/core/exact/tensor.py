"""
Tensor-index bookkeeping: flattening of basis tuples and the permutation
matrices that reorder tensor factors.

The basis of V_0 (x) ... (x) V_{k-1} is ordered lexicographically, so the
tuple (i_0, ..., i_{k-1}) sits at i_0 * (d_1 ... d_{k-1}) + ... + i_{k-1}.
"""

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence, Tuple

from ..exceptions import ValidationError
from .field import Field
from .matrix import Matrix


def flatten(indices: Sequence[int], dims: Sequence[int]) -> int:
    if len(indices) != len(dims):
        raise ValidationError(f"{len(indices)} indices for {len(dims)} factors")
    flat = 0
    for i, d in zip(indices, dims):
        if not 0 <= i < d:
            raise ValidationError(f"index {i} outside a factor of dimension {d}")
        flat = flat * d + i
    return flat


def unflatten(index: int, dims: Sequence[int]) -> Tuple[int, ...]:
    out = []
    for d in reversed(dims):
        index, i = divmod(index, d)
        out.append(i)
    if index:
        raise ValidationError("flat index outside the tensor product")
    return tuple(reversed(out))


def basis_tuples(dims: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All basis tuples in flattening order."""
    return product(*(range(d) for d in dims))


def tensor_dimension(dims: Sequence[int]) -> int:
    total = 1
    for d in dims:
        total *= d
    return total


@lru_cache(maxsize=512)
def permutation(dims: Tuple[int, ...], order: Tuple[int, ...], field: Field) -> Matrix:
    """The map V_0 (x) ... -> V_{order[0]} (x) V_{order[1]} (x) ...

    Factor ``order[k]`` of the source lands in position ``k`` of the target.
    """
    dims, order = tuple(dims), tuple(order)
    if sorted(order) != list(range(len(dims))):
        raise ValidationError(f"{order} is not a permutation of {len(dims)} factors")
    target_dims = [dims[o] for o in order]
    one = field.one
    store = {}
    for j, source in enumerate(basis_tuples(dims)):
        store[j] = {flatten([source[o] for o in order], target_dims): one}
    size = tensor_dimension(dims)
    return Matrix._raw(size, size, field, store)


def flip(p: int, q: int, field: Field) -> Matrix:
    """The swap V (x) W -> W (x) V for dim V = p, dim W = q."""
    return permutation((p, q), (1, 0), field)


def identity(n: int, field: Field) -> Matrix:
    return Matrix.identity(n, field)
