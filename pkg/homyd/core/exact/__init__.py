from .cubes import ComultMap, MultCube
from .field import (
    GF,
    QQ,
    Field,
    PrimeField,
    RationalField,
    Residue,
    Scalar,
    field_from_name,
    format_scalar,
    parse_scalar,
)
from .matrix import Comparison, Matrix, compose, invert, kron, maps_equal
from .tensor import (
    basis_tuples,
    flatten,
    flip,
    identity,
    permutation,
    tensor_dimension,
    unflatten,
)

__all__ = [
    "ComultMap",
    "MultCube",
    "GF",
    "QQ",
    "Field",
    "PrimeField",
    "RationalField",
    "Residue",
    "Scalar",
    "field_from_name",
    "format_scalar",
    "parse_scalar",
    "Comparison",
    "Matrix",
    "compose",
    "invert",
    "kron",
    "maps_equal",
    "basis_tuples",
    "flatten",
    "flip",
    "identity",
    "permutation",
    "tensor_dimension",
    "unflatten",
]
