from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from homyd.core.exact import (
    GF,
    QQ,
    Matrix,
    PrimeField,
    Residue,
    compose,
    field_from_name,
    flatten,
    flip,
    invert,
    kron,
    maps_equal,
    permutation,
    unflatten,
)
from homyd.core.exceptions import FieldError, SingularMatrixError, ValidationError

F7 = GF(7)


def small_matrices(rows, cols):
    return st.lists(
        st.integers(min_value=0, max_value=6), min_size=rows * cols, max_size=rows * cols
    ).map(lambda values: Matrix.from_rows([values[i * cols : (i + 1) * cols] for i in range(rows)], F7))


def test_rational_parsing():
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert QQ.parse("-2/5") == Fraction(-2, 5)
    assert QQ("+4") == 4
    with pytest.raises(FieldError):
        QQ.parse("1.5")
    with pytest.raises(FieldError):
        QQ.parse("1/0")


def test_prime_field_arithmetic():
    assert F7("-1") == 6
    assert F7(3) * F7(3).inverse() == 1
    assert F7(Fraction(1, 2)) == 4
    assert F7(2) ** -1 == 4
    assert not F7(7)
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()
    with pytest.raises(FieldError):
        F7(Fraction(1, 7))


def test_prime_fields_do_not_mix():
    with pytest.raises(FieldError):
        Residue(1, 5) + Residue(1, 7)
    with pytest.raises(FieldError):
        QQ(F7(3))


def test_non_prime_modulus_is_refused():
    with pytest.raises(FieldError):
        PrimeField(4)
    with pytest.raises(FieldError):
        GF(1)


@pytest.mark.parametrize("name", ["GF(7)", "GF 7", "gf7", "7"])
def test_field_names(name):
    assert field_from_name(name) == F7


def test_rational_field_names():
    assert field_from_name("Q") is QQ
    assert field_from_name("QQ") is QQ
    with pytest.raises(FieldError):
        field_from_name("R")


def test_format_is_reduced():
    assert QQ.format(QQ.parse("4/2")) == "2"
    assert QQ.format(Fraction(-6, 4)) == "-3/2"
    assert F7.format(-1) == "6"


def test_matrix_drops_zero_entries():
    m = Matrix(2, 2, QQ, {0: {0: 0}, 1: {1: 0}})
    assert m.is_zero()
    assert m == Matrix.zeros(2, 2, QQ)


def test_matrix_shape_is_checked():
    with pytest.raises(ValidationError):
        Matrix(2, 2, QQ, {2: {0: 1}})
    with pytest.raises(ValidationError):
        Matrix.from_rows([[1, 2], [3]], QQ)
    a = Matrix.identity(2, QQ)
    with pytest.raises(ValidationError):
        a @ Matrix.identity(3, QQ)


def test_matrix_fields_must_agree():
    with pytest.raises(ValidationError):
        Matrix.identity(2, QQ) @ Matrix.identity(2, F7)


def test_inverse_over_the_rationals():
    m = Matrix.from_rows([[1, 2], [3, 4]], QQ)
    inverse = invert(m)
    assert inverse == Matrix.from_rows([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]], QQ)
    assert (m @ inverse).is_identity()
    assert m.power(-1) == inverse


def test_singular_matrix():
    with pytest.raises(SingularMatrixError):
        invert(Matrix.from_rows([[1, 2], [2, 4]], QQ))
    with pytest.raises(SingularMatrixError):
        invert(Matrix.from_rows([[1, 3], [2, 6]], F7))


def test_power_and_transpose():
    m = Matrix.from_rows([[1, 1], [0, 1]], QQ)
    assert m.power(3) == Matrix.from_rows([[1, 3], [0, 1]], QQ)
    assert m.power(0).is_identity()
    assert m.transpose() == Matrix.from_rows([[1, 0], [1, 1]], QQ)


def test_entries_are_row_major():
    m = Matrix.from_rows([[1, 2, 0], [0, 0, 5]], QQ)
    assert m.entries == [1, 2, 0, 0, 0, 5]
    assert m[1, 2] == 5
    assert list(m.nonzero()) == [(0, 0, 1), (0, 1, 2), (1, 2, 5)]


def test_flattening_is_lexicographic():
    assert flatten((1, 0, 2), (2, 2, 3)) == 8
    assert unflatten(8, (2, 2, 3)) == (1, 0, 2)
    with pytest.raises(ValidationError):
        flatten((2,), (2,))


def test_kron_of_identities():
    assert kron(Matrix.identity(2, QQ), Matrix.identity(3, QQ)).is_identity()


def test_permutation_moves_factors():
    # e_1 (x) e_0 (x) e_2 in dims (2, 2, 3) sent to order (2, 0, 1)
    p = permutation((2, 2, 3), (2, 0, 1), QQ)
    source = flatten((1, 0, 2), (2, 2, 3))
    target = flatten((2, 1, 0), (3, 2, 2))
    assert p.column(source) == {target: 1}


def test_compose_order():
    f = Matrix.from_rows([[0, 1], [1, 0]], QQ)
    g = Matrix.from_rows([[2, 0], [0, 3]], QQ)
    assert compose(f, g) == f @ g
    assert compose(f, g, f) == f @ (g @ f)


def test_maps_equal_reports_first_difference():
    f = Matrix.from_rows([[1, 0], [0, 1]], QQ)
    g = Matrix.from_rows([[1, 2], [3, 1]], QQ)
    by_row = maps_equal(f, g)
    assert (by_row.row, by_row.col) == (0, 1)
    by_column = maps_equal(f, g, order="column")
    assert (by_column.row, by_column.col) == (1, 0)
    assert (by_column.left, by_column.right) == (0, 3)
    assert maps_equal(f, f)


@given(small_matrices(2, 3), small_matrices(2, 2))
def test_flip_is_natural(f, g):
    """flip o (f (x) g) = (g (x) f) o flip"""
    assert flip(2, 2, F7) @ kron(f, g) == kron(g, f) @ flip(3, 2, F7)


@given(small_matrices(2, 2), small_matrices(2, 2), small_matrices(2, 2), small_matrices(2, 2))
def test_kron_is_functorial(a, b, c, d):
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@given(small_matrices(3, 3))
def test_inverse_when_it_exists(m):
    try:
        inverse = invert(m)
    except SingularMatrixError:
        return
    assert (m @ inverse).is_identity()
    assert (inverse @ m).is_identity()


def test_columns_and_rows_agree():
    m = Matrix.from_columns([[1, 0], [2, 0], [0, 5]], QQ)
    assert m == Matrix.from_rows([[1, 2, 0], [0, 0, 5]], QQ)
    assert m.column(1) == {0: 2}
    with pytest.raises(ValidationError):
        Matrix.from_columns([[1, 0], [1]], QQ)
