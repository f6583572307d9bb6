from fractions import Fraction

import pytest

from homyd.core import catalog
from homyd.core.actions import regular_coaction
from homyd.core.exact import GF, QQ, Matrix
from homyd.core.exceptions import ConstructionError, FieldError, ValidationError
from homyd.core.quasitriangular import (
    CobraidingForm,
    RMatrix,
    check_cobraided_equivalence,
    check_quasitriangular,
    check_quasitriangular_equivalence,
    decompile_coaction,
    induced_coaction,
    yd_side,
)


def test_kz2_r_matrix(kz2):
    R = catalog.kz2_r_matrix(QQ)
    assert R.coefficient("a", "a") == Fraction(-1, 2)
    assert check_quasitriangular(kz2, R).passed
    assert R.flip() == R


def test_r_matrix_over_gf7():
    R = catalog.kz2_r_matrix(GF(7))
    assert R.coefficient("1", "a") == 4
    assert check_quasitriangular(R.H, R).passed


def test_gf2_has_no_half():
    with pytest.raises(FieldError):
        catalog.kz2_r_matrix(GF(2))


def test_induced_coaction_round_trip(kz2):
    R = catalog.kz2_r_matrix(QQ)
    coact = induced_coaction(kz2, R)
    assert decompile_coaction(kz2, coact) == R
    assert yd_side(kz2, coact).passed
    report = check_quasitriangular_equivalence(kz2, coact)
    assert report["induced shape"].passed
    assert report["QHA side"].passed
    assert report["HYD side"].passed


def test_one_sided_r_fails_on_both_sides(kz2):
    # R = 1 (x) a
    report = check_quasitriangular_equivalence(kz2, RMatrix(kz2, [0, 1, 0, 0]))
    assert not report.qt["QHA1 left counit"].passed
    assert report.qt["QHA1 right counit"].passed
    assert not report.yd["HCMC2 counit"].passed
    assert report["equivalence"].passed


def test_mirrored_r_fails_the_right_counit(kz2):
    # R = a (x) 1
    report = check_quasitriangular_equivalence(kz2, RMatrix(kz2, [0, 0, 1, 0]))
    assert not report.qt["QHA1 right counit"].passed
    assert not report.yd["HCM2 counit"].passed
    assert not report["HYD side"].passed
    assert report["equivalence"].passed


def test_regular_coaction_is_not_induced(kz2):
    report = check_quasitriangular_equivalence(kz2, regular_coaction(kz2))
    assert report.names() == ["induced shape"]
    assert not report.passed


def test_checked_induction_refuses(kz2):
    with pytest.raises(ConstructionError) as info:
        induced_coaction(kz2, RMatrix(kz2, [0, 1, 0, 0]))
    assert not info.value.report.passed


def test_r_matrix_shapes(kz2):
    with pytest.raises(ValidationError):
        RMatrix(kz2, [1, 0, 0])
    with pytest.raises(ValidationError):
        RMatrix(kz2, Matrix.zeros(2, 2, QQ))
    with pytest.raises(ValidationError):
        CobraidingForm(kz2, [[1, 1, 1]])


def test_kz2_form(kz2):
    sigma = catalog.kz2_form(QQ)
    assert sigma.value("a", "a") == -1
    assert check_cobraided_equivalence(kz2, sigma).passed


def test_counit_form_gives_the_trivial_action(kz2):
    assert check_cobraided_equivalence(kz2, CobraidingForm(kz2, [[1, 1], [1, 1]])).passed


def test_degenerate_form_breaks_associativity(kz2):
    report = check_cobraided_equivalence(kz2, CobraidingForm(kz2, [[1, 1], [1, 0]]))
    result = report["HM2 associativity"]
    assert not result.passed
    assert result.witness.labels == ("a", "a", "a")
