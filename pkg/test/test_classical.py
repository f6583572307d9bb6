"""The element-wise classical checkers against the matrix checkers at trivial twist."""

import hypothesis.strategies as st
import pytest
from hypothesis import given

from homyd.core import catalog
from homyd.core.actions import (
    ActionMap,
    CoactionMap,
    check_action_axioms,
    check_coaction_axioms,
    regular_action,
    regular_coaction,
)
from homyd.core.classical import (
    is_algebra,
    is_bialgebra,
    is_coalgebra,
    is_comodule,
    is_comodule_algebra,
    is_comodule_coalgebra,
    is_hopf,
    is_module,
    is_module_algebra,
    is_module_coalgebra,
    is_quasitriangular,
    is_radford_pair,
    is_yetter_drinfeld,
)
from homyd.core.constructions import check_radford_conditions
from homyd.core.exact import GF, QQ, Matrix
from homyd.core.exceptions import ValidationError
from homyd.core.quasitriangular import RMatrix, check_quasitriangular
from homyd.core.structures import HomAlgebra, HomCoalgebra, check_hom_algebra, check_hom_coalgebra, check_hom_hopf

F3 = GF(3)


@pytest.mark.parametrize(
    "build",
    [
        lambda: catalog.kz2(QQ),
        lambda: catalog.cyclic_group_algebra(3, QQ),
        lambda: catalog.klein_group_algebra(GF(5)),
        lambda: catalog.taft(QQ),
        lambda: catalog.taft_twisted(QQ, 1),
        lambda: catalog.taft_biproduct(QQ, 1),
        lambda: catalog.dual_numbers_biproduct(QQ, 1),
    ],
)
def test_hopf_algebras_at_trivial_twist(build):
    H = build()
    assert is_hopf(H)
    assert check_hom_hopf(H).passed


def test_dual_numbers_at_l_one():
    A = catalog.dual_numbers(QQ, 1)
    assert is_algebra(A)
    assert is_coalgebra(A)
    assert not is_bialgebra(A)


def test_taft_radford_partners_at_k_one():
    bundle = catalog.taft_radford_bundle(QQ, 1)
    assert is_module_algebra(bundle.act)
    assert is_comodule(bundle.coact)
    assert is_yetter_drinfeld(bundle.act, bundle.coact)


def test_regular_representations(kz2):
    assert is_module(regular_action(kz2))
    assert not is_module_algebra(regular_action(kz2))
    assert is_comodule(regular_coaction(kz2))
    assert not is_yetter_drinfeld(regular_action(kz2), regular_coaction(kz2))


def test_twists_are_refused():
    with pytest.raises(ValidationError):
        is_algebra(catalog.taft_twisted(QQ, 2))
    with pytest.raises(ValidationError):
        is_module(catalog.taft_radford_bundle(QQ, 2).act)


residues = st.integers(min_value=0, max_value=2)


@given(st.lists(residues, min_size=8, max_size=8), st.lists(residues, min_size=2, max_size=2))
def test_random_algebras_agree(values, unit):
    mult = Matrix.from_rows([values[:4], values[4:]], F3)
    A = HomAlgebra.unchecked(("1", "e"), mult, unit, field=F3)
    assert is_algebra(A) == check_hom_algebra(A).passed


@given(st.lists(residues, min_size=8, max_size=8), st.lists(residues, min_size=2, max_size=2))
def test_random_coalgebras_agree(values, counit):
    comult = Matrix.from_rows([values[2 * i : 2 * i + 2] for i in range(4)], F3)
    C = HomCoalgebra.unchecked(("1", "e"), comult, counit, field=F3)
    assert is_coalgebra(C) == check_hom_coalgebra(C).passed


def test_coalgebra_views(kz2):
    assert is_coalgebra(kz2.coalgebra)
    assert is_algebra(kz2.algebra)
    with pytest.raises(ValidationError):
        is_algebra(kz2.coalgebra)
    with pytest.raises(ValidationError):
        is_coalgebra(kz2.algebra)


@pytest.mark.parametrize(
    "build",
    [lambda: catalog.taft_radford_bundle(QQ, 1), lambda: catalog.dual_numbers_radford_bundle(QQ, 1)],
)
def test_radford_bundles_at_trivial_twist(build):
    bundle = build()
    assert is_module_coalgebra(bundle.act)
    assert is_comodule_algebra(bundle.coact)
    assert is_comodule_coalgebra(bundle.coact)
    assert is_radford_pair(bundle.A, bundle.act, bundle.coact)
    assert check_radford_conditions(bundle.A, bundle.H, bundle.act, bundle.coact).passed


def test_sign_corrected_pair_is_not_radford():
    bundle = catalog.taft_radford_bundle(QQ, 1, sign=-1)
    assert is_yetter_drinfeld(bundle.act, bundle.coact)
    assert not is_radford_pair(bundle.A, bundle.act, bundle.coact)


def test_r_matrices(kz2):
    assert is_quasitriangular(kz2, catalog.kz2_r_matrix(QQ))
    assert is_quasitriangular(kz2, RMatrix(kz2, [1, 0, 0, 0]))
    assert not is_quasitriangular(kz2, RMatrix(kz2, [0, 1, 0, 0]))


# KZ2 and KZ3 over GF(3), acting on KZ2
ACTING = st.sampled_from([2, 3])


def _pair(dim):
    H = catalog.cyclic_group_algebra(dim, F3)
    return H, catalog.kz2(F3)


@given(ACTING, st.data())
def test_random_actions_agree(dim, data):
    H, A = _pair(dim)
    values = data.draw(st.lists(residues, min_size=4 * dim, max_size=4 * dim))
    act = ActionMap(H, Matrix.from_rows([values[: 2 * dim], values[2 * dim :]], F3), carrier=A)
    assert is_module_algebra(act) == check_action_axioms(act, "module-algebra").passed
    assert is_module_coalgebra(act) == check_action_axioms(act, "module-coalgebra").passed


@given(ACTING, st.data())
def test_random_coactions_agree(dim, data):
    H, A = _pair(dim)
    values = data.draw(st.lists(residues, min_size=4 * dim, max_size=4 * dim))
    coact = CoactionMap(H, Matrix.from_rows([values[2 * i : 2 * i + 2] for i in range(2 * dim)], F3), carrier=A)
    assert is_comodule_algebra(coact) == check_coaction_axioms(coact, "comodule-algebra").passed
    assert is_comodule_coalgebra(coact) == check_coaction_axioms(coact, "comodule-coalgebra").passed


@given(ACTING, st.data())
def test_random_radford_pairs_agree(dim, data):
    H, A = _pair(dim)
    acting = data.draw(st.lists(residues, min_size=4 * dim, max_size=4 * dim))
    coacting = data.draw(st.lists(residues, min_size=4 * dim, max_size=4 * dim))
    act = ActionMap(H, Matrix.from_rows([acting[: 2 * dim], acting[2 * dim :]], F3), carrier=A)
    coact = CoactionMap(H, Matrix.from_rows([coacting[2 * i : 2 * i + 2] for i in range(2 * dim)], F3), carrier=A)
    assert is_radford_pair(A, act, coact) == check_radford_conditions(A, H, act, coact).passed


@given(st.lists(residues, min_size=4, max_size=4))
def test_random_r_matrices_agree(values):
    H = catalog.kz2(F3)
    R = RMatrix(H, values)
    assert is_quasitriangular(H, R) == check_quasitriangular(H, R).passed
