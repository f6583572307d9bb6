import pytest

from homyd.core import catalog
from homyd.core.actions import CoactionMap, regular_action, regular_coaction, trivial_action, trivial_coaction
from homyd.core.constructions import (
    RadfordBundle,
    TwistMap,
    biproduct_antipode,
    check_t_conditions,
    check_trivial_action_gate,
    check_trivial_coaction_gate,
    coaction_twist_map,
    smash_coproduct,
    smash_product,
    smash_product_antipode,
    t_smash_coproduct,
    tensor_bialgebra,
)
from homyd.core.exact import QQ, Matrix, flip
from homyd.core.exceptions import ConstructionError, ValidationError
from homyd.core.structures import (
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    tensor_hom_algebra,
    tensor_hom_coalgebra,
)


def test_smash_product_of_taft_over_kz2(taft_bundle):
    product = smash_product(taft_bundle.A, taft_bundle.H, taft_bundle.act)
    assert product.dim == 8
    assert product.name == "Ha#KZ2"
    assert check_hom_algebra(product).passed
    assert product.product("x⊗1", "1⊗a") == {"x⊗a": 2}


def test_smash_product_refuses_non_module_algebra(kz2):
    with pytest.raises(ConstructionError) as info:
        smash_product(kz2, kz2, regular_action(kz2))
    assert not info.value.report["HMA1 multiplicativity"].passed


def test_smash_coproduct_of_taft_over_kz2(taft_bundle):
    coproduct = smash_coproduct(taft_bundle.A, taft_bundle.H, taft_bundle.coact)
    assert coproduct.dim == 8
    assert check_hom_coalgebra(coproduct).passed
    assert coproduct.provenance.passed


def test_trivial_partners_with_unequal_dimensions(kz2):
    H = catalog.cyclic_group_algebra(3, QQ)
    product = smash_product(kz2, H, trivial_action(H, kz2))
    assert product.mu == tensor_hom_algebra(kz2.algebra, H.algebra).mu
    assert product.product("a⊗a", "a⊗a") == {"1⊗a2": 1}
    coproduct = smash_coproduct(kz2, H, trivial_coaction(H, kz2))
    assert coproduct.delta == tensor_hom_coalgebra(kz2.coalgebra, H.coalgebra).delta


def test_taft_biproduct_is_a_hom_bialgebra(taft_bundle):
    B = taft_bundle.assemble()
    report = check_hom_bialgebra(B)
    assert report["HA1 multiplicative"].passed
    assert report.passed
    assert B.product("1⊗1", "g⊗1") == {"g⊗1": 1}


def test_trivial_coaction_gives_the_flip(kz2):
    T = coaction_twist_map(kz2, kz2, trivial_coaction(kz2, kz2))
    assert T.matrix == flip(2, 2, QQ)
    assert check_t_conditions(kz2.coalgebra, kz2, T).passed
    result = t_smash_coproduct(kz2, kz2, T)
    assert result.delta == tensor_hom_coalgebra(kz2.coalgebra, kz2.coalgebra).delta


def test_scaled_flip_is_refused(kz2):
    T = TwistMap(kz2.coalgebra, kz2, flip(2, 2, QQ).scale(2))
    with pytest.raises(ConstructionError) as info:
        t_smash_coproduct(kz2, kz2, T)
    report = info.value.report
    assert report["T twist compatibility"].passed
    assert not report["C2"].passed
    assert report["C2"].witness.labels == ("1", "1")


def test_twist_map_shape(kz2):
    with pytest.raises(ValidationError):
        TwistMap(kz2.coalgebra, kz2, Matrix.identity(3, QQ))


def test_taft_radford_conditions(taft_bundle):
    assert taft_bundle.preconditions().passed
    assert taft_bundle.conditions().passed
    B = taft_bundle.assemble()
    assert B.dim == 8
    assert check_hom_bialgebra(B).passed


def test_sign_corrected_action_is_refused():
    bundle = catalog.taft_radford_bundle(QQ, 2, sign=-1)
    assert bundle.preconditions().passed
    with pytest.raises(ConstructionError) as info:
        bundle.assemble()
    report = info.value.report
    assert not report["R4"].passed
    assert [r.name for r in report.failures] == ["R4"]


def test_dual_numbers_bundle(dual_bundle):
    assert dual_bundle.preconditions().passed
    conditions = dual_bundle.conditions()
    assert conditions.passed
    assert "R1 HCMA1 multiplicativity" in conditions
    assert "R2 HMC1 comultiplicativity" in conditions


def test_dual_numbers_need_the_coaction_through_a(dual_bundle):
    # rho(z) = l 1 (x) z
    coact = CoactionMap(dual_bundle.H, Matrix.from_entries(4, 2, QQ, {(0, 0): 1, (1, 1): 2}), carrier=dual_bundle.A)
    bundle = RadfordBundle(dual_bundle.A, dual_bundle.H, dual_bundle.act, coact)
    conditions = bundle.conditions()
    assert conditions["R5"].passed
    assert not conditions["R4"].passed
    assert conditions["R4"].witness.labels == ("z", "z")


def test_tensor_bialgebra(kz2):
    B = tensor_bialgebra(kz2, kz2)
    assert B.basis == ("1⊗1", "1⊗a", "a⊗1", "a⊗a")
    assert check_hom_bialgebra(B).passed
    assert B.product("a⊗1", "1⊗a") == {"a⊗a": 1}


@pytest.mark.parametrize("build", [lambda: catalog.kz2(QQ), lambda: catalog.taft_twisted(QQ, 3)])
def test_smash_product_antipode_matches_the_general_formula(build):
    A = build()
    H = catalog.kz2(QQ)
    act, coact = trivial_action(H, A), trivial_coaction(H, A)
    general = biproduct_antipode(A, H, act, coact, A.antipode, H.antipode)
    assert smash_product_antipode(A, H, act, A.antipode, H.antipode) == general


def test_antipodes_are_checked(kz2):
    act, coact = trivial_action(kz2, kz2), trivial_coaction(kz2, kz2)
    with pytest.raises(ConstructionError):
        biproduct_antipode(kz2, kz2, act, coact, Matrix.zeros(2, 2, QQ), kz2.antipode)


def test_bundle_without_antipodes(dual_bundle):
    bare = RadfordBundle(dual_bundle.A, dual_bundle.H, dual_bundle.act, dual_bundle.coact)
    with pytest.raises(ValidationError):
        bare.antipode()


def test_one_sided_gates(dual_bundle, taft_bundle):
    report = check_trivial_coaction_gate(dual_bundle.A, dual_bundle.H, dual_bundle.act)
    assert report["cocommutative action"].passed
    assert report["agrees with R5 under the trivial coaction"].passed
    report = check_trivial_action_gate(taft_bundle.A, taft_bundle.H, taft_bundle.coact)
    assert report.passed


def test_commuting_coaction_fails_over_taft():
    H = catalog.taft_twisted(QQ, 2)
    report = check_trivial_action_gate(H, H, regular_coaction(H))
    result = report["commuting coaction"]
    assert not result.passed
    assert result.witness.labels == ("g", "x")
    assert report["agrees with R5 under the trivial action"].passed
