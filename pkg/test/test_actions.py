import pytest

from homyd.core import catalog
from homyd.core.actions import (
    ActionMap,
    CoactionMap,
    YDModule,
    check_action_axioms,
    check_coaction_axioms,
    check_hyd,
    check_hyd_prime,
    check_yd_twist_compatibility,
    regular_action,
    regular_coaction,
    trivial_action,
    trivial_coaction,
    unit_module,
)
from homyd.core.exact import GF, QQ, Matrix
from homyd.core.exceptions import ValidationError


def test_regular_representations(kz2):
    assert check_action_axioms(regular_action(kz2)).passed
    assert check_coaction_axioms(regular_coaction(kz2)).passed
    # h(ab) != (h1 a)(h2 b) for h = a
    assert not check_action_axioms(regular_action(kz2), "module-algebra").passed


def test_regular_pair_is_not_yetter_drinfeld(kz2):
    M = YDModule(regular_action(kz2), regular_coaction(kz2))
    hyd = check_hyd(M)["HYD"]
    assert not hyd.passed
    assert hyd.witness.labels == ("a", "1")
    prime = check_hyd_prime(M)
    assert not prime["HYD′"].passed
    assert prime["HYD ⇔ HYD′"].passed


@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_unit_module(field):
    K = unit_module(catalog.kz2(field))
    assert check_hyd(K).passed
    assert check_hyd_prime(K).passed
    assert check_yd_twist_compatibility(K).passed


def test_trivial_pair_over_taft():
    H = catalog.taft_twisted(QQ, 2)
    A = catalog.kz2(QQ)
    M = YDModule(trivial_action(H, A), trivial_coaction(H, A))
    assert check_hyd(M).passed


def test_taft_radford_partners(taft_bundle):
    act, coact = taft_bundle.act, taft_bundle.coact
    assert check_action_axioms(act, "module-algebra").passed
    assert check_action_axioms(act, "module-coalgebra").passed
    assert check_coaction_axioms(coact, "comodule-algebra").passed
    assert check_coaction_axioms(coact, "comodule-coalgebra").passed
    assert check_hyd(YDModule(act, coact)).passed
    assert act.act("a", "x") == {"x": 2}
    assert coact.coact("x") == {("a", "x"): 2}


def test_sign_flipped_dual_numbers_action_stays_yetter_drinfeld(dual_bundle):
    flipped = Matrix.from_entries(2, 4, QQ, {(0, 0): 1, (1, 1): 2, (0, 2): 1, (1, 3): 2})
    act = ActionMap(dual_bundle.H, flipped, carrier=dual_bundle.A, name="A")
    M = YDModule(act, dual_bundle.coact)
    assert check_hyd(M).passed
    assert check_hyd_prime(M)["HYD ⇔ HYD′"].passed


def test_broken_associativity_has_a_witness(kz2):
    # a |> a = 0 instead of 1
    broken = Matrix.from_entries(2, 4, QQ, {(0, 0): 1, (1, 1): 1, (1, 2): 1})
    act = ActionMap(kz2, broken, carrier=kz2)
    result = check_action_axioms(act)["HM2 associativity"]
    assert not result.passed
    assert result.witness.labels == ("a", "a", "1")


def test_coaction_without_the_twist_factor_fails_counit(dual_bundle):
    # rho(z) = a (x) z lacks the factor l = 2 the counit law needs
    coact = CoactionMap(dual_bundle.H, Matrix.from_entries(4, 2, QQ, {(0, 0): 1, (3, 1): 1}), carrier=dual_bundle.A)
    report = check_coaction_axioms(coact)
    assert report["HCM1 twist compatibility"].passed
    assert not report["HCM2 counit"].passed


def test_kinds_need_a_carrier(kz2):
    act = ActionMap(kz2, kz2.counit, basis=("k",), twist=Matrix.identity(1, QQ))
    assert check_action_axioms(act).passed
    with pytest.raises(ValidationError):
        check_action_axioms(act, "module-algebra")
    with pytest.raises(ValidationError):
        check_action_axioms(act, "module-bialgebra")


def test_shapes_are_validated(kz2):
    with pytest.raises(ValidationError):
        ActionMap(kz2, Matrix.zeros(2, 2, QQ), carrier=kz2)
    with pytest.raises(ValidationError):
        CoactionMap(kz2, Matrix.zeros(2, 2, QQ), carrier=kz2)
    with pytest.raises(ValidationError):
        ActionMap(kz2, Matrix.zeros(1, 2, QQ))


def test_module_parts_must_agree(kz2, taft_bundle):
    with pytest.raises(ValidationError):
        YDModule(regular_action(kz2), taft_bundle.coact)
