import pytest

from homyd.core import catalog
from homyd.core.exact import GF, QQ
from homyd.core.exceptions import FieldError, ValidationError
from homyd.core.structures import check_hom_hopf

IDS = list(catalog.CATALOG)
GRID = [(QQ, 1), (QQ, 2), (QQ, 3), (QQ, -1), (GF(7), 1), (GF(7), 2), (GF(7), 3)]


def test_catalog_ids():
    assert IDS == [
        "kz2",
        "taft",
        "taft-radford",
        "taft-radford-sign",
        "dual-numbers-radford",
        "taft-biproduct",
        "dual-numbers-biproduct",
        "kz2-r-matrix",
        "kz2-form",
        "unit-module",
    ]


@pytest.mark.parametrize("entry_id", IDS)
@pytest.mark.parametrize("field,param", GRID, ids=lambda v: str(v))
def test_every_entry_checks_out(entry_id, field, param):
    item = catalog.entry(entry_id)
    instance = item.instantiate(field, param if item.parameterized else None)
    report = instance.check()
    assert report.passed, report.render()


def test_titles():
    assert catalog.entry("taft").instantiate(QQ, 3).title == "taft over Q, k = 3"
    assert catalog.entry("kz2").instantiate(GF(5)).title == "kz2 over GF(5)"


def test_parameters_are_validated():
    with pytest.raises(ValidationError):
        catalog.entry("taft").instantiate(QQ, 0)
    with pytest.raises(ValidationError):
        catalog.entry("dual-numbers-radford").instantiate(GF(7), 7)
    with pytest.raises(ValidationError):
        catalog.entry("kz2").instantiate(QQ, 2)
    with pytest.raises(ValidationError):
        catalog.entry("sweedler")


def test_default_parameter():
    assert catalog.entry("taft").instantiate(QQ).param == 2


def test_r_matrix_entry_needs_odd_characteristic():
    with pytest.raises(FieldError):
        catalog.entry("kz2-r-matrix").instantiate(GF(2))


def test_instances_sweep_parameterized_entries():
    found = catalog.instances(QQ, [1, 2], ids=["kz2", "taft"])
    assert [i.title for i in found] == ["kz2 over Q", "taft over Q, k = 1", "taft over Q, k = 2"]


def test_errata():
    assert catalog.entry("taft").errata
    assert "R4" in catalog.entry("taft-radford-sign").errata[0]
    assert catalog.entry("kz2").errata == ()


def test_sign_entry_reports_the_r4_failure():
    report = catalog.entry("taft-radford-sign").instantiate(QQ, 2).check()
    result = report["sign-corrected action fails R4"]
    assert result.passed
    assert "witness" in result.note


def test_dual_numbers_biproduct():
    B = catalog.dual_numbers_biproduct(QQ, 2)
    assert B.basis == ("1⊗1", "1⊗a", "z⊗1", "z⊗a")
    assert check_hom_hopf(B).passed
    assert B.product("z⊗1", "z⊗1") == {}
    assert catalog.antipode_images(B, "z⊗1") == {"z⊗a": 1}
    assert catalog.antipode_images(B, "z⊗a") == {"z⊗1": -1}
    assert not B.antipode.power(2).is_identity()
    assert B.antipode.power(4).is_identity()


@pytest.mark.parametrize("k", [1, 2, 5])
def test_taft_biproduct_antipode_does_not_depend_on_k(k):
    B = catalog.taft_biproduct(QQ, k)
    for label, image in catalog.TAFT_RADFORD_ANTIPODE.items():
        assert catalog.antipode_images(B, label) == image


def test_twisted_tables():
    tables = catalog.taft_twisted_tables(2, QQ)
    assert tables["products"][("g", "x")] == {"y": 2}
    assert tables["products"][("1", "x")] == {"x": 2}
    assert tables["coproducts"]["y"] == {("y", "1"): 2, ("g", "y"): 2}


def test_compare_table_names_the_mismatch():
    result = catalog.compare_table("table", lambda key: {}, {"a": {"b": 1}}, QQ)
    assert not result.passed
    assert result.note == "at a: expected 1·b, got 0"


def test_unit_module_entry():
    instance = catalog.entry("unit-module").instantiate(QQ)
    assert instance["K"].dim == 1
    assert instance["KZ2"] == catalog.kz2(QQ)
