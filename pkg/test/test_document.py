import pytest

from homyd.core import catalog
from homyd.core.actions import check_hyd
from homyd.core.document import dumps, export, export_text, load, parse
from homyd.core.exact import GF, QQ
from homyd.core.exceptions import DocumentError

KZ2_TEXT = """FORMAT 1
FIELD Q

HOPF KZ2
BASIS 1 a
MULT 0 0 : 1 0
MULT 0 1 : 0 1
MULT 1 0 : 0 1
MULT 1 1 : 1 0
UNIT : 1 0
COMULT 0 0 0 : 1
COMULT 1 1 1 : 1
COUNIT : 1 1
ANTIPODE 0 : 1 0
ANTIPODE 1 : 0 1
END
"""


def test_parse_and_resolve():
    document = parse(KZ2_TEXT)
    assert document.field is QQ
    assert [b.name for b in document.blocks] == ["KZ2"]
    assert load(KZ2_TEXT).get("KZ2") == catalog.kz2(QQ)


def test_printer_is_canonical():
    assert dumps(parse(KZ2_TEXT)) == KZ2_TEXT
    shuffled = KZ2_TEXT.replace("COUNIT : 1 1\n", "").replace("BASIS 1 a\n", "BASIS 1 a\nCOUNIT : 1 1\n")
    assert dumps(parse(shuffled)) == KZ2_TEXT


def test_comments_and_zero_rows_are_dropped():
    text = KZ2_TEXT.replace("MULT 0 0 : 1 0\n", "# left out on purpose\nMULT 0 0 : 0 0\n")
    assert dumps(parse(text)) == KZ2_TEXT.replace("MULT 0 0 : 1 0\n", "")


def test_explicit_zero_twist_is_kept():
    text = "FORMAT 1\nFIELD GF 5\n\nALGEBRA Z\nDIM 1\nUNIT : 1\nTWIST 0 : 0\nEND\n"
    assert dumps(parse(text)) == text
    Z = load(text).get("Z")
    assert Z.field == GF(5)
    assert Z.twist.is_zero()


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("FORMAT 2\nFIELD Q\n", 1, "unsupported format version 2"),
        ("HOPF H\n", 1, "expected 'FORMAT 1' header"),
        ("FORMAT 1\nHOPF H\n", 2, "expected a FIELD line after the header"),
        ("FORMAT 1\nFIELD GF 4\n", 2, "modulus 4 is not prime"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 2\nUNIT : 1 0\nUNIT : 1 0\nEND\n", 6, "duplicate entry UNIT"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 2\nMULT 0 2 : 1 0\nEND\n", 5, "MULT index 2 out of range (dimension 2)"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 2\nUNIT 1 0\nEND\n", 5, "stanza needs ':'"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 1\n", 3, "ALGEBRA A is not closed by END"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 1\nEND\nHOPF A\nDIM 1\nEND\n", 6, "duplicate block name 'A'"),
        ("FORMAT 1\nFIELD Q\nALGEBRA A\nDIM 1\nUNIT : 1/0\nEND\n", 5, "zero denominator"),
    ],
)
def test_errors_carry_line_numbers(text, line, message):
    with pytest.raises(DocumentError) as info:
        parse(text)
    assert info.value.line == line
    assert message in str(info.value)
    assert str(info.value).startswith(f"line {line}: ")


def test_references_are_resolved():
    text = KZ2_TEXT + "\nACTION M\nOVER H\nDIM 1\nACT 0 0 : 1\nEND\n"
    with pytest.raises(DocumentError) as info:
        load(text)
    assert "OVER H" in str(info.value)


def test_catalog_export_loads_back():
    instance = catalog.entry("taft-radford").instantiate(QQ, 2)
    text = export_text(instance.structures, QQ)
    space = load(text)
    assert [kind for kind, _, _ in space.items()] == ["HOPF", "HOPF", "ACTION", "COACTION"]
    assert space.get("KZ2") == instance["KZ2"]
    assert space.get("Ha") == instance["Ha"]
    M = space.module("Ha")
    assert M.action.matrix == instance["action"].matrix
    assert M.coaction.matrix == instance["coaction"].matrix
    assert check_hyd(M).passed
    assert dumps(parse(text)) == text


def test_export_over_a_prime_field():
    instance = catalog.entry("kz2-r-matrix").instantiate(GF(7))
    document = export(instance.structures, GF(7))
    assert [(b.kind, b.name) for b in document.blocks] == [("HOPF", "KZ2"), ("RMATRIX", "R")]
    text = dumps(document)
    assert "FIELD GF 7" in text
    assert "ENTRY 1 1 : 3" in text
    assert load(text).rmatrices["R"] == instance["R"]


def test_representation_needs_its_bialgebra():
    instance = catalog.entry("taft-radford").instantiate(QQ, 2)
    with pytest.raises(DocumentError):
        export({"action": instance["action"]}, QQ)


def test_documents_compare_by_content():
    assert parse(KZ2_TEXT).blocks == parse(KZ2_TEXT.replace("FIELD Q", "FIELD Q\n# same")).blocks
