import pytest

from homyd import __version__
from homyd.cli.main import main
from homyd.core.document import dumps, load, parse


@pytest.fixture
def exported(tmp_path):
    def export(entry_id, *extra):
        path = tmp_path / f"{entry_id}.txt"
        assert main(["catalog", "export", entry_id, "--emit", str(path), *extra]) == 0
        return path

    return export


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"homyd {__version__}"


def test_no_command_prints_help(capsys):
    assert main([]) == 1
    assert "usage: homyd" in capsys.readouterr().err


def test_usage_errors_exit_one():
    assert main(["construct", "smash"]) == 1
    assert main(["catalog", "frobnicate"]) == 1


def test_missing_file(tmp_path, capsys):
    assert main(["check", str(tmp_path / "absent.txt")]) == 1
    assert "no such file" in capsys.readouterr().err


def test_malformed_document(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("FORMAT 1\nFIELD GF 4\n", encoding="utf-8")
    assert main(["check", str(path)]) == 1
    assert "line 2: modulus 4 is not prime" in capsys.readouterr().err


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "taft-radford-sign" in out
    assert "[k]" in out


def test_catalog_show_prints_errata(capsys):
    assert main(["catalog", "show", "taft", "--param", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# taft over Q, k = 3")
    assert "# erratum:" in out
    assert "FORMAT 1" in out


def test_catalog_show_needs_one_id():
    assert main(["catalog", "show"]) == 1


def test_catalog_check(capsys):
    assert main(["catalog", "check", "kz2", "taft-radford", "--field", "GF 7", "--param", "3"]) == 0
    out = capsys.readouterr().out
    assert "== kz2 over GF(7) ==" in out
    assert "== taft-radford over GF(7), k = 3 ==" in out
    assert "FAIL" not in out


def test_catalog_check_is_deterministic(capsys):
    main(["catalog", "check", "dual-numbers-radford", "kz2-form"])
    first = capsys.readouterr().out
    main(["catalog", "check", "dual-numbers-radford", "kz2-form"])
    assert capsys.readouterr().out == first


def test_check_exported_bundle(exported, capsys):
    path = exported("taft-radford")
    assert main(["check", str(path)]) == 0
    out = capsys.readouterr().out
    assert "== HOPF Ha ==" in out
    assert "== YD module Ha ==" in out


def test_check_covers_both_sides_of_a_bialgebra_carrier(exported, capsys):
    path = exported("taft-radford")
    assert main(["check", str(path)]) == 0
    out = capsys.readouterr().out
    for name in ("HMA1 multiplicativity", "HMC1 comultiplicativity", "HCMA1 multiplicativity", "HCMC1 comultiplicativity"):
        assert f"PASS  {name}" in out
    assert out.count("HM1 twist compatibility") == 1
    assert out.count("HCM1 twist compatibility") == 1


def test_check_reports_the_dual_numbers_failure(exported, capsys):
    path = exported("dual-numbers-radford")
    assert main(["check", str(path), "--witness"]) == 2
    out = capsys.readouterr().out
    assert "FAIL  Δ multiplicative  [witness: (z, z)" in out


def test_check_single_block(exported, capsys):
    path = exported("dual-numbers-radford")
    assert main(["check", str(path), "--block", "KZ2"]) == 0
    assert "HOPF A" not in capsys.readouterr().out


def test_construct_biproduct_and_antipode(exported, tmp_path, capsys):
    path = exported("dual-numbers-radford")
    out_path = tmp_path / "b.txt"
    assert main(["construct", "biproduct", str(path), "--carrier", "A", "--over", "KZ2", "--emit", str(out_path)]) == 0
    capsys.readouterr()
    assert main(["antipode", str(out_path)]) == 0
    out = capsys.readouterr().out
    assert "antipode of biproduct" in out
    assert "  S(z⊗1) = 1·z⊗a" in out
    assert "  S(z⊗a) = -1·z⊗1" in out


def test_construct_smash_product(exported, capsys):
    path = exported("taft-radford")
    assert main(["construct", "smash", str(path), "--carrier", "Ha", "--over", "KZ2"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_construct_refuses_the_sign_corrected_action(exported, capsys):
    path = exported("taft-radford-sign")
    assert main(["construct", "biproduct", str(path), "--carrier", "Ha", "--over", "KZ2"]) == 2
    captured = capsys.readouterr()
    assert "FAIL  R4" in captured.out
    assert "Radford biproduct refused: R4 failed" in captured.err


def test_construct_unknown_block(exported):
    path = exported("taft-radford")
    assert main(["construct", "smash", str(path), "--carrier", "Ha", "--over", "KZ2", "--action", "B"]) == 1


def test_module_tests(exported, capsys):
    path = exported("dual-numbers-radford")
    assert main(["braiding-test", str(path)]) == 0
    assert main(["ybe-test", str(path), "--modules", "A"]) == 0
    out = capsys.readouterr().out
    assert "hexagon 1" in out
    assert "HYBE" in out


def test_quasitriangular_check(exported, capsys):
    assert main(["quasitriangular-check", str(exported("kz2-r-matrix"))]) == 0
    assert main(["quasitriangular-check", str(exported("kz2-form"))]) == 0
    out = capsys.readouterr().out
    assert "== RMATRIX R ==" in out
    assert "== FORM sigma ==" in out


def test_quasitriangular_check_needs_blocks(exported):
    assert main(["quasitriangular-check", str(exported("kz2"))]) == 1


def test_verbose_log_file(tmp_path, capsys):
    log = tmp_path / "homyd.log"
    assert main(["catalog", "check", "kz2", "-v", "--log-file", str(log)]) == 0
    assert "building catalog entry kz2" in log.read_text(encoding="utf-8")
    captured = capsys.readouterr()
    assert "elapsed" in captured.err
    assert "elapsed" not in captured.out


def _run_twice(argv, capsys):
    runs = []
    for _ in range(2):
        code = main(argv)
        runs.append((code, capsys.readouterr().out))
    assert runs[0] == runs[1]
    return runs[0]


def test_check_is_byte_identical(exported, capsys):
    path = exported("dual-numbers-radford")
    code, out = _run_twice(["check", str(path), "--witness"], capsys)
    assert code == 2
    assert "witness" in out


def test_construct_and_antipode_are_byte_identical(exported, tmp_path, capsys):
    path = exported("dual-numbers-radford")
    out_path = tmp_path / "b.txt"
    argv = ["construct", "biproduct", str(path), "--carrier", "A", "--over", "KZ2", "--emit", str(out_path)]
    assert main(argv) == 0
    capsys.readouterr()
    first = out_path.read_bytes()
    code, _ = _run_twice(argv, capsys)
    assert code == 0
    assert out_path.read_bytes() == first
    code, out = _run_twice(["antipode", str(out_path)], capsys)
    assert code == 0
    assert "antipode of biproduct" in out


def test_constructed_document_round_trips(exported, tmp_path):
    path = exported("taft-radford")
    out_path = tmp_path / "biproduct.txt"
    argv = ["construct", "biproduct", str(path), "--carrier", "Ha", "--over", "KZ2", "--emit", str(out_path)]
    assert main(argv) == 0
    text = out_path.read_text(encoding="utf-8")
    assert dumps(parse(text)) == text
    assert main(["check", str(out_path)]) == 0
    assert load(dumps(parse(text))).get("biproduct").mu == load(text).get("biproduct").mu
