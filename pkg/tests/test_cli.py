import json

from click.testing import CliRunner

from spin9forms.cli import cli
from spin9forms.exterior import ExtForm
from spin9forms.formats import form_from_dict


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_verify_kraines_passes():
    r = run("verify", "kraines")
    assert r.exit_code == 0
    assert all(line.startswith("PASS") for line in r.output.splitlines())


def test_verify_calibrations_names_failure():
    r = run("verify", "calibrations")
    assert r.exit_code == 1
    assert "FAIL [calibrations] Cayley form is self-dual" in r.output


def test_verify_unknown_suite():
    assert run("verify", "nope").exit_code == 2


def test_export_psi8_scaled_json(tmp_path):
    out = tmp_path / "p.json"
    r = run("export", "psi8-scaled", "--format", "json", "--out", str(out))
    assert r.exit_code == 0
    data = json.loads(out.read_text())
    assert len(data["terms"]) == 702
    assert {t["coefficient"] for t in data["terms"]} == {"-14", "-2", "-1", "1", "2"}


def test_export_psi8_round_trip(tmp_path):
    from spin9forms.canon import psi8

    out = tmp_path / "p.json"
    assert run("export", "psi8", "--out", str(out)).exit_code == 0
    assert form_from_dict(json.loads(out.read_text())) == psi8().form


def test_export_table3_csv():
    r = run("export", "table3", "--format", "csv")
    lines = r.output.splitlines()
    assert r.exit_code == 0 and len(lines) == 12
    assert [int(x.rsplit(",", 1)[1]) for x in lines[1:]] == [1, 28, 84, 14, 56, 336, 56, 14, 84, 28, 1]


def test_export_small_forms():
    for target in ("cayley", "associative"):
        r = run("export", target)
        assert r.exit_code == 0 and json.loads(r.output)["name"] == target
    r = run("export", "kraines", "-n", "1", "--format", "csv")
    assert r.exit_code == 0 and len(r.output.splitlines()) == 2


def test_export_io_error(tmp_path):
    r = run("export", "cayley", "--out", str(tmp_path / "missing" / "x.json"))
    assert r.exit_code == 2


def test_eq2_ratio():
    r = run("eq2", "--ratio")
    assert r.exit_code == 0 and r.output.strip() == "lambda 1/2"


def test_berger_deterministic():
    a = run("berger", "--samples", "3000", "--seed", "5")
    b = run("berger", "--samples", "3000", "--seed", "5")
    assert a.exit_code == 0
    assert a.output == b.output
    assert "similarity" in a.output


def test_berger_degenerate_run():
    assert run("berger", "--samples", "1", "--seed", "1", "--no-threshold").exit_code == 0
    assert run("berger", "--samples", "0", "--seed", "1").exit_code == 2


def test_berger_threshold_failure():
    r = run("berger", "--samples", "50", "--seed", "1", "--threshold", "1.01")
    assert r.exit_code == 1


def test_berger_monomial_file(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("x0^x1^x2^x3^x4^x5^x6^x7\ny0^y1^y2^y3^y4^y5^y6^y7\n")
    r = run("berger", "--samples", "500", "--seed", "1", "--monomials", str(p))
    assert r.exit_code == 0 and r.output.count("^") == 14
    p.write_text("x0^x1\n")
    assert run("berger", "--samples", "5", "--seed", "1", "--monomials", str(p)).exit_code == 2
    p.write_text("q9\n")
    assert run("berger", "--samples", "5", "--seed", "1", "--monomials", str(p)).exit_code == 2
    assert run("berger", "--samples", "5", "--seed", "1", "--monomials", str(tmp_path / "none")).exit_code == 2
