import pytest
from click.testing import CliRunner

from orthomodular_py.catalog import example2, mo
from orthomodular_py.cli import cli, run
from orthomodular_py.helpers.structure_file import parse

BAD_ORDER = """\
structure omp broken
elements 0 1
bot 0
top 1
le 1 0
inv 0 1
end
"""

BAD_INVOLUTION = """\
structure omp broken
elements 0 1
bot 0
top 1
inv 0 0
inv 1 1
end
"""


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def test_validate_example2(runner, fixtures_dir):
    result = runner.invoke(cli, ["validate", str(fixtures_dir / "example2.urp")])
    assert result.exit_code == 0
    assert "R3-forward: pass" in result.output
    assert "RESULT pass 0" in result.output


def test_validate_mutant(runner, fixtures_dir):
    result = runner.invoke(cli, ["validate", str(fixtures_dir / "mutant.urp")])
    assert result.exit_code == 1
    failing = [
        line for line in result.output.splitlines() if ": FAIL" in line
    ]
    assert any(line.startswith("R3") for line in failing)
    assert "RESULT fail" in result.output


def test_validate_hexagon(runner, fixtures_dir):
    path = str(fixtures_dir / "hexagon.omp")
    result = runner.invoke(cli, ["validate", path])
    assert result.exit_code == 1
    assert "orthomodular-law: FAIL" in result.output
    result = runner.invoke(cli, ["validate", path, "--lemmas"])
    assert "lemma1-upper: FAIL" in result.output


def test_validate_catalog_with_lemmas(runner):
    result = runner.invoke(cli, ["validate", "catalog:even_subsets", "6",
                                 "--lemmas"])
    assert result.exit_code == 0
    assert "lemma1-upper: pass" in result.output


def test_witness_cap(runner, fixtures_dir):
    path = str(fixtures_dir / "hexagon.omp")
    result = runner.invoke(cli, ["--witness-cap", "0", "validate", path])
    assert result.exit_code == 2


def test_parse_error_is_a_usage_error(runner, write):
    result = runner.invoke(cli, ["validate", write("bad.omp", BAD_ORDER)])
    assert result.exit_code == 2
    assert "Antisymmetry violated" in result.output


def test_poset_law_failure_prints_the_report(runner, write):
    result = runner.invoke(cli, ["validate", write("bad.omp", BAD_INVOLUTION)])
    assert result.exit_code == 1
    assert "bound-complementation: FAIL" in result.output


def test_missing_file_and_unknown_catalog_entry(runner, tmp_path):
    result = runner.invoke(cli, ["validate", str(tmp_path / "none.urp")])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["validate", "catalog:octagon"])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["validate", "catalog:mo"])
    assert result.exit_code == 2


def test_params_need_a_catalog_target(runner, fixtures_dir):
    path = str(fixtures_dir / "example2.urp")
    result = runner.invoke(cli, ["validate", path, "3"])
    assert result.exit_code == 2


def test_roundtrip(runner, fixtures_dir):
    result = runner.invoke(cli, ["roundtrip", "catalog:even_subsets", "6"])
    assert result.exit_code == 0
    assert "P(R(P)) = P: equal" in result.output
    result = runner.invoke(cli, ["roundtrip", str(fixtures_dir / "example2.urp")])
    assert result.exit_code == 0
    assert "R(P(R)): equal" in result.output


def test_roundtrip_of_mutant(runner, fixtures_dir):
    result = runner.invoke(cli, ["roundtrip", str(fixtures_dir / "mutant.urp")])
    assert result.exit_code == 1
    assert "a -> a" in result.output


def test_imp_table(runner):
    result = runner.invoke(cli, ["imp-table", "catalog:mo", "2", "--odot"])
    assert result.exit_code == 0
    assert "{a', 1}" in result.output
    assert "{0, a}" in result.output
    result = runner.invoke(cli, ["imp-table", "catalog:hexagon"])
    assert result.exit_code == 1


def test_convert(runner, fixtures_dir, tmp_path):
    result = runner.invoke(cli, ["convert", "--to-urp", "catalog:mo", "2"])
    assert result.exit_code == 0
    assert parse(result.stdout) == example2()

    output = tmp_path / "mo2.omp"
    result = runner.invoke(cli, ["convert", "--to-omp", "-o", str(output),
                                 str(fixtures_dir / "example2.urp")])
    assert result.exit_code == 0
    assert parse(output.read_text(encoding="utf-8")) == mo(2)


def test_convert_errors(runner, fixtures_dir):
    mutant = str(fixtures_dir / "mutant.urp")
    result = runner.invoke(cli, ["convert", "--to-omp", mutant])
    assert result.exit_code == 1
    assert "a -> a" in result.output
    assert runner.invoke(cli, ["convert", mutant]).exit_code == 2
    result = runner.invoke(cli, ["convert", "--to-omp", "catalog:mo", "2"])
    assert result.exit_code == 2


def test_catalog(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    assert "even_subsets" in result.output
    assert "hexagon" in result.output
    result = runner.invoke(cli, ["catalog", "example2"])
    assert result.exit_code == 0
    assert parse(result.stdout) == example2()
    assert runner.invoke(cli, ["catalog", "octagon"]).exit_code == 2


def test_search_count(runner):
    result = runner.invoke(cli, ["search", "--size", "6"])
    assert result.exit_code == 0
    last = result.stdout.splitlines()[-1].split()
    assert last == ["6", "orthomodular-poset", "True", "1"]


def test_search_stream(runner):
    result = runner.invoke(cli, ["search", "--size", "4", "--emit", "stream"])
    assert result.exit_code == 0
    assert result.stdout.count("structure omp") == 1


def test_search_errors(runner):
    assert runner.invoke(cli, ["search", "--size", "9"]).exit_code == 2
    result = runner.invoke(
        cli, ["search", "--size", "4", "--stress", "--class",
              "involutive-poset"]
    )
    assert result.exit_code == 2


def test_search_stress(runner):
    result = runner.invoke(cli, ["search", "--size", "6", "--stress"])
    assert result.exit_code == 0
    assert "failures" in result.output


def test_export_dot(runner, tmp_path):
    result = runner.invoke(cli, ["export-dot", "catalog:chain", "2"])
    assert result.exit_code == 0
    assert "\t0 -> 1;" in result.output
    output = tmp_path / "mo2.gv"
    result = runner.invoke(cli, ["export-dot", "catalog:mo", "2",
                                 "--show-involution", "-o", str(output)])
    assert result.exit_code == 0
    assert "dashed" in output.read_text(encoding="utf-8")


def test_run_returns_exit_codes(fixtures_dir, tmp_path, capsys):
    assert run(["roundtrip", "catalog:even_subsets", "6"]) == 0
    assert "P(R(P)) = P: equal" in capsys.readouterr().out
    assert run(["validate", str(fixtures_dir / "mutant.urp")]) == 1
    bad = tmp_path / "bad.omp"
    bad.write_text(BAD_ORDER, encoding="utf-8")
    assert run(["validate", str(bad)]) == 2
    assert run(["search", "--size", "1"]) == 2
