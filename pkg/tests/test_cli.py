import pytest

from opaq.cli import cli_main

PHI_CNF = "p cnf 3 5\n2 2 0\n1 2 0\n-1 3 0\n-2 -3 0\n3 0\n"
PHI_SAT_CNF = "p cnf 3 4\n2 2 0\n1 2 0\n-1 3 0\n-2 -3 0\n"
K3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
K4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"


@pytest.fixture
def phi(tmp_path):
    p = tmp_path / "phi.cnf"
    p.write_text(PHI_CNF)
    return p


@pytest.fixture
def phi_nfa(tmp_path, phi):
    out = tmp_path / "phi.nfa"
    assert cli_main(["reduce", "sat2cso", "-i", str(phi), "-o", str(out)]) == 0
    return out


def run_cli(capsys, argv):
    code = cli_main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_cso_failing(capsys, phi_nfa):
    code, out, err = run_cli(capsys, ["check", "cso", "-i", str(phi_nfa)])
    assert code == 1
    assert out.split() == ["a1.c1", "a2.c1", "a1.c5", "a3.c3",
                           "a1.c1", "a2.c1", "a1.c4", "a4.c4"]
    assert "fails" in err


def test_check_cso_holding(capsys, tmp_path):
    cnf = tmp_path / "sat.cnf"
    cnf.write_text(PHI_SAT_CNF)
    nfa = tmp_path / "sat.nfa"
    assert cli_main(["reduce", "sat2cso", "-i", str(cnf), "-o", str(nfa)]) == 0
    code, out, err = run_cli(capsys, ["check", "cso", "-i", str(nfa)])
    assert code == 0
    assert out == ""
    assert "holds" in err


def test_check_report_file(capsys, tmp_path, phi_nfa):
    report = tmp_path / "report.tsv"
    code, _, _ = run_cli(capsys, ["check", "cso", "-i", str(phi_nfa),
                                  "--report", str(report)])
    assert code == 1
    lines = report.read_text().splitlines()
    assert lines[0] == "n\tverdict\twitness_len\tnodes\tseconds"
    fields = lines[1].split("\t")
    assert fields[0] == "8" and fields[1] == "fails" and fields[2] == "8"


def test_kso_needs_k(capsys, phi_nfa):
    code, _, err = run_cli(capsys, ["check", "kso", "-i", str(phi_nfa)])
    assert code == 2
    assert "--k" in err
    code, _, _ = run_cli(capsys, ["check", "kso", "-i", str(phi_nfa),
                                  "--k", "2"])
    assert code == 1


def test_reduction_pipeline_coloring(capsys, tmp_path):
    col = tmp_path / "k3.col"
    col.write_text(K3)
    nfa = tmp_path / "k3.nfa"
    iso = tmp_path / "k3iso.nfa"
    ifo = tmp_path / "k3ifo.nfa"
    assert cli_main(["reduce", "col2cso", "-i", str(col), "-o", str(nfa)]) == 0
    assert cli_main(["check", "cso", "-i", str(nfa)]) == 1
    assert cli_main(["reduce", "cso2iso", "-i", str(nfa), "-o", str(iso)]) == 0
    assert cli_main(["check", "iso", "-i", str(iso)]) == 1
    assert cli_main(["reduce", "iso2ifo", "-i", str(iso), "-o", str(ifo)]) == 0
    capsys.readouterr()
    code, out, _ = run_cli(capsys, ["check", "ifo", "-i", str(ifo)])
    assert code == 1
    assert out.split() == ["a", "b", "c"]


def test_reduction_pipeline_k4_holds(tmp_path):
    col = tmp_path / "k4.col"
    col.write_text(K4)
    nfa = tmp_path / "k4.nfa"
    out = tmp_path / "k4x.nfa"
    assert cli_main(["reduce", "col2cso", "-i", str(col), "-o", str(nfa)]) == 0
    assert cli_main(["check", "cso", "-i", str(nfa)]) == 0
    assert cli_main(["check", "inso", "-i", str(nfa)]) == 0
    for kind, notion in (("cso2iso", "iso"), ("cso2lbo", "lbo"),
                         ("cso2univ", "universal")):
        assert cli_main(["reduce", kind, "-i", str(nfa), "-o", str(out)]) == 0
        assert cli_main(["check", notion, "-i", str(out)]) == 0


def test_lbo_and_universality_roundtrip(tmp_path, phi_nfa):
    out = tmp_path / "out.nfa"
    assert cli_main(["reduce", "cso2lbo", "-i", str(phi_nfa),
                     "-o", str(out)]) == 0
    assert cli_main(["check", "lbo", "-i", str(out)]) == 1
    assert cli_main(["reduce", "cso2univ", "-i", str(phi_nfa),
                     "-o", str(out)]) == 0
    assert cli_main(["check", "universal", "-i", str(out)]) == 1


def test_included_and_equivalent(tmp_path, phi_nfa):
    univ = tmp_path / "univ.nfa"
    assert cli_main(["reduce", "cso2univ", "-i", str(phi_nfa),
                     "-o", str(univ)]) == 0
    # every automaton includes itself
    assert cli_main(["check", "included", "-i", str(univ),
                     "-j", str(univ)]) == 0
    assert cli_main(["check", "equivalent", "-i", str(univ),
                     "-j", str(univ)]) == 0
    assert cli_main(["check", "included", "-i", str(univ)]) == 2


def test_gen_zimin(capsys):
    code, out, _ = run_cli(capsys, ["gen", "zimin", "-n", "3"])
    assert code == 0
    assert out.strip() == "a1 a2 a1 a3 a1 a2 a1"


def test_oracle_sat(capsys, phi, tmp_path):
    code, out, _ = run_cli(capsys, ["oracle", "sat", "-i", str(phi)])
    assert code == 1
    sat = tmp_path / "sat.cnf"
    sat.write_text(PHI_SAT_CNF)
    code, out, _ = run_cli(capsys, ["oracle", "sat", "-i", str(sat)])
    assert code == 0
    assert out.strip() == "010"


def test_oracle_col3(capsys, tmp_path):
    col = tmp_path / "k3.col"
    col.write_text(K3)
    code, out, _ = run_cli(capsys, ["oracle", "col3", "-i", str(col)])
    assert code == 0
    assert out.strip() == "abc"
    col.write_text(K4)
    assert cli_main(["oracle", "col3", "-i", str(col)]) == 1


def test_bench_report(capsys, tmp_path):
    report = tmp_path / "bench.tsv"
    code, out, _ = run_cli(capsys, ["bench", "sat-family", "--n-min", "2",
                                    "--n-max", "3", "--report", str(report)])
    assert code == 0
    lines = report.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("2\tfails\t4\t")
    assert lines[2].startswith("3\tfails\t8\t")
    assert out.splitlines()[0] == "n\tverdict\twitness_len\tnodes\tseconds"


def test_input_errors_exit_2(capsys, tmp_path):
    code, _, err = run_cli(capsys, ["check", "cso", "-i",
                                    str(tmp_path / "missing.nfa")])
    assert code == 2
    assert "error:" in err
    bad = tmp_path / "bad.nfa"
    bad.write_text("states: p\n")
    code, _, err = run_cli(capsys, ["check", "cso", "-i", str(bad)])
    assert code == 2
    assert "error:" in err


def test_missing_annotations_exit_2(capsys, tmp_path):
    doc = tmp_path / "plain.nfa"
    doc.write_text("states: p\nalphabet: a\ninitial: p\ntrans:\np a p\n")
    code, _, err = run_cli(capsys, ["check", "cso", "-i", str(doc)])
    assert code == 2
    assert "secret-states" in err
