import json

from domroots import cli, dompoly
from domroots.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_graph6(capsys):
    code, out, _ = run(capsys, "poly", "--graph6", "A_")
    assert code == 0
    assert out.strip() == "x^2 + 2x"


def test_poly_family_star3(capsys):
    code, out, _ = run(capsys, "poly", "--family", "star:3")
    assert code == 0
    assert out.strip() == "x^4 + 4x^3 + 3x^2 + x"


def test_poly_family_complete3(capsys):
    code, out, _ = run(capsys, "poly", "--family", "complete:3")
    assert code == 0
    assert out.strip() == "x^3 + 3x^2 + 3x"


def test_poly_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "poly", "--graph6", "A_")
    assert code == 0
    assert dompoly.from_json(out).coeffs == (0, 2, 1)


def test_poly_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "poly", "--graph6", "A_")
    assert code == 0
    assert out.splitlines() == ["k,coeff", "0,0", "1,2", "2,1"]


def test_poly_methods_agree(capsys):
    # hand count on K_{2,3}: no dominating singleton, 7 dominating pairs,
    # and every larger subset dominates
    for method in ("auto", "brute", "inex"):
        code, out, _ = run(capsys, "poly", "--family", "kbip:2,3", "--method", method)
        assert code == 0
        assert out.strip() == "x^5 + 5x^4 + 10x^3 + 7x^2"


def test_poly_missing_input(capsys):
    code, _, err = run(capsys, "poly")
    assert code == 2
    assert "graph6" in err


def test_poly_route_disagreement_is_exit_4(capsys, monkeypatch):
    from domroots.dompoly import DomPolynomial

    monkeypatch.setattr(
        cli.dompoly, "dom_poly_bruteforce", lambda g: DomPolynomial((0, 9, 9))
    )
    code, _, err = run(capsys, "poly", "--graph6", "A_", "--method", "auto")
    assert code == 4
    assert "disagree" in err


def test_roots_k2(capsys):
    code, out, _ = run(capsys, "roots", "--graph6", "A_")
    assert code == 0
    values = [float(line.split()[0]) for line in out.strip().splitlines()]
    assert len(values) == 2
    assert abs(values[0] + 2) < 1e-9 and values[1] == 0.0


def test_roots_star2(capsys):
    code, out, _ = run(capsys, "roots", "--family", "star:2")
    assert code == 0
    values = [float(line.split()[0]) for line in out.strip().splitlines()]
    assert abs(values[0] + 2.618033989) < 5e-9
    assert abs(values[1] + 0.381966011) < 5e-9
    assert values[2] == 0.0


def test_roots_complete5_single_root(capsys):
    code, out, _ = run(capsys, "roots", "--family", "complete:5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 and float(lines[0].split()[0]) == 0.0


def test_roots_window_flag(capsys):
    code, out, _ = run(capsys, "roots", "--graph6", "A_", "--window", "-3", "-1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert abs(float(lines[0].split()[0]) + 2) < 1e-9


def test_witness_happy_path(capsys):
    code, out, err = run(capsys, "witness", "-z", "-1.5", "-e", "0.05")
    assert code == 0
    cert = json.loads(out)
    assert cert["case_tag"] == "case-1.1"
    assert "[pass]" in err


def test_witness_exact(capsys):
    code, out, _ = run(capsys, "witness", "-z", "0", "-e", "0.1")
    assert code == 0
    cert = json.loads(out)
    assert cert["family"]["kind"] == "exact_K2"
    assert cert["enclosure"]["lo"] == "0/1"


def test_witness_rejects_positive_target(capsys):
    code, _, err = run(capsys, "witness", "-z", "1", "-e", "0.1")
    assert code == 2
    assert "z <= 0" in err


def test_witness_budget_exhaustion_exit_3(capsys):
    code, _, err = run(
        capsys,
        "witness", "-z", "-9.37", "-e", "0.001",
        "--max-m", "1", "--max-param", "3", "--max-degree", "10",
    )
    assert code == 3
    assert "budget" in err.lower()


def test_atlas_cloud(capsys):
    code, out, _ = run(capsys, "atlas", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph6,n,root_lo,root_hi"
    ids = {line.split(",")[0] for line in lines[1:]}
    assert len(ids) == 8  # all labeled graphs of order 3 appear


def test_atlas_over_cap_exit_3(capsys):
    code, _, err = run(capsys, "atlas", "9")
    assert code == 3
    assert "cap" in err


def test_atlas_table(capsys):
    code, out, _ = run(capsys, "atlas", "4", "--table")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,root_lo,root_hi,graph6,exhaustive"
    assert len(lines) == 5
    assert lines[2].startswith("2,-2.000000000")


def test_atlas_growth(capsys):
    code, out, _ = run(capsys, "atlas", "5", "--growth")
    assert code == 0
    assert out.splitlines()[0] == "n,magnitude,n_over_log_n,ratio"


def test_atlas_corpus_file(capsys, tmp_path):
    path = tmp_path / "c.g6"
    path.write_text("A_\n@\n")
    code, out, _ = run(capsys, "atlas", "0", "--mode", "file", "--input", str(path))
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert rows[0].startswith("A_,2,")
    assert rows[-1] == "@,1,0.000000000000,0.000000000000"


def test_star_roots_final_row(capsys):
    code, out, _ = run(capsys, "star-roots", "8")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "k,r_k_lo,r_k_hi,gap,estimate,abs_err"
    last = rows[-1].split(",")
    assert last[0] == "8"
    assert abs(float(last[1]) - 5.309330065) < 5e-9


def test_compose(capsys):
    code, out, _ = run(capsys, "compose", "--graph6", "A_", "-m", "2")
    assert code == 0
    assert out.strip() == "x^4 + 4x^3 + 6x^2 + 4x"


def test_compose_family(capsys):
    code, out, _ = run(capsys, "--format", "json", "compose", "--family", "star:2", "-m", "3")
    assert code == 0
    assert json.loads(out)["n"] == 9


def test_bad_graph6_exit_2(capsys):
    code, _, err = run(capsys, "poly", "--graph6", "")
    assert code == 2
    assert "graph6" in err or "empty" in err


def test_bad_family_exit_2(capsys):
    code, _, err = run(capsys, "poly", "--family", "wheel:5")
    assert code == 2
    assert "families" in err


def test_bad_rational_exit_2(capsys):
    code, _, err = run(capsys, "witness", "-z", "abc", "-e", "0.1")
    assert code == 2


def test_usage_error_without_command(capsys):
    assert main([]) == 2


def test_workers_env_override(capsys, monkeypatch):
    monkeypatch.setenv("DOMROOTS_WORKERS", "2")
    code, out, _ = run(capsys, "atlas", "3")
    assert code == 0
    assert len(out.strip().splitlines()) > 1
    monkeypatch.setenv("DOMROOTS_WORKERS", "zebra")
    code, _, err = run(capsys, "atlas", "3")
    assert code == 2


def test_tolerance_flag(capsys):
    code, out, _ = run(capsys, "--tol", "1/1000", "roots", "--graph6", "A_")
    assert code == 0
