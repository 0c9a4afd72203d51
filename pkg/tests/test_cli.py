import numpy as np
import pytest

from circforge import LinearCode, double_circulant, field_create, monomial
from circforge.cli import main, parse_code, serialize_code

F2 = field_create(2, 1)
F5 = field_create(5, 1)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_artin_lists_primes(capsys):
    rc, out, _ = run(capsys, "artin", "--q", "2", "--limit", "13")
    assert rc == 0
    assert out.split() == ["3", "5", "11", "13"]


def test_artin_square_q_is_empty(capsys):
    rc, out, _ = run(capsys, "artin", "--q", "4", "--limit", "50")
    assert rc == 0
    assert out == ""


def test_artin_bad_limit_exits_2(capsys):
    rc, _, err = run(capsys, "artin", "--q", "2", "--limit", "1")
    assert rc == 2
    assert "error" in err


def test_search_dcsd_writes_files_and_summary(tmp_path, capsys):
    rc, out, _ = run(capsys, "search", "dcsd", "--q", "2", "--m", "3",
                     "--out", str(tmp_path))
    assert rc == 0
    assert "dcsd q=2 m=3 found=3 best_d=2" in out
    files = sorted(tmp_path.glob("*.code"))
    assert len(files) == 3
    text = files[0].read_text()
    code = parse_code(text)
    assert serialize_code(code) == text
    assert (code.n, code.k) == (6, 3)


def test_search_dcsd_none_found_still_exit_zero(capsys):
    rc, out, _ = run(capsys, "search", "dcsd", "--q", "3", "--m", "3")
    assert rc == 0
    assert "found=0" in out and "best_d=-" in out


def test_search_fcsd(capsys):
    rc, out, _ = run(capsys, "search", "fcsd", "--q", "3", "--m", "1")
    assert rc == 0
    assert "found 1;1" in out


def test_search_budget_flag_caps_candidates(capsys):
    rc, out, _ = run(capsys, "search", "dcsd", "--q", "2", "--m", "3",
                     "--budget", "0")
    assert rc == 0
    assert "found=0" in out


def test_verify_qc_predicate_on_four_circulant(tmp_path, capsys):
    from circforge import four_circulant, ring_one
    from circforge import field_create as fc
    f3 = fc(3, 1)
    code = four_circulant(ring_one(f3, 3), ring_one(f3, 3))
    path = tmp_path / "fc.code"
    path.write_text(serialize_code(code))
    rc, out, _ = run(capsys, "verify", str(path), "--predicate", "qc:4")
    assert rc == 0 and out.strip() == "qc 4 true"
    rc, out, _ = run(capsys, "verify", str(path), "--predicate", "selfdual")
    assert rc == 0 and out.strip() == "selfdual true"


def test_pipeline_ell2_identity_generator_exit_zero(tmp_path, capsys):
    outfile = tmp_path / "out.code"
    rc, out, _ = run(capsys, "pipeline", "ell2", "--q", "2", "--m", "3",
                     "--a", "1,0,0", "--out", str(outfile))
    assert rc == 0
    assert "output_cyclic true" in out
    code = parse_code(outfile.read_text())
    assert (code.n, code.k) == (6, 3)


def test_pipeline_ell2_monomial_generator_exit_one(capsys):
    rc, out, _ = run(capsys, "pipeline", "ell2", "--q", "2", "--m", "3",
                     "--a", "0,1,0")
    assert rc == 1
    assert "ideal_2d false" in out
    assert "output_cyclic false" in out


def test_pipeline_p1mod4_exit_zero(capsys):
    rc, out, _ = run(capsys, "pipeline", "p1mod4", "--q", "5", "--m", "3",
                     "--a", "2")
    assert rc == 0
    assert "output_n 12" in out and "output_d 4" in out


def test_pipeline_even_m_exit_two(capsys):
    rc, _, err = run(capsys, "pipeline", "ell2", "--q", "2", "--m", "4",
                     "--a", "1,0,0,0")
    assert rc == 2
    assert "odd" in err


def test_pipeline_p3mod4_needs_b(capsys):
    rc, _, err = run(capsys, "pipeline", "p3mod4", "--q", "3", "--m", "3",
                     "--a", "1")
    assert rc == 2


def test_verify_predicates(tmp_path, capsys):
    rc, out, _ = run(capsys, "pipeline", "ell2", "--q", "2", "--m", "3",
                     "--a", "1,0,0", "--out", str(tmp_path / "c.code"))
    assert rc == 0
    rc, out, _ = run(capsys, "verify", str(tmp_path / "c.code"),
                     "--predicate", "cyclic")
    assert rc == 0 and out.strip() == "cyclic true"
    rc, out, _ = run(capsys, "verify", str(tmp_path / "c.code"),
                     "--predicate", "qc:2")
    assert rc == 0 and out.strip() == "qc 2 true"
    rc, out, _ = run(capsys, "verify", str(tmp_path / "c.code"),
                     "--predicate", "distance")
    assert rc == 0 and out.strip() == "distance 2"


def test_verify_selfdual_scaled_identity(tmp_path, capsys):
    code = double_circulant(monomial(F5, 1, 0, 2))  # (I | 2I) over GF(5)
    path = tmp_path / "sd.code"
    path.write_text(serialize_code(code))
    rc, out, _ = run(capsys, "verify", str(path), "--predicate", "selfdual")
    assert rc == 0 and out.strip() == "selfdual true"


def test_verify_zero_dimension_exit_two(tmp_path, capsys):
    path = tmp_path / "zero.code"
    path.write_text("p 2\ne 1\nmodulus\nn 4\nrow 0 0 0 0\n")
    rc, _, err = run(capsys, "verify", str(path), "--predicate", "cyclic")
    assert rc == 2


def test_verify_unreadable_exit_two(tmp_path, capsys):
    rc, _, err = run(capsys, "verify", str(tmp_path / "missing.code"),
                     "--predicate", "cyclic")
    assert rc == 2


def test_pipeline_p3mod4_subcommand(capsys):
    rc, out, _ = run(capsys, "pipeline", "p3mod4", "--q", "3", "--m", "3",
                     "--a", "1", "--b", "1")
    assert rc == 1  # two-variable closure fails for this route
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["self_dual_input"] == "true"
    assert lines["d_paired_ok"] == "true"
    assert lines["ideal_2d"] == "false"


def test_verify_distance_respects_budget_env(tmp_path, capsys, monkeypatch):
    code = double_circulant(monomial(F2, 3, 1))
    path = tmp_path / "c.code"
    path.write_text(serialize_code(code))
    monkeypatch.setenv("CIRCFORGE_BUDGET", "2")
    rc, _, err = run(capsys, "verify", str(path), "--predicate", "distance")
    assert rc == 2 and "budget" in err
    monkeypatch.delenv("CIRCFORGE_BUDGET")
    rc, out, _ = run(capsys, "verify", str(path), "--predicate", "distance")
    assert rc == 0 and out.strip() == "distance 2"


def test_bounds_output(capsys):
    rc, out, _ = run(capsys, "bounds", "--q", "2", "--ell", "2")
    assert rc == 0
    lines = dict(l.split() for l in out.strip().splitlines())
    assert float(lines["delta_qc"]) == pytest.approx(0.110028, abs=1e-6)
    assert float(lines["delta_add"]) == pytest.approx(0.055014, abs=1e-6)


def test_bounds_bad_index_exit_two(capsys):
    rc, _, err = run(capsys, "bounds", "--q", "2", "--ell", "1")
    assert rc == 2


def test_sample_qc_deterministic(capsys):
    rc1, out1, _ = run(capsys, "sample-qc", "--q", "2", "--m", "5", "--ell", "2",
                       "--seed", "3")
    rc2, out2, _ = run(capsys, "sample-qc", "--q", "2", "--m", "5", "--ell", "2",
                       "--seed", "3")
    assert rc1 == rc2 == 0
    assert out1 == out2
    assert "additive_cyclic true" in out1
    assert "distance_bound_ok true" in out1


def test_code_file_round_trip_gf9(tmp_path):
    f9 = field_create(3, 2)
    code = LinearCode(f9, np.array([[1, 4, 0, 8], [0, 2, 3, 1]]))
    text = serialize_code(code)
    again = parse_code(text)
    assert again.field == f9
    assert np.array_equal(again.gens, code.gens)
    assert serialize_code(again) == text


def test_parse_code_rejects_malformed():
    with pytest.raises(ValueError):
        parse_code("p 2\ne 1\nmodulus\nn 3\nrow 0 1\n")     # short row
    with pytest.raises(ValueError):
        parse_code("p 2\ne 1\nmodulus\nn 3\nrow 0 1 2\n")   # entry >= q
    with pytest.raises(ValueError):
        parse_code("p 2\ne 1\nmodulus\n")                    # truncated
