from numerals.cli import main

UPPER_THIRD = '(cinf (gen dyadic-upper-cut "1/3"))'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dyadic_exists(capsys):
    code, out, _ = run(capsys, "dyadic", "3/4", "exists")
    assert code == 0
    assert out.strip() == "(neg (half (half (neg (inf x0 (dist x0 x0))))))"


def test_dyadic_forall_zero(capsys):
    code, out, _ = run(capsys, "dyadic", "0", "forall")
    assert code == 0
    assert out.strip() == "(sup x0 (dist x0 x0))"


def test_dyadic_rejects_non_dyadic(capsys):
    code, _, err = run(capsys, "dyadic", "5/3", "exists")
    assert code == 2
    assert err.startswith("error:")


def test_build_prints_numeral(capsys):
    code, out, _ = run(capsys, "build", '(numeral right 1 (real builtin "1/3"))')
    assert code == 0
    assert out.strip() == UPPER_THIRD


def test_build_output_feeds_classify(capsys):
    _, out, _ = run(capsys, "build", '(numeral right 1 (real builtin "1/3"))')
    code, out2, _ = run(capsys, "classify", out.strip())
    assert code == 0
    assert out2.strip() == "Sigma 1"


def test_build_rejects_bad_side(capsys):
    code, _, err = run(capsys, "build", '(numeral up 1 (real builtin "1/3"))')
    assert code == 2
    assert "error:" in err


def test_classify_finitary(capsys):
    code, out, _ = run(capsys, "classify", "(inf x0 (dist x0 x0))")
    assert code == 0
    assert out.strip() == "Finitary"


def test_classify_structured(capsys):
    code, out, _ = run(capsys, "classify", UPPER_THIRD, "--format", "structured")
    assert code == 0
    assert out.strip() == '(rank "Sigma 1")'


def test_classify_split_tokens(capsys):
    code, out, _ = run(capsys, "classify", "(inf", "x0", "(dist", "x0", "x0))")
    assert code == 0
    assert out.strip() == "Finitary"


def test_classify_unknown_generator(capsys):
    code, _, err = run(capsys, "classify", '(cinf (gen mystery "1/3"))')
    assert code == 2
    assert "error:" in err


def test_eval_enclosure_structured(capsys):
    code, out, _ = run(capsys, "eval", UPPER_THIRD, "--depth", "64",
                       "--format", "structured")
    assert code == 0
    assert out.strip() == "(enclosure 0 11/32)"


def test_eval_enclosure_text(capsys):
    code, out, _ = run(capsys, "eval", UPPER_THIRD, "--depth", "64")
    assert code == 0
    assert out.strip() == "[0, 11/32] width 11/32"


def test_eval_with_structure_file(capsys, tmp_path):
    path = tmp_path / "pair.txt"
    path.write_text("name: pair-half\nsize: 2\ndist: 0 1/2 0\n")
    code, out, _ = run(capsys, "eval", "(sup x0 (sup x1 (dist x0 x1)))",
                       str(path), "--format", "structured")
    assert code == 0
    assert out.strip() == "(enclosure 1/2 1/2)"


def test_eval_unbound_variable(capsys):
    code, _, err = run(capsys, "eval", "(dist x0 x1)")
    assert code == 2
    assert "unbound" in err


def test_eval_missing_file_is_part_of_code(capsys):
    code, _, err = run(capsys, "eval", "(dist x0 x1)", "nosuchfile.txt")
    assert code == 2  # joined into the code and rejected as syntax


def test_verify_passes_level_one(capsys):
    code, out, _ = run(capsys, "verify",
                       '(numeral right 1 (real builtin "1/3"))')
    assert code == 0
    assert "verdict: pass" in out
    assert "independence: pass" in out
    assert "structure point" in out
    assert "seeded6" in out


def test_verify_fails_tight_tolerance(capsys):
    code, out, _ = run(capsys, "verify",
                       '(numeral right 1 (real builtin "1/3"))',
                       "--depth", "16", "--tol", "10")
    assert code == 1
    assert "verdict: fail" in out
    assert "estimate within tolerance fail" in out


def test_verify_structured(capsys):
    code, out, _ = run(capsys, "verify",
                       '(numeral left 1 (real builtin "sqrt-half"))',
                       "--depth", "128", "--format", "structured")
    assert code == 0
    assert out.startswith("(report (independence pass")
    assert '(classification pass "Pi 1" "Pi 1")' in out


def test_verify_with_custom_suite(capsys, tmp_path):
    one = tmp_path / "one.txt"
    one.write_text("name: solo\nsize: 1\ndist: 0\n")
    two = tmp_path / "two.txt"
    two.write_text("name: pair\nsize: 2\ndist: 0 1/2 0\n")
    code, out, _ = run(capsys, "verify",
                       '(numeral right 1 (real builtin "2/7"))',
                       "--suite", str(one), str(two), "--depth", "64")
    assert code == 0
    assert "structure solo" in out and "structure pair" in out


def test_verify_rejects_bad_recipe(capsys):
    code, _, err = run(capsys, "verify", "(numeral right 1)")
    assert code == 2
    assert "error:" in err


def test_repeat_runs_are_identical(capsys):
    args = ("verify", '(numeral right 1 (real builtin "1/3"))',
            "--depth", "64")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
