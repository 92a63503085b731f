import random
from fractions import Fraction

import pytest

from pbw.cli import (ExpressionError, format_element, format_vector, main,
                     parse_expression)
from pbw.presentation import LieFormatError
from pbw.tensor import TensorElement, monomial, unit

from conftest import GOLDEN
from golden_cases import GOLDEN_CASES, fix


# ---------------------------------------------------------------- expressions

def test_parse_expression_single_word(f32):
    assert parse_expression(f32, "c b a").terms == {(2, 1, 0): 1}


def test_parse_expression_mixed(f32):
    x = parse_expression(f32, "2/3 a b - 1 c a")
    assert x.terms == {(0, 1): Fraction(2, 3), (2, 0): -1}


def test_parse_expression_leading_minus(f32):
    assert parse_expression(f32, "- 1 a w + 1 a b c").terms == \
        {(0, 5): -1, (0, 1, 2): 1}


def test_parse_expression_bare_rational_is_unit(f32):
    assert parse_expression(f32, "5/6").terms == {(): Fraction(5, 6)}


def test_parse_expression_merges_repeats(f32):
    assert not parse_expression(f32, "a + 2 a - 3 a")
    assert parse_expression(f32, "a + 2 a").terms == {(0,): 3}


def test_parse_expression_unknown_name(f32):
    with pytest.raises(LieFormatError, match="unknown"):
        parse_expression(f32, "q")


@pytest.mark.parametrize("text", ["", "a + ", "+ + a", "a - - b", "1 2 a", "2//3 a"])
def test_parse_expression_malformed(text, f32):
    with pytest.raises(ExpressionError):
        parse_expression(f32, text)


def test_format_element_examples(f32):
    assert format_element(f32, TensorElement(f32)) == "0"
    x = TensorElement(f32, {(0, 1, 2): 1, (0, 5): -1})
    assert format_element(f32, x) == "- 1 a w + 1 a b c"
    assert format_element(f32, unit(f32)) == "1"
    assert format_element(f32, monomial(f32, (0,), Fraction(-2, 3))) == "- 2/3 a"


def test_format_vector(bad):
    assert format_vector(bad, {0: 1}) == "1 a"
    assert format_vector(bad, {3: -1}) == "- 1 u"


def test_format_parse_round_trip_random(f42):
    rng = random.Random(23)
    for _ in range(100):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            w = tuple(rng.randrange(f42.dim) for _ in range(rng.randint(0, 3)))
            terms[w] = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
        x = TensorElement(f42, terms)
        # "0" parses back to the zero element, so the identity has no holes
        assert parse_expression(f42, format_element(f42, x)) == x


# ---------------------------------------------------------------- golden runs

@pytest.mark.parametrize("name, argv, expected_exit", GOLDEN_CASES,
                         ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv, expected_exit, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    assert code == expected_exit
    assert captured.out == (GOLDEN / name).read_text(encoding="utf-8")


def test_trace_golden(capsys):
    code = main(["normalize", fix("f32"), "-e", "c b a", "--trace"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.err == (GOLDEN / "normalize_f32_trace.txt").read_text(encoding="utf-8")


def test_render_golden(tmp_path, capsys):
    out1 = tmp_path / "one.svg"
    out2 = tmp_path / "two.svg"
    assert main(["render", "--out", str(out1), "--size", "320"]) == 0
    assert main(["render", "--out", str(out2), "--size", "320"]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    assert out1.read_bytes() == (GOLDEN / "tessellation_320.svg").read_bytes()


def test_render_labels(tmp_path, capsys):
    out = tmp_path / "labelled.svg"
    assert main(["render", "--out", str(out), "--labels"]) == 0
    capsys.readouterr()
    svg = out.read_text(encoding="utf-8")
    assert svg.count('class="region"') == 24
    assert svg.count('class="label"') == 24


# ----------------------------------------------------------------- exit codes

def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(["cells"]) == 2          # missing --n
    assert main(["frobnicate"]) == 2     # unknown subcommand
    assert main(["normalize", fix("f32")]) == 2  # missing -e
    capsys.readouterr()


def test_engine_errors_exit_1(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.lie")]) == 1
    assert main(["normalize", fix("f32"), "-e", "nope"]) == 1
    assert main(["contract", "--n", "3", "--loop", "1"]) == 1  # not a loop
    assert main(["holonomy", fix("f32"), "-w", "a b", "--loop", "1 2 1 2 1 2"]) == 1
    assert main(["holonomy", fix("f32"), "-w", "c b a"]) == 1  # no loops given
    assert main(["cells", "--n", "2"]) == 1
    assert main(["contract", "--n", "5", "--loop",
                 "1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4",
                 "--max-nodes", "1"]) == 1  # budget exceeded
    err = capsys.readouterr().err
    assert "error:" in err


def test_verification_failures_exit_1(capsys):
    assert main(["check", fix("bad")]) == 1
    assert main(["hexagon", fix("bad")]) == 1
    assert main(["confluence", fix("bad"), "--max-len", "3"]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
