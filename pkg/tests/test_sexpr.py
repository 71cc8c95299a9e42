from fractions import Fraction

import pytest

from pgacalc.evaluate import OPERATORS
from pgacalc.sexpr import (Call, ExprError, LineLit, Literal, MvLit, PointLit, parse, tokenize,
                           unparse)


def test_token_count():
    tokens = tokenize("(spread (line 1 0 0) (line 0 1 0))")
    assert [t.text for t in tokens] == ["(", "spread", "(", "line", "1", "0", "0", ")",
                                        "(", "line", "0", "1", "0", ")", ")"]
    assert len(tokens) == 15


def test_single_rational_token():
    (tok,) = tokenize("1/2")
    assert tok.kind == "rational" and tok.text == "1/2"


def test_spaced_slash_is_illegal():
    with pytest.raises(ExprError) as info:
        tokenize("1 / 2")
    assert (info.value.line, info.value.col) == (1, 3)


def test_positions_are_one_based_across_lines():
    with pytest.raises(ExprError) as info:
        tokenize("(point 1 2)\n  (point # 2)")
    assert (info.value.line, info.value.col) == (2, 10)


def test_comments_and_whitespace_are_skipped():
    tokens = tokenize("  ; leading comment\n(point\t1 -2/3) ; trailing")
    assert [t.text for t in tokens] == ["(", "point", "1", "-2/3", ")"]


@pytest.mark.parametrize("bad", ["1/2x", "(point 1.5 2)", "(point 1 2) ]"])
def test_illegal_input(bad):
    with pytest.raises(ExprError):
        tokenize(bad)


def test_parse_literals():
    assert parse("(point 1 2)") == PointLit(Fraction(1), Fraction(2))
    assert parse("(line 1 0 -1/2)") == LineLit(Fraction(1), Fraction(0), Fraction(-1, 2))
    assert parse("(mv 1 2 3 4 5 6 7 8)") == MvLit(tuple(Fraction(i) for i in range(1, 9)))
    assert parse("7/3") == Literal(Fraction(7, 3))


def test_parse_call_tree():
    e = parse("(quadrance (point 0 0) (point 3 4))")
    assert isinstance(e, Call) and e.op == "quadrance"
    assert e.args == (PointLit(0, 0), PointLit(3, 4))


@pytest.mark.parametrize("text, fragment", [
    ("(quadrance (point 0 0))", "expects 2 argument"),
    ("(frobnicate 1)", "unknown operator"),
    ("(point 1 2", "unbalanced"),
    ("(point 1 2))", "trailing"),
    (")", r"unexpected '\)'"),
    ("", "empty"),
    ("(point 1)", "takes 2"),
    ("(point (add 1 1) 2)", "rational literals"),
    ("(spread (point 0 0) (line 1 0 0))", "must be line"),
    ("(apply (line 1 0 0) (point 0 0))", "must be versor"),
    ("(1 2)", "operator name"),
    ("foo", "unexpected symbol"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ExprError, match=fragment):
        parse(text)


def test_category_error_points_at_argument():
    with pytest.raises(ExprError) as info:
        parse("(spread\n  (point 0 0) (line 1 0 0))")
    assert (info.value.line, info.value.col) == (2, 3)


def test_static_kinds_flow_through_polymorphic_operators():
    # reflect returns the kind of its second argument, so this is a type error
    with pytest.raises(ExprError, match="must be point"):
        parse("(quadrance (reflect (line 1 0 0) (line 0 1 0)) (point 0 0))")
    parse("(quadrance (reflect (line 1 0 0) (point 1 2)) (point 0 0))")


@pytest.mark.parametrize("text", [
    "(quadrance (point 0 0) (point 3 4))",
    "(mv 1 0 -1/2 0 0 0 0 3)",
    "(apply (rotor (line 1 0 0) (line 0 1 0)) (ideal-point 1 0))",
    "(median (point 0 0) (point 1 0) (point 0 1) 2)",
    "true",
])
def test_unparse_round_trip(text):
    assert unparse(parse(text)) == text


def test_every_operator_has_arity_and_result_kind():
    for name, op in OPERATORS.items():
        assert op.params, name
        assert op.result(["multivector"] * len(op.params)) in {
            "rational", "point", "line", "multivector", "versor", "boolean"}
