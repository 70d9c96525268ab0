import pytest

from fock_entanglement.errors import ExpressionSyntaxError
from fock_entanglement.operators import (
    Annihilate,
    Create,
    Power,
    Product,
    Scalar,
    Sum,
    max_mode,
    number_operator_expr,
    parse,
    to_string,
    tokenize,
)


def test_parse_simple_product():
    assert parse("ad(1)*a(1)") == Product((Create(1), Annihilate(1)))


def test_parse_power():
    assert parse("ad(1)^2") == Power(Create(1), 2)


def test_parse_property_projector_expression():
    occupation = Product((Create(1), Annihilate(1)))
    expected = Product(
        (
            Scalar(0.5),
            Create(1),
            Annihilate(1),
            Sum((Scalar(3), Product((Scalar(-1), Create(1), Annihilate(1))))),
        )
    )
    parsed = parse("0.5*ad(1)*a(1)*(3 - ad(1)*a(1))")
    assert parsed == expected
    assert occupation.factors == parsed.factors[1:3]


def test_parse_complex_literal_and_whitespace():
    assert parse(" (0.5, -2e-1) * a(3) ") == Product((Scalar(0.5 - 0.2j), Annihilate(3)))


def test_parse_number_operator_range():
    assert parse("N(1..3)") == number_operator_expr(range(1, 4))
    assert parse("N(2)") == number_operator_expr([2])


def test_parse_unary_minus():
    assert parse("-a(2)") == Product((Scalar(-1), Annihilate(2)))
    assert parse("-2") == Scalar(-2)


def test_max_mode():
    assert max_mode(parse("ad(1)*a(4) + 2*ad(2)")) == 4
    assert max_mode(parse("3")) == 0


def test_to_string_parses_back_to_same_tree():
    text = "0.5*ad(1)*a(1)*(3 - ad(1)*a(1)) + (ad(2) + a(1))^3"
    expr = parse(text)
    assert parse(to_string(expr)) == expr


@pytest.mark.parametrize(
    "text, offset",
    [
        ("ad(1)*", 6),
        ("ad(0)", 3),
        ("b(1)", 0),
        ("ad(1", 4),
        ("ad(1) $ a(2)", 6),
        ("ad(1)^x", 6),
        ("N(3..1)", 0),
        ("ad(1))", 5),
    ],
)
def test_syntax_errors_carry_byte_offset(text, offset):
    with pytest.raises(ExpressionSyntaxError) as e:
        parse(text)
    assert e.value.offset == offset


def test_non_ascii_character_is_rejected():
    with pytest.raises(ExpressionSyntaxError) as e:
        parse("ad(1) * â(2)")
    assert e.value.offset == 8


def test_tokenize_ends_with_end_token():
    tokens = tokenize("ad(1)")
    assert [token.kind for token in tokens] == ["NAME", "OP", "NUMBER", "OP", "END"]
