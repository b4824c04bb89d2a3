import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qosp import pbw
from qosp.exprparse import Add, Mul, ParseError, Pow, Symbol, parse, parse_element, parse_scalar, strip_positions
from qosp.scalars import generic_field, root_field

from conftest import random_element

GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_exprs.json").read_text())
SCASIMIR_TEXT = "s*k - s^-1*k^-1 - (s+s^-1)*(q-q^-1)*f*e"


def test_golden_corpus_size():
    assert len(GOLDEN) == 30


@pytest.mark.parametrize("item", GOLDEN, ids=[g["expr"] for g in GOLDEN])
@pytest.mark.parametrize("field", [generic_field(), root_field(5)], ids=["generic", "l5"])
def test_golden(item, field):
    x = parse_element(item["expr"], field)
    if "equals" in item:
        assert x == parse_element(item["equals"], field)
    assert parse_element(str(x), field) == x


def test_ast_shapes():
    e, f = Symbol("e"), Symbol("f")
    assert strip_positions(parse("e*f + f*e")) == Add(Mul(e, f), Mul(f, e))
    assert strip_positions(parse("q^2*k^-3")) == Mul(Pow(Symbol("q"), 2), Pow(Symbol("k"), -3))


def test_lowering_examples(field):
    assert parse_element("e*f + f*e", field) == parse_element("(k - k^-1)/(q - q^-1)", field)
    assert parse_element("1", field) == pbw.identity(field)
    assert parse_element(SCASIMIR_TEXT, field) == pbw.scasimir(field)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("e^-1", 1),
        ("f^-2*k", 1),
        ("ef", 0),
        ("e*", 2),
        ("k^s", 2),
        ("k^(1/2)", 4),
        ("e/f", 1),
        ("(e", 2),
        ("e $ f", 2),
        ("", 0),
        ("e f", 2),
        ("1/0", 1),
    ],
)
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_element(text, generic_field())
    assert info.value.offset == offset


def test_z_only_at_roots():
    with pytest.raises(ParseError):
        parse_element("z", generic_field())
    F = root_field(3)
    assert parse_scalar("z^4", F) == F.q


def test_scalar_strings_round_trip(field, rng):
    for _ in range(30):
        c = field.eta ** rng.randint(-2, 2) * (field.q_half + rng.randint(1, 4)) ** rng.randint(-2, 2)
        assert parse_scalar(str(c), field) == c


def test_parse_scalar_rejects_elements():
    with pytest.raises(ParseError):
        parse_scalar("e", generic_field())


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip_random_elements(seed):
    F = root_field(4) if seed % 2 else generic_field()
    x = random_element(F, random.Random(seed))
    assert parse_element(str(x), F) == x
