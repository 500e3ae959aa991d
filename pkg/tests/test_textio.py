"""Structured-text round trips and parse errors with line numbers."""

import pytest

from matsuki.errors import ParseError
from matsuki.loopmatrix import (
    Gaussian,
    LaurentPoly,
    diagonal_loop,
    lm_from_rows,
    loops_equal,
)
from matsuki.realform import catalog, catalog_names
from matsuki.textio import (
    format_involution,
    format_matrix,
    format_root_datum,
    parse_involution,
    parse_matrix,
    parse_root_datum,
)

SL2_TEXT = """\
name: sl2
rank: 1
simple: 0
roots:
2
-2
coroots:
1
-1
"""


def test_root_datum_round_trip():
    datum = parse_root_datum(SL2_TEXT)
    assert datum.rank == 1
    assert datum.roots == ((2,), (-2,))
    assert parse_root_datum(format_root_datum(datum)) == datum


def test_root_datum_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_root_datum("name: x\nrank: huh\nsimple: 0\n")
    with pytest.raises(ParseError, match="line 6"):
        parse_root_datum("name: x\nrank: 1\nsimple: 0\nroots:\n2\nnot numbers\ncoroots:\n1\n")
    with pytest.raises(ParseError, match="missing required key"):
        parse_root_datum("rank: 1\nsimple: 0\n")


def test_involution_with_inline_datum():
    text = SL2_TEXT.replace("name: sl2", "name: my_split") + "theta:\n1\n"
    spec = parse_involution(text)
    assert spec.name == "my_split"
    assert spec.theta == ((1,),)


def test_involution_with_catalog_reference():
    spec = parse_involution("name: borrowed\ndatum: sl3_split\ntheta:\n0 1\n1 0\n")
    assert spec.datum.rank == 2
    assert spec.theta == ((0, 1), (1, 0))


def test_invalid_involution_rejected():
    text = SL2_TEXT.replace("name: sl2", "name: broken") + "theta:\n2\n"
    with pytest.raises(Exception, match="squared"):
        parse_involution(text)


def test_catalog_entries_round_trip_through_files():
    for name in catalog_names():
        entry = catalog(name)
        text = format_involution(entry)
        spec = parse_involution(text)
        assert spec.theta == entry.theta
        assert spec.datum.roots == entry.datum.roots
        assert spec.name == entry.name


def test_matrix_round_trip():
    g = lm_from_rows(
        "gl2_split",
        [
            [LaurentPoly.one(), LaurentPoly({-1: Gaussian(1, 0), 2: Gaussian(0, -1)})],
            [LaurentPoly.zero(), LaurentPoly.one()],
        ],
    )
    text = format_matrix(g)
    assert loops_equal(parse_matrix(text), g)


def test_matrix_identity_file():
    text = "form: gl2_split\nsize: 2\nentry 1 1: (0, 1/1, 0/1)\nentry 2 2: (0, 1/1, 0/1)\n"
    g = parse_matrix(text)
    assert loops_equal(g, diagonal_loop("gl2_split", (0, 0)))


def test_matrix_parse_errors():
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix("form: nonsense\nsize: 2\n")
    with pytest.raises(ParseError, match="size"):
        parse_matrix("form: gl2_split\nsize: 3\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix("form: gl2_split\nsize: 2\nentry 1 1: (0, 1/1, junk)\n")
    with pytest.raises(ParseError, match="duplicate entry"):
        parse_matrix(
            "form: gl2_split\nsize: 2\nentry 1 1: (0, 1/1, 0/1)\nentry 1 1: (0, 1/1, 0/1)\n"
        )
    with pytest.raises(ParseError, match="unparsed"):
        parse_matrix("form: gl2_split\nsize: 2\nentry 1 1: (0, 1/1, 0/1) leftover\n")


def test_matrix_file_must_satisfy_form_invariant():
    # sl2 form demands determinant one
    text = "form: sl2_split\nsize: 2\nentry 1 1: (1, 1/1, 0/1)\nentry 2 2: (0, 1/1, 0/1)\n"
    with pytest.raises(Exception, match="determinant"):
        parse_matrix(text)
