import pytest

from mwb.core import from_facets
from mwb.errors import ParseError
from mwb.flips import FlipMove
from mwb.tri_io import (parse, parse_coords, parse_trace, write, write_trace)


def test_round_trip_is_identity(complexes):
    for C in complexes.values():
        assert parse(write(C)) == C
        assert write(parse(write(C))) == write(C)


def test_letter_labels_are_accepted_on_input(complexes):
    C = complexes["L31-12"]
    header, *body = write(C).splitlines()
    letters = [" ".join("abc"[int(t) - 10] if int(t) >= 10 else t
                        for t in line.split())
               for line in body]
    assert parse("\n".join([header] + letters)) == C


def test_output_is_always_decimal(complexes):
    text = write(complexes["L31-12"])
    body = [l for l in text.splitlines()[1:]]
    assert all(tok.isdigit() for line in body for tok in line.split())


def test_comments_and_blank_lines_are_ignored():
    C = parse("# a comment\n\n2 4\n1 2 3\n1 2 4\n# mid comment\n1 3 4\n2 3 4\n")
    assert C == from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse("2 4\n1 2 3\n1 2\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        parse("2 4\n1 2 5\n")  # label out of range
    with pytest.raises(ParseError):
        parse("2\n1 2 3\n")  # bad header
    with pytest.raises(ParseError):
        parse("2 5\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n")  # header/body mismatch
    with pytest.raises(ParseError):
        parse("# nothing\n")
    with pytest.raises(ParseError):
        parse("2 4\n1 2 2\n")


def test_trace_round_trip():
    trace = [FlipMove(0, (1, 2, 3), (5,)), FlipMove(2, (5,), (1, 2, 3))]
    assert parse_trace(write_trace(trace)) == trace


def test_coordinate_parsing():
    coords = parse_coords("# c\n1 0 0 0\n2 1/2 -3 0.25\n")
    from fractions import Fraction
    assert coords[1] == (0, 0, 0)
    assert coords[2] == (Fraction(1, 2), -3, Fraction(1, 4))
    with pytest.raises(ParseError):
        parse_coords("1 0 0\n")
