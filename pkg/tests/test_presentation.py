from importlib import resources

import pytest

from smctensor.corpus import CORPUS, corpus, sline, terminal, z2
from smctensor.presentation import (AxiomError, PresentationError, emit_presentation, format_atom, parse_atom,
                                    parse_edge, parse_path, parse_presentation, parse_presentation_text, parse_word,
                                    same_tables)
from smctensor.tenspres import TenSmc
from smctensor.canonical import default_grid


def fixture(name):
    return str(resources.files("smctensor") / "fixtures" / f"{name}.smc")


MINIMAL = """\
name Tiny
unit 0
[objects]
0
[arrows]
i 0 0
[id]
0 i
[comp]
i i i
[tensor_obj]
0 0 0
[tensor_arr]
i i i
"""


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_fixtures_match_corpus(name):
    parsed = parse_presentation(fixture(name))
    assert same_tables(parsed, corpus()[name])


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_round_trip(name):
    text = emit_presentation(corpus()[name])
    again = parse_presentation_text(text)
    assert emit_presentation(again) == text


def test_shipped_terminal_and_z2():
    assert same_tables(parse_presentation(fixture("terminal")), terminal())
    s = parse_presentation(fixture("z2"))
    assert s.tensor_obj(1, 1) == 0 and s.unit == 0


def test_missing_tables_default_to_identities():
    s = parse_presentation_text(MINIMAL)
    assert s.name == "Tiny"
    assert s.tensor_obj(0, 0) == 0 and s.s(0, 0) == "i"


def test_comments_and_quoted_atoms():
    text = MINIMAL.replace("i 0 0", 'i 0 0  # the identity').replace("[objects]\n0", "[objects]\n0 # only one")
    assert same_tables(parse_presentation_text(text), parse_presentation_text(MINIMAL))
    assert parse_atom('"a b"') == "a b"
    assert parse_atom("'#'") == "#"
    assert parse_atom("(1,'*')") == (1, "*")
    assert format_atom("a b") == '"a b"'
    assert format_atom("1") == '"1"'
    assert format_atom((0, "x")) == "(0,x)"


def test_broken_comp_row_names_its_line():
    text = MINIMAL.replace("i i i", "i i j")
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(text, "tiny.smc")
    assert err.value.line == 10
    assert str(err.value).startswith("tiny.smc:10:")
    with pytest.raises(PresentationError, match="no entry"):
        parse_presentation_text(MINIMAL.replace("[tensor_obj]\n0 0 0", "[tensor_obj]"))


@pytest.mark.parametrize("old,new,line", [
    ("i 0 0", "i 0 5", 6), ("[objects]", "[objectz]", 3), ("unit 0", "unit 7", 2), ("0 i", "0 k", 8),
])
def test_other_parse_errors(old, new, line):
    with pytest.raises(PresentationError) as err:
        parse_presentation_text(MINIMAL.replace(old, new), "t.smc")
    assert err.value.line == line


def test_axiom_failure_names_laws(tmp_path):
    text = emit_presentation(z2()).replace("[tensor_obj]\n0 0 0\n0 1 1", "[tensor_obj]\n0 0 0\n0 1 0") \
        .replace("[tensor_arr]\n0 0 0\n0 1 1", "[tensor_arr]\n0 0 0\n0 1 0")
    path = tmp_path / "bad.smc"
    path.write_text(text)
    with pytest.raises(AxiomError) as err:
        parse_presentation(path)
    assert "smcaxiom3" in str(err.value)
    assert parse_presentation(path, validate=False).tensor_obj(0, 1) == 0


def test_word_and_path_grammar():
    tp = TenSmc(sline(), terminal())
    for e in default_grid(tp, 2).edges:
        assert parse_edge(repr(e), tp) is e
    w = parse_word("[(0,*)*(1,*)]*I")
    assert repr(w) == "[[(0,'*')*(1,'*')]*I]"
    p = parse_path("sym((1,*),(1,*)); sym((1,*),(1,*))", tp)
    assert len(p.edges) == 2
    assert parse_path("id((1,*))", tp).is_identity()
    # the inverse of sym(x, y) is sym(y, x)
    assert parse_edge("sym~((0,*),(1,*))", tp) is parse_edge("sym((1,*),(0,*))", tp)
    with pytest.raises(ValueError):
        parse_path("sym((0,*),(1,*)); sym((0,*),(1,*))", tp)
