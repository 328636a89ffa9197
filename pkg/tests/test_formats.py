from pathlib import Path

import pytest

from crossnerve.constructions import (
    bar_construction, dihedral_nerve, one_object_nerve, twisted_bar, twisted_categorical_nerve,
)
from crossnerve.finite import (
    cyclic_group, groupoid_from_group, indiscrete_groupoid, quaternion_group, symmetric_group,
    validate_dagger, validate_group,
)
from crossnerve.formats import (
    ParseError, category_to_text, dump_object, group_to_text, load_object, parse_category,
    parse_group,
)
from crossnerve.weyl import Family

DATA = Path(__file__).parent / "data"


def test_two_element_group():
    G = parse_group("group C2\nelements e a\nmul e a\nmul a e\n")
    assert G.order == 2 and G.names == ("e", "a")
    assert G.mul == ((0, 1), (1, 0))


def test_s3_file_validates():
    G = parse_group((DATA / "S3.grp").read_text())
    assert G.order == 6 and validate_group(G).ok
    assert G == symmetric_group(3)


def test_wrong_row_length_names_line():
    with pytest.raises(ParseError) as err:
        parse_group((DATA / "bad_row.grp").read_text())
    assert err.value.line == 4
    assert "line 4" in str(err.value)


@pytest.mark.parametrize("text,where", [
    ("group X\nelements e e\nmul e e\nmul e e\n", 2),
    ("group X\nelements e a\nmul e a\nmul a b\n", 4),
    ("group X\nmul e\n", 2),
    ("group X\nelements e a\nmul e a\nmul a e\nfoo\n", 5),
])
def test_group_parse_errors_have_lines(text, where):
    with pytest.raises(ParseError) as err:
        parse_group(text)
    assert err.value.line == where


def test_group_table_must_be_a_group():
    with pytest.raises(ParseError, match="not a group|missing"):
        parse_group("group M\nelements 1 p\nmul 1 p\nmul p p\n")
    with pytest.raises(ParseError):
        parse_group("group M\nelements 1 p\nmul 1 p\n")


def test_unknown_element_column():
    with pytest.raises(ParseError) as err:
        parse_group("group X\nelements e a\nmul e a\nmul a zz\n")
    assert (err.value.line, err.value.col) == (4, 7)


@pytest.mark.parametrize("G", [cyclic_group(4), symmetric_group(3), quaternion_group()], ids=lambda G: G.name)
def test_group_text_round_trip(G):
    assert parse_group(group_to_text(G)) == G


@pytest.mark.parametrize("C", [groupoid_from_group(symmetric_group(3)), indiscrete_groupoid(cyclic_group(2))],
                         ids=lambda C: C.name)
def test_category_text_round_trip(C):
    D = parse_category(category_to_text(C))
    assert D == C
    assert validate_dagger(D).ok


def test_category_files():
    C = parse_category((DATA / "I2C2.cat").read_text())
    assert len(C.objects) == 2 and C.size == 8
    M = parse_category((DATA / "M2.cat").read_text())
    assert M.dagger == (0, 1)


@pytest.mark.parametrize("text,msg", [
    ("category X\nobjects a\nmor f a a\ncomp f f f\n", "no identity"),
    ("category X\nobjects a\nmor f a b\n", "unknown object"),
    ("category X\nobjects a\nmor f a a\nmor f a a\n", "duplicate morphism"),
    ("category X\nobjects a\nmor 1 a a\nmor f a a\nid a 1\ncomp 1 1 1\ncomp 1 f f\ncomp f 1 f\n", "missing"),
    ("category X\nobjects a\nmor 1 a a\nmor f a a\nid a 1\ncomp 1 1 1\ncomp 1 f f\ncomp f 1 f\ncomp f f f\ndagger 1 1\n",
     "dagger not given"),
    ("category X\nobjects a\nmor f,g a a\n", "may not contain"),
    ("category X\nobjects a\nmor 1 a a\nid a 1\ncomp 1 1 1\ncomp 1 1 1\n", "given twice"),
])
def test_category_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_category(text)


def test_category_without_dagger_is_allowed():
    text = "category X\nobjects a\nmor 1 a a\nmor p a a\nid a 1\ncomp 1 1 1\ncomp 1 p p\ncomp p 1 p\ncomp p p p\n"
    assert parse_category(text).dagger is None


@pytest.mark.parametrize("X", [
    bar_construction(symmetric_group(3), Family.WEYL, 2),
    dihedral_nerve(indiscrete_groupoid(cyclic_group(2)), 3),
    twisted_bar(Family.DIHEDRAL, quaternion_group(), "-1", 3),
    one_object_nerve(groupoid_from_group(cyclic_group(3)), Family.REFLEXOSYMMETRIC, 2),
    twisted_categorical_nerve(Family.CYCLIC, groupoid_from_group(cyclic_group(2)), 2),
], ids=lambda X: X.name)
def test_object_round_trip(X):
    text = dump_object(X)
    Y = load_object(text)
    assert Y == X and Y.name == X.name
    assert dump_object(Y) == text


def test_truncated_object_rejected():
    text = dump_object(bar_construction(cyclic_group(2), Family.CYCLIC, 2))
    cut = "\n".join(text.splitlines()[:-5]) + "\n"
    with pytest.raises(ParseError, match="end"):
        load_object(cut)


@pytest.mark.parametrize("edit,msg", [
    (lambda t: t.replace("crossed-set cyclic", "crossed-set spiral"), "spiral"),
    (lambda t: t.replace("level 1 4", "level 1 5"), "header says"),
    (lambda t: t.replace("face 1 0 0", "face 1 0 q"), "bad index"),
    (lambda t: "name x\n" + t, "must start"),
    (lambda t: t + "x 0\n", "after 'end'"),
])
def test_malformed_object_rejected(edit, msg):
    text = dump_object(bar_construction(cyclic_group(2), Family.CYCLIC, 2))
    with pytest.raises(ParseError, match=msg):
        load_object(edit(text))
