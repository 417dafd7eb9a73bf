#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import json
import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.codec import (  # noqa
    MalformedInputError,
    decode_braid,
    decode_complex,
    decode_element,
    decode_forest,
    decode_graph,
    decode_morphism,
    decode_permutation,
    decode_rotation,
    decode_unit,
    encode,
    parse_document,
    read_document,
    to_text,
)
from ore_thompson.forest_cat import Forest, normal_form  # noqa
from ore_thompson.fraction_groups import eq  # noqa
from ore_thompson.graph_rewrite import basilica_graph  # noqa
from ore_thompson.unit_groupoids import Braid, Permutation, Rotation  # noqa
from support import DATA_DIR  # noqa


@pytest.mark.parametrize(
    "document, expected",
    [
        ("F(1;1,1)", normal_form((1, 1), 1)),
        ({"arity": 2, "roots": 2, "word": [2]}, Forest.caret(2, 2)),
        ("F3(1;1)", Forest.caret(1, 1, arity=3)),
    ],
)
def test_decode_forest(document, expected):
    assert decode_forest(document) == expected


@pytest.mark.parametrize("document", ["F(1;3)", "G(1;1)", {"roots": 1}, 7])
def test_decode_forest_rejects(document):
    with pytest.raises(MalformedInputError):
        decode_forest(document)


@pytest.mark.parametrize(
    "family, document, expected",
    [
        ("V", "Sym3[2, 1, 3]", Permutation((2, 1, 3))),
        ("V", [2, 1], Permutation((2, 1))),
        ("F", {"n": 2, "img": [1, 2]}, Permutation.identity(2)),
        ("T", "rot(1 mod 3)", Rotation(3, 1)),
        ("T", {"n": 4, "shift": 2}, Rotation(4, 2)),
        ("BV", "B3[1, -2]", Braid(3, (1, -2))),
        ("BF", {"n": 2, "word": [1, 1]}, Braid(2, (1, 1))),
    ],
)
def test_decode_unit(family, document, expected):
    assert decode_unit(family, document) == expected


@pytest.mark.parametrize(
    "decoder, document",
    [
        (decode_permutation, "Sym3[2, 1]"),
        (decode_permutation, "Sym2[1, 1]"),
        (decode_rotation, "rot(1 of 3)"),
        (decode_braid, "B3[3]"),
        (decode_braid, {"word": [1]}),
    ],
)
def test_decode_unit_rejects(decoder, document):
    with pytest.raises(MalformedInputError) as error:
        decoder(document)
    assert error.value.source == document


def test_decode_unit_unknown_family():
    with pytest.raises(MalformedInputError):
        decode_unit("W", "Sym1[1]")


def test_decode_element_text_and_json():
    """Test that the text form and the JSON form give the same element"""
    text = decode_element("V[F(1;1) | Sym2[2, 1] | F(1;1)]")
    assert text.family == "V"
    assert text.unit == Permutation((2, 1))
    document = decode_element(json.loads(json.dumps(text.to_json())))
    assert eq(text, document)
    assert str(text) == "V[F(1;1) | Sym2[2, 1] | F(1;1)]"


def test_decode_element_family_check():
    with pytest.raises(MalformedInputError):
        decode_element("V[F(1;1) | Sym2[2, 1] | F(1;1)]", family="T")
    with pytest.raises(MalformedInputError):
        decode_element("V[F(1;1) | Sym3[2, 1, 3] | F(1;1)]")
    with pytest.raises(MalformedInputError):
        decode_element("not an element")
    assert decode_element("T[F(1;1) | rot(1 mod 2) | F(1;1)]", family="T").unit == Rotation(2, 1)


def test_decode_morphism():
    morphism = decode_morphism({"family": "V", "forest": "F(1;1)", "unit": "Sym2[2, 1]"})
    assert morphism.forest == Forest.caret(1, 1)
    with pytest.raises(MalformedInputError):
        decode_morphism({"family": "V", "forest": "F(1;1)", "unit": "Sym3[2, 1, 3]"})
    with pytest.raises(MalformedInputError):
        decode_morphism({"family": "T", "forest": "F(1;1)", "unit": "Sym2[2, 1]"})


def test_decode_complex_and_graph():
    complex_ = decode_complex({"vertices": ["a", "b", "c"], "facets": [[0, 1], [1, 2]]})
    assert complex_.f_vector() == [3, 2]
    with pytest.raises(MalformedInputError):
        decode_complex({"vertices": ["a"], "facets": [[0, 4]]})
    assert decode_graph(read_document(os.path.join(DATA_DIR, "basilica.json"))) == basilica_graph()
    with pytest.raises(MalformedInputError):
        decode_graph({"vertices": ["x"], "edges": [{"id": "a", "src": "x", "dst": "y"}]})


def test_parse_document():
    assert parse_document(" F(1;1) ") == "F(1;1)"
    assert parse_document('{"n": 2, "img": [2, 1]}') == {"n": 2, "img": [2, 1]}
    with pytest.raises(MalformedInputError):
        parse_document("{not json")


def test_read_document(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(MalformedInputError):
        read_document(str(broken))
    with pytest.raises(FileNotFoundError):
        read_document(str(tmp_path / "missing.json"))


def test_encode():
    assert encode(Permutation((2, 1))) == {"n": 2, "img": [2, 1]}
    assert encode((Rotation(3, 1), 4)) == [{"n": 3, "shift": 1}, 4]
    assert encode({1: Braid(2, (1,))}) == {"1": {"n": 2, "word": [1]}}
    assert encode(frozenset({"b", "a"})) == ["a", "b"]
    assert encode(None) is None


def test_to_text():
    assert to_text(normal_form((1, 1), 1)) == "F(1;1,1)"
    assert to_text(Rotation(3, 1)) == "rot(1 mod 3)"
