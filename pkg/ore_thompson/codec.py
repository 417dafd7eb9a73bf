#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""codec module reads and writes the JSON and text forms of every object the
command line accepts: forests, units, braids, group elements, complexes and
graphs.

Decoders accept either the JSON document or the text form, for example
"F(1;1,1)", "Sym3[2, 1, 3]", "rot(1 mod 3)", "B3[1, -2]" or
"V[F(1;1) | Sym2[2, 1] | F(1;1)]". Every decoding problem surfaces as
MalformedInputError.
"""
import json
import re

from .complexes import SimplicialComplex
from .constant import BRAIDED_FAMILIES, FAMILIES, T
from .forest_cat import CaretIndexError, Forest
from .fraction_groups import FractionElement
from .graph_rewrite import MultiGraph
from .unit_groupoids import Braid, Permutation, Rotation
from .utils import canonical_json
from .zs_product import BoundaryMismatchError, FamilyViolationError, IndirectMorphism

PERMUTATION_TEXT_PATTERN = re.compile(r"^Sym(\d+)\[([\d,\s]*)\]$")
ROTATION_TEXT_PATTERN = re.compile(r"^rot\((-?\d+) mod (\d+)\)$")
BRAID_TEXT_PATTERN = re.compile(r"^B(\d+)\[([-\d,\s]*)\]$")
ELEMENT_TEXT_PATTERN = re.compile(r"^(\w+)\[(.+)\|(.+)\|(.+)\]$")


class MalformedInputError(Exception):
    """Exception raised when an input document cannot be decoded.

    Attributes:
        source -- the offending document, file name or text
        reason -- what was wrong with it
    """

    def __init__(self, source, reason):
        super().__init__(f"Malformed input {source!r}: {reason}")
        self.source = source
        self.reason = reason


def _integers(text):
    return [int(item) for item in text.split(",") if item.strip()]


def read_document(path):
    """Loads a JSON document from a file; FileNotFoundError is left to the caller"""
    with open(path, encoding="utf-8") as stream:
        try:
            return json.load(stream)
        except json.JSONDecodeError as exception:
            raise MalformedInputError(path, str(exception))


def parse_document(text):
    """Parses a command line argument: JSON when it looks like JSON, text otherwise"""
    stripped = text.strip()
    if stripped[:1] not in ("{", "["):
        return stripped
    try:
        return json.loads(stripped)
    except json.JSONDecodeError as exception:
        raise MalformedInputError(text, str(exception))


def decode_forest(document):
    try:
        if isinstance(document, str):
            return Forest.from_text(document)
        return Forest.from_json(document)
    except (KeyError, TypeError, ValueError, CaretIndexError) as exception:
        raise MalformedInputError(document, f"not a forest ({exception})")


def decode_permutation(document):
    try:
        if isinstance(document, str):
            match = PERMUTATION_TEXT_PATTERN.match(document.strip())
            if not match:
                raise ValueError("expected Sym<n>[...]")
            image = _integers(match.group(2))
            if len(image) != int(match.group(1)):
                raise ValueError("degree and image length differ")
            return Permutation(tuple(image))
        if isinstance(document, list):
            return Permutation(tuple(document))
        return Permutation(tuple(document["img"]))
    except (KeyError, TypeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a permutation ({exception})")


def decode_rotation(document):
    try:
        if isinstance(document, str):
            match = ROTATION_TEXT_PATTERN.match(document.strip())
            if not match:
                raise ValueError("expected rot(<shift> mod <n>)")
            return Rotation(int(match.group(2)), int(match.group(1)))
        return Rotation(document["n"], document["shift"])
    except (KeyError, TypeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a rotation ({exception})")


def decode_braid(document):
    try:
        if isinstance(document, str):
            match = BRAID_TEXT_PATTERN.match(document.strip())
            if not match:
                raise ValueError("expected B<n>[...]")
            return Braid(int(match.group(1)), tuple(_integers(match.group(2))))
        return Braid(document["n"], tuple(document.get("word", ())))
    except (KeyError, TypeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a braid ({exception})")


def decode_unit(family, document):
    """Decodes a unit of the given family: rotations for T, braids for the
    braided families and permutations otherwise"""
    if family not in FAMILIES:
        raise MalformedInputError(family, f"unknown family, expected one of {', '.join(FAMILIES)}")
    if family == T:
        return decode_rotation(document)
    if family in BRAIDED_FAMILIES:
        return decode_braid(document)
    return decode_permutation(document)


def decode_element(document, family=None):
    """Decodes a group element; a family given on the command line must agree"""
    try:
        if isinstance(document, str):
            match = ELEMENT_TEXT_PATTERN.match(document.strip())
            if not match:
                raise MalformedInputError(document, "expected <family>[num | unit | den]")
            document = {
                "family": match.group(1),
                "num": match.group(2).strip(),
                "unit": match.group(3).strip(),
                "den": match.group(4).strip(),
            }
        element_family = document.get("family", family)
        if family and element_family != family:
            raise MalformedInputError(document, f"element of {element_family} given where {family} was asked for")
        return FractionElement(
            element_family,
            decode_forest(document["num"]),
            decode_unit(element_family, document["unit"]),
            decode_forest(document["den"]),
        )
    except (KeyError, TypeError, AttributeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a group element ({exception})")


def decode_morphism(document):
    """Decodes a morphism (f, g) of an indirect product"""
    try:
        family = document["family"]
        return IndirectMorphism(decode_forest(document["forest"]), decode_unit(family, document["unit"]), family)
    except (KeyError, TypeError, ValueError, FamilyViolationError, BoundaryMismatchError) as exception:
        raise MalformedInputError(document, f"not an indirect product morphism ({exception})")


def decode_complex(document):
    try:
        return SimplicialComplex.from_json(document)
    except (KeyError, TypeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a simplicial complex ({exception})")


def decode_graph(document):
    try:
        return MultiGraph.from_json(document)
    except (KeyError, TypeError, ValueError) as exception:
        raise MalformedInputError(document, f"not a graph ({exception})")


def encode(value):
    """JSON form of any object of the package, plain values unchanged"""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [encode(item) for item in value]
    if isinstance(value, dict):
        return {str(key): encode(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((encode(item) for item in value), key=canonical_json)
    return value


def to_text(value):
    return value.to_text() if hasattr(value, "to_text") else str(value)
