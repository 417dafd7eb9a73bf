#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""zs_product module contains the indirect (Zappa-Szep) product combinator.

    A category F x| G is given by mutual actions: a unit g acts on a morphism f
    at f's target (g . f, parallel to f) and f acts back on g (g^f, a unit at
    f's source), such that gf = (g . f) g^f. Action tables implement the two
    actions for a family; the axioms IP1-IP8 are checked generically on the
    instances a table enumerates.

    Morphisms of the product are pairs (f, g) standing for f o g, the unit
    nearest the source.
"""
import functools
import itertools
import logging
from dataclasses import dataclass, field

from .constant import BF, BT, BV, CUSTOM, F, IP_AXIOMS, T, V
from .forest_cat import Forest, compose, normal_form
from .utils import seeded_random
from .unit_groupoids import (
    Braid,
    Permutation,
    Rotation,
    braid_project,
    is_cyclic,
    is_pure,
    rotation_of,
)

# Largest degree of the exhaustive pi-equivariance samples
EQUIVARIANCE_DEGREE = 4

# Component kinds of the instances of each axiom: "u" unit, "m" morphism
AXIOM_SIGNATURES = {
    "IP1": "m",
    "IP2": "u",
    "IP3": "uum",
    "IP4": "umm",
    "IP5": "m",
    "IP6": "u",
    "IP7": "uum",
    "IP8": "umm",
}


class FamilyViolationError(Exception):
    """Exception raised when a unit does not belong to the family of a table.

    Attributes:
        family -- family tag of the table
        unit -- offending unit
    """

    def __init__(self, family, unit):
        super().__init__(f"{unit} is not a unit of the family {family}.")
        self.family = family
        self.unit = unit


class BoundaryMismatchError(Exception):
    """Exception raised when a unit and a morphism do not meet at an object.

    Attributes:
        left -- first operand
        right -- second operand
    """

    def __init__(self, left, right, reason="objects differ"):
        super().__init__(f"{left} and {right} are not composable: {reason}.")
        self.left = left
        self.right = right


class NotInImageError(Exception):
    """Exception raised when a unit is not the clone of any unit at the given caret.

    Attributes:
        unit -- the unit that was to be recovered
        caret -- caret index or morphism it was cloned along
    """

    def __init__(self, unit, caret):
        super().__init__(f"{unit} is not in the image of cloning along {caret}.")
        self.unit = unit
        self.caret = caret


class ActionTable:
    """Base interface for the mutual actions of an indirect product.

    Inherit from it and implement the action methods and axiom_instances;
    check_ip_axioms() works on any implementation.
    """

    family = CUSTOM
    trusted = True

    def act(self, unit, morphism):
        """g . f"""
        raise NotImplementedError

    def clone(self, unit, morphism):
        """g^f"""
        raise NotImplementedError

    def compose_units(self, first, second):
        """first o second, second applied first"""
        raise NotImplementedError

    def compose_morphisms(self, first, second):
        raise NotImplementedError

    def unit_identity(self, obj):
        raise NotImplementedError

    def morphism_identity(self, obj):
        raise NotImplementedError

    def morphism_target(self, morphism):
        """Object where units act on the morphism"""
        raise NotImplementedError

    def morphism_source(self, morphism):
        raise NotImplementedError

    def unit_domain(self, unit):
        raise NotImplementedError

    def unit_codomain(self, unit):
        raise NotImplementedError

    def units_equal(self, first, second):
        return first == second

    def morphisms_equal(self, first, second):
        return first == second

    def encode_unit(self, unit):
        return unit.to_json()

    def encode_morphism(self, morphism):
        return morphism.to_json()

    def axiom_instances(self, bound):
        """Returns a dict from axiom name to a list of instance tuples"""
        raise NotImplementedError


class ForestActionTable(ActionTable):
    """Actions of a unit groupoid on the forest category F_d.

    Subclasses provide the generator-level maps act_on_caret (g . lambda_i =
    lambda_{act_on_caret(g, i)}) and clone_caret (g^lambda_i); act and clone
    extend them along canonical caret words.
    """

    def __init__(self, arity=2):
        self.arity = arity

    def identity(self, n):
        raise NotImplementedError

    def is_member(self, unit):
        raise NotImplementedError

    def units(self, n):
        """Units of degree n used by the exhaustive checks"""
        raise NotImplementedError

    def act_on_caret(self, unit, index):
        raise NotImplementedError

    def clone_caret(self, unit, index):
        raise NotImplementedError

    def permutation_of(self, unit):
        """Image of the unit in the symmetric group"""
        raise NotImplementedError

    def _check(self, unit, forest):
        if not self.is_member(unit):
            raise FamilyViolationError(self.family, unit)
        if forest.arity != self.arity:
            raise BoundaryMismatchError(unit, forest, f"table arity is {self.arity}")
        if unit.degree != forest.roots:
            raise BoundaryMismatchError(unit, forest, f"degree {unit.degree} against {forest.roots} roots")

    def _walk(self, unit, forest):
        indices = []
        for index in forest.word:
            indices.append(self.act_on_caret(unit, index))
            unit = self.clone_caret(unit, index)
        return normal_form(indices, forest.roots, forest.arity), unit

    def act(self, unit, forest):
        self._check(unit, forest)
        return self._walk(unit, forest)[0]

    def clone(self, unit, forest):
        self._check(unit, forest)
        return self._walk(unit, forest)[1]

    def compose_units(self, first, second):
        return first * second

    def compose_morphisms(self, first, second):
        return compose(first, second)

    def unit_identity(self, obj):
        return self.identity(obj)

    def morphism_identity(self, obj):
        return Forest.identity(obj, self.arity)

    def morphism_target(self, morphism):
        return morphism.roots

    def morphism_source(self, morphism):
        return morphism.leaves

    def unit_domain(self, unit):
        return unit.degree

    def unit_codomain(self, unit):
        return unit.degree

    def encode_morphism(self, morphism):
        return morphism.to_text()

    def degrees(self, bound):
        return range(1, bound + 1)

    def recover_unit(self, unit, index):
        """Returns g with clone_caret(g, index) equal to unit, searching units()"""
        degree = unit.degree - (self.arity - 1)
        if degree < 1:
            raise NotInImageError(unit, index)
        for candidate in self.units(degree):
            if self.units_equal(self.clone_caret(candidate, index), unit):
                return candidate
        raise NotInImageError(unit, index)

    def axiom_instances(self, bound):
        instances = {axiom: [] for axiom in IP_AXIOMS}
        for n in self.degrees(bound):
            units = self.units(n)
            carets = [Forest.caret(index, n, self.arity) for index in range(1, n + 1)]
            forests = [Forest.identity(n, self.arity)] + carets
            pairs = [
                (first, Forest.caret(index, first.leaves, self.arity))
                for first in carets
                for index in range(1, first.leaves + 1)
            ]
            instances["IP1"].extend((forest,) for forest in forests)
            instances["IP2"].extend((unit,) for unit in units)
            instances["IP3"].extend(
                (first, second, forest) for first in units for second in units for forest in carets
            )
            instances["IP4"].extend((unit, first, second) for unit in units for first, second in pairs)
            instances["IP5"].extend((forest,) for forest in forests)
            instances["IP6"].extend((unit,) for unit in units)
            instances["IP7"].extend(
                (first, second, forest) for first in units for second in units for forest in carets
            )
            instances["IP8"].extend((unit, first, second) for unit in units for first, second in pairs)
        return instances


def clone_permutation(permutation, index):
    """Clones a permutation along the binary caret lambda_index.

    The four cases: j <= i keeps g(j) unless g(j) > g(i); j > i reads g(j - 1)
    and shifts it up unless g(j - 1) < g(i).
    """
    pivot = permutation(index)
    img = []
    for j in range(1, permutation.degree + 2):
        if j <= index:
            image = permutation(j)
            img.append(image if image <= pivot else image + 1)
        else:
            image = permutation(j - 1)
            img.append(image if image < pivot else image + 1)
    return Permutation(tuple(img))


class PermutationActionTable(ForestActionTable):
    """Units acting through permutations of the trees.

    Tree j of f lands at position g(j) in g . f, and leaf k of tree j is sent
    to leaf k of tree g(j).
    """

    def wrap(self, permutation):
        """Converts a permutation back into the family's unit type"""
        raise NotImplementedError

    def act_on_caret(self, unit, index):
        return self.permutation_of(unit)(index)

    def clone_caret(self, unit, index):
        return self.clone(unit, Forest.caret(index, unit.degree, self.arity))

    def _permute(self, unit, forest):
        permutation = self.permutation_of(unit)
        trees = [None] * forest.roots
        for position, tree in enumerate(forest.trees(), start=1):
            trees[permutation(position) - 1] = tree
        carets = {(position, path) for position, tree in enumerate(trees, start=1) for _, path in tree.carets}
        image = Forest.from_carets(carets, forest.roots, forest.arity)
        old_offsets = [0] + list(itertools.accumulate(forest.tree_sizes))
        new_offsets = [0] + list(itertools.accumulate(image.tree_sizes))
        img = [0] * forest.leaves
        for position, size in enumerate(forest.tree_sizes, start=1):
            target = permutation(position)
            for leaf in range(size):
                img[old_offsets[position - 1] + leaf] = new_offsets[target - 1] + leaf + 1
        return image, Permutation(tuple(img))

    def act(self, unit, forest):
        self._check(unit, forest)
        return self._permute(unit, forest)[0]

    def clone(self, unit, forest):
        self._check(unit, forest)
        return self.wrap(self._permute(unit, forest)[1])


class FTable(PermutationActionTable):
    """Trivial unit groupoid: the category F_d itself"""

    family = F

    def identity(self, n):
        return Permutation.identity(n)

    def is_member(self, unit):
        return isinstance(unit, Permutation) and unit.is_identity()

    def units(self, n):
        return [self.identity(n)]

    def permutation_of(self, unit):
        return unit

    def wrap(self, permutation):
        return permutation


class VTable(PermutationActionTable):
    """Symmetric groups: Thompson's V and the Higman-Thompson V_{d,r}"""

    family = V

    def identity(self, n):
        return Permutation.identity(n)

    def is_member(self, unit):
        return isinstance(unit, Permutation)

    def units(self, n):
        return [Permutation(img) for img in itertools.permutations(range(1, n + 1))]

    def permutation_of(self, unit):
        return unit

    def wrap(self, permutation):
        return permutation

    def recover_unit(self, unit, index):
        """Reads g off g^lambda_i: the caret block lands at c = g^lambda_i(i) and
        every other leaf is collapsed back onto its tree."""
        degree = unit.degree - (self.arity - 1)
        if degree < 1 or not 1 <= index <= degree:
            raise NotInImageError(unit, index)
        start = unit(index)
        img = []
        for j in range(1, degree + 1):
            leaf = unit(j if j <= index else j + self.arity - 1)
            if leaf < start:
                img.append(leaf)
            elif leaf < start + self.arity:
                img.append(start)
            else:
                img.append(leaf - self.arity + 1)
        try:
            recovered = Permutation(tuple(img))
        except ValueError:
            raise NotInImageError(unit, index)
        if self.clone_caret(recovered, index) != unit:
            raise NotInImageError(unit, index)
        return recovered


class TTable(PermutationActionTable):
    """Cyclic groups: trees are rotated, Thompson's T and T_{d,r}"""

    family = T

    def identity(self, n):
        return Rotation.identity(n)

    def is_member(self, unit):
        return isinstance(unit, Rotation)

    def units(self, n):
        return [Rotation(n, shift) for shift in range(n)]

    def permutation_of(self, unit):
        return unit.to_permutation()

    def wrap(self, permutation):
        rotation = rotation_of(permutation)
        if rotation is None:
            raise FamilyViolationError(self.family, permutation)
        return rotation

    def clone(self, unit, forest):
        """The clone of rot(l) is the rotation by the number of leaves of the last l trees"""
        self._check(unit, forest)
        moved = forest.tree_sizes[forest.roots - unit.shift:] if unit.shift else ()
        return Rotation(forest.leaves, sum(moved))

    def clone_from_image(self, unit, forest):
        """Same rotation, read as the number of leaves of the first l trees of g . f"""
        image = self.act(unit, forest)
        return Rotation(forest.leaves, sum(image.tree_sizes[:unit.shift]))


def _clone_generator(letter, index):
    """Cloning table of a braid generator along lambda_index"""
    i = abs(letter)
    if letter < 0:
        # (s^-1)^f is the inverse of s^(s^-1 . f)
        source = Permutation.transposition(i, i + 1)(index) if index <= i + 1 else index
        return tuple(-item for item in reversed(_clone_generator(i, source)))
    if index < i:
        return (i + 1,)
    if index == i:
        return (i, i + 1)
    if index == i + 1:
        return (i + 1, i)
    return (i,)


def delete_strand(braid, strand):
    """Removes the strand starting at source position `strand` from a braid word"""
    position = strand
    kept = []
    for letter in reversed(braid.word):
        i = abs(letter)
        if position == i:
            position = i + 1
        elif position == i + 1:
            position = i
        else:
            sign = 1 if letter > 0 else -1
            kept.append(sign * (i if i + 1 < position else i - 1))
    return Braid(braid.n - 1, tuple(reversed(kept)))


class BraidActionTable(ForestActionTable):
    """Braided V: F acts on braids by the cloning table of the generators and
    braids act on forests through the projection to V."""

    family = BV

    def __init__(self, arity=2, word_length=3):
        if arity != 2:
            raise ValueError("Braided families are defined for binary forests only")
        super().__init__(arity)
        self.word_length = word_length

    def identity(self, n):
        return Braid.identity(n)

    def is_member(self, unit):
        return isinstance(unit, Braid)

    def permutation_of(self, unit):
        return braid_project(unit)

    def units(self, n):
        letters = [sign * i for i in range(1, n) for sign in (1, -1)]
        words = [()]
        for length in (1, 2):
            words.extend(itertools.product(letters, repeat=length))
        if self.word_length >= 3:
            words.extend(itertools.product(range(1, n), repeat=3))
        braids = [Braid(n, word) for word in words]
        return [braid for braid in braids if self.is_member(braid)]

    def act_on_caret(self, unit, index):
        return braid_project(unit)(index)

    def clone_caret(self, unit, index):
        pieces = []
        for letter in reversed(unit.word):
            pieces.append(_clone_generator(letter, index))
            index = Permutation.transposition(abs(letter), unit.n)(index)
        word = tuple(letter for piece in reversed(pieces) for letter in piece)
        return Braid(unit.n + 1, word)

    def recover_unit(self, unit, index):
        """Deletes the strand created by the caret, then re-clones to confirm"""
        if unit.n < 2 or not 1 <= index < unit.n:
            raise NotInImageError(unit, index)
        recovered = delete_strand(unit, index + 1)
        if not self.is_member(recovered) or self.clone_caret(recovered, index) != unit:
            raise NotInImageError(unit, index)
        return recovered


class BTTable(BraidActionTable):
    """Braided T: braids whose permutation is a rotation"""

    family = BT

    def is_member(self, unit):
        return isinstance(unit, Braid) and is_cyclic(unit)


class BFTable(BraidActionTable):
    """Braided F: pure braids"""

    family = BF

    def is_member(self, unit):
        return isinstance(unit, Braid) and is_pure(unit)


FAMILY_TABLES = {F: FTable, T: TTable, V: VTable, BF: BFTable, BT: BTTable, BV: BraidActionTable}


@functools.lru_cache(maxsize=None)
def action_table(family, arity=2):
    """Returns the shipped action table of a family"""
    try:
        return FAMILY_TABLES[family](arity)
    except KeyError:
        raise ValueError(f"Unknown family {family}")


def table_for_unit(unit, arity=2):
    """Picks the widest shipped table able to act with the unit"""
    if isinstance(unit, Braid):
        return action_table(BV, 2)
    if isinstance(unit, Rotation):
        return action_table(T, arity)
    return action_table(V, arity)


def act_unit_on_forest(unit, forest, table=None):
    """g . f: the forest part of the exchange gf = (g . f) g^f"""
    table = table or table_for_unit(unit, forest.arity)
    return table.act(unit, forest)


def act_forest_on_unit(unit, forest, table=None):
    """g^f: the unit part of the exchange gf = (g . f) g^f"""
    table = table or table_for_unit(unit, forest.arity)
    return table.clone(unit, forest)


def recover_unit(unit, index, table=None):
    """Inverts cloning along lambda_index"""
    table = table or table_for_unit(unit)
    return table.recover_unit(unit, index)


@dataclass(frozen=True)
class IndirectMorphism:
    """A morphism (f, g) = f o g of F x| G; the unit sits at the leaves of f"""

    forest: Forest
    unit: object
    family: str = V

    def __post_init__(self):
        table = action_table(self.family, self.forest.arity)
        if not table.is_member(self.unit):
            raise FamilyViolationError(self.family, self.unit)
        if self.unit.degree != self.forest.leaves:
            raise BoundaryMismatchError(self.forest, self.unit, "unit degree must equal the number of leaves")

    @classmethod
    def identity(cls, n, family=V, arity=2):
        table = action_table(family, arity)
        return cls(Forest.identity(n, arity), table.identity(n), family)

    def to_json(self):
        return {"family": self.family, "forest": self.forest.to_json(), "unit": self.unit.to_json()}


def zs_compose(first, second):
    """(f1, g1)(f2, g2) = (f1 (g1 . f2), g1^f2 g2)"""
    if first.family != second.family:
        raise FamilyViolationError(first.family, second.unit)
    if first.unit.degree != second.forest.roots:
        raise BoundaryMismatchError(first, second, "unit degree must meet the roots of the next forest")
    table = action_table(first.family, first.forest.arity)
    forest = compose(first.forest, table.act(first.unit, second.forest))
    unit = table.clone(first.unit, second.forest) * second.unit
    return IndirectMorphism(forest, unit, first.family)


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check: counts per axiom and every violation.

    `bound` is the requested degree and `degree` the largest degree whose
    instances were enumerated; a report with degree below bound fails.
    """

    family: str
    bound: int
    trusted: bool = True
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    degree: int = None

    @property
    def complete(self):
        return self.degree is None or self.degree >= self.bound

    @property
    def passed(self):
        return not self.violations and self.complete

    def failed_axioms(self):
        return sorted({violation["axiom"] for violation in self.violations})

    def records(self):
        """Per-axiom summary records followed by one record per violation"""
        failures = {}
        for violation in self.violations:
            failures[violation["axiom"]] = failures.get(violation["axiom"], 0) + 1
        summary = [
            {
                "axiom": axiom,
                "instance": f"{count} instances",
                "lhs": None,
                "rhs": None,
                "pass": axiom not in failures,
            }
            for axiom, count in sorted(self.checked.items())
        ]
        if self.degree is not None:
            summary.append(
                {
                    "axiom": "DEGREE",
                    "instance": f"degrees up to {self.bound}",
                    "lhs": self.bound,
                    "rhs": self.degree,
                    "pass": self.complete,
                }
            )
        return summary + self.violations

    def to_json(self):
        return {
            "family": self.family,
            "bound": self.bound,
            "degree": self.degree,
            "trusted": self.trusted,
            "checked": dict(sorted(self.checked.items())),
            "records": self.records(),
        }


def _evaluate_axiom(table, axiom, instance):
    """Returns (lhs, rhs, kind) for one instance of an indirect product axiom"""
    if axiom == "IP1":
        (forest,) = instance
        return table.act(table.unit_identity(table.morphism_target(forest)), forest), forest, "m"
    if axiom == "IP2":
        (unit,) = instance
        return table.clone(unit, table.morphism_identity(table.unit_domain(unit))), unit, "u"
    if axiom == "IP3":
        first, second, forest = instance
        lhs = table.act(table.compose_units(first, second), forest)
        return lhs, table.act(first, table.act(second, forest)), "m"
    if axiom == "IP4":
        unit, first, second = instance
        lhs = table.clone(unit, table.compose_morphisms(first, second))
        return lhs, table.clone(table.clone(unit, first), second), "u"
    if axiom == "IP5":
        (forest,) = instance
        lhs = table.clone(table.unit_identity(table.morphism_target(forest)), forest)
        return lhs, table.unit_identity(table.morphism_source(forest)), "u"
    if axiom == "IP6":
        (unit,) = instance
        lhs = table.act(unit, table.morphism_identity(table.unit_domain(unit)))
        return lhs, table.morphism_identity(table.unit_codomain(unit)), "m"
    if axiom == "IP7":
        first, second, forest = instance
        lhs = table.clone(table.compose_units(first, second), forest)
        rhs = table.compose_units(table.clone(first, table.act(second, forest)), table.clone(second, forest))
        return lhs, rhs, "u"
    if axiom == "IP8":
        unit, first, second = instance
        lhs = table.act(unit, table.compose_morphisms(first, second))
        rhs = table.compose_morphisms(table.act(unit, first), table.act(table.clone(unit, first), second))
        return lhs, rhs, "m"
    raise ValueError(f"Unknown axiom {axiom}")


def _encode(table, kind, value):
    return table.encode_unit(value) if kind == "u" else table.encode_morphism(value)


def check_ip_axioms(table, bound, logger=None):
    """Verifies IP1-IP8 on every instance the table enumerates up to `bound`.
    :param table: an ActionTable
    :param bound: largest degree (object size) to enumerate
    :param logger: optional logger for progress messages
    :returns: AxiomReport listing every violated instance
    """
    logger = logger or logging.getLogger(__name__)
    report = AxiomReport(table.family, bound, table.trusted)
    if hasattr(table, "degrees"):
        report.degree = max(table.degrees(bound), default=0)
    for axiom, instances in table.axiom_instances(bound).items():
        logger.debug(f"Checking {axiom} on {len(instances)} instances for family {table.family}")
        report.checked[axiom] = len(instances)
        signature = AXIOM_SIGNATURES[axiom]
        for instance in instances:
            encoded = [_encode(table, kind, value) for kind, value in zip(signature, instance)]
            try:
                lhs, rhs, kind = _evaluate_axiom(table, axiom, instance)
                equal = table.units_equal(lhs, rhs) if kind == "u" else table.morphisms_equal(lhs, rhs)
                if not equal:
                    report.violations.append(
                        {
                            "axiom": axiom,
                            "instance": encoded,
                            "lhs": _encode(table, kind, lhs),
                            "rhs": _encode(table, kind, rhs),
                            "pass": False,
                        }
                    )
            except Exception as exception:
                report.violations.append(
                    {"axiom": axiom, "instance": encoded, "lhs": str(exception), "rhs": None, "pass": False}
                )
    if report.violations:
        logger.info(f"{len(report.violations)} axiom violations found for family {table.family}")
    return report


def _bv_record(name, instance, lhs, rhs, passed):
    return {"name": name, "instance": instance, "expected": lhs, "got": rhs, "pass": passed}


def check_bv_relations(n):
    """Checks that the braided cloning table respects the braid relations at degree n.

    Each side is evaluated generator by generator, so both sides of every
    relation are genuinely different computations.
    """
    table = action_table(BV)
    records = []

    def act_word(word, index):
        for letter in reversed(word):
            index = table.act_on_caret(Braid(n, (letter,)), index)
        return index

    def clone_word(word, index):
        pieces = []
        for letter in reversed(word):
            pieces.append(table.clone_caret(Braid(n, (letter,)), index))
            index = table.act_on_caret(Braid(n, (letter,)), index)
        result = Braid.identity(n + 1)
        for piece in reversed(pieces):
            result = result * piece
        return result

    for i in range(1, n - 1):
        left, right = (i, i + 1, i), (i + 1, i, i + 1)
        for k in range(1, n + 1):
            instance = {"n": n, "i": i, "k": k}
            lhs, rhs = act_word(left, k), act_word(right, k)
            records.append(_bv_record("braid-acts", instance, lhs, rhs, lhs == rhs))
            lhs, rhs = clone_word(left, k), clone_word(right, k)
            records.append(_bv_record("braid-is-acted", instance, lhs.to_json(), rhs.to_json(), lhs == rhs))
    for i, j in itertools.combinations(range(1, n), 2):
        if abs(i - j) < 2:
            continue
        for k in range(1, n + 1):
            instance = {"n": n, "i": i, "j": j, "k": k}
            lhs, rhs = act_word((i, j), k), act_word((j, i), k)
            records.append(_bv_record("commutator-acts", instance, lhs, rhs, lhs == rhs))
            lhs, rhs = clone_word((i, j), k), clone_word((j, i), k)
            records.append(_bv_record("commutator-is-acted", instance, lhs.to_json(), rhs.to_json(), lhs == rhs))
    for i in range(1, n):
        generator = Braid(n, (i,))
        for k, ell in itertools.combinations(range(1, n + 1), 2):
            instance = {"n": n, "i": i, "k": k, "l": ell}
            lhs = normal_form(
                (table.act_on_caret(generator, ell), table.act_on_caret(table.clone_caret(generator, ell), k)), n
            )
            rhs = normal_form(
                (table.act_on_caret(generator, k), table.act_on_caret(table.clone_caret(generator, k), ell + 1)), n
            )
            records.append(_bv_record("split-is-acted", instance, lhs.to_text(), rhs.to_text(), lhs == rhs))
            lhs = table.clone_caret(table.clone_caret(generator, ell), k)
            rhs = table.clone_caret(table.clone_caret(generator, k), ell + 1)
            records.append(_bv_record("split-acts", instance, lhs.to_json(), rhs.to_json(), lhs == rhs))
    return records


def pi_equivariance_samples(
    max_degree=EQUIVARIANCE_DEGREE, max_length=3, random_count=0, seed=0, random_degree=5, random_length=6
):
    """Exhaustive (braid, caret) pairs plus seeded random (braid, forest) pairs"""
    samples = []
    for n in range(2, max_degree + 1):
        letters = [sign * i for i in range(1, n) for sign in (1, -1)]
        for length in range(max_length + 1):
            for word in itertools.product(letters, repeat=length):
                braid = Braid(n, word)
                samples.extend((braid, Forest.caret(index, n)) for index in range(1, n + 1))
    rng = seeded_random(seed)
    for _ in range(random_count):
        n = rng.randint(2, random_degree)
        letters = [sign * i for i in range(1, n) for sign in (1, -1)]
        braid = Braid(n, tuple(rng.choice(letters) for _ in range(rng.randint(0, random_length))))
        word = []
        leaves = n
        for _ in range(rng.randint(1, 3)):
            word.append(rng.randint(1, leaves))
            leaves += 1
        samples.append((braid, normal_form(word, n)))
    return samples


def check_pi_equivariance(samples):
    """pi(beta^f) = pi(beta)^f for every (beta, f) sample"""
    braided, permutations = action_table(BV), action_table(V)
    records = []
    for braid, forest in samples:
        lhs = braid_project(braided.clone(braid, forest))
        rhs = permutations.clone(braid_project(braid), forest)
        records.append(
            {
                "name": "pi-equivariance",
                "instance": {"braid": braid.to_json(), "forest": forest.to_text()},
                "expected": lhs.to_json(),
                "got": rhs.to_json(),
                "pass": lhs == rhs,
            }
        )
    return records


def check_injectivity(table, bound):
    """Distinct units have distinct clones, and recover_unit inverts cloning"""
    records = []
    for n in table.degrees(bound):
        units = table.units(n)
        for index in range(1, n + 1):
            seen = {}
            collisions = 0
            unrecovered = 0
            for unit in units:
                image = table.clone_caret(unit, index)
                previous = seen.setdefault(image, unit)
                if not table.units_equal(previous, unit):
                    collisions += 1
                try:
                    if not table.units_equal(table.recover_unit(image, index), unit):
                        unrecovered += 1
                except NotInImageError:
                    unrecovered += 1
            records.append(
                {
                    "name": "injectivity",
                    "instance": {"family": table.family, "n": n, "caret": index, "units": len(units)},
                    "expected": {"collisions": 0, "unrecovered": 0},
                    "got": {"collisions": collisions, "unrecovered": unrecovered},
                    "pass": collisions == 0 and unrecovered == 0,
                }
            )
    return records


class CloningSystem:
    """Base interface for a cloning system (G_n, rho_n, kappa_k^n).

    kappa(g, k) is written (g)kappa_k in right-action notation.
    """

    name = CUSTOM

    def units(self, n):
        raise NotImplementedError

    def identity(self, n):
        raise NotImplementedError

    def multiply(self, first, second):
        return first * second

    def rho(self, unit):
        raise NotImplementedError

    def kappa(self, unit, index):
        raise NotImplementedError

    def equal(self, first, second):
        return first == second


class TrivialCloningSystem(CloningSystem):
    """All groups trivial: the resulting category is F"""

    name = "trivial"

    def units(self, n):
        return [Permutation.identity(n)]

    def identity(self, n):
        return Permutation.identity(n)

    def rho(self, unit):
        return unit

    def kappa(self, unit, index):
        return Permutation.identity(unit.degree + 1)


class VCloningSystem(CloningSystem):
    """Symmetric groups with rho the identity and kappa the four-case cloning"""

    name = V

    def units(self, n):
        return [Permutation(img) for img in itertools.permutations(range(1, n + 1))]

    def identity(self, n):
        return Permutation.identity(n)

    def rho(self, unit):
        return unit

    def kappa(self, unit, index):
        return clone_permutation(unit, index)


class BVCloningSystem(CloningSystem):
    """Braid groups with rho the projection pi"""

    name = BV

    def units(self, n):
        return BraidActionTable().units(n)

    def identity(self, n):
        return Braid.identity(n)

    def rho(self, unit):
        return braid_project(unit)

    def kappa(self, unit, index):
        return action_table(BV).clone_caret(unit, index)


class CloningSystemTable(ForestActionTable):
    """Action table induced by a cloning system: g . lambda_k = lambda_{rho(g)k}
    and g^lambda_k = (g)kappa_k. Untrusted until validate() found no violation."""

    def __init__(self, system):
        super().__init__(2)
        self.system = system
        self.family = f"{CUSTOM}:{system.name}"
        self.trusted = False

    def identity(self, n):
        return self.system.identity(n)

    def is_member(self, unit):
        return True

    def units(self, n):
        return self.system.units(n)

    def permutation_of(self, unit):
        return self.system.rho(unit)

    def act_on_caret(self, unit, index):
        return self.system.rho(unit)(index)

    def clone_caret(self, unit, index):
        return self.system.kappa(unit, index)

    def compose_units(self, first, second):
        return self.system.multiply(first, second)

    def units_equal(self, first, second):
        return self.system.equal(first, second)

    def validate(self, bound):
        """Checks CS1-CS3 and that rho is a homomorphism; trusts the table when clean"""
        records = validate_cloning_system(self.system, bound)
        self.trusted = all(record["pass"] for record in records)
        return records


def validate_cloning_system(system, bound):
    """Enumerates CS1 (cloning a product), CS2 (product of clonings), CS3
    (compatibility with the symmetric groups) and the homomorphism property of rho."""
    records = []

    def record(axiom, instance, lhs, rhs, passed):
        encode = lambda value: value.to_json() if hasattr(value, "to_json") else value  # noqa: E731
        records.append(
            {"name": axiom, "instance": instance, "expected": encode(lhs), "got": encode(rhs), "pass": passed}
        )

    for n in range(1, bound + 1):
        units = system.units(n)
        for first in units:
            for second in units:
                product = system.multiply(first, second)
                lhs, rhs = system.rho(product), system.rho(first) * system.rho(second)
                record("RHO", {"n": n, "g": encode_unit(first), "h": encode_unit(second)}, lhs, rhs, lhs == rhs)
                for k in range(1, n + 1):
                    lhs = system.kappa(product, k)
                    rhs = system.multiply(system.kappa(first, system.rho(second)(k)), system.kappa(second, k))
                    instance = {"n": n, "k": k, "g": encode_unit(first), "h": encode_unit(second)}
                    record("CS1", instance, lhs, rhs, system.equal(lhs, rhs))
        for unit in units:
            for k, ell in itertools.combinations(range(1, n + 1), 2):
                lhs = system.kappa(system.kappa(unit, ell), k)
                rhs = system.kappa(system.kappa(unit, k), ell + 1)
                instance = {"n": n, "k": k, "l": ell, "g": encode_unit(unit)}
                record("CS2", instance, lhs, rhs, system.equal(lhs, rhs))
            for k in range(1, n + 1):
                cloned = system.rho(system.kappa(unit, k))
                expected = clone_permutation(system.rho(unit), k)
                others = [i for i in range(1, n + 2) if i not in (k, k + 1)]
                lhs = [cloned(i) for i in others]
                rhs = [expected(i) for i in others]
                record("CS3", {"n": n, "k": k, "g": encode_unit(unit)}, lhs, rhs, lhs == rhs)
    return records


def encode_unit(unit):
    return unit.to_json() if hasattr(unit, "to_json") else str(unit)


def cloning_system_adapter(system, bound=None):
    """Builds the action table of a cloning system, validating it when a bound is given"""
    table = CloningSystemTable(system)
    if bound is not None:
        table.validate(bound)
    return table
