#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""fraction_groups module solves the word problem in the Thompson-like groups.

    An element is a fraction num * unit * den^-1 of forests and a unit at the
    basepoint `base`. Elements are kept as given; eq() brings two of them to a
    common denominator and is the only authority on equality.
"""
from dataclasses import dataclass

from .constant import BF, BRAIDED_FAMILIES, BT, BV, F, T, UNBOUNDED, V
from .forest_cat import Forest, bottom_caret, compose, drop_caret, lcm, left_quotient, normal_form
from .unit_groupoids import Braid, Permutation, Rotation, braid_canonical, braid_lift, braid_project, rotation_of
from .zs_product import NotInImageError, action_table

PROJECTED_FAMILIES = {BV: V, BT: T, BF: F}


class FamilyMismatchError(Exception):
    """Exception raised when elements of different groups are combined.

    Attributes:
        left -- first element
        right -- second element
    """

    def __init__(self, left, right):
        super().__init__(f"{left} and {right} do not belong to the same group.")
        self.left = left
        self.right = right


class CertificateFailedError(Exception):
    """Exception raised when a product fails its round-trip certificate (x * y) * y^-1 = x.

    Attributes:
        left -- first factor
        right -- second factor
    """

    def __init__(self, left, right):
        super().__init__(f"Product of {left} and {right} failed its round-trip certificate.")
        self.left = left
        self.right = right


@dataclass(frozen=True, eq=False)
class FractionElement:
    """The group element num * unit * den^-1.

    Two instances may represent the same element; compare them with eq().
    """

    family: str
    num: Forest
    unit: object
    den: Forest

    def __post_init__(self):
        if self.num.arity != self.den.arity or self.num.roots != self.den.roots:
            raise ValueError(f"Numerator {self.num} and denominator {self.den} start at different objects")
        if not self.num.leaves == self.den.leaves == self.unit.degree:
            raise ValueError(
                f"Numerator, unit and denominator disagree on the leaf count: "
                f"{self.num.leaves}, {self.unit.degree}, {self.den.leaves}"
            )
        table = self.table
        if not table.is_member(self.unit):
            raise ValueError(f"{self.unit} is not a unit of the family {self.family}")

    @property
    def table(self):
        return action_table(self.family, self.num.arity)

    @property
    def base(self):
        return self.num.roots

    @property
    def arity(self):
        return self.num.arity

    @property
    def carets(self):
        """Total caret count of numerator and denominator"""
        return len(self.num.word) + len(self.den.word)

    def to_json(self):
        return {
            "family": self.family,
            "base": self.base,
            "num": self.num.to_json(),
            "unit": self.unit.to_json(),
            "den": self.den.to_json(),
        }

    def __str__(self):
        return f"{self.family}[{self.num} | {self.unit} | {self.den}]"


def _check_same_group(x, y):
    if x.family != y.family or x.base != y.base or x.arity != y.arity:
        raise FamilyMismatchError(x, y)


def identity(family, base=1, arity=2):
    table = action_table(family, arity)
    forest = Forest.identity(base, arity)
    return FractionElement(family, forest, table.identity(base), forest)


def expand(x, h):
    """Rewrites x over the denominator den * h without changing the element.
    :param x: FractionElement
    :param h: forest whose roots meet the leaves of x
    """
    if h.roots != x.den.leaves or h.arity != x.arity:
        raise ValueError(f"Forest {h} does not fit the leaves of {x}")
    table = x.table
    return FractionElement(
        x.family, compose(x.num, table.act(x.unit, h)), table.clone(x.unit, h), compose(x.den, h)
    )


def eq(x, y):
    """Decides equality by expanding both fractions to lcm(den_x, den_y)"""
    _check_same_group(x, y)
    common = lcm(x.den, y.den)
    x = expand(x, left_quotient(x.den, common))
    y = expand(y, left_quotient(y.den, common))
    return x.num == y.num and x.table.units_equal(x.unit, y.unit)


def is_identity(x):
    return eq(x, identity(x.family, x.base, x.arity))


def inv(x):
    return FractionElement(x.family, x.den, x.unit.inverse(), x.num)


def mul(x, y, certify=False):
    """Multiplies two fractions through a common multiple of den_x and num_y.

    With den_x * s = num_y * t = lcm, x is expanded by s and y by u_y^-1 . t, so
    that the middle forests cancel.
    :param certify: check (x * y) * y^-1 = x and raise CertificateFailedError otherwise
    """
    _check_same_group(x, y)
    table = x.table
    common = lcm(x.den, y.num)
    s = left_quotient(x.den, common)
    t = left_quotient(y.num, common)
    h = table.act(y.unit.inverse(), t)
    left, right = expand(x, s), expand(y, h)
    product = FractionElement(x.family, left.num, table.compose_units(left.unit, right.unit), right.den)
    if certify and not eq(mul(product, inv(y)), x):
        raise CertificateFailedError(x, y)
    return product


def power(x, exponent, certify=False):
    result = identity(x.family, x.base, x.arity)
    factor = x if exponent >= 0 else inv(x)
    for _ in range(abs(exponent)):
        result = mul(result, factor, certify)
    return result


def order(x, bound):
    """Least k <= bound with x^k the identity, UNBOUNDED when there is none"""
    if bound < 1:
        raise ValueError("The order bound must be positive")
    current = x
    for exponent in range(1, bound + 1):
        if is_identity(current):
            return exponent
        current = mul(current, x)
    return UNBOUNDED


def _reduce_once(x):
    table = x.table
    for position in range(1, x.den.leaves + 1):
        caret = bottom_caret(x.den, position)
        if caret is None:
            continue
        try:
            unit = table.recover_unit(x.unit, position)
        except NotInImageError:
            continue
        target = table.act_on_caret(unit, position)
        num_caret = bottom_caret(x.num, target)
        if num_caret is None:
            continue
        return FractionElement(x.family, drop_caret(x.num, num_caret), unit, drop_caret(x.den, caret))
    return None


def reduce(x):
    """Cancels common bottom carets until none is left.

    A caret at leaves i.. of den cancels when the unit is a clone u0^lambda_i
    and num ends with the caret u0 . lambda_i. Braided units come back
    spelled in their canonical word.
    """
    while True:
        smaller = _reduce_once(x)
        if smaller is None:
            break
        x = smaller
    if x.family in BRAIDED_FAMILIES:
        return FractionElement(x.family, x.num, braid_canonical(x.unit), x.den)
    return x


def project_to_v(x):
    """Applies pi to the unit: BV lands in V, BT in T and BF in F"""
    if x.family not in BRAIDED_FAMILIES:
        raise FamilyMismatchError(x, x.family)
    permutation = braid_project(x.unit)
    family = PROJECTED_FAMILIES[x.family]
    if family == T:
        unit = rotation_of(permutation)
    else:
        unit = permutation
    return FractionElement(family, x.num, unit, x.den)


def _random_forest(rng, roots, carets, arity):
    word = []
    leaves = roots
    for _ in range(carets):
        word.append(rng.randint(1, leaves))
        leaves += arity - 1
    return normal_form(word, roots, arity)


def _random_braid(rng, n, length):
    if n < 2:
        return Braid.identity(n)
    letters = [sign * i for i in range(1, n) for sign in (1, -1)]
    return Braid(n, tuple(rng.choice(letters) for _ in range(rng.randint(0, length))))


def random_unit(family, n, rng, braid_length=6):
    """Draws a unit of degree n; braided units are corrected into the family
    by a lifted permutation so that BT lands on a rotation and BF is pure."""
    if family == F:
        return Permutation.identity(n)
    if family == T:
        return Rotation(n, rng.randrange(n))
    if family == V:
        img = list(range(1, n + 1))
        rng.shuffle(img)
        return Permutation(tuple(img))
    braid = _random_braid(rng, n, braid_length)
    if family == BV:
        return braid
    correction = braid_project(braid).inverse()
    if family == BT:
        correction = correction * Rotation(n, rng.randrange(n)).to_permutation()
    return braid * braid_lift(correction)


def random_element(family, rng, max_leaves=8, base=1, arity=2, braid_length=6):
    """Seeded random element with at most max_leaves leaves per forest"""
    carets = rng.randint(0, max(0, (max_leaves - base) // (arity - 1)))
    num = _random_forest(rng, base, carets, arity)
    den = _random_forest(rng, base, carets, arity)
    return FractionElement(family, num, random_unit(family, num.leaves, rng, braid_length), den)
