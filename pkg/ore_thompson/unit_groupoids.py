#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""unit_groupoids module contains the invertible decorations of forests.

    Symmetric groups, cyclic rotation groups and braid groups. Products follow a
    single convention everywhere: in a product the right factor acts first,
    (p * q)(j) = p(q(j)). Braid equality is decided through the left-greedy
    normal form Delta^p A_1 ... A_r with permutation-braid factors.
"""
import math
from dataclasses import dataclass

try:
    from functools import cached_property
except ImportError:
    from cached_property import cached_property

from .constant import BRAIDED_FAMILIES, F, T, UNBOUNDED, V


class DegreeMismatchError(Exception):
    """Exception raised when two units of different degrees are combined.

    Attributes:
        left -- first operand
        right -- second operand
    """

    def __init__(self, left, right):
        super().__init__(f"Units {left} and {right} live at different objects.")
        self.left = left
        self.right = right


class StrandMismatchError(DegreeMismatchError):
    """Exception raised when braids on different strand counts are combined."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored through its image table"""

    img: tuple

    def __post_init__(self):
        object.__setattr__(self, "img", tuple(self.img))
        if sorted(self.img) != list(range(1, len(self.img) + 1)):
            raise ValueError(f"{self.img} is not a permutation table")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i, n):
        """The transposition s_i = (i i+1) of degree n"""
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @property
    def degree(self):
        return len(self.img)

    def __call__(self, j):
        return self.img[j - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatchError(self, other)
        return Permutation(tuple(self.img[j - 1] for j in other.img))

    def inverse(self):
        inverse = [0] * self.degree
        for position, image in enumerate(self.img, start=1):
            inverse[image - 1] = position
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(image == position for position, image in enumerate(self.img, start=1))

    def inversions(self):
        """Number of inverted pairs, the length of the permutation"""
        return sum(
            1
            for first in range(self.degree)
            for second in range(first + 1, self.degree)
            if self.img[first] > self.img[second]
        )

    def to_json(self):
        return {"n": self.degree, "img": list(self.img)}

    def __str__(self):
        return f"Sym{self.degree}{list(self.img)}"


@dataclass(frozen=True)
class Rotation:
    """An element of Z/nZ acting on {1..n} by i -> ((i - 1 + shift) mod n) + 1"""

    n: int
    shift: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Rotations need a positive degree")
        object.__setattr__(self, "shift", self.shift % self.n)

    @classmethod
    def identity(cls, n):
        return cls(n, 0)

    @property
    def degree(self):
        return self.n

    def __call__(self, j):
        return (j - 1 + self.shift) % self.n + 1

    def __mul__(self, other):
        if self.n != other.n:
            raise DegreeMismatchError(self, other)
        return Rotation(self.n, self.shift + other.shift)

    def inverse(self):
        return Rotation(self.n, -self.shift)

    def is_identity(self):
        return self.shift == 0

    def to_permutation(self):
        return Permutation(tuple(self(j) for j in range(1, self.n + 1)))

    def to_json(self):
        return {"n": self.n, "shift": self.shift}

    def __str__(self):
        return f"rot({self.shift} mod {self.n})"


def rotation_of(permutation):
    """Returns the Rotation equal to the permutation, or None when it is not a rotation"""
    rotation = Rotation(permutation.degree, permutation(1) - 1)
    if rotation.to_permutation() == permutation:
        return rotation
    return None


def is_rotation(permutation):
    return rotation_of(permutation) is not None


@dataclass(frozen=True)
class BraidNormalForm:
    """Left-greedy normal form Delta^power * factors[0] * ... of a braid.

    Factors are permutation braids, stored through their image tables.
    """

    n: int
    power: int
    factors: tuple

    def is_trivial(self):
        return self.power == 0 and not self.factors

    def to_json(self):
        return {"n": self.n, "power": self.power, "factors": [list(factor) for factor in self.factors]}


@dataclass(frozen=True, eq=False)
class Braid:
    """A braid word on n strands: letter i stands for sigma_i, -i for its inverse.

    Braids compare equal when they represent the same group element.
    """

    n: int
    word: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        for letter in self.word:
            if letter == 0 or abs(letter) >= self.n:
                raise ValueError(f"Letter {letter} is out of range for {self.n} strands")

    @classmethod
    def identity(cls, n):
        return cls(n, ())

    @classmethod
    def generator(cls, i, n):
        return cls(n, (i,))

    @property
    def degree(self):
        return self.n

    @cached_property
    def normal_form(self):
        return braid_normal_form(self)

    def __eq__(self, other):
        if not isinstance(other, Braid):
            return NotImplemented
        return self.n == other.n and self.normal_form == other.normal_form

    def __hash__(self):
        return hash(self.normal_form)

    def __mul__(self, other):
        return braid_multiply(self, other)

    def inverse(self):
        return braid_inverse(self)

    def is_identity(self):
        return self.normal_form.is_trivial()

    def to_json(self):
        return {"n": self.n, "word": list(self.word)}

    def __str__(self):
        return f"B{self.n}{list(self.word)}"


def _half_twist(n):
    return Permutation(tuple(range(n, 0, -1)))


def _starts_with(simple, j):
    """True when the permutation braid can be written sigma_j * x with x positive"""
    inverse = simple.inverse()
    return inverse(j) > inverse(j + 1)


def _left_weight(factors, n):
    """Slides generators leftwards until every adjacent pair is left-weighted"""
    transpositions = [None] + [Permutation.transposition(j, n) for j in range(1, n)]
    changed = True
    while changed:
        changed = False
        for position in range(len(factors) - 1):
            left, right = factors[position], factors[position + 1]
            moved = True
            while moved:
                moved = False
                for j in range(1, n):
                    if left(j) < left(j + 1) and _starts_with(right, j):
                        left = left * transpositions[j]
                        right = transpositions[j] * right
                        moved = changed = True
                        break
            factors[position], factors[position + 1] = left, right
    return factors


def braid_normal_form(braid):
    """Computes the left-greedy normal form of a braid word.

    Each inverse letter is rewritten as Delta^-1 (Delta sigma_i^-1) and the
    Delta^-1 is pulled to the front through the half-twist automorphism.
    """
    n = braid.n
    half_twist = _half_twist(n)
    power = 0
    factors = []
    for letter in braid.word:
        if letter > 0:
            factors.append(Permutation.transposition(letter, n))
        else:
            factors = [half_twist * factor * half_twist for factor in factors]
            factors.append(half_twist * Permutation.transposition(-letter, n))
            power -= 1
    factors = _left_weight(factors, n)
    start = 0
    while start < len(factors) and factors[start] == half_twist:
        start += 1
    power += start
    factors = factors[start:]
    while factors and factors[-1].is_identity():
        factors.pop()
    return BraidNormalForm(n, power, tuple(factor.img for factor in factors))


def braid_multiply(a, b):
    if a.n != b.n:
        raise StrandMismatchError(a, b)
    return Braid(a.n, a.word + b.word)


def braid_inverse(a):
    return Braid(a.n, tuple(-letter for letter in reversed(a.word)))


def braid_eq(a, b):
    if a.n != b.n:
        raise StrandMismatchError(a, b)
    return braid_normal_form(a) == braid_normal_form(b)


def braid_project(braid):
    """The projection pi: Braid_n -> Sym_n taking sigma_i to s_i"""
    result = Permutation.identity(braid.n)
    for letter in braid.word:
        result = result * Permutation.transposition(abs(letter), braid.n)
    return result


def braid_lift(permutation):
    """Lifts a permutation to the positive braid of one of its reduced words"""
    letters = []
    current = permutation
    while not current.is_identity():
        descent = next(j for j in range(1, current.degree) if current(j) > current(j + 1))
        letters.append(descent)
        current = current * Permutation.transposition(descent, current.degree)
    return Braid(permutation.degree, tuple(reversed(letters)))


def braid_delta(n):
    """The Garside element Delta_n, the positive half twist"""
    return braid_lift(_half_twist(n))


def braid_canonical(braid):
    """Spells the normal form Delta^p A_1 ... A_r of a braid as a word.

    Equal braids get the same word: Delta or its inverse repeated |p| times,
    then the positive lift of each factor.
    """
    normal = braid.normal_form
    delta = braid_delta(braid.n).word
    if normal.power < 0:
        word = tuple(-letter for letter in reversed(delta)) * -normal.power
    else:
        word = delta * normal.power
    for factor in normal.factors:
        word += braid_lift(Permutation(factor)).word
    return Braid(braid.n, word)


def exponent_sum(braid):
    """Number of positive letters minus number of negative ones, a braid invariant"""
    return sum(1 if letter > 0 else -1 for letter in braid.word)


def braid_crossings(simple):
    """Number of crossings of a positive braid word, or of the simple braid of a permutation.
    :param simple: a Permutation, or a Braid whose word has no negative letter
    :raises ValueError: when the braid word has a negative letter
    """
    if isinstance(simple, Permutation):
        return simple.inversions()
    if any(letter < 0 for letter in simple.word):
        raise ValueError(f"Crossings are counted on positive words only, got {simple.word}")
    return len(simple.word)


def is_pure(braid):
    return braid_project(braid).is_identity()


def is_cyclic(braid):
    return is_rotation(braid_project(braid))


def unit_group_order(family, n):
    """Order of the unit group at object n, the stabilizer of a vertex class"""
    if family == F:
        return 1
    if family == T:
        return n
    if family == V:
        return math.factorial(n)
    if family in BRAIDED_FAMILIES:
        return 1 if n == 1 else UNBOUNDED
    raise ValueError(f"Unknown family {family}")
