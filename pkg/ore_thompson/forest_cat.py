#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""forest_cat module implements the categories of d-ary forests.

    A forest with m roots and n leaves is a morphism from n to m. It is stored
    through its canonical caret word: the index of the leaf split at each step,
    non-decreasing. The caret set (addresses of the split nodes inside the
    infinite d-ary forest on m roots) is the structural view used by the lattice
    operations: gcd is an intersection and lcm a union of caret sets.
"""
import functools
import itertools
import re
from dataclasses import dataclass

try:
    from functools import cached_property
except ImportError:
    from cached_property import cached_property

from .utils import compositions

FOREST_TEXT_PATTERN = re.compile(r"^F(\d*)\((\d+);([\d,\s]*)\)$")


class ForestMismatchError(Exception):
    """Exception raised when two forests cannot be combined.

    Attributes:
        left -- first operand
        right -- second operand
        reason -- which boundary or arity condition failed
    """

    def __init__(self, left, right, reason):
        super().__init__(f"Cannot combine {left} and {right}: {reason}.")
        self.left = left
        self.right = right
        self.reason = reason


class CaretIndexError(Exception):
    """Exception raised when a caret index is out of range at its step.

    Attributes:
        index -- offending caret index
        step -- 1-based position of the index in the word
        available -- number of leaves available at that step
    """

    def __init__(self, index, step, available):
        super().__init__(
            f"Caret index {index} at step {step} is out of range, only {available} leaves are available."
        )
        self.index = index
        self.step = step
        self.available = available


class NotAFactorError(Exception):
    """Exception raised when a quotient is requested for a non-factor.

    Attributes:
        factor -- the forest expected to divide
        forest -- the forest expected to be divided
    """

    def __init__(self, factor, forest):
        super().__init__(f"{factor} is not a factor of {forest}.")
        self.factor = factor
        self.forest = forest


class IdentityHeadError(Exception):
    """Exception raised when the head of an identity forest is requested."""

    def __init__(self, forest):
        super().__init__(f"The identity forest {forest} has no head.")
        self.forest = forest


def _split_word(word, roots, arity):
    """Replays a raw caret word on `roots` trivial trees.
    :returns: the caret set and the leaf addresses in order
    """
    leaves = [(root, ()) for root in range(1, roots + 1)]
    carets = set()
    for step, index in enumerate(word, start=1):
        if not isinstance(index, int) or not 1 <= index <= len(leaves):
            raise CaretIndexError(index, step, len(leaves))
        root, path = leaves[index - 1]
        carets.add((root, path))
        leaves[index - 1:index] = [(root, path + (child,)) for child in range(1, arity + 1)]
    return frozenset(carets), tuple(leaves)


def _canonical_word(carets, roots, arity):
    """Reads the non-decreasing word off a caret set by always splitting the
    leftmost leaf that is still a caret."""
    leaves = [(root, ()) for root in range(1, roots + 1)]
    word = []
    position = 0
    while position < len(leaves):
        root, path = leaves[position]
        if (root, path) in carets:
            word.append(position + 1)
            leaves[position:position + 1] = [(root, path + (child,)) for child in range(1, arity + 1)]
        else:
            position += 1
    return tuple(word)


@dataclass(frozen=True)
class Forest:
    """A morphism of the forest category F_d in canonical form.

    Use normal_form() for raw words, Forest.from_carets() for caret sets; the
    constructor only accepts canonical (non-decreasing) words.
    """

    arity: int
    roots: int
    word: tuple

    def __post_init__(self):
        if self.arity < 2 or self.roots < 1:
            raise ValueError(f"Forests need arity >= 2 and at least one root, got {self.arity}, {self.roots}")
        object.__setattr__(self, "word", tuple(self.word))
        available = self.roots
        previous = 1
        for step, index in enumerate(self.word, start=1):
            if not 1 <= index <= available:
                raise CaretIndexError(index, step, available)
            if index < previous:
                raise ValueError(f"Caret word {self.word} is not in canonical form, use normal_form()")
            previous = index
            available += self.arity - 1

    @classmethod
    def identity(cls, n, arity=2):
        """Returns the identity forest 1_n"""
        return cls(arity, n, ())

    @classmethod
    def caret(cls, index, n, arity=2):
        """Returns the generator lambda_index^n: a single caret on leaf `index` of n trivial trees"""
        return cls(arity, n, (index,))

    @classmethod
    def from_carets(cls, carets, roots, arity=2):
        """Builds a forest from an ancestor-closed set of caret addresses.
        :param carets: iterable of (root, path) addresses
        :param roots: number of roots
        :param arity: arity of the carets
        """
        carets = frozenset(carets)
        for root, path in carets:
            if not 1 <= root <= roots or any(not 1 <= child <= arity for child in path):
                raise ValueError(f"Caret address {(root, path)} does not fit {roots} roots of arity {arity}")
            if path and (root, path[:-1]) not in carets:
                raise ValueError(f"Caret address {(root, path)} has no parent caret")
        return cls(arity, roots, _canonical_word(carets, roots, arity))

    @property
    def leaves(self):
        return self.roots + (self.arity - 1) * len(self.word)

    @cached_property
    def _structure(self):
        return _split_word(self.word, self.roots, self.arity)

    @property
    def carets(self):
        """The caret set, as addresses (root, path) in the infinite forest on the roots"""
        return self._structure[0]

    @property
    def leaf_addresses(self):
        return self._structure[1]

    def is_identity(self):
        return not self.word

    @cached_property
    def tree_sizes(self):
        """Number of leaves of each tree, from left to right"""
        sizes = [0] * self.roots
        for root, _ in self.leaf_addresses:
            sizes[root - 1] += 1
        return tuple(sizes)

    def trees(self):
        """Splits the forest into its single-rooted trees"""
        per_root = [set() for _ in range(self.roots)]
        for root, path in self.carets:
            per_root[root - 1].add((1, path))
        return [Forest.from_carets(carets, 1, self.arity) for carets in per_root]

    def to_text(self):
        prefix = "F" if self.arity == 2 else f"F{self.arity}"
        return f"{prefix}({self.roots};{','.join(str(index) for index in self.word)})"

    def to_json(self):
        return {"arity": self.arity, "roots": self.roots, "word": list(self.word)}

    @classmethod
    def from_text(cls, text):
        """Parses the text encoding, for example "F(1;1,1)" or "F3(2;1)"."""
        match = FOREST_TEXT_PATTERN.match(text.strip())
        if not match:
            raise ValueError(f"Not a forest: {text!r}")
        arity = int(match.group(1)) if match.group(1) else 2
        indices = [int(item) for item in match.group(3).split(",") if item.strip()]
        return normal_form(indices, int(match.group(2)), arity)

    @classmethod
    def from_json(cls, document):
        return normal_form(document["word"], document["roots"], document.get("arity", 2))

    def __str__(self):
        return self.to_text()


def normal_form(word, roots, arity=2):
    """Returns the forest of a raw caret word, in canonical form.
    :param word: sequence of caret indices, index j counted among the leaves present at step j
    :param roots: number of roots
    :param arity: arity of the carets
    """
    carets, _ = _split_word(tuple(word), roots, arity)
    return Forest(arity, roots, _canonical_word(carets, roots, arity))


def rewrite_adjacent(word, position, arity=2):
    """Applies the defining relation once to the adjacent pair at `position`.

    (i, j) with j < i becomes (j, i + d - 1) and the reverse move turns
    (j, i') with i' >= j + d back into (i' - d + 1, j).
    :returns: the rewritten word, or None when the relation does not apply
    """
    first, second = word[position], word[position + 1]
    if second < first:
        pair = (second, first + arity - 1)
    elif second >= first + arity:
        pair = (second - arity + 1, first)
    else:
        return None
    return tuple(word[:position]) + pair + tuple(word[position + 2:])


def _check_same_roots(left, right):
    if left.arity != right.arity:
        raise ForestMismatchError(left, right, "arity mismatch")
    if left.roots != right.roots:
        raise ForestMismatchError(left, right, "root counts differ")


def compose(f, g):
    """Grafts the roots of g onto the leaves of f."""
    if f.arity != g.arity:
        raise ForestMismatchError(f, g, "arity mismatch")
    if f.leaves != g.roots:
        raise ForestMismatchError(f, g, f"{f.leaves} leaves do not meet {g.roots} roots")
    return normal_form(f.word + g.word, f.roots, f.arity)


def compose_all(forests):
    """Composes a non-empty sequence of forests from left to right"""
    return functools.reduce(compose, forests)


def lcm(f, g):
    """Least common right-multiple: the union of the caret sets"""
    _check_same_roots(f, g)
    return Forest.from_carets(f.carets | g.carets, f.roots, f.arity)


def gcd(f, g):
    """Greatest common left-factor: the intersection of the caret sets"""
    _check_same_roots(f, g)
    return Forest.from_carets(f.carets & g.carets, f.roots, f.arity)


def left_divides(a, f):
    return a.arity == f.arity and a.roots == f.roots and a.carets <= f.carets


def left_quotient(a, f):
    """Returns the forest q with compose(a, q) = f.
    :param a: left-factor of f
    :param f: the forest to divide
    """
    _check_same_roots(a, f)
    if not a.carets <= f.carets:
        raise NotAFactorError(a, f)
    leaf_index = {address: position for position, address in enumerate(a.leaf_addresses, start=1)}
    carets = set()
    for root, path in f.carets - a.carets:
        for cut in range(len(path) + 1):
            position = leaf_index.get((root, path[:cut]))
            if position is not None:
                carets.add((position, path[cut:]))
                break
    return Forest.from_carets(carets, a.leaves, a.arity)


def _common_prefix(paths):
    prefix = paths[0]
    for path in paths[1:]:
        length = 0
        while length < min(len(prefix), len(path)) and prefix[length] == path[length]:
            length += 1
        prefix = prefix[:length]
    return prefix


def right_quotient(b, f):
    """Returns the forest a with compose(a, f) = b.

    Each tree of f has to match a whole subtree of b spanning the
    corresponding block of consecutive leaves.
    """
    if b.arity != f.arity:
        raise ForestMismatchError(b, f, "arity mismatch")
    if b.leaves != f.leaves:
        raise NotAFactorError(f, b)
    leaves = b.leaf_addresses
    removed = set()
    position = 0
    for tree, size in zip(f.trees(), f.tree_sizes):
        block = leaves[position:position + size]
        position += size
        if size == 1:
            continue
        roots = {root for root, _ in block}
        if len(roots) != 1:
            raise NotAFactorError(f, b)
        root = roots.pop()
        common = _common_prefix([path for _, path in block])
        subtree = {
            (1, path[len(common):])
            for caret_root, path in b.carets
            if caret_root == root and path[:len(common)] == common
        }
        below = sum(1 for leaf_root, path in leaves if leaf_root == root and path[:len(common)] == common)
        if subtree != set(tree.carets) or below != size:
            raise NotAFactorError(f, b)
        removed.update((root, common + path) for _, path in subtree)
    return Forest.from_carets(b.carets - removed, b.roots, b.arity)


def garside_delta(n, arity=2):
    """The Garside map at object n: every tree is a single caret"""
    return Forest(arity, n, tuple(1 + arity * tree for tree in range(n)))


def is_elementary(f):
    """True when every tree of f is trivial or a single caret"""
    return all(not path for _, path in f.carets)


def garside_head(f):
    """Returns the maximal elementary left-factor of a non-identity forest"""
    if f.is_identity():
        raise IdentityHeadError(f)
    return gcd(f, garside_delta(f.roots, f.arity))


def garside_factorization(f):
    """Returns the greedy factorization of f into elementary forests.
    The factors compose back to f; the identity has the empty factorization.
    """
    factors = []
    while not f.is_identity():
        head = garside_head(f)
        factors.append(head)
        f = left_quotient(head, f)
    return factors


def enumerate_elementary(n_leaves, arity=2):
    """Returns every elementary forest with n_leaves leaves, the identity first"""
    forests = []
    for blocks in compositions(n_leaves, (1, arity)):
        carets = {(root, ()) for root, size in enumerate(blocks, start=1) if size == arity}
        forests.append(Forest.from_carets(carets, len(blocks), arity))
    return forests


@functools.lru_cache(maxsize=None)
def _tree_shapes(n_leaves, arity):
    if n_leaves == 1:
        return (frozenset(),)
    shapes = []
    valid = [size for size in range(1, n_leaves) if (size - 1) % (arity - 1) == 0]
    for sizes in itertools.product(valid, repeat=arity):
        if sum(sizes) != n_leaves:
            continue
        for children in itertools.product(*(_tree_shapes(size, arity) for size in sizes)):
            carets = {()}
            for child, shape in enumerate(children, start=1):
                carets.update((child,) + path for path in shape)
            shapes.append(frozenset(carets))
    return tuple(shapes)


def enumerate_trees(n_leaves, arity=2):
    """Returns all single-rooted forests (trees) with n_leaves leaves"""
    if n_leaves < 1 or (n_leaves - 1) % (arity - 1):
        return []
    return [
        Forest.from_carets({(1, path) for path in shape}, 1, arity)
        for shape in _tree_shapes(n_leaves, arity)
    ]


def height(n):
    """The height function on objects is the identity"""
    return n


def delta(f):
    """Noetherianity witness: additive under composition, positive off identities"""
    return f.leaves - f.roots


def component_reachable(m, n, arity=2):
    """True when F_d contains a forest with m roots and n leaves"""
    return 1 <= m <= n and (n - m) % (arity - 1) == 0


def bottom_caret(forest, position):
    """Returns the caret whose children are exactly the leaves position..position+d-1, or None"""
    block = forest.leaf_addresses[position - 1:position - 1 + forest.arity]
    if len(block) < forest.arity:
        return None
    root, path = block[0]
    if not path or path[-1] != 1:
        return None
    parent = path[:-1]
    if list(block) != [(root, parent + (child,)) for child in range(1, forest.arity + 1)]:
        return None
    return root, parent


def drop_caret(forest, caret):
    """Removes a bottom caret: the forest a with compose(a, lambda) = forest"""
    return Forest.from_carets(forest.carets - {caret}, forest.roots, forest.arity)
