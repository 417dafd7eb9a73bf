#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""complexes module builds the finite simplicial complexes behind the finiteness checks.

    Matching complexes of graphs, the complexes E(n) of elementary morphisms
    for the forest families, descending links of trees and sublevel complexes
    of the positive cone, together with flagness and grounded connectivity
    certificates. Homology is computed by the homology module.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field

import networkx as nx

from .constant import CONTRACTIBLE, CYCLIC, COMPLETE, F, LINEAR, NO_CLAIM, T, V
from .forest_cat import (
    NotAFactorError,
    bottom_caret,
    drop_caret,
    enumerate_elementary,
    enumerate_trees,
    is_elementary,
    left_quotient,
    right_quotient,
)
from .homology import connectivity_from_homology, reduced_homology
from .utils import check_budget
from .zs_product import action_table

try:
    from functools import cached_property
except ImportError:
    from cached_property import cached_property


class BoundExceededError(Exception):
    """Exception raised when a construction is requested beyond its configured bound.

    Attributes:
        what -- the construction
        value -- requested size
        bound -- configured bound
    """

    def __init__(self, what, value, bound):
        super().__init__(f"Cannot build {what} at size {value}: the configured bound is {bound}.")
        self.what = what
        self.value = value
        self.bound = bound


def _check_bound(what, value, bound):
    if bound is not None and value > bound:
        raise BoundExceededError(what, value, bound)


@dataclass(frozen=True)
class SimpleGraph:
    """A loopless simple graph on vertices 1..n"""

    n: int
    edges: frozenset

    def __post_init__(self):
        edges = frozenset(tuple(sorted(edge)) for edge in self.edges)
        for first, second in edges:
            if first == second or not (1 <= first <= self.n and 1 <= second <= self.n):
                raise ValueError(f"Edge {(first, second)} does not fit a simple graph on {self.n} vertices")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_networkx(cls, graph, n):
        return cls(n, frozenset(tuple(sorted(edge)) for edge in graph.edges()))


def linear_graph(n):
    """L_n: the path 1 - 2 - ... - n"""
    return SimpleGraph.from_networkx(nx.path_graph(range(1, n + 1)), n)


def cyclic_graph(n):
    """C_n: L_n plus the edge {1, n}"""
    return SimpleGraph.from_networkx(nx.cycle_graph(range(1, n + 1)), n)


def complete_graph(n):
    return SimpleGraph.from_networkx(nx.complete_graph(range(1, n + 1)), n)


GRAPH_BUILDERS = {LINEAR: linear_graph, CYCLIC: cyclic_graph, COMPLETE: complete_graph}


def graph_by_kind(kind, n):
    try:
        return GRAPH_BUILDERS[kind](n)
    except KeyError:
        raise ValueError(f"Unknown graph kind {kind}")


class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    Vertices carry labels; simplices are sorted tuples of vertex indices.
    """

    def __init__(self, vertices, facets):
        self.vertices = tuple(vertices)
        index = range(len(self.vertices))
        candidates = {tuple(sorted(set(facet))) for facet in facets}
        for facet in candidates:
            if any(vertex not in index for vertex in facet):
                raise ValueError(f"Facet {facet} uses unknown vertices")
        covered = {vertex for facet in candidates for vertex in facet}
        candidates |= {(vertex,) for vertex in index if vertex not in covered}
        candidates.discard(())
        facets = []
        containing = {}
        for facet in sorted(candidates, key=lambda item: (-len(item), item)):
            if set.intersection(*(containing.get(vertex, set()) for vertex in facet)):
                continue
            for vertex in facet:
                containing.setdefault(vertex, set()).add(len(facets))
            facets.append(facet)
        self.facets = tuple(sorted(facets))
        self._simplices = {}

    @classmethod
    def from_flag_graph(cls, vertices, edges):
        """The flag (clique) complex of a graph on the given vertex labels"""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(vertices)))
        graph.add_edges_from(edges)
        return cls(vertices, [tuple(sorted(clique)) for clique in nx.find_cliques(graph)])

    @classmethod
    def from_json(cls, document):
        vertices = [tuple(label) if isinstance(label, list) else label for label in document["vertices"]]
        return cls(vertices, [tuple(facet) for facet in document["facets"]])

    @property
    def dimension(self):
        return max((len(facet) - 1 for facet in self.facets), default=-1)

    def simplices(self, k):
        """All k-simplices, sorted"""
        if k not in self._simplices:
            if k < 0:
                return [()]
            faces = set()
            for facet in self.facets:
                if len(facet) > k:
                    faces.update(itertools.combinations(facet, k + 1))
                    check_budget(f"{k}-simplices", len(faces))
            self._simplices[k] = sorted(faces)
        return self._simplices[k]

    def all_simplices(self):
        return [simplex for k in range(self.dimension + 1) for simplex in self.simplices(k)]

    def f_vector(self):
        return [len(self.simplices(k)) for k in range(self.dimension + 1)]

    @cached_property
    def one_skeleton(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.vertices)))
        graph.add_edges_from(self.simplices(1))
        return graph

    @cached_property
    def neighbor_masks(self):
        """Closed neighborhoods as bitmasks (a vertex counts as adjacent to itself)"""
        masks = [1 << vertex for vertex in range(len(self.vertices))]
        for first, second in self.simplices(1):
            masks[first] |= 1 << second
            masks[second] |= 1 << first
        return masks

    def relabel(self, mapping):
        """Returns the complex with every vertex label replaced by mapping(label)"""
        return SimplicialComplex([mapping(label) for label in self.vertices], self.facets)

    def labelled_facets(self):
        return {frozenset(self.vertices[vertex] for vertex in facet) for facet in self.facets}

    def to_json(self):
        vertices = [list(label) if isinstance(label, tuple) else label for label in self.vertices]
        return {"vertices": vertices, "facets": [list(facet) for facet in self.facets]}


def same_labelled_complex(first, second):
    """True when two complexes have equal vertex labels and equal facets on those labels"""
    return set(first.vertices) == set(second.vertices) and first.labelled_facets() == second.labelled_facets()


def is_isomorphic(first, second, vertex_map=None):
    """Decides isomorphism: through an explicit label map when given, otherwise on
    1-skeleta (complete for flag complexes)."""
    if vertex_map is not None:
        return same_labelled_complex(first.relabel(vertex_map), second)
    if not (is_flag(first) and is_flag(second)):
        raise ValueError("Isomorphism without a vertex map is only decided for flag complexes")
    return nx.is_isomorphic(first.one_skeleton, second.one_skeleton)


def matching_complex(graph):
    """M(graph): simplices are the sets of pairwise disjoint edges"""
    edges = sorted(graph.edges)
    adjacent = [
        (first, second)
        for first, second in itertools.combinations(range(len(edges)), 2)
        if not set(edges[first]) & set(edges[second])
    ]
    return SimplicialComplex.from_flag_graph(edges, adjacent)


def is_flag(complex_):
    cliques = {tuple(sorted(clique)) for clique in nx.find_cliques(complex_.one_skeleton)}
    return cliques == set(complex_.facets)


def is_k_ground(complex_, simplex, k):
    """True when every vertex is adjacent to all but at most k vertices of the simplex"""
    return _ground_level(complex_, simplex) <= k


def _ground_level(complex_, simplex):
    mask = 0
    for vertex in simplex:
        mask |= 1 << vertex
    return max(bin(mask & ~neighbors).count("1") for neighbors in complex_.neighbor_masks)


@dataclass
class GroundedCertificate:
    bound: int
    simplex: tuple = ()
    k: int = None
    m: int = None

    def to_json(self):
        bound = "contractible" if self.bound == CONTRACTIBLE else self.bound
        return {"bound": bound, "simplex": list(self.simplex), "k": self.k, "m": self.m}


def grounded_certificate(complex_):
    """Best connectivity bound over all k-ground simplices of a flag complex.

    A k-ground simplex of dimension at least mk certifies (m - 1)-connectivity;
    a 0-ground simplex is a cone point. Non-flag and empty complexes get no claim.
    """
    if not complex_.vertices or not is_flag(complex_):
        return GroundedCertificate(NO_CLAIM)
    best = GroundedCertificate(-1, complex_.facets[0][:1], None, 0)
    for simplex in complex_.all_simplices():
        k = _ground_level(complex_, simplex)
        if k == 0:
            return GroundedCertificate(CONTRACTIBLE, simplex, 0, None)
        m = (len(simplex) - 1) // k
        if m - 1 > best.bound:
            best = GroundedCertificate(m - 1, simplex, k, m)
    return best


def grounded_bound(complex_):
    return grounded_certificate(complex_).bound


# E(n) for the forest families.
#
# An elementary morphism a = e o g with n source leaves merges blocks of source
# positions, caret by caret. Left units permute carets without changing the
# order inside a block, so the class of a is the set of merged blocks, each an
# ordered tuple of source positions.


@dataclass
class EPoset:
    """Classes of non-unit elementary morphisms with source n, ordered by containment of blocks"""

    family: str
    n: int
    arity: int
    elements: list = field(default_factory=list)

    @property
    def atoms(self):
        return sorted(next(iter(element)) for element in self.elements if len(element) == 1)

    def less_equal(self, first, second):
        return first <= second

    def order_pairs(self):
        return [
            (first, second)
            for first in self.elements
            for second in self.elements
            if first != second and self.less_equal(first, second)
        ]

    def is_partial_order(self):
        relation = set(self.order_pairs())
        return all((second, first) not in relation for first, second in relation)


def _family_blocks(family, n, arity):
    """Single-caret classes: the ordered blocks one caret can merge"""
    positions = range(1, n + 1)
    if family == F:
        return [tuple(range(start, start + arity)) for start in range(1, n - arity + 2)]
    if family == T:
        if n < arity:
            return []
        blocks = {tuple((start + offset - 1) % n + 1 for offset in range(arity)) for start in positions}
        return sorted(blocks)
    if family == V:
        return sorted(itertools.permutations(positions, arity))
    raise ValueError(f"E(n) is built for the families F, T and V, not {family}")


def _disjoint(first, second):
    return not set(first) & set(second)


def enumerate_E_classes(family, n, arity=2, method="keys", logger=None):
    """Returns the set of classes of non-unit elementary morphisms with source n.
    :param method: "keys" builds the block sets directly; "orbits" enumerates
        every decorated elementary morphism and quotients by left units
    """
    logger = logger or logging.getLogger(__name__)
    if method == "keys":
        blocks = _family_blocks(family, n, arity)
        graph = nx.Graph()
        graph.add_nodes_from(blocks)
        graph.add_edges_from(
            (first, second) for first, second in itertools.combinations(blocks, 2) if _disjoint(first, second)
        )
        classes = set()
        for clique in nx.find_cliques(graph):
            for size in range(1, len(clique) + 1):
                classes.update(frozenset(subset) for subset in itertools.combinations(clique, size))
        return classes
    if method == "orbits":
        return _orbit_classes(family, n, arity, logger)
    raise ValueError(f"Unknown enumeration method {method}")


def _block_key(forest, permutation):
    """Blocks of source positions merged by the carets of forest o permutation"""
    inverse = permutation.inverse()
    blocks = []
    position = 1
    for size in forest.tree_sizes:
        if size > 1:
            blocks.append(tuple(inverse(leaf) for leaf in range(position, position + size)))
        position += size
    return frozenset(blocks)


def left_unit_orbits(family, n, arity=2):
    """Orbits of the decorated elementary morphisms e o g with source n under
    left multiplication h (e o g) = (h . e) o (h^e g)."""
    table = action_table(family, arity)
    units = table.units(n)
    forests = [forest for forest in enumerate_elementary(n, arity) if not forest.is_identity()]
    check_budget("decorated elementary morphisms", len(units) * len(forests))
    seen = set()
    orbits = []
    for forest in forests:
        left_units = table.units(forest.roots)
        for unit in units:
            if (forest, table.permutation_of(unit)) in seen:
                continue
            orbit = frozenset(
                (table.act(left, forest), table.permutation_of(table.compose_units(table.clone(left, forest), unit)))
                for left in left_units
            )
            seen |= orbit
            orbits.append(orbit)
    return orbits


def _orbit_classes(family, n, arity, logger):
    classes = set()
    for orbit in left_unit_orbits(family, n, arity):
        keys = {_block_key(forest, permutation) for forest, permutation in orbit}
        if len(keys) != 1:
            logger.warning(f"A left-unit orbit at n={n} spans {len(keys)} block sets")
        classes |= keys
    return classes


def build_E(family, n, arity=2, method="keys", bound=None, logger=None):
    """Builds the poset E(n) and its coarse complex (single carets as vertices).
    :returns: (EPoset, SimplicialComplex)
    """
    _check_bound(f"E_{family}({n})", n, bound)
    classes = enumerate_E_classes(family, n, arity, method, logger)
    poset = EPoset(family, n, arity, sorted(classes, key=lambda item: (len(item), sorted(item))))
    atoms = poset.atoms
    index = {atom: position for position, atom in enumerate(atoms)}
    facets = [tuple(index[block] for block in element) for element in classes]
    return poset, SimplicialComplex(atoms, facets)


def e_poset_realization(poset):
    """The order complex of the poset: chains of elements"""
    elements = poset.elements
    edges = [
        (first, second)
        for first, second in itertools.combinations(range(len(elements)), 2)
        if elements[first] < elements[second] or elements[second] < elements[first]
    ]
    labels = [tuple(sorted(element)) for element in elements]
    return SimplicialComplex.from_flag_graph(labels, edges)


def _surjections(size, blocks):
    return sum((-1) ** i * math.comb(blocks, i) * (blocks - i) ** size for i in range(blocks + 1))


def barycentric_f_vector(complex_):
    """f-vector of the barycentric subdivision: k-simplices are strict chains of k+1 faces"""
    f_vector = complex_.f_vector()
    return [
        sum(count * _surjections(size + 1, k + 1) for size, count in enumerate(f_vector))
        for k in range(len(f_vector))
    ]


def _is_matching(edges):
    return all(_disjoint(first, second) for first, second in itertools.combinations(edges, 2))


def e_to_matching_map(complex_, n):
    """The map E_V(n) -> M(K_n) forgetting the order inside each block.

    Reports surjectivity and, over every simplex of M(K_n), the facets of the
    fiber (all orientations of its edges, 2^(k+1) of them on a k-simplex).
    """
    target = matching_complex(complete_graph(n))
    edge = {vertex: tuple(sorted(label)) for vertex, label in enumerate(complex_.vertices)}
    simplicial = all(_is_matching([edge[vertex] for vertex in simplex]) for simplex in complex_.facets)
    images = {}
    for k in range(complex_.dimension + 1):
        for simplex in complex_.simplices(k):
            image = frozenset(edge[vertex] for vertex in simplex)
            images.setdefault(image, []).append(simplex)
    fibers = []
    for k in range(target.dimension + 1):
        for simplex in target.simplices(k):
            labels = frozenset(target.vertices[vertex] for vertex in simplex)
            fiber = images.get(labels, [])
            fibers.append(
                {
                    "simplex": sorted(list(label) for label in labels),
                    "dimension": k,
                    "facets": len(fiber),
                    "expected": 2 ** (k + 1),
                    "pass": len(fiber) == 2 ** (k + 1),
                }
            )
    surjective = all(fiber["facets"] > 0 for fiber in fibers)
    return {"simplicial": simplicial, "surjective": surjective, "fibers": fibers}


def fiber_complex(complex_, labels):
    """Subcomplex of E_V(n) lying over the matching `labels` of K_n"""
    wanted = {tuple(sorted(label)) for label in labels}
    keep = [vertex for vertex, label in enumerate(complex_.vertices) if tuple(sorted(label)) in wanted]
    position = {vertex: index for index, vertex in enumerate(keep)}
    facets = set()
    for facet in complex_.facets:
        restricted = tuple(position[vertex] for vertex in facet if vertex in position)
        if restricted:
            facets.add(restricted)
    return SimplicialComplex([complex_.vertices[vertex] for vertex in keep], facets)


def _cancel_bottom_carets(tree, forest):
    """Removes carets sitting at the same leaf block at the bottom of both forests"""
    changed = True
    while changed:
        changed = False
        for position in range(1, forest.leaves + 1):
            caret = bottom_caret(forest, position)
            other = bottom_caret(tree, position)
            if caret is not None and other is not None:
                forest = drop_caret(forest, caret)
                tree = drop_caret(tree, other)
                changed = True
                break
    return tree, forest


def _right_divides(first, second):
    """True when second = a o first for some forest a"""
    try:
        right_quotient(second, first)
        return True
    except NotAFactorError:
        return False


def descending_link(tree, bound=None, logger=None):
    """Coarse descending link of the vertex given by a tree with n leaves.

    Lower neighbours are the fractions tree o f^-1 for non-identity elementary f
    with n leaves; single carets are the vertices and a set of them spans a
    simplex when one elementary f lies below all of them.
    """
    logger = logger or logging.getLogger(__name__)
    if tree.roots != 1:
        raise ValueError(f"{tree} is not a tree")
    _check_bound("descending link", tree.leaves, bound)
    elementary = [forest for forest in enumerate_elementary(tree.leaves, tree.arity) if not forest.is_identity()]
    atoms = [forest for forest in elementary if len(forest.word) == 1]
    labels = []
    for atom in atoms:
        numerator, denominator = _cancel_bottom_carets(tree, atom)
        labels.append((numerator.to_text(), denominator.to_text()))
    facets = []
    for forest in elementary:
        facets.append(tuple(index for index, atom in enumerate(atoms) if _right_divides(atom, forest)))
    logger.debug(f"Descending link of {tree}: {len(atoms)} vertices, {len(elementary)} lower classes")
    return SimplicialComplex(labels, facets)


def positive_sublevel_complex(limit, arity=2, bound=None, logger=None):
    """Flag complex on trees with fewer than `limit` leaves; t and t' are adjacent
    when one is the other followed by a non-identity elementary forest."""
    logger = logger or logging.getLogger(__name__)
    _check_bound("positive sublevel complex", limit, bound)
    trees = [tree for leaves in range(1, limit) for tree in enumerate_trees(leaves, arity)]
    check_budget("sublevel vertices", len(trees))
    edges = []
    for first, second in itertools.combinations(range(len(trees)), 2):
        small, large = sorted((trees[first], trees[second]), key=lambda tree: tree.leaves)
        if small.leaves == large.leaves or not small.carets <= large.carets:
            continue
        quotient = left_quotient(small, large)
        if is_elementary(quotient):
            edges.append((first, second))
    logger.debug(f"Sublevel complex below {limit} leaves: {len(trees)} vertices, {len(edges)} edges")
    return SimplicialComplex.from_flag_graph([tree.to_text() for tree in trees], edges)


def connectivity_report(complex_, max_dim, budget=None, logger=None):
    """Homology, homological connectivity and the grounded certificate of one complex"""
    certificate = grounded_certificate(complex_)
    if complex_.vertices:
        homology = reduced_homology(complex_, max_dim, budget, logger)
        connectivity = connectivity_from_homology(homology, max_dim)
    else:
        homology, connectivity = {}, -2
    claimed = min(certificate.bound, max_dim)
    return {
        "f_vector": complex_.f_vector(),
        "homology": {str(k): value for k, value in sorted(homology.items())},
        "connectivity": connectivity,
        "grounded": certificate.to_json(),
        "consistent": claimed <= connectivity,
    }
