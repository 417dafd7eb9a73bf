#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""graph_rewrite module implements edge replacement categories.

    A rule replaces one directed edge v -> w by a copy of a graph R containing v
    and w. Names are hereditary: replacing the edge with address e creates the
    edges e + (xi,) for the edges xi of R and the vertices e + (u,) for the
    internal vertices u of R, so expansions at different edges commute as
    named graphs. Addresses are tuples of strings; their text form joins the
    letters with dots.
"""
import itertools
import logging
from dataclasses import dataclass, field

import networkx as nx
from iteration_utilities import unique_everseen
from networkx.algorithms import isomorphism

from .complexes import SimplicialComplex
from .constant import IP_AXIOMS, RULE_BASILICA, RULE_D2, RULE_L2
from .zs_product import ActionTable, BoundaryMismatchError, NotInImageError

try:
    from functools import cached_property
except ImportError:
    from cached_property import cached_property


class MissingEdgeError(Exception):
    """Exception raised when a rule is applied at an edge the graph does not have.

    Attributes:
        edge -- requested edge address
    """

    def __init__(self, edge):
        super().__init__(f"Edge {address_text(edge)} is not in the graph.")
        self.edge = edge


class AncestorClosureError(Exception):
    """Exception raised when an expansion set refers to an edge that is never created.

    Attributes:
        address -- the first address without its parent expansion
    """

    def __init__(self, address):
        super().__init__(f"Expansion {address_text(address)} has no parent expansion or base edge.")
        self.address = address


class GraphMismatchError(Exception):
    """Exception raised when rewrites or isomorphisms do not meet at the same graph.

    Attributes:
        left -- first operand
        right -- second operand
    """

    def __init__(self, left, right, reason="graphs differ"):
        super().__init__(f"{left} and {right} do not meet: {reason}.")
        self.left = left
        self.right = right


def address_text(address):
    return ".".join(address)


def parse_address(text):
    return tuple(text.split("."))


@dataclass(frozen=True)
class MultiGraph:
    """A finite directed multigraph with named vertices and edges (loops allowed)"""

    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        names = [address for address, _, _ in self.edges]
        if len(names) != len(set(names)):
            raise ValueError("Edge addresses must be unique")
        for address, source, target in self.edges:
            if source not in self.vertices or target not in self.vertices:
                raise ValueError(f"Edge {address_text(address)} has an endpoint outside the graph")

    @classmethod
    def build(cls, vertices, edges):
        """Builds a graph from plain names: edges are (name, source, target) strings"""
        return cls(
            frozenset((vertex,) for vertex in vertices),
            frozenset(((name,), (source,), (target,)) for name, source, target in edges),
        )

    @cached_property
    def edge_map(self):
        return {address: (source, target) for address, source, target in self.edges}

    @property
    def height(self):
        return len(self.edges)

    def incident(self, vertex):
        return [address for address, source, target in self.edges if vertex in (source, target)]

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for address, source, target in sorted(self.edges):
            graph.add_edge(source, target, key=address)
        return graph

    def to_json(self):
        return {
            "vertices": sorted(address_text(vertex) for vertex in self.vertices),
            "edges": [
                {"id": address_text(address), "src": address_text(source), "dst": address_text(target)}
                for address, source, target in sorted(self.edges)
            ],
        }

    @classmethod
    def from_json(cls, document):
        return cls(
            frozenset(parse_address(vertex) for vertex in document["vertices"]),
            frozenset(
                (parse_address(edge["id"]), parse_address(edge["src"]), parse_address(edge["dst"]))
                for edge in document["edges"]
            ),
        )

    def __str__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class ReplacementRule:
    """Replaces an edge source -> target by the graph `edges` on `vertices`"""

    name: str
    vertices: tuple
    edges: tuple
    source: str = "v"
    target: str = "w"

    def __post_init__(self):
        if self.source not in self.vertices or self.target not in self.vertices:
            raise ValueError(f"Rule {self.name} must contain both endpoints of the replaced edge")

    @property
    def internal(self):
        return tuple(vertex for vertex in self.vertices if vertex not in (self.source, self.target))


RULES = {
    RULE_BASILICA: ReplacementRule(
        RULE_BASILICA, ("v", "x", "w"), (("1", "v", "x"), ("2", "x", "x"), ("3", "x", "w"))
    ),
    RULE_L2: ReplacementRule(RULE_L2, ("v", "x", "w"), (("1", "v", "x"), ("2", "x", "w"))),
    RULE_D2: ReplacementRule(RULE_D2, ("v", "x", "y", "w"), (("1", "v", "x"), ("2", "y", "w"))),
}


def get_rule(name):
    try:
        return RULES[name]
    except KeyError:
        raise ValueError(f"Unknown rule {name}, expected one of {sorted(RULES)}")


def apply_rule(graph, edge, rule):
    """G <| edge: replaces the edge by a copy of the rule's graph"""
    if edge not in graph.edge_map:
        raise MissingEdgeError(edge)
    source, target = graph.edge_map[edge]
    names = {rule.source: source, rule.target: target}
    names.update({vertex: edge + (vertex,) for vertex in rule.internal})
    vertices = set(graph.vertices) | {edge + (vertex,) for vertex in rule.internal}
    edges = {item for item in graph.edges if item[0] != edge}
    edges |= {(edge + (name,), names[start], names[end]) for name, start, end in rule.edges}
    return MultiGraph(frozenset(vertices), frozenset(edges))


def single_edge_graph():
    return MultiGraph.build(["v", "w"], [("a", "v", "w")])


def basilica_graph():
    """Two looped vertices joined by a 2-cycle"""
    return MultiGraph.build(
        ["x", "y"], [("a", "x", "x"), ("b", "y", "y"), ("c", "x", "y"), ("d", "y", "x")]
    )


def bad_graph(middle=1):
    """Two looped triangles joined by a chain of 2-cycles o <-> oo <-> ... <-> kk <-> k.
    :param middle: number of 2-cycles between oo and kk
    """
    if middle < 1:
        raise ValueError("The middle chain needs at least one 2-cycle")
    chain = ["o", "oo"] + [f"c{index}" for index in range(1, middle)] + ["kk", "k"]
    edges = [
        ("o1", "o", "p"), ("p1", "p", "q"), ("q1", "q", "o"), ("p0", "p", "p"), ("q0", "q", "q"),
        ("k1", "k", "l"), ("l1", "l", "m"), ("m1", "m", "k"), ("l0", "l", "l"), ("m0", "m", "m"),
    ]
    for position, (first, second) in enumerate(zip(chain, chain[1:]), start=1):
        edges.append((f"r{position}", first, second))
        edges.append((f"s{position}", second, first))
    return MultiGraph.build(chain + ["p", "q", "l", "m"], edges)


def _edge_prefix(graph, address):
    """Splits an address into the edge of `graph` it descends from and the rest"""
    for cut in range(len(address), 0, -1):
        if address[:cut] in graph.edge_map:
            return address[:cut], address[cut:]
    return None, address


@dataclass(frozen=True)
class RewriteMorphism:
    """The expansion of `target` along an ancestor-closed set of edge addresses.

    Equal target, rule and expansion set mean equal morphisms; `source` is the
    expanded graph.
    """

    target: MultiGraph
    expansions: frozenset
    rule: str = RULE_BASILICA

    def __post_init__(self):
        object.__setattr__(self, "expansions", frozenset(self.expansions))
        letters = {name for name, _, _ in get_rule(self.rule).edges}
        for address in self.expansions:
            if address in self.target.edge_map:
                continue
            if address[:-1] not in self.expansions or address[-1] not in letters:
                raise AncestorClosureError(address)

    @classmethod
    def identity(cls, graph, rule=RULE_BASILICA):
        return cls(graph, frozenset(), rule)

    @classmethod
    def generator(cls, graph, edge, rule=RULE_BASILICA):
        """lambda^G_edge"""
        if edge not in graph.edge_map:
            raise MissingEdgeError(edge)
        return cls(graph, frozenset([edge]), rule)

    @cached_property
    def source(self):
        graph = self.target
        rule = get_rule(self.rule)
        for address in sorted(self.expansions, key=lambda item: (len(item), item)):
            graph = apply_rule(graph, address, rule)
        return graph

    def is_identity(self):
        return not self.expansions

    def to_json(self):
        return {
            "rule": self.rule,
            "target": self.target.to_json(),
            "expansions": sorted(address_text(address) for address in self.expansions),
        }


def compose_rewrites(first, second):
    """first o second: expand first.target, then expand the result along second"""
    if first.rule != second.rule:
        raise GraphMismatchError(first, second, "rules differ")
    if second.target != first.source:
        raise GraphMismatchError(first, second, "the second morphism must start where the first ends")
    return RewriteMorphism(first.target, first.expansions | second.expansions, first.rule)


def _check_same_target(first, second):
    if first.rule != second.rule or first.target != second.target:
        raise GraphMismatchError(first, second, "targets differ")


def lcm_rewrites(first, second):
    _check_same_target(first, second)
    return RewriteMorphism(first.target, first.expansions | second.expansions, first.rule)


def gcd_rewrites(first, second):
    _check_same_target(first, second)
    return RewriteMorphism(first.target, first.expansions & second.expansions, first.rule)


def rewrite_left_divides(first, second):
    return first.rule == second.rule and first.target == second.target and first.expansions <= second.expansions


def rewrite_left_quotient(first, second):
    """Returns q with compose_rewrites(first, q) = second"""
    if not rewrite_left_divides(first, second):
        raise GraphMismatchError(first, second, "not a left-factor")
    return RewriteMorphism(first.source, second.expansions - first.expansions, first.rule)


@dataclass(frozen=True)
class GraphIso:
    """An isomorphism of multigraphs given by its vertex and edge maps"""

    domain: MultiGraph
    codomain: MultiGraph
    vertex_map: frozenset
    edge_map: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", frozenset(dict(self.vertex_map).items()))
        object.__setattr__(self, "edge_map", frozenset(dict(self.edge_map).items()))
        vertices, edges = self.vertices, self.edges
        if set(vertices) != self.domain.vertices or set(vertices.values()) != self.codomain.vertices:
            raise ValueError("Vertex map is not a bijection between the graphs")
        if set(edges) != set(self.domain.edge_map) or set(edges.values()) != set(self.codomain.edge_map):
            raise ValueError("Edge map is not a bijection between the graphs")
        for edge, (source, target) in self.domain.edge_map.items():
            if self.codomain.edge_map[edges[edge]] != (vertices[source], vertices[target]):
                raise ValueError(f"Edge {address_text(edge)} is not mapped onto an edge with matching endpoints")

    @classmethod
    def identity(cls, graph):
        return cls(
            graph,
            graph,
            frozenset((vertex, vertex) for vertex in graph.vertices),
            frozenset((edge, edge) for edge in graph.edge_map),
        )

    @cached_property
    def vertices(self):
        return dict(self.vertex_map)

    @cached_property
    def edges(self):
        return dict(self.edge_map)

    def __mul__(self, other):
        """self o other"""
        if other.codomain != self.domain:
            raise GraphMismatchError(self, other, "codomain and domain differ")
        return GraphIso(
            other.domain,
            self.codomain,
            frozenset((vertex, self.vertices[image]) for vertex, image in other.vertices.items()),
            frozenset((edge, self.edges[image]) for edge, image in other.edges.items()),
        )

    def inverse(self):
        return GraphIso(
            self.codomain,
            self.domain,
            frozenset((image, vertex) for vertex, image in self.vertices.items()),
            frozenset((image, edge) for edge, image in self.edges.items()),
        )

    def is_identity(self):
        return all(vertex == image for vertex, image in self.vertex_map) and all(
            edge == image for edge, image in self.edge_map
        )

    def to_json(self):
        return {
            "vertices": {address_text(vertex): address_text(image) for vertex, image in sorted(self.vertex_map)},
            "edges": {address_text(edge): address_text(image) for edge, image in sorted(self.edge_map)},
        }

    def __str__(self):
        return f"Iso({len(self.vertex_map)} vertices, {len(self.edge_map)} edges)"


def isomorphisms(first, second):
    """All isomorphisms first -> second, in a deterministic order"""
    matcher = isomorphism.MultiDiGraphMatcher(first.to_networkx(), second.to_networkx())
    result = []
    for vertex_map in matcher.isomorphisms_iter():
        groups = {}
        for address, source, target in sorted(first.edges):
            groups.setdefault((source, target), []).append(address)
        choices = []
        for (source, target), addresses in sorted(groups.items()):
            images = sorted(
                address
                for address, image_source, image_target in second.edges
                if (image_source, image_target) == (vertex_map[source], vertex_map[target])
            )
            choices.append([list(zip(addresses, permuted)) for permuted in itertools.permutations(images)])
        for combination in itertools.product(*choices):
            edge_map = frozenset(pair for group in combination for pair in group)
            result.append(GraphIso(first, second, frozenset(vertex_map.items()), edge_map))
    return sorted(result, key=lambda iso: (sorted(iso.vertex_map), sorted(iso.edge_map)))


def automorphisms(graph):
    return isomorphisms(graph, graph)


def _translate(iso, graph, address):
    """Maps an address below an edge of `graph` to the same address below its image"""
    edge, rest = _edge_prefix(graph, address)
    if edge is None:
        raise GraphMismatchError(iso, address, "address does not descend from an edge")
    return iso.edges[edge] + rest


def _translate_vertex(iso, graph, vertex):
    if vertex in iso.vertices:
        return iso.vertices[vertex]
    return _translate(iso, graph, vertex[:-1]) + vertex[-1:]


def iso_act(iso, morphism):
    """g . lambda^G_e = lambda^G'_g(e), extended to expansion sets"""
    if iso.domain != morphism.target:
        raise BoundaryMismatchError(iso, morphism, "the isomorphism must start at the target")
    expansions = frozenset(_translate(iso, morphism.target, address) for address in morphism.expansions)
    return RewriteMorphism(iso.codomain, expansions, morphism.rule)


def iso_clone(iso, morphism):
    """g^m: the isomorphism of expanded graphs taking e + zeta to g(e) + zeta"""
    if iso.domain != morphism.target:
        raise BoundaryMismatchError(iso, morphism, "the isomorphism must start at the target")
    image = iso_act(iso, morphism)
    source = morphism.source
    return GraphIso(
        source,
        image.source,
        frozenset((vertex, _translate_vertex(iso, morphism.target, vertex)) for vertex in source.vertices),
        frozenset((edge, _translate(iso, morphism.target, edge)) for edge in source.edge_map),
    )


def recover_iso(clone, morphism):
    """Restricts g^m back to the isomorphism g of the target; raises NotInImageError
    when the given isomorphism is not a clone along the morphism"""
    if clone.domain != morphism.source:
        raise BoundaryMismatchError(clone, morphism, "the isomorphism must start at the source")
    target = morphism.target
    vertices = {}
    edges = {}
    try:
        for vertex in target.vertices:
            vertices[vertex] = clone.vertices[vertex]
        for edge in target.edge_map:
            if edge in morphism.expansions:
                child = next(address for address in clone.edges if address[:len(edge)] == edge)
                image = clone.edges[child]
                edges[edge] = image[:len(image) - (len(child) - len(edge))]
            else:
                edges[edge] = clone.edges[edge]
        codomain = MultiGraph(
            frozenset(vertices.values()),
            frozenset((edges[edge], vertices[source], vertices[target_vertex])
                      for edge, (source, target_vertex) in target.edge_map.items()),
        )
        recovered = GraphIso(target, codomain, frozenset(vertices.items()), frozenset(edges.items()))
    except (KeyError, ValueError, StopIteration):
        raise NotInImageError(clone, morphism)
    if iso_clone(recovered, morphism) != clone:
        raise NotInImageError(clone, morphism)
    return recovered


class GraphActionTable(ActionTable):
    """Graph isomorphisms acting on rewrite morphisms, for the generic axiom checker.

    Instances use the automorphisms of each base graph and single or double
    expansions.
    """

    def __init__(self, rule, graphs):
        self.rule = rule
        self.family = f"graph:{rule}"
        self.graphs = list(graphs)

    def act(self, unit, morphism):
        return iso_act(unit, morphism)

    def clone(self, unit, morphism):
        return iso_clone(unit, morphism)

    def compose_units(self, first, second):
        return first * second

    def compose_morphisms(self, first, second):
        return compose_rewrites(first, second)

    def unit_identity(self, obj):
        return GraphIso.identity(obj)

    def morphism_identity(self, obj):
        return RewriteMorphism.identity(obj, self.rule)

    def morphism_target(self, morphism):
        return morphism.target

    def morphism_source(self, morphism):
        return morphism.source

    def unit_domain(self, unit):
        return unit.domain

    def unit_codomain(self, unit):
        return unit.codomain

    def encode_morphism(self, morphism):
        return sorted(address_text(address) for address in morphism.expansions)

    def axiom_instances(self, bound):
        instances = {axiom: [] for axiom in IP_AXIOMS}
        for graph in self.graphs:
            if graph.height > bound:
                continue
            units = automorphisms(graph)
            singles = [RewriteMorphism.generator(graph, edge, self.rule) for edge in sorted(graph.edge_map)]
            pairs = [
                (first, RewriteMorphism.generator(first.source, edge, self.rule))
                for first in singles
                for edge in sorted(first.source.edge_map)
            ]
            morphisms = [RewriteMorphism.identity(graph, self.rule)] + singles
            instances["IP1"].extend((morphism,) for morphism in morphisms)
            instances["IP2"].extend((unit,) for unit in units)
            instances["IP3"].extend((a, b, m) for a in units for b in units for m in singles)
            instances["IP4"].extend((unit, first, second) for unit in units for first, second in pairs)
            instances["IP5"].extend((morphism,) for morphism in morphisms)
            instances["IP6"].extend((unit,) for unit in units)
            instances["IP7"].extend((a, b, m) for a in units for b in units for m in singles)
            instances["IP8"].extend((unit, first, second) for unit in units for first, second in pairs)
        return instances


@dataclass(frozen=True)
class Pattern:
    """An embedded copy of the rule graph that can be contracted to a single edge"""

    edges: frozenset
    source: tuple
    target: tuple
    internal: frozenset = field(default_factory=frozenset)
    edge_images: tuple = ()

    @property
    def key(self):
        return self.edges, self.source, self.target

    def label(self):
        return "{" + ",".join(sorted(address_text(edge) for edge in self.edges)) + "}"

    def disjoint(self, other):
        return not self.edges & other.edges


def _embeddings(graph, rule):
    """Backtracking search for maps of the rule graph into `graph`"""
    rule_edges = list(rule.edges)
    results = []

    def extend(position, vertex_map, used):
        if position == len(rule_edges):
            results.append((dict(vertex_map), tuple(used)))
            return
        name, start, end = rule_edges[position]
        for address, source, target in sorted(graph.edges):
            if address in used:
                continue
            assigned = dict(vertex_map)
            consistent = True
            for rule_vertex, image in ((start, source), (end, target)):
                if rule_vertex in assigned and assigned[rule_vertex] != image:
                    consistent = False
                    break
                assigned[rule_vertex] = image
            if consistent:
                extend(position + 1, assigned, used + [address])

    extend(0, {}, [])
    return results


def _candidate_patterns(graph, rule):
    for vertex_map, used in _embeddings(graph, rule):
        if any(rule_vertex not in vertex_map for rule_vertex in rule.vertices):
            continue
        internal = [vertex_map[vertex] for vertex in rule.internal]
        endpoints = {vertex_map[rule.source], vertex_map[rule.target]}
        if len(set(internal)) != len(internal) or endpoints & set(internal):
            continue
        edges = frozenset(used)
        if any(set(graph.incident(vertex)) - edges for vertex in internal):
            continue
        yield Pattern(
            edges,
            vertex_map[rule.source],
            vertex_map[rule.target],
            frozenset(internal),
            tuple(zip((name for name, _, _ in rule.edges), used)),
        )


def find_coexpansions(graph, rule, bound=None, logger=None):
    """All patterns of `graph` that are copies of the rule graph: rule edges land on
    distinct edges with matching endpoints, internal vertices land injectively
    away from the endpoints and carry no edge outside the pattern."""
    logger = logger or logging.getLogger(__name__)
    if bound is not None and graph.height > bound:
        raise ValueError(f"Graph with {graph.height} edges exceeds the configured bound {bound}")
    patterns = list(unique_everseen(_candidate_patterns(graph, rule), key=lambda pattern: pattern.key))
    logger.debug(f"Found {len(patterns)} coexpansion patterns")
    return sorted(patterns, key=lambda pattern: (sorted(pattern.edges), pattern.source, pattern.target))


def contract(graph, pattern, rule):
    """Contracts a pattern to a single edge e, returning (G, e) with G <| e isomorphic to graph"""
    names = [address for _, address in pattern.edge_images]
    parents = {address[:-1] for address in names}
    letters_match = all(address[-1] == name for name, address in pattern.edge_images)
    if len(parents) == 1 and letters_match:
        edge = parents.pop()
    else:
        used = {address for address in graph.edge_map}
        index = 1
        while (f"c{index}",) in used:
            index += 1
        edge = (f"c{index}",)
    vertices = graph.vertices - pattern.internal
    edges = {item for item in graph.edges if item[0] not in pattern.edges}
    edges.add((edge, pattern.source, pattern.target))
    contracted = MultiGraph(vertices, frozenset(edges))
    if not isomorphisms(apply_rule(contracted, edge, rule), graph):
        raise GraphMismatchError(contracted, graph, "the contraction does not expand back")
    return contracted, edge


def build_E_graph(graph, rule, bound=None, logger=None):
    """Coarse complex of elementary co-expansions of `graph`: patterns are vertices
    and pairwise edge-disjoint patterns span simplices"""
    patterns = find_coexpansions(graph, rule, bound, logger)
    adjacent = [
        (first, second)
        for first, second in itertools.combinations(range(len(patterns)), 2)
        if patterns[first].disjoint(patterns[second])
    ]
    return SimplicialComplex.from_flag_graph([pattern.label() for pattern in patterns], adjacent)


def height_graph(graph):
    return graph.height
