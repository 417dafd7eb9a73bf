#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""verification module contains the named check suites run by `ore verify`.

    Every suite takes a SuiteContext and returns a list of report records
    {name, instance, expected, got, pass}. Suites are independent of each other
    and can run concurrently; randomized ones draw from a generator seeded by
    the context.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field

from .codec import encode
from .complexes import (
    barycentric_f_vector,
    build_E,
    connectivity_report,
    descending_link,
    e_poset_realization,
    e_to_matching_map,
    enumerate_E_classes,
    fiber_complex,
    graph_by_kind,
    is_isomorphic,
    matching_complex,
    positive_sublevel_complex,
)
from .constant import (
    BRAIDED_FAMILIES,
    BV,
    COMPLETE,
    CYCLIC,
    DEFAULT_SEED,
    F,
    FAMILIES,
    FOREST_FAMILIES,
    LINEAR,
    RULE_BASILICA,
    T,
    V,
)
from .forest_cat import (
    Forest,
    component_reachable,
    compose,
    compose_all,
    enumerate_trees,
    garside_factorization,
    gcd,
    is_elementary,
    lcm,
    left_divides,
    left_quotient,
    normal_form,
    rewrite_adjacent,
    right_quotient,
)
from .fraction_groups import (
    FractionElement,
    eq,
    expand,
    identity,
    inv,
    is_identity,
    mul,
    order,
    project_to_v,
    random_element,
    reduce,
)
from .graph_rewrite import (
    GraphActionTable,
    RewriteMorphism,
    automorphisms,
    bad_graph,
    basilica_graph,
    build_E_graph,
    contract,
    find_coexpansions,
    get_rule,
    iso_clone,
    recover_iso,
    single_edge_graph,
)
from .homology import reduced_homology
from .schema import schema
from .unit_groupoids import (
    Braid,
    Permutation,
    Rotation,
    braid_crossings,
    braid_delta,
    braid_eq,
    braid_lift,
    braid_project,
    unit_group_order,
)
from .utils import seeded_random
from .zs_product import (
    EQUIVARIANCE_DEGREE,
    BVCloningSystem,
    TrivialCloningSystem,
    VCloningSystem,
    action_table,
    check_bv_relations,
    check_injectivity,
    check_ip_axioms,
    check_pi_equivariance,
    cloning_system_adapter,
    pi_equivariance_samples,
    validate_cloning_system,
)

BOUND_KEYS = ("ip_axioms", "e_complex", "descending_link", "sublevel", "graph_edges")
SAMPLE_KEYS = ("group_laws", "pi_equivariance", "normal_form")
EXHAUSTIVE_WORD_LENGTH = 5
SAMPLED_WORD_LENGTH = 8
ASSOCIATIVE_LEAVES = 5
CONNECTIVITY_RANGE = range(5, 13)
# M(L_4) is an edge plus an isolated vertex, so disconnected, below floor(4/4) - 1
L4_CONNECTIVITY = -1
WORD_SHAPES = ((2, 3), (3, 2))
SAMPLED_CELLS = sum(roots for _, roots in WORD_SHAPES) * (SAMPLED_WORD_LENGTH - EXHAUSTIVE_WORD_LENGTH)


def _defaults(prefix, keys):
    return {key: schema[f"{prefix}.{key}"]["default"] for key in keys}


@dataclass
class SuiteContext:
    """Parameters shared by the suites; `bound` and `family` come from the command line"""

    seed: int = DEFAULT_SEED
    bounds: dict = field(default_factory=lambda: _defaults("bounds", BOUND_KEYS))
    samples: dict = field(default_factory=lambda: _defaults("samples", SAMPLE_KEYS))
    budget: int = None
    certify: bool = False
    family: str = None
    bound: int = None
    logger: logging.Logger = None

    @classmethod
    def from_config(cls, config, seed=None, family=None, bound=None, logger=None):
        return cls(
            seed=config.get_value("seed") if seed is None else seed,
            bounds={key: config.get_value(f"bounds.{key}") for key in BOUND_KEYS},
            samples={key: config.get_value(f"samples.{key}") for key in SAMPLE_KEYS},
            budget=config.get_value("size_budget"),
            certify=config.get_value("debug_certificates"),
            family=family,
            bound=bound,
            logger=logger,
        )

    def get_bound(self, key):
        return self.bound if self.bound is not None else self.bounds[key]

    def families(self, allowed=FAMILIES):
        if self.family:
            return [self.family] if self.family in allowed else []
        return list(allowed)

    @property
    def log(self):
        return self.logger or logging.getLogger(__name__)


def record(name, instance, expected, got, passed=None):
    """A report record; `pass` defaults to expected == got"""
    return {
        "name": name,
        "instance": encode(instance),
        "expected": encode(expected),
        "got": encode(got),
        "pass": expected == got if passed is None else bool(passed),
    }


def _tally(name, instance, failures, checked):
    """Summary record of a law checked on many instances, carrying the first failure"""
    got = {"failures": len(failures), "checked": checked}
    if failures:
        got["first"] = failures[0]
    return record(name, instance, {"failures": 0}, got, not failures)


# Forest category


def _sort_by_rewrites(word, arity, rng):
    """Applies the relation at randomly chosen descents until the word is non-decreasing"""
    word = tuple(word)
    while True:
        descents = [position for position in range(len(word) - 1) if word[position + 1] < word[position]]
        if not descents:
            return word
        word = rewrite_adjacent(word, rng.choice(descents), arity)


def _random_walk(word, arity, rng, steps):
    """Applies the relation in either direction at random positions"""
    word = tuple(word)
    for _ in range(steps):
        if len(word) < 2:
            return word
        moved = rewrite_adjacent(word, rng.randrange(len(word) - 1), arity)
        word = moved if moved is not None else word
    return word


def _raw_words(roots, length, arity):
    """Every raw caret word of the given length at `roots` roots"""
    ranges = [range(1, roots + step * (arity - 1) + 1) for step in range(length)]
    return itertools.product(*ranges)


def _random_word(rng, roots, length, arity):
    return tuple(rng.randint(1, roots + step * (arity - 1)) for step in range(length))


def _check_word(word, roots, arity, rng):
    forest = normal_form(word, roots, arity)
    canonical = forest.word
    if list(canonical) != sorted(canonical):
        return "normal form is not non-decreasing"
    if _sort_by_rewrites(word, arity, rng) != canonical:
        return "rewriting reached another word"
    if normal_form(_random_walk(word, arity, rng, 2 * len(word)), roots, arity) != forest:
        return "a rewrite changed the forest"
    return None


def suite_normal_form(context):
    """Every rewrite order of a caret word reaches the same non-decreasing word"""
    rng = seeded_random(context.seed)
    records = []
    for arity, max_roots in WORD_SHAPES:
        for roots in range(1, max_roots + 1):
            for length in range(0, SAMPLED_WORD_LENGTH + 1):
                if length <= EXHAUSTIVE_WORD_LENGTH:
                    words, mode = list(_raw_words(roots, length, arity)), "exhaustive"
                else:
                    count = max(context.samples["normal_form"] // SAMPLED_CELLS, 1)
                    words = [_random_word(rng, roots, length, arity) for _ in range(count)]
                    mode = "sampled"
                failures = []
                for word in words:
                    problem = _check_word(word, roots, arity, rng)
                    if problem:
                        failures.append({"word": list(word), "problem": problem})
                instance = {"arity": arity, "roots": roots, "length": length, "mode": mode}
                records.append(_tally("normal-form", instance, failures, len(words)))
    return records


def _trees_up_to(leaves, arity=2):
    return [tree for count in range(1, leaves + 1) for tree in enumerate_trees(count, arity)]


def suite_lattice(context):
    """gcd and lcm are the intersection and the union of caret sets; divisibility laws"""
    limit = min(context.get_bound("e_complex"), 6)
    trees = _trees_up_to(limit)
    checks = {
        "lattice-gcd-divides": [],
        "lattice-lcm-multiple": [],
        "lattice-lcm-least": [],
        "lattice-commutative": [],
        "lattice-divides-iff-gcd": [],
        "lattice-caret-count": [],
        "lattice-quotient": [],
    }
    for a, b in itertools.product(trees, repeat=2):
        low, high = gcd(a, b), lcm(a, b)
        pair = [a.to_text(), b.to_text()]
        if not (left_divides(low, a) and left_divides(low, b)):
            checks["lattice-gcd-divides"].append(pair)
        if not (left_divides(a, high) and left_divides(b, high)):
            checks["lattice-lcm-multiple"].append(pair)
        for multiple in trees:
            if left_divides(a, multiple) and left_divides(b, multiple) and not left_divides(high, multiple):
                checks["lattice-lcm-least"].append(pair + [multiple.to_text()])
        if low != gcd(b, a) or high != lcm(b, a):
            checks["lattice-commutative"].append(pair)
        if left_divides(a, b) != (low == a) or left_divides(a, b) != (high == b):
            checks["lattice-divides-iff-gcd"].append(pair)
        if len(high.word) + len(low.word) != len(a.word) + len(b.word):
            checks["lattice-caret-count"].append(pair)
        if compose(a, left_quotient(a, high)) != high:
            checks["lattice-quotient"].append(pair)
    records = [_tally(name, {"leaves": limit}, failures, len(trees) ** 2) for name, failures in checks.items()]
    idempotent = [tree.to_text() for tree in trees if lcm(tree, tree) != tree or gcd(tree, tree) != tree]
    records.append(_tally("lattice-idempotent", {"leaves": limit}, idempotent, len(trees)))
    small_limit = min(limit, ASSOCIATIVE_LEAVES)
    small = _trees_up_to(small_limit)
    associative = [
        [a.to_text(), b.to_text(), c.to_text()]
        for a, b, c in itertools.product(small, repeat=3)
        if lcm(lcm(a, b), c) != lcm(a, lcm(b, c)) or gcd(gcd(a, b), c) != gcd(a, gcd(b, c))
    ]
    records.append(_tally("lattice-associative", {"leaves": small_limit}, associative, len(small) ** 3))
    factor_failures = []
    for tree in trees:
        factors = garside_factorization(tree)
        rebuilt = compose_all(factors) if factors else Forest.identity(1)
        if rebuilt != tree or not all(is_elementary(factor) for factor in factors):
            factor_failures.append(tree.to_text())
        for factor in factors[-1:]:
            head = compose_all(factors[:-1]) if factors[:-1] else Forest.identity(1)
            if right_quotient(tree, factor) != head:
                factor_failures.append(tree.to_text())
    records.append(_tally("lattice-factorization", {"leaves": limit}, factor_failures, len(trees)))
    return records


def suite_components(context):
    """Objects m and n of F_3 are joined by a morphism iff n - m is even"""
    records = []
    for m, n in itertools.combinations_with_replacement(range(1, 11), 2):
        expected = (n - m) % 2 == 0
        reachable = component_reachable(m, n, 3)
        if reachable:
            witness = normal_form([1] * ((n - m) // 2), m, 3)
            reachable = witness.roots == m and witness.leaves == n
        records.append(record("components", {"arity": 3, "m": m, "n": n}, expected, reachable))
    for family in FOREST_FAMILIES:
        table = action_table(family)
        for n in range(1, 6):
            records.append(
                record("unit-group-order", {"family": family, "n": n}, unit_group_order(family, n), len(table.units(n)))
            )
    return records


# Braids and unit groupoids


def suite_braid_kernel(context):
    """Braid relations by normal form, half twist crossings and centrality of its square"""
    records = []
    for n in range(2, 6):
        for i in range(1, n - 1):
            instance = {"n": n, "i": i}
            braided = braid_eq(Braid(n, (i, i + 1, i)), Braid(n, (i + 1, i, i + 1)))
            records.append(record("braid-relation", instance, True, braided))
            commuting = braid_eq(Braid(n, (i, i + 1)), Braid(n, (i + 1, i)))
            records.append(record("braid-not-commuting", instance, False, commuting))
        for i, j in itertools.combinations(range(1, n), 2):
            if j - i >= 2:
                commuting = braid_eq(Braid(n, (i, j)), Braid(n, (j, i)))
                records.append(record("braid-far-commute", {"n": n, "i": i, "j": j}, True, commuting))
        half_twist = braid_delta(n)
        records.append(record("delta-crossings", {"n": n}, math.comb(n, 2), braid_crossings(half_twist)))
        full_twist = half_twist * half_twist
        for i in range(1, n):
            generator = Braid.generator(i, n)
            central = full_twist * generator == generator * full_twist
            records.append(record("delta-squared-central", {"n": n, "i": i}, True, central))
            conjugate = half_twist * generator * half_twist.inverse()
            records.append(record("delta-conjugation", {"n": n, "i": i}, Braid.generator(n - i, n), conjugate))
        for permutation in map(Permutation, itertools.permutations(range(1, n + 1))):
            lifted = braid_lift(permutation)
            records.append(
                record(
                    "lift-splits-projection",
                    {"n": n, "permutation": permutation},
                    permutation,
                    braid_project(lifted),
                    braid_project(lifted) == permutation and len(lifted.word) == permutation.inversions(),
                )
            )
    return records


# Indirect products


def _axiom_records(report):
    return [
        record(
            item["axiom"],
            {"family": report.family, "bound": report.bound, "instance": item["instance"]},
            item["lhs"],
            item["rhs"],
            item["pass"],
        )
        for item in report.records()
    ]


def axiom_tables(context):
    """The action tables the ip-axioms suite runs on"""
    tables = [action_table(family) for family in context.families()]
    if context.family is None:
        tables.append(action_table(V, 3))
        tables.append(action_table(T, 3))
        tables.append(GraphActionTable(RULE_BASILICA, [basilica_graph(), single_edge_graph()]))
    return tables


def suite_ip_axioms(context):
    records = []
    for table in axiom_tables(context):
        bound = context.get_bound("ip_axioms")
        if table.family.startswith("graph:"):
            bound = context.get_bound("graph_edges")
        context.log.debug(f"Checking IP1-IP8 for {table.family} up to {bound}")
        records.extend(_axiom_records(check_ip_axioms(table, bound, context.logger)))
    return records


def suite_bv_relations(context):
    records = []
    for n in range(2, context.get_bound("ip_axioms") + 1):
        records.extend(check_bv_relations(n))
    return records


def suite_pi_equivariance(context):
    samples = pi_equivariance_samples(
        max_degree=EQUIVARIANCE_DEGREE,
        max_length=3,
        random_count=context.samples["pi_equivariance"],
        seed=context.seed,
    )
    return check_pi_equivariance(samples)


def _graph_injectivity():
    records = []
    rule = get_rule(RULE_BASILICA).name
    for graph in (basilica_graph(), single_edge_graph()):
        for edge in sorted(graph.edge_map):
            morphism = RewriteMorphism.generator(graph, edge, rule)
            unrecovered = 0
            for iso in automorphisms(graph):
                if recover_iso(iso_clone(iso, morphism), morphism) != iso:
                    unrecovered += 1
            records.append(
                record("injectivity", {"family": f"graph:{rule}", "graph": graph, "edge": list(edge)}, 0, unrecovered)
            )
    return records


def suite_injectivity(context):
    records = []
    for family in context.families():
        bound = context.get_bound("ip_axioms")
        records.extend(check_injectivity(action_table(family), bound))
    if context.family is None:
        records.extend(_graph_injectivity())
    return records


def suite_cloning_system(context):
    """CS1-CS3 on the shipped cloning systems; their tables must agree with the family tables"""
    bound = context.get_bound("ip_axioms")
    records = []
    for system, family in ((TrivialCloningSystem(), F), (VCloningSystem(), V), (BVCloningSystem(), BV)):
        for item in validate_cloning_system(system, bound):
            instance = {"system": system.name, **item["instance"]}
            records.append(record(item["name"], instance, item["expected"], item["got"], item["pass"]))
        table = cloning_system_adapter(system, bound)
        reference = action_table(family)
        mismatches = []
        checked = 0
        for n in range(1, bound + 1):
            for unit in system.units(n):
                for index in range(1, n + 1):
                    checked += 1
                    caret = Forest.caret(index, n)
                    if table.act(unit, caret) != reference.act(unit, caret):
                        mismatches.append({"unit": unit, "caret": index, "side": "act"})
                    if not table.units_equal(table.clone(unit, caret), reference.clone(unit, caret)):
                        mismatches.append({"unit": unit, "caret": index, "side": "clone"})
        records.append(_tally("cloning-table", {"system": system.name, "bound": bound}, mismatches, checked))
        records.append(record("cloning-trusted", {"system": system.name}, True, table.trusted))
    return records


def suite_figure_five(context):
    """rot(1) in Z/3 against the caret on the third leaf"""
    table = action_table(T)
    unit, forest = Rotation(3, 1), Forest.caret(3, 3)
    instance = {"unit": unit, "forest": forest.to_text()}
    return [
        record("figure-five-act", instance, Forest.caret(1, 3), table.act(unit, forest)),
        record("figure-five-clone", instance, Rotation(4, 2), table.clone(unit, forest)),
        record("figure-five-clone-from-image", instance, Rotation(4, 2), table.clone_from_image(unit, forest)),
    ]


# Groups of fractions


def _right_comb(leaves):
    return Forest(2, 1, tuple(range(1, leaves)))


def _commutator(x, y, certify):
    return mul(mul(x, y, certify), mul(inv(x), inv(y), certify), certify)


def _law_checks(x, y, z, certify):
    """Returns the names of the group laws the triple violates"""
    violated = []
    one = identity(x.family, x.base, x.arity)
    if not eq(mul(mul(x, y, certify), z, certify), mul(x, mul(y, z, certify), certify)):
        violated.append("associativity")
    if not is_identity(mul(x, inv(x), certify)) or not is_identity(mul(inv(x), x, certify)):
        violated.append("inverse")
    if not eq(mul(x, one, certify), x) or not eq(mul(one, x, certify), x):
        violated.append("identity")
    if not eq(inv(_commutator(x, y, certify)), mul(mul(y, x, certify), mul(inv(y), inv(x), certify), certify)):
        violated.append("commutator-inverse")
    if not eq(reduce(x), x) or reduce(reduce(x)).to_json() != reduce(x).to_json():
        violated.append("reduce")
    if not eq(expand(x, Forest.caret(1, x.den.leaves)), x):
        violated.append("expand")
    if x.family in BRAIDED_FAMILIES and not eq(
        project_to_v(mul(x, y, certify)), mul(project_to_v(x), project_to_v(y), certify)
    ):
        violated.append("projection-homomorphism")
    return violated


LAWS = (
    "associativity",
    "inverse",
    "identity",
    "commutator-inverse",
    "reduce",
    "expand",
    "projection-homomorphism",
)


def suite_group_laws(context):
    """Group laws on seeded random triples, and the orders of conjugated torsion"""
    records = []
    rng = seeded_random(context.seed)
    count = context.samples["group_laws"]
    for family in context.families():
        failures = {law: [] for law in LAWS}
        for _ in range(count):
            x, y, z = (random_element(family, rng, max_leaves=6) for _ in range(3))
            for law in _law_checks(x, y, z, context.certify):
                failures[law].append([str(x), str(y), str(z)])
        for law in LAWS:
            if law == "projection-homomorphism" and family not in BRAIDED_FAMILIES:
                continue
            records.append(_tally(f"group-{law}", {"family": family, "samples": count}, failures[law], count))
    if T in context.families():
        for n in range(2, 6):
            tree = _right_comb(n)
            x = FractionElement(T, tree, Rotation(n, 1), tree)
            records.append(record("torsion-order", {"family": T, "n": n, "element": str(x)}, n, order(x, n + 2)))
    if V in context.families():
        for n in range(2, 6):
            tree = _right_comb(n)
            for i in range(1, n):
                x = FractionElement(V, tree, Permutation.transposition(i, n), tree)
                records.append(record("torsion-order", {"family": V, "n": n, "element": str(x)}, 2, order(x, 4)))
    if BV in context.families():
        tree = _right_comb(3)
        x = FractionElement(BV, tree, Braid(3, (1,)), tree)
        records.append(record("torsion-free-braid", {"family": BV, "element": str(x)}, "unbounded", order(x, 12)))
    return records


# Complexes


def _edge_label(label):
    return tuple(sorted(label))


def suite_e_identifications(context):
    """E_F(n) and E_T(n) are matching complexes; E_V(n) maps onto M(K_n) with sphere fibers"""
    bound = min(context.get_bound("e_complex"), 8)
    records = []
    for family, kind, start in ((F, LINEAR, 2), (T, CYCLIC, 3)):
        for n in range(start, bound + 1):
            _, complex_ = build_E(family, n, logger=context.logger)
            target = matching_complex(graph_by_kind(kind, n))
            records.append(
                record(
                    "e-matching-isomorphism",
                    {"family": family, "graph": kind, "n": n},
                    True,
                    is_isomorphic(complex_, target, _edge_label),
                )
            )
    for n in range(2, min(bound, 6) + 1):
        poset, complex_ = build_E(V, n, logger=context.logger)
        summary = e_to_matching_map(complex_, n)
        records.append(record("e-map-simplicial", {"family": V, "n": n}, True, summary["simplicial"]))
        records.append(record("e-map-surjective", {"family": V, "n": n}, True, summary["surjective"]))
        for fiber in summary["fibers"]:
            sphere = fiber_complex(complex_, fiber["simplex"])
            dimension = fiber["dimension"]
            homology = reduced_homology(sphere, dimension, context.budget, context.logger)
            betti = [homology[k]["betti"] for k in range(-1, dimension + 1)]
            expected = [0] * (dimension + 1) + [1]
            instance = {"family": V, "n": n, "simplex": fiber["simplex"]}
            records.append(record("e-map-fiber", instance, fiber["expected"], fiber["facets"], fiber["pass"]))
            records.append(record("e-map-fiber-sphere", instance, expected, betti))
        if n <= 4:
            records.append(
                record("e-poset-order", {"family": V, "n": n}, True, poset.is_partial_order())
            )
            records.append(
                record(
                    "e-poset-subdivision",
                    {"family": V, "n": n},
                    barycentric_f_vector(complex_),
                    e_poset_realization(poset).f_vector(),
                )
            )
    for family in FOREST_FAMILIES:
        for n in range(2, 5):
            keys = enumerate_E_classes(family, n, method="keys")
            orbits = enumerate_E_classes(family, n, method="orbits", logger=context.logger)
            instance = {"family": family, "n": n}
            records.append(record("e-orbit-classes", instance, len(keys), len(orbits), keys == orbits))
    return records


def suite_connectivity(context):
    """Matching complex connectivity against floor(n/4) - 1 and the grounded certificates"""
    records = []
    for kind in (LINEAR, CYCLIC, COMPLETE):
        for n in CONNECTIVITY_RANGE:
            complex_ = matching_complex(graph_by_kind(kind, n))
            bound = n // 4 - 1
            max_dim = max(bound, 1)
            report = connectivity_report(complex_, max_dim, context.budget, context.logger)
            instance = {"graph": kind, "n": n, "max_dim": max_dim}
            records.append(
                record("connectivity-bound", instance, {"at_least": bound}, report["connectivity"],
                       report["connectivity"] >= bound)
            )
            records.append(record("grounded-consistent", instance, True, report["consistent"]))
            if kind == COMPLETE and n == 7:
                records.append(record("complete-7-torsion", instance, [3], report["homology"]["1"]["torsion"]))
    anomaly = connectivity_report(matching_complex(graph_by_kind(LINEAR, 4)), 1, context.budget, context.logger)
    instance = {"graph": LINEAR, "n": 4, "flagged": True, "floor_bound": 0}
    records.append(record("connectivity-anomaly", instance, L4_CONNECTIVITY, anomaly["connectivity"]))
    for family in FOREST_FAMILIES:
        for n in range(2, 7):
            _, complex_ = build_E(family, n, logger=context.logger)
            report = connectivity_report(complex_, 2, context.budget, context.logger)
            records.append(record("grounded-consistent", {"family": family, "n": n}, True, report["consistent"]))
    return records


def suite_descending_links(context):
    """The descending link of every tree with n leaves is isomorphic to E_F(n)"""
    bound = context.get_bound("descending_link")
    records = []
    for n in range(2, bound + 1):
        _, reference = build_E(F, n, logger=context.logger)
        failures = [
            tree.to_text()
            for tree in enumerate_trees(n)
            if not is_isomorphic(descending_link(tree, logger=context.logger), reference)
        ]
        records.append(_tally("descending-link", {"leaves": n}, failures, len(enumerate_trees(n))))
    return records


def suite_sublevel(context):
    """Positive sublevel complexes are acyclic through dimension 2"""
    records = []
    for limit in range(2, context.get_bound("sublevel") + 1):
        complex_ = positive_sublevel_complex(limit, logger=context.logger)
        homology = reduced_homology(complex_, 2, context.budget, context.logger)
        got = {str(k): value for k, value in sorted(homology.items())}
        expected = {str(k): {"betti": 0, "torsion": []} for k in range(-1, 3)}
        records.append(record("sublevel-acyclic", {"limit": limit, "f_vector": complex_.f_vector()}, expected, got))
    return records


def suite_basilica(context):
    """E(H) of the bad graphs is a circle on four vertices; contractions expand back"""
    records = []
    rule = get_rule(RULE_BASILICA)
    bound = context.get_bound("graph_edges")
    for middle in range(1, 4):
        graph = bad_graph(middle)
        complex_ = build_E_graph(graph, rule, bound, context.logger)
        homology = reduced_homology(complex_, 1, context.budget, context.logger)
        instance = {"graph": "bad_graph", "middle": middle}
        records.append(record("basilica-f-vector", instance, [4, 4], complex_.f_vector()))
        records.append(
            record(
                "basilica-circle",
                instance,
                {"0": {"betti": 0, "torsion": []}, "1": {"betti": 1, "torsion": []}},
                {"0": homology[0], "1": homology[1]},
            )
        )
    for graph, name in ((basilica_graph(), "basilica"), (bad_graph(1), "bad_graph")):
        for pattern in find_coexpansions(graph, rule, bound, context.logger):
            try:
                contracted, edge = contract(graph, pattern, rule)
                passed = contracted.height == graph.height - len(rule.edges) + 1
            except Exception as exception:
                context.log.exception(f"Contraction of {pattern.label()} failed. Error {exception}")
                passed = False
            records.append(record("basilica-contract", {"graph": name, "pattern": pattern.label()}, True, passed))
    return records


SUITES = {
    "normal-form": suite_normal_form,
    "lattice": suite_lattice,
    "braid-kernel": suite_braid_kernel,
    "ip-axioms": suite_ip_axioms,
    "bv-relations": suite_bv_relations,
    "pi-equivariance": suite_pi_equivariance,
    "injectivity": suite_injectivity,
    "cloning-system": suite_cloning_system,
    "figure-five": suite_figure_five,
    "group-laws": suite_group_laws,
    "e-identifications": suite_e_identifications,
    "connectivity": suite_connectivity,
    "descending-links": suite_descending_links,
    "sublevel": suite_sublevel,
    "basilica": suite_basilica,
    "components": suite_components,
}


def run_suite(context, name):
    """Runs one named suite and returns its records"""
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"Unknown suite {name}, expected one of {', '.join(sorted(SUITES))}")
    context.log.info(f"Running the {name} suite")
    return suite(context)
