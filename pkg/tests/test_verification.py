#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
import os
import sys
from unittest import mock

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.constant import BV, FAMILIES, SIZE_BUDGET_ENV, F, T, V  # noqa
from ore_thompson.forest_cat import Forest, compose  # noqa
from ore_thompson.forest_cat import lcm as real_lcm  # noqa
from ore_thompson.verification import SUITES, SuiteContext, record, run_suite  # noqa
from support import settings  # noqa

FAST_SUITES = ["figure-five", "components", "bv-relations", "cloning-system", "braid-kernel", "basilica"]
SLOW_SUITES = sorted(set(SUITES) - set(FAST_SUITES))


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(SIZE_BUDGET_ENV, raising=False)


@pytest.fixture
def context():
    config, logger = settings()
    return SuiteContext.from_config(config, logger=logger)


def failures(records):
    return [item for item in records if not item["pass"]]


def test_context_from_config(context):
    assert context.seed == 0
    assert context.bounds["ip_axioms"] == 4
    assert context.samples["group_laws"] == 20
    assert context.certify is True
    assert context.get_bound("ip_axioms") == 4


def test_context_overrides():
    config, _ = settings()
    context = SuiteContext.from_config(config, seed=9, family=T, bound=3)
    assert context.seed == 9
    assert context.get_bound("ip_axioms") == 3
    assert context.families() == [T]
    assert context.families(allowed=(V,)) == []


def test_default_context_covers_every_family():
    context = SuiteContext()
    assert context.families() == list(FAMILIES)
    assert context.bounds["ip_axioms"] >= 1


def test_record_defaults_to_equality():
    assert record("a", {"n": 1}, [1, 2], [1, 2])["pass"] is True
    assert record("a", {"n": 1}, [1, 2], [2, 1])["pass"] is False
    assert record("a", {}, None, "anything", passed=1)["pass"] is True


def test_unknown_suite(context):
    with pytest.raises(ValueError):
        run_suite(context, "no-such-suite")


def test_figure_five(context):
    """Test that rot(1) moves the third caret to the first and clones to rot(2) on four leaves"""
    records = run_suite(context, "figure-five")
    assert [item["name"] for item in records] == [
        "figure-five-act",
        "figure-five-clone",
        "figure-five-clone-from-image",
    ]
    assert all(item["pass"] for item in records)
    assert records[1]["expected"] == {"n": 4, "shift": 2}


@pytest.mark.parametrize("name", FAST_SUITES)
def test_fast_suites_pass(context, name):
    records = run_suite(context, name)
    assert records
    assert failures(records) == []


def test_components_parity(context):
    records = [item for item in run_suite(context, "components") if item["name"] == "components"]
    reachable = {(item["instance"]["m"], item["instance"]["n"]) for item in records if item["got"]}
    assert (1, 3) in reachable
    assert (1, 2) not in reachable


@pytest.mark.parametrize("family", [F, BV])
def test_ip_axioms_suite_reports_the_requested_degree(context, family):
    """Test that the suite states the degree it enumerated up to, braided tables included"""
    context.family, context.bound = family, 3
    records = run_suite(context, "ip-axioms")
    degree = [item for item in records if item["name"] == "DEGREE"]
    assert [(item["expected"], item["got"], item["pass"]) for item in degree] == [(3, 3, True)]
    assert failures(records) == []


def test_lattice_checks_least_multiple_idempotence_and_associativity(context):
    context.bound = 4
    records = {item["name"]: item for item in run_suite(context, "lattice")}
    for name in ("lattice-lcm-least", "lattice-idempotent", "lattice-associative"):
        assert records[name]["pass"], records[name]
        assert records[name]["got"]["checked"] > 0


def test_lattice_flags_a_common_multiple_that_is_not_least(context):
    """Test that an lcm returning a proper multiple of the least one is caught"""

    def oversized_lcm(a, b):
        least = real_lcm(a, b)
        return compose(least, Forest.caret(1, least.leaves))

    context.bound = 3
    with mock.patch("ore_thompson.verification.lcm", side_effect=oversized_lcm):
        records = {item["name"]: item for item in run_suite(context, "lattice")}
    assert records["lattice-lcm-multiple"]["pass"]
    assert not records["lattice-lcm-least"]["pass"]
    assert records["lattice-lcm-least"]["got"]["failures"] > 0


def test_linear_four_anomaly_is_checked(context):
    """Test that the flagged M(L_4) record compares against its computed connectivity"""
    with mock.patch("ore_thompson.verification.CONNECTIVITY_RANGE", range(0)):
        with mock.patch("ore_thompson.verification.FOREST_FAMILIES", ()):
            records = run_suite(context, "connectivity")
    assert [item["name"] for item in records] == ["connectivity-anomaly"]
    anomaly = records[0]
    assert anomaly["instance"]["flagged"] is True
    assert anomaly["expected"] == -1
    assert anomaly["got"] == -1
    assert anomaly["pass"] is True


def test_linear_four_anomaly_fails_on_a_wrong_value(context):
    wrong = {"connectivity": 0, "consistent": True}
    with mock.patch("ore_thompson.verification.CONNECTIVITY_RANGE", range(0)):
        with mock.patch("ore_thompson.verification.FOREST_FAMILIES", ()):
            with mock.patch("ore_thompson.verification.connectivity_report", return_value=wrong):
                records = run_suite(context, "connectivity")
    assert records[0]["pass"] is False


@pytest.mark.slow
@pytest.mark.parametrize("name", SLOW_SUITES)
def test_slow_suites_pass(context, name):
    records = run_suite(context, name)
    assert records
    assert failures(records) == []
