#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module contains all the constants used throughout the code.
"""
import sys

REPORT_SCHEMA_VERSION = 1
SIZE_BUDGET_ENV = "ORE_SIZE_BUDGET"
DEFAULT_SIZE_BUDGET = 2000000
DEFAULT_SEED = 0

# Families
F = "F"
T = "T"
V = "V"
BF = "BF"
BT = "BT"
BV = "BV"
FOREST_FAMILIES = (F, T, V)
BRAIDED_FAMILIES = (BF, BT, BV)
FAMILIES = FOREST_FAMILIES + BRAIDED_FAMILIES
CUSTOM = "custom"

# Graphs for matching complexes
LINEAR = "L"
CYCLIC = "C"
COMPLETE = "K"
GRAPH_KINDS = (LINEAR, CYCLIC, COMPLETE)

# Sentinels
CONTRACTIBLE = sys.maxsize
NO_CLAIM = -2
UNBOUNDED = "unbounded"

# Axiom names
IP_AXIOMS = ("IP1", "IP2", "IP3", "IP4", "IP5", "IP6", "IP7", "IP8")
CS_AXIOMS = ("CS1", "CS2", "CS3", "RHO")

# Edge replacement rules
RULE_BASILICA = "basilica"
RULE_L2 = "L2"
RULE_D2 = "D2"
