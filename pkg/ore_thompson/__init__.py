#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module provides exact arithmetic and topology tooling for Ore categories
    with Garside families: Thompson-like groups, their braided relatives and the
    complexes used to study their finiteness properties.
"""
__version__ = "0.1.0"
