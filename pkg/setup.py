#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import sys
from setuptools import setup, find_packages

if sys.version_info < (3, 8):
    raise ValueError("Requires Python 3.8 or superior")

from ore_thompson import __version__  # NOQA

install_requires = [
    "cached_property",
    "cerberus",
    "ecs_logging",
    "iteration_utilities",
    "networkx",
    "pyyaml",
    "sympy",
]

tests_require = [
    "flake8",
    "hypothesis",
    "pytest",
    "pytest-cov",
]

description = ""

with open("README.md", encoding="utf-8") as readme_file:
    description += readme_file.read() + "\n\n"


classifiers = [
    "Programming Language :: Python",
    "License :: OSI Approved :: Apache Software License",
    "Development Status :: 3 - Alpha",
    "Programming Language :: Python :: 3 :: Only",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Topic :: Scientific/Engineering :: Mathematics",
]


setup(
    name="ore_thompson",
    version=__version__,
    url="https://example.com",
    packages=find_packages(exclude=["tests"]),
    long_description=description.strip(),
    description=("Thompson-like groups from Ore categories and cloning systems"),
    author="author",
    author_email="email",
    include_package_data=True,
    zip_safe=False,
    classifiers=classifiers,
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={"tests": tests_require},
    data_files=[("config", ["ore.yml"]), ("data", ["data/single_edge.json", "data/basilica.json",
                                                   "data/badgraph1.json", "data/badgraph2.json",
                                                   "data/badgraph3.json"])],
    entry_points="""
      [console_scripts]
      ore = ore_thompson.cli:main
      """,
)
