"""Shared fixtures for the zdgraph test suite"""

import random

import pytest

from zdgraph_mcp.core.blowup import BlowupSpec, generate
from zdgraph_mcp.core.zdgraph import GraphFlavor
from zdgraph_mcp.utils.parser import parse_model


@pytest.fixture
def naturals_finite():
    """C_F(N): finitely supported functions on the naturals"""
    return parse_model("countable", "finite")


@pytest.fixture
def naturals_all():
    return parse_model("countable", "all")


@pytest.fixture
def finite_three():
    return parse_model("finite:3", "all")


@pytest.fixture
def powerset_model():
    """Returns a factory: powerset_model(k) is (N, P({0..k-1}))"""

    def build(k: int):
        points = ",".join(str(i) for i in range(k))
        return parse_model("countable", f"powerset:{{{points}}}")

    return build


@pytest.fixture
def blowup_of():
    """Returns a factory generating the blow-up of a model with alphabet {1,2}"""

    def build(model, flavor=GraphFlavor.CP, window=None, alphabet=(1, 2), mutate=False):
        spec = BlowupSpec.for_model(model, flavor, window=window, alphabet=alphabet, mutate=mutate)
        return generate(spec)

    return build


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def isolated_config(tmp_path, monkeypatch):
    """Run from an empty directory so no .env or ./configs leaks into tests"""
    monkeypatch.chdir(tmp_path)
    return tmp_path
