"""Smoke tests for the hspec extension module."""

import json
import math

import pytest

import hspec


def test_construction_and_queries():
    h = hspec.Hypergraph(4, [[1, 3], [1, 2, 3], [1, 3, 4]])
    assert h.n == 4
    assert h.rank == 3
    assert len(h) == 3
    assert h.edge_types() == [2, 3]
    assert h.vertex_profile(1) == {2: 1, 3: 2}


def test_validation_error():
    with pytest.raises(ValueError):
        hspec.Hypergraph(2, [[1, 1]])


def test_generators_and_roundtrip():
    h = hspec.complete_r_graph(4, [2, 3])
    assert h.is_complete()
    assert hspec.parse(h.to_text()) == h
    assert hspec.parse(h.to_json()) == h
    a = hspec.random_r_graph(6, [2, 3], 0.5, 7)
    b = hspec.random_r_graph(6, [2, 3], 0.5, 7)
    assert a == b


def test_alpha_is_exact_python_int():
    assert hspec.alpha(2, 3) == 6
    assert hspec.alpha(7, 8) == math.factorial(8) * 7 // 2
    assert hspec.binom(52, 26) == math.comb(52, 26)


def test_spectral_radius_complete_graph():
    h = hspec.complete_r_graph(4, [2, 3])
    r = hspec.spectral_radius(h)
    assert abs(r.rho - 6.0) < 1e-8
    assert r.positive_support
    assert r.residual < 1e-8


def test_clique_number():
    h = hspec.complete_r_graph(5, [2, 3])
    c = hspec.clique_number(h)
    assert c.omega == 5
    assert c.witness == [1, 2, 3, 4, 5]


def test_lagrangian_prediction():
    h = hspec.complete_r_graph(4, [2, 3])
    r = hspec.maximize_L(h, starts=8, seed=0)
    assert abs(r.value - 0.15625) < 1e-6
    assert abs(r.value - hspec.predicted_L(4, 3)) < 1e-6


def test_full_analysis_json():
    h = hspec.complete_r_graph(4, [2, 3])
    report = json.loads(hspec.analyze_json(h, starts=8, seed=0))
    assert report["schema"] == "hspec/1"
    assert report["clique"]["omega"] == 4
    applicable = [b for b in report["bounds"] if b["applicable"]]
    assert applicable and all(b["satisfied"] for b in applicable)
