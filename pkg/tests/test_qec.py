import math

import numpy as np
import pytest
from hypothesis import given, settings

from coronaqec.errors import PreconditionError
from coronaqec.graphs import distance_matrix, generate
from coronaqec.qec import QecCertificate, ones_complement_basis, qec_direct, qec_value, verify_stationarity

import oracles
from conftest import connected_graphs


def _qec(family, *params):
    return qec_value(distance_matrix(generate(family, *params)))


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_complete_graph_is_minus_one(n):
    assert _qec("complete", n) == pytest.approx(-1.0, abs=1e-12)


def test_small_paths():
    assert _qec("path", 3) == pytest.approx(-2 / 3, abs=1e-12)
    assert _qec("path", 4) == pytest.approx(math.sqrt(2) - 2, abs=1e-12)


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_star(k):
    assert _qec("star", k) == pytest.approx(-2 / (k + 1), abs=1e-12)


@pytest.mark.parametrize("a, b", [(2, 3), (2, 4), (3, 3), (3, 5), (4, 4)])
def test_complete_bipartite(a, b):
    assert _qec("complete_bipartite", a, b) == pytest.approx((2 * a * b - 2 * a - 2 * b) / (a + b), abs=1e-12)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_cycles_and_petersen_are_zero(n):
    assert _qec("cycle", n) == pytest.approx(0.0, abs=1e-12)
    assert _qec("petersen") == pytest.approx(0.0, abs=1e-12)


def test_needs_two_vertices():
    with pytest.raises(PreconditionError):
        qec_direct(np.zeros((1, 1)))


@pytest.mark.parametrize("n", [2, 3, 7])
def test_ones_complement_basis(n):
    F = ones_complement_basis(n)
    assert F.shape == (n, n - 1)
    np.testing.assert_allclose(F.T @ F, np.eye(n - 1), atol=1e-14)
    np.testing.assert_allclose(F.T @ np.ones(n), 0, atol=1e-14)


def test_certificate_shape():
    D = distance_matrix(generate("cycle", 5))
    cert = qec_direct(D)
    f = cert.witness
    assert np.linalg.norm(f) == pytest.approx(1.0)
    assert abs(f.sum()) < 1e-12
    assert f @ D @ f == pytest.approx(cert.value, abs=1e-12)
    assert verify_stationarity(D, cert) < 1e-12


def test_perturbed_certificate_is_rejected():
    D = distance_matrix(generate("path", 5))
    cert = qec_direct(D)
    bad = QecCertificate(cert.value + 1e-3, cert.witness, cert.multiplier)
    assert verify_stationarity(D, bad) > 1e-4


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_matches_projection_oracle(G):
    D = distance_matrix(G)
    assert qec_value(D) == pytest.approx(oracles.qec_by_projection(D), abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8))
def test_sandwich_and_stationarity(G):
    D = distance_matrix(G)
    cert = qec_direct(D)
    w = np.linalg.eigvalsh(D)
    assert w[-2] - 1e-9 <= cert.value < w[-1]
    assert verify_stationarity(D, cert) <= 1e-8
