import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from coronaqec.errors import DomainError, SingularShiftError
from coronaqec.graphs import distance_matrix, generate
from coronaqec.spectral import (
    Tolerances,
    check_symmetric,
    eigen_sym,
    has_kernel_vector_orthogonal_to_ones,
    solve_shifted,
    spectrum,
)

import oracles
from conftest import any_graphs


def test_P4_distance_spectrum():
    spec = eigen_sym(distance_matrix(generate("path", 4)))
    expected = [2 + math.sqrt(10), math.sqrt(2) - 2, 2 - math.sqrt(10), -2 - math.sqrt(2)]
    np.testing.assert_allclose(spec.eigenvalues, sorted(expected, reverse=True), atol=1e-12)
    w, _ = oracles.jacobi_eigh(distance_matrix(generate("path", 4)))
    np.testing.assert_allclose(spec.eigenvalues, w, atol=1e-12)


def test_eigenpairs_satisfy_residual():
    M = distance_matrix(generate("petersen"))
    spec = eigen_sym(M)
    U, w = spec.eigenvectors, spec.eigenvalues
    assert np.max(np.abs(M @ U - U * w)) < 1e-12
    assert np.max(np.abs(U.T @ U - np.eye(10))) < 1e-12


def test_eigen_sym_is_deterministic():
    M = distance_matrix(generate("cycle", 6))
    a, b = eigen_sym(M), eigen_sym(M)
    np.testing.assert_array_equal(a.eigenvectors, b.eigenvectors)


def test_rejects_non_symmetric_and_non_square():
    with pytest.raises(ValueError):
        check_symmetric([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        check_symmetric(np.zeros((2, 3)))


def test_C6_groups():
    spec = spectrum(generate("cycle", 6).adjacency())
    got = [(round(g.value, 9), g.multiplicity, g.is_main) for g in spec.groups]
    assert got == [(2.0, 1, True), (1.0, 2, False), (-1.0, 2, False), (-2.0, 1, False)]
    assert spec.groups[0].main_angle == pytest.approx(1.0)


def test_petersen_groups():
    spec = spectrum(generate("petersen").adjacency())
    got = [(round(g.value, 9), g.multiplicity, g.is_main) for g in spec.groups]
    assert got == [(3.0, 1, True), (1.0, 5, False), (-2.0, 4, False)]


def test_empty_graph_single_group():
    spec = spectrum(generate("empty", 4).adjacency())
    assert len(spec.groups) == 1
    g = spec.groups[0]
    assert (g.value, g.multiplicity, g.is_main) == (0.0, 4, True)


def test_star_main_angles_sum_to_one():
    spec = spectrum(generate("star", 3).adjacency())
    assert sum(g.main_angle ** 2 for g in spec.groups) == pytest.approx(1.0)
    main = [round(g.value, 9) for g in spec.groups if g.is_main]
    assert main == [round(math.sqrt(3), 9), round(-math.sqrt(3), 9)]


@pytest.mark.parametrize("family, params, theta, expected", [
    ("empty", (1,), 0.0, False),
    ("empty", (3,), 0.0, True),
    ("complete", (4,), 3.0, False),
    ("complete", (4,), -1.0, True),
    ("cycle", (5,), 2.0, False),
    ("star", (3,), math.sqrt(3), False),
    ("star", (3,), 0.0, True),
    ("petersen", (), -2.0, True),
])
def test_kernel_orthogonal_to_ones(family, params, theta, expected):
    A = generate(family, *params).adjacency()
    flag, x = has_kernel_vector_orthogonal_to_ones(A, theta)
    assert flag is expected
    if len(A) > 1:
        assert oracles.kernel_meets_ones_perp(A, theta) is expected
    if flag:
        assert abs(np.sum(x)) < 1e-10
        assert np.linalg.norm(A @ x - theta * x) < 1e-10
        assert np.linalg.norm(x) == pytest.approx(1.0)


def test_kernel_test_rejects_non_eigenvalue():
    with pytest.raises(DomainError):
        has_kernel_vector_orthogonal_to_ones(generate("cycle", 5).adjacency(), 0.5)


@settings(max_examples=50, deadline=None)
@given(any_graphs(min_n=2, max_n=6))
def test_kernel_test_matches_brute_force(G):
    A = G.adjacency()
    spec = spectrum(A)
    for g in spec.groups:
        flag, _ = has_kernel_vector_orthogonal_to_ones(A, g.value, spec=spec)
        assert flag == oracles.kernel_meets_ones_perp(A, g.value)


def test_solve_shifted_matches_inverse():
    A = generate("cycle", 5).adjacency()
    b = np.arange(5.0)
    x = solve_shifted(A, 0.3, b)
    np.testing.assert_allclose(x, np.linalg.inv(A + 2.3 * np.eye(5)) @ b, atol=1e-12)


def test_solve_shifted_singular():
    # -2 - lam = 2 is the degree of C5
    with pytest.raises(SingularShiftError):
        solve_shifted(generate("cycle", 5).adjacency(), -4.0, np.ones(5))


@pytest.mark.parametrize("field", ["eig_tol", "group_tol", "main_tol", "qec_match_tol"])
def test_tolerances_must_be_positive(field):
    with pytest.raises(ValueError):
        Tolerances(**{field: 0.0})


def test_tolerances_ordering():
    with pytest.raises(ValueError):
        Tolerances(eig_tol=1e-6, qec_match_tol=1e-8)


symmetric = st.integers(1, 8).flatmap(
    lambda n: arrays(np.float64, (n, n), elements=st.floats(-5, 5, allow_nan=False, width=32))
).map(lambda M: (M + M.T) / 2)


@settings(max_examples=80, deadline=None)
@given(symmetric)
def test_eigenvalues_match_jacobi(M):
    spec = eigen_sym(M)
    w, _ = oracles.jacobi_eigh(M)
    scale = max(1.0, np.abs(M).max())
    np.testing.assert_allclose(spec.eigenvalues, w, atol=1e-10 * scale)
    assert np.all(np.diff(spec.eigenvalues) <= 0)


@settings(max_examples=80, deadline=None)
@given(symmetric)
def test_groups_partition_spectrum(M):
    spec = spectrum(M)
    assert sum(g.multiplicity for g in spec.groups) == len(M)
    assert sum(g.main_angle ** 2 for g in spec.groups) == pytest.approx(1.0, abs=1e-9)
    values = spec.distinct
    assert all(a > b for a, b in zip(values, values[1:]))
