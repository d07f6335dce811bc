import numpy as np
import pytest

from heisenspec import spectral
from heisenspec.errors import ConvergenceError, GraphValidationError
from heisenspec.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, random_graph, star_graph
from heisenspec.spectral import eigenvalues, laplacian_matrix, laplacian_spectrum, normalized_laplacian


def test_laplacian_examples():
    L = laplacian_matrix(complete_graph(4))
    assert np.array_equal(L, 4 * np.eye(4) - np.ones((4, 4)))
    L = laplacian_matrix(path_graph(3))
    assert L.tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]
    assert not laplacian_matrix(empty_graph(3)).any()


def test_normalized_laplacian_regular_and_star():
    assert np.allclose(normalized_laplacian(cycle_graph(6)), laplacian_matrix(cycle_graph(6)) / 2)
    assert np.allclose(normalized_laplacian(complete_graph(4)), laplacian_matrix(complete_graph(4)) / 3)
    top = eigenvalues(normalized_laplacian(star_graph(4))).eigenvalues[-1]
    assert top == pytest.approx(2.0, abs=1e-10)


def test_normalized_laplacian_names_isolated_vertex():
    G = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphValidationError, match="vertex 2 is isolated"):
        normalized_laplacian(G)


def test_small_spectra():
    assert np.allclose(laplacian_spectrum(complete_graph(4)).eigenvalues, [0, 4, 4, 4], atol=1e-10)
    assert np.allclose(laplacian_spectrum(path_graph(3)).eigenvalues, [0, 1, 3], atol=1e-10)
    assert np.allclose(eigenvalues(np.eye(5)).eigenvalues, np.ones(5))


def test_jacobi_matches_lapack_on_random_symmetric():
    rng = np.random.default_rng(5)
    for N in (1, 2, 7, 30):
        A = rng.normal(size=(N, N))
        A = A + A.T
        got = eigenvalues(A).eigenvalues
        assert np.allclose(got, np.linalg.eigvalsh(A), atol=1e-9)
        assert got.sum() == pytest.approx(np.trace(A), abs=1e-8 * N)


def test_jacobi_reports_nonconvergence(monkeypatch):
    monkeypatch.setattr(spectral, "MAX_SWEEPS", 1)
    rng = np.random.default_rng(0)
    A = rng.normal(size=(12, 12))
    with pytest.raises(ConvergenceError) as info:
        eigenvalues(A + A.T)
    assert info.value.residual >= 0


def test_jacobi_is_deterministic():
    A = laplacian_matrix(random_graph(9, 0.5, 2))
    assert np.array_equal(eigenvalues(A).eigenvalues, eigenvalues(A).eigenvalues)
