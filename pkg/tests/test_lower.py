import math

import numpy as np
import pytest

from heisenspec.errors import NotApplicableError
from heisenspec.graph import complete_graph, cycle_graph, path_graph, random_connected_graph, star_graph
from heisenspec.isoperimetry import IsoFit, eip_bruteforce, family_constant, iso_fit
from heisenspec.lower import c_delta, lower_bound_lambda_graph, lower_bound_lambda_Lk, sandwich_check
from heisenspec.spectral import laplacian_spectrum
from heisenspec.symprod import laplacian_Lk, token_edge_count
from heisenspec.spectral import eigenvalues


def test_worked_value():
    val = lower_bound_lambda_graph(3, 4, 1, 3, 1, 12)
    assert float(f"{val:.3g}") == 7.54e-5
    # same number through the volume-form constant
    cd = c_delta(1, 4, 3)
    vol = 24
    assert val == pytest.approx(3 * cd**2 * 4 ** (4 / 3) / (16 * math.e * 16) * 0.25 * (4 / (9 * vol)) ** (2 / 3))


def test_graph_bound_edge_cases():
    assert lower_bound_lambda_graph(3, 4, 1, 3, 0, 12) == 0
    one = lower_bound_lambda_graph(3, 4, 1, 3, 1, 12)
    two = lower_bound_lambda_graph(3, 4, 1, 3, 2, 12)
    assert two / one == pytest.approx(2 ** (2 / 3))
    with pytest.raises(NotApplicableError):
        lower_bound_lambda_graph(3, 4, 1, 2, 1, 12)
    with pytest.raises(NotApplicableError):
        lower_bound_lambda_graph(3, 4, 0, 3, 1, 12)


def test_c_delta_examples():
    assert c_delta(2, 2, math.inf) == 1
    assert c_delta(1, 4, 3) == pytest.approx(0.39685, abs=1e-5)
    assert c_delta(1.7, 1, 3) == 1.7


def test_Lk_not_applicable_cases():
    G = path_graph(3)
    fit = iso_fit(eip_bruteforce(G), math.inf)
    a2 = family_constant(G, 2, math.inf)
    assert a2 == 0
    rec = lower_bound_lambda_Lk(G, 2, 1, a2, math.inf, fit)
    assert not rec.applicable and rec.bound is None and "a_k" in rec.reason
    rec = lower_bound_lambda_Lk(cycle_graph(6), 2, 1, 1.0, 2.0, IsoFit(3.0, 1.0))
    assert not rec.applicable and "delta_k" in rec.reason


def test_Lk_j_zero():
    assert lower_bound_lambda_Lk(cycle_graph(6), 2, 0, 1.0, 3.0, IsoFit(3.0, 1.0)).bound == 0


def test_Lk_fixed_inputs_and_composition():
    # n=8, k=2, j=1, delta=delta_k=3, c=a_k=1, beta_1=4
    G = random_connected_graph(8, 0.5, 0)
    while max(G.degrees) != 4:
        G = random_connected_graph(8, 0.45, G.m + 17 * G.n + max(G.degrees))
    n, k, j, beta1 = 8, 2, 1, 4
    fit = IsoFit(3.0, 1.0)
    rec = lower_bound_lambda_Lk(G, k, j, 1.0, 3.0, fit)
    by_hand = (
        1.0 * k ** (-1 / 3) / (16 * math.e * k * beta1**2)
        * (n ** (2 / 3) / (n - k + 1)) ** 2 * 0.25 * (j / (9 * 28)) ** (2 / 3)
    )
    assert rec.bound == pytest.approx(by_hand, rel=1e-12)
    generic = lower_bound_lambda_graph(
        b=k ** (2 / 3), beta=k * beta1, c=n ** (2 / 3) / (n - k + 1), delta=3.0, j=j, m_edges=k * beta1 * 28 / 2
    )
    assert rec.bound == pytest.approx(generic, rel=1e-12)


def test_exact_edge_count_tightens():
    G = random_connected_graph(8, 0.4, 7)
    fit = iso_fit(eip_bruteforce(G), 3.0)
    a = family_constant(G, 2, 3.0)
    assert a > 0
    loose = lower_bound_lambda_Lk(G, 2, 3, a, 3.0, fit)
    tight = lower_bound_lambda_Lk(G, 2, 3, a, 3.0, fit, edges=token_edge_count(G, 2))
    assert tight.inputs["edges"] == "exact"
    assert tight.bound >= loose.bound


def test_sandwich_examples():
    for G in (cycle_graph(6), complete_graph(4)):
        rep = sandwich_check(G)
        assert rep.passed
        assert np.allclose(rep.b * rep.normalized, rep.laplacian, atol=1e-10)
    rep = sandwich_check(star_graph(4))
    assert rep.passed and (rep.b, rep.beta) == (1, 3)
    strict = (rep.normalized[1:] < rep.laplacian[1:] - 1e-9) | (rep.laplacian[1:] < 3 * rep.normalized[1:] - 1e-9)
    assert strict.all()


def test_sandwich_on_random_graphs():
    for seed in range(10):
        assert sandwich_check(random_connected_graph(10, 0.35, seed)).passed


def test_graph_bound_validity_on_corpus():
    for seed in range(12):
        G = random_connected_graph(8, 0.5, seed)
        spec = laplacian_spectrum(G).eigenvalues
        prof = eip_bruteforce(G)
        for delta in (2.5, 3.0, 4.0, 6.0, math.inf):
            fit = iso_fit(prof, delta)
            for j in range(1, G.n):
                val = lower_bound_lambda_graph(min(G.degrees), max(G.degrees), fit.c, delta, j, G.m)
                assert val <= spec[j] + 1e-9
