"""Both eigensolvers against closed-form spectra, each other, and numpy."""

import math

import numpy as np
import pytest

from aalpha import (ConvergenceError, DISPATCH_DENSE_LIMIT, Graph, InputError,
                    add_isolated, build_alpha_matrix, from_edge_list,
                    gen_circulant, gen_complete, gen_cycle, gen_random,
                    gen_star, spectral_radius, spectral_radius_jacobi,
                    spectral_radius_power)

ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)


def test_regular_graphs_have_radius_r():
    """Constant row sums force lambda1 = r for every alpha."""
    cases = [(gen_complete(4), 3), (gen_complete(6), 5), (gen_cycle(5), 2),
             (gen_cycle(8), 2), (gen_circulant(8, [1, 2]), 4)]
    for g, r in cases:
        for alpha in ALPHAS:
            am = build_alpha_matrix(g, alpha)
            assert abs(spectral_radius_jacobi(am).lambda1 - r) <= 1e-10
            assert abs(spectral_radius_power(am).lambda1 - r) <= 1e-9


def test_star_adjacency_radius_sqrt_delta():
    # Star adjacency spectrum is {sqrt(Delta), 0, ..., 0, -sqrt(Delta)}:
    # squaring the matrix gives Delta on the center row.
    for Delta in (1, 2, 3, 7, 12):
        am = build_alpha_matrix(gen_star(Delta + 1), 0.0)
        assert abs(spectral_radius_jacobi(am).lambda1 - math.sqrt(Delta)) <= 1e-12
        assert abs(spectral_radius_power(am).lambda1 - math.sqrt(Delta)) <= 1e-9


def test_bipartite_oscillation_handled():
    """C4 adjacency has eigenvalues {2, 0, 0, -2}; the +/-2 pair makes
    unshifted power iteration oscillate. The shift must break it."""
    am = build_alpha_matrix(gen_cycle(4), 0.0)
    res = spectral_radius_power(am)
    assert abs(res.lambda1 - 2.0) <= 1e-9
    assert res.method == "power"
    am2 = build_alpha_matrix(gen_complete(2), 0.0)  # eigenvalues {1, -1}
    assert abs(spectral_radius_power(am2).lambda1 - 1.0) <= 1e-9


def test_alpha_one_returns_max_degree_exactly():
    for g in (gen_star(7), gen_random(10, 0.5, 4), gen_cycle(6)):
        am = build_alpha_matrix(g, 1.0)
        Delta = max(g.degrees())
        assert spectral_radius_jacobi(am).lambda1 == float(Delta)
        assert spectral_radius(am).lambda1 == float(Delta)
        assert abs(spectral_radius_power(am).lambda1 - Delta) <= 1e-9


def test_zero_matrix():
    for n in (1, 2, 5):
        am = build_alpha_matrix(Graph(n, ()), 0.6)
        rj = spectral_radius_jacobi(am)
        assert rj.lambda1 == 0.0 and rj.iterations == 0
        rp = spectral_radius_power(am)
        assert rp.lambda1 == 0.0 and rp.residual == 0.0


def test_methods_agree_with_each_other_and_numpy():
    """Cross-validation plus a third oracle (numpy eigvalsh, test-only)."""
    rng_cases = [(n, p, s) for n in (2, 3, 5, 8, 12) for p in (0.2, 0.5, 0.8)
                 for s in (0, 1)]
    for n, p, s in rng_cases:
        g = gen_random(n, p, s)
        for alpha in ALPHAS:
            am = build_alpha_matrix(g, alpha)
            lj = spectral_radius_jacobi(am).lambda1
            lp = spectral_radius_power(am).lambda1
            ln = float(np.linalg.eigvalsh(am.matrix)[-1])
            assert abs(lj - lp) <= 1e-7
            assert abs(lj - ln) <= 1e-9


def test_row_sum_sandwich():
    """Average degree <= lambda1 <= Delta for graphs with an edge."""
    for seed in range(8):
        g = gen_random(9, 0.5, seed)
        if g.edge_count == 0:
            continue
        deg = g.degrees()
        for alpha in (0.0, 0.3, 0.8, 1.0):
            lam = spectral_radius(build_alpha_matrix(g, alpha)).lambda1
            assert sum(deg) / g.n - 1e-9 <= lam <= max(deg) + 1e-9


def test_monotone_under_edge_addition():
    """lambda1 never drops when an edge is added (nonnegative matrices)."""
    rng = np.random.default_rng(11)
    n = 8
    for _ in range(3):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(pairs)
        edges = []
        prev = 0.0
        for e in pairs[:12]:
            edges.append(tuple(e))
            lam = spectral_radius(
                build_alpha_matrix(from_edge_list(n, edges), 0.4)).lambda1
            assert lam >= prev - 1e-9
            prev = lam


def test_residual_and_iteration_reporting():
    am = build_alpha_matrix(gen_random(10, 0.5, 6), 0.3)
    rj = spectral_radius_jacobi(am)
    fro = math.sqrt(float(np.sum(am.matrix * am.matrix)))
    assert rj.residual <= 1e-12 * (1 + fro)
    assert 1 <= rj.iterations <= 100
    rp = spectral_radius_power(am, tol=1e-10)
    assert rp.residual <= 1e-9
    assert rp.iterations >= 1
    # tighter tol costs more iterations, still converges
    rp2 = spectral_radius_power(am, tol=1e-13)
    assert abs(rp2.lambda1 - rj.lambda1) <= 1e-9


def test_dispatcher():
    am = build_alpha_matrix(gen_random(12, 0.5, 0), 0.5)
    assert spectral_radius(am).method == "jacobi"
    assert spectral_radius(am, "power").method == "power"
    assert spectral_radius(am, "jacobi").method == "jacobi"
    with pytest.raises(InputError):
        spectral_radius(am, "lanczos")
    assert DISPATCH_DENSE_LIMIT == 200


def test_dispatcher_uses_power_above_limit():
    g = add_isolated(gen_star(150), DISPATCH_DENSE_LIMIT - 150 + 1)
    am = build_alpha_matrix(g, 0.5)
    assert am.n == DISPATCH_DENSE_LIMIT + 1
    res = spectral_radius(am)
    assert res.method == "power"
    from aalpha import bound_g
    assert abs(res.lambda1 - bound_g(149, 0.5)) <= 1e-8


def test_power_convergence_error():
    am = build_alpha_matrix(gen_cycle(5), 0.3)
    with pytest.raises(ConvergenceError) as ei:
        spectral_radius_power(am, tol=1e-10, max_iter=2)
    err = ei.value
    assert err.iterations == 2
    assert err.residual > 0
    assert 0 < err.estimate <= 2 + 1e-6


def test_input_validation():
    am = build_alpha_matrix(gen_star(3), 0.5)
    with pytest.raises(InputError):
        spectral_radius_power(am, tol=0.0)
    with pytest.raises(InputError):
        spectral_radius_power(am, max_iter=0)
    empty = build_alpha_matrix(Graph(0, ()), 0.5)
    with pytest.raises(InputError):
        spectral_radius_jacobi(empty)
    with pytest.raises(InputError):
        spectral_radius_power(empty)
