"""Construction of alpha*D + (1 - alpha)*A and its entry-level guarantees."""

import numpy as np
import pytest

from aalpha import (Graph, InputError, build_alpha_matrix, gen_complete,
                    gen_random, gen_star, matrix_csv, matvec)

DYADIC_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)
GENERIC_ALPHAS = (0.1, 0.37, 1 / 3, 0.99)


def test_endpoints_are_adjacency_and_degree():
    g = gen_random(8, 0.5, 2)
    a0 = build_alpha_matrix(g, 0.0)
    assert np.array_equal(a0.matrix, g.adjacency_matrix())
    a1 = build_alpha_matrix(g, 1.0)
    assert np.array_equal(a1.matrix, np.diag(np.asarray(g.degrees(), float)))


def test_half_is_half_signless_laplacian():
    g = gen_star(5)
    am = build_alpha_matrix(g, 0.5)
    q = np.diag(np.asarray(g.degrees(), float)) + g.adjacency_matrix()
    assert np.array_equal(am.matrix, q / 2)


def test_symmetry_exact():
    for seed in range(6):
        g = gen_random(10, 0.6, seed)
        for alpha in DYADIC_ALPHAS + GENERIC_ALPHAS:
            m = build_alpha_matrix(g, alpha).matrix
            assert np.max(np.abs(m - m.T)) == 0.0


def test_row_sums_equal_degrees():
    # Exact at alphas whose products with small integers round nowhere;
    # 1e-12 relative otherwise (alpha*d and (1-alpha)*d each round once).
    for seed in range(6):
        g = gen_random(11, 0.5, seed)
        deg = np.asarray(g.degrees(), float)
        ones = np.ones(g.n)
        for alpha in DYADIC_ALPHAS:
            assert np.array_equal(matvec(build_alpha_matrix(g, alpha), ones), deg)
        for alpha in GENERIC_ALPHAS:
            rs = matvec(build_alpha_matrix(g, alpha), ones)
            assert np.all(np.abs(rs - deg) <= 1e-12 * np.maximum(1.0, deg))


def test_entrywise_nonnegative_on_unit_interval():
    g = gen_random(9, 0.4, 5)
    for alpha in DYADIC_ALPHAS + GENERIC_ALPHAS:
        assert np.min(build_alpha_matrix(g, alpha).matrix) >= 0.0


def test_entries_monotone_in_alpha():
    """Edge entries fall as (1 - alpha); diagonal rises as alpha*d."""
    g = gen_complete(4)
    alphas = np.linspace(0.0, 1.0, 9)
    edge = [build_alpha_matrix(g, a).matrix[0, 1] for a in alphas]
    diag = [build_alpha_matrix(g, a).matrix[0, 0] for a in alphas]
    assert all(x >= y for x, y in zip(edge, edge[1:]))
    assert all(x <= y for x, y in zip(diag, diag[1:]))


def test_matrix_read_only():
    am = build_alpha_matrix(gen_star(4), 0.3)
    with pytest.raises(ValueError):
        am.matrix[0, 0] = 9.0


def test_alpha_domain():
    g = gen_star(3)
    with pytest.raises(InputError):
        build_alpha_matrix(g, 1.0000001)
    with pytest.raises(InputError):
        build_alpha_matrix(g, -0.1)
    with pytest.raises(InputError):
        build_alpha_matrix(g, float("nan"))
    with pytest.raises(InputError):
        build_alpha_matrix(g, float("inf"), permissive=True)
    # permissive admits alpha > 1 but still no negatives
    am = build_alpha_matrix(g, 1.5, permissive=True)
    assert am.matrix[0, 1] == -0.5
    with pytest.raises(InputError):
        build_alpha_matrix(g, -0.1, permissive=True)


def test_matvec_shape_and_value():
    g = gen_random(7, 0.5, 3)
    am = build_alpha_matrix(g, 0.42)
    x = np.linspace(-1, 1, 7)
    assert np.array_equal(matvec(am, x), am.matrix @ x)
    with pytest.raises(InputError):
        matvec(am, np.ones(6))


def test_matrix_csv():
    g = gen_star(3)
    am = build_alpha_matrix(g, 1 / 3)
    lines = matrix_csv(am).splitlines()
    assert len(lines) == 3
    parsed = np.array([[float(v) for v in ln.split(",")] for ln in lines])
    assert np.array_equal(parsed, am.matrix)  # %.17g round-trips float64
    assert matrix_csv(build_alpha_matrix(Graph(0, ()), 0.5)) == ""


def test_metadata_fields():
    g = gen_star(6)
    am = build_alpha_matrix(g, 0.25)
    assert am.n == 6
    assert am.alpha == 0.25
    assert am.degrees == (5, 1, 1, 1, 1, 1)
    assert am.max_degree == 5
    assert build_alpha_matrix(Graph(0, ()), 0.5).max_degree == 0
