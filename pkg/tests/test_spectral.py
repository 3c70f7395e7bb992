"""Signless Laplacian matrices, spectral radii, quotients, and thresholds."""

import math
import random

import numpy as np
import pytest

from slmatch import (
    InputError,
    NumericalError,
    build_graph,
    closed_form_r,
    complete_graph,
    edge_threshold,
    empty_graph,
    extremal_h,
    is_equitable,
    join,
    largest_real_root,
    q1,
    q1_threshold,
    quotient_matrix,
    r_of_n,
    sample_connected,
    signless_laplacian,
    spectral_radius,
)


def test_signless_laplacian_path(path3):
    assert signless_laplacian(path3).tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]


def test_signless_laplacian_k2():
    assert signless_laplacian(complete_graph(2)).tolist() == [[1, 1], [1, 1]]


def test_signless_laplacian_row_sums(petersen):
    Q = signless_laplacian(petersen)
    assert np.array_equal(Q.sum(axis=1), 2.0 * np.array(petersen.degrees()))
    assert np.array_equal(Q, Q.T)


def test_spectral_radius_known_graphs(path3, cycle6):
    assert abs(q1(complete_graph(4)) - 6.0) <= 1e-10  # 2n-2 for K_n
    assert abs(q1(cycle6) - 4.0) <= 1e-10  # twice the regularity
    # Q(P3) has spectrum {0, 1, 3}
    assert abs(q1(path3) - 3.0) <= 1e-10
    eigen = np.linalg.eigvalsh(signless_laplacian(path3))
    assert np.allclose(eigen, [0.0, 1.0, 3.0], atol=1e-9)


def test_spectral_radius_agrees_with_lapack():
    rng = np.random.default_rng(4)
    for _ in range(40):
        n = int(rng.integers(2, 12))
        M = rng.random((n, n))
        M = (M + M.T) / 2
        assert abs(spectral_radius(M) - np.linalg.eigvalsh(M)[-1]) <= 1e-9


def test_spectral_radius_permutation_invariant():
    rng = random.Random(9)
    for G in sample_connected(8, 0.5, 10, seed=14):
        Q = signless_laplacian(G)
        perm = list(range(G.n))
        rng.shuffle(perm)
        P = np.eye(G.n)[perm]
        assert abs(spectral_radius(P @ Q @ P.T) - spectral_radius(Q)) <= 1e-9


def test_spectral_radius_edge_cases():
    assert spectral_radius(np.array([[0.0]])) == 0.0
    assert spectral_radius(np.zeros((3, 3))) == 0.0
    assert abs(spectral_radius(np.array([[0, 1], [1, 0]])) - 1.0) <= 1e-10


def test_spectral_radius_input_validation():
    with pytest.raises(InputError):
        spectral_radius(np.array([[0.0, -1.0], [-1.0, 0.0]]))
    with pytest.raises(InputError):
        spectral_radius(np.zeros((2, 3)))
    with pytest.raises(InputError):
        spectral_radius(np.zeros((2, 2)), tol=0.0)


def test_quotient_matrix_join_families():
    Q = signless_laplacian(join(complete_graph(2), empty_graph(4)))
    C = quotient_matrix(Q, [[0, 1], [2, 3, 4, 5]])
    assert C.tolist() == [[6, 4], [2, 2]]
    Q = signless_laplacian(join(complete_graph(3), empty_graph(5)))
    C = quotient_matrix(Q, [[0, 1, 2], [3, 4, 5, 6, 7]])
    assert C.tolist() == [[9, 5], [3, 3]]


def _h_partition(n):
    # clique class, hub class, pendant class in the extremal_h vertex layout
    return [list(range(1, n - 2)), [0], [n - 2, n - 1]]


def test_quotient_matrix_extremal_family():
    for n in (6, 10, 14):
        Q = signless_laplacian(extremal_h(n))
        C = quotient_matrix(Q, _h_partition(n))
        expected = [
            [2 * n - 7, 1, 0],
            [n - 3, n - 1, 2],
            [0, 1, 1],
        ]
        assert C.tolist() == expected


def test_quotient_matrix_rejects_bad_partitions(path3):
    Q = signless_laplacian(path3)
    with pytest.raises(InputError):
        quotient_matrix(Q, [[0, 1]])  # not covering
    with pytest.raises(InputError):
        quotient_matrix(Q, [[0, 1], [1, 2]])  # overlapping
    with pytest.raises(InputError):
        quotient_matrix(Q, [[0, 1, 2], []])  # empty class


def test_is_equitable(path3):
    Q = signless_laplacian(extremal_h(10))
    assert is_equitable(Q, _h_partition(10))
    assert not is_equitable(signless_laplacian(path3), [[0, 1], [2]])
    M = np.array([[0.5, 1.25], [1.25, 2.0]])
    assert is_equitable(M, [[0], [1]])  # singletons are always equitable


def test_equitable_quotient_shares_spectral_radius():
    cases = [
        (join(complete_graph(2), empty_graph(4)), [[0, 1], [2, 3, 4, 5]]),
        (join(complete_graph(3), empty_graph(5)), [[0, 1, 2], [3, 4, 5, 6, 7]]),
        (extremal_h(12), _h_partition(12)),
        (extremal_h(30), _h_partition(30)),
    ]
    for G, partition in cases:
        Q = signless_laplacian(G)
        assert is_equitable(Q, partition)
        assert abs(spectral_radius(quotient_matrix(Q, partition)) - spectral_radius(Q)) <= 1e-8


def test_spectral_monotonicity_under_subgraphs():
    rng = random.Random(31)
    checked = 0
    for G in sample_connected(8, 0.55, 250, seed=8):
        edges = G.edges()
        kept = [e for e in edges if rng.random() > 0.25]
        sub = build_graph(G.n, kept)
        assert q1(sub) <= q1(G) + 1e-9
        checked += 1
        # spanning subgraph with one edge removed, second sample point
        if edges:
            smaller = build_graph(G.n, edges[:-1])
            assert q1(smaller) <= q1(G) + 1e-9
            checked += 1
    assert checked >= 500


def test_perron_degree_bounds():
    for G in sample_connected(9, 0.4, 50, seed=21):
        radius = q1(G)
        top = max(G.degrees())
        assert top + 1 <= radius <= 2 * top + 1e-9


def test_largest_real_root_examples():
    assert abs(largest_real_root([1, -5, 4, 0]) - 4.0) <= 1e-12  # x(x-1)(x-4)
    # quadratic from the singleton-components case at n=6, s=2
    n, s = 6, 2
    assert abs(
        largest_real_root([1, -(2 * s + n - 2), s * n - 4 * s]) - (4 + 2 * math.sqrt(3))
    ) <= 1e-12
    assert largest_real_root([1, -7]) == 7.0
    assert abs(largest_real_root([2, 0, -8]) - 2.0) <= 1e-12


def test_largest_real_root_errors():
    with pytest.raises(NumericalError):
        largest_real_root([1, 0, 1])  # x^2 + 1
    with pytest.raises(NumericalError):
        largest_real_root([3.0])
    with pytest.raises(InputError):
        largest_real_root([0.0, 0.0])


def test_largest_real_root_double_root():
    # (x-2)^2 (x+1)
    assert abs(largest_real_root([1, -3, 0, 4]) - 2.0) <= 1e-6


def test_r_of_n_values():
    assert abs(r_of_n(4) - 4.0) <= 1e-9
    cubic = lambda n, x: x**3 - (3 * n - 7) * x**2 + n * (2 * n - 7) * x - 2 * (
        n * n - 7 * n + 12
    )
    for n in (6, 8, 10, 40):
        r = r_of_n(n)
        assert abs(cubic(n, r)) <= 1e-7
        assert cubic(n, r + 0.05) > 0  # nothing larger: cubic is positive beyond
        assert cubic(n, r + 2.0) > 0
    assert abs(r_of_n(6) - 6.9095) <= 5e-4
    assert abs(r_of_n(8) - 10.5136) <= 5e-4


def test_r_of_n_validation():
    for bad in (3, 5, 2, -4, 4.0):
        with pytest.raises(InputError):
            r_of_n(bad)


def test_closed_form_matches_root_finder():
    for n in range(4, 41, 2):
        assert abs(closed_form_r(n) - r_of_n(n)) <= 1e-6


def test_q1_threshold():
    assert q1_threshold(6) == 4 + 2 * math.sqrt(3)
    assert q1_threshold(8) == 6 + 2 * math.sqrt(6)
    assert abs(q1_threshold(4) - 4.0) <= 1e-9
    assert q1_threshold(10) == r_of_n(10)
    with pytest.raises(InputError):
        q1_threshold(7)
    with pytest.raises(InputError):
        q1_threshold(2)


def test_edge_threshold():
    assert edge_threshold(10) == 30
    assert edge_threshold(6) == 9
    assert edge_threshold(8) == 18
    assert edge_threshold(4) == 3
    assert edge_threshold(200) == (200 * 200 - 5 * 200 + 10) // 2
    with pytest.raises(InputError):
        edge_threshold(5)


def test_extremal_family_attains_edge_threshold():
    for n in [4] + list(range(10, 41, 2)):
        assert extremal_h(n).edge_count == edge_threshold(n)
