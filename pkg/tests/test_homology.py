"""Homology tests: boundary structure, Betti numbers vs an independent SNF
oracle, and the connectivity verifiers."""

import random

import pytest

from oracles import snf_betti
from tvermat import (
    GraphicMatroid,
    HypothesisViolation,
    UniformMatroid,
    as_complex,
    betti_reduced,
    boundary_matrix,
    chessboard,
    colourful_matroid,
    conjecture_scan,
    from_facets,
    full_simplex,
    homologically_connected,
    verify_claim,
    verify_corollary,
)
from tvermat.homology import _rank_sparse_exact, _rank_sparse_mod_p

K4 = GraphicMatroid(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_boundary_single_edge():
    X = from_facets(2, [(0, 1)])
    d1 = boundary_matrix(X, 1)
    # boundary of [v0, v1] is v1 - v0: two entries, signs -1 and +1
    assert d1.cols == [[(0, -1), (1, 1)]]


def test_boundary_composition_zero():
    samples = [full_simplex(3), chessboard(3, 4), as_complex(K4, 2),
               chessboard(2, 3)]
    for X in samples:
        top = X.dimension
        for i in range(1, top + 1):
            prod = boundary_matrix(X, i).multiply_columns(boundary_matrix(X, i + 1)) \
                if i + 1 <= top else None
            if prod is not None:
                assert all(col == [] for col in prod.cols)


def test_rank_of_cycle_boundary():
    c23 = chessboard(2, 3)  # 6-cycle
    d1 = boundary_matrix(c23, 1)
    assert _rank_sparse_exact(d1.cols) == 5
    assert _rank_sparse_mod_p(d1.cols, (1 << 31) - 1) == 5


def test_betti_examples():
    assert betti_reduced(chessboard(2, 2), 1).betti == (1, 0)
    assert betti_reduced(chessboard(2, 3), 1).betti == (0, 1)
    assert betti_reduced(chessboard(3, 4), 2).betti == (0, 2, 1)


def test_betti_exact_only_path_agrees():
    c34 = chessboard(3, 4)
    assert betti_reduced(c34, 2, exact_only=True).betti == (0, 2, 1)


def test_betti_vs_snf_oracle_random():
    rng = random.Random(1234)
    for trial in range(25):
        n = rng.randint(3, 8)
        nf = rng.randint(1, 5)
        facets = []
        for _ in range(nf):
            size = rng.randint(1, min(4, n))
            facets.append(tuple(sorted(rng.sample(range(n), size))))
        X = from_facets(n, facets)
        top = X.dimension
        up_to = max(top, 0)
        ours = betti_reduced(X, up_to).betti
        oracle = snf_betti(X.faces_by_dim, up_to)
        assert ours == oracle, (facets, ours, oracle)


def test_euler_poincare():
    samples = [chessboard(2, 3), chessboard(3, 4), as_complex(K4, 2),
               full_simplex(4), from_facets(4, [(0, 1), (2, 3)])]
    for X in samples:
        top = max(X.dimension, 0)
        bv = betti_reduced(X, top)
        reduced_euler = sum((-1) ** i * b for i, b in enumerate(bv.betti))
        assert X.euler_characteristic() - 1 == reduced_euler


def test_homologically_connected_examples():
    rep = homologically_connected(as_complex(UniformMatroid(2, 4), 1), 0)
    assert rep.verified

    rep = homologically_connected(chessboard(2, 2), 0)
    assert not rep.verified and rep.first_nonvanishing == 0

    rep = homologically_connected(chessboard(3, 5), 1)
    assert rep.verified

    rep = homologically_connected(chessboard(2, 3), -1)
    assert rep.verified  # nonempty is all that is asked

    empty = from_facets(1, [])
    assert not homologically_connected(empty, -1).verified


def test_matroid_connectivity_sample():
    for M in (UniformMatroid(2, 4), UniformMatroid(3, 6), K4,
              colourful_matroid(2, 2)):
        c = M.rank() - 2
        X = as_complex(M, max(c + 1, 0))
        assert homologically_connected(X, c).verified


def test_verify_claim_examples():
    M = UniformMatroid(2, 4)
    rep = verify_claim([M], [frozenset({0, 1})], 1)
    assert rep.bound == -1 and rep.verified

    rep = verify_claim([M, M], [frozenset({0, 1}), frozenset({2, 3})], 1)
    assert rep.bound == 0 and rep.verified

    # rank-1 factors: each part must split into m=2 singletons
    one = UniformMatroid(1, 4)
    rep = verify_claim([one, one], [frozenset({0, 1}), frozenset({2, 3})], 2)
    assert rep.bound == 0 and rep.verified


def test_verify_claim_hypothesis_violations():
    one = UniformMatroid(1, 3)
    with pytest.raises(HypothesisViolation) as err:
        verify_claim([one, one], [frozenset({0}), frozenset({1, 2})], 1)
    assert err.value.certificate.witness == frozenset({1, 2})
    with pytest.raises(HypothesisViolation):
        verify_claim([one, one], [frozenset({0, 1}), frozenset({1, 2})], 2)


def test_verify_corollary_examples():
    rep = verify_corollary(UniformMatroid(1, 3), 2)
    assert rep.bound == -1 and rep.verified

    rep = verify_corollary(UniformMatroid(2, 4), 2)
    assert rep.bound == 0 and rep.verified

    rep = verify_corollary(colourful_matroid(2, 1), 2)
    assert rep.bound == 0 and rep.verified
    assert rep.context["b"] == 2 and rep.context["rank"] == 2


def test_conjecture_scan_chessboard_thresholds():
    for k in (2, 3):
        below = conjecture_scan(UniformMatroid(1, 2 * k - 2), k)
        assert not below.verified
        assert below.report.first_nonvanishing == k - 2
        at = conjecture_scan(UniformMatroid(1, 2 * k - 1), k)
        assert at.verified
    rec = conjecture_scan(UniformMatroid(1, 1), 1)
    assert rec.target == -1 and rec.verified
