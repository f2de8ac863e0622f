import numpy as np
import pytest

from maslov import (
    BadInput,
    IllConditioned,
    LagrangianFrame,
    SouriauMatrix,
    SymplecticMatrix,
    apply_symplectic,
    coordinate_x,
    coordinate_xstar,
    direct_sum_frame,
    frame_from_graph,
    frame_from_unitary,
    frame_from_w,
    intersection_dim,
    omega_matrix,
    souriau_w,
    transversal_companion,
)
from maslov.paths import same_plane
from maslov.random_gen import random_frame, random_frame_intersecting, random_symplectic


def test_frame_from_graph_anchors():
    f = frame_from_graph(np.zeros((2, 2)))
    assert same_plane(f, coordinate_x(2))

    f1 = frame_from_graph(np.array([[1.0]]))
    s = 1 / np.sqrt(2)
    assert np.abs(f1.xblock - s).max() < 1e-12
    assert np.abs(f1.pblock - s).max() < 1e-12

    f2 = frame_from_graph(np.diag([1.0, 0.0]))
    span = f2.stacked()
    expected = np.array([[s, 0.0], [0.0, 1.0], [s, 0.0], [0.0, 0.0]])
    # same column span
    assert np.linalg.matrix_rank(np.hstack([span, expected]), tol=1e-8) == 2


def test_frame_validation():
    with pytest.raises(BadInput):
        LagrangianFrame(np.eye(2), np.eye(2))  # not orthonormal
    with pytest.raises(BadInput):
        # orthonormal but not isotropic: span{(x1, p2-ish)} cross terms
        LagrangianFrame(
            np.array([[1.0, 0.0], [0.0, 0.0]]) / np.sqrt(2),
            np.array([[0.0, 1.0], [1.0, 0.0], ])[::-1] / np.sqrt(2),
        )


def test_souriau_anchors():
    n = 2
    assert np.abs(souriau_w(coordinate_xstar(n)).w - np.eye(n)).max() < 1e-12
    assert np.abs(souriau_w(coordinate_x(n)).w + np.eye(n)).max() < 1e-12
    w = souriau_w(frame_from_graph(np.array([[1.0]]))).w
    assert abs(w[0, 0] + 1j) < 1e-12


def test_souriau_graph_formula(rng):
    # n = 1: w = (a^2 - 1 - 2ia) / (1 + a^2)
    for a in (-2.0, -0.5, 0.0, 0.3, 4.0):
        w = souriau_w(frame_from_graph(np.array([[a]]))).w[0, 0]
        assert abs(w - (a * a - 1 - 2j * a) / (1 + a * a)) < 1e-12


def test_souriau_frame_independent(rng):
    for n in (1, 2, 3):
        f = random_frame(rng, n)
        q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        rotated = LagrangianFrame(f.xblock @ q, f.pblock @ q)
        assert np.abs(souriau_w(f).w - souriau_w(rotated).w).max() < 1e-10


def test_frame_from_w_roundtrip(rng):
    for n in (1, 2, 3):
        for _ in range(30):
            w = souriau_w(random_frame(rng, n))
            assert np.abs(souriau_w(frame_from_w(w)).w - w.w).max() < 1e-8
    # repeated-eigenvalue cases
    assert same_plane(frame_from_w(SouriauMatrix(np.eye(2))), coordinate_xstar(2))
    assert same_plane(frame_from_w(SouriauMatrix(-np.eye(2))), coordinate_x(2))


def test_intersection_dim_anchors():
    assert intersection_dim(coordinate_x(2), coordinate_xstar(2)).k == 0
    f = frame_from_graph(np.array([[0.7, 0.1], [0.1, -0.2]]))
    assert intersection_dim(f, f).k == 2
    g = frame_from_graph(np.diag([1.0, 0.0]))
    assert intersection_dim(g, coordinate_x(2)).k == 1


def test_intersection_dim_exact_coranks(rng):
    for n in (2, 3):
        for k in range(n + 1):
            f1 = random_frame(rng, n)
            f2 = random_frame_intersecting(rng, f1, k)
            assert intersection_dim(f1, f2).k == k


def test_intersection_dim_ambiguity_band():
    # two planes separated by an angle right at the rank tolerance scale
    eps = 3e-9
    f1 = coordinate_x(1)
    f2 = frame_from_graph(np.array([[eps]]))
    with pytest.raises(IllConditioned):
        intersection_dim(f1, f2)


def test_apply_symplectic_anchors():
    n = 2
    J = SymplecticMatrix(omega_matrix(n))
    assert same_plane(apply_symplectic(J, coordinate_x(n)), coordinate_xstar(n))
    A = np.array([[0.4, 0.1], [0.1, -1.2]])
    shear = SymplecticMatrix(
        np.block([[np.eye(n), np.zeros((n, n))], [A, np.eye(n)]])
    )
    assert same_plane(apply_symplectic(shear, coordinate_x(n)), frame_from_graph(A))


def test_transversal_companion(rng):
    f3 = transversal_companion(coordinate_x(1), coordinate_xstar(1))
    assert intersection_dim(f3, coordinate_x(1)).k == 0
    assert intersection_dim(f3, coordinate_xstar(1)).k == 0
    # eigenphases are {pi, 0}; the maximin phase is +-pi/2
    w = souriau_w(f3).w[0, 0]
    assert abs(abs(w.imag) - 1.0) < 1e-9

    for n in (1, 2, 3):
        f = random_frame(rng, n)
        comp = transversal_companion(f, f)
        assert intersection_dim(comp, f).k == 0


def test_dims_symplectic_invariant(rng):
    for n in (1, 2, 3):
        for _ in range(10):
            f1 = random_frame(rng, n)
            f2 = random_frame_intersecting(rng, f1, int(rng.integers(0, n + 1)))
            k = intersection_dim(f1, f2).k
            S = random_symplectic(rng, n)
            assert intersection_dim(
                apply_symplectic(S, f1), apply_symplectic(S, f2)
            ).k == k


def test_direct_sum_frame_dims(rng):
    fa = random_frame(rng, 1)
    fb = random_frame(rng, 2)
    f = direct_sum_frame(fa, fb)
    assert f.n == 3
    wa = souriau_w(fa).w
    wb = souriau_w(fb).w
    w = souriau_w(f).w
    assert abs(np.linalg.det(w) - np.linalg.det(wa) * np.linalg.det(wb)) < 1e-10
