import math

import numpy as np
import pytest

from maslov import (
    BadInput,
    LagrangianPath,
    SymplecticPath,
    Undersampled,
    apply_symplectic,
    concat,
    concat_symplectic,
    coordinate_x,
    coordinate_xstar,
    frame_from_graph,
    induced_path,
    kashiwara_tau,
    keller_maslov,
    left_translate,
    lift_path,
    mu_ell,
    mu_lagrangian,
    mu_symplectic,
    path_joining,
    reverse,
    rotation_path,
    symplectic_path_from_algebra,
)
from maslov.paths import same_plane
from maslov.random_gen import (
    random_frame,
    random_lagrangian_path,
    random_symplectic,
    random_symplectic_path,
)
from maslov.verify import winding_integral


def constant_path(frame, samples=5):
    ts = tuple(np.linspace(0.0, 1.0, samples))
    return LagrangianPath(ts, tuple(frame for _ in ts), lambda t: frame)


def test_path_validation():
    f = coordinate_x(1)
    with pytest.raises(BadInput):
        LagrangianPath((0.0, 0.5), (f, f), None)  # does not end at 1
    with pytest.raises(BadInput):
        LagrangianPath((0.0, 0.7, 0.4, 1.0), (f, f, f, f), None)


def test_lift_constant_and_rotations():
    lifted = lift_path(constant_path(coordinate_xstar(1)))
    assert lifted.winding() == 0.0

    lam = rotation_path(1, 0.0, math.pi)
    lifted = lift_path(lam)
    assert abs(lifted.winding() - 1.0) < 1e-9

    lam = rotation_path(1, 0.0, 2 * math.pi)
    assert abs(lift_path(lam).winding() - 2.0) < 1e-9


def test_lift_branch_and_theta_start():
    lam = rotation_path(1, 0.0, math.pi)
    l0 = lift_path(lam, branch=0)
    l1 = lift_path(lam, branch=1)
    assert abs(l1.start_lift().theta - l0.start_lift().theta - 2 * math.pi) < 1e-12
    with pytest.raises(BadInput):
        lift_path(lam, theta_start=1.0)


def test_undersampled_without_generator():
    # two samples a quarter-turn of det apart are fine, a half-turn is not
    f0 = coordinate_xstar(1)
    f1 = coordinate_x(1)
    with pytest.raises(Undersampled):
        lift_path(LagrangianPath((0.0, 1.0), (f0, f1), None))


def test_keller_maslov_anchors():
    assert keller_maslov(rotation_path(1, 0.0, math.pi)) == 1
    assert keller_maslov(constant_path(coordinate_x(2))) == 0
    g1 = rotation_path(1, 0.0, 2 * math.pi)
    g2 = rotation_path(1, 0.0, -3 * math.pi)
    assert keller_maslov(concat(g1, g2)) == -1
    with pytest.raises(BadInput):
        keller_maslov(rotation_path(1, 0.0, 0.5))


def test_winding_in_dimension_two():
    # n = 2 loop of winding 3
    assert keller_maslov(rotation_path(2, 0.0, 3 * math.pi)) == 3


def test_mu_lagrangian_anchors(rng):
    # stratum paths give zero
    assert mu_lagrangian(constant_path(random_frame(rng, 2)), random_frame(rng, 2)) == 0
    # loops give twice the loop index
    for wind in (-2, 1, 3):
        gamma = rotation_path(1, 0.0, wind * math.pi)
        assert mu_lagrangian(gamma, frame_from_graph(np.array([[0.4]]))) == 2 * wind
    # spectral-flow anchor: graph path of A(t) = 2t - 1 against X
    ts = np.linspace(0.0, 1.0, 21)
    frames = tuple(frame_from_graph(np.array([[2 * t - 1.0]])) for t in ts)
    lam = LagrangianPath(
        tuple(ts), frames, lambda t: frame_from_graph(np.array([[2 * t - 1.0]]))
    )
    assert mu_lagrangian(lam, coordinate_x(1)) == 2


def test_concat_and_reverse(rng):
    for n in (1, 2):
        lam = random_lagrangian_path(rng, n)
        lam2 = path_joining(lam.end(), random_frame(rng, n))
        ell = random_frame(rng, n)
        assert mu_lagrangian(concat(lam, lam2), ell) == mu_lagrangian(
            lam, ell
        ) + mu_lagrangian(lam2, ell)
        assert mu_lagrangian(reverse(lam), ell) == -mu_lagrangian(lam, ell)
        loop = concat(lam, reverse(lam))
        assert keller_maslov(loop) == 0
    with pytest.raises(BadInput):
        concat(rotation_path(1, 0.0, 1.0), rotation_path(1, 2.0, 3.0))


def test_path_joining_endpoints(rng):
    for n in (1, 2, 3):
        fa, fb = random_frame(rng, n), random_frame(rng, n)
        lam = path_joining(fa, fb)
        assert same_plane(lam.start(), fa)
        assert same_plane(lam.end(), fb)


def test_mu_symplectic_anchors():
    n = 1
    eye = np.eye(2 * n)
    const = SymplecticPath((0.0, 1.0), (eye, eye), lambda t: eye)
    assert mu_symplectic(const, coordinate_x(n)) == 0

    def shear(t):
        A = np.array([[2 * t - 1.0]])
        return np.block([[np.eye(n), np.zeros((n, n))], [A, np.eye(n)]])

    ts = np.linspace(0.0, 1.0, 21)
    sig = SymplecticPath(tuple(ts), tuple(shear(t) for t in ts), shear)
    assert mu_symplectic(sig, coordinate_x(n)) == 2

    # full rotation loop in Sp(1): induced loop winds twice
    def rot(t):
        c, s = math.cos(2 * math.pi * t), math.sin(2 * math.pi * t)
        return np.array([[c, -s], [s, c]])

    loop = SymplecticPath(tuple(ts), tuple(rot(t) for t in ts), rot)
    for ell in (coordinate_x(1), coordinate_xstar(1), frame_from_graph(np.array([[0.7]]))):
        assert mu_symplectic(loop, ell) == 4


def test_mu_ell_requires_identity_start(rng):
    sig = random_symplectic_path(rng, 1, start=random_symplectic(rng, 1).entries)
    with pytest.raises(BadInput):
        mu_ell(sig, coordinate_x(1))


def test_mu_ell_anchors(rng):
    n = 1

    def shear(t):
        A = np.array([[t]])
        return np.block([[np.eye(n), np.zeros((n, n))], [A, np.eye(n)]])

    ts = np.linspace(0.0, 1.0, 21)
    sig = SymplecticPath(tuple(ts), tuple(shear(t) for t in ts), shear)
    assert mu_ell(sig, coordinate_x(1)) == mu_symplectic(sig, coordinate_x(1)) == 1

    # appending a full loop adds 4
    def rot(t):
        c, s = math.cos(2 * math.pi * t), math.sin(2 * math.pi * t)
        return np.array([[c, -s], [s, c]])

    loop = SymplecticPath(tuple(ts), tuple(rot(t) for t in ts), rot)
    base = random_symplectic_path(rng, 1)
    appended = concat_symplectic(base, left_translate(base.end(), loop))
    ell = random_frame(rng, 1)
    assert mu_ell(appended, ell) == mu_ell(base, ell) + 4


def test_induced_path_matches_action(rng):
    n = 2
    sig = random_symplectic_path(rng, n)
    ell = random_frame(rng, n)
    lam = induced_path(sig, ell)
    from maslov import SymplecticMatrix

    end = apply_symplectic(SymplecticMatrix(sig.end(), tol=1e-7), ell)
    assert same_plane(lam.end(), end)


def test_symplectic_path_from_algebra_validates():
    with pytest.raises(BadInput):
        symplectic_path_from_algebra(np.eye(2))


def test_change_of_reference(rng):
    for n in (1, 2, 3):
        lam = random_lagrangian_path(rng, n)
        ell, ellp = random_frame(rng, n), random_frame(rng, n)
        assert mu_lagrangian(lam, ell) - mu_lagrangian(lam, ellp) == (
            kashiwara_tau(lam.end(), ell, ellp).tau
            - kashiwara_tau(lam.start(), ell, ellp).tau
        )


def test_triangle_signature_with_closure(rng):
    """Sum of the three triangle indices minus twice the closure loop index
    equals twice the Kashiwara signature."""
    for n in (1, 2):
        for _ in range(5):
            l0, l1, l2 = (random_frame(rng, n) for _ in range(3))
            p01, p12, p20 = (
                path_joining(l0, l1),
                path_joining(l1, l2),
                path_joining(l2, l0),
            )
            m = keller_maslov(concat(concat(p01, p12), p20))
            total = (
                mu_lagrangian(p01, l2)
                + mu_lagrangian(p12, l0)
                + mu_lagrangian(p20, l1)
            )
            assert total - 2 * m == 2 * kashiwara_tau(l0, l1, l2).tau


def test_winding_integral_cross_check(rng):
    for n in (1, 2):
        for wind in (-1, 2):
            gamma = rotation_path(n, 0.0, wind * math.pi)
            assert abs(lift_path(gamma).winding() - winding_integral(gamma)) < 1e-6
        lam = random_lagrangian_path(rng, n)
        gamma = concat(lam, reverse(lam))
        assert abs(lift_path(gamma).winding() - winding_integral(gamma)) < 1e-6
