"""Points of the universal cover of the Lagrangian Grassmannian as pairs
(w, theta) with det w = e^{i theta}, the closed formula for the index m on
transversal pairs, and the canonical index mu_bar on arbitrary pairs.

For transversal projections

    m = (theta1 - theta2 + i TrLog(-w1 w2^{-1})) / (2 pi) + n / 2

where w2^{-1} = conj(w2) and TrLog is taken on the principal branch (the
argument is unitary, hence normal, and has no eigenphase at +-pi when the
pair is transversal).  mu_bar = 2m - n there; the general case reduces to
the transversal one through a companion plane e^{i theta} I transversal to
both arguments, with the correction term tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .defaults import TOL_PHASE, TOL_RANK_BASE, TOL_ROUND
from .errors import BadInput, IllConditioned
from .lagrangian import (
    LagrangianFrame,
    SouriauMatrix,
    _corank,
    _scalar_frame,
    companion_phase,
    frame_from_w,
    intersection_dim,
    rank_tolerance,
    souriau_w,
)
from .signature import kashiwara_tau


@dataclass(frozen=True)
class LagrangianLift:
    """A cover point (w, theta); theta is an unreduced argument of det w."""

    w: SouriauMatrix
    theta: float
    tol_phase: float = TOL_PHASE

    def __post_init__(self):
        det = np.linalg.det(self.w.w)
        if abs(det - np.exp(1j * self.theta)) > self.tol_phase:
            raise BadInput("theta is not an argument of det w within tolerance")

    @property
    def n(self) -> int:
        return self.w.n


@dataclass(frozen=True)
class DeckAction:
    """Power of the generator of the fundamental group; acts by theta += 2k pi."""

    k: int


def lift_of(ell: LagrangianFrame, k: int = 0) -> LagrangianLift:
    """The lift (w, arg det w + 2k pi) with the principal argument in (-pi, pi]."""
    w = souriau_w(ell)
    theta0 = float(np.angle(np.linalg.det(w.w)))
    return LagrangianLift(w, theta0 + 2 * math.pi * k)


def deck_apply(g: DeckAction, lift: LagrangianLift) -> LagrangianLift:
    return LagrangianLift(lift.w, lift.theta + 2 * math.pi * g.k)


def _transversal(w1: SouriauMatrix, w2: SouriauMatrix) -> bool:
    sigma = np.linalg.svd(w1.w - w2.w, compute_uv=False)
    return _corank(sigma, rank_tolerance(sigma), "lift transversality") == 0


def souriau_m(
    l1: LagrangianLift,
    l2: LagrangianLift,
    tol_round: float = TOL_ROUND,
) -> int:
    """The integer m on transversal pairs via the principal trace-log."""
    if l1.n != l2.n:
        raise BadInput("lifts live in different dimensions")
    n = l1.n
    if not _transversal(l1.w, l2.w):
        raise BadInput("m requires transversal projections")
    # w2 symmetric unitary: w2^{-1} = conj(w2)
    prod = -l1.w.w @ l2.w.w.conj()
    phases = np.angle(np.linalg.eigvals(prod))
    if np.any(math.pi - np.abs(phases) < TOL_RANK_BASE):
        raise IllConditioned("eigenphase at the branch cut of the trace-log")
    # i TrLog = i * (i * sum(phases)) = -sum(phases)
    value = (l1.theta - l2.theta - float(phases.sum())) / (2 * math.pi) + n / 2
    m = round(value)
    if abs(value - m) > tol_round:
        raise IllConditioned(
            f"index residual {abs(value - m):.3g} exceeds tol_round; "
            "the pair is nearly non-transversal"
        )
    return int(m)


def companion_lift(ell1: LagrangianFrame, ell2: LagrangianFrame) -> LagrangianLift:
    """Canonical companion: w3 = e^{i theta} I lifted with theta3 = n * theta."""
    theta = companion_phase(ell1, ell2)
    n = ell1.n
    ell3 = _scalar_frame(theta, n)
    return LagrangianLift(souriau_w(ell3), n * theta)


def mu_bar(
    l1: LagrangianLift,
    l2: LagrangianLift,
    companion: LagrangianLift | None = None,
    tol_round: float = TOL_ROUND,
) -> int:
    """The canonical index, total on pairs of cover points.

    Transversal pairs: 2m - n.  Otherwise the pair is routed through a
    companion plane transversal to both arguments; the result does not
    depend on the companion chosen (checked by the test suite), and the
    canonical scalar companion makes runs deterministic.
    """
    if l1.n != l2.n:
        raise BadInput("lifts live in different dimensions")
    n = l1.n
    if companion is None and _transversal(l1.w, l2.w):
        return 2 * souriau_m(l1, l2, tol_round) - n
    f1 = frame_from_w(l1.w)
    f2 = frame_from_w(l2.w)
    l3 = companion if companion is not None else companion_lift(f1, f2)
    f3 = frame_from_w(l3.w)
    if intersection_dim(f1, f3).k != 0 or intersection_dim(f2, f3).k != 0:
        raise BadInput("companion must be transversal to both arguments")
    tau = kashiwara_tau(f1, f2, f3).tau
    m13 = souriau_m(l1, l3, tol_round)
    m23 = souriau_m(l2, l3, tol_round)
    return (2 * m13 - n) - (2 * m23 - n) + tau
