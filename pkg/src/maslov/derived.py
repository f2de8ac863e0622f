"""Indices expressed through the canonical ones: spectral flow of a
symmetric family, graph paths, the half-integer Robbin-Salamon index, the
Hormander index of a quadruple, and direct sums of cover points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
import scipy.linalg

from .defaults import TOL_ROUND, TOL_SIG_BASE, TOL_SYM
from .errors import BadInput, IllConditioned
from .lagrangian import LagrangianFrame, SouriauMatrix, coordinate_x, frame_from_graph
from .leray import LagrangianLift
from .paths import LagrangianPath, SymplecticPath, mu_lagrangian
from .signature import kashiwara_tau


@dataclass(frozen=True)
class SymmetricFamily:
    """A family t -> A(t) of real symmetric matrices on [0, 1]."""

    times: tuple
    matrices: tuple
    generator: Optional[Callable[[float], np.ndarray]] = None

    def __post_init__(self):
        ts = tuple(float(t) for t in self.times)
        mats = tuple(np.asarray(A, dtype=float) for A in self.matrices)
        if len(ts) != len(mats) or len(ts) < 2 or ts[0] != 0.0 or ts[-1] != 1.0:
            raise BadInput("family needs samples on [0, 1] with matching times")
        n = mats[0].shape[0]
        for A in mats:
            if A.shape != (n, n):
                raise BadInput("family matrices must share a shape")
            if np.abs(A - A.T).max() > TOL_SYM * max(1.0, float(np.abs(A).max())):
                raise BadInput("family matrix is not symmetric")
        object.__setattr__(self, "times", ts)
        object.__setattr__(self, "matrices", mats)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    @classmethod
    def from_function(cls, fn, samples: int = 33) -> "SymmetricFamily":
        ts = np.linspace(0.0, 1.0, samples)
        return cls(tuple(ts), tuple(fn(t) for t in ts), fn)

    @classmethod
    def linear(cls, A0, A1, samples: int = 33) -> "SymmetricFamily":
        A0 = np.asarray(A0, dtype=float)
        A1 = np.asarray(A1, dtype=float)
        return cls.from_function(lambda t: (1 - t) * A0 + t * A1, samples)


@dataclass(frozen=True)
class HalfInteger:
    """Exact half-integer stored as twice its value."""

    twice_value: int

    @property
    def value(self) -> float:
        return self.twice_value / 2

    def __eq__(self, other) -> bool:
        if isinstance(other, HalfInteger):
            return self.twice_value == other.twice_value
        return NotImplemented

    def __hash__(self):
        return hash(self.twice_value)

    def __repr__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


def matrix_signature(A: np.ndarray, tol: float | None = None) -> int:
    """sign A via eigenvalue sign counts; errors near singularity."""
    vals = np.linalg.eigvalsh(np.asarray(A, dtype=float))
    scale = max(1.0, float(np.abs(vals).max())) if len(vals) else 1.0
    t = TOL_SIG_BASE * scale if tol is None else tol
    if np.any(np.abs(vals) <= t * 10):
        raise IllConditioned("matrix is singular or near-singular for signature")
    return int(np.count_nonzero(vals > 0) - np.count_nonzero(vals < 0))


def spectral_flow(family: SymmetricFamily, tol: float | None = None) -> int:
    """sign A(1) - sign A(0); endpoints must be nonsingular."""
    return matrix_signature(family.matrices[-1], tol) - matrix_signature(
        family.matrices[0], tol
    )


def graph_path(family: SymmetricFamily) -> LagrangianPath:
    """The path of graph planes t -> {(x, A(t) x)}."""
    frames = tuple(frame_from_graph(A) for A in family.matrices)
    gen = None
    if family.generator is not None:
        g = family.generator
        gen = lambda t: frame_from_graph(g(t))
    return LagrangianPath(family.times, frames, gen)


def shear_path(family: SymmetricFamily) -> SymplecticPath:
    """The symplectic path t -> [[I, 0], [A(t), I]]."""
    n = family.n
    eye = np.eye(n)
    zero = np.zeros((n, n))

    def S_of(A: np.ndarray) -> np.ndarray:
        return np.block([[eye, zero], [A, eye]])

    mats = tuple(S_of(A) for A in family.matrices)
    gen = None
    if family.generator is not None:
        g = family.generator
        gen = lambda t: S_of(np.asarray(g(t), dtype=float))
    return SymplecticPath(family.times, mats, gen)


def robbin_salamon(
    lam: LagrangianPath, ell: LagrangianFrame, tol_round: float = TOL_ROUND
) -> HalfInteger:
    """Half the canonical Lagrangian intersection index."""
    return HalfInteger(mu_lagrangian(lam, ell, tol_round))


def hormander_xi(
    ell1: LagrangianFrame,
    ell2: LagrangianFrame,
    ell3: LagrangianFrame,
    ell4: LagrangianFrame,
) -> HalfInteger:
    """Half-difference of two triple signatures over a quadruple of planes."""
    t3 = kashiwara_tau(ell1, ell2, ell3).tau
    t4 = kashiwara_tau(ell1, ell2, ell4).tau
    return HalfInteger(t3 - t4)


def direct_sum_lift(l1: LagrangianLift, l2: LagrangianLift) -> LagrangianLift:
    """(w' (+) w'', theta' + theta'')."""
    w = scipy.linalg.block_diag(l1.w.w, l2.w.w)
    return LagrangianLift(SouriauMatrix(w), l1.theta + l2.theta)


def spectral_flow_path_index(family: SymmetricFamily) -> int:
    """The graph-path index against X; agrees with the endpoint signature
    difference for families with nonsingular endpoints."""
    return mu_lagrangian(graph_path(family), coordinate_x(family.n))
