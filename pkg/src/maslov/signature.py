"""The Kashiwara-Demazure signature of a Lagrangian triple, the inertia
index on pairwise-transversal triples, and a generic coboundary evaluator.

tau(l1, l2, l3) is the signature of the quadratic form

    Q(z1, z2, z3) = omega(z1, z2) + omega(z2, z3) + omega(z3, z1)

restricted to l1 x l2 x l3.  In frame coordinates Q is assembled as a
3n x 3n symmetric Gram matrix with zero diagonal blocks and off-diagonal
blocks F_i^T M F_j / 2 following the cyclic pattern above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .defaults import AMBIGUITY_DECADE, TOL_SIG_BASE
from .errors import BadInput, IllConditioned
from .lagrangian import LagrangianFrame, intersection_dim
from .symplectic import omega_matrix


@dataclass(frozen=True)
class TripleSignature:
    """Eigenvalue sign counts of the triple form; tau = positives - negatives."""

    tau: int
    positive_count: int
    negative_count: int
    null_count: int

    def __post_init__(self):
        if self.tau != self.positive_count - self.negative_count:
            raise BadInput("tau must equal positive_count - negative_count")


def triple_gram(
    ell1: LagrangianFrame, ell2: LagrangianFrame, ell3: LagrangianFrame
) -> np.ndarray:
    """Symmetrized 3n x 3n Gram matrix of the triple form."""
    n = ell1.n
    if ell2.n != n or ell3.n != n:
        raise BadInput("the three planes must share a dimension")
    M = omega_matrix(n)
    F = [ell1.stacked(), ell2.stacked(), ell3.stacked()]
    B = np.zeros((3 * n, 3 * n))
    for i, j in ((0, 1), (1, 2), (2, 0)):
        B[i * n : (i + 1) * n, j * n : (j + 1) * n] = F[i].T @ M @ F[j]
    return (B + B.T) / 2


def kashiwara_tau(
    ell1: LagrangianFrame,
    ell2: LagrangianFrame,
    ell3: LagrangianFrame,
    tol: float | None = None,
) -> TripleSignature:
    """Signature of the triple form as exact integer sign counts."""
    G = triple_gram(ell1, ell2, ell3)
    vals = np.linalg.eigvalsh(G)
    scale = max(1.0, float(np.abs(vals).max())) if len(vals) else 1.0
    t = TOL_SIG_BASE * scale if tol is None else tol
    mags = np.abs(vals)
    if np.any((mags > t) & (mags < t * AMBIGUITY_DECADE)):
        raise IllConditioned(
            "triple-form eigenvalue inside the ambiguity band; "
            "inputs are too close to a stratum change"
        )
    pos = int(np.count_nonzero(vals > t))
    neg = int(np.count_nonzero(vals < -t))
    null = len(vals) - pos - neg
    return TripleSignature(pos - neg, pos, neg, null)


def inert_index(
    ell1: LagrangianFrame, ell2: LagrangianFrame, ell3: LagrangianFrame
) -> int:
    """Index of inertia (tau + n) / 2; requires pairwise transversality."""
    for a, b in ((ell1, ell2), (ell2, ell3), (ell3, ell1)):
        if intersection_dim(a, b).k != 0:
            raise BadInput("inertia index needs a pairwise-transversal triple")
    tau = kashiwara_tau(ell1, ell2, ell3).tau
    n = ell1.n
    if (tau + n) % 2 != 0:
        raise IllConditioned("tau + n is odd on a transversal triple")
    return (tau + n) // 2


@dataclass(frozen=True)
class Cochain:
    """An integer-valued k-cochain: a function of (k+1)-tuples of points."""

    arity: int
    evaluator: Callable[..., int]

    def __call__(self, *points) -> int:
        if len(points) != self.arity + 1:
            raise BadInput(
                f"cochain of arity {self.arity} takes {self.arity + 1} points"
            )
        return int(self.evaluator(*points))


def coboundary(f: Cochain, points: Sequence) -> int:
    """Alternating sum over deletions: sum_j (-1)^j f(points \\ j)."""
    if len(points) != f.arity + 2:
        raise BadInput(
            f"coboundary of an arity-{f.arity} cochain takes {f.arity + 2} points"
        )
    total = 0
    for j in range(len(points)):
        rest = tuple(points[i] for i in range(len(points)) if i != j)
        total += (-1) ** j * f(*rest)
    return total
