"""Lagrangian planes: orthonormal frames, the symmetric-unitary picture,
intersection dimensions and transversal companions.

A plane is stored as an orthonormal 2n x n frame [X; P].  The symmetric
unitary matrix attached to a plane is w = u u^t with u = P - iX; the map
ell -> w is a bijection onto the symmetric unitaries and is independent of
the orthonormal frame chosen (u -> uO leaves u u^t fixed for real
orthogonal O).

Anchor values fixing the sign conventions: X* -> I, X -> -I, and the graph
{p = ax} in n = 1 -> (a^2 - 1 - 2ia) / (1 + a^2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .defaults import AMBIGUITY_DECADE, TOL_RANK_BASE, TOL_SYM
from .errors import BadInput, IllConditioned
from .symplectic import SymplecticMatrix, omega_matrix


@dataclass(frozen=True)
class LagrangianFrame:
    """Orthonormal frame [X; P] of a Lagrangian plane."""

    xblock: np.ndarray
    pblock: np.ndarray
    tol: float = TOL_SYM

    def __post_init__(self):
        X = np.asarray(self.xblock, dtype=float)
        P = np.asarray(self.pblock, dtype=float)
        if X.shape != P.shape or X.ndim != 2 or X.shape[0] != X.shape[1]:
            raise BadInput("x and p blocks must be equal-shape square matrices")
        n = X.shape[0]
        if np.abs(X.T @ X + P.T @ P - np.eye(n)).max() > self.tol:
            raise BadInput("frame columns are not orthonormal")
        if np.abs(X.T @ P - P.T @ X).max() > self.tol:
            raise BadInput("frame does not span an isotropic subspace")
        X = X.copy()
        P = P.copy()
        X.setflags(write=False)
        P.setflags(write=False)
        object.__setattr__(self, "xblock", X)
        object.__setattr__(self, "pblock", P)

    @property
    def n(self) -> int:
        return self.xblock.shape[0]

    def stacked(self) -> np.ndarray:
        """The 2n x n matrix [X; P]."""
        return np.vstack([self.xblock, self.pblock])


@dataclass(frozen=True)
class SouriauMatrix:
    """Symmetric unitary n x n matrix representing a Lagrangian plane."""

    w: np.ndarray
    tol: float = TOL_SYM

    def __post_init__(self):
        w = np.asarray(self.w, dtype=complex)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise BadInput("expected a square matrix")
        n = w.shape[0]
        if np.abs(w - w.T).max() > self.tol:
            raise BadInput("matrix is not symmetric (plain transpose)")
        if np.abs(w @ w.conj().T - np.eye(n)).max() > self.tol:
            raise BadInput("matrix is not unitary")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return self.w.shape[0]


@dataclass(frozen=True)
class StratumLabel:
    """Dimension of the intersection with a reference plane."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise BadInput("intersection dimension must be nonnegative")


def coordinate_x(n: int) -> LagrangianFrame:
    """The plane X (p = 0)."""
    return LagrangianFrame(np.eye(n), np.zeros((n, n)))


def coordinate_xstar(n: int) -> LagrangianFrame:
    """The plane X* (x = 0)."""
    return LagrangianFrame(np.zeros((n, n)), np.eye(n))


def frame_from_graph(A: np.ndarray, tol: float = TOL_SYM) -> LagrangianFrame:
    """Orthonormal frame of the graph {(x, Ax)} of a symmetric matrix A.

    Uses the closed form X = (I + A^2)^(-1/2), P = A X.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise BadInput("expected a square matrix")
    if np.abs(A - A.T).max() > tol:
        raise BadInput("graph matrix must be symmetric")
    vals, vecs = np.linalg.eigh((A + A.T) / 2)
    X = (vecs / np.sqrt(1.0 + vals**2)) @ vecs.T
    return LagrangianFrame(X, A @ X)


def frame_from_unitary(u: np.ndarray) -> LagrangianFrame:
    """Frame of the plane u X* for unitary u (so that P - iX = u)."""
    u = np.asarray(u, dtype=complex)
    return LagrangianFrame(-u.imag, u.real)


def frame_unitary(ell: LagrangianFrame) -> np.ndarray:
    """The unitary u = P - iX of a frame."""
    return ell.pblock - 1j * ell.xblock


def souriau_w(ell: LagrangianFrame) -> SouriauMatrix:
    """w = u u^t with u = P - iX."""
    u = frame_unitary(ell)
    return SouriauMatrix(u @ u.T, tol=max(ell.tol * 10, TOL_SYM * 10))


def _joint_phase_decomposition(w: SouriauMatrix, group_tol: float = 1e-7):
    """Real orthogonal O and phases phi with w = O diag(e^{i phi}) O^T.

    Re(w) and Im(w) are commuting real symmetric matrices; diagonalize Re(w)
    and rotate each (clustered) eigenspace to diagonalize Im(w) within it.
    """
    A = w.w.real
    B = w.w.imag
    avals, O = np.linalg.eigh((A + A.T) / 2)
    n = w.n
    O = O.copy()
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and avals[stop] - avals[stop - 1] <= group_tol:
            stop += 1
        if stop - start > 1:
            block = O[:, start:stop]
            sub = block.T @ ((B + B.T) / 2) @ block
            _, Q = np.linalg.eigh(sub)
            O[:, start:stop] = block @ Q
        start = stop
    a = np.einsum("ij,ij->j", O, A @ O)
    b = np.einsum("ij,ij->j", O, B @ O)
    resid = max(
        np.abs(O.T @ A @ O - np.diag(a)).max(),
        np.abs(O.T @ B @ O - np.diag(b)).max(),
    )
    if resid > 1e-6:
        raise IllConditioned("joint diagonalization of the plane matrix failed")
    return O, np.arctan2(b, a)


def frame_from_w(w: SouriauMatrix) -> LagrangianFrame:
    """A frame of the plane represented by w (inverse of souriau_w).

    The phase of each eigenvalue is halved on the principal branch; any
    branch yields a valid frame of the same plane.
    """
    O, phases = _joint_phase_decomposition(w)
    u = O * np.exp(0.5j * phases)
    return frame_from_unitary(u)


def eigenphases(w: SouriauMatrix) -> np.ndarray:
    """Sorted phases (in (-pi, pi]) of the unit-circle eigenvalues of w."""
    _, phases = _joint_phase_decomposition(w)
    return np.sort(phases)


def rank_tolerance(singular_values: np.ndarray, base: float = TOL_RANK_BASE) -> float:
    top = float(singular_values[0]) if len(singular_values) else 0.0
    return base * max(1.0, top)


def _corank(sigma: np.ndarray, tol: float, what: str) -> int:
    band = (sigma > tol / AMBIGUITY_DECADE) & (sigma < tol * AMBIGUITY_DECADE)
    if np.any(band):
        raise IllConditioned(
            f"singular value inside the ambiguity band around tol={tol:g} in {what}"
        )
    return int(np.count_nonzero(sigma <= tol))


def intersection_dim(
    ell1: LagrangianFrame,
    ell2: LagrangianFrame,
    tol: float | None = None,
) -> StratumLabel:
    """dim(ell1 /\\ ell2), computed as the corank of w1 - w2.

    Cross-validated against the kernel dimension of [F1 | -F2]; a mismatch
    or a singular value inside the ambiguity band raises IllConditioned.
    """
    if ell1.n != ell2.n:
        raise BadInput("planes live in different dimensions")
    d = souriau_w(ell1).w - souriau_w(ell2).w
    sigma = np.linalg.svd(d, compute_uv=False)
    t = rank_tolerance(sigma) if tol is None else tol
    k_w = _corank(sigma, t, "w-difference corank")

    stacked = np.hstack([ell1.stacked(), -ell2.stacked()])
    sigma_f = np.linalg.svd(stacked, compute_uv=False)
    t_f = rank_tolerance(sigma_f) if tol is None else tol
    k_f = _corank(sigma_f, t_f, "frame-kernel corank")
    if k_w != k_f:
        raise IllConditioned(
            f"corank disagreement between routes ({k_w} vs {k_f})"
        )
    return StratumLabel(k_w)


def apply_symplectic(S: SymplecticMatrix, ell: LagrangianFrame) -> LagrangianFrame:
    """Frame of S . ell, re-orthonormalized by QR.

    Isotropy is re-verified after the factorization rather than re-imposed,
    so corrupted inputs surface as errors.
    """
    if S.n != ell.n:
        raise BadInput("matrix and plane dimensions differ")
    Q, _ = np.linalg.qr(S.entries @ ell.stacked())
    n = ell.n
    tol = ell.tol * max(1.0, np.linalg.cond(S.entries)) * 10
    return LagrangianFrame(Q[:n], Q[n:], tol=tol)


def _scalar_frame(theta: float, n: int) -> LagrangianFrame:
    """Frame of the plane with w = e^{i theta} I."""
    u = np.exp(0.5j * theta) * np.eye(n)
    return frame_from_unitary(u)


def companion_phase(ell1: LagrangianFrame, ell2: LagrangianFrame) -> float:
    """Phase theta maximizing the minimal circular distance from e^{i theta}
    to the eigenphase sets of w1 and w2."""
    phases = np.concatenate([eigenphases(souriau_w(ell1)), eigenphases(souriau_w(ell2))])
    phases = np.sort(np.mod(phases, 2 * np.pi))
    gaps = np.diff(np.concatenate([phases, [phases[0] + 2 * np.pi]]))
    j = int(np.argmax(gaps))
    theta = phases[j] + gaps[j] / 2
    theta = np.mod(theta + np.pi, 2 * np.pi) - np.pi
    return float(theta)


def transversal_companion(ell1: LagrangianFrame, ell2: LagrangianFrame) -> LagrangianFrame:
    """A plane e^{i theta} I transversal to both inputs; deterministic."""
    theta = companion_phase(ell1, ell2)
    ell3 = _scalar_frame(theta, ell1.n)
    if intersection_dim(ell3, ell1).k != 0 or intersection_dim(ell3, ell2).k != 0:
        raise IllConditioned("companion plane failed the transversality post-check")
    return ell3


def direct_sum_frame(ell1: LagrangianFrame, ell2: LagrangianFrame) -> LagrangianFrame:
    """Frame of ell1 (+) ell2 in the interleaved block convention."""
    X = np.block(
        [
            [ell1.xblock, np.zeros((ell1.n, ell2.n))],
            [np.zeros((ell2.n, ell1.n)), ell2.xblock],
        ]
    )
    P = np.block(
        [
            [ell1.pblock, np.zeros((ell1.n, ell2.n))],
            [np.zeros((ell2.n, ell1.n)), ell2.pblock],
        ]
    )
    return LagrangianFrame(X, P, tol=max(ell1.tol, ell2.tol))
