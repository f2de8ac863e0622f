"""The symplectic vector space (X x X*, omega) and the group Sp(n).

Conventions (used by every other module):

* vectors are ordered (x-block, p-block);
* the form is omega(z, z') = <p, x'> - <p', x>, with matrix
  M_omega = [[0, -I], [I, 0]] in that block order;
* the unitary group U(n) sits inside Sp(n) via u = A + iB -> [[A, -B], [B, A]].

Direct sums interleave blocks so that (s' (+) s'') acts on the x-blocks and
p-blocks of the two factors independently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .defaults import TOL_SYM
from .errors import BadInput


def omega_matrix(n: int) -> np.ndarray:
    """Matrix of the symplectic form in (x, p) block order."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])


@dataclass(frozen=True)
class SymplecticVector:
    """A vector z = (x, p) of X x X*."""

    x: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        x = np.atleast_1d(np.asarray(self.x, dtype=float))
        p = np.atleast_1d(np.asarray(self.p, dtype=float))
        if x.ndim != 1 or p.ndim != 1 or x.shape != p.shape:
            raise BadInput("position and momentum blocks must be equal-length vectors")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "p", p)

    @property
    def n(self) -> int:
        return self.x.shape[0]

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.x, self.p])


def omega(z: SymplecticVector, zp: SymplecticVector) -> float:
    """omega(z, z') = <p, x'> - <p', x>."""
    if z.n != zp.n:
        raise BadInput("dimension mismatch in omega")
    return float(z.p @ zp.x - zp.p @ z.x)


def is_symplectic(S: np.ndarray, tol: float = TOL_SYM) -> bool:
    """True iff ||S^T M S - M||_max <= tol with M the matrix of omega."""
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2 != 0:
        raise BadInput("expected a square matrix of even dimension")
    M = omega_matrix(S.shape[0] // 2)
    return float(np.abs(S.T @ M @ S - M).max()) <= tol


@dataclass(frozen=True)
class SymplecticMatrix:
    """A 2n x 2n real matrix validated against the form at construction."""

    entries: np.ndarray
    tol: float = TOL_SYM

    def __post_init__(self):
        S = np.asarray(self.entries, dtype=float)
        if not is_symplectic(S, self.tol):
            raise BadInput("matrix does not preserve the symplectic form")
        S = S.copy()
        S.setflags(write=False)
        object.__setattr__(self, "entries", S)

    @property
    def n(self) -> int:
        return self.entries.shape[0] // 2


@dataclass(frozen=True)
class UnitaryEmbedding:
    """Real and imaginary parts (a, b) of a unitary matrix u = a + ib."""

    a: np.ndarray
    b: np.ndarray
    tol: float = TOL_SYM

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise BadInput("real and imaginary parts must be equal-shape square matrices")
        n = a.shape[0]
        if (
            np.abs(a.T @ a + b.T @ b - np.eye(n)).max() > self.tol
            or np.abs(a.T @ b - b.T @ a).max() > self.tol
        ):
            raise BadInput("a + ib is not unitary within tolerance")
        a = a.copy()
        b = b.copy()
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_complex(cls, u: np.ndarray, tol: float = TOL_SYM) -> "UnitaryEmbedding":
        u = np.asarray(u, dtype=complex)
        return cls(u.real, u.imag, tol)

    @property
    def n(self) -> int:
        return self.a.shape[0]


def embed_unitary(u: UnitaryEmbedding) -> SymplecticMatrix:
    """The block matrix [[A, -B], [B, A]] of the U(n) action."""
    S = np.block([[u.a, -u.b], [u.b, u.a]])
    return SymplecticMatrix(S, tol=max(u.tol, TOL_SYM) * 10)


def _interleave_indices(n1: int, n2: int) -> tuple[np.ndarray, np.ndarray]:
    n = n1 + n2
    idx1 = np.concatenate([np.arange(n1), n + np.arange(n1)])
    idx2 = np.concatenate([n1 + np.arange(n2), n + n1 + np.arange(n2)])
    return idx1, idx2


def direct_sum_symplectic(S1: SymplecticMatrix, S2: SymplecticMatrix) -> SymplecticMatrix:
    """Block-interleaved direct sum acting on the two factors independently."""
    n1, n2 = S1.n, S2.n
    n = n1 + n2
    idx1, idx2 = _interleave_indices(n1, n2)
    T = np.zeros((2 * n, 2 * n))
    T[np.ix_(idx1, idx1)] = S1.entries
    T[np.ix_(idx2, idx2)] = S2.entries
    return SymplecticMatrix(T, tol=max(S1.tol, S2.tol))
