"""Sampled Lagrangian and symplectic paths, continuous lifting of the
determinant phase, the loop winding index, and the canonical intersection
indices for paths.

Paths are ordered samples on [0, 1] plus an optional pure generator
t -> value used for adaptive bisection when a phase step exceeds pi/2.
Sampled-only paths that violate the step bound fail loudly (UNDERSAMPLED)
instead of interpolating: interpolation between Lagrangian frames is not
canonical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
import scipy.linalg

from .defaults import TOL_ROUND
from .errors import BadInput, Undersampled
from .lagrangian import LagrangianFrame, frame_from_unitary, frame_unitary, souriau_w
from .leray import LagrangianLift, lift_of, mu_bar
from .symplectic import omega_matrix

#: step acceptance bound for the determinant phase (margin against aliasing)
MAX_PHASE_STEP = math.pi / 2

#: hard cap on samples produced by refinement in a single lift
MAX_SAMPLES = 10**6

#: planes are considered equal when their w matrices agree to this
PLANE_MATCH_TOL = 1e-8


def _check_times(times: Sequence[float]) -> tuple[float, ...]:
    ts = tuple(float(t) for t in times)
    if len(ts) < 2 or ts[0] != 0.0 or ts[-1] != 1.0:
        raise BadInput("path samples must start at t=0 and end at t=1")
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise BadInput("sample times must be strictly increasing")
    return ts


@dataclass(frozen=True)
class LagrangianPath:
    times: tuple
    frames: tuple
    generator: Optional[Callable[[float], LagrangianFrame]] = None

    def __post_init__(self):
        object.__setattr__(self, "times", _check_times(self.times))
        frames = tuple(self.frames)
        if len(frames) != len(self.times):
            raise BadInput("one frame per sample time required")
        n = frames[0].n
        if any(f.n != n for f in frames):
            raise BadInput("all frames must share a dimension")
        object.__setattr__(self, "frames", frames)

    @property
    def n(self) -> int:
        return self.frames[0].n

    def start(self) -> LagrangianFrame:
        return self.frames[0]

    def end(self) -> LagrangianFrame:
        return self.frames[-1]


@dataclass(frozen=True)
class SymplecticPath:
    times: tuple
    matrices: tuple  # raw 2n x 2n arrays; validated loosely at construction
    generator: Optional[Callable[[float], np.ndarray]] = None

    def __post_init__(self):
        object.__setattr__(self, "times", _check_times(self.times))
        mats = tuple(np.asarray(S, dtype=float) for S in self.matrices)
        if len(mats) != len(self.times):
            raise BadInput("one matrix per sample time required")
        d = mats[0].shape[0]
        if d % 2 != 0 or any(S.shape != (d, d) for S in mats):
            raise BadInput("all matrices must be square of one even dimension")
        M = omega_matrix(d // 2)
        for S in mats:
            scale = max(1.0, float(np.abs(S).max()) ** 2)
            if np.abs(S.T @ M @ S - M).max() > 1e-8 * scale:
                raise BadInput("path sample is not symplectic")
        object.__setattr__(self, "matrices", mats)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0] // 2

    def start(self) -> np.ndarray:
        return self.matrices[0]

    def end(self) -> np.ndarray:
        return self.matrices[-1]


def same_plane(f1: LagrangianFrame, f2: LagrangianFrame, tol: float = PLANE_MATCH_TOL) -> bool:
    return float(np.abs(souriau_w(f1).w - souriau_w(f2).w).max()) <= tol


def _rescale(times: Sequence[float], a: float, b: float) -> list[float]:
    return [a + (b - a) * t for t in times]


def concat(lam: LagrangianPath, lam2: LagrangianPath) -> LagrangianPath:
    """Time-rescaled concatenation (lam(2t), lam2(2t - 1))."""
    if not same_plane(lam.end(), lam2.start()):
        raise BadInput("paths are not consecutive: endpoint planes differ")
    times = _rescale(lam.times, 0.0, 0.5) + _rescale(lam2.times[1:], 0.5, 1.0)
    frames = lam.frames + lam2.frames[1:]
    gen = None
    if lam.generator is not None and lam2.generator is not None:
        g1, g2 = lam.generator, lam2.generator
        gen = lambda t: g1(2 * t) if t <= 0.5 else g2(2 * t - 1)
    return LagrangianPath(tuple(times), frames, gen)


def reverse(lam: LagrangianPath) -> LagrangianPath:
    """The path t -> lam(1 - t)."""
    times = tuple(1.0 - t for t in reversed(lam.times))
    frames = tuple(reversed(lam.frames))
    gen = None
    if lam.generator is not None:
        g = lam.generator
        gen = lambda t: g(1.0 - t)
    return LagrangianPath(times, frames, gen)


def concat_symplectic(sig: SymplecticPath, sig2: SymplecticPath) -> SymplecticPath:
    if float(np.abs(sig.end() - sig2.start()).max()) > 1e-8:
        raise BadInput("symplectic paths are not consecutive")
    times = _rescale(sig.times, 0.0, 0.5) + _rescale(sig2.times[1:], 0.5, 1.0)
    mats = sig.matrices + sig2.matrices[1:]
    gen = None
    if sig.generator is not None and sig2.generator is not None:
        g1, g2 = sig.generator, sig2.generator
        gen = lambda t: g1(2 * t) if t <= 0.5 else g2(2 * t - 1)
    return SymplecticPath(tuple(times), mats, gen)


def left_translate(S: np.ndarray, sig: SymplecticPath) -> SymplecticPath:
    """The path t -> S . sig(t)."""
    S = np.asarray(S, dtype=float)
    mats = tuple(S @ m for m in sig.matrices)
    gen = None
    if sig.generator is not None:
        g = sig.generator
        gen = lambda t: S @ g(t)
    return SymplecticPath(sig.times, mats, gen)


@dataclass(frozen=True)
class LiftedPath:
    """A path together with a continuous argument of det w along it."""

    times: tuple
    frames: tuple
    ws: tuple
    thetas: tuple

    def start_lift(self) -> LagrangianLift:
        return LagrangianLift(self.ws[0], self.thetas[0])

    def end_lift(self) -> LagrangianLift:
        return LagrangianLift(self.ws[-1], self.thetas[-1])

    @property
    def sample_count(self) -> int:
        return len(self.times)

    def winding(self) -> float:
        return (self.thetas[-1] - self.thetas[0]) / (2 * math.pi)


def _det_angle(frame: LagrangianFrame):
    w = souriau_w(frame)
    return w, float(np.angle(np.linalg.det(w.w)))


def _wrap(d: float) -> float:
    return (d + math.pi) % (2 * math.pi) - math.pi


def lift_path(
    lam: LagrangianPath,
    branch: int = 0,
    theta_start: float | None = None,
    max_depth: int = 40,
) -> LiftedPath:
    """Phase unwrapping of det w along the path.

    theta(0) is the principal argument plus 2 pi * branch (or the explicit
    theta_start, which must be an argument of det w(0)).  Each step uses
    nearest-argument continuation and must stay below pi/2; offending steps
    are bisected through the generator up to max_depth, and accepted steps
    must additionally be reproduced by their midpoint split.

    The sample grid must resolve the fastest motion of the path: a feature
    narrower than half the local sample spacing whose endpoints happen to
    land on nearby planes is invisible to any pointwise test.  Paths
    obtained by transporting with a badly conditioned symplectic matrix
    are the typical offenders; sample those proportionally to cond(S).
    """
    pairs = [_det_angle(f) for f in lam.frames]
    times = list(lam.times)
    frames = list(lam.frames)
    ws = [p[0] for p in pairs]
    angs = [p[1] for p in pairs]

    out_t = [times[0]]
    out_f = [frames[0]]
    out_w = [ws[0]]
    out_a = [angs[0]]

    def descend(t0, a0, t1, f1, w1, a1, depth):
        if len(out_t) > MAX_SAMPLES:
            raise Undersampled("sample cap exceeded during refinement")
        d = _wrap(a1 - a0)
        if lam.generator is None:
            if abs(d) < MAX_PHASE_STEP:
                out_t.append(t1)
                out_f.append(f1)
                out_w.append(w1)
                out_a.append(a1)
                return
            raise Undersampled(
                "phase step >= pi/2 between samples and no generator to refine"
            )
        # with a generator, guard nearest-argument continuation against
        # aliasing: the midpoint split must reproduce the whole step
        tm = (t0 + t1) / 2
        fm = lam.generator(tm)
        wm, am = _det_angle(fm)
        d1 = _wrap(am - a0)
        d2 = _wrap(a1 - am)
        consistent = abs(d1 + d2 - d) < 1e-9
        if consistent and max(abs(d), abs(d1), abs(d2)) < MAX_PHASE_STEP:
            out_t.append(tm)
            out_f.append(fm)
            out_w.append(wm)
            out_a.append(am)
            out_t.append(t1)
            out_f.append(f1)
            out_w.append(w1)
            out_a.append(a1)
            return
        if depth >= max_depth:
            raise Undersampled("refinement depth exceeded; path may be discontinuous")
        descend(t0, a0, tm, fm, wm, am, depth + 1)
        descend(tm, am, t1, f1, w1, a1, depth + 1)

    for i in range(1, len(times)):
        descend(out_t[-1], out_a[-1], times[i], frames[i], ws[i], angs[i], 0)

    if theta_start is None:
        theta0 = out_a[0] + 2 * math.pi * branch
    else:
        if abs(np.exp(1j * theta_start) - np.exp(1j * out_a[0])) > 1e-6:
            raise BadInput("theta_start is not an argument of det w(0)")
        theta0 = float(theta_start)
    thetas = [theta0]
    for i in range(1, len(out_a)):
        thetas.append(thetas[-1] + _wrap(out_a[i] - out_a[i - 1]))
    return LiftedPath(tuple(out_t), tuple(out_f), tuple(out_w), tuple(thetas))


def _integer(value: float, tol_round: float, what: str) -> int:
    k = round(value)
    if abs(value - k) > tol_round:
        raise Undersampled(f"{what} residual {abs(value - k):.3g} exceeds tolerance")
    return int(k)


def keller_maslov(gamma: LagrangianPath, tol_round: float = TOL_ROUND) -> int:
    """Winding number of det w around a Lagrangian loop."""
    if not same_plane(gamma.start(), gamma.end()):
        raise BadInput("loop index requires gamma(0) = gamma(1) as planes")
    lifted = lift_path(gamma)
    return _integer(lifted.winding(), tol_round, "loop winding")


def mu_lagrangian(
    lam: LagrangianPath,
    ell: LagrangianFrame,
    tol_round: float = TOL_ROUND,
) -> int:
    """Canonical intersection index of a Lagrangian path with a plane.

    Lift the path on branch 0 and take the difference of the canonical
    two-point index against any lift of ell; the difference is independent
    of the branch choices.
    """
    lifted = lift_path(lam)
    ell_inf = lift_of(ell, 0)
    return mu_bar(lifted.end_lift(), ell_inf, tol_round=tol_round) - mu_bar(
        lifted.start_lift(), ell_inf, tol_round=tol_round
    )


def _act(entries: np.ndarray, ell: LagrangianFrame) -> LagrangianFrame:
    n = ell.n
    Q, _ = np.linalg.qr(entries @ ell.stacked())
    return LagrangianFrame(Q[:n], Q[n:], tol=1e-8)


def induced_path(sig: SymplecticPath, ell: LagrangianFrame) -> LagrangianPath:
    """The Lagrangian path t -> sig(t) . ell."""
    if sig.n != ell.n:
        raise BadInput("path and plane dimensions differ")
    frames = tuple(_act(S, ell) for S in sig.matrices)
    gen = None
    if sig.generator is not None:
        g = sig.generator
        gen = lambda t: _act(np.asarray(g(t), dtype=float), ell)
    return LagrangianPath(sig.times, frames, gen)


def mu_symplectic(
    sig: SymplecticPath,
    ell: LagrangianFrame,
    tol_round: float = TOL_ROUND,
) -> int:
    """Index of a symplectic path: mu of the induced path t -> sig(t) ell."""
    return mu_lagrangian(induced_path(sig, ell), ell, tol_round)


def mu_ell(
    sig: SymplecticPath,
    ell: LagrangianFrame,
    tol_round: float = TOL_ROUND,
) -> int:
    """Index of a symplectic path from the identity, relative to ell.

    Equals the canonical two-point index between the endpoint and the start
    of the lifted induced path t -> sig(t) ell.
    """
    if float(np.abs(sig.start() - np.eye(2 * sig.n)).max()) > 1e-8:
        raise BadInput("this index requires a path starting at the identity")
    lifted = lift_path(induced_path(sig, ell))
    return mu_bar(lifted.end_lift(), lifted.start_lift(), tol_round=tol_round)


# ---------------------------------------------------------------------------
# constructors


def path_from_unitary_family(
    fn: Callable[[float], np.ndarray], samples: int = 33
) -> LagrangianPath:
    """Path of planes u(t) X* for a continuous family of unitaries."""
    ts = np.linspace(0.0, 1.0, samples)
    frames = tuple(frame_from_unitary(fn(t)) for t in ts)
    return LagrangianPath(tuple(ts), frames, lambda t: frame_from_unitary(fn(t)))


def rotation_path(
    n: int, alpha_start: float, alpha_end: float, samples: int = 33
) -> LagrangianPath:
    """Single-phase sweep u(t) = diag(e^{i alpha(t)}, 1, ..., 1).

    Starting plane X* for alpha_start = 0; a loop iff the sweep is a
    multiple of pi, with winding (alpha_end - alpha_start) / pi.
    """
    def u(t: float) -> np.ndarray:
        alpha = alpha_start + (alpha_end - alpha_start) * t
        d = np.ones(n, dtype=complex)
        d[0] = np.exp(1j * alpha)
        return np.diag(d)

    return path_from_unitary_family(u, samples)


def unitary_log_principal(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors and principal phases of a unitary matrix (Schur-based)."""
    T, Z = scipy.linalg.schur(np.asarray(v, dtype=complex), output="complex")
    phases = np.angle(np.diag(T))
    return Z, phases


def path_joining(
    ella: LagrangianFrame, ellb: LagrangianFrame, samples: int = 33
) -> LagrangianPath:
    """A geodesic-style path from ella to ellb through the unitary picture."""
    ua = frame_unitary(ella)
    ub = frame_unitary(ellb)
    Z, phases = unitary_log_principal(ua.conj().T @ ub)

    def u(t: float) -> np.ndarray:
        return ua @ (Z * np.exp(1j * t * phases)) @ Z.conj().T

    path = path_from_unitary_family(u, samples)
    if not same_plane(path.end(), ellb):
        raise BadInput("endpoint mismatch in joining path construction")
    return path


def symplectic_path_from_algebra(
    Z: np.ndarray, start: np.ndarray | None = None, samples: int = 33
) -> SymplecticPath:
    """The path t -> start . exp(tZ) for Z in the symplectic Lie algebra."""
    Z = np.asarray(Z, dtype=float)
    n = Z.shape[0] // 2
    M = omega_matrix(n)
    if np.abs(M @ Z + Z.T @ M).max() > 1e-10 * max(1.0, float(np.abs(Z).max())):
        raise BadInput("generator is not in the symplectic Lie algebra")
    s0 = np.eye(2 * n) if start is None else np.asarray(start, dtype=float)

    def S(t: float) -> np.ndarray:
        return s0 @ scipy.linalg.expm(t * Z)

    ts = np.linspace(0.0, 1.0, samples)
    return SymplecticPath(tuple(ts), tuple(S(t) for t in ts), S)
