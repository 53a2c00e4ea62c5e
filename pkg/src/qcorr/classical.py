"""Shannon entropies of finite joint distributions (natural log, nats)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import PROB_TOL, ValidationError


def _check_prob(p: np.ndarray, tol: float, what: str) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.size == 0:
        raise ValidationError(f"{what} is empty")
    if np.any(p < -tol):
        raise ValidationError(f"{what} has a negative entry {p.min():.3e}")
    if abs(p.sum() - 1.0) > tol:
        raise ValidationError(f"{what} sums to {p.sum():.12g}, expected 1")
    return np.clip(p, 0.0, None)


def xlogx(p: np.ndarray) -> np.ndarray:
    """Elementwise ``p ln p`` with the convention ``0 ln 0 = 0``."""
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    pos = p > 0
    out[pos] = p[pos] * np.log(p[pos])
    return out


def shannon_entropy(p, tol: float = PROB_TOL) -> float:
    p = _check_prob(p, tol, "probability vector")
    h = -float(xlogx(p).sum())
    return max(h, 0.0)


@dataclass(frozen=True)
class JointEntropies:
    S_X: float
    S_Y: float
    S_XY: float
    I: float
    S_X_given_Y: float
    S_Y_given_X: float


def joint_entropies(r, tol: float = PROB_TOL) -> JointEntropies:
    """Marginal, joint and conditional entropies of a joint distribution ``r[i, j]``.

    Rows index X, columns index Y.
    """
    r = _check_prob(np.atleast_2d(r), tol, "joint distribution")
    s_x = shannon_entropy(r.sum(axis=1), tol)
    s_y = shannon_entropy(r.sum(axis=0), tol)
    s_xy = shannon_entropy(r.ravel(), tol)
    return JointEntropies(
        S_X=s_x,
        S_Y=s_y,
        S_XY=s_xy,
        I=s_x + s_y - s_xy,
        S_X_given_Y=s_xy - s_y,
        S_Y_given_X=s_xy - s_x,
    )


def channel_from_joint(r, tol: float = PROB_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Split ``r_ij = T_ij q_j`` into a column-stochastic channel ``T`` and input ``q``."""
    r = _check_prob(np.atleast_2d(r), tol, "joint distribution")
    q = r.sum(axis=0)
    for j, qj in enumerate(q):
        if qj <= 0:
            raise ValidationError(f"column {j} has zero marginal probability; channel column undefined")
    return r / q, q
