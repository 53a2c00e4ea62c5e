"""Measurement-induced classical correlation and quantum discord.

The supremum over rank-1 projective measurements has no closed form, so it
is estimated by multi-start Nelder-Mead over unitaries ``U = exp(iH)``, where
``H`` is the Hermitian matrix encoded by ``d^2`` real parameters and the
projectors are ``|u_k><u_k|`` for the columns of ``U``. The estimate of
``C`` is a lower bound on the supremum, so the discord is an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize
from scipy.special import xlogy

from .correlations import mutual_entropy, von_neumann_entropy
from .linalg import ValidationError, bipartite_dims, partial_trace, validate_density

P_FLOOR = 1e-12
CLAMP_BAND = 1e-9


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 32
    max_iters: int = 4000
    step_tol: float = 1e-7
    seed: int = 42

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True)
class MeasurementBasis:
    """Rank-1 projective measurement on one side, stored as the orthonormal columns of ``vectors``."""

    side: str
    vectors: np.ndarray

    def __post_init__(self):
        if self.side not in ("H", "K"):
            raise ValueError(f"side must be 'H' or 'K', got {self.side!r}")
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValidationError(f"basis must be a square matrix of column vectors, got {v.shape}")
        if np.abs(v.conj().T @ v - np.eye(v.shape[0])).max() > 1e-10:
            raise ValidationError("basis vectors are not orthonormal")
        object.__setattr__(self, "vectors", v)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def projectors(self) -> list[np.ndarray]:
        return [np.outer(u, u.conj()) for u in self.vectors.T]

    @classmethod
    def computational(cls, side: str, d: int) -> MeasurementBasis:
        return cls(side, np.eye(d, dtype=complex))


def _side_dims(theta, side, dims):
    d_h, d_k = bipartite_dims(theta, dims)
    if side == "H":
        return d_h, d_k
    if side == "K":
        return d_k, d_h
    raise ValueError(f"side must be 'H' or 'K', got {side!r}")


def _as_h_first(theta: np.ndarray, side: str, dims) -> np.ndarray:
    """Tensor ``t[i, a, j, b]`` with the measured factor in slots ``i, j``."""
    d_h, d_k = bipartite_dims(theta, dims)
    t = np.asarray(theta).reshape(d_h, d_k, d_h, d_k)
    return t if side == "H" else t.transpose(1, 0, 3, 2)


def post_measurement(theta: np.ndarray, basis: MeasurementBasis, dims=None, p_floor: float = P_FLOOR):
    """Outcome probabilities and collapsed bipartite states.

    Returns ``(outcomes, dropped_mass)`` where ``outcomes`` is a list of
    ``(p_k, theta_k)``; branches with ``p_k <= p_floor`` are omitted.
    """
    theta = np.asarray(theta, dtype=complex)
    d_meas, _ = _side_dims(theta, basis.side, dims)
    if basis.dim != d_meas:
        raise ValidationError(f"basis dimension {basis.dim} does not match side {basis.side} dimension {d_meas}")
    d_h, d_k = bipartite_dims(theta, dims)
    outcomes, dropped = [], 0.0
    for proj in basis.projectors:
        lift = np.kron(proj, np.eye(d_k)) if basis.side == "H" else np.kron(np.eye(d_h), proj)
        branch = lift @ theta @ lift
        p = float(np.trace(branch).real)
        if p <= p_floor:
            dropped += max(p, 0.0)
            continue
        outcomes.append((p, branch / p))
    return outcomes, dropped


def conditional_entropy_given(theta: np.ndarray, basis: MeasurementBasis, dims=None) -> float:
    """``sum_k p_k S(theta_k)`` over the collapsed states."""
    outcomes, _ = post_measurement(theta, basis, dims)
    return sum(p * von_neumann_entropy(t) for p, t in outcomes)


def _stacked(t: np.ndarray) -> np.ndarray:
    """``t[i, a, j, b]`` rearranged to a stack of ``(i, j)`` matrices indexed by ``(a, b)``."""
    d, dk = t.shape[0], t.shape[1]
    return np.ascontiguousarray(t.transpose(1, 3, 0, 2)).reshape(dk * dk, d, d)


def _conditional_entropy_fast(stack: np.ndarray, vecs: np.ndarray) -> float:
    d = vecs.shape[0]
    dk = int(round(np.sqrt(stack.shape[0])))
    # unnormalized conditional states <u_k| theta |u_k> on the unmeasured side
    cond = (vecs.conj() * (stack @ vecs)).sum(axis=1).T.reshape(d, dk, dk)
    w = np.clip(np.linalg.eigvalsh(cond), 0.0, None)
    p = w.sum(axis=1)
    # sum_k p_k S(cond_k / p_k) = sum_k p_k ln p_k - sum_kj w_kj ln w_kj
    return float(xlogy(p, p).sum() - xlogy(w, w).sum())


@lru_cache(maxsize=None)
def _upper(d: int):
    return np.triu_indices(d, 1)


def unitary_from_params(x: np.ndarray, d: int) -> np.ndarray:
    """``exp(iH)`` with ``H`` built from ``d^2`` reals (diagonal, then real/imag upper entries)."""
    h = np.zeros((d, d), dtype=complex)
    h[np.diag_indices(d)] = x[:d]
    iu = _upper(d)
    m = len(iu[0])
    u = x[d : d + m] + 1j * x[d + m : d + 2 * m]
    h[iu] = u
    h[iu[1], iu[0]] = u.conj()
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def measured_information(theta: np.ndarray, basis: MeasurementBasis, dims=None) -> float:
    """``S(unmeasured marginal) - S(theta | basis)``."""
    unmeasured = partial_trace(theta, basis.side, dims)
    return von_neumann_entropy(unmeasured) - conditional_entropy_given(theta, basis, dims)


def restart_seed(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def classical_correlation(
    theta: np.ndarray,
    side: str = "H",
    cfg: OptimizerConfig | None = None,
    dims=None,
) -> tuple[float, MeasurementBasis]:
    """Best found ``S(unmeasured) - sum_k p_k S(theta_k)`` over rank-1 bases on ``side``.

    Restart ``r`` starts from ``default_rng([cfg.seed, r])``, so a config with
    more restarts explores a superset of starts and never reports less.
    """
    cfg = cfg or OptimizerConfig()
    theta = np.asarray(theta, dtype=complex)
    validate_density(theta)
    d, _ = _side_dims(theta, side, dims)
    stack = _stacked(_as_h_first(theta, side, dims))
    # entropy of the marginal left after tracing out the measured side
    s_other = von_neumann_entropy(partial_trace(theta, side, dims))

    def objective(x):
        return _conditional_entropy_fast(stack, unitary_from_params(x, d))

    best_val, best_x = np.inf, None
    n = d * d
    for r in range(cfg.restarts):
        rng = restart_seed(cfg.seed, r)
        x0 = rng.uniform(-np.pi, np.pi, size=n)
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"maxiter": cfg.max_iters, "xatol": cfg.step_tol, "fatol": cfg.step_tol**2},
        )
        if res.fun < best_val:
            best_val, best_x = res.fun, res.x
    # computational basis is evaluated too; exact for diagonal states
    zero = np.zeros(n)
    if objective(zero) < best_val:
        best_val, best_x = objective(zero), zero
    basis = MeasurementBasis(side, unitary_from_params(best_x, d))
    return s_other - best_val, basis


def discord(
    theta: np.ndarray,
    side: str = "H",
    cfg: OptimizerConfig | None = None,
    dims=None,
    clamp: bool = True,
) -> float:
    """``I(theta) - C_side(theta)``.

    With ``clamp=True`` values in ``[-1e-9, 0)`` are reported as 0; the raw
    estimate is available with ``clamp=False``.
    """
    c, _ = classical_correlation(theta, side, cfg, dims)
    raw = mutual_entropy(theta, dims) - c
    if clamp and -CLAMP_BAND <= raw < 0:
        return 0.0
    return raw


def symmetric_discord(theta: np.ndarray, cfg: OptimizerConfig | None = None, dims=None) -> float:
    return 0.5 * (discord(theta, "H", cfg, dims) + discord(theta, "K", cfg, dims))
