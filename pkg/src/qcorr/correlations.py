"""Entropic correlation measures of bipartite states (natural log, nats)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classical import xlogx
from .linalg import (
    PSD_TOL,
    DomainError,
    ValidationError,
    bipartite_dims,
    hermitian_eig,
    partial_trace,
    partial_transpose,
    validate_density,
)

SUPP_TOL = 1e-10
EQ_BAND = 1e-9
MARG_TOL = 1e-9
NPT_MARGIN = -1e-9

SEP, PPT_ENT, NPT = "SEP", "PPT_ENT", "NPT"
A_STRONGER, B_STRONGER, EQUAL = "A_stronger", "B_stronger", "equal"


def von_neumann_entropy(rho: np.ndarray, psd_tol: float = PSD_TOL) -> float:
    """``-Tr rho ln rho``; eigenvalues in ``[-psd_tol, 0)`` count as zero."""
    w = validate_density(rho, psd_tol=psd_tol)
    return max(-float(xlogx(np.clip(w, 0.0, None)).sum()), 0.0)


def relative_entropy(theta: np.ndarray, omega: np.ndarray, supp_tol: float = SUPP_TOL) -> float:
    """Umegaki relative entropy ``Tr theta (ln theta - ln omega)``; ``inf`` off-support."""
    theta = np.asarray(theta)
    omega = np.asarray(omega)
    if theta.shape != omega.shape:
        raise ValidationError(f"dimension mismatch: {theta.shape} vs {omega.shape}")
    validate_density(theta)
    validate_density(omega)
    wt, vt = hermitian_eig(theta)
    wo, vo = hermitian_eig(omega)
    keep = wt > supp_tol
    wt, vt = wt[keep], vt[:, keep]
    supp = wo > supp_tol
    # weight of theta's eigenvectors outside supp(omega)
    outside = np.abs(vo[:, ~supp].conj().T @ vt) ** 2
    if outside.size and outside.sum(axis=0).max() > supp_tol:
        return float("inf")
    overlap = np.abs(vo[:, supp].conj().T @ vt) ** 2
    cross = float(np.sum(wt * (np.log(wo[supp]) @ overlap)))
    return max(float(np.sum(wt * np.log(wt))) - cross, 0.0)


def marginals(theta: np.ndarray, dims: tuple[int, int] | None = None) -> tuple[np.ndarray, np.ndarray]:
    return partial_trace(theta, "K", dims), partial_trace(theta, "H", dims)


def _entropies(theta, dims):
    rho, sigma = marginals(theta, dims)
    return von_neumann_entropy(theta), von_neumann_entropy(rho), von_neumann_entropy(sigma)


def mutual_entropy(theta: np.ndarray, dims: tuple[int, int] | None = None) -> float:
    s_t, s_r, s_s = _entropies(theta, dims)
    return s_r + s_s - s_t


def conditional_entropy(theta: np.ndarray, conditioned_on: str = "H", dims: tuple[int, int] | None = None) -> float:
    """``S(theta) - S(marginal on conditioned_on)``; negative for some entangled states."""
    rho, sigma = marginals(theta, dims)
    if conditioned_on == "H":
        return von_neumann_entropy(theta) - von_neumann_entropy(rho)
    if conditioned_on == "K":
        return von_neumann_entropy(theta) - von_neumann_entropy(sigma)
    raise ValueError(f"conditioned_on must be 'H' or 'K', got {conditioned_on!r}")


def d_correlation(theta: np.ndarray, dims: tuple[int, int] | None = None) -> float:
    """``(S(rho) + S(sigma)) / 2 - S(theta)``."""
    s_t, s_r, s_s = _entropies(theta, dims)
    return 0.5 * (s_r + s_s) - s_t


def ppt_margin(theta: np.ndarray, dims: tuple[int, int] | None = None) -> float:
    """Minimum eigenvalue of the partial transpose."""
    pt = partial_transpose(theta, "K", dims)
    return float(hermitian_eig(pt)[0][0])


def is_ppt(theta: np.ndarray, dims: tuple[int, int] | None = None, tol: float = PSD_TOL) -> tuple[bool, float]:
    margin = ppt_margin(theta, dims)
    return margin >= -tol, margin


@dataclass(frozen=True)
class CorrelationReport:
    S_theta: float
    S_rho: float
    S_sigma: float
    I: float
    S_cond_K_given_H: float
    S_cond_H_given_K: float
    D: float
    ppt_margin: float
    ppt: bool


def correlation_report(theta: np.ndarray, dims: tuple[int, int] | None = None, psd_tol: float = PSD_TOL) -> CorrelationReport:
    theta = np.asarray(theta)
    dims = bipartite_dims(theta, dims)
    s_t, s_r, s_s = _entropies(theta, dims)
    margin = ppt_margin(theta, dims)
    return CorrelationReport(
        S_theta=s_t,
        S_rho=s_r,
        S_sigma=s_s,
        I=s_r + s_s - s_t,
        S_cond_K_given_H=s_t - s_r,
        S_cond_H_given_K=s_t - s_s,
        D=0.5 * (s_r + s_s) - s_t,
        ppt_margin=margin,
        ppt=margin >= -psd_tol,
    )


def _xlog(x: float, scale: float) -> float:
    return 0.0 if x == 0 else x * np.log(x / scale)


def analytic_d(family: str, param: float) -> float:
    """Closed-form D-correlation of the two-qutrit families.

    ``family="horodecki3"``: mixture ``2/7 psi+ + alpha/7 Pi_1/3 + (5-alpha)/7 Pi_2/3``,
    ``alpha`` in ``[0, 5]``. ``family="bell_eps"``: ``epsilon > 0``.
    """
    if family == "horodecki3":
        alpha = float(param)
        if not 0.0 <= alpha <= 5.0:
            raise DomainError(f"alpha = {alpha} outside [0, 5]")
        return (
            np.log(3)
            + (2 / 7) * np.log(2 / 7)
            + _xlog(alpha, 21) / 7
            + _xlog(5 - alpha, 21) / 7
        )
    if family == "bell_eps":
        eps = float(param)
        if not eps > 0:
            raise DomainError(f"epsilon must be positive, got {eps}")
        lam = 1 + eps + 1 / eps
        return (np.log(1 / lam) + (1 / eps) * np.log(1 / (eps * lam)) + eps * np.log(eps / lam) + np.log(3)) / lam
    raise DomainError(f"unknown family {family!r}")


def classify_family(family: str, d: int, param: float, eq_tol: float = EQ_BAND) -> str:
    """Label from the published thresholds, never from numerics.

    ``horodecki``: SEP on ``[d-1, (d-1)(d-2)+1]``, PPT_ENT on the rest of
    ``[1, (d-1)^2]``, NPT elsewhere in ``[0, (d-1)^2 + 1]``.
    ``bell_eps`` (``d = 3``): SEP at ``epsilon = 1``, PPT_ENT otherwise.
    """
    x = float(param)
    if family in ("horodecki", "horodecki_d", "horodecki3"):
        if d < 3:
            raise DomainError("the family needs d >= 3")
        top = (d - 1) ** 2
        if not 0.0 <= x <= top + 1:
            raise DomainError(f"alpha = {x} outside [0, {top + 1}] for d={d}")
        if d - 1 <= x <= (d - 1) * (d - 2) + 1:
            return SEP
        if 1 <= x <= top:
            return PPT_ENT
        return NPT
    if family in ("bell_eps", "bell-eps"):
        if d != 3:
            raise DomainError("the epsilon family is defined for d = 3 only")
        if not x > 0:
            raise DomainError(f"epsilon must be positive, got {x}")
        return SEP if abs(x - 1.0) <= eq_tol else PPT_ENT
    raise DomainError(f"unknown family {family!r}")


def compare_d(
    theta_a: np.ndarray,
    theta_b: np.ndarray,
    dims: tuple[int, int] | None = None,
    marg_tol: float = MARG_TOL,
    eq_band: float = EQ_BAND,
) -> tuple[str, float, float]:
    """Order two states with equal marginals by D-correlation.

    Returns ``(ordering, D_a, D_b)`` with ordering one of ``"A_stronger"``,
    ``"B_stronger"``, ``"equal"``.
    """
    theta_a = np.asarray(theta_a)
    theta_b = np.asarray(theta_b)
    if theta_a.shape != theta_b.shape:
        raise ValidationError(f"dimension mismatch: {theta_a.shape} vs {theta_b.shape}")
    dims = bipartite_dims(theta_a, dims)
    dev = max(
        np.abs(partial_trace(theta_a, side, dims) - partial_trace(theta_b, side, dims)).max()
        for side in ("K", "H")
    )
    if dev > marg_tol:
        raise ValidationError(f"marginals differ: max deviation {dev:.3e} > {marg_tol:.1e}")
    d_a, d_b = d_correlation(theta_a, dims), d_correlation(theta_b, dims)
    if abs(d_a - d_b) <= eq_band:
        return EQUAL, d_a, d_b
    return (A_STRONGER if d_a > d_b else B_STRONGER), d_a, d_b
