"""State <-> entanglement map <-> conditional probability operator.

A map ``phi: B(K) -> B(H)`` is stored by its values on matrix units,
``blocks[i, j] = phi(e_ij)``. For a state ``theta`` the map is
``phi(b) = Tr_K[(1 (x) b) theta]``, which gives
``phi(e_ij)[a, c] = theta[(a, j), (c, i)]``; the inverse assembly is
``theta = sum_ij phi(e_ji) (x) e_ij``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    PROB_TOL,
    PSD_TOL,
    ValidationError,
    bipartite_dims,
    inv_sqrtm,
    is_psd,
    partial_trace,
    partial_transpose,
    sqrtm_psd,
    validate_density,
)

FAITHFUL_TOL = 1e-8


@dataclass(frozen=True)
class EntanglementMap:
    """Linear map ``B(K) -> B(H)`` given by ``blocks[i, j] = phi(e_ij)``, shape ``(d_k, d_k, d_h, d_h)``."""

    blocks: np.ndarray

    @property
    def d_k(self) -> int:
        return self.blocks.shape[0]

    @property
    def d_h(self) -> int:
        return self.blocks.shape[2]

    def apply(self, b: np.ndarray) -> np.ndarray:
        b = np.asarray(b)
        if b.shape != (self.d_k, self.d_k):
            raise ValidationError(f"argument must be {self.d_k}x{self.d_k}, got {b.shape}")
        return np.einsum("ij,ijac->ac", b, self.blocks)

    def dual_apply(self, a: np.ndarray) -> np.ndarray:
        """``phi*(a)`` defined by ``Tr_K[phi*(a) b] = Tr_H[a phi(b)]``."""
        a = np.asarray(a)
        if a.shape != (self.d_h, self.d_h):
            raise ValidationError(f"argument must be {self.d_h}x{self.d_h}, got {a.shape}")
        # phi*(a)[j, i] = Tr(a phi(e_ij))
        return np.einsum("ca,ijac->ji", a, self.blocks)

    def is_normalized(self, tol: float = PROB_TOL) -> bool:
        return abs(np.trace(self.apply(np.eye(self.d_k))) - 1.0) <= tol


def dual_apply(phi: EntanglementMap, a: np.ndarray) -> np.ndarray:
    return phi.dual_apply(a)


def map_from_state(theta: np.ndarray, dims: tuple[int, int] | None = None) -> EntanglementMap:
    theta = np.asarray(theta, dtype=complex)
    d_h, d_k = bipartite_dims(theta, dims)
    t = theta.reshape(d_h, d_k, d_h, d_k)
    # blocks[i, j, a, c] = theta[(a, j), (c, i)]
    return EntanglementMap(np.ascontiguousarray(t.transpose(3, 1, 0, 2)))


def state_from_map(phi: EntanglementMap) -> np.ndarray:
    """Choi-type operator ``sum_ij phi(e_ji) (x) e_ij``; not validated, so non-CCP maps give non-states."""
    d_h, d_k = phi.d_h, phi.d_k
    t = phi.blocks.transpose(2, 1, 3, 0)
    return t.reshape(d_h * d_k, d_h * d_k)


def is_ccp(phi: EntanglementMap, tol: float = PSD_TOL) -> bool:
    return is_psd(state_from_map(phi), tol)[0]


def is_cp(phi: EntanglementMap, tol: float = PSD_TOL) -> bool:
    """Choi matrix ``sum_ij phi(e_ij) (x) e_ij`` is PSD."""
    choi = partial_transpose(state_from_map(phi), "K", (phi.d_h, phi.d_k))
    return is_psd(choi, tol)[0]


def qcpo_from_state(
    theta: np.ndarray,
    dims: tuple[int, int] | None = None,
    faithful_tol: float = FAITHFUL_TOL,
) -> np.ndarray:
    """``pi = (rho^{-1/2} (x) 1) theta (rho^{-1/2} (x) 1)`` with ``rho = Tr_K theta``."""
    theta = np.asarray(theta, dtype=complex)
    d_h, d_k = bipartite_dims(theta, dims)
    validate_density(theta)
    lift = np.kron(inv_sqrtm(partial_trace(theta, "K", (d_h, d_k)), faithful_tol), np.eye(d_k))
    return lift @ theta @ lift


def check_qcpo(pi: np.ndarray, dims: tuple[int, int] | None = None, tol: float = 1e-9) -> None:
    d_h, d_k = bipartite_dims(pi, dims)
    ok, lam_min = is_psd(pi, PSD_TOL)
    if not ok:
        raise ValidationError(f"operator is not PSD: minimum eigenvalue {lam_min:.3e}")
    dev = np.abs(partial_trace(pi, "K", (d_h, d_k)) - np.eye(d_h)).max()
    if dev > tol:
        raise ValidationError(f"Tr_K pi deviates from identity by {dev:.3e}")


def state_from_qcpo(
    pi: np.ndarray,
    rho: np.ndarray,
    dims: tuple[int, int] | None = None,
    faithful_tol: float = FAITHFUL_TOL,
) -> np.ndarray:
    """``theta = (rho^{1/2} (x) 1) pi (rho^{1/2} (x) 1)``."""
    pi = np.asarray(pi, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    d_h, d_k = bipartite_dims(pi, dims)
    if rho.shape != (d_h, d_h):
        raise ValidationError(f"marginal must be {d_h}x{d_h}, got {rho.shape}")
    validate_density(rho)
    # faithfulness check only; the inverse itself is not needed
    inv_sqrtm(rho, faithful_tol)
    lift = np.kron(sqrtm_psd(rho), np.eye(d_k))
    return lift @ pi @ lift


def decompose_map(
    phi: EntanglementMap, faithful_tol: float = FAITHFUL_TOL
) -> tuple[EntanglementMap, np.ndarray]:
    """Split ``phi(.) = rho^{1/2} varphi(tau(.)) rho^{1/2}`` with ``rho = phi(1)``.

    Returns the unital map ``varphi(.) = rho^{-1/2} phi(tau(.)) rho^{-1/2}``
    and ``rho``. The Choi matrix of ``varphi`` is the conditional probability
    operator of the state behind ``phi``.
    """
    rho = phi.apply(np.eye(phi.d_k))
    r_inv = inv_sqrtm(rho, faithful_tol)
    # varphi(e_ij) = rho^{-1/2} phi(e_ji) rho^{-1/2}
    swapped = phi.blocks.transpose(1, 0, 2, 3)
    return EntanglementMap(np.einsum("ab,ijbc,cd->ijad", r_inv, swapped, r_inv)), rho


def recompose_map(varphi: EntanglementMap, rho: np.ndarray) -> EntanglementMap:
    """Inverse of :func:`decompose_map`."""
    r_half = sqrtm_psd(rho)
    swapped = varphi.blocks.transpose(1, 0, 2, 3)
    return EntanglementMap(np.einsum("ab,ijbc,cd->ijad", r_half, swapped, r_half))


def choi_of(varphi: EntanglementMap) -> np.ndarray:
    """``sum_kl varphi(e_kl) (x) e_kl``."""
    d_h, d_k = varphi.d_h, varphi.d_k
    return varphi.blocks.transpose(2, 0, 3, 1).reshape(d_h * d_k, d_h * d_k)
