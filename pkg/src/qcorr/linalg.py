"""Dense complex-matrix primitives for bipartite operators.

Index convention used throughout the package: the product basis vector
``e_i (x) f_a`` has flat index ``i * d_k + a`` (first factor slow). This is
the ordering produced by :func:`numpy.kron`, and every other module goes
through the helpers here instead of reshaping on its own.
"""

from __future__ import annotations

import numpy as np

HERM_TOL = 1e-10
EIG_TOL = 1e-9
PSD_TOL = 1e-10
PROB_TOL = 1e-9


class ValidationError(ValueError):
    """Input violates a structural invariant (Hermiticity, positivity, trace)."""


class DomainError(ValueError):
    """A family parameter lies outside the range where the family is defined."""


def bipartite_dims(mat: np.ndarray, dims: tuple[int, int] | None = None) -> tuple[int, int]:
    """Return ``(d_h, d_k)`` for a square operator, defaulting to equal factors."""
    n = mat.shape[0]
    if mat.ndim != 2 or mat.shape[1] != n:
        raise ValidationError(f"expected a square matrix, got shape {mat.shape}")
    if dims is None:
        d = int(round(np.sqrt(n)))
        if d * d != n:
            raise ValidationError(f"cannot split dimension {n} into two equal factors; pass dims")
        return d, d
    d_h, d_k = int(dims[0]), int(dims[1])
    if d_h * d_k != n:
        raise ValidationError(f"dims {d_h}x{d_k} do not match matrix size {n}")
    return d_h, d_k


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def basis_op(d: int, i: int, j: int) -> np.ndarray:
    """Matrix unit ``e_ij = |i><j|`` in dimension ``d``."""
    e = np.zeros((d, d), dtype=complex)
    e[i, j] = 1.0
    return e


def partial_trace(theta: np.ndarray, side: str = "K", dims: tuple[int, int] | None = None) -> np.ndarray:
    """Trace out one factor of a bipartite operator.

    ``side="K"`` traces out the second factor and returns the ``d_h x d_h``
    marginal; ``side="H"`` traces out the first factor.
    """
    theta = np.asarray(theta)
    d_h, d_k = bipartite_dims(theta, dims)
    t = theta.reshape(d_h, d_k, d_h, d_k)
    if side == "K":
        return np.einsum("iaja->ij", t)
    if side == "H":
        return np.einsum("iaib->ab", t)
    raise ValueError(f"side must be 'H' or 'K', got {side!r}")


def partial_transpose(theta: np.ndarray, side: str = "K", dims: tuple[int, int] | None = None) -> np.ndarray:
    """Transpose one tensor factor: ``out[(i,a),(j,b)] = theta[(i,b),(j,a)]`` for ``side="K"``."""
    theta = np.asarray(theta)
    d_h, d_k = bipartite_dims(theta, dims)
    t = theta.reshape(d_h, d_k, d_h, d_k)
    if side == "K":
        t = t.transpose(0, 3, 2, 1)
    elif side == "H":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"side must be 'H' or 'K', got {side!r}")
    return t.reshape(d_h * d_k, d_h * d_k)


def check_hermitian(a: np.ndarray, tol: float = HERM_TOL) -> None:
    """Raise :class:`ValidationError` naming the worst entry pair if ``a`` is not Hermitian."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    dev = np.abs(a - a.conj().T)
    if a.size and dev.max() > tol:
        i, j = np.unravel_index(np.argmax(dev), dev.shape)
        raise ValidationError(
            f"matrix is not Hermitian: |A[{i},{j}] - conj(A[{j},{i}])| = {dev[i, j]:.3e} > {tol:.1e}"
        )


def hermitian_eig(a: np.ndarray, tol: float = HERM_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix."""
    a = np.asarray(a)
    check_hermitian(a, tol)
    # symmetrize so roundoff-level skew parts never leak into the spectrum
    h = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(h)
    return w, v


def eigvalsh(a: np.ndarray, tol: float = HERM_TOL) -> np.ndarray:
    a = np.asarray(a)
    check_hermitian(a, tol)
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def is_psd(a: np.ndarray, tol: float = PSD_TOL) -> tuple[bool, float]:
    """Return ``(min_eig >= -tol, min_eig)``."""
    lam_min = float(eigvalsh(a)[0])
    return lam_min >= -tol, lam_min


def hermitian_function(a: np.ndarray, func) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum."""
    w, v = hermitian_eig(a)
    return (v * func(w)) @ v.conj().T


def sqrtm_psd(a: np.ndarray) -> np.ndarray:
    return hermitian_function(a, lambda w: np.sqrt(np.clip(w, 0.0, None)))


def inv_sqrtm(a: np.ndarray, faithful_tol: float) -> np.ndarray:
    """``a^{-1/2}`` for a positive definite matrix; refuses near-singular input."""
    w, v = hermitian_eig(a)
    if w[0] < faithful_tol:
        raise ValidationError(
            f"marginal is not faithful: minimum eigenvalue {w[0]:.3e} < {faithful_tol:.1e}"
        )
    return (v / np.sqrt(w)) @ v.conj().T


def validate_density(
    rho: np.ndarray,
    herm_tol: float = HERM_TOL,
    psd_tol: float = PSD_TOL,
    trace_tol: float = PROB_TOL,
) -> np.ndarray:
    """Check Hermiticity, positivity and unit trace, in that order.

    Returns the spectrum (ascending) so callers can reuse it.
    """
    rho = np.asarray(rho)
    check_hermitian(rho, herm_tol)
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if w[0] < -psd_tol:
        raise ValidationError(f"matrix is not positive semidefinite: minimum eigenvalue {w[0]:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1.0) > trace_tol:
        raise ValidationError(f"trace is {tr.real:.12g}, expected 1")
    return w
