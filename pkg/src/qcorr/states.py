"""Constructors for bipartite state families.

All returned density matrices use the flat index ``i * d_k + a``. The
projectors ``Pi_n`` onto the circulant subspaces have rank ``d``; inside the
parametric families they enter as the normalized states ``Pi_n / d``.
"""

from __future__ import annotations

import numpy as np

from .linalg import PROB_TOL, PSD_TOL, DomainError, ValidationError, eigvalsh, validate_density


def _density(mat: np.ndarray) -> np.ndarray:
    validate_density(mat)
    return mat


def shift(d: int, power: int = 1) -> np.ndarray:
    """Cyclic shift ``S^power e_k = e_{k+power mod d}``."""
    s = np.zeros((d, d), dtype=complex)
    for k in range(d):
        s[(k + power) % d, k] = 1.0
    return s


def pure_from_schmidt(lambdas, d_h: int, d_k: int | None = None) -> np.ndarray:
    """Projector onto ``sum_i lambda_i e_i (x) f_i``."""
    d_k = d_h if d_k is None else d_k
    lam = np.asarray(lambdas, dtype=complex)
    if lam.size > min(d_h, d_k):
        raise ValidationError(f"{lam.size} Schmidt coefficients exceed min(d_h, d_k) = {min(d_h, d_k)}")
    norm = float(np.sum(np.abs(lam) ** 2))
    if abs(norm - 1.0) > PROB_TOL:
        raise ValidationError(f"Schmidt coefficients have squared norm {norm:.12g}, expected 1")
    psi = np.zeros(d_h * d_k, dtype=complex)
    for i, c in enumerate(lam):
        psi[i * d_k + i] = c
    return np.outer(psi, psi.conj())


def separable_mixture(weights, rhos, sigmas) -> np.ndarray:
    """``sum_i w_i rho_i (x) sigma_i``."""
    w = np.asarray(weights, dtype=float)
    if len(rhos) != w.size or len(sigmas) != w.size:
        raise ValidationError("weights, rhos and sigmas must have equal length")
    if np.any(w < 0) or abs(w.sum() - 1.0) > PROB_TOL:
        raise ValidationError("weights must form a probability vector")
    shapes = {(np.shape(r), np.shape(s)) for r, s in zip(rhos, sigmas)}
    if len(shapes) != 1:
        raise ValidationError(f"factor dimension mismatch: {sorted(shapes)}")
    for r in rhos:
        validate_density(r)
    for s in sigmas:
        validate_density(s)
    return sum(wi * np.kron(r, s) for wi, r, s in zip(w, rhos, sigmas))


def max_entangled(d: int) -> np.ndarray:
    """Normalized maximally entangled state ``|psi+><psi+|``, ``psi+ = d^{-1/2} sum_i e_i (x) e_i``."""
    if d < 2:
        raise DomainError("dimension must be at least 2")
    psi = np.zeros(d * d, dtype=complex)
    psi[:: d + 1] = 1.0 / np.sqrt(d)
    return np.outer(psi, psi.conj())


def weyl_unitary(d: int, m: int, n: int) -> np.ndarray:
    """``U_mn e_k = lambda^{m k} e_{k+n}`` with ``lambda = exp(2 pi i / d)``."""
    if not (0 <= m < d and 0 <= n < d):
        raise DomainError(f"Weyl indices ({m}, {n}) out of range for d={d}")
    lam = np.exp(2j * np.pi / d)
    u = np.zeros((d, d), dtype=complex)
    for k in range(d):
        u[(k + n) % d, k] = lam ** (m * k)
    return u


def bell_projector(d: int, m: int, n: int) -> np.ndarray:
    """``P_mn = (1 (x) U_mn) psi+ (1 (x) U_mn)^dagger``."""
    lift = np.kron(np.eye(d), weyl_unitary(d, m, n))
    return lift @ max_entangled(d) @ lift.conj().T


def _check_bell_weights(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ValidationError(f"Bell weights must be a d x d matrix, got shape {p.shape}")
    if np.any(p < 0) or abs(p.sum() - 1.0) > PROB_TOL:
        raise ValidationError("Bell weights must be non-negative and sum to 1")
    return p


def bell_diagonal(p) -> np.ndarray:
    """``sum_mn p_mn P_mn`` (direct Weyl twirl of the maximally entangled state)."""
    p = _check_bell_weights(p)
    d = p.shape[0]
    out = np.zeros((d * d, d * d), dtype=complex)
    for m in range(d):
        for n in range(d):
            if p[m, n] != 0:
                out += p[m, n] * bell_projector(d, m, n)
    return out


def sigma_projector(d: int, n: int) -> np.ndarray:
    """Rank-``d`` projector onto ``span{e_i (x) e_{i+n}}``."""
    if not 0 <= n < d:
        raise DomainError(f"subspace index {n} out of range for d={d}")
    out = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        k = i * d + (i + n) % d
        out[k, k] = 1.0
    return out


def _check_blocks(blocks, d: int | None = None) -> np.ndarray:
    a = np.asarray(blocks, dtype=complex)
    if a.ndim != 3 or a.shape[1] != a.shape[2] or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected d blocks of size d x d, got shape {a.shape}")
    if d is not None and a.shape[0] != d:
        raise ValidationError(f"expected {d} blocks, got {a.shape[0]}")
    return a


def validate_circulant(blocks) -> np.ndarray:
    a = _check_blocks(blocks)
    for alpha, blk in enumerate(a):
        lam_min = eigvalsh(blk)[0]
        if lam_min < -PSD_TOL:
            raise ValidationError(f"block a^({alpha}) is not PSD: minimum eigenvalue {lam_min:.3e}")
    tr = np.trace(a, axis1=1, axis2=2).sum()
    if abs(tr - 1.0) > PROB_TOL:
        raise ValidationError(f"block traces sum to {tr.real:.12g}, expected 1")
    return a


def assemble_circulant(blocks, perm=None) -> np.ndarray:
    """Place block ``alpha`` on the subspace spanned by ``e_i (x) e_{perm(i)+alpha}``.

    ``perm=None`` is the identity (the ordinary circulant decomposition). No
    positivity check, so this also assembles partial transposes.
    """
    a = _check_blocks(blocks)
    d = a.shape[0]
    perm = np.arange(d) if perm is None else np.asarray(perm)
    out = np.zeros((d * d, d * d), dtype=complex)
    idx = np.arange(d)
    for alpha in range(d):
        flat = idx * d + (perm + alpha) % d
        out[np.ix_(flat, flat)] += a[alpha]
    return out


def circulant_from_blocks(blocks) -> np.ndarray:
    """Circulant state ``theta_0 (+) ... (+) theta_{d-1}`` from PSD blocks ``a^(alpha)``."""
    return _density(assemble_circulant(validate_circulant(blocks)))


def reflection_perm(d: int) -> np.ndarray:
    """``pi(0) = 0``, ``pi(i) = d - i``."""
    return (-np.arange(d)) % d


def circulant_pt_blocks(blocks) -> np.ndarray:
    """Blocks of the partially transposed circulant state.

    ``a~^(alpha) = sum_beta a^(alpha+beta) o (Pi S^beta)`` with ``o`` the
    Hadamard product and ``Pi`` the permutation matrix of :func:`reflection_perm`.
    The result lives on the decomposition built from ``e_i (x) e_{pi(i)+alpha}``;
    use ``assemble_circulant(result, reflection_perm(d))``.
    """
    a = validate_circulant(blocks)
    d = a.shape[0]
    pi_mat = np.zeros((d, d))
    pi_mat[reflection_perm(d), np.arange(d)] = 1.0
    out = np.zeros_like(a)
    for alpha in range(d):
        for beta in range(d):
            mask = pi_mat @ shift(d, beta).real
            out[alpha] += a[(alpha + beta) % d] * mask
    return out


def bell_blocks_fourier(p) -> np.ndarray:
    """Circulant blocks of a Bell-diagonal state, ``a^(n) = H diag(p[:, n]) H^*``."""
    p = _check_bell_weights(p)
    d = p.shape[0]
    k = np.arange(d)
    h = np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)
    return np.array([h @ np.diag(p[:, n]) @ h.conj().T for n in range(d)])


def horodecki_weights(d: int, alpha: float) -> np.ndarray:
    """Mixture weights ``(lambda_1, ..., lambda_{d-1}, lambda_d)``; the last one multiplies psi+."""
    if d < 3:
        raise DomainError("the family needs d >= 3")
    top = (d - 1) ** 2 + 1
    if not 0.0 <= alpha <= top:
        raise DomainError(f"alpha = {alpha} outside [0, {top}] for d={d}")
    ell = (d - 1) * (2 * d - 3) + 1
    lam = np.full(d, (d - 1) / ell)
    lam[0] = alpha / ell
    lam[d - 2] = (top - alpha) / ell
    return lam


def horodecki_bell_weights(d: int, alpha: float) -> np.ndarray:
    lam = horodecki_weights(d, alpha)
    p = np.zeros((d, d))
    p[0, 0] = lam[-1]
    for n in range(1, d):
        p[:, n] = lam[n - 1] / d
    return p


def horodecki_general(d: int, alpha: float) -> np.ndarray:
    """``lambda_d psi+ + sum_{i<d} lambda_i Pi_i / d``; ``d = 3`` gives ``2/7, alpha/7, (5-alpha)/7``."""
    lam = horodecki_weights(d, alpha)
    out = lam[-1] * max_entangled(d)
    for i in range(1, d):
        out = out + lam[i - 1] * sigma_projector(d, i) / d
    return out


def horodecki3(alpha: float) -> np.ndarray:
    return horodecki_general(3, alpha)


def bell_eps_bell_weights(eps: float) -> np.ndarray:
    if not eps > 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    big_lambda = 1.0 + eps + 1.0 / eps
    p = np.zeros((3, 3))
    p[0, 0] = 1.0 / big_lambda
    p[:, 1] = eps / (3 * big_lambda)
    p[:, 2] = 1.0 / (3 * eps * big_lambda)
    return p


def bell_family_eps(eps: float) -> np.ndarray:
    """``(psi+ + eps Pi_1/3 + Pi_2/(3 eps)) / (1 + eps + 1/eps)`` on two qutrits."""
    if not eps > 0:
        raise DomainError(f"epsilon must be positive, got {eps}")
    big_lambda = 1.0 + eps + 1.0 / eps
    return (max_entangled(3) + eps * sigma_projector(3, 1) / 3 + sigma_projector(3, 2) / (3 * eps)) / big_lambda
