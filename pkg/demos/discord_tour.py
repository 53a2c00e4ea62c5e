"""
Quantum discord by multi-start search
=====================================

Classical correlation is the best mutual information that a rank-1
projective measurement on one side leaves behind. Discord is what
remains of the mutual entropy. The search is a lower bound on the
supremum, so the discord printed here is an upper bound.
"""

import numpy as np

from qcorr import OptimizerConfig, classical_correlation, discord, max_entangled, mutual_entropy, symmetric_discord
from qcorr.states import bell_family_eps

cfg = OptimizerConfig(restarts=8, seed=42)

# Bell pair: all of its ln 2 of discord is entanglement
c, basis = classical_correlation(max_entangled(2), "H", cfg)
print(f"Bell pair: I = {mutual_entropy(max_entangled(2)):.6f}, C = {c:.6f}, D = {discord(max_entangled(2), 'H', cfg):.6f}")

# classical on H, but the K-side states |0> and |+> do not commute
ket = np.array([1, 1]) / np.sqrt(2)
plus = np.outer(ket, ket)
cq = 0.5 * np.kron(np.diag([1.0, 0.0]), np.diag([1.0, 0.0])) + 0.5 * np.kron(np.diag([0.0, 1.0]), plus)
print(f"classical-quantum state: D_H = {discord(cq, 'H', cfg, (2, 2)):.2e}, D_K = {discord(cq, 'K', cfg, (2, 2)):.4f}")

# separable yet quantum-correlated, symmetric in eps <-> 1/eps
print(f"\n{'eps':>6} {'D_sym':>9}")
for eps in (0.2, 0.5, 1.0, 2.0, 5.0):
    print(f"{eps:6.1f} {symmetric_discord(bell_family_eps(eps), cfg):9.5f}")
