"""
States as entanglement maps
===========================

Every bipartite state is the same data as a map from operators on K
to operators on H. The map factors through a unital completely
positive map and the H-marginal, and its Choi matrix is the quantum
conditional probability operator of the state.
"""

import numpy as np

from qcorr.linalg import partial_trace
from qcorr.maps import choi_of, decompose_map, is_cp, map_from_state, qcpo_from_state, recompose_map
from qcorr.states import horodecki3

rng = np.random.default_rng(1)
theta = horodecki3(0.5)
phi = map_from_state(theta)

# pairing: Tr[a phi(b)] = Tr[(a (x) b) theta]
a = rng.normal(size=(3, 3))
b = rng.normal(size=(3, 3))
print("pairing residual:", abs(np.trace(a @ phi.apply(b)) - np.trace(np.kron(a, b) @ theta)))

# NPT states give maps that are not completely positive
print("phi is CP for alpha = 0.5:", is_cp(phi))
print("phi is CP for alpha = 2.5:", is_cp(map_from_state(horodecki3(2.5))))

varphi, rho = decompose_map(phi)
print("\nvarphi(1) = 1:", np.allclose(varphi.apply(np.eye(3)), np.eye(3)))
print("rho is the H-marginal:", np.allclose(rho, partial_trace(theta, "K")))
print("recomposition residual:", np.abs(recompose_map(varphi, rho).blocks - phi.blocks).max())
print("Choi(varphi) = QCPO:", np.allclose(choi_of(varphi), qcpo_from_state(theta)))
