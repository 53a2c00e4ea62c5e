"""
A separable state with stronger D-correlations than an entangled one
====================================================================

Both states below have maximally mixed marginals, so their
D-correlations can be compared directly. The separable member of the
epsilon family beats a PPT-entangled Horodecki state.
"""

from qcorr import bell_family_eps, classify_family, compare_d, horodecki3

separable = bell_family_eps(1.0)
entangled = horodecki3(3.1)

print("epsilon = 1   :", classify_family("bell_eps", 3, 1.0))
print("alpha   = 3.1 :", classify_family("horodecki", 3, 3.1))

# compare_d refuses states whose marginals differ
ordering, d_sep, d_ent = compare_d(separable, entangled)
print(f"\nD(separable) = {d_sep:.4f}")
print(f"D(entangled) = {d_ent:.4f}")
print(f"ordering     = {ordering}")
