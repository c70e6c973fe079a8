"""
The normed space and its Birkhoff-Gauss map
===========================================

The unit ball of the space is ``(x1^2 + x2^2)^m + x3^(2m) <= 1``.  This
script evaluates the norm, shows how a tangent plane of a surface of
revolution picks out a unit "normal" that is Birkhoff orthogonal to it, and
checks the closed form against a Newton solve.
"""
# %%
# The norm is rotationally symmetric about the x3 axis and flatter than the
# Euclidean ball near the poles and the equator.
import numpy as np

from minkrot import NormSpace, birkhoff_gauss, is_birkhoff_orthogonal, minkowski_norm, numeric_birkhoff_gauss

space = NormSpace(2)
for p in ([1, 0, 0], [0, 0, 1], [1, 1, 1], [0.6, 0.0, 0.8]):
    print(f"||{p}|| = {minkowski_norm(space, p):.6f}   (euclidean {np.linalg.norm(p):.6f})")

# %%
# A rotational surface ``(alpha cos v, alpha sin v, beta)`` has tangents
# ``f_u`` and ``f_v``.  For the cone alpha = u + 1, beta = u the map is
# constant along meridians.
ap, bp, v = 1.0, 1.0, 0.0
eta = birkhoff_gauss(space, ap, bp, v)
print("eta on the cone:", eta, " norm", minkowski_norm(space, eta))

f_u = np.array([ap * np.cos(v), ap * np.sin(v), bp])
f_v = np.array([-np.sin(v), np.cos(v), 0.0])
print("Birkhoff orthogonal to the tangent plane:", is_birkhoff_orthogonal(space, eta, f_u, f_v))

# %%
# The Euclidean normal of that plane is (-1, 0, 1)/sqrt(2); the Birkhoff
# normal is the sphere point whose tangent plane is parallel, which differs.
print("euclidean normal:", np.array([-1, 0, 1]) / np.sqrt(2))

# %%
# Newton on ``phi(eta) = 1`` with ``grad phi(eta)`` orthogonal to both
# tangents recovers the same vector without the closed form.
sol = numeric_birkhoff_gauss(space, f_u, f_v)
print(f"Newton: {sol.eta}  |difference| = {np.linalg.norm(sol.eta - eta):.2e}  iterations {sol.iterations}")

# %%
# Larger m flattens the sphere further; the normal tilts toward the axes.
for m in (2, 3, 5, 8):
    print(m, birkhoff_gauss(NormSpace(m), 1.0, 1.0, 0.0))
