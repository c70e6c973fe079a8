"""
Gaussian and mean curvature of rotational surfaces
==================================================

Closed-form curvatures for a profile in graph form ``alpha(u)`` and in
general form ``(alpha(t), beta(t))``, a flatness check for cones, and a
comparison with the classical values in the Euclidean oracle mode.
"""
# %%
import numpy as np

from minkrot import NormSpace, ProfilePoint, curvatures_general, curvatures_graph, is_flat

space = NormSpace(2)

# %%
# A cone is flat: K vanishes identically while H decays like 1/alpha.
u = np.linspace(0.0, 3.0, 7)
cp = curvatures_graph(space, u + 1, np.ones_like(u), np.zeros_like(u))
print("cone K:", cp.K)
print("cone H * alpha:", cp.H * (u + 1))
print("flat:", is_flat(space, lambda x: (x + 1, np.ones_like(x), np.zeros_like(x)), u))

# %%
# A parabola-shaped profile is not flat (u = 0 is a fold, so it is skipped).
u = u[1:]
cp = curvatures_graph(space, 1 + u ** 2, 2 * u, 2 + 0 * u)
print("alpha = 1 + u^2, K:", np.round(cp.K, 4))

# %%
# The same cone written with a general parameter gives the same numbers;
# the graph form is the special case beta = u.
pp = ProfilePoint(alpha=2.0, alpha_prime=0.5, alpha_second=0.0, beta_prime=0.5, beta_second=0.0)
print("general form:", curvatures_general(space, pp))
print("graph form:  ", curvatures_graph(space, 2.0, 1.0, 0.0))

# %%
# With m = 1 (Euclidean, only in oracle mode) the classical facts return:
# the catenoid cosh u is minimal and the unit circle has K = 1.
euclid = NormSpace(1, oracle_mode=True)
u = np.linspace(0.2, 2.0, 5)
print("catenoid H:", curvatures_graph(euclid, np.cosh(u), np.sinh(u), np.cosh(u)).H)
t = np.linspace(-0.8, 0.8, 4)
a = np.sqrt(1 - t ** 2)
print("circle K:", curvatures_graph(euclid, a, -t / a, -1 / a ** 3).K)
