"""
Minimal, constant-K and constant-H profile curves
=================================================

Builds the catenoid, the sphere, the constant-K cases and the
constant-H cases, then checks the defining curvature along each one and
the smoothness of the gluing at the fold points.
"""
# %%
import numpy as np

from minkrot import (NormSpace, build_constantH_curve, build_constantK_curve, build_minimal_catenoid,
                     classify_constantK, ode_residual, sphere_identity_check, verify_c2_junction)

space = NormSpace(2)

# %%
# The catenoid: two monotone branches glued at the neck alpha = c2.
cat = build_minimal_catenoid(space, c2=1.0)
u = np.linspace(*cat.u_domain, 9)[1:-1]
print("catenoid alpha:", np.round(cat.alpha(u), 4))
print("max |H|:", np.max(np.abs(cat.curvature(cat.samples(500)).H)))
rep = verify_c2_junction(cat, cat.center, 3.0)
print("neck limits:", rep.limits, "expected 3.0, passed:", rep.passed)

# %%
# The Minkowski sphere is the constant-K case with c1 = 0.
sphere = build_constantK_curve(space, 1, 0.0)
print("sphere identity deviation:", sphere_identity_check(space, sphere))

# %%
# The sign of K and the constant c1 select one of six shapes.
for K, c1 in ((1, 0.5), (1, -0.5), (-1, 0.5), (-1, 1.0), (-1, 1.5)):
    curve = build_constantK_curve(space, K, c1)
    err = np.max(np.abs(curve.curvature(curve.samples(500)).K - K))
    print(f"K={K:+d} c1={c1:+.1f}: {classify_constantK(K, c1).tag.name:<9} "
          f"|K - target| {err:.1e}  residual {ode_residual(space, curve, 'K'):.1e}")

# %%
# Constant mean curvature: the case H = +1 and two H = -1 cases.
for H, c in ((1, 2.0), (-1, 0.0), (-1, -0.5)):
    curve = build_constantH_curve(space, H, c)
    err = np.max(np.abs(curve.curvature(curve.samples(500)).H - H))
    print(f"H={H:+d} c={c:+.1f}: {curve.tag.name:<8} |H - target| {err:.1e}")
