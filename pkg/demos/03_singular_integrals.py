"""
Endpoint-singular integrals and the profile constants
=====================================================

Every profile is the inverse of an integral whose integrand blows up like
``(rho - a)^(-p)`` with ``p = (2m-1)/(2m)`` at a turning point.  A power
substitution removes the singularity before Gauss-Kronrod; double
exponential quadrature is an independent cross check.
"""
# %%
from minkrot import (NormSpace, constantH_d1, integrate_endpoint_singular, minimal_d1, nodoid_d3,
                     tanh_sinh, unduloid_d2)
from minkrot.integrals import constantH_integrand

# %%
# The minimal (catenoid) half height has a closed form via the beta function.
from math import gamma

for m in (2, 3):
    s = NormSpace(m)
    a, b = (m - 1) / m, 1 / (2 * m)
    exact = gamma(a) * gamma(b) / gamma(a + b) / (2 * m)
    r = minimal_d1(s)
    print(f"m={m}: d1 = {r.value:.15f}  closed form {exact:.15f}  est. error {r.error_estimate:.1e}")

# %%
# The nodoid constants for three parameter sets.  Their difference is the
# vertical drift per half period, so the curve does not close.
for m, c1 in ((2, 2.0), (3, 2.0), (2, 6.0)):
    s = NormSpace(m)
    d1, d3 = constantH_d1(s, c1).value, nodoid_d3(s, c1).value
    print(f"m={m} c1={c1}: d1={d1:.5f} d3={d3:.5f} gap={abs(d1 - d3):.5f}")

# %%
# Two independent quadratures of the unduloid half period.
s = NormSpace(3)
f = constantH_integrand(s, -1, 0.1)
lo, hi = f.domain
print("substitution + GK:", integrate_endpoint_singular(f, lo, hi).value)
print("tanh-sinh:        ", tanh_sinh(f, lo, hi).value)
print("unduloid_d2:      ", unduloid_d2(s, 0.1).value)

# %%
# As the two turning points merge (c3 -> 1/4) the half period grows like
# a negative power of their separation instead of shrinking.
s = NormSpace(2)
for e in (1e-2, 1e-4, 1e-6):
    print(f"c3 = 1/4 - {e:g}: d2 = {unduloid_d2(s, 0.25 - e).value:.4f}")

# %%
# Observation only: d1 + d3 equals b4 - b1 = 1 to rounding for every case
# tried here.  No proof is offered.
for m in (2, 3, 4):
    s = NormSpace(m)
    devs = [constantH_d1(s, c1).value + nodoid_d3(s, c1).value - 1 for c1 in (1.2, 2.0, 3.0, 6.0, 10.0)]
    print(f"m={m}: max |d1 + d3 - 1| = {max(map(abs, devs)):.1e}")
