"""
Periodic constant mean curvature profiles
=========================================

The unduloid is periodic in height.  The nodoid, traced by arc length,
repeats its radius but shifts in height every period, so unlike the
Euclidean nodoid it never closes up.
"""
# %%
import numpy as np

from minkrot import NormSpace, build_nodoid, build_unduloid, curvatures_graph, verify_c2_junction

space = NormSpace(2)

# %%
und = build_unduloid(space, c3=0.1)
b2, b3 = und.fundamental.constants["b2"], und.fundamental.constants["b3"]
print(f"unduloid period {und.period:.6f}, radius between {b2:.6f} and {b3:.6f}")
u = np.linspace(und.start, und.start + 3 * und.period, 13)
print("alpha over three periods:", np.round(und.alpha(u), 5))
print("one period later:       ", np.round(und.alpha(u + und.period), 5))

# %%
# Each cell of the unduloid is evaluated from the same reduced parameter.
tau = np.linspace(0, und.period, 5)
print("cell 0 vs cell 7 identical:", np.array_equal(und.evaluate_cell(0, tau)[0], und.evaluate_cell(7, tau)[0]))

# %%
nod = build_nodoid(space, c1=2.0)
c = nod.constants
print(f"nodoid radii in [{c['b1']}, {c['b4']}], d1={c['d1']:.5f}, d3={c['d3']:.5f}")
print(f"height shift per period {nod.shift:.5f}; closure gap |d1 - d3| = {nod.closure_gap:.5f}")

# %%
# Along the arc-length parameter H = 1 everywhere; written as graphs the
# four arcs carry alternating signs.
print("max |H - 1| along t:", np.max(np.abs(nod.curvature(nod.samples(1000)).H - 1)))
for arc in nod.arcs:
    H = curvatures_graph(space, *arc.jet(arc.samples(50))).H
    print(f"  {arc.name}: graph H = {np.mean(H):+.6f}")

# %%
# The joints where the arcs meet are C2 in the radius-as-function-of-height view.
j = nod.joint(1)
print("G1-G2 joint passes:", verify_c2_junction(j, j.x0, -6.0).passed)
