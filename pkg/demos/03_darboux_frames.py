"""Moving frames and invariants of the catalog ruled surfaces.

The cone has constant conical curvature a/b and vanishing delta, Delta;
the helicoidal surface adds constant (delta0, Delta0).  The distribution
parameter Delta measures non-developability, and the dual conical
curvature packs (gamma, delta, Delta) into one dual number.
"""

from dlgeom import catalog
from dlgeom.ruled import darboux_frame, dual_arclength, dual_curvature_elements

for build in (catalog.cone, catalog.helicoidal):
    spec = build(domain=(0.0, 1.0), samples=5)
    print(f"== {spec.name} (a=0.6, b=0.8) ==")
    frames = darboux_frame(spec)
    print(f"  {'s':>5} {'gamma':>8} {'delta':>8} {'Delta':>8} {'s*':>9} {'R':>7}")
    for f in frames:
        R = dual_curvature_elements(f).R_dual
        print(f"  {f.s:5.2f} {f.gamma:8.4f} {f.delta:8.4f} {f.Delta:8.4f}"
              f" {f.s_star:9.5f} {R.re:7.4f}")
    sbar = dual_arclength(spec, 1.0)
    print(f"  dual arc length to s=1: {sbar.re:.6f} + eps {sbar.du:.6f}")
    f0 = frames[0]
    print(f"  frame at s=0: e={tuple(f0.e)}")
    print(f"                t={tuple(f0.t)}")
    print(f"                g={tuple(f0.g)}")
    el = dual_curvature_elements(f0)
    print(f"  unit Darboux axis (real part): "
          f"({el.darboux_unit.re.x1:.3f}, {el.darboux_unit.re.x2:.3f}, "
          f"{el.darboux_unit.re.x3:.3f})")
    print()

print("developability: Delta == 0 exactly for the cone (flattenable),")
print("Delta == 0.1 for the helicoidal surface (ruled but not developable).")
