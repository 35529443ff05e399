"""
Radius constants
================

Tabulates the closed-form radii: named Ma-Minda classes, the order and
k-starlike families, the S_n / CS_n / Janowski families and the ratio classes.
"""

from petalstar import radii

print("Named classes (S*_rho radius)")
for cls in ("lemniscate", "rl", "cardioid", "exponential", "crescent"):
    r = radii.named_class_radius(cls)
    print(f"  {cls:<12} {r.value:.6f}")
for alpha in (0.0, 0.5, 1.0):
    print(f"  booth({alpha:.1f})   {radii.named_class_radius('booth', alpha).value:.6f}")

print("\nOrder families for S*_rho")
for alpha in (0.0, 0.2, 0.5, 0.8):
    r = radii.starlike_order_radius(alpha)
    tag = "whole disk" if r.whole_disk else "sharp"
    print(f"  S*_alpha  alpha={alpha:.1f}  {r.value:.6f}  ({tag})")
for k in (0.5, 1.0, 2.0):
    print(f"  k-ST      k={k:.1f}      {radii.k_st_radius(k).value:.6f}")

# The convexity radius comes from a root-finding problem rather than a formula.
conv = radii.convex_order_radius(0.0)
print(f"  K_0       root of the convexity equation {conv.value:.8f} (not sharp)")

print("\nS_n, CS_n and ratio classes")
for n in (1, 2, 3):
    row = [radii.radius_Sn(n).value, radii.radius_CSn(n, 0.0).value,
           radii.ratio_class_radius("f1", n).value, radii.ratio_class_radius("f2", n).value]
    print(f"  n={n}  " + "  ".join(f"{v:.6f}" for v in row))

print("\nJanowski S*_n[C, D]")
for n, C, D in ((1, 1.0, -1.0), (1, 0.5, -0.5), (1, 1.0, 0.0), (1, 1.0, 0.5), (2, 1.0, 0.3)):
    print(f"  n={n} C={C:+.1f} D={D:+.1f}  {radii.radius_janowski(n, C, D).value:.6f}")
