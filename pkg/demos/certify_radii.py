"""
Certifying radii numerically
============================

Each closed-form radius is compared with a brute-force search: the largest
``r`` for which the image of ``|z| = r`` under the extremal ``zf'/f`` stays
inside the target region. Sharp radii additionally show the extremal
function touching the boundary at the expected point.
"""

from petalstar import radii
from petalstar.extremal import log_derivative, sharpness_witness
from petalstar.verify import certify, estimate_k0_radius, inclusion_suite

for res in (radii.named_class_radius("lemniscate"), radii.radius_Sn(2),
            radii.k_st_radius(1.0), radii.radius_janowski(1, 1.0, 0.5)):
    rep = certify(res)
    print(f"{rep.claim:<40} claimed {rep.claimed_value:.6f}  oracle {rep.oracle_value:.6f}  "
          f"passed {rep.passed}")

# The touch point of a sharp radius.
wit = sharpness_witness(radii.named_class_radius("rl"))
print(f"\nRL witness at z = {wit.z_star:.6f}: zf'/f = {complex(log_derivative(wit.f, wit.z_star)):.9f}, "
      f"expected {wit.expected_w:.9f}")

# The value stated for the class F disagrees with the oracle, which lands on S_1.
rep = certify(radii.radius_F())
print(f"\nF: stated {rep.claimed_value:.6f}, oracle {rep.oracle_value:.6f}, "
      f"S_1 radius {radii.radius_Sn(1).value:.6f}")

# Inclusion relations of the domain itself.
print()
for rep in inclusion_suite():
    print(f"{rep.claim:<28} passed {rep.passed}  ({rep.note}; value {rep.oracle_value:.3g})")

k0 = estimate_k0_radius()
print(f"\nconvexity radius of f0, numerical estimate: {float(k0):.6f} ({k0.note})")
