"""The derived reports: THH, TAQ, the HZ comparison, and the collision.

Each of these is a short consequence of the series from the other demos.
Run after poincare_quotient.py and additive_basis.py; nothing here is
slower than a blink.
"""

from versalp import (
    cotangent_series,
    homotopy_series,
    hz_quotient_comparison,
    structure_map_collision,
    taq_dimensions,
    thh_homology_series,
    verification_battery,
)

# Topological Hochschild homology tensors the homology with a second free
# algebra on a degree-2 class. At p = 2 the dimensions open 1, 1, 2, 3, 5,
# a Fibonacci-looking run that is a coincidence of low degrees.
thh = thh_homology_series(2, 10)
print("THH dimensions at p = 2:", thh.coefficients)

# Topological Andre-Quillen homology collapses to a single cell in degree 1,
# and the cotangent complex just shifts the homotopy series up by one.
for p in (2, 3):
    taq = taq_dimensions(p, 8)
    cot = cotangent_series(p, 8)
    print(f"TAQ at p = {p}: {taq.coefficients}")
    print(f"  cotangent: {cot.coefficients}")
    assert cot.coefficients[1:] == homotopy_series(p, 8).homotopy_series.coefficients[:8]

# Killing p on the sphere is not the same as killing it on HZ. The Tor
# computation for the quotient gives the series 1 + t, so the two must part
# ways; this reports the first degree where they do.
for p in (2, 3, 5):
    degree = hz_quotient_comparison(p, 4 * (p - 1))
    print(f"p = {p}: homology departs from the HZ/p quotient at degree {degree}")

# At p = 2 the structure map to unoriented bordism sends a to e_1 and
# Q^3 a to e_1^4. Since a^4 also lands on e_1^4, two distinct degree-4
# basis monomials share an image, so the map has a kernel in degree 4.
witness = structure_map_collision()
first, second = witness.source_monomials
print(f"collision: {first.render()} and {second.render()} both map to {witness.image}")

# The battery re-runs every internal consistency check and prints nothing
# unless asked; here we ask.
print()
print("verification battery at p = 3:")
for verdict in verification_battery(3, 12):
    mark = "ok " if verdict.passed else "FAIL"
    print(f"  {mark} {verdict.name}" + (f"  ({verdict.detail})" if verdict.detail else ""))
