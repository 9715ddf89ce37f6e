"""Integrality of the periods of R.

The 2-form R is not only closed: its integrals over closed 2-cycles in
the loop group are integers (the bundle curvature 2 pi i R then has
periods in 2 pi i Z, which is what it takes for R to be the curvature of
a C^x bundle).  A concrete 2-sphere of based loops in SU(2):

    g_{u,phi}(theta) = exp(theta * i nu(u, phi) . sigma),
    nu(u, phi) = (sin u cos phi, sin u sin phi, cos u)

The quadrature below converges to the integer -2; reversing the
orientation of the sphere flips the sign, and collapsing the family to
constant loops kills the period entirely.
"""

from centrex import SphereFamily, sphere_period

print("grid (u x phi)   period            distance to -2")
for grid in (8, 16, 32, 64):
    period = sphere_period(SphereFamily(grid, grid, 64))
    print("   %3d x %-3d     %.12f   %.2e" % (grid, grid, period,
                                              abs(period + 2.0)))

reversed_family = SphereFamily(32, 32, 64, orientation=-1)
print("\norientation reversed: period = %.9f" % sphere_period(reversed_family))

degenerate = SphereFamily(16, 16, 64, degenerate=True)
print("degenerate constant family: period = %.1f" % sphere_period(degenerate))

print("\nthe integer is a property of the cycle, not of the mesh: both")
print("refinements of the quadrature land on the same value, which is the")
print("convergence certificate the `period` command records in its report")
