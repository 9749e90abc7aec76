# # The arctan family and its horizontal slices
#
# h_a(z) = arctan(z / a) / a on the tear-drop Omega_a.  Every horizontal
# slice x3 = x is a graph over a line, and its endpoints stay a definite
# distance away from the x3-axis no matter how small a gets.

import numpy as np

from minimal_disks import curvature_Ka, estimate_r0, immerse_Fa, separation, slice_curve
from minimal_disks.family import ACCEPTANCE_A, ACCEPTANCE_X

a = 0.05
print("|K_a|(0) * a^4 =", -curvature_Ka(a, 0j) * a ** 4)

# height identity and the axis
print("F_a(0.3 + 0.05i) =", immerse_Fa(a, 0.3 + 0.05j))
print("F_a(0.25, 0)     =", immerse_Fa(a, 0.25))

# one slice
c = slice_curve(a, 0.125)
print("phase deviation %.4f  bound %.4f" % (c.phase_deviation(), c.phase_bound()))
print("min cos(du) %.4f" % c.graph_cosines().min())
print("projection monotone:", bool(np.all(np.diff(c.projection()) > 0)))

# separation over the whole grid
print("\n   a       x      measured   bound")
for a in ACCEPTANCE_A:
    for x in (0.0, 0.25, 0.5):
        s = separation(a, x)
        print("%6.3f %7.3f  %9.5f  %9.5f" % (a, x, s.measured_separation, s.paper_lower_bound))

r0 = estimate_r0(ACCEPTANCE_A, ACCEPTANCE_X)
print("\nempirical r0 = %.5f, R = min(r0/2, 1/4) = %.5f" % (r0, min(r0 / 2, 0.25)))
