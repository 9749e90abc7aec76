# # Classical surfaces through the Weierstrass engine
#
# The helicoid (g = e^{iz}, phi = dz) and the catenoid (g = z, phi = dz/z)
# have closed forms, so they are the first thing to check any immersion
# code against.

import numpy as np

from minimal_disks import PolyPath, immerse, path_independence_residual
from minimal_disks.weierstrass import (catenoid_closed_form, catenoid_data,
                                       helicoid_closed_form, helicoid_data)

hel = helicoid_data()

# F(pi/2, 1) should be (sinh 1, 0, pi/2)
z = np.pi / 2 + 1j
print("helicoid  ", immerse(hel, PolyPath.through(0, z.real, z)))
print("closed form", helicoid_closed_form(z))

# Two paths to the same point give the same answer on a simply connected domain
print("path residual", path_independence_residual(
    hel, PolyPath.through(0, 1, 1 + 1j), PolyPath.through(0, 1 + 1j)))

# The catenoid lives on the punctured plane; a loop around 0 has zero real period
cat = catenoid_data()
loop = PolyPath((*np.exp(2j * np.pi * np.arange(24) / 24), 1))
print("catenoid period", path_independence_residual(cat, loop, PolyPath((1,))))

quarter = PolyPath((*np.exp(0.5j * np.pi * np.arange(16) / 16), 1j))
F = immerse(cat, quarter)
print("catenoid at i", F, "expected", catenoid_closed_form(1j))
print("(F1-1)^2 + F2^2 - cosh^2 F3 =", (F[0] - 1) ** 2 + F[1] ** 2 - np.cosh(F[2]) ** 2)
