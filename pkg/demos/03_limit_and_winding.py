# # The a -> 0 limit
#
# Picking a_k with u_{a_k}(1/2, 0) = 2 pi k keeps the Gauss map anchored, so
# F_{a_k} converges on compact sets away from the axis to the surfaces built
# from -1/z +- 2.  Those limits spiral into the plane x3 = 0.

import numpy as np

from minimal_disks import convergence_report, select_subsequence, winding_count
from minimal_disks.limit import PLUS, spiral_angle_range

for k in (3, 6, 12, 24):
    c = select_subsequence(k)
    print("k=%2d  a_k=%.7f  anchor/2pi=%.12f" % (k, c.a, c.anchor_phase / (2 * np.pi)))

rep = convergence_report([3, 6, 12, 24])
print("\n  k      a_k      sup|F-F0|     sup|v-v0|")
for k, a, dp, dv, _ in rep.entries:
    print("%3d  %.6f  %.3e  %.3e" % (k, a, dp, dv))
print("slopes: position %.3f, v %.3f" % (rep.slope("position"), rep.slope("v")))

# turns of the slice direction between heights t and 2t
for t in (0.2, 0.1, 0.05):
    print("t=%.2f  turns(a=t/10)=%.5f  limit=%.5f  1/(4 pi t)=%.5f"
          % (t, winding_count(t / 10, t, 2 * t), winding_count(None, t, 2 * t),
             1 / (4 * np.pi * t)))

# the polar angle range on the limit sheet doubles as t halves
ranges = [spiral_angle_range(PLUS, t) for t in (0.2, 0.1, 0.05, 0.025)]
print("angle ranges", np.round(ranges, 4), "ratios", np.round(np.array(ranges[1:]) / ranges[:-1], 4))
