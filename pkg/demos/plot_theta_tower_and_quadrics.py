"""
The theta tower and quadrics through the canonical curve
========================================================

Each step of the tower is a short exact sequence of line bundles on
successive symmetric powers.  Pascal's rule closes the dimension count.
"""

from symsquare.curve_model import canonical
from symsquare.sym_cohomology import i2_dimension, sequence_2delta, theta_tower, tower_composes

g = 6
steps = theta_tower(g)
for step in steps:
    print(f"n={step.sub.n}: sub={step.sub.dims}  mid={step.mid.dims}  quot={step.quot.dims}"
          f"  connecting={step.connecting_ranks}")
print("tower composes:", tower_composes(steps))

###############################################################################
# Twisting the canonical bundle by -2 delta leaves the space of quadrics
# containing the canonical curve as global sections.

for g in range(3, 9):
    K = canonical(g)
    v = sequence_2delta(g, K, K.doubled())
    print(f"g={g}  h^*={v.dims}  I_2={i2_dimension(g)}")
