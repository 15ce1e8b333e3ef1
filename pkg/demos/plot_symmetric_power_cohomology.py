"""
Cohomology of line bundles on symmetric powers
==============================================

The closed forms for the invariant and skew bundles are compared with a
brute-force super-symmetric average over the symmetric group.
"""

import itertools

import numpy as np

from symsquare.curve_model import DivisorData, canonical, riemann_roch_complete
from symsquare.sym_cohomology import cohomology_invariant, cohomology_skew, supersym_oracle

K = canonical(4)
print("invariant bundle of K on C^(2):", cohomology_invariant(2, K).dims)
print("skew bundle of K - q on C^(2):", cohomology_skew(2, riemann_roch_complete(4, 5, 3)).dims)

###############################################################################
# Agreement table.  Each cell counts the (n, isotype) pairs where the oracle
# matches the formula for the given ``h0, h1``.

table = np.zeros((4, 4), dtype=int)
for h0, h1 in itertools.product(range(4), repeat=2):
    E = DivisorData(h0 + h1, 2 * h0 - 1, h0, h1)
    for n in range(1, 5):
        table[h0, h1] += supersym_oracle(n, h0, h1, "invariant") == cohomology_invariant(n, E)
        table[h0, h1] += supersym_oracle(n, h0, h1, "sign") == cohomology_skew(n, E)
print(table)
print("all agree:", bool((table == 8).all()))
