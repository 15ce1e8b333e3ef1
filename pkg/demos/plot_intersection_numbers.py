"""
Intersection numbers on the symmetric square
============================================

Classes on C^(2) are written ``a*C_x + b*delta``.  The pairing only needs
the genus, so everything below is exact integer arithmetic.
"""

from symsquare import ns_lattice as ns

g = 4
cx, delta = ns.C_x(g), ns.delta(g)
print("C_x^2 =", ns.pair(cx, cx), " C_x.delta =", ns.pair(cx, delta), " delta^2 =", ns.pair(delta, delta))

###############################################################################
# The curve X attached to a degree d pencil has class d*C_x - delta.  Its
# arithmetic genus from adjunction agrees with the closed form.

for d in range(3, 8):
    X = ns.NSClass(d, -1, g)
    print(f"d={d}  g(X)={ns.arithmetic_genus_X(g, d):3d}  adjunction={ns.adjunction_genus(X):3d}"
          f"  X.E_Q={ns.pair(X, ns.class_of_EQ(g)):3d}")

###############################################################################
# Both positivity lower bounds hold across a grid of genera and degrees.

worst_EQ = min(ns.pair(ns.NSClass(d, -1, g), ns.class_of_EQ(g)) - (4 * g - 12)
               for g in range(4, 41) for d in range(4, 41))
worst_pencil = min(ns.pairing_X_with_pencil_curve(g, d, g - 1) - (2 * g - 6)
                   for g in range(4, 41) for d in range(4, 41))
print("slack in the E_Q bound:", worst_EQ, " slack in the pencil bound:", worst_pencil)
