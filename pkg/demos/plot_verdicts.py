"""
Classifying pencils
===================

The verdict combines Clifford-type degree bounds with, at genus 4, three
geometric flags that cannot be computed from numbers alone.
"""

import warnings

from symsquare.curve_model import CurveProfile, PencilData
from symsquare.obstruction import verdict

warnings.simplefilter("ignore")

cases = [
    (4, PencilData(3)),
    (4, PencilData(4)),
    (5, PencilData(5, h0_L=3)),
    (4, PencilData(5, h0_L=3)),
    (4, PencilData(5, h0_L=3, unique_trigonal=True, triple_ramification_5t=True, base_point_free=True)),
    (7, PencilData(9, h0_L=3)),
]
for g, L in cases:
    v = verdict(CurveProfile(g, pencils=(L,)), L)
    print(f"g={g} d={L.degree} h0={L.h0_L}: {v.label.value}")

###############################################################################
# The full evidence trail for the single surviving configuration.

L = cases[4][1]
v = verdict(CurveProfile(4, pencils=(L,)), L)
for name, value in v.evidence:
    print(f"  {name} = {value}")
for note in v.notes:
    print("  note:", note)
