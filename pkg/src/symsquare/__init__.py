"""Exact intersection numbers, cohomology dimensions and first-order
obstruction verdicts for curves X_2(g^1_d) in the symmetric square of a
curve.

Modules
-------
curve_model
    Numerical curve data: divisors, pencils, Riemann-Roch, Clifford.
ns_lattice
    Pairing on the span of C_x and delta in NS(C^(2)); classes and genera.
sym_cohomology
    Cohomology of L_{n,E} and L'_{n,E} on C^(n), the theta restriction
    tower, and the quadric sequence; brute-force super-symmetric oracle.
obstruction
    Verdicts on whether X_2(g^1_d) can deform out of the Jacobian locus.
cli
    ``python -m symsquare <command> --key value ...``
"""
from .curve_model import (
    BrillNoetherWarning,
    CurveProfile,
    DivisorData,
    PencilData,
    clifford_admissible,
    residual,
    riemann_roch_complete,
)
from .ns_lattice import (
    NSClass,
    adjunction_genus,
    arithmetic_genus_X,
    canonical_class_sym2,
    class_of_EQ,
    class_of_X,
    pair,
    pairing_X_with_pencil_curve,
    theta_restriction_class,
)
from .obstruction import (
    DimensionFacts,
    Label,
    Verdict,
    base_divisor_degree,
    clifford_d_bound,
    cover_constraint,
    dimension_facts,
    verdict,
)
from .sym_cohomology import (
    CohVector,
    SequenceReport,
    cohomology_invariant,
    cohomology_skew,
    ext_dim,
    i2_dimension,
    sequence_2delta,
    supersym_oracle,
    sym_dim,
    theta_tower_step,
)

__version__ = "0.1.0"
