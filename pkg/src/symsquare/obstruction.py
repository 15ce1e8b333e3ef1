"""First-order obstruction verdicts for X = X_2(L) inside C^(2) ⊂ JC.

The decision tree runs on degree ``d`` and ``h^0(L)`` of the pencil, the
genus, and explicit geometric flags for the facts no numerical profile can
determine (uniqueness of the trigonal series, triple ramification, base
points).  Every verdict carries the intersection numbers and dimension
bounds supporting it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import ns_lattice as ns
from .curve_model import CurveProfile, PencilData


class Label(str, Enum):
    ABEL_BLOCKED = "ABEL_BLOCKED"
    PRYM_DEFORMS = "PRYM_DEFORMS"
    CANDIDATE_G4 = "CANDIDATE_G4"
    OBSTRUCTED = "OBSTRUCTED"
    INDETERMINATE_NEEDS_GEOMETRY = "INDETERMINATE_NEEDS_GEOMETRY"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DimensionFacts:
    dim_Z_g1: int
    dim_Ztilde_lower: int
    dim_Z_lower: int
    z_lower_clamped: bool = False


@dataclass(frozen=True)
class Verdict:
    label: Label
    evidence: tuple = ()
    notes: tuple = field(default=())

    def fact(self, name: str) -> int:
        for key, value in self.evidence:
            if key == name:
                return value
        raise KeyError(name)


def dimension_facts(g: int) -> DimensionFacts:
    """Dimension of Z_{g-1} and lower bounds for the incidence loci over it.

    For ``g = 4`` the projected locus is nonempty, so its bound ``g - 5``
    is clamped to 0 and flagged.
    """
    if g < 4:
        raise ValueError(f"g must be >= 4, got {g}")
    lower = g - 5
    return DimensionFacts(g - 3, g - 4, max(lower, 0), lower < 0)


def clifford_inequality(g: int, d: int) -> bool:
    """``2(g - 3 - 1) < 2g - 2 - d``: strict Clifford for ``K - L`` with ``h^0 >= g - 3``."""
    return 2 * (g - 3 - 1) < 2 * g - 2 - d


def clifford_d_bound(g: int) -> int:
    """Largest ``d`` satisfying :func:`clifford_inequality`; independent of ``g``."""
    if g < 4:
        raise ValueError(f"g must be >= 4, got {g}")
    bound = 2 * g - 2 - 2 * (g - 3 - 1) - 1
    assert clifford_inequality(g, bound) and not clifford_inequality(g, bound + 1)
    return bound


def cover_constraint(deg_N: int, deg_kappa: int) -> bool:
    """Degree bound ``deg(N)(deg(kappa) - 1) <= 4`` for a non-birational projection."""
    if deg_N < 2 or deg_kappa < 2:
        raise ValueError(f"need deg_N, deg_kappa >= 2, got {deg_N}, {deg_kappa}")
    return deg_N * (deg_kappa - 1) <= 4


def base_divisor_degree(g: int, deg_N: int, deg_kappa: int) -> int:
    b0 = g + 1 - deg_kappa * deg_N
    if b0 < 0:
        raise ValueError(f"deg(kappa) * deg(N) = {deg_kappa * deg_N} exceeds g + 1 = {g + 1}")
    return b0


_G4_FLAGS = ("unique_trigonal", "triple_ramification_5t", "base_point_free")


def verdict(profile: CurveProfile, L: PencilData) -> Verdict:
    profile.require_theorem_hypotheses()
    g, d, h0 = profile.g, L.degree, L.h0_L
    L.validate(g)

    X = ns.class_of_X(profile, L)
    facts = dimension_facts(g)
    evidence = [
        ("g", g),
        ("d", d),
        ("h0_L", h0),
        ("genus_X", ns.arithmetic_genus_X(g, d)),
        ("X.E_Q", ns.pair(X, ns.class_of_EQ(g))),
        ("X.X2_g1_gm1", ns.pairing_X_with_pencil_curve(g, d, g - 1)),
        ("X.theta_restriction", ns.pair(X, ns.theta_restriction_class(g))),
        ("dim_Z_g1", facts.dim_Z_g1),
        ("dim_Ztilde_lower", facts.dim_Ztilde_lower),
        ("dim_Z_lower", facts.dim_Z_lower),
        ("dim_Z_lower_clamped", int(facts.z_lower_clamped)),
    ]
    notes = []
    if d >= 4:
        evidence += [
            ("clifford_d_bound", clifford_d_bound(g)),
            ("clifford_lhs", 2 * (g - 3 - 1)),
            ("clifford_rhs", 2 * g - 2 - d),
            ("clifford_holds", int(clifford_inequality(g, d))),
        ]

    def done(label):
        return Verdict(label, tuple(evidence), tuple(notes))

    if d == 3:
        notes.append("image of X_2(g^1_3) in JC is an Abel curve; minimal class forces a Jacobian (Matsusaka)")
        return done(Label.ABEL_BLOCKED)
    if d == 4:
        notes.append("X_2(g^1_4) is a Prym-embedded curve (Recillas); deforms into the Prym locus")
        return done(Label.PRYM_DEFORMS)
    if L.double_cover_genus2_pullback:
        notes.append(
            "double cover of a genus 2 curve with L pulled back from its g^1_2 forces deg L = 4; "
            "does not affect this verdict"
        )
    if d >= 6:
        notes.append(f"strict Clifford on K - L with h0 >= g - 3 gives d <= {clifford_d_bound(g)}")
        return done(Label.OBSTRUCTED)
    # d == 5
    if h0 != 3:
        notes.append("d = 5 needs h0(L) = 3 to survive the Clifford step")
        return done(Label.OBSTRUCTED)
    if g == 5:
        notes.append("g = 5: quadrics from s_i + s_j sweep all of |I_2(C)|, forcing L = g^1_3 + D_2")
        return done(Label.OBSTRUCTED)
    if g == 6:
        notes.append("g = 6: plane quintic; g^2_5 - s_k + t traces all of Sing(Theta)")
        return done(Label.OBSTRUCTED)
    if g >= 7:
        notes.append(f"a g^2_5 cannot exist on a non-hyperelliptic curve of genus {g}")
        return done(Label.OBSTRUCTED)

    # g == 4, d == 5, h0 == 3: L sits in |K - t|
    evidence.append(("X.X2_G", ns.pairing_X_with_pencil_curve(g, d, 3)))
    flags = [getattr(L, name) for name in _G4_FLAGS]
    for name, value in zip(_G4_FLAGS, flags):
        evidence.append((f"flag_{name}", -1 if value is None else int(value)))
    if any(value is False for value in flags):
        if L.unique_trigonal is False:
            notes.append("a second g^1_3 repeats the argument and would have to equal |3t| as well")
        notes.append("Z(X) is not the single point t; X cannot deform out of J_4")
        return done(Label.OBSTRUCTED)
    if all(flags):
        notes.append("X_2(g^1_3) meets X only at 2t with multiplicity 4; deformation not excluded")
        return done(Label.CANDIDATE_G4)
    notes.append("g = 4, d = 5, h0 = 3: trigonal uniqueness, ramification and base points must be supplied")
    return done(Label.INDETERMINATE_NEEDS_GEOMETRY)
