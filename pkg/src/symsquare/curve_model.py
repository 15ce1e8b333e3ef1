"""Numerical model of a smooth curve: genus plus declared linear systems.

Curves are never represented by equations. Everything downstream only
consumes the integers carried here: degrees, ``h^0`` and ``h^1`` of
divisors, and the genus.  Genericity of point configurations is assumed
implicitly and is not checked.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional


class BrillNoetherWarning(UserWarning):
    """A declared linear system is not expected on a general curve.

    Such profiles are still accepted; special curves can carry them.
    """


@dataclass(frozen=True)
class DivisorData:
    """Degree and cohomology dimensions of a divisor on a genus ``g`` curve."""

    g: int
    degree: int
    h0: int
    h1: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be >= 0, got {self.g}")
        if self.h0 < 0 or self.h1 < 0:
            raise ValueError(f"h0, h1 must be >= 0, got h0={self.h0}, h1={self.h1}")
        if self.h0 - self.h1 != self.degree - self.g + 1:
            raise ValueError(
                f"Riemann-Roch violated: h0 - h1 = {self.h0 - self.h1} but "
                f"degree - g + 1 = {self.degree - self.g + 1}"
            )
        if self.degree < 0 and self.h0 != 0:
            raise ValueError(f"negative degree {self.degree} with h0 = {self.h0}")
        if self.degree > 2 * self.g - 2 and self.h1 != 0:
            raise ValueError(
                f"degree {self.degree} > 2g - 2 = {2 * self.g - 2} with h1 = {self.h1}"
            )

    @property
    def is_special(self) -> bool:
        return self.h1 > 0

    def doubled(self, h0: Optional[int] = None) -> "DivisorData":
        """Numerical data of ``2E``.

        ``h0`` must be supplied unless ``2E`` is non-special by degree.
        """
        degree = 2 * self.degree
        if h0 is None:
            if degree <= 2 * self.g - 2:
                raise ValueError(f"h0(2E) is not determined by degree {degree} in genus {self.g}")
            h0 = degree - self.g + 1
        return riemann_roch_complete(self.g, degree, h0)


def riemann_roch_complete(g: int, degree: int, h0: int) -> DivisorData:
    """Fill in ``h1`` from Riemann-Roch.

    >>> riemann_roch_complete(4, 6, 4).h1
    1
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    floor = max(0, degree - g + 1)
    if h0 < floor:
        raise ValueError(f"h0 = {h0} below the Riemann-Roch floor {floor} (g={g}, degree={degree})")
    return DivisorData(g, degree, h0, h0 - degree + g - 1)


def canonical(g: int) -> DivisorData:
    return DivisorData(g, 2 * g - 2, g, 1)


def trivial(g: int) -> DivisorData:
    return DivisorData(g, 0, 1, g)


def clifford_admissible(g: int, degree: int, h0: int, strict: bool = False) -> bool:
    """Clifford's inequality ``2(h0 - 1) <= degree`` (``<`` when ``strict``).

    Caller is responsible for ``0 <= degree <= 2g - 2``; outside the special
    range the inequality carries no information.
    """
    lhs = 2 * (h0 - 1)
    return lhs < degree if strict else lhs <= degree


def residual(g: int, D: DivisorData) -> DivisorData:
    """Serre residual ``K - D``: degree ``2g - 2 - deg D`` with h0 and h1 swapped."""
    if D.g != g:
        raise ValueError(f"divisor lives on genus {D.g}, not {g}")
    return DivisorData(g, 2 * g - 2 - D.degree, D.h1, D.h0)


def brill_noether_number(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class PencilData:
    """A ``g^r_d`` with ``r = h0_L - 1``, base divisor of degree ``base_degree``.

    Flags are ``None`` when the geometric fact is unknown.
    """

    degree: int
    h0_L: int = 2
    base_degree: int = 0
    unique_trigonal: Optional[bool] = None
    triple_ramification_5t: Optional[bool] = None
    base_point_free: Optional[bool] = None
    double_cover_genus2_pullback: Optional[bool] = None

    def __post_init__(self):
        if self.degree < 3:
            raise ValueError(f"pencil degree must be >= 3, got {self.degree}")
        if self.h0_L < 2:
            raise ValueError(f"h0(L) must be >= 2 for a pencil, got {self.h0_L}")
        if not 0 <= self.base_degree <= self.degree:
            raise ValueError(f"base degree {self.base_degree} outside [0, {self.degree}]")
        if self.base_point_free and self.base_degree > 0:
            raise ValueError(f"base_point_free set but base degree is {self.base_degree}")

    @property
    def moving_degree(self) -> int:
        return self.degree - self.base_degree

    @property
    def r(self) -> int:
        return self.h0_L - 1

    def flags(self) -> dict:
        return {
            "unique_trigonal": self.unique_trigonal,
            "triple_ramification_5t": self.triple_ramification_5t,
            "base_point_free": self.base_point_free,
            "double_cover_genus2_pullback": self.double_cover_genus2_pullback,
        }

    def divisor(self, g: int) -> DivisorData:
        return riemann_roch_complete(g, self.degree, self.h0_L)

    def validate(self, g: int) -> DivisorData:
        D = self.divisor(g)
        if D.is_special and not clifford_admissible(g, self.degree, self.h0_L):
            raise ValueError(
                f"Clifford violated: 2(h0 - 1) = {2 * (self.h0_L - 1)} > degree {self.degree}"
            )
        rho = brill_noether_number(g, self.r, self.degree)
        if rho < 0:
            warnings.warn(
                f"g^{self.r}_{self.degree} has Brill-Noether number {rho} < 0 in genus {g}",
                BrillNoetherWarning,
                stacklevel=3,
            )
        # a birational net of degree d lies on a plane curve of arithmetic genus (d-1)(d-2)/2
        if self.r == 2 and g > (self.degree - 1) * (self.degree - 2) // 2:
            warnings.warn(
                f"g^2_{self.degree} in genus {g} exceeds the plane-curve genus bound "
                f"{(self.degree - 1) * (self.degree - 2) // 2}",
                BrillNoetherWarning,
                stacklevel=3,
            )
        return D


@dataclass(frozen=True)
class CurveProfile:
    g: int
    hyperelliptic: bool = False
    pencils: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.g < 3:
            raise ValueError(f"genus must be >= 3, got {self.g}")
        object.__setattr__(self, "pencils", tuple(self.pencils))
        for L in self.pencils:
            L.validate(self.g)

    def require_theorem_hypotheses(self):
        if self.hyperelliptic:
            raise ValueError("hyperelliptic curves are outside the theorem's hypotheses")
        if self.g < 4:
            raise ValueError(f"genus {self.g} < 4 is outside the theorem's hypotheses")
