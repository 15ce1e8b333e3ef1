"""Intersection theory on the sublattice of NS(C^(2)) spanned by C_x and delta.

``C_x`` is the class of the curve ``{x + t : t in C}`` and ``delta`` is half
the class of the diagonal (its pullback to ``C x C`` is the diagonal).  The
pairing is fixed by::

    C_x . C_x = 1,   C_x . delta = 1,   delta . delta = 1 - g

``C_E`` for a divisor ``E`` on the curve is numerically ``deg(E) * C_x``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curve_model import CurveProfile, PencilData


@dataclass(frozen=True)
class NSClass:
    a: int
    b: int
    g: int

    def _check(self, other: "NSClass"):
        if not isinstance(other, NSClass):
            return NotImplemented
        if other.g != self.g:
            raise ValueError(f"classes live on different genera: {self.g} vs {other.g}")

    def __add__(self, other):
        self._check(other)
        return NSClass(self.a + other.a, self.b + other.b, self.g)

    def __sub__(self, other):
        self._check(other)
        return NSClass(self.a - other.a, self.b - other.b, self.g)

    def __neg__(self):
        return NSClass(-self.a, -self.b, self.g)

    def __mul__(self, k: int):
        return NSClass(k * self.a, k * self.b, self.g)

    __rmul__ = __mul__

    def __repr__(self):
        return f"NSClass({self.a}*C_x + {self.b}*delta, g={self.g})"


def C_x(g: int) -> NSClass:
    return NSClass(1, 0, g)


def delta(g: int) -> NSClass:
    return NSClass(0, 1, g)


def pair(u: NSClass, v: NSClass) -> int:
    """Intersection number of two classes on C^(2)."""
    if u.g != v.g:
        raise ValueError(f"classes live on different genera: {u.g} vs {v.g}")
    return u.a * v.a + u.a * v.b + u.b * v.a + u.b * v.b * (1 - u.g)


def class_of_X(profile: CurveProfile, L: PencilData) -> NSClass:
    """Class ``C_L - delta`` of the curve of length-2 subdivisors of divisors of ``L``."""
    return NSClass(L.degree, -1, profile.g)


def class_of_EQ(g: int) -> NSClass:
    """Class ``C_K - 2 delta`` of the zero divisor of a quadric containing the canonical curve."""
    if g < 3:
        raise ValueError(f"g must be >= 3, got {g}")
    return NSClass(2 * g - 2, -2, g)


def canonical_class_sym2(g: int) -> NSClass:
    # pullback of the canonical sheaf of C^(2) is omega_{C^2}(-Delta)
    if g < 2:
        raise ValueError(f"g must be >= 2, got {g}")
    return NSClass(2 * g - 2, -1, g)


def arithmetic_genus_X(g: int, d: int) -> int:
    """Closed form ``(d - 2)(2g + d - 3) / 2``."""
    if g < 2 or d < 2:
        raise ValueError(f"need g >= 2 and d >= 2, got g={g}, d={d}")
    twice = (d - 2) * (2 * g + d - 3)
    if twice < 0:
        raise ValueError(f"arithmetic genus would be negative for g={g}, d={d}")
    return twice // 2


def adjunction_genus(cls: NSClass) -> int:
    """``p_a = cls.(cls + K) / 2 + 1``."""
    twice = pair(cls, cls + canonical_class_sym2(cls.g))
    if twice % 2:
        raise ValueError(f"odd adjunction sum {twice} for {cls!r}")
    return twice // 2 + 1


def theta_restriction_class(g: int) -> NSClass:
    """Class of a theta translate restricted to C^(2) after adding g - 3 general points.

    The restriction is ``C_{K - q_1 - ... - q_{g-3}} - delta`` and the divisor
    has degree ``2g - 2 - (g - 3) = g + 1``.
    """
    if g < 4:
        raise ValueError(f"g must be >= 4, got {g}")
    return NSClass(2 * g - 2 - (g - 3), -1, g)


def pairing_X_with_pencil_curve(g: int, d: int, m: int) -> int:
    """``X_2(g^1_d) . X_2(g^1_m) = dm - d - m + 1 - g``."""
    if d < 2 or m < 2:
        raise ValueError(f"need d, m >= 2, got d={d}, m={m}")
    return pair(NSClass(d, -1, g), NSClass(m, -1, g))


def euler_characteristic(cls: NSClass, chi_O: int) -> int:
    """Riemann-Roch on the surface: ``chi(O) + cls.(cls - K) / 2``."""
    twice = pair(cls, cls - canonical_class_sym2(cls.g))
    if twice % 2:
        raise ValueError(f"odd Riemann-Roch sum {twice} for {cls!r}")
    return chi_O + twice // 2
