"""Cohomology dimensions of the sheaves L_{n,E} and L'_{n,E} on C^(n).

``L_{n,E}`` pulls back to the exterior tensor power ``E ⊠ ... ⊠ E`` on
``C^n``; ``L'_{n,E}`` is the same twisted by minus the sum of the big
diagonals.  By Künneth their cohomology is the invariant (resp. sign)
isotypic part of the super-symmetric tensor power of ``H^0(E) ⊕ H^1(E)``,
with ``H^1`` in odd degree::

    H^i(L_{n,E})  = Λ^i H^1(E) ⊗ S^{n-i} H^0(E)
    H^i(L'_{n,E}) = S^i H^1(E) ⊗ Λ^{n-i} H^0(E)

:func:`supersym_oracle` recomputes these by brute force.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Optional

import numpy as np

from .curve_model import DivisorData, canonical, riemann_roch_complete


class InfeasibleRanks(ValueError):
    """Multiplication-map ranks incompatible with the long exact sequence."""

    def __init__(self, junction: str, message: str):
        super().__init__(f"{junction}: {message}")
        self.junction = junction


class TowerAdditivityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CohVector:
    n: int
    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if len(self.dims) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} dimensions, got {len(self.dims)}")
        if any(x < 0 for x in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")

    @property
    def chi(self) -> int:
        return sum((-1) ** i * x for i, x in enumerate(self.dims))

    def __getitem__(self, i):
        return self.dims[i]

    def padded(self, length: int) -> tuple:
        return self.dims + (0,) * (length - len(self.dims))


@dataclass(frozen=True)
class SequenceReport:
    """Dimension bookkeeping for ``0 -> sub -> mid -> quot -> 0`` in every degree.

    ``connecting_ranks[i]`` is the rank forced on the coboundary
    ``H^i(quot) -> H^{i+1}(sub)`` when ``H^i(sub) -> H^i(mid)`` is injective:
    ``quot_i - (mid_i - sub_i)``.  All zero iff the sequence is exact on
    every cohomology group at the level of dimensions.
    """

    sub: CohVector
    mid: CohVector
    quot: CohVector
    exact_at_dimension_level: bool
    connecting_ranks: tuple


def sym_dim(v: int, m: int) -> int:
    """Dimension of ``S^m`` of a ``v``-dimensional space."""
    if v < 0 or m < 0:
        raise ValueError(f"negative argument: v={v}, m={m}")
    if m == 0:
        return 1
    if v == 0:
        return 0
    return comb(v + m - 1, m)


def ext_dim(v: int, m: int) -> int:
    """Dimension of ``Λ^m`` of a ``v``-dimensional space."""
    if v < 0 or m < 0:
        raise ValueError(f"negative argument: v={v}, m={m}")
    return comb(v, m)


def _invariant_dims(n, h0, h1):
    return [ext_dim(h1, i) * sym_dim(h0, n - i) for i in range(n + 1)]


def _skew_dims(n, h0, h1):
    return [sym_dim(h1, i) * ext_dim(h0, n - i) for i in range(n + 1)]


def cohomology_invariant(n: int, E: DivisorData) -> CohVector:
    """``h^i(L_{n,E})`` for ``i = 0..n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return CohVector(n, _invariant_dims(n, E.h0, E.h1))


def cohomology_skew(n: int, E: DivisorData) -> CohVector:
    """``h^i(L'_{n,E})`` for ``i = 0..n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return CohVector(n, _skew_dims(n, E.h0, E.h1))


ORACLE_MAX_N = 6
ORACLE_MAX_H = 4

_perm_cache: dict = {}


def _permutation_tables(n):
    """All permutations of ``range(n)`` with their signs and inversion masks."""
    if n not in _perm_cache:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
        # inv[s, i, j] = 1 iff i < j and perm s sends i after j
        inv = (perms[:, :, None] > perms[:, None, :]) & np.triu(np.ones((n, n), dtype=bool), 1)
        sign = np.where(inv.sum(axis=(1, 2)) % 2, -1, 1)
        # factor at slot perms[s, i] comes from slot i
        inverse = np.argsort(perms, axis=1)
        _perm_cache[n] = (inverse, inv.astype(np.int64), sign)
    return _perm_cache[n]


def supersym_oracle(n: int, h0: int, h1: int, isotype: str = "invariant") -> CohVector:
    """Brute-force isotypic dimensions of the super-symmetric n-th tensor power.

    Basis vectors ``0..h0-1`` are even, ``h0..h0+h1-1`` odd.  A permutation
    moves tensor factors with the Koszul sign (each crossing of two odd
    factors contributes ``-1``).  For every orbit of basis tensors the
    projector ``sum_s chi(s) s`` (``chi`` trivial or sign) is applied to a
    representative; images of distinct orbits have disjoint supports, so
    the isotypic dimension in degree ``i`` is the number of orbits with
    ``i`` odd factors whose image is nonzero.
    """
    if isotype not in ("invariant", "sign"):
        raise ValueError(f"isotype must be 'invariant' or 'sign', got {isotype!r}")
    if not 1 <= n <= ORACLE_MAX_N or not (0 <= h0 <= ORACLE_MAX_H and 0 <= h1 <= ORACLE_MAX_H):
        raise ValueError(
            f"oracle bounds are 1 <= n <= {ORACLE_MAX_N}, 0 <= h0, h1 <= {ORACLE_MAX_H}; "
            f"got n={n}, h0={h0}, h1={h1}"
        )
    dim = h0 + h1
    dims = [0] * (n + 1)
    if dim == 0:
        return CohVector(n, dims)
    inverse, inv, sign = _permutation_tables(n)
    chi = sign if isotype == "sign" else np.ones_like(sign)
    weights = dim ** np.arange(n - 1, -1, -1)
    for rep in itertools.combinations_with_replacement(range(dim), n):
        t = np.array(rep, dtype=np.int64)
        parity = (t >= h0).astype(np.int64)
        koszul = np.where(np.einsum("sij,i,j->s", inv, parity, parity) % 2, -1, 1)
        images = t[inverse] @ weights
        keys, where = np.unique(images, return_inverse=True)
        coeffs = np.zeros(len(keys), dtype=np.int64)
        np.add.at(coeffs, where.ravel(), chi * koszul)
        if np.any(coeffs):
            dims[int(parity.sum())] += 1
    return CohVector(n, dims)


def _generic_theta_divisor(g, degree, given, label):
    if given is None:
        return riemann_roch_complete(g, degree, degree - g + 2)
    if given.g != g or given.degree != degree:
        raise ValueError(f"{label}: expected degree {degree} in genus {g}, got {given}")
    if given.h1 != 1:
        raise ValueError(f"{label}: h1 must be 1 for a general configuration, got {given.h1}")
    return given


def theta_tower_step(
    g: int,
    n: int,
    q_total: Optional[int] = None,
    sub_divisor: Optional[DivisorData] = None,
    mid_divisor: Optional[DivisorData] = None,
) -> SequenceReport:
    """One restriction step ``C^(n-1) ⊂ C^(n)`` of a theta translate containing C^(2).

    With ``A = K - q_1 - ... - q_{g-n}`` and ``B = K - q_1 - ... - q_{g-1-n}``
    the sequence in degree ``i`` reads::

        0 -> S^i H^1(A) ⊗ Λ^{n-i} H^0(A) -> S^i H^1(B) ⊗ Λ^{n-i} H^0(B)
          -> S^i H^1(A) ⊗ Λ^{n-1-i} H^0(A) -> 0

    For general points both divisors have ``h^1 = 1``.
    """
    if q_total is None:
        q_total = g - 3
    if not 3 <= n <= g - 1:
        raise ValueError(f"need 3 <= n <= g - 1, got g={g}, n={n}")
    if not g - n <= q_total <= g - 3:
        raise ValueError(f"q_total must lie in [{g - n}, {g - 3}], got {q_total}")
    A = _generic_theta_divisor(g, 2 * g - 2 - (g - n), sub_divisor, "sub divisor")
    B = _generic_theta_divisor(g, 2 * g - 2 - (g - 1 - n), mid_divisor, "mid divisor")

    sub = cohomology_skew(n, A)
    mid = cohomology_skew(n, B)
    quot = cohomology_skew(n - 1, A)
    q = quot.padded(n + 1)
    connecting = tuple(q[i] - (mid[i] - sub[i]) for i in range(n + 1))
    exact = all(mid[i] == sub[i] + q[i] for i in range(n + 1))
    if not exact:
        raise TowerAdditivityError(
            f"dimension additivity fails at g={g}, n={n}: sub={sub.dims}, mid={mid.dims}, quot={quot.dims}"
        )
    return SequenceReport(sub, mid, quot, exact, connecting)


def theta_tower(g: int) -> list:
    """All steps from ``C^(g-1)`` down to ``C^(2)``, top step first."""
    return [theta_tower_step(g, n) for n in range(g - 1, 2, -1)]


def tower_composes(reports: list) -> bool:
    """Each step's quotient is the next step's middle term."""
    return all(upper.quot == lower.mid for upper, lower in zip(reports, reports[1:]))


def sequence_2delta(
    g: int,
    E: DivisorData,
    E2: DivisorData,
    rank_mu0: Optional[int] = None,
    rank_mu1: Optional[int] = None,
) -> CohVector:
    """Solve for ``h^i(C^(2), C_E - 2 delta)`` from the long exact sequence::

        0 -> H^0(F) -> S^2 H^0(E) -mu0-> H^0(2E) -> H^1(F) -> H^0(E) ⊗ H^1(E)
          -mu1-> H^1(2E) -> H^2(F) -> Λ^2 H^1(E) -> 0

    ``rank_mu0`` and ``rank_mu1`` default to the maximal ranks allowed by the
    dimensions (for ``E = K`` on a non-hyperelliptic curve that is Noether's
    theorem).
    """
    if E.g != g or E2.g != g:
        raise ValueError(f"divisors must live on genus {g}")
    if E2.degree != 2 * E.degree:
        raise ValueError(f"E2 has degree {E2.degree}, expected 2 * {E.degree}")
    s2 = sym_dim(E.h0, 2)
    mixed = E.h0 * E.h1
    top = ext_dim(E.h1, 2)
    max0 = min(s2, E2.h0)
    max1 = min(mixed, E2.h1)
    if rank_mu0 is None:
        rank_mu0 = max0
    if rank_mu1 is None:
        rank_mu1 = max1
    if not 0 <= rank_mu0 <= max0:
        raise InfeasibleRanks(
            "S^2 H^0(E) -> H^0(2E)",
            f"rank {rank_mu0} outside [0, {max0}] (dims {s2} -> {E2.h0})",
        )
    if not 0 <= rank_mu1 <= max1:
        raise InfeasibleRanks(
            "H^0(E) ⊗ H^1(E) -> H^1(2E)",
            f"rank {rank_mu1} outside [0, {max1}] (dims {mixed} -> {E2.h1})",
        )
    h0 = s2 - rank_mu0
    h1 = (E2.h0 - rank_mu0) + (mixed - rank_mu1)
    h2 = (E2.h1 - rank_mu1) + top
    return CohVector(2, (h0, h1, h2))


def sequence_2delta_chi(E: DivisorData, E2: DivisorData) -> int:
    """Euler characteristic of ``C_E - 2 delta``, independent of the ranks."""
    return sym_dim(E.h0, 2) - E.h0 * E.h1 + ext_dim(E.h1, 2) - E2.h0 + E2.h1


def i2_dimension(g: int) -> int:
    """Dimension of the space of quadrics through the canonical curve."""
    if g < 3:
        raise ValueError(f"g must be >= 3, got {g}")
    K = canonical(g)
    return sequence_2delta(g, K, K.doubled()).dims[0]
