"""Closed forms for ``A_r``: the mu-weight system and ``Gamma(k)+`` by level.

``mu_1 = lambda_1`` and ``mu_{k+1} = mu_k - alpha_k``, so that
``alpha_k = mu_k - mu_{k+1}`` and the ``r + 1`` weights sum to zero. A level-``s``
member of ``Gamma(k)+`` is ``sum(mu_i for i in I) - sum(mu_j for j in J)`` with
``I`` an ``s``-subset of ``1..k`` and ``J`` an ``s``-subset of ``k+1..r+1``.

Three constructions of ``Gamma(k)+`` for ``A_r`` exist in this package and
are compared by :func:`agreement`: the quadratic equation in the coefficients
(:func:`diophantine_solutions`), the level decomposition
(:func:`gamma_closed_form`) and the generic sphere search
(:func:`liespecial.special.gamma_set`).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .lie import LieType, RootVector, cartan_data
from .special import gamma_set

__all__ = [
    "MuBasis",
    "PartialGamma",
    "mu_basis",
    "diophantine_solutions",
    "gamma_closed_form",
    "closed_form_union",
    "counting_identity",
    "reverse_root",
    "duality_holds",
    "AgreementRow",
    "agreement",
]


@dataclass(frozen=True)
class MuBasis:
    rank: int
    # mu[K] in simple-root coordinates, K = 0..r
    mu: tuple[tuple[Fraction, ...], ...]

    def combination(self, plus, minus) -> tuple[Fraction, ...]:
        """``sum mu_a (a in plus) - sum mu_b (b in minus)`` for 1-based indices."""
        out = [Fraction(0)] * self.rank
        for a in plus:
            out = [x + y for x, y in zip(out, self.mu[a - 1])]
        for b in minus:
            out = [x - y for x, y in zip(out, self.mu[b - 1])]
        return tuple(out)


@dataclass(frozen=True)
class PartialGamma:
    k: int
    s: int
    members: tuple[RootVector, ...]

    def __len__(self) -> int:
        return len(self.members)


def _check(k: int, r: int) -> None:
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    if not 1 <= k <= r:
        raise IndexError(f"index {k} out of range 1..{r}")


def mu_basis(r: int) -> MuBasis:
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    cd = cartan_data(LieType("A", r))
    mu = [tuple(cd.inverse_cartan[0])]
    for k in range(r):
        mu.append(tuple(x - int(p == k) for p, x in enumerate(mu[-1])))
    return MuBasis(r, tuple(mu))


def diophantine_solutions(k: int, r: int) -> tuple[RootVector, ...]:
    """Non-negative ``m`` with ``sum m_i^2 = sum m_i m_(i+1) + m_k``.

    Coefficients are bounded by ``min(k, r + 1 - k)``. Sorted by height, then lex.
    """
    _check(k, r)
    bound = min(k, r + 1 - k)
    out = []
    for m in itertools.product(range(bound + 1), repeat=r):
        lhs = sum(x * x for x in m)
        rhs = sum(m[i] * m[i + 1] for i in range(r - 1)) + m[k - 1]
        if lhs == rhs:
            out.append(RootVector(m))
    out.sort(key=RootVector.sort_key)
    return tuple(out)


def gamma_closed_form(k: int, r: int) -> list[PartialGamma]:
    """``Gamma^(s)(k)`` for ``s = 0..k``; levels beyond ``r + 1 - k`` are empty."""
    _check(k, r)
    basis = mu_basis(r)
    upper = range(1, k + 1)
    lower = range(k + 1, r + 2)
    parts = []
    for s in range(k + 1):
        members = []
        for plus in itertools.combinations(upper, s):
            for minus in itertools.combinations(lower, s):
                v = basis.combination(plus, minus)
                if any(x.denominator != 1 for x in v):
                    raise AssertionError(f"non-integral level-{s} vector {v}")
                members.append(RootVector(tuple(int(x) for x in v)))
        members.sort(key=RootVector.sort_key)
        parts.append(PartialGamma(k, s, tuple(members)))
    return parts


def closed_form_union(k: int, r: int) -> tuple[RootVector, ...]:
    members = {v for part in gamma_closed_form(k, r) for v in part.members}
    return tuple(sorted(members, key=RootVector.sort_key))


def counting_identity(k: int, r: int) -> tuple[int, int]:
    """``(sum_s |Gamma^(s)(k)|, B[r+1, k])``."""
    _check(k, r)
    lhs = sum(len(part) for part in gamma_closed_form(k, r))
    return lhs, math.comb(r + 1, k)


def reverse_root(v: RootVector) -> RootVector:
    """Image under the diagram automorphism ``alpha_i -> alpha_(r+1-i)``."""
    return RootVector(tuple(reversed(v.coeffs)))


def duality_holds(k: int, r: int) -> bool:
    """Index reversal maps ``Gamma(k)+`` bijectively onto ``Gamma(r+1-k)+``."""
    _check(k, r)
    t = LieType("A", r)
    src = gamma_set(k, t).members
    dst = set(gamma_set(r + 1 - k, t).members)
    image = [reverse_root(v) for v in src]
    return len(set(image)) == len(src) == len(dst) and set(image) == dst


@dataclass(frozen=True)
class AgreementRow:
    k: int
    count: int
    closed_form_distinct: bool
    closed_equals_diophantine: bool
    diophantine_equals_search: bool
    counting: tuple[int, int]
    duality: bool

    @property
    def passed(self) -> bool:
        return (
            self.closed_form_distinct
            and self.closed_equals_diophantine
            and self.diophantine_equals_search
            and self.counting[0] == self.counting[1] == self.count
            and self.duality
        )


def agreement(r: int) -> list[AgreementRow]:
    """Three-way ``Gamma(k)+`` comparison, counting identity and duality for each ``k``."""
    rows = []
    t = LieType("A", r)
    for k in range(1, r + 1):
        parts = gamma_closed_form(k, r)
        flat = [v for part in parts for v in part.members]
        closed = set(flat)
        dio = set(diophantine_solutions(k, r))
        search = set(gamma_set(k, t).members)
        rows.append(
            AgreementRow(
                k=k,
                count=len(search),
                closed_form_distinct=len(flat) == len(closed),
                closed_equals_diophantine=closed == dio,
                diophantine_equals_search=dio == search,
                counting=counting_identity(k, r),
                duality=duality_holds(k, r),
            )
        )
    return rows
