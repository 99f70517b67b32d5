"""Positive roots by reflection closure of the simple roots."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .lie import CartanData, LieType, RootVector, cartan_data

__all__ = ["RootSystem", "generate_positive_roots", "positive_root_count", "reflect_root"]


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan_data: CartanData
    positive_roots: tuple[RootVector, ...]

    @property
    def highest_root(self) -> RootVector:
        return self.positive_roots[-1]

    def __len__(self) -> int:
        return len(self.positive_roots)

    def __contains__(self, v: RootVector) -> bool:
        return v in self._index

    @functools.cached_property
    def _index(self) -> frozenset:
        return frozenset(self.positive_roots)


def positive_root_count(t: LieType) -> int:
    """Closed-form number of positive roots."""
    r = t.rank
    if t.family == "A":
        return r * (r + 1) // 2
    if t.family in "BC":
        return r * r
    if t.family == "D":
        return r * (r - 1)
    return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[t.name]


def reflect_root(beta: tuple[int, ...], i: int, cd: CartanData) -> tuple[int, ...]:
    """``sigma_i(beta) = beta - <beta, alpha_i> alpha_i`` in root coordinates (0-based ``i``)."""
    # <beta, alpha_i> = sum_j m_j C[j][i]
    k = sum(m * cd.cartan[j][i] for j, m in enumerate(beta))
    if k == 0:
        return beta
    out = list(beta)
    out[i] -= k
    return tuple(out)


def generate_positive_roots(t: LieType) -> RootSystem:
    cd = cartan_data(t)
    r = t.rank
    simple = [tuple(int(k == i) for k in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                gamma = reflect_root(beta, i, cd)
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positive = sorted((RootVector(v) for v in seen if all(c >= 0 for c in v)), key=RootVector.sort_key)
    return RootSystem(t, cd, tuple(positive))
