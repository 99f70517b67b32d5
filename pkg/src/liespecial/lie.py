"""Cartan data and the two scalar products on roots and weights.

Vectors live in one of two bases:

* :class:`RootVector` -- coefficients over the simple roots ``alpha_i``;
* :class:`WeightVector` -- Dynkin labels over the fundamental weights ``lambda_i``.

Conventions (fixed repo-wide):

* ``C[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`` so that the Dynkin
  labels of ``alpha_i`` are row ``i`` of ``C``;
* Bourbaki node numbering;
* short roots have squared length 2, i.e. ``d_j = (alpha_j, alpha_j) / 2`` is 1
  on short nodes.

All arithmetic is exact (:class:`fractions.Fraction`). Indices exposed to
users are 1-based; the tuples stored here are 0-based as usual in Python.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "LieType",
    "CartanData",
    "RootVector",
    "WeightVector",
    "build_cartan",
    "cartan_data",
    "sym_product",
    "pairing",
    "to_labels",
    "to_root_coords",
    "weight_to_root",
    "fundamental_weight",
    "simple_root",
]

FAMILIES = "ABCDEFG"

Matrix = tuple[tuple[int, ...], ...]
QMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True, order=True)
class LieType:
    """A finite Lie algebra family together with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES or len(self.family) != 1:
            raise ValueError(f"unknown Lie family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValueError(f"rank must be an integer, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 2,
            "C": self.rank >= 2,
            "D": self.rank >= 3,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.family]
        if not ok:
            allowed = {
                "A": "rank >= 1",
                "B": "rank >= 2",
                "C": "rank >= 2",
                "D": "rank >= 3",
                "E": "rank in {6, 7, 8}",
                "F": "rank == 4",
                "G": "rank == 2",
            }[self.family]
            raise ValueError(f"invalid rank {self.rank} for family {self.family} ({allowed})")

    @classmethod
    def parse(cls, text: str) -> LieType:
        """Parse names such as ``"A3"``, ``"g2"`` or ``"E_8"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Lie type {text!r}; expected e.g. 'A3' or 'G2'")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RootVector:
    """Coefficients ``m_i`` of ``sum_i m_i alpha_i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> RootVector:
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self):
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def sort_key(self):
        """Height first, then lexicographic on the coefficients."""
        return (self.height, self.coeffs)

    def __add__(self, other: RootVector) -> RootVector:
        _check_same_rank(self, other)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootVector) -> RootVector:
        _check_same_rank(self, other)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RootVector:
        return RootVector(tuple(-a for a in self.coeffs))

    def __rmul__(self, k) -> RootVector:
        return RootVector(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class WeightVector:
    """Dynkin labels ``a_i`` of ``sum_i a_i lambda_i``."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def __add__(self, other: WeightVector) -> WeightVector:
        _check_same_rank(self, other)
        return WeightVector(tuple(a + b for a, b in zip(self.labels, other.labels)))

    def __sub__(self, other: WeightVector) -> WeightVector:
        _check_same_rank(self, other)
        return WeightVector(tuple(a - b for a, b in zip(self.labels, other.labels)))

    def __neg__(self) -> WeightVector:
        return WeightVector(tuple(-a for a in self.labels))

    def __rmul__(self, k) -> WeightVector:
        return WeightVector(tuple(k * a for a in self.labels))

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.labels) + "]"


Vector = Union[RootVector, WeightVector]


def _check_same_rank(x: Vector, y: Vector) -> None:
    if x.rank != y.rank:
        raise ValueError(f"dimension mismatch: {x.rank} != {y.rank}")


@dataclass(frozen=True)
class CartanData:
    lie_type: LieType
    cartan: Matrix
    symmetrizer: tuple[Fraction, ...]
    inverse_cartan: QMatrix
    fundamental_gram: QMatrix

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @functools.cached_property
    def root_gram(self) -> QMatrix:
        """``(alpha_i, alpha_j) = C[i][j] * d_j``."""
        r = self.rank
        return tuple(tuple(self.cartan[i][j] * self.symmetrizer[j] for j in range(r)) for i in range(r))


# Dynkin diagrams: node lengths d_i and the bonds between nodes (0-based).
def _diagram(t: LieType) -> tuple[list[int], list[tuple[int, int]]]:
    r = t.rank
    chain = [(k, k + 1) for k in range(r - 1)]
    if t.family == "A":
        return [1] * r, chain
    if t.family == "B":
        return [2] * (r - 1) + [1], chain
    if t.family == "C":
        return [1] * (r - 1) + [2], chain
    if t.family == "D":
        return [1] * r, [(k, k + 1) for k in range(r - 2)] + [(r - 3, r - 1)]
    if t.family == "E":
        edges = [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, r - 1)]
        return [1] * r, edges
    if t.family == "F":
        return [2, 2, 1, 1], chain
    if t.family == "G":
        return [1, 3], chain
    raise AssertionError(t)


def _inverse(m: Sequence[Sequence]) -> QMatrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((k for k in range(col, n) if a[k][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for k in range(n):
            if k != col and a[k][col] != 0:
                f = a[k][col]
                a[k] = [x - f * y for x, y in zip(a[k], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def build_cartan(t: LieType) -> CartanData:
    """Cartan matrix, symmetrizer, inverse and fundamental-weight Gram matrix of ``t``."""
    if not isinstance(t, LieType):
        raise TypeError(f"expected LieType, got {type(t).__name__}")
    lengths, edges = _diagram(t)
    r = t.rank
    # Root Gram matrix: 2 d_i on the diagonal, -max(d_i, d_j) on a bond.
    gram = [[0] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = 2 * lengths[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j])
    cartan = tuple(tuple(gram[i][j] // lengths[j] for j in range(r)) for i in range(r))
    d = tuple(Fraction(x) for x in lengths)
    inv = _inverse(cartan)
    # (lambda_i, lambda_j) = (C^-1)_{ij} d_j
    fgram = tuple(tuple(inv[i][j] * d[j] for j in range(r)) for i in range(r))
    return CartanData(t, cartan, d, inv, fgram)


@functools.lru_cache(maxsize=None)
def cartan_data(t: LieType) -> CartanData:
    """Memoized :func:`build_cartan`."""
    return build_cartan(t)


def _check_rank(v: Vector, cd: CartanData) -> None:
    if v.rank != cd.rank:
        raise ValueError(f"dimension mismatch: vector of length {v.rank} for rank-{cd.rank} Cartan data")


def to_labels(v: Vector, cd: CartanData) -> WeightVector:
    """Dynkin labels of ``v``; a root vector ``m`` has labels ``m^T C``."""
    _check_rank(v, cd)
    if isinstance(v, WeightVector):
        return v
    r = cd.rank
    m = v.coeffs
    return WeightVector(tuple(sum(m[i] * cd.cartan[i][k] for i in range(r)) for k in range(r)))


def to_root_coords(v: Vector, cd: CartanData) -> tuple[Fraction, ...]:
    """Simple-root coordinates ``a^T C^-1`` (rational in general)."""
    _check_rank(v, cd)
    if isinstance(v, RootVector):
        return tuple(Fraction(c) for c in v.coeffs)
    r = cd.rank
    a = v.labels
    return tuple(sum((a[i] * cd.inverse_cartan[i][k] for i in range(r)), Fraction(0)) for k in range(r))


def weight_to_root(v: WeightVector, cd: CartanData) -> RootVector:
    """Integral root-basis form of a weight that lies in the root lattice."""
    coords = to_root_coords(v, cd)
    if any(c.denominator != 1 for c in coords):
        raise ValueError(f"weight {v} is not in the root lattice")
    return RootVector(tuple(int(c) for c in coords))


def fundamental_weight(i: int, cd: CartanData) -> WeightVector:
    """``lambda_i`` (1-based)."""
    if not 1 <= i <= cd.rank:
        raise IndexError(f"index {i} out of range 1..{cd.rank}")
    return WeightVector(tuple(int(k == i - 1) for k in range(cd.rank)))


def simple_root(i: int, cd: CartanData) -> RootVector:
    """``alpha_i`` (1-based)."""
    if not 1 <= i <= cd.rank:
        raise IndexError(f"index {i} out of range 1..{cd.rank}")
    return RootVector(tuple(int(k == i - 1) for k in range(cd.rank)))


def sym_product(x: Vector, y: Vector, cd: CartanData) -> Fraction:
    """The invariant symmetric form ``(x, y)``; either basis is accepted."""
    _check_rank(x, cd)
    _check_rank(y, cd)
    r = cd.rank
    if isinstance(x, WeightVector) and isinstance(y, RootVector):
        x, y = y, x
    if isinstance(x, RootVector) and isinstance(y, RootVector):
        b = cd.root_gram
        m, n = x.coeffs, y.coeffs
        return sum((m[i] * b[i][j] * n[j] for i in range(r) for j in range(r) if m[i] and n[j]), Fraction(0))
    if isinstance(x, RootVector):
        # (alpha_j, lambda_k) = delta_jk d_j
        return sum((x.coeffs[j] * y.labels[j] * cd.symmetrizer[j] for j in range(r)), Fraction(0))
    g = cd.fundamental_gram
    a, b2 = x.labels, y.labels
    return sum((a[i] * g[i][j] * b2[j] for i in range(r) for j in range(r) if a[i] and b2[j]), Fraction(0))


def pairing(lam: Vector, alpha: Vector, cd: CartanData) -> Fraction:
    """The non-symmetric product ``<lam, alpha> = 2 (lam, alpha) / (alpha, alpha)``."""
    norm = sym_product(alpha, alpha, cd)
    if norm == 0:
        raise ValueError("pairing is undefined for alpha = 0")
    return 2 * sym_product(lam, alpha, cd) / norm
