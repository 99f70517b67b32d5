"""Special roots and special weights.

For a fundamental weight ``lambda_i`` the candidate set ``Gamma(i)+`` holds the
non-negative root-lattice vectors ``gamma`` with
``(lambda_i, gamma) = (gamma, gamma) / 2``, the zero vector included. A Weyl
element ``w`` gives the special roots ``gamma_w(i) = lambda_i - w(lambda_i)``
and the special weights ``Lambda_w(i) = w(lambda_i)``.

Two routes to the tuples ``(gamma(1), ..., gamma(r))`` are provided and
compared by :func:`verify_conjecture2`:

* from the group: :func:`special_root_table` over :func:`~.weyl.enumerate_group`;
* without the group: :func:`solve_gram_tuples`, a pruned search for tuples
  whose special weights have the Gram matrix of the fundamental weights.

Conjecture failures are data (report entries with witnesses), not exceptions.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .lie import (
    CartanData,
    LieType,
    RootVector,
    WeightVector,
    cartan_data,
    fundamental_weight,
    sym_product,
    to_labels,
    to_root_coords,
)
from .weyl import (
    DEFAULT_MAX_ELEMENTS,
    WeylGroup,
    WeylWord,
    apply_word,
    enumerate_group,
    orbit,
)

__all__ = [
    "DEFAULT_TUPLE_BUDGET",
    "TupleBudgetError",
    "GammaSet",
    "SpecialRootTable",
    "gamma_set",
    "gamma_search_box",
    "special_roots_of",
    "special_root_table",
    "solve_gram_tuples",
    "gram_pair_holds",
    "gram_expansion_holds",
    "Conjecture1Entry",
    "Conjecture1Report",
    "Conjecture2Report",
    "verify_conjecture1",
    "verify_conjecture2",
    "LevelAudit",
    "level_formula_audit",
]

DEFAULT_TUPLE_BUDGET = 10**7


class TupleBudgetError(RuntimeError):
    def __init__(self, lie_type: LieType, bound: int, budget: int):
        self.bound = bound
        self.budget = budget
        super().__init__(
            f"Gram-tuple search for {lie_type.name} spans a product of {bound} candidate tuples, "
            f"above the budget of {budget}"
        )


@dataclass(frozen=True)
class GammaSet:
    index: int
    members: tuple[RootVector, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in self._lookup

    @functools.cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)


Tuple = tuple[RootVector, ...]


@dataclass(frozen=True)
class SpecialRootTable:
    lie_type: LieType
    rows: tuple[tuple[WeylWord, Tuple], ...]

    def __len__(self) -> int:
        return len(self.rows)

    def special_weights(self, row: int) -> tuple[WeightVector, ...]:
        """``Lambda_A(i) = lambda_i - gamma_A(i)`` as Dynkin labels, for 0-based row ``A``."""
        cd = cartan_data(self.lie_type)
        _, gammas = self.rows[row]
        return tuple(fundamental_weight(i + 1, cd) - to_labels(g, cd) for i, g in enumerate(gammas))


# -- Gamma(i)+ -------------------------------------------------------------


def gamma_search_box(i: int, cd: CartanData) -> tuple[int, ...]:
    """Upper bounds on each coefficient ``m_j`` of a member of ``Gamma(i)+``.

    ``(lambda_i, gamma) = |gamma|^2 / 2`` and Cauchy-Schwarz give
    ``|gamma| <= 2 |lambda_i|``; then ``m_j d_j = (gamma, lambda_j) <= 2 |lambda_i| |lambda_j|``.
    """
    g = cd.fundamental_gram
    out = []
    for j in range(cd.rank):
        x = 4 * g[i - 1][i - 1] * g[j][j] / (cd.symmetrizer[j] ** 2)
        out.append(math.isqrt(math.floor(x)))
    return tuple(out)


def _pohst_form(a: Sequence[Sequence[Fraction]]):
    """Rewrite ``y^T A y`` as ``sum_k q[k][k] (y_k + sum_{l>k} q[k][l] y_l)^2``."""
    n = len(a)
    q = [[Fraction(x) for x in row] for row in a]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _sphere_points(cd: CartanData, center: Sequence[Fraction], radius2: Fraction, box: Sequence[int]):
    """Integer points ``0 <= x <= box`` with ``|x - center|^2 == radius2`` (root Gram form)."""
    n = cd.rank
    q = _pohst_form(cd.root_gram)
    x = [0] * n
    y = [Fraction(0)] * n
    found = []

    def visit(k: int, remaining: Fraction) -> None:
        mid = center[k] - sum((q[k][l] * y[l] for l in range(k + 1, n)), Fraction(0))
        qk = q[k][k]

        def take(v: int) -> bool:
            rest = remaining - qk * (v - mid) ** 2
            if rest < 0:
                return False
            x[k] = v
            y[k] = v - center[k]
            if k == 0:
                if rest == 0:
                    found.append(tuple(x))
            else:
                visit(k - 1, rest)
            return True

        start = math.floor(mid)
        v = min(start, box[k])
        while v >= 0 and take(v):
            v -= 1
        v = max(start + 1, 0)
        while v <= box[k] and take(v):
            v += 1

    visit(n - 1, Fraction(radius2))
    return found


def gamma_set(i: int, t: LieType) -> GammaSet:
    """``Gamma(i)+``: exact enumeration over the Cauchy-Schwarz box.

    Members satisfy ``|lambda_i - gamma|^2 = |lambda_i|^2``, so the search is
    for box points on a sphere, pruned level by level on the partial norm.
    """
    cd = cartan_data(t)
    if not 1 <= i <= cd.rank:
        raise IndexError(f"index {i} out of range 1..{cd.rank}")
    lam = fundamental_weight(i, cd)
    center = to_root_coords(lam, cd)
    pts = _sphere_points(cd, center, cd.fundamental_gram[i - 1][i - 1], gamma_search_box(i, cd))
    members = sorted((RootVector(p) for p in pts), key=RootVector.sort_key)
    return GammaSet(i, tuple(members))


# -- special roots from Weyl elements --------------------------------------


class _LabelsToRoots:
    """Integer-only conversion of root-lattice Dynkin labels to root coordinates."""

    def __init__(self, cd: CartanData):
        den = 1
        for row in cd.inverse_cartan:
            for x in row:
                den = den * x.denominator // math.gcd(den, x.denominator)
        self.den = den
        self.adj = [[int(x * den) for x in row] for row in cd.inverse_cartan]
        self.r = cd.rank

    def __call__(self, labels: Sequence[int]) -> RootVector:
        r = self.r
        out = []
        for k in range(r):
            s = sum(labels[p] * self.adj[p][k] for p in range(r))
            q, rem = divmod(s, self.den)
            if rem:
                raise ValueError(f"labels {tuple(labels)} are not in the root lattice")
            out.append(q)
        return RootVector(tuple(out))


def _gammas_from_images(images, conv: _LabelsToRoots) -> Tuple:
    r = len(images)
    return tuple(conv(tuple(int(p == j) - images[j][p] for p in range(r))) for j in range(r))


def special_roots_of(w: WeylWord, t: LieType) -> Tuple:
    """``(lambda_i - w(lambda_i))_i`` in the simple-root basis."""
    cd = cartan_data(t)
    if not isinstance(w, WeylWord):
        w = WeylWord(tuple(w))
    conv = _LabelsToRoots(cd)
    images = tuple(apply_word(w, fundamental_weight(i, cd), cd).labels for i in range(1, cd.rank + 1))
    return _gammas_from_images(images, conv)


def special_root_table(
    t: LieType, group: Optional[WeylGroup] = None, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> SpecialRootTable:
    """One row ``(Sigma_A, R(A))`` per Weyl element, in ShortLex enumeration order."""
    if group is None:
        group = enumerate_group(t, max_elements)
    conv = _LabelsToRoots(cartan_data(t))
    rows = tuple((w, _gammas_from_images(img, conv)) for w, img in zip(group.elements, group.images))
    return SpecialRootTable(t, rows)


# -- Gram-condition search --------------------------------------------------


def gram_pair_holds(i: int, j: int, gi: RootVector, gj: RootVector, cd: CartanData) -> bool:
    """``(lambda_i - gi, lambda_j - gj) == (lambda_i, lambda_j)`` (1-based indices)."""
    li, lj = fundamental_weight(i, cd), fundamental_weight(j, cd)
    lhs = sym_product(li - to_labels(gi, cd), lj - to_labels(gj, cd), cd)
    return lhs == cd.fundamental_gram[i - 1][j - 1]


def gram_expansion_holds(i: int, j: int, gi: RootVector, gj: RootVector, cd: CartanData) -> bool:
    """``(lambda_i, gj) + (lambda_j, gi) == (gi, gj)``, the expanded pair condition."""
    li, lj = fundamental_weight(i, cd), fundamental_weight(j, cd)
    return sym_product(li, gj, cd) + sym_product(lj, gi, cd) == sym_product(gi, gj, cd)


def _tuple_key(tup: Tuple):
    return tuple(g.sort_key() for g in tup)


def solve_gram_tuples(t: LieType, budget: int = DEFAULT_TUPLE_BUDGET) -> list[Tuple]:
    """All ``(gamma(1), ..., gamma(r))`` with ``gamma(i)`` in ``Gamma(i)+`` and equal Gram matrices.

    Depth-first over positions ``1..r``; a candidate is rejected as soon as it
    fails the pair condition against any already chosen position. Does not
    consult the Weyl group.
    """
    cd = cartan_data(t)
    r = cd.rank
    sets = [gamma_set(i, t).members for i in range(1, r + 1)]
    bound = math.prod(len(s) for s in sets)
    if bound > budget:
        raise TupleBudgetError(t, bound, budget)
    g = cd.fundamental_gram
    # Special-weight labels and their images under the Gram matrix, per candidate.
    weights = []
    gweights = []
    for i, cands in enumerate(sets):
        ws, gws = [], []
        for gam in cands:
            lab = to_labels(gam, cd).labels
            lw = tuple(int(k == i) - lab[k] for k in range(r))
            ws.append(lw)
            gws.append(tuple(sum((g[k][p] * lw[p] for p in range(r) if lw[p]), Fraction(0)) for k in range(r)))
        weights.append(ws)
        gweights.append(gws)

    out: list[Tuple] = []
    chosen: list[int] = []

    def visit(j: int) -> None:
        if j == r:
            out.append(tuple(sets[i][c] for i, c in enumerate(chosen)))
            return
        for c, lw in enumerate(weights[j]):
            if all(
                sum(gweights[i][ci][p] * lw[p] for p in range(r) if lw[p]) == g[i][j]
                for i, ci in enumerate(chosen)
            ):
                chosen.append(c)
                visit(j + 1)
                chosen.pop()

    visit(0)
    out.sort(key=_tuple_key)
    return out


# -- conjecture checks -----------------------------------------------------


@dataclass(frozen=True)
class Conjecture1Entry:
    index: int
    gamma_size: int
    orbit_size: int
    # members of Gamma(i)+ whose Dynkin labels coincide with an orbit element
    overlap: tuple[RootVector, ...] = ()
    # members gamma with lambda_i - gamma outside the orbit
    unmatched: tuple[RootVector, ...] = ()

    @property
    def passed(self) -> bool:
        return self.gamma_size == self.orbit_size and not self.overlap


@dataclass(frozen=True)
class Conjecture1Report:
    lie_type: LieType
    entries: tuple[Conjecture1Entry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(e.gamma_size for e in self.entries)


def verify_conjecture1(t: LieType) -> Conjecture1Report:
    """``|Gamma(i)+| == |W(lambda_i)|`` and the two sets are disjoint, for each ``i``."""
    cd = cartan_data(t)
    entries = []
    for i in range(1, cd.rank + 1):
        gs = gamma_set(i, t)
        orb = {v.labels for v in orbit(fundamental_weight(i, cd), cd)}
        lam = fundamental_weight(i, cd)
        overlap = []
        unmatched = []
        for gam in gs.members:
            lab = to_labels(gam, cd)
            if lab.labels in orb:
                overlap.append(gam)
            if (lam - lab).labels not in orb:
                unmatched.append(gam)
        entries.append(Conjecture1Entry(i, len(gs), len(orb), tuple(overlap), tuple(unmatched)))
    return Conjecture1Report(t, tuple(entries))


@dataclass(frozen=True)
class Conjecture2Report:
    lie_type: LieType
    group_order: int
    solver_count: int
    # (word, index, gamma) with gamma outside Gamma(index)+
    membership_failures: tuple[tuple[WeylWord, int, RootVector], ...] = ()
    # pairs of distinct elements sharing one tuple
    collisions: tuple[tuple[WeylWord, WeylWord], ...] = ()
    # group tuples the solver did not find, and solver tuples no element produces
    missing_from_solver: tuple[Tuple, ...] = ()
    extra_in_solver: tuple[Tuple, ...] = ()

    @property
    def injective(self) -> bool:
        return not self.collisions

    @property
    def surjective(self) -> bool:
        """Every Gram-condition tuple comes from some Weyl element."""
        return not self.extra_in_solver

    @property
    def passed(self) -> bool:
        return (
            not self.membership_failures
            and self.injective
            and self.surjective
            and not self.missing_from_solver
            and self.solver_count == self.group_order
        )


def verify_conjecture2(
    t: LieType,
    group: Optional[WeylGroup] = None,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> Conjecture2Report:
    """Compare the group route with the Gram-condition search.

    Checks that each element's special roots lie in the ``Gamma`` sets, that
    distinct elements give distinct tuples, and that the two tuple sets agree.
    """
    table = special_root_table(t, group, max_elements)
    gsets = [set(gamma_set(i, t).members) for i in range(1, t.rank + 1)]
    membership = []
    first_word: dict[Tuple, WeylWord] = {}
    collisions = []
    for w, gammas in table.rows:
        for i, gam in enumerate(gammas):
            if gam not in gsets[i]:
                membership.append((w, i + 1, gam))
        if gammas in first_word:
            collisions.append((first_word[gammas], w))
        else:
            first_word[gammas] = w
    solved = solve_gram_tuples(t, budget)
    solved_set = set(solved)
    missing = sorted((tup for tup in first_word if tup not in solved_set), key=_tuple_key)
    extra = [tup for tup in solved if tup not in first_word]
    return Conjecture2Report(
        lie_type=t,
        group_order=len(table),
        solver_count=len(solved),
        membership_failures=tuple(membership),
        collisions=tuple(collisions),
        missing_from_solver=tuple(missing),
        extra_in_solver=tuple(extra),
    )


# -- level formula ---------------------------------------------------------


@dataclass(frozen=True)
class LevelAudit:
    """Outcome of testing ``(gamma(i), gamma(j)) == (s_i + s_j) / 2`` over a table.

    The level ``s`` of ``gamma(i)`` is its ``i``-th simple-root coefficient,
    which for ``A_r`` is the number of positive ``mu`` terms in its closed form.
    """

    lie_type: LieType
    pairs_checked: int
    pairs_passed: int
    rows_checked: int
    rows_passed: int
    # rows where the Gram condition itself fails; expected empty
    gram_failures: tuple[int, ...] = ()
    # (row, i, j, (gamma_i, gamma_j), (s_i + s_j) / 2) for the first failures
    counterexamples: tuple[tuple[int, int, int, Fraction, Fraction], ...] = field(default=())

    @property
    def pairs_failed(self) -> int:
        return self.pairs_checked - self.pairs_passed


def level_formula_audit(table: SpecialRootTable, max_examples: int = 10) -> LevelAudit:
    """Tally the level formula over pairs ``i < j`` of every row.

    Levels start at 1, so only pairs with both roots nonzero enter the tally.
    The Gram condition is re-checked on every pair so the audit shows the two
    statements side by side.
    """
    cd = cartan_data(table.lie_type)
    r = cd.rank
    checked = passed = rows_passed = 0
    gram_failures = []
    examples = []
    for a, (_, gammas) in enumerate(table.rows, start=1):
        row_ok = True
        gram_ok = True
        for i in range(r):
            for j in range(i + 1, r):
                gi, gj = gammas[i], gammas[j]
                if not gram_pair_holds(i + 1, j + 1, gi, gj, cd):
                    gram_ok = False
                if gi.is_zero() or gj.is_zero():
                    continue
                lhs = sym_product(gi, gj, cd)
                rhs = Fraction(gi.coeffs[i] + gj.coeffs[j], 2)
                checked += 1
                if lhs == rhs:
                    passed += 1
                else:
                    row_ok = False
                    if len(examples) < max_examples:
                        examples.append((a, i + 1, j + 1, lhs, rhs))
        rows_passed += row_ok
        if not gram_ok:
            gram_failures.append(a)
    return LevelAudit(table.lie_type, checked, passed, len(table.rows), rows_passed, tuple(gram_failures), tuple(examples))
