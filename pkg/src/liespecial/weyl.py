"""Simple reflections, word actions, orbits and Weyl group enumeration.

A word ``(l1, ..., lk)`` denotes ``sigma_l1 sigma_l2 ... sigma_lk`` and acts
on weights rightmost letter first. Group elements are identified by their
action on the fundamental weights, and each element is stored as its
ShortLex normal form (shortest word, lexicographically least among those).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .lie import CartanData, LieType, WeightVector, cartan_data

__all__ = [
    "DEFAULT_MAX_ELEMENTS",
    "EnumerationCapError",
    "WeylWord",
    "WeylGroup",
    "reflect",
    "apply_word",
    "orbit",
    "enumerate_group",
    "group_order",
    "braid_order",
]

DEFAULT_MAX_ELEMENTS = 10**6

Images = tuple[tuple[int, ...], ...]


class EnumerationCapError(RuntimeError):
    """Raised when an enumeration would exceed the configured element cap."""

    def __init__(self, what: str, required: int, cap: int):
        self.required = required
        self.cap = cap
        super().__init__(f"{what} has {required} elements, above the cap of {cap}; raise the cap to at least {required} (--max-elements {required})")


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def parse(cls, text: str) -> WeylWord:
        """Read ``"121"``, ``"1.2.10"`` or ``"e"`` (the identity)."""
        text = text.strip()
        if text in ("", "e", "id"):
            return cls(())
        if "." in text or "," in text or " " in text:
            parts = text.replace(",", " ").replace(".", " ").split()
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(c) for c in text))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        sep = "" if max(self.letters) < 10 else "."
        return sep.join(str(c) for c in self.letters)


@dataclass(frozen=True)
class WeylGroup:
    lie_type: LieType
    elements: tuple[WeylWord, ...]
    # images[A][j] = Dynkin labels of elements[A](lambda_{j+1})
    images: tuple[Images, ...] = field(repr=False, compare=False, default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _check_index(i: int, cd: CartanData) -> None:
    if not 1 <= i <= cd.rank:
        raise IndexError(f"reflection index {i} out of range 1..{cd.rank}")


def _reflect_labels(a: tuple[int, ...], i: int, cartan) -> tuple[int, ...]:
    # 0-based i; a'_k = a_k - a_i C[i][k]
    ai = a[i]
    if ai == 0:
        return a
    row = cartan[i]
    return tuple(x - ai * c for x, c in zip(a, row))


def reflect(v: WeightVector, i: int, cd: CartanData) -> WeightVector:
    """``sigma_i(v) = v - <v, alpha_i> alpha_i`` on Dynkin labels (1-based ``i``)."""
    _check_index(i, cd)
    if v.rank != cd.rank:
        raise ValueError(f"dimension mismatch: {v.rank} != {cd.rank}")
    return WeightVector(_reflect_labels(v.labels, i - 1, cd.cartan))


def apply_word(w: WeylWord | Iterable[int], v: WeightVector, cd: CartanData) -> WeightVector:
    letters = w.letters if isinstance(w, WeylWord) else tuple(w)
    for i in letters:
        _check_index(i, cd)
    if v.rank != cd.rank:
        raise ValueError(f"dimension mismatch: {v.rank} != {cd.rank}")
    a = v.labels
    for i in reversed(letters):
        a = _reflect_labels(a, i - 1, cd.cartan)
    return WeightVector(a)


def orbit(v: WeightVector, cd: CartanData) -> tuple[WeightVector, ...]:
    """Weyl orbit of ``v``, sorted lexicographically on the labels."""
    if v.rank != cd.rank:
        raise ValueError(f"dimension mismatch: {v.rank} != {cd.rank}")
    seen = {v.labels}
    queue = deque([v.labels])
    while queue:
        a = queue.popleft()
        for i in range(cd.rank):
            b = _reflect_labels(a, i, cd.cartan)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return tuple(WeightVector(a) for a in sorted(seen))


_EXCEPTIONAL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def group_order(t: LieType) -> int:
    r = t.rank
    if t.family == "A":
        return math.factorial(r + 1)
    if t.family in "BC":
        return 2**r * math.factorial(r)
    if t.family == "D":
        return 2 ** (r - 1) * math.factorial(r)
    return _EXCEPTIONAL_ORDERS[t.name]


def braid_order(i: int, j: int, cd: CartanData) -> int:
    """Order of ``sigma_i sigma_j`` for ``i != j`` (1-based), from ``C_ij C_ji``."""
    _check_index(i, cd)
    _check_index(j, cd)
    if i == j:
        return 1
    return {0: 2, 1: 3, 2: 4, 3: 6}[cd.cartan[i - 1][j - 1] * cd.cartan[j - 1][i - 1]]


def identity_images(r: int) -> Images:
    return tuple(tuple(int(k == j) for k in range(r)) for j in range(r))


def right_multiply(images: Images, i: int, cartan) -> Images:
    """Images of the fundamental weights under ``w sigma_i`` given those under ``w`` (0-based ``i``).

    ``w sigma_i (lambda_i) = w(lambda_i) - sum_k C[i][k] w(lambda_k)``; the other
    fundamental weights are fixed by ``sigma_i``.
    """
    r = len(images)
    row = cartan[i]
    new = list(images[i])
    for k in range(r):
        c = row[k]
        if c:
            img = images[k]
            for p in range(r):
                new[p] -= c * img[p]
    out = list(images)
    out[i] = tuple(new)
    return tuple(out)


def enumerate_group(t: LieType, max_elements: int = DEFAULT_MAX_ELEMENTS) -> WeylGroup:
    """All elements of ``W(t)`` as ShortLex words, ordered by length then lex.

    Breadth-first from the identity, appending letters ``1..r`` in order to
    words that are themselves visited in ShortLex order; the first word to
    reach a new action is therefore its ShortLex normal form.
    """
    required = group_order(t)
    if required > max_elements:
        raise EnumerationCapError(f"W({t.name})", required, max_elements)
    cd = cartan_data(t)
    r = t.rank
    start = identity_images(r)
    words: list[tuple[int, ...]] = [()]
    images: list[Images] = [start]
    seen = {start}
    level = [0]
    while level:
        nxt = []
        for idx in level:
            w, img = words[idx], images[idx]
            for i in range(r):
                new = right_multiply(img, i, cd.cartan)
                if new not in seen:
                    seen.add(new)
                    words.append(w + (i + 1,))
                    images.append(new)
                    nxt.append(len(words) - 1)
        level = nxt
    return WeylGroup(t, tuple(WeylWord(w) for w in words), tuple(images))


def group_from_words(t: LieType, words: Iterable[WeylWord]) -> WeylGroup:
    """Rebuild a :class:`WeylGroup` (with images) from stored ShortLex words.

    Every prefix of a ShortLex normal form is again a normal form, so each
    image is one right multiplication away from an earlier one.
    """
    cd = cartan_data(t)
    words = tuple(words)
    by_word: dict[tuple[int, ...], Images] = {}
    images = []
    for w in words:
        if not w.letters:
            img = identity_images(t.rank)
        else:
            prefix = by_word.get(w.letters[:-1])
            if prefix is None:
                raise ValueError(f"word {w} appears before its prefix; not a ShortLex listing")
            img = right_multiply(prefix, w.letters[-1] - 1, cd.cartan)
        by_word[w.letters] = img
        images.append(img)
    if len(set(images)) != len(images):
        raise ValueError("two stored words act identically; not a list of normal forms")
    if any(a.sort_key() >= b.sort_key() for a, b in zip(words, words[1:])):
        raise ValueError("stored words are not in strictly increasing ShortLex order")
    return WeylGroup(t, words, tuple(images))
