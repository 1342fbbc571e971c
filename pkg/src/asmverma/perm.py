"""
Permutations of ``{1, ..., n}`` as elements of the Coxeter group S_n.

Conventions used throughout the package:

* one-line notation, ``image[p - 1] == w(p)``;
* composition ``(x * y)(p) == x(y(p))``, so ``w * s_i`` swaps the entries in
  positions ``i, i+1`` and ``s_i * w`` swaps the values ``i, i+1``;
* the permutation matrix has ``A[i, j] == 1`` iff ``w(i) == j`` (1-based);
* Bruhat order: ``x <= y`` iff every corner sum of ``x`` is ``>=`` the
  matching corner sum of ``y`` (so the identity has the largest corner sums).

>>> w = Permutation.parse("3 1 2")
>>> length(w), sorted(right_descents(w)), sorted(left_descents(w))
(2, [1], [2])
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError, ResourceLimitError

__all__ = [
    "Permutation",
    "MAX_ENUMERATE_N",
    "MAX_COVERS_N",
    "identity",
    "longest",
    "simple_reflection",
    "length",
    "right_descents",
    "left_descents",
    "right_ascents",
    "left_ascents",
    "permutation_matrix",
    "corner_sum_matrix_of_perm",
    "bruhat_leq",
    "bruhat_leq_matrix",
    "is_bigrassmannian",
    "bigrassmannians",
    "enumerate_sn",
    "bruhat_covers",
]

MAX_ENUMERATE_N = 8
MAX_COVERS_N = 6


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n in one-line notation (values ``1..n``)."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        if not image:
            raise InputError("a permutation needs at least one letter")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise InputError(f"{list(image)} is not a permutation of 1..{len(image)}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, p: int) -> int:
        return self.image[p - 1]

    def __len__(self):
        return len(self.image)

    def __mul__(self, other: Permutation) -> Permutation:
        _check_same_n(self, other)
        return Permutation(tuple(self.image[v - 1] for v in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for p, v in enumerate(self.image, start=1):
            inv[v - 1] = p
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == p for p, v in enumerate(self.image, start=1))

    def swap_positions(self, i: int) -> Permutation:
        """``w * s_i``."""
        img = list(self.image)
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation(tuple(img))

    def swap_values(self, i: int) -> Permutation:
        """``s_i * w``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.image))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse space-separated one-line notation, e.g. ``"3 1 2"``."""
        try:
            values = tuple(int(tok) for tok in text.replace(",", " ").split())
        except ValueError as exc:
            raise InputError(f"cannot parse permutation {text!r}") from exc
        return cls(values)

    @classmethod
    def from_json(cls, data) -> Permutation:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise InputError("permutation JSON must be an array of integers")
        return cls(tuple(data))

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.image)

    def to_json(self) -> list[int]:
        return list(self.image)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Permutation({list(self.image)})"


def _check_same_n(x: Permutation, y: Permutation):
    if x.n != y.n:
        raise InputError(f"permutations of different sizes ({x.n} vs {y.n})")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def simple_reflection(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise InputError(f"simple reflection s_{i} does not exist in S_{n}")
    return identity(n).swap_positions(i)


def length(w: Permutation) -> int:
    """Coxeter length, computed as the number of inversions."""
    img = w.image
    return sum(1 for p, q in itertools.combinations(range(len(img)), 2) if img[p] > img[q])


def right_descents(w: Permutation) -> frozenset[int]:
    """Indices ``i`` with ``w(i) > w(i+1)``, i.e. ``l(w s_i) < l(w)``."""
    img = w.image
    return frozenset(i for i in range(1, w.n) if img[i - 1] > img[i])


def left_descents(w: Permutation) -> frozenset[int]:
    """Indices ``i`` such that ``i + 1`` stands left of ``i`` in one-line notation."""
    return right_descents(w.inverse())


def right_ascents(w: Permutation) -> frozenset[int]:
    return frozenset(range(1, w.n)) - right_descents(w)


def left_ascents(w: Permutation) -> frozenset[int]:
    return frozenset(range(1, w.n)) - left_descents(w)


def permutation_matrix(w: Permutation) -> np.ndarray:
    a = np.zeros((w.n, w.n), dtype=np.int64)
    a[np.arange(w.n), np.asarray(w.image) - 1] = 1
    return a


@lru_cache(maxsize=None)
def _corner_sums(image: tuple[int, ...]) -> np.ndarray:
    c = permutation_matrix(Permutation(image)).cumsum(axis=0).cumsum(axis=1)
    c.setflags(write=False)
    return c


def corner_sum_matrix_of_perm(w: Permutation) -> np.ndarray:
    """``C[k-1, l-1] = #{i <= k : w(i) <= l}`` as a read-only array."""
    return _corner_sums(w.image)


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    _check_same_n(x, y)
    return bool(np.all(_corner_sums(x.image) >= _corner_sums(y.image)))


def bruhat_leq_matrix(perms: list[Permutation]) -> np.ndarray:
    """Boolean matrix ``M[a, b] = bruhat_leq(perms[a], perms[b])``."""
    if not perms:
        return np.zeros((0, 0), dtype=bool)
    stack = np.stack([_corner_sums(w.image).ravel() for w in perms])
    return np.all(stack[:, None, :] >= stack[None, :, :], axis=2)


def is_bigrassmannian(w: Permutation) -> bool:
    return len(left_descents(w)) == 1 and len(right_descents(w)) == 1


def enumerate_sn(n: int, max_n: int = MAX_ENUMERATE_N) -> list[Permutation]:
    """All of S_n in lexicographic one-line order."""
    if n < 1:
        raise InputError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(f"enumerating S_{n} exceeds the bound n <= {max_n}")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def bigrassmannians(n: int) -> list[Permutation]:
    """Bigrassmannian elements of S_n, in lexicographic order."""
    return [w for w in enumerate_sn(n) if is_bigrassmannian(w)]


def bruhat_covers(n: int, max_n: int = MAX_COVERS_N) -> list[tuple[Permutation, Permutation]]:
    """Cover pairs ``(x, y)``: ``x < y`` and ``l(y) == l(x) + 1``."""
    if n > max_n:
        raise ResourceLimitError(f"Bruhat covers of S_{n} exceed the bound n <= {max_n}")
    perms = enumerate_sn(n)
    lengths = [length(w) for w in perms]
    leq = bruhat_leq_matrix(perms)
    return [
        (perms[a], perms[b])
        for a, b in zip(*np.nonzero(leq))
        if lengths[b] == lengths[a] + 1
    ]
