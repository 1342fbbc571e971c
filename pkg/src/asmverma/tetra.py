"""
The tetrahedral poset and its identification with bigrassmannian permutations.

A point ``(i, j, g)`` lives over the grid cell ``(i, j)`` of
``{1..n-1}^2``; over that cell there are ``d(i, j) + 1`` points, where
``d(i, j) = min(i, j, n-i, n-j) - 1``, in degrees
``g = (n-1)(n-2)/2 + |i-j| + 2k`` for ``0 <= k <= d(i, j)``.

Bigrassmannians are matched with points through the corner-sum signature of
their permutation matrix: a join-irreducible ASM differs from its unique lower
cover in one corner-sum cell ``(k, l)`` where it holds the value ``r``; the
point is ``(l, k, base + |k-l| + 2 (min(k, l) - 1 - r))``.

>>> ji_to_tetra(Permutation((2, 1, 3)))
TetraPoint(i=1, j=1, g=1)
>>> tetra_to_ji(TetraPoint(2, 2, 5), 4)
Permutation([3, 4, 1, 2])
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .asm import Asm, _from_corner_array, asm_lower_covers, embed_permutation
from .errors import InputError
from .perm import Permutation, bigrassmannians, bruhat_leq_matrix, is_bigrassmannian
from .poset import FinitePoset

__all__ = [
    "TetraPoint",
    "base_degree",
    "layer_depth",
    "degree",
    "tetra_points",
    "build_tetra",
    "ji_poset",
    "ji_asm_signature",
    "ji_to_tetra",
    "tetra_to_ji",
]


@dataclass(frozen=True, order=True)
class TetraPoint:
    i: int
    j: int
    g: int

    def layer(self, n: int) -> int:
        """The layer index ``k`` with ``g == degree(n, i, j, k)``."""
        k, rem = divmod(self.g - base_degree(n) - abs(self.i - self.j), 2)
        if rem or not 0 <= k <= layer_depth(n, self.i, self.j):
            raise InputError(f"{self} is not a point of Tetr_{n}")
        return k

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "g": self.g}

    @classmethod
    def from_json(cls, data) -> TetraPoint:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["i"]), int(data["j"]), int(data["g"]))

    def __str__(self):
        return f"({self.i},{self.j},{self.g})"


def base_degree(n: int) -> int:
    return (n - 1) * (n - 2) // 2


def layer_depth(n: int, i: int, j: int) -> int:
    return min(i, j, n - i, n - j) - 1


def degree(n: int, i: int, j: int, k: int) -> int:
    return base_degree(n) + abs(i - j) + 2 * k


def tetra_points(n: int) -> list[TetraPoint]:
    if n < 2:
        raise InputError("Tetr_n needs n >= 2")
    return sorted(
        TetraPoint(i, j, degree(n, i, j, k))
        for i in range(1, n)
        for j in range(1, n)
        for k in range(layer_depth(n, i, j) + 1)
    )


@lru_cache(maxsize=None)
def build_tetra(n: int) -> FinitePoset:
    """``Tetr_n`` ordered by the closure of the unit steps ``(i±1, j, g+1)``, ``(i, j±1, g+1)``."""
    points = tetra_points(n)
    present = set(points)
    steps = []
    for p in points:
        for q in (
            TetraPoint(p.i + 1, p.j, p.g + 1),
            TetraPoint(p.i - 1, p.j, p.g + 1),
            TetraPoint(p.i, p.j + 1, p.g + 1),
            TetraPoint(p.i, p.j - 1, p.g + 1),
        ):
            if q in present:
                steps.append((p, q))
    poset = FinitePoset.from_relations(points, steps)
    assert len(poset) == math.comb(n + 1, 3)
    return poset


@lru_cache(maxsize=None)
def ji_poset(n: int) -> FinitePoset:
    """Bigrassmannian permutations of S_n under Bruhat order."""
    perms = bigrassmannians(n)
    return FinitePoset.from_matrix(perms, bruhat_leq_matrix(perms), check=False)


def ji_asm_signature(a: Asm) -> tuple[int, int, int]:
    """``(k, l, r)`` for a join-irreducible ASM: its unique lower cover raises ``C[k, l]`` from ``r``."""
    covers = asm_lower_covers(a)
    if len(covers) != 1:
        raise InputError(f"ASM has {len(covers)} lower covers, so it is not join-irreducible")
    _, (k, l) = covers[0]
    return k, l, int(a.corner[k - 1, l - 1])


def ji_to_tetra(w: Permutation) -> TetraPoint:
    if not is_bigrassmannian(w):
        raise InputError(f"{w} is not bigrassmannian")
    k, l, r = ji_asm_signature(embed_permutation(w))
    return TetraPoint(l, k, degree(w.n, k, l, min(k, l) - 1 - r))


def tetra_to_ji(p: TetraPoint, n: int) -> Permutation:
    """The bigrassmannian ``w`` with ``ji_to_tetra(w) == p``.

    It is the Bruhat-minimal permutation whose corner sum at ``(k, l) = (j, i)``
    is at most ``r``; its corner sums are the largest ones compatible with that.
    """
    k, l = p.j, p.i
    r = min(k, l) - 1 - p.layer(n)
    a = np.arange(1, n + 1)
    rows, cols = np.meshgrid(a, a, indexing="ij")
    corner = np.minimum(
        np.minimum(rows, cols),
        r + np.maximum(0, rows - k) + np.maximum(0, cols - l),
    )
    return _from_corner_array(corner).to_permutation()
