"""
Intersections of Verma submodules of the dominant Verma module, modeled combinatorially.

An intersection ``M = Delta_{x_1} ∩ ... ∩ Delta_{x_r}`` is stored as the order
ideal of bigrassmannians below some ``x_k``; its maximal elements (the
generators) label the socle of ``Delta_e / M``.  Larger ideals are smaller
submodules, and ``verma_leq`` compares ideals by inclusion, so
``from_permutation`` is order-preserving for the Bruhat order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .asm import Asm, _from_corner_array, asm_leq, embed_permutation, enumerate_asm, identity_asm, meet
from .cells import grid
from .errors import InputError
from .perm import Permutation, bruhat_leq, corner_sum_matrix_of_perm
from .poset import FinitePoset, OrderIdeal, order_ideals
from .tetra import TetraPoint, ji_poset, ji_to_tetra

__all__ = [
    "VermaIntersection",
    "SocleLabel",
    "from_permutation",
    "from_generators",
    "intersect",
    "socle",
    "to_asm",
    "to_asm_via_ideal_lattice",
    "from_asm",
    "verma_leq",
    "verma_meet",
    "enumerate_verbar",
    "verbar_lattice",
]


@dataclass(frozen=True, order=True)
class SocleLabel:
    """A socle constituent ``L_z<degree>`` with ``z`` the grid element over ``(i, j)``."""

    i: int
    j: int
    degree: int
    z: Permutation

    @property
    def grid_cell(self) -> tuple[int, int]:
        return (self.i, self.j)

    def point(self) -> TetraPoint:
        return TetraPoint(self.i, self.j, self.degree)

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "g": self.degree}

    def __str__(self):
        return f"L_[{self.z}]<{self.degree}> at ({self.i},{self.j})"


@dataclass(frozen=True)
class VermaIntersection:
    """An element of the lattice of intersections, as an ideal of bigrassmannians of S_n."""

    n: int
    ideal: frozenset[Permutation]

    def __post_init__(self):
        ideal = frozenset(self.ideal)
        object.__setattr__(self, "ideal", ideal)
        jp = ji_poset(self.n)
        for b in ideal:
            if b not in jp:
                raise InputError(f"{b} is not a bigrassmannian of S_{self.n}")
            for below in jp.labels_of(jp.down[jp.index[b]]):
                if below not in ideal:
                    raise InputError(f"ideal is not down-closed: {below} < {b} is missing")

    @cached_property
    def generators(self) -> tuple[Permutation, ...]:
        jp = ji_poset(self.n)
        mask = jp.mask_of(self.ideal)
        return tuple(sorted(OrderIdeal(self.ideal, mask, jp).generators()))

    def order_ideal(self) -> OrderIdeal:
        jp = ji_poset(self.n)
        return OrderIdeal(self.ideal, jp.mask_of(self.ideal), jp)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [w.to_text() for w in self.generators],
            "socle": [lab.to_json() for lab in socle(self)],
        }

    @classmethod
    def from_json(cls, data) -> VermaIntersection:
        if isinstance(data, str):
            data = json.loads(data)
        gens = [Permutation.parse(text) for text in data["generators"]]
        return from_generators(int(data["n"]), gens)

    def __str__(self):
        if not self.ideal:
            return "Delta_e"
        return " ∩ ".join(f"Delta_[{w}]" for w in self.generators)


def from_generators(n: int, gens: Iterable[Permutation]) -> VermaIntersection:
    """Ideal generated by a set of bigrassmannians."""
    jp = ji_poset(n)
    mask = 0
    for w in gens:
        if w not in jp:
            raise InputError(f"{w} is not a bigrassmannian of S_{n}")
        mask |= jp.down[jp.index[w]]
    return VermaIntersection(n, frozenset(jp.labels_of(mask)))


def from_permutation(w: Permutation) -> VermaIntersection:
    """``Delta_w``: the bigrassmannians Bruhat-below ``w``."""
    return VermaIntersection(w.n, frozenset(b for b in ji_poset(w.n) if bruhat_leq(b, w)))


def intersect(ms: Iterable[VermaIntersection]) -> VermaIntersection:
    ms = list(ms)
    if not ms:
        raise InputError("the intersection of an empty family is not modeled")
    n = ms[0].n
    if any(m.n != n for m in ms):
        raise InputError("cannot intersect elements for different n")
    return VermaIntersection(n, frozenset().union(*(m.ideal for m in ms)))


@lru_cache(maxsize=None)
def _grid_cached(n: int):
    return grid(n)


def socle(m: VermaIntersection) -> list[SocleLabel]:
    """Socle of ``Delta_e / M``: one label per generator, sorted."""
    cells = _grid_cached(m.n) if m.n >= 2 else {}
    labels = []
    for w in m.generators:
        p = ji_to_tetra(w)
        labels.append(SocleLabel(p.i, p.j, p.g, cells[(p.i, p.j)]))
    return sorted(labels)


def to_asm(m: VermaIntersection) -> Asm:
    """Corner sums of the image are the entrywise minimum over the generators' corner sums."""
    if not m.generators:
        return identity_asm(m.n)
    corner = np.minimum.reduce([corner_sum_matrix_of_perm(w) for w in m.generators])
    return _from_corner_array(corner)


def from_asm(a: Asm) -> VermaIntersection:
    """The join-irreducible decomposition of ``a``: all bigrassmannians below it."""
    return VermaIntersection(a.n, frozenset(b for b in ji_poset(a.n) if asm_leq(embed_permutation(b), a)))


@lru_cache(maxsize=None)
def _ideal_to_asm(n: int) -> dict[frozenset, Asm]:
    table = {}
    for a in enumerate_asm(n):
        table[from_asm(a).ideal] = a
    return table


def to_asm_via_ideal_lattice(m: VermaIntersection) -> Asm:
    """Second route to :func:`to_asm`: look the ideal up in the Birkhoff image of ``ASM_n``."""
    return _ideal_to_asm(m.n)[m.ideal]


def verma_leq(m: VermaIntersection, other: VermaIntersection) -> bool:
    if m.n != other.n:
        raise InputError("cannot compare elements for different n")
    return m.ideal <= other.ideal


def verma_meet(m: VermaIntersection, other: VermaIntersection) -> VermaIntersection:
    """Meet computed through ``ASM_n``; it is not the sum of submodules."""
    return from_asm(meet(to_asm(m), to_asm(other)))


def enumerate_verbar(n: int) -> list[VermaIntersection]:
    """Every element, one per order ideal of the bigrassmannian poset."""
    return [VermaIntersection(n, i.members) for i in order_ideals(ji_poset(n)).ideals()]


def verbar_lattice(n: int) -> FinitePoset:
    elems = enumerate_verbar(n)
    return FinitePoset.from_leq(elems, verma_leq, check=False)
