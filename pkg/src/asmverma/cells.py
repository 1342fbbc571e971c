"""Robinson-Schensted insertion, two-sided cells by shape, and the penultimate cell grid."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import InputError
from .perm import Permutation, enumerate_sn, left_ascents, right_ascents

__all__ = [
    "Partition",
    "TableauPair",
    "rsk",
    "cell_shape",
    "hook_shape",
    "GridElement",
    "penultimate_cell",
    "grid",
    "two_sided_cells_by_shape",
]

Partition = tuple[int, ...]


@dataclass(frozen=True)
class TableauPair:
    """Insertion and recording tableaux, rows as tuples."""

    insertion: tuple[tuple[int, ...], ...]
    recording: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.insertion)


def rsk(w: Permutation) -> TableauPair:
    """Row insertion of ``w(1), ..., w(n)``."""
    ins: list[list[int]] = []
    rec: list[list[int]] = []
    for step, value in enumerate(w.image, start=1):
        row = 0
        while True:
            if row == len(ins):
                ins.append([value])
                rec.append([step])
                break
            r = ins[row]
            pos = bisect_right(r, value)
            if pos == len(r):
                r.append(value)
                rec[row].append(step)
                break
            r[pos], value = value, r[pos]
            row += 1
    return TableauPair(tuple(map(tuple, ins)), tuple(map(tuple, rec)))


def cell_shape(w: Permutation) -> Partition:
    return rsk(w).shape


def hook_shape(n: int) -> Partition:
    """``(2, 1, ..., 1)``, the shape of the penultimate cell."""
    if n < 2:
        raise InputError("the penultimate cell needs n >= 2")
    return (2,) + (1,) * (n - 2)


@dataclass(frozen=True, order=True)
class GridElement:
    """An element ``z`` of the penultimate cell with left ascent ``{s_i}`` and right ascent ``{s_j}``."""

    i: int
    j: int
    z: Permutation


def penultimate_cell(n: int) -> list[GridElement]:
    shape = hook_shape(n)
    out = []
    for w in enumerate_sn(n):
        if cell_shape(w) != shape:
            continue
        la, ra = left_ascents(w), right_ascents(w)
        if len(la) != 1 or len(ra) != 1:
            raise AssertionError(f"{w} has hook shape but ascents {sorted(la)}, {sorted(ra)}")
        out.append(GridElement(next(iter(la)), next(iter(ra)), w))
    return sorted(out)


def grid(n: int) -> dict[tuple[int, int], Permutation]:
    """``(i, j) -> z`` over the penultimate cell."""
    cells = {}
    for g in penultimate_cell(n):
        if (g.i, g.j) in cells:
            raise AssertionError(f"grid cell {(g.i, g.j)} is hit twice")
        cells[(g.i, g.j)] = g.z
    return cells


def two_sided_cells_by_shape(n: int) -> dict[Partition, list[Permutation]]:
    cells: dict[Partition, list[Permutation]] = {}
    for w in enumerate_sn(n):
        cells.setdefault(cell_shape(w), []).append(w)
    return cells
