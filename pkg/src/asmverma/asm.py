"""
Alternating sign matrices and the Bruhat order on them.

An ASM has three interchangeable encodings: the entry matrix (canonical, used
for equality and hashing), its corner-sum matrix ``C[k][l] = sum_{i<=k, j<=l}
A[i][j]`` and its monotone triangle.  ``A <= B`` iff ``C(A) >= C(B)``
entrywise, so the join takes the entrywise *minimum* of corner sums and the
meet the entrywise maximum.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ResourceLimitError
from .perm import Permutation, permutation_matrix
from .poset import FinitePoset

__all__ = [
    "Asm",
    "CornerSumMatrix",
    "MonotoneTriangle",
    "MAX_ASM_N",
    "validate_asm",
    "corner_sums",
    "asm_from_corner_sums",
    "monotone_triangle",
    "asm_from_triangle",
    "asm_leq",
    "join",
    "meet",
    "join_of_set",
    "meet_of_set",
    "enumerate_asm",
    "enumerate_asm_naive",
    "asm_count_product_formula",
    "asm_lattice",
    "asm_covers",
    "embed_permutation",
    "identity_asm",
    "asm_lower_covers",
]

MAX_ASM_N = 5


def _as_int_rows(entries) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in entries)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InputError("matrix must be square and non-empty")
    return rows


@dataclass(frozen=True)
class Asm:
    """An ``n x n`` alternating sign matrix; build it with :func:`validate_asm`."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @cached_property
    def corner(self) -> np.ndarray:
        c = self.array().cumsum(axis=0).cumsum(axis=1)
        c.setflags(write=False)
        return c

    def is_permutation(self) -> bool:
        return all(v >= 0 for row in self.entries for v in row)

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise InputError("ASM has a -1 entry, it is not a permutation matrix")
        return Permutation(tuple(row.index(1) + 1 for row in self.entries))

    def to_text(self) -> str:
        return "\n".join(" ".join(f"{v:2d}" for v in row) for row in self.entries)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, data) -> Asm:
        if isinstance(data, str):
            data = json.loads(data)
        asm = validate_asm(data["entries"])
        if asm.n != data.get("n", asm.n):
            raise InputError("declared n does not match the entry matrix")
        return asm

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class CornerSumMatrix:
    """Corner sums of an ASM; the border row and column 0 are implicit zeros."""

    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vals = _as_int_rows(self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        padded = np.zeros((n + 1, n + 1), dtype=np.int64)
        padded[1:, 1:] = vals
        if np.any(padded[1:, n] != np.arange(1, n + 1)) or np.any(padded[n, 1:] != np.arange(1, n + 1)):
            raise InputError("corner sums must end in 1..n along the last row and column")
        for name, step in (("row", np.diff(padded, axis=1)[1:, :]), ("column", np.diff(padded, axis=0)[:, 1:])):
            bad = np.argwhere((step < 0) | (step > 1))
            if bad.size:
                k, l = (int(v) + 1 for v in bad[0])
                raise InputError(f"corner sums jump outside {{0,1}} along a {name} at ({k},{l})")

    @property
    def n(self) -> int:
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.values]}


@dataclass(frozen=True)
class MonotoneTriangle:
    """Row ``r`` (1-based) holds ``r`` strictly increasing values in ``1..n``."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for r, row in enumerate(rows, start=1):
            if len(row) != r:
                raise InputError(f"triangle row {r} must have {r} entries")
            if any(a >= b for a, b in zip(row, row[1:])) or (row and not 1 <= row[0] <= row[-1] <= n):
                raise InputError(f"triangle row {r} is not strictly increasing within 1..{n}")
        if n and rows[-1] != tuple(range(1, n + 1)):
            raise InputError("last triangle row must be 1..n")
        for r in range(n - 1):
            upper, lower = rows[r], rows[r + 1]
            for c, v in enumerate(upper):
                if not lower[c] <= v <= lower[c + 1]:
                    raise InputError(f"rows {r + 1} and {r + 2} do not interlace")

    @property
    def n(self) -> int:
        return len(self.rows)


def validate_asm(entries: Sequence[Sequence[int]]) -> Asm:
    """Return the :class:`Asm` for ``entries`` or raise naming the first violation."""
    rows = _as_int_rows(entries)
    n = len(rows)
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=1):
            if v not in (-1, 0, 1):
                raise InputError(f"entry ({i},{j}) = {v} is not in {{-1,0,1}}")
    a = np.array(rows, dtype=np.int64)
    for axis, name in ((1, "row"), (0, "column")):
        partial = a.cumsum(axis=axis)
        for idx in range(n):
            line = partial[idx, :] if axis == 1 else partial[:, idx]
            if line[-1] != 1:
                raise InputError(f"{name} {idx + 1} sums to {int(line[-1])}, not 1")
            if np.any((line < 0) | (line > 1)):
                raise InputError(f"{name} {idx + 1} does not alternate in sign")
    return Asm(rows)


def identity_asm(n: int) -> Asm:
    return Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def corner_sums(a: Asm) -> CornerSumMatrix:
    return CornerSumMatrix(tuple(tuple(int(v) for v in row) for row in a.corner))


def _from_corner_array(c: np.ndarray) -> Asm:
    n = c.shape[0]
    padded = np.zeros((n + 1, n + 1), dtype=np.int64)
    padded[1:, 1:] = c
    a = padded[1:, 1:] - padded[:-1, 1:] - padded[1:, :-1] + padded[:-1, :-1]
    return validate_asm(a.tolist())


def asm_from_corner_sums(c: CornerSumMatrix) -> Asm:
    return _from_corner_array(c.array())


def monotone_triangle(a: Asm) -> MonotoneTriangle:
    partial = a.array().cumsum(axis=0)
    return MonotoneTriangle(tuple(tuple(int(j) + 1 for j in np.flatnonzero(row)) for row in partial))


def asm_from_triangle(t: MonotoneTriangle) -> Asm:
    n = t.n
    prev: set[int] = set()
    rows = []
    for row in t.rows:
        cur = set(row)
        rows.append([int(j in cur) - int(j in prev) for j in range(1, n + 1)])
        prev = cur
    return validate_asm(rows)


def _check_same_n(a: Asm, b: Asm):
    if a.n != b.n:
        raise InputError(f"ASMs of different sizes ({a.n} vs {b.n})")


def asm_leq(a: Asm, b: Asm) -> bool:
    _check_same_n(a, b)
    return bool(np.all(a.corner >= b.corner))


def join(a: Asm, b: Asm) -> Asm:
    _check_same_n(a, b)
    return _from_corner_array(np.minimum(a.corner, b.corner))


def meet(a: Asm, b: Asm) -> Asm:
    _check_same_n(a, b)
    return _from_corner_array(np.maximum(a.corner, b.corner))


def join_of_set(asms: Iterable[Asm]) -> Asm:
    asms = list(asms)
    if not asms:
        raise InputError("join of an empty family is not defined here")
    return reduce(join, asms)


def meet_of_set(asms: Iterable[Asm]) -> Asm:
    asms = list(asms)
    if not asms:
        raise InputError("meet of an empty family is not defined here")
    return reduce(meet, asms)


def embed_permutation(w: Permutation) -> Asm:
    return Asm(tuple(tuple(int(v) for v in row) for row in permutation_matrix(w)))


def _triangles(n: int):
    """Monotone triangles of order ``n``, built bottom row first by interlacing."""

    def above(lower: tuple[int, ...]):
        # rows of length len(lower) - 1 with lower[c] <= x[c] <= lower[c+1], strictly increasing
        size = len(lower) - 1
        out = []

        def extend(prefix):
            c = len(prefix)
            if c == size:
                out.append(tuple(prefix))
                return
            lo = lower[c] if not prefix else max(lower[c], prefix[-1] + 1)
            for v in range(lo, lower[c + 1] + 1):
                extend(prefix + [v])

        extend([])
        return out

    def build(rows):
        if len(rows[0]) == 1:
            yield tuple(rows)
            return
        for row in above(rows[0]):
            yield from build([row] + rows)

    yield from build([tuple(range(1, n + 1))])


def _check_bound(n: int, max_n: int):
    if n < 1:
        raise InputError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(f"ASM_{n} exceeds the enumeration bound n <= {max_n}")


def enumerate_asm(n: int, max_n: int = MAX_ASM_N) -> list[Asm]:
    """All ``n x n`` ASMs, lexicographic in row-major entries."""
    _check_bound(n, max_n)
    return list(_enumerate_cached(n))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Asm, ...]:
    asms = [asm_from_triangle(MonotoneTriangle(rows)) for rows in _triangles(n)]
    asms.sort(key=lambda a: a.entries)
    return tuple(asms)


def enumerate_asm_naive(n: int) -> list[Asm]:
    """Filter all ``3**(n*n)`` matrices; only for cross-checking at tiny ``n``."""
    if n > 3:
        raise ResourceLimitError("the naive ASM filter is limited to n <= 3")
    import itertools

    found = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        rows = [flat[r * n:(r + 1) * n] for r in range(n)]
        try:
            found.append(validate_asm(rows))
        except InputError:
            continue
    found.sort(key=lambda a: a.entries)
    return found


def asm_count_product_formula(n: int) -> int:
    """``prod_{k=0}^{n-1} (3k+1)! / (n+k)!``."""
    num = math.prod(math.factorial(3 * k + 1) for k in range(n))
    den = math.prod(math.factorial(n + k) for k in range(n))
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def _lattice_cached(n: int) -> FinitePoset:
    asms = _enumerate_cached(n)
    stack = np.stack([a.corner.ravel() for a in asms])
    leq = np.all(stack[:, None, :] >= stack[None, :, :], axis=2)
    return FinitePoset.from_matrix(list(asms), leq, check=False)


def asm_lattice(n: int, max_n: int = MAX_ASM_N) -> FinitePoset:
    """``(ASM_n, <=)`` as a :class:`FinitePoset` with :class:`Asm` labels."""
    _check_bound(n, max_n)
    return _lattice_cached(n)


def asm_covers(n: int, max_n: int = MAX_ASM_N) -> list[tuple[Asm, Asm]]:
    lat = asm_lattice(n, max_n)
    return [(lat.labels[a], lat.labels[b]) for a, b in lat.cover_pairs()]


def asm_lower_covers(a: Asm) -> list[tuple[Asm, tuple[int, int]]]:
    """Lower covers of ``a`` with the (1-based) corner-sum cell each one raises by 1.

    Covers in ``ASM_n`` change exactly one corner sum by one, so it suffices to
    try every interior cell.
    """
    n = a.n
    c = np.zeros((n + 1, n + 1), dtype=np.int64)
    c[1:, 1:] = a.corner
    out = []
    for k in range(1, n):
        for l in range(1, n):
            v = c[k, l] + 1
            # raising C[k,l] keeps all row/column increments in {0,1}
            if v - c[k - 1, l] <= 1 and v - c[k, l - 1] <= 1 and c[k + 1, l] - v >= 0 and c[k, l + 1] - v >= 0:
                raised = a.corner.copy()
                raised[k - 1, l - 1] = v
                out.append((_from_corner_array(raised), (k, l)))
    return out
