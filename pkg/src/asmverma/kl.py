"""
Kazhdan-Lusztig polynomials of S_n and graded multiplicities in the dominant Verma module.

The table for S_n is filled column by column (``y`` in order of length) with
the classical recursion: pick a left descent ``s`` of ``y``, put ``v = s y``,
and

    P_{x,y} = q^{1-c} P_{sx,v} + q^c P_{x,v}
              - sum_{z < v, sz < z} mu(z, v) q^{(l(y)-l(z))/2} P_{x,z}

with ``c = 1`` if ``sx < x`` and ``c = 0`` otherwise.  A column is an integer
array of shape ``(n!, D)`` holding ``P_{x,y}`` for every ``x`` at once.

Grading: with the head of ``Delta_w`` in degree ``l(w)``, the simple ``L_y``
occurs in ``Delta_e`` in degree ``l(y) - 2k`` with multiplicity equal to the
coefficient of ``q^k`` in ``P_{e,y}``.
"""

from __future__ import annotations

import logging
import math
import os
import threading
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cells import grid, penultimate_cell
from .errors import InputError, ResourceLimitError, VerificationError
from .perm import Permutation, enumerate_sn, identity, length
from .tetra import ji_poset, ji_to_tetra, tetra_points

__all__ = [
    "KLPolynomial",
    "KLTable",
    "GradedMultiplicity",
    "MAX_KL_N",
    "CACHE_ENV",
    "default_cache_dir",
    "kl_table",
    "kl_polynomial",
    "mu",
    "graded_mult",
    "multiplicity_table",
    "verify_multfree",
    "verify_tetra_degrees",
    "two_sided_cells_mu_graph",
]

log = logging.getLogger(__name__)

MAX_KL_N = 6
CACHE_ENV = "ASMV_CACHE_DIR"


@dataclass(frozen=True)
class KLPolynomial:
    """Polynomial in ``q``; ``coefficients[k]`` is the coefficient of ``q**k``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __call__(self, q):
        return sum(c * q**k for k, c in enumerate(self.coefficients))

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            coef = str(c) if (c != 1 or k == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms)


@dataclass(frozen=True)
class GradedMultiplicity:
    """``degree -> [Delta_e : L_y<degree>]`` (zero entries omitted)."""

    y: Permutation
    by_degree: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.by_degree)

    def total(self) -> int:
        return sum(m for _, m in self.by_degree)


def default_cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV, "./.asmv-cache"))


class KLTable:
    """All ``P_{x,y}`` for one ``n``; filled once, read concurrently afterwards."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_KL_N:
            raise ResourceLimitError(f"KL tables are limited to 1 <= n <= {MAX_KL_N}")
        self.n = n
        self.perms = enumerate_sn(n)
        self.index = {w: k for k, w in enumerate(self.perms)}
        self.lengths = np.array([length(w) for w in self.perms], dtype=np.int64)
        top = n * (n - 1) // 2
        self.width = top // 2 + 2
        self.table: np.ndarray | None = None

    # -- filling -------------------------------------------------------------

    def _left_mult(self) -> np.ndarray:
        lm = np.empty((self.n, len(self.perms)), dtype=np.int64)
        for i in range(1, self.n):
            for k, w in enumerate(self.perms):
                lm[i, k] = self.index[w.swap_values(i)]
        return lm

    def compute(self):
        size, width = len(self.perms), self.width
        lm = self._left_mult()
        lengths = self.lengths
        table = np.zeros((size, size, width), dtype=np.int64)
        mus: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        order = np.argsort(lengths, kind="stable")
        e = self.index[identity(self.n)]
        table[e, e, 0] = 1

        def shift(a, by):
            if by == 0:
                return a
            out = np.zeros_like(a)
            out[:, by:] = a[:, :-by]
            return out

        for y in order:
            if y == e:
                continue
            w = self.perms[y]
            s = next(i for i in range(1, self.n) if w.inverse()(i) > w.inverse()(i + 1))
            v = lm[s, y]
            col_v = table[v]
            sx = lm[s]
            c = (lengths[sx] < lengths)[:, None]
            moved = col_v[sx]
            col = np.where(c, moved, shift(moved, 1)) + np.where(c, shift(col_v, 1), col_v)
            for z, m in mus[v]:
                if lengths[lm[s, z]] < lengths[z]:
                    col -= m * shift(table[z], int(lengths[y] - lengths[z]) // 2)
            table[y] = col
            ly = lengths[y]
            diffs = ly - lengths
            for z in np.flatnonzero((diffs > 0) & (diffs % 2 == 1)):
                top = table[y, z, (diffs[z] - 1) // 2]
                if top:
                    mus[y].append((int(z), int(top)))
        self.table = table

    # -- cache ---------------------------------------------------------------

    def cache_path(self, cache_dir: Path) -> Path:
        return Path(cache_dir) / f"kl-S{self.n}.tsv"

    def save(self, cache_dir: Path):
        path = self.cache_path(cache_dir)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            for x, y, poly in self.nonzero():
                fh.write(
                    f"{self.n}\t{self.perms[x].to_text()}\t{self.perms[y].to_text()}\t"
                    f"{','.join(str(c) for c in poly.coefficients)}\n"
                )
        os.replace(tmp, path)

    def load(self, cache_dir: Path) -> bool:
        path = self.cache_path(cache_dir)
        if not path.exists():
            return False
        size = len(self.perms)
        table = np.zeros((size, size, self.width), dtype=np.int64)
        try:
            with open(path) as fh:
                for line in fh:
                    n_text, x_text, y_text, coeff_text = line.rstrip("\n").split("\t")
                    if int(n_text) != self.n:
                        raise ValueError("rank mismatch")
                    x = self.index[Permutation.parse(x_text)]
                    y = self.index[Permutation.parse(y_text)]
                    coeffs = [int(c) for c in coeff_text.split(",")]
                    table[y, x, : len(coeffs)] = coeffs
        except (ValueError, KeyError, InputError) as exc:
            log.warning("ignoring unreadable KL cache %s: %s", path, exc)
            return False
        self.table = table
        return True

    # -- queries -------------------------------------------------------------

    def _idx(self, w: Permutation) -> int:
        if w.n != self.n:
            raise InputError(f"{w} is not in S_{self.n}")
        return self.index[w]

    def poly(self, x: Permutation, y: Permutation) -> KLPolynomial:
        return KLPolynomial(tuple(self.table[self._idx(y), self._idx(x)]))

    def mu(self, x: Permutation, y: Permutation) -> int:
        xi, yi = self._idx(x), self._idx(y)
        diff = int(self.lengths[yi] - self.lengths[xi])
        if diff <= 0 or diff % 2 == 0:
            return 0
        return int(self.table[yi, xi, (diff - 1) // 2])

    def nonzero(self):
        """``(x_index, y_index, P_{x,y})`` for every nonzero entry, in index order."""
        ys, xs = np.nonzero(self.table.any(axis=2))
        for x, y in sorted(zip(xs.tolist(), ys.tolist())):
            yield x, y, KLPolynomial(tuple(self.table[y, x]))


_TABLES: dict[int, KLTable] = {}
_FILL_LOCK = threading.Lock()


def kl_table(n: int, cache_dir: Path | str | None = None, use_cache: bool = True) -> KLTable:
    """The memoized KL table for ``S_n``, read from or written to the cache when enabled."""
    with _FILL_LOCK:
        table = _TABLES.get(n)
        if table is not None:
            return table
        table = KLTable(n)
        cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
        if not (use_cache and table.load(cache)):
            table.compute()
            if use_cache:
                try:
                    table.save(cache)
                except OSError as exc:
                    log.warning("could not write KL cache to %s: %s", cache, exc)
        _TABLES[n] = table
        return table


def kl_polynomial(x: Permutation, y: Permutation, **kwargs) -> KLPolynomial:
    if x.n != y.n:
        raise InputError("x and y must lie in the same S_n")
    return kl_table(x.n, **kwargs).poly(x, y)


def mu(x: Permutation, y: Permutation, **kwargs) -> int:
    return kl_table(x.n, **kwargs).mu(x, y)


def graded_mult(y: Permutation, **kwargs) -> GradedMultiplicity:
    """Multiplicities of the graded shifts of ``L_y`` in ``Delta_e``."""
    p = kl_polynomial(identity(y.n), y, **kwargs)
    ly = length(y)
    pairs = tuple(sorted((ly - 2 * k, c) for k, c in enumerate(p.coefficients) if c))
    return GradedMultiplicity(y, pairs)


def multiplicity_table(n: int, **kwargs) -> dict[tuple[int, int], GradedMultiplicity]:
    """``(i, j) -> graded multiplicity of L_{grid(i, j)}`` over the penultimate cell."""
    return {cell: graded_mult(z, **kwargs) for cell, z in sorted(grid(n).items())}


def verify_multfree(n: int, **kwargs) -> dict:
    """Check ``[Delta_e : L_z<d>] <= 1`` for every ``z`` in the penultimate cell."""
    table = multiplicity_table(n, **kwargs)
    entries = []
    offending = []
    for (i, j), gm in table.items():
        for d, m in gm.by_degree:
            entries.append({"i": i, "j": j, "z": gm.y.to_text(), "degree": d, "multiplicity": m})
            if m > 1:
                offending.append(entries[-1])
    report = {
        "suite": "kl-multfree",
        "n": n,
        "cell_size": len(table),
        "nonzero_entries": len(entries),
        "total_multiplicity": sum(e["multiplicity"] for e in entries),
        "entries": entries,
        "offending": offending,
        "passed": not offending,
    }
    if offending:
        raise VerificationError(f"multiplicity > 1 in the penultimate cell of S_{n}", report)
    return report


def verify_tetra_degrees(n: int, **kwargs) -> dict:
    """Match nonzero ``(z, d)`` pairs of the penultimate cell with ``Tetr_n``.

    ``(grid(i, j), d) -> (i, j, d)`` must be a bijection onto the points of
    ``Tetr_n``, and each bigrassmannian's point must carry multiplicity 1.
    """
    table = multiplicity_table(n, **kwargs)
    hits = [(i, j, d, m) for (i, j), gm in table.items() for d, m in gm.by_degree]
    hit_points = sorted((i, j, d) for i, j, d, _ in hits)
    expected = sorted((p.i, p.j, p.g) for p in tetra_points(n))
    mismatches = []
    if hit_points != expected:
        mismatches.append(
            {
                "kind": "point-set",
                "missing": sorted(set(expected) - set(hit_points)),
                "extra": sorted(set(hit_points) - set(expected)),
                "repeated": len(hit_points) != len(set(hit_points)),
            }
        )
    mult = {(i, j, d): m for i, j, d, m in hits}
    for w in ji_poset(n):
        p = ji_to_tetra(w)
        if mult.get((p.i, p.j, p.g), 0) != 1:
            mismatches.append({"kind": "bigrassmannian", "w": w.to_text(), "point": p.to_json()})
    report = {
        "suite": "kl-degrees",
        "n": n,
        "points": len(expected),
        "nonzero_entries": len(hits),
        "sum_p_at_1": sum(gm.total() for gm in table.values()),
        "binomial": math.comb(n + 1, 3),
        "mismatches": mismatches,
        "passed": not mismatches,
    }
    if mismatches:
        raise VerificationError(f"penultimate-cell degrees do not match Tetr_{n}", report)
    return report


def two_sided_cells_mu_graph(n: int, **kwargs) -> list[frozenset[Permutation]]:
    """Two-sided cells as strongly connected components of the descent-filtered mu-graph.

    Independent of RSK; intended for small ``n`` only.
    """
    if n > 4:
        raise ResourceLimitError("the mu-graph cell oracle is limited to n <= 4")
    from .perm import left_descents, right_descents

    table = kl_table(n, **kwargs)
    perms = table.perms
    size = len(perms)
    ld = [left_descents(w) for w in perms]
    rd = [right_descents(w) for w in perms]
    reach = [1 << a for a in range(size)]
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            joined = table.mu(perms[a], perms[b]) or table.mu(perms[b], perms[a])
            if joined and (not ld[a] <= ld[b] or not rd[a] <= rd[b]):
                reach[a] |= 1 << b
    changed = True
    while changed:
        changed = False
        for a in range(size):
            acc = reach[a]
            for b in range(size):
                if (acc >> b) & 1:
                    acc |= reach[b]
            if acc != reach[a]:
                reach[a] = acc
                changed = True
    cells = {}
    for a in range(size):
        members = frozenset(perms[b] for b in range(size) if (reach[a] >> b) & 1 and (reach[b] >> a) & 1)
        cells[members] = None
    return list(cells)
