"""
Finite posets stored as dense bit-rows.

Element ``i`` of a :class:`FinitePoset` owns two Python-int bitsets:
``down[i]`` (bit ``j`` set iff ``j <= i``) and ``up[i]`` (bit ``j`` set iff
``i <= j``).  Everything else (covers, lattice operations, order ideals, cuts,
isomorphisms) is computed from those rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

from .errors import InputError, ResourceLimitError

__all__ = [
    "FinitePoset",
    "OrderIdeal",
    "IdealLattice",
    "Cut",
    "MAX_IDEALS",
    "MAX_IDEAL_POSET",
    "bits",
    "chain",
    "antichain",
    "boolean_lattice",
    "diamond_m3",
    "pentagon_n5",
    "hasse",
    "order_ideals",
    "iter_order_ideals",
    "join_irreducibles",
    "macneille_completion",
    "is_distributive",
    "is_distributive_bruteforce",
    "distributivity_witness",
    "birkhoff",
    "poset_isomorphic",
]

MAX_IDEALS = 10**6
MAX_IDEAL_POSET = 20_000


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """An immutable, certified finite partial order on arbitrary hashable labels."""

    def __init__(self, labels: Sequence[Hashable], down: Sequence[int], check: bool = True):
        self.labels = list(labels)
        self.size = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != self.size:
            raise InputError("poset labels must be distinct")
        self.down = list(down)
        up = [0] * self.size
        for i, row in enumerate(self.down):
            for j in bits(row):
                up[j] |= 1 << i
        self.up = up
        self._covers = None
        self._lattice = None
        if check:
            self._certify()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_leq(cls, labels: Sequence[Hashable], leq: Callable[[Any, Any], bool], check=True):
        labels = list(labels)
        down = []
        for b in labels:
            row = 0
            for j, a in enumerate(labels):
                if leq(a, b):
                    row |= 1 << j
            down.append(row)
        return cls(labels, down, check=check)

    @classmethod
    def from_matrix(cls, labels: Sequence[Hashable], matrix, check=True):
        """``matrix[a][b]`` truthy iff ``labels[a] <= labels[b]``."""
        labels = list(labels)
        size = len(labels)
        down = []
        for b in range(size):
            row = 0
            for a in range(size):
                if matrix[a][b]:
                    row |= 1 << a
            down.append(row)
        return cls(labels, down, check=check)

    @classmethod
    def from_relations(cls, labels: Sequence[Hashable], pairs: Iterable[tuple[Any, Any]], check=True):
        """Reflexive-transitive closure of the relations ``a <= b`` in ``pairs``."""
        labels = list(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        below = [0] * len(labels)
        for a, b in pairs:
            below[index[b]] |= 1 << index[a]
        # closure by repeated propagation; each pass is O(size) bitset ops per element
        down = [below[i] | (1 << i) for i in range(len(labels))]
        changed = True
        while changed:
            changed = False
            for i in range(len(labels)):
                row = down[i]
                acc = row
                for j in bits(row & ~(1 << i)):
                    acc |= down[j]
                if acc != row:
                    down[i] = acc
                    changed = True
        return cls(labels, down, check=check)

    def _certify(self):
        for i, row in enumerate(self.down):
            if not (row >> i) & 1:
                raise InputError(f"relation is not reflexive at {self.labels[i]!r}")
            for j in bits(row & ~(1 << i)):
                if (self.down[j] >> i) & 1:
                    raise InputError(
                        f"relation is not antisymmetric: {self.labels[i]!r}, {self.labels[j]!r}"
                    )
                if self.down[j] & ~row:
                    raise InputError(f"relation is not transitive below {self.labels[i]!r}")

    # -- basic queries -------------------------------------------------------

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.index

    def leq(self, a, b) -> bool:
        return bool((self.down[self.index[b]] >> self.index[a]) & 1)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def mask_of(self, labels: Iterable[Hashable]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index[lab]
        return mask

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def lower_covers_idx(self, i: int) -> list[int]:
        return list(bits(self.cover_masks()[i]))

    def upper_covers_idx(self, i: int) -> list[int]:
        return [j for j in bits(self.up[i] & ~(1 << i)) if (self.cover_masks()[j] >> i) & 1]

    def cover_masks(self) -> list[int]:
        """``cover_masks()[i]`` has bit ``j`` set iff ``i`` covers ``j``."""
        if self._covers is None:
            covers = []
            for i, row in enumerate(self.down):
                strict = row & ~(1 << i)
                shadow = 0
                for j in bits(strict):
                    shadow |= self.down[j] & ~(1 << j)
                covers.append(strict & ~shadow)
            self._covers = covers
        return self._covers

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Index pairs ``(lower, upper)`` of the Hasse diagram, sorted."""
        return sorted((j, i) for i, row in enumerate(self.cover_masks()) for j in bits(row))

    def rank_key(self, i: int) -> int:
        return self.down[i].bit_count()

    def linear_extension(self) -> list[int]:
        return sorted(range(self.size), key=lambda i: (self.down[i].bit_count(), i))

    def minimal(self) -> list[int]:
        return [i for i in range(self.size) if self.down[i] == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i in range(self.size) if self.up[i] == 1 << i]

    def induced(self, idx: Iterable[int]) -> FinitePoset:
        idx = list(idx)
        down = []
        for b in idx:
            row = 0
            for new, a in enumerate(idx):
                if (self.down[b] >> a) & 1:
                    row |= 1 << new
            down.append(row)
        return FinitePoset([self.labels[i] for i in idx], down, check=False)

    def relabel(self, fn: Callable[[Any], Hashable]) -> FinitePoset:
        return FinitePoset([fn(lab) for lab in self.labels], self.down, check=False)

    # -- lattice operations --------------------------------------------------

    def _lattice_tables(self):
        if self._lattice is None:
            self._lattice = (
                {row: i for i, row in enumerate(self.down)},
                {row: i for i, row in enumerate(self.up)},
            )
        return self._lattice

    def join_idx(self, i: int, j: int) -> int | None:
        """Least upper bound of two indices, or ``None`` if it does not exist."""
        return self._lattice_tables()[1].get(self.up[i] & self.up[j])

    def meet_idx(self, i: int, j: int) -> int | None:
        return self._lattice_tables()[0].get(self.down[i] & self.down[j])

    def join(self, a, b):
        k = self.join_idx(self.index[a], self.index[b])
        if k is None:
            raise InputError(f"{a!r} and {b!r} have no join")
        return self.labels[k]

    def meet(self, a, b):
        k = self.meet_idx(self.index[a], self.index[b])
        if k is None:
            raise InputError(f"{a!r} and {b!r} have no meet")
        return self.labels[k]

    def is_lattice(self) -> bool:
        if self.size == 0:
            return False
        if len(self.minimal()) != 1 or len(self.maximal()) != 1:
            return False
        # a bounded finite poset with all pairwise meets is a lattice
        down_table = self._lattice_tables()[0]
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if (self.down[i] & self.down[j]) not in down_table:
                    return False
        return True

    def require_lattice(self):
        if not self.is_lattice():
            raise InputError("operation needs a lattice")

    # -- export --------------------------------------------------------------

    def to_json(self, printer: Callable[[Any], Any] = str) -> dict:
        return {
            "elements": [printer(lab) for lab in self.labels],
            "covers": [[a, b] for a, b in self.cover_pairs()],
        }

    def to_dot(self, printer: Callable[[Any], str] = str, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i, lab in enumerate(self.labels):
            lines.append(f"  n{i} [label={json.dumps(printer(lab))}];")
        for a, b in self.cover_pairs():
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"FinitePoset(size={self.size})"


# -- small catalog ----------------------------------------------------------

def chain(k: int) -> FinitePoset:
    return FinitePoset.from_leq(list(range(k)), lambda a, b: a <= b)


def antichain(k: int) -> FinitePoset:
    return FinitePoset.from_leq(list(range(k)), lambda a, b: a == b)


def boolean_lattice(k: int) -> FinitePoset:
    return FinitePoset.from_leq(list(range(2**k)), lambda a, b: a & b == a)


def diamond_m3() -> FinitePoset:
    return FinitePoset.from_relations(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def pentagon_n5() -> FinitePoset:
    return FinitePoset.from_relations(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


def hasse(p: FinitePoset) -> list[tuple[Any, Any]]:
    """Cover relations as label pairs ``(lower, upper)``."""
    return [(p.labels[a], p.labels[b]) for a, b in p.cover_pairs()]


# -- order ideals -----------------------------------------------------------

@dataclass(frozen=True)
class OrderIdeal:
    """A down-closed subset of ``carrier``; equality ignores the carrier."""

    members: frozenset
    mask: int
    carrier: FinitePoset | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_mask(cls, carrier: FinitePoset, mask: int) -> OrderIdeal:
        return cls(frozenset(carrier.labels_of(mask)), mask, carrier)

    def generators(self) -> list:
        """Maximal elements of the ideal (its canonical antichain)."""
        p = self.carrier
        return [p.labels[i] for i in bits(self.mask) if not (p.up[i] & self.mask) & ~(1 << i)]

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return item in self.members

    def __le__(self, other: OrderIdeal):
        return self.mask & ~other.mask == 0


def iter_order_ideals(p: FinitePoset) -> Iterator[int]:
    """Stream all order ideals of ``p`` as bitmasks (each exactly once)."""
    full = (1 << p.size) - 1
    order = p.linear_extension()
    stack = [(0, 0)]
    while stack:
        inc, exc = stack.pop()
        undecided = full & ~(inc | exc)
        if not undecided:
            yield inc
            continue
        # branch on the last undecided element of a fixed linear extension
        u = next(i for i in reversed(order) if (undecided >> i) & 1)
        stack.append((inc, exc | p.up[u]))
        stack.append((inc | p.down[u], exc))


class IdealLattice:
    """The distributive lattice of order ideals of a finite poset, ordered by inclusion."""

    def __init__(self, base: FinitePoset, masks: list[int]):
        self.base = base
        self.masks = masks
        self._poset = None

    def __len__(self):
        return len(self.masks)

    def ideals(self) -> list[OrderIdeal]:
        return [OrderIdeal.from_mask(self.base, m) for m in self.masks]

    def poset(self, max_size: int = MAX_IDEAL_POSET) -> FinitePoset:
        """Materialize the inclusion order; built from covers ``I < I + {x}``."""
        if self._poset is None:
            if len(self.masks) > max_size:
                raise ResourceLimitError(
                    f"{len(self.masks)} ideals exceed the poset bound {max_size}"
                )
            where = {m: k for k, m in enumerate(self.masks)}
            covers = []
            for k, m in enumerate(self.masks):
                for x in bits(m):
                    if not (self.base.up[x] & m) & ~(1 << x):
                        covers.append((where[m & ~(1 << x)], k))
            pos = FinitePoset.from_relations(range(len(self.masks)), covers, check=False)
            labels = self.ideals()
            self._poset = FinitePoset(labels, pos.down, check=False)
        return self._poset


def order_ideals(p: FinitePoset, max_ideals: int = MAX_IDEALS) -> IdealLattice:
    """All order ideals of ``p``, sorted by (size, bitmask)."""
    masks = []
    for m in iter_order_ideals(p):
        masks.append(m)
        if len(masks) > max_ideals:
            raise ResourceLimitError(f"more than {max_ideals} order ideals")
    masks.sort(key=lambda m: (m.bit_count(), m))
    return IdealLattice(p, masks)


# -- join-irreducibles, distributivity, Birkhoff -----------------------------

def join_irreducibles(lat: FinitePoset) -> list:
    """Elements of a finite lattice with exactly one lower cover."""
    lat.require_lattice()
    covers = lat.cover_masks()
    return [lat.labels[i] for i in range(lat.size) if covers[i].bit_count() == 1]


def _ji_mask(lat: FinitePoset) -> int:
    covers = lat.cover_masks()
    mask = 0
    for i in range(lat.size):
        if covers[i].bit_count() == 1:
            mask |= 1 << i
    return mask


def is_distributive(lat: FinitePoset) -> bool:
    """Decide distributivity of a finite lattice.

    ``x -> {join-irreducibles below x}`` always preserves meets and is
    injective; the lattice is distributive iff the image is closed under
    union, i.e. the map is a lattice embedding into a power set.
    """
    lat.require_lattice()
    ji = _ji_mask(lat)
    images = [row & ji for row in lat.down]
    image_set = set(images)
    for a in range(lat.size):
        ia = images[a]
        for b in range(a + 1, lat.size):
            if (ia | images[b]) not in image_set:
                return False
    return True


def is_distributive_bruteforce(lat: FinitePoset) -> bool:
    """Check ``x & (y | z) == (x & y) | (x & z)`` on all triples."""
    lat.require_lattice()
    r = range(lat.size)
    j, m = lat.join_idx, lat.meet_idx
    return all(m(x, j(y, z)) == j(m(x, y), m(x, z)) for x in r for y in r for z in r)


def distributivity_witness(lat: FinitePoset) -> tuple[str, list] | None:
    """Find a diamond (M3) or pentagon (N5) sublattice, or ``None``.

    Returns ``("M3" | "N5", [bottom, x, y, z, top])``; for N5 the chain is
    ``bottom < x < y < top`` with ``z`` the side element.
    """
    lat.require_lattice()
    j, m = lat.join_idx, lat.meet_idx
    size = lat.size
    lab = lat.labels
    incomparable = [
        [not lat.leq_idx(a, b) and not lat.leq_idx(b, a) for b in range(size)] for a in range(size)
    ]
    for x in range(size):
        for y in bits(lat.up[x] & ~(1 << x)):
            for z in range(size):
                if incomparable[x][z] and incomparable[y][z]:
                    if j(x, z) == j(y, z) and m(x, z) == m(y, z):
                        return "N5", [lab[m(x, z)], lab[x], lab[y], lab[z], lab[j(x, z)]]
    for a in range(size):
        for b in range(a + 1, size):
            if not incomparable[a][b]:
                continue
            top, bot = j(a, b), m(a, b)
            for c in range(b + 1, size):
                if (
                    incomparable[a][c]
                    and incomparable[b][c]
                    and j(a, c) == top == j(b, c)
                    and m(a, c) == bot == m(b, c)
                ):
                    return "M3", [lab[bot], lab[a], lab[b], lab[c], lab[top]]
    return None


def birkhoff(lat: FinitePoset) -> FinitePoset:
    """Induced order on the join-irreducibles of a distributive lattice."""
    if not is_distributive(lat):
        raise InputError("Birkhoff representation needs a distributive lattice")
    ji = _ji_mask(lat)
    return lat.induced(bits(ji))


# -- MacNeille completion ----------------------------------------------------

@dataclass(frozen=True)
class Cut:
    """A pair ``(lower, upper)`` with each set the bounds of the other."""

    lower: frozenset
    upper: frozenset


def macneille_completion(p: FinitePoset, max_cuts: int = MAX_IDEALS) -> tuple[FinitePoset, dict]:
    """Lattice of cuts of ``p`` (ordered by lower-set inclusion) and the embedding.

    The lower sets of cuts are exactly the intersections of principal ideals;
    they are generated by closing the principal ideals under intersection,
    together with the whole poset (the empty intersection).
    """
    full = (1 << p.size) - 1
    principals = sorted(set(p.down))
    closed = set(principals) | {full}
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in principals:
                c = a & b
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
                    if len(closed) > max_cuts:
                        raise ResourceLimitError(f"more than {max_cuts} cuts")
        frontier = fresh
    lowers = sorted(closed, key=lambda m: (m.bit_count(), m))

    def upper_bounds(mask):
        ub = full
        for i in bits(mask):
            ub &= p.up[i]
        return ub

    cuts = [
        Cut(frozenset(p.labels_of(m)), frozenset(p.labels_of(upper_bounds(m)))) for m in lowers
    ]
    where = {m: k for k, m in enumerate(lowers)}
    down = []
    for m in lowers:
        row = 0
        for k, other in enumerate(lowers):
            if other & ~m == 0:
                row |= 1 << k
        down.append(row)
    lattice = FinitePoset(cuts, down, check=False)
    embedding = {p.labels[i]: cuts[where[p.down[i]]] for i in range(p.size)}
    return lattice, embedding


# -- isomorphism -------------------------------------------------------------

def poset_isomorphic(p: FinitePoset, q: FinitePoset) -> dict | None:
    """An order isomorphism ``p -> q`` as a label map, or ``None``.

    Backtracking over a linear extension of ``p``: when ``x`` is placed all
    elements below it are already mapped, so a candidate ``y`` is accepted iff
    ``down(y)`` is exactly ``{y}`` plus the images of the down-sets of the
    lower covers of ``x``.
    """
    if p.size != q.size:
        return None

    def invariant(r: FinitePoset, i: int):
        covers = r.cover_masks()
        n_up_covers = sum(1 for j in bits(r.up[i] & ~(1 << i)) if (covers[j] >> i) & 1)
        return (r.down[i].bit_count(), r.up[i].bit_count(), covers[i].bit_count(), n_up_covers)

    inv_p = [invariant(p, i) for i in range(p.size)]
    inv_q = [invariant(q, i) for i in range(q.size)]
    if sorted(inv_p) != sorted(inv_q):
        return None

    order = p.linear_extension()
    p_covers = p.cover_masks()
    q_up_covers = [0] * q.size
    for i, row in enumerate(q.cover_masks()):
        for j in bits(row):
            q_up_covers[j] |= 1 << i
    by_inv: dict = {}
    for j in range(q.size):
        by_inv.setdefault(inv_q[j], []).append(j)

    image = [-1] * p.size
    used = 0

    def candidates(x):
        lower = list(bits(p_covers[x]))
        if lower:
            pool = q_up_covers[image[lower[0]]] & ~used
            return [y for y in bits(pool) if inv_q[y] == inv_p[x]]
        return [y for y in by_inv[inv_p[x]] if not (used >> y) & 1]

    def fits(x, y):
        expect = 1 << y
        for c in bits(p_covers[x]):
            expect |= q.down[image[c]]
        return q.down[y] == expect

    # iterative DFS to stay clear of the recursion limit on large lattices
    stack = [iter(candidates(order[0]))] if order else []
    depth = 0
    while stack:
        x = order[depth]
        for y in stack[-1]:
            if fits(x, y):
                image[x] = y
                used |= 1 << y
                depth += 1
                if depth == p.size:
                    return {p.labels[i]: q.labels[image[i]] for i in range(p.size)}
                stack.append(iter(candidates(order[depth])))
                break
        else:
            stack.pop()
            depth -= 1
            if depth >= 0:
                prev = order[depth]
                used &= ~(1 << image[prev])
                image[prev] = -1
    return {} if p.size == 0 else None
