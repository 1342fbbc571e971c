"""
Verification suites: batteries of exact checks, one report per suite.

Every suite returns a JSON-ready report and raises
:class:`~asmverma.errors.VerificationError` (carrying the same report) when a
check fails.  Reports contain no timings, so repeated runs are byte-identical.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from typing import Callable

import numpy as np

from . import asm as asm_mod
from . import figures
from .asm import (
    CornerSumMatrix,
    asm_from_corner_sums,
    asm_from_triangle,
    asm_lattice,
    asm_leq,
    asm_lower_covers,
    corner_sums,
    embed_permutation,
    enumerate_asm,
    join_of_set,
    meet_of_set,
    monotone_triangle,
    validate_asm,
)
from .cells import cell_shape, grid, penultimate_cell, rsk, two_sided_cells_by_shape
from .errors import InputError, ResourceLimitError, VerificationError
from .kl import (
    graded_mult,
    kl_polynomial,
    kl_table,
    two_sided_cells_mu_graph,
    verify_multfree,
    verify_tetra_degrees,
)
from .perm import (
    Permutation,
    bigrassmannians,
    bruhat_covers,
    bruhat_leq,
    bruhat_leq_matrix,
    enumerate_sn,
    identity,
    left_descents,
    length,
    longest,
    right_descents,
)
from .poset import (
    FinitePoset,
    bits,
    birkhoff,
    is_distributive,
    is_distributive_bruteforce,
    join_irreducibles,
    macneille_completion,
    order_ideals,
    poset_isomorphic,
)
from .tetra import build_tetra, ji_poset, ji_to_tetra, tetra_points, tetra_to_ji
from .verma import (
    enumerate_verbar,
    from_asm,
    from_generators,
    from_permutation,
    intersect,
    socle,
    to_asm,
    to_asm_via_ideal_lattice,
    verma_leq,
)

__all__ = ["SUITES", "SUITE_BOUNDS", "run_suite", "Checks", "natural_posets"]


class Checks:
    """Collects named boolean checks with optional JSON-able detail."""

    def __init__(self, suite: str, n: int):
        self.suite = suite
        self.n = n
        self.items: list[dict] = []

    def add(self, name: str, passed, detail=None):
        entry = {"name": name, "passed": bool(passed)}
        if detail is not None:
            entry["detail"] = detail
        self.items.append(entry)
        return bool(passed)

    def report(self) -> dict:
        rep = {
            "suite": self.suite,
            "n": self.n,
            "checks": self.items,
            "passed": all(c["passed"] for c in self.items),
        }
        if not rep["passed"]:
            rep["failed"] = [c["name"] for c in self.items if not c["passed"]]
        return rep


# -- oracles ------------------------------------------------------------------

def bruhat_by_transpositions(n: int) -> np.ndarray:
    """Bruhat order as the closure of ``w < w t`` for transpositions ``t`` raising length by one."""
    perms = enumerate_sn(n)
    index = {w: k for k, w in enumerate(perms)}
    size = len(perms)
    reach = [1 << k for k in range(size)]
    lengths = [length(w) for w in perms]
    order = sorted(range(size), key=lambda k: -lengths[k])
    for k in order:
        w = perms[k]
        for p, q in itertools.combinations(range(w.n), 2):
            img = list(w.image)
            img[p], img[q] = img[q], img[p]
            u = index[Permutation(tuple(img))]
            if lengths[u] == lengths[k] + 1:
                reach[k] |= reach[u]
    out = np.zeros((size, size), dtype=bool)
    for k in range(size):
        for u in bits(reach[k]):
            out[k, u] = True
    return out


def hook_length_count(shape) -> int:
    n = sum(shape)
    conj = [sum(1 for part in shape if part > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for r, part in enumerate(shape):
        for c in range(part):
            hooks *= (part - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(n) // hooks


def natural_posets(size: int):
    """All naturally labelled posets on ``range(size)`` (every poset up to isomorphism appears)."""
    pairs = list(itertools.combinations(range(size), 2))
    for choice in range(2 ** len(pairs)):
        rel = {pairs[b] for b in range(len(pairs)) if (choice >> b) & 1}
        if all((a, c) in rel for (a, b) in rel for (b2, c) in rel if b == b2):
            yield FinitePoset.from_relations(range(size), rel, check=False)


def _lattice_join_oracle(leq: np.ndarray, a: int, b: int) -> int | None:
    ub = np.flatnonzero(leq[a] & leq[b])
    least = [c for c in ub if leq[c, ub].all()]
    return int(least[0]) if len(least) == 1 else None


def _lattice_meet_oracle(leq: np.ndarray, a: int, b: int) -> int | None:
    lb = np.flatnonzero(leq[:, a] & leq[:, b])
    greatest = [c for c in lb if leq[lb, c].all()]
    return int(greatest[0]) if len(greatest) == 1 else None


# -- suites -------------------------------------------------------------------

def suite_macneille(n: int, seed: int = 0) -> dict:
    ch = Checks("macneille", n)
    rng = random.Random(seed)
    perms = enumerate_sn(n)
    leq = bruhat_leq_matrix(perms)

    # permutations
    if n <= 4:
        ch.add("bruhat equals transposition-closure oracle", np.array_equal(leq, bruhat_by_transpositions(n)))
        try:
            FinitePoset.from_matrix(perms, leq, check=True)
            ch.add("bruhat order is a partial order", True)
        except InputError as exc:
            ch.add("bruhat order is a partial order", False, str(exc))
    ch.add(
        "length parity flips under right multiplication",
        all((length(w) + length(w.swap_positions(i))) % 2 == 1 for w in perms for i in range(1, n)),
    )
    ch.add("left descents are right descents of the inverse", all(left_descents(w) == right_descents(w.inverse()) for w in perms))
    ch.add("bigrassmannian count is C(n+1,3)", len(bigrassmannians(n)) == math.comb(n + 1, 3), len(bigrassmannians(n)))
    if n <= 6:
        covers = bruhat_covers(n)
        pos = FinitePoset.from_matrix(perms, leq, check=False)
        ch.add("bruhat covers equal the transitive reduction", sorted(covers) == sorted(
            (pos.labels[a], pos.labels[b]) for a, b in pos.cover_pairs()), len(covers))

    # ASMs
    asms = enumerate_asm(n)
    ch.add("ASM count matches the product formula", len(asms) == asm_mod.asm_count_product_formula(n), len(asms))
    if n <= 3:
        ch.add("ASM enumeration matches the naive filter", asms == asm_mod.enumerate_asm_naive(n))
    ch.add(
        "corner-sum and triangle encodings round-trip",
        all(asm_from_corner_sums(corner_sums(a)) == a and asm_from_triangle(monotone_triangle(a)) == a for a in asms),
    )
    lat = asm_lattice(n)
    a_leq = np.array([[lat.leq_idx(i, j) for j in range(lat.size)] for i in range(lat.size)])
    if n <= 4:
        ok = True
        for i in range(lat.size):
            for j in range(lat.size):
                jo = asm_mod.join(lat.labels[i], lat.labels[j])
                me = asm_mod.meet(lat.labels[i], lat.labels[j])
                if lat.index[jo] != _lattice_join_oracle(a_leq, i, j) or lat.index[me] != _lattice_meet_oracle(a_leq, i, j):
                    ok = False
        ch.add("join/meet are least upper/greatest lower bounds (brute force)", ok)
        closure_pairs = itertools.product(asms, repeat=2)
    else:
        closure_pairs = ((rng.choice(asms), rng.choice(asms)) for _ in range(2000))
    ok = True
    for a, b in closure_pairs:
        try:
            CornerSumMatrix(tuple(map(tuple, np.minimum(a.corner, b.corner).tolist())))
            CornerSumMatrix(tuple(map(tuple, np.maximum(a.corner, b.corner).tolist())))
        except InputError:
            ok = False
    ch.add("entrywise min/max of corner sums stay valid", ok)
    ji = join_irreducibles(lat)
    ch.add("join-irreducible ASMs number C(n+1,3)", len(ji) == math.comb(n + 1, 3), len(ji))
    ch.add(
        "join-irreducible ASMs are the embedded bigrassmannians",
        sorted(a.entries for a in ji) == sorted(embed_permutation(w).entries for w in bigrassmannians(n)),
    )
    ch.add("ASM_n is distributive", is_distributive(lat))
    if n <= 3:
        ch.add("distributivity by exhaustive triples", is_distributive_bruteforce(lat))
    elif n == 4:
        ok = True
        j, m = lat.join_idx, lat.meet_idx
        for _ in range(100_000):
            x, y, z = rng.randrange(lat.size), rng.randrange(lat.size), rng.randrange(lat.size)
            if m(x, j(y, z)) != j(m(x, y), m(x, z)):
                ok = False
                break
        ch.add("distributivity on 1e5 random triples", ok)
    emb = [embed_permutation(w) for w in perms]
    ch.add(
        "embedding restricts to the Bruhat order",
        all(asm_leq(emb[a], emb[b]) == bool(leq[a, b]) for a in range(len(perms)) for b in range(len(perms))),
    )

    # completion
    bruhat = FinitePoset.from_matrix(perms, leq, check=False)
    comp, embedding = macneille_completion(bruhat)
    ch.add("completion is a lattice", comp.is_lattice(), len(comp))
    ch.add(
        "completion embedding preserves and reflects order",
        all(comp.leq(embedding[x], embedding[y]) == bruhat.leq(x, y) for x in perms for y in perms),
    )
    dense = True
    images = {x: comp.index[embedding[x]] for x in perms}
    for k, cut in enumerate(comp.labels):
        below = [images[x] for x in perms if comp.leq_idx(images[x], k)]
        above = [images[x] for x in perms if comp.leq_idx(k, images[x])]
        jn = _fold(comp.join_idx, below)
        mt = _fold(comp.meet_idx, above)
        if (below and jn != k) or (above and mt != k):
            dense = False
    ch.add("every cut is a join and a meet of embedded elements", dense)
    cut_to_asm = {}
    for cut in comp.labels:
        cut_to_asm[cut] = join_of_set(embed_permutation(w) for w in cut.lower) if cut.lower else (
            meet_of_set(embed_permutation(w) for w in cut.upper)
        )
    bij = len(set(cut_to_asm.values())) == len(comp) == len(lat)
    order_ok = bij and all(
        comp.leq(c1, c2) == asm_leq(cut_to_asm[c1], cut_to_asm[c2]) for c1 in comp.labels for c2 in comp.labels
    ) if n <= 4 else bij and _order_iso_by_corners(comp, cut_to_asm)
    ch.add("cuts -> ASM_n is an order isomorphism", order_ok)
    ch.add(
        "completion embedding commutes with embed_permutation",
        all(cut_to_asm[embedding[w]] == embed_permutation(w) for w in perms),
    )
    ch.add("generic isomorphism search finds completion ≅ ASM_n", poset_isomorphic(comp, lat) is not None)

    # ideal lattices and Birkhoff duality
    ideals = order_ideals(ji_poset(n))
    ch.add("ideal lattice of bigrassmannians is distributive", is_distributive(ideals.poset()), len(ideals))
    ok = True
    for size in range(1, 6):
        for p in natural_posets(size):
            if poset_isomorphic(birkhoff(order_ideals(p).poset()), p) is None:
                ok = False
    ch.add("Birkhoff recovers every poset with <= 5 elements", ok)
    return ch.report()


def _fold(op: Callable[[int, int], int | None], items: list[int]) -> int | None:
    if not items:
        return None
    acc = items[0]
    for x in items[1:]:
        acc = op(acc, x)
        if acc is None:
            return None
    return acc


def _order_iso_by_corners(comp: FinitePoset, cut_to_asm: dict) -> bool:
    stack = np.stack([cut_to_asm[c].corner.ravel() for c in comp.labels])
    leq = np.all(stack[:, None, :] >= stack[None, :, :], axis=2)
    return all(bool(leq[a, b]) == comp.leq_idx(a, b) for a in range(comp.size) for b in range(comp.size))


def suite_main_theorem(n: int, samples: int = 10_000, seed: int = 0) -> dict:
    ch = Checks("main-theorem", n)
    rng = random.Random(seed)
    elems = enumerate_verbar(n)
    asms = enumerate_asm(n)
    ch.add("element count equals |ASM_n|", len(elems) == len(asms), len(elems))
    images = [to_asm(m) for m in elems]
    ch.add("to_asm is a bijection onto ASM_n", sorted(a.entries for a in images) == sorted(a.entries for a in asms))
    ch.add("from_asm inverts to_asm", all(from_asm(a) == m for a, m in zip(images, elems)))
    ch.add("to_asm inverts from_asm", all(to_asm(from_asm(a)) == a for a in asms))
    ch.add("two routes agree on every element", all(to_asm_via_ideal_lattice(m) == a for m, a in zip(elems, images)))

    stack = np.stack([a.corner.ravel() for a in images])
    asm_order = np.all(stack[:, None, :] >= stack[None, :, :], axis=2)
    masks = [ji_poset(n).mask_of(m.ideal) for m in elems]
    ideal_order = np.array([[ma & ~mb == 0 for mb in masks] for ma in masks])
    ch.add("ideal inclusion matches the ASM order", np.array_equal(asm_order, ideal_order))
    if n <= 4:
        ch.add(
            "intersection maps to join",
            all(to_asm(intersect([a, b])) == asm_mod.join(to_asm(a), to_asm(b)) for a in elems for b in elems),
        )

    perms = enumerate_sn(n)
    ch.add(
        "commutative square: to_asm(from_permutation(w)) == embed_permutation(w)",
        all(to_asm(from_permutation(w)) == embed_permutation(w) for w in perms),
    )
    pv = [from_permutation(w) for w in perms]
    leq = bruhat_leq_matrix(perms)
    ch.add(
        "Delta_w ⊆ Delta_x exactly when x <= w",
        all(verma_leq(pv[a], pv[b]) == bool(leq[a, b]) for a in range(len(perms)) for b in range(len(perms))),
    )

    jp = ji_poset(n)
    if n <= 4:
        antichains = [m.generators for m in elems]
    else:
        antichains = []
        for _ in range(samples):
            mask = rng.getrandbits(jp.size)
            chosen = [jp.labels[i] for i in bits(mask)]
            antichains.append(tuple(w for w in chosen if not any(w != u and bruhat_leq(w, u) for u in chosen)))
    two_route = True
    for gens in antichains:
        route_a = (
            asm_mod._from_corner_array(np.minimum.reduce([embed_permutation(w).corner for w in gens]))
            if gens else asm_mod.identity_asm(n)
        )
        united = intersect([from_permutation(w) for w in gens]) if gens else from_generators(n, [])
        if route_a != to_asm_via_ideal_lattice(united):
            two_route = False
            break
    ch.add("corner-sum formula agrees with ideal union + Birkhoff", two_route, len(antichains))

    if n <= 4:
        socle_ok = True
        for m in elems:
            gens = m.generators
            if not gens:
                continue
            singles = [from_permutation(w) for w in gens]
            if sorted(socle(intersect(singles))) != sorted(lab for s in singles for lab in socle(s)):
                socle_ok = False
        ch.add("socle of an antichain intersection is the union of socles", socle_ok)
    ch.add("socle determines the element", len({tuple(socle(m)) for m in elems}) == len(elems))
    if n == 3:
        s1t = Permutation((3, 1, 2))
        ts1 = Permutation((2, 3, 1))
        ch.add(
            "Delta_s1t ∩ Delta_ts1 == Delta_w0",
            intersect([from_permutation(s1t), from_permutation(ts1)]) == from_permutation(longest(3)),
        )
    return ch.report()


def suite_tetra_iso(n: int) -> dict:
    ch = Checks("tetra-iso", n)
    tetra = build_tetra(n)
    jp = ji_poset(n)
    ch.add("|Tetr_n| = C(n+1,3)", len(tetra) == math.comb(n + 1, 3), len(tetra))
    image = {w: ji_to_tetra(w) for w in jp}
    ch.add("ji_to_tetra is a bijection", set(image.values()) == set(tetra.labels) and len(set(image.values())) == len(jp))
    ch.add(
        "ji_to_tetra is an order isomorphism",
        all(jp.leq(a, b) == tetra.leq(image[a], image[b]) for a in jp for b in jp),
    )
    ch.add("tetra_to_ji inverts ji_to_tetra", all(tetra_to_ji(p, n) == w for w, p in image.items()))
    ch.add("generic isomorphism search agrees", poset_isomorphic(jp, tetra) is not None)
    ch.add(
        "degree parity matches base + |i-j|",
        all(p.g % 2 == ((n - 1) * (n - 2) // 2 + abs(p.i - p.j)) % 2 for p in tetra.labels),
    )
    if n <= 5:
        lat = asm_lattice(n)
        ok = True
        for a in join_irreducibles(lat):
            covers = asm_lower_covers(a)
            lattice_covers = [lat.labels[c] for c in lat.lower_covers_idx(lat.index[a])]
            if len(covers) != 1 or [c for c, _ in covers] != lattice_covers:
                ok = False
                continue
            diff = covers[0][0].corner - a.corner
            if int(np.count_nonzero(diff)) != 1 or int(diff.sum()) != 1:
                ok = False
        ch.add("each join-irreducible ASM has one lower cover, one cell higher by 1", ok)
    if n in figures.FIGURE3_POINTS:
        golden = sorted(figures.FIGURE3_POINTS[n])
        ch.add("point set matches the reference data", sorted((p.i, p.j, p.g) for p in tetra.labels) == golden)
        ch.add(
            "degree multiset matches the reference data",
            Counter(p.g for p in tetra.labels) == Counter(g for _, _, g in golden),
        )
    return ch.report()


def suite_kl_multfree(n: int, **kl_kwargs) -> dict:
    ch = Checks("kl-multfree", n)
    try:
        rep = verify_multfree(n, **kl_kwargs)
        ch.add("multiplicities in the penultimate cell are <= 1", True, {"nonzero_entries": rep["nonzero_entries"]})
    except VerificationError as exc:
        ch.add("multiplicities in the penultimate cell are <= 1", False, exc.report.get("offending"))
    table = kl_table(n, **kl_kwargs)
    perms = table.perms
    if n <= 5:
        w0 = longest(n)
        leq = bruhat_leq_matrix(perms)
        lengths = table.lengths
        sane = sym = True
        for yi, y in enumerate(perms):
            for xi, x in enumerate(perms):
                coeffs = table.table[yi, xi]
                if xi == yi:
                    sane &= coeffs[0] == 1 and not coeffs[1:].any()
                    continue
                if not leq[xi, yi]:
                    sane &= not coeffs.any()
                    continue
                nz = np.flatnonzero(coeffs)
                sane &= bool((coeffs >= 0).all()) and coeffs[0] == 1
                if nz.size:
                    sane &= 2 * int(nz[-1]) <= lengths[yi] - lengths[xi] - 1
                p = table.poly(x, y)
                sym &= p == table.poly(x.inverse(), y.inverse()) == table.poly(w0 * x * w0, w0 * y * w0)
        ch.add("KL normalization, support, positivity and degree bound", sane)
        ch.add("KL invariance under inversion and conjugation by w0", sym)
    shapes = two_sided_cells_by_shape(n)
    ch.add(
        "RSK fibres have f_lambda^2 elements",
        all(len(ws) == hook_length_count(shape) ** 2 for shape, ws in shapes.items())
        and len({rsk(w) for w in perms}) == len(perms),
    )
    cell = penultimate_cell(n)
    ch.add(
        "penultimate cell is an (n-1)x(n-1) grid",
        len(cell) == (n - 1) ** 2 and {(g.i, g.j) for g in cell} == set(itertools.product(range(1, n), repeat=2)),
    )
    ch.add(
        "penultimate cell contains w0*s and s*w0",
        n < 2 or all(
            cell_shape(longest(n) * s) == cell_shape(s * longest(n)) == (2,) + (1,) * (n - 2)
            for s in (identity(n).swap_positions(i) for i in range(1, n))
        ),
    )
    if n <= 4:
        by_mu = sorted(sorted(c) for c in two_sided_cells_mu_graph(n, **kl_kwargs))
        by_rsk = sorted(sorted(ws) for ws in shapes.values())
        ch.add("mu-graph cells equal RSK shape cells", by_mu == by_rsk)
    return ch.report()


def suite_kl_degrees(n: int, **kl_kwargs) -> dict:
    ch = Checks("kl-degrees", n)
    try:
        rep = verify_tetra_degrees(n, **kl_kwargs)
        ch.add("nonzero (z, d) pairs biject onto Tetr_n", True, {"points": rep["points"]})
        ch.add("sum of P_{e,z}(1) over the cell is C(n+1,3)", rep["sum_p_at_1"] == rep["binomial"], rep["sum_p_at_1"])
    except VerificationError as exc:
        ch.add("nonzero (z, d) pairs biject onto Tetr_n", False, exc.report.get("mismatches"))
    if n == 4:
        z = grid(4)[(2, 2)]
        ch.add("grid(2,2) = 4 2 3 1", z == Permutation((4, 2, 3, 1)), z.to_text())
        ch.add("P_{e,grid(2,2)} = 1 + q", kl_polynomial(identity(4), z, **kl_kwargs).coefficients == (1, 1))
    return ch.report()


def suite_figures(n: int = 3, **kl_kwargs) -> dict:
    ch = Checks("figures", n)
    named = {name: validate_asm(m) for name, m in figures.FIGURE1_MATRICES.items()}
    perm_of = {name: a.to_permutation() for name, a in named.items() if a.is_permutation()}
    lat = asm_lattice(3)
    ch.add("ASM_3 equals the seven reference matrices", sorted(a.entries for a in lat.labels) == sorted(a.entries for a in named.values()))
    name_of = {a: name for name, a in named.items()}
    edges = sorted((name_of[lat.labels[a]], name_of[lat.labels[b]]) for a, b in lat.cover_pairs())
    ch.add("Hasse edges match the reference diagram", edges == sorted(figures.FIGURE1_EDGES), edges)
    ch.add("the non-permutation element is s1 ∨ t", asm_mod.join(named["s1"], named["t"]) == named["s1vt"])
    ch.add("the meet of s1t and ts1 is s1 ∨ t", asm_mod.meet(named["s1t"], named["ts1"]) == named["s1vt"])
    ch.add("bigrassmannian checks on S_3", [w.to_text() for w in bigrassmannians(3)] == ["1 3 2", "2 1 3", "2 3 1", "3 1 2"])

    cells = grid(3)
    cell_of = {z: ij for ij, z in cells.items()}

    def circle_point(label):
        z_name, d = label
        i, j = cell_of[perm_of[z_name]]
        return (i, j, d)

    all_points = sorted(circle_point(c) for c in figures.FIGURE2_CIRCLES)
    ch.add("circles are exactly the points of Tetr_3", all_points == sorted(figures.FIGURE3_POINTS[3]))
    ch.add(
        "circle degrees are graded multiplicities of Delta_e",
        all(graded_mult(perm_of[z], **kl_kwargs).as_dict() == {d: 1} for z, d in figures.FIGURE2_CIRCLES),
    )
    ch.add(
        "drawn circle positions are the transposed grid cells",
        all(figures.FIGURE2_CIRCLES[c][::-1] == circle_point(c)[:2] for c in figures.FIGURE2_CIRCLES),
    )
    panels_ok = True
    panel_detail = {}
    for panel, (gens, empty) in figures.FIGURE2_PANELS.items():
        m = intersect([from_permutation(perm_of[g]) for g in gens])
        ideal_points = sorted((p.i, p.j, p.g) for p in map(ji_to_tetra, m.ideal))
        expect = sorted(circle_point(c) for c in empty)
        soc = sorted((lab.i, lab.j, lab.degree) for lab in socle(m))
        tetra3 = build_tetra(3)
        maximal = sorted(
            p for p in expect
            if not any(q != p and tetra3.leq(_tp(p), _tp(q)) for q in expect)
        )
        ok = ideal_points == expect and soc == maximal
        panels_ok &= ok
        panel_detail[panel] = {"empty": expect, "socle": soc, "ok": ok}
    ch.add("seven submodule panels regenerate exactly", panels_ok, panel_detail)
    gens, target = figures.FIGURE2_EXAMPLE
    ch.add(
        "worked example intersection",
        intersect([from_permutation(perm_of[g]) for g in gens]) == from_permutation(perm_of[target]),
    )
    ch.add("seven panels are all of the lattice", len(enumerate_verbar(3)) == len(figures.FIGURE2_PANELS))

    for k in sorted(figures.FIGURE3_POINTS):
        tetra = build_tetra(k)
        ch.add(f"Tetr_{k} points match the figure", sorted((p.i, p.j, p.g) for p in tetra.labels) == sorted(figures.FIGURE3_POINTS[k]))
        covers = sorted(
            ((tetra.labels[a].i, tetra.labels[a].j, tetra.labels[a].g), (tetra.labels[b].i, tetra.labels[b].j, tetra.labels[b].g))
            for a, b in tetra.cover_pairs()
        )
        ch.add(f"Tetr_{k} edges match the figure", covers == sorted(figures.FIGURE3_EDGES[k]), len(covers))
    ch.add("|Tetr_5| = 20", len(tetra_points(5)) == 20)
    return ch.report()


def _tp(p):
    from .tetra import TetraPoint

    return TetraPoint(*p)


SUITES = {
    "macneille": suite_macneille,
    "main-theorem": suite_main_theorem,
    "tetra-iso": suite_tetra_iso,
    "kl-multfree": suite_kl_multfree,
    "kl-degrees": suite_kl_degrees,
    "figures": suite_figures,
}

# (default bound, bound with the large flag)
SUITE_BOUNDS = {
    "macneille": (4, 5),
    "main-theorem": (5, 5),
    "tetra-iso": (6, 7),
    "kl-multfree": (5, 6),
    "kl-degrees": (5, 6),
    "figures": (5, 5),
}

_KL_SUITES = {"kl-multfree", "kl-degrees", "figures"}


def run_suite(name: str, n: int, large: bool = False, cache_dir=None, use_cache: bool = True) -> dict:
    """Run one suite and return its report; raise ``VerificationError`` on failure."""
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    low = 2 if name != "figures" else 1
    bound = SUITE_BOUNDS[name][1 if large else 0]
    if n < low:
        raise InputError(f"suite {name} needs n >= {low}")
    if n > bound:
        raise ResourceLimitError(f"suite {name} is limited to n <= {bound}" + ("" if large else " without --large"))
    kwargs = {}
    if name in _KL_SUITES:
        kwargs = {"cache_dir": cache_dir, "use_cache": use_cache}
    report = SUITES[name](n, **kwargs)
    if not report["passed"]:
        raise VerificationError(f"suite {name} failed at n={n}: {', '.join(report['failed'])}", report)
    return report
