"""
Acceptance criteria, one test each.  Every test starts from cold in-process
caches and a fresh KL cache directory so the time limits measure real work.
All numeric checks are exact (zero tolerance); only wall-clock limits are
approximate, and those are pinned below.
"""

import math
import time

import pytest

from asmverma import asm as asm_mod
from asmverma import kl as kl_mod
from asmverma import perm as perm_mod
from asmverma import tetra as tetra_mod
from asmverma import verma as verma_mod
from asmverma.asm import asm_count_product_formula, enumerate_asm, enumerate_asm_naive
from asmverma.cells import grid, penultimate_cell
from asmverma.kl import kl_polynomial
from asmverma.perm import Permutation, identity, left_ascents, right_ascents
from asmverma.verify import run_suite

from oracles import all_asms_bruteforce

# wall-clock limits in seconds
LIMIT_COUNTS = 5.0
LIMIT_FIGURES = 1.0
LIMIT_MACNEILLE_N5 = 60.0
LIMIT_MAIN = 30.0
LIMIT_TETRA = 10.0
LIMIT_KL_N5 = 10.0
LIMIT_KL_N6 = 600.0


def cold():
    for fn in (
        asm_mod._enumerate_cached,
        asm_mod._lattice_cached,
        perm_mod._corner_sums,
        tetra_mod.build_tetra,
        tetra_mod.ji_poset,
        verma_mod._grid_cached,
        verma_mod._ideal_to_asm,
    ):
        fn.cache_clear()
    kl_mod._TABLES.clear()


@pytest.fixture
def clock(tmp_path):
    cold()
    start = time.perf_counter()

    def elapsed():
        return time.perf_counter() - start

    elapsed.cache_dir = tmp_path
    return elapsed


def test_criterion_1_asm_counts(clock):
    counts = [len(enumerate_asm(n)) for n in range(1, 6)]
    assert counts == [1, 2, 7, 42, 429]
    assert counts == [asm_count_product_formula(n) for n in range(1, 6)]
    for n in range(1, 4):
        assert enumerate_asm_naive(n) == enumerate_asm(n)
        assert sorted(a.entries for a in enumerate_asm(n)) == all_asms_bruteforce(n)
    assert clock() < LIMIT_COUNTS


def test_criterion_2_figure_regression(clock):
    report = run_suite("figures", 3, cache_dir=clock.cache_dir)
    assert report["passed"], report["failed"]
    assert clock() < LIMIT_FIGURES


@pytest.mark.parametrize("n", [2, 3, 4])
def test_criterion_3_macneille(clock, n):
    report = run_suite("macneille", n)
    assert report["passed"], report["failed"]


@pytest.mark.large
def test_criterion_3_macneille_n5(clock):
    report = run_suite("macneille", 5, large=True)
    assert report["passed"], report["failed"]
    assert clock() < LIMIT_MACNEILLE_N5


def test_criterion_4_main_theorem(clock):
    for n in (2, 3, 4, 5):
        report = run_suite("main-theorem", n)
        assert report["passed"], report["failed"]
    checks = {c["name"]: c for c in report["checks"]}
    # n = 5: 10^4 random antichain intersections through both routes
    assert checks["corner-sum formula agrees with ideal union + Birkhoff"]["detail"] == 10_000
    assert clock() < LIMIT_MAIN


def test_criterion_5_tetrahedron(clock):
    for n in range(2, 7):
        report = run_suite("tetra-iso", n)
        assert report["passed"], report["failed"]
        assert len(tetra_mod.tetra_points(n)) == math.comb(n + 1, 3)
    assert clock() < LIMIT_TETRA


def test_criterion_6_multiplicity_free(clock):
    for n in range(2, 6):
        report = run_suite("kl-multfree", n, cache_dir=clock.cache_dir)
        assert report["passed"], report["failed"]
    assert clock() < LIMIT_KL_N5


@pytest.mark.large
def test_criterion_6_multiplicity_free_n6(clock):
    report = run_suite("kl-multfree", 6, large=True, cache_dir=clock.cache_dir, use_cache=False)
    assert report["passed"], report["failed"]
    assert clock() < LIMIT_KL_N6


def test_criterion_7_degrees_biject_onto_tetra(clock):
    for n, expected in ((3, 4), (4, 10), (5, 20)):
        report = run_suite("kl-degrees", n, cache_dir=clock.cache_dir)
        assert report["passed"], report["failed"]
        e = identity(n)
        total = sum(kl_polynomial(e, z, cache_dir=clock.cache_dir)(1) for z in grid(n).values())
        assert total == expected


def test_criterion_8_grid(clock):
    for n in range(2, 7):
        cell = penultimate_cell(n)
        assert len(cell) == (n - 1) ** 2
        assert len({(g.i, g.j) for g in cell}) == (n - 1) ** 2
        assert all(left_ascents(g.z) == {g.i} and right_ascents(g.z) == {g.j} for g in cell)
    z = grid(4)[(2, 2)]
    assert z == Permutation((4, 2, 3, 1))
    assert kl_polynomial(identity(4), z, cache_dir=clock.cache_dir).coefficients == (1, 1)


@pytest.mark.parametrize(
    "suite, n",
    [
        ("macneille", 4),
        ("main-theorem", 4),
        ("tetra-iso", 6),
        ("kl-multfree", 5),
        ("kl-degrees", 5),
        ("figures", 5),
    ],
)
def test_criterion_9_property_suites(clock, suite, n):
    report = run_suite(suite, n, cache_dir=clock.cache_dir)
    assert report["passed"], report["failed"]
    if suite == "kl-multfree":
        names = {c["name"] for c in report["checks"]}
        assert "KL invariance under inversion and conjugation by w0" in names
