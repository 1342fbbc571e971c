"""
Golden reference data for regression checks (ASM_3, the seven
submodule panels for n = 3, and the tetrahedral posets for n = 3, 4, 5).

Elements of S_3 are named by the words printed next to their matrices; the
words are only names here, the matrices fix the permutations.
"""

from __future__ import annotations

# name -> matrix as printed
FIGURE1_MATRICES = {
    "e": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "s1": ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    "t": ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    "s1vt": ((0, 1, 0), (1, -1, 1), (0, 1, 0)),
    "ts1": ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    "s1t": ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    "w0": ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
}

# Hasse edges, (upper-in-drawing, lower-in-drawing); e is drawn on top and is the minimum
FIGURE1_EDGES = (
    ("e", "s1"),
    ("e", "t"),
    ("s1", "s1vt"),
    ("t", "s1vt"),
    ("s1vt", "ts1"),
    ("s1vt", "s1t"),
    ("ts1", "w0"),
    ("s1t", "w0"),
)

# circle label (simple's name, degree) -> drawn (x, y) position
FIGURE2_CIRCLES = {
    ("t", 1): (1, 1),
    ("ts1", 2): (1, 2),
    ("s1t", 2): (2, 1),
    ("s1", 1): (2, 2),
}

# panel -> (permutations intersected, circles drawn empty)
FIGURE2_PANELS = {
    "Delta_e": (("e",), ()),
    "Delta_s1": (("s1",), (("t", 1),)),
    "Delta_t": (("t",), (("s1", 1),)),
    "Delta_s1 ∩ Delta_t": (("s1", "t"), (("t", 1), ("s1", 1))),
    "Delta_ts1": (("ts1",), (("t", 1), ("s1t", 2), ("s1", 1))),
    "Delta_s1t": (("s1t",), (("t", 1), ("ts1", 2), ("s1", 1))),
    "Delta_w0": (("w0",), (("t", 1), ("ts1", 2), ("s1t", 2), ("s1", 1))),
}

# the intersection singled out in the worked example
FIGURE2_EXAMPLE = (("s1t", "ts1"), "w0")

FIGURE3_POINTS = {
    3: ((1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)),
    4: (
        (1, 1, 3), (1, 2, 4), (1, 3, 5), (2, 1, 4), (2, 2, 5),
        (2, 2, 3), (2, 3, 4), (3, 1, 5), (3, 2, 4), (3, 3, 3),
    ),
    5: (
        (1, 1, 6), (1, 2, 7), (1, 3, 8), (1, 4, 9), (2, 1, 7),
        (2, 2, 8), (2, 2, 6), (2, 3, 9), (2, 3, 7), (2, 4, 8),
        (3, 1, 8), (3, 2, 9), (3, 2, 7), (3, 3, 8), (3, 3, 6),
        (3, 4, 7), (4, 1, 9), (4, 2, 8), (4, 3, 7), (4, 4, 6),
    ),
}

FIGURE3_EDGES = {
    3: (
        ((1, 1, 1), (1, 2, 2)), ((1, 1, 1), (2, 1, 2)),
        ((2, 2, 1), (1, 2, 2)), ((2, 2, 1), (2, 1, 2)),
    ),
    4: (
        ((1, 1, 3), (1, 2, 4)), ((1, 1, 3), (2, 1, 4)), ((1, 2, 4), (1, 3, 5)),
        ((1, 2, 4), (2, 2, 5)), ((2, 1, 4), (2, 2, 5)), ((2, 1, 4), (3, 1, 5)),
        ((2, 2, 3), (1, 2, 4)), ((2, 2, 3), (2, 1, 4)), ((2, 2, 3), (2, 3, 4)),
        ((2, 2, 3), (3, 2, 4)), ((2, 3, 4), (1, 3, 5)), ((2, 3, 4), (2, 2, 5)),
        ((3, 2, 4), (2, 2, 5)), ((3, 2, 4), (3, 1, 5)), ((3, 3, 3), (2, 3, 4)),
        ((3, 3, 3), (3, 2, 4)),
    ),
    5: (
        ((1, 1, 6), (1, 2, 7)), ((1, 1, 6), (2, 1, 7)), ((1, 2, 7), (1, 3, 8)),
        ((1, 2, 7), (2, 2, 8)), ((1, 3, 8), (1, 4, 9)), ((1, 3, 8), (2, 3, 9)),
        ((2, 1, 7), (2, 2, 8)), ((2, 1, 7), (3, 1, 8)), ((2, 2, 8), (2, 3, 9)),
        ((2, 2, 8), (3, 2, 9)), ((2, 2, 6), (1, 2, 7)), ((2, 2, 6), (2, 1, 7)),
        ((2, 2, 6), (2, 3, 7)), ((2, 2, 6), (3, 2, 7)), ((2, 3, 7), (1, 3, 8)),
        ((2, 3, 7), (2, 2, 8)), ((2, 3, 7), (2, 4, 8)), ((2, 3, 7), (3, 3, 8)),
        ((2, 4, 8), (1, 4, 9)), ((2, 4, 8), (2, 3, 9)), ((3, 1, 8), (3, 2, 9)),
        ((3, 1, 8), (4, 1, 9)), ((3, 2, 7), (2, 2, 8)), ((3, 2, 7), (3, 1, 8)),
        ((3, 2, 7), (3, 3, 8)), ((3, 2, 7), (4, 2, 8)), ((3, 3, 8), (2, 3, 9)),
        ((3, 3, 8), (3, 2, 9)), ((3, 3, 6), (2, 3, 7)), ((3, 3, 6), (3, 2, 7)),
        ((3, 3, 6), (3, 4, 7)), ((3, 3, 6), (4, 3, 7)), ((3, 4, 7), (2, 4, 8)),
        ((3, 4, 7), (3, 3, 8)), ((4, 2, 8), (3, 2, 9)), ((4, 2, 8), (4, 1, 9)),
        ((4, 3, 7), (3, 3, 8)), ((4, 3, 7), (4, 2, 8)), ((4, 4, 6), (3, 4, 7)),
        ((4, 4, 6), (4, 3, 7)),
    ),
}
