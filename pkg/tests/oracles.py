"""Slow reference implementations used only by the tests."""

from __future__ import annotations

import itertools

from asmverma.perm import Permutation, bruhat_leq, enumerate_sn, length


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _pshift(a, k):
    return [0] * k + list(a)


def _pscale(a, c):
    return [c * v for v in a]


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def kl_right_recursion(n: int) -> dict[tuple[Permutation, Permutation], tuple[int, ...]]:
    """KL polynomials by the textbook right-descent recursion, one pair at a time."""
    perms = sorted(enumerate_sn(n), key=lambda w: (length(w), w.image))
    P: dict = {}

    def get(x, y):
        return P.get((x, y), ())

    def mu(z, v):
        d = length(v) - length(z) - 1
        if d < 0 or d % 2:
            return 0
        c = get(z, v)
        return c[d // 2] if len(c) > d // 2 else 0

    for y in perms:
        if y.is_identity():
            P[(y, y)] = (1,)
            continue
        s = next(i for i in range(1, n) if y(i) > y(i + 1))
        v = y.swap_positions(s)
        for x in perms:
            if not bruhat_leq(x, y):
                continue
            xs = x.swap_positions(s)
            c = 1 if length(xs) < length(x) else 0
            poly = _padd(_pshift(get(xs, v), 1 - c), _pshift(get(x, v), c))
            for z in perms:
                zs = z.swap_positions(s)
                if length(zs) < length(z) and bruhat_leq(x, z) and bruhat_leq(z, v) and z != v:
                    m = mu(z, v)
                    if m:
                        k = (length(y) - length(z)) // 2
                        poly = _padd(poly, _pscale(_pshift(get(x, z), k), -m))
            P[(x, y)] = _trim(poly)
    return P


def is_asm_bruteforce(rows) -> bool:
    n = len(rows)
    lines = [list(r) for r in rows] + [[rows[i][j] for i in range(n)] for j in range(n)]
    for line in lines:
        nz = [v for v in line if v]
        if not nz or nz[0] != 1 or nz[-1] != 1:
            return False
        if any(a == b for a, b in zip(nz, nz[1:])):
            return False
    return True


def all_asms_bruteforce(n: int):
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        if is_asm_bruteforce(rows):
            out.append(rows)
    return sorted(out)


def perm_from_word(word, n):
    """Product of simple reflections applied left to right as position swaps."""
    w = Permutation(tuple(range(1, n + 1)))
    for i in word:
        w = w.swap_positions(i)
    return w
