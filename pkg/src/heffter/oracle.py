"""Brute-force reference routes, kept independent of the fast paths they check."""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .constructions import NzsArray
from .modcore import ModulusContext, modulus

NH22_T = (1, 2, 4, 8)


def accumulate(seq: Sequence[int], v: ModulusContext | int) -> list[int]:
    v = modulus(v)
    out = []
    total = 0
    for x in seq:
        total += x
        out.append(total % v)
    return out


def count_edge_cover(blocks: Iterable[Sequence[int]], v: ModulusContext | int) -> np.ndarray:
    """Dense symmetric v x v multiplicity matrix of the blocks' edges."""
    v = modulus(v)
    cover = np.zeros((v, v), dtype=np.int64)
    for b in blocks:
        for x, y in zip(b, b[1:]):
            cover[x % v, y % v] += 1
            if x % v != y % v:
                cover[y % v, x % v] += 1
    return cover


def multipartite_adjacency(v: int, t: int) -> np.ndarray:
    idx = np.arange(v)
    diff = (idx[:, None] - idx[None, :]) % v
    return (diff % (v // t) != 0).astype(np.int64)


def _nh22_classes(t: int) -> list[int]:
    v = 8 + t
    return [x for x in range(1, v // 2 + 1) if x % (v // t)]


def nh22_candidates(t: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All 2x2 fillings using one signed representative of each of the four classes."""
    if t not in NH22_T:
        raise ValueError(f"t={t} is not admissible for n=2")
    classes = _nh22_classes(t)
    assert len(classes) == 4
    out = []
    for perm in itertools.permutations(classes):
        for signs in itertools.product((1, -1), repeat=4):
            a, b, c, d = (s * x for s, x in zip(signs, perm))
            out.append(((a, b), (c, d)))
    return out


def nh22_raw_candidates(t: int) -> Iterable[tuple[tuple[int, int], tuple[int, int]]]:
    """Every 2x2 filling by nonzero residues of Z_{8+t}, valid or not."""
    if t not in NH22_T:
        raise ValueError(f"t={t} is not admissible for n=2")
    vals = range(1, 8 + t)
    for a, b, c, d in itertools.product(vals, repeat=4):
        yield (a, b), (c, d)


def nh22_is_valid(rows, t: int) -> bool:
    """Direct check of a 2x2 candidate: covers Z_v minus J once, lines globally simple."""
    v = 8 + t
    q = v // t
    (a, b), (c, d) = rows
    entries = [a % v, b % v, c % v, d % v]
    plus_minus = sorted(entries + [-x % v for x in entries])
    if plus_minus != [x for x in range(v) if x % q]:
        return False
    # a two-element line (x, y) is simple iff x != 0, y != 0 and x + y != 0
    for x, y in ((a, b), (c, d), (a, c), (b, d)):
        if x % v == 0 or y % v == 0 or (x + y) % v == 0:
            return False
    return True


def enumerate_nh22(t: int, reduce_symmetry: bool = False) -> list[NzsArray]:
    """Every globally simple NH_t(2;2), in lexicographic candidate order.

    With ``reduce_symmetry`` only arrays whose (0,0) entry is the smallest
    class with positive sign are kept.
    """
    out = []
    classes = _nh22_classes(t)
    for rows in nh22_candidates(t):
        if reduce_symmetry and rows[0][0] != classes[0]:
            continue
        if nh22_is_valid(rows, t):
            out.append(NzsArray(ModulusContext(2, t), rows, "external"))
    return out


def trace_faces_bruteforce(v: int, local_rotation: dict) -> list[list[tuple[int, int]]]:
    """Faces of a rotation system given as head lists.

    ``local_rotation[x]`` is the cyclic list of neighbours of ``x``.  Darts
    are (tail, head) pairs; a face follows dart (u, w) with (w, next neighbour
    of w after u).
    """
    nxt = {}
    for x, nbrs in local_rotation.items():
        for p, y in enumerate(nbrs):
            nxt[(x, y)] = nbrs[(p + 1) % len(nbrs)]
    faces = []
    seen = set()
    for dart in sorted(nxt):
        if dart in seen:
            continue
        face = []
        u, w = dart
        while (u, w) not in seen:
            seen.add((u, w))
            face.append((u, w))
            u, w = w, nxt[(w, u)]
        faces.append(face)
    return faces


def archdeacon_rotation(A: NzsArray, row_dirs: Sequence[int], col_dirs: Sequence[int]) -> dict:
    """Local rotations at each vertex, built straight from the array by cell walking.

    Around every vertex the differences are visited as
    a, -(row-successor of a), column-successor of that, ... .
    """
    v = A.v
    m, n = A.shape
    cell_of = {x: (i, j) for i, j, x in A.filled()}

    def row_next(i: int, j: int) -> tuple[int, int]:
        return i, (j + row_dirs[i]) % n

    def col_next(i: int, j: int) -> tuple[int, int]:
        return (i + col_dirs[j]) % m, j

    start = A.cells[0][0]
    cycle = []
    i, j = cell_of[start]
    for _ in range(m * n):
        cycle.append(A.cells[i][j])
        ri, rj = row_next(i, j)
        cycle.append(-A.cells[ri][rj] % v)
        i, j = col_next(ri, rj)
    return {x: [(x + d) % v for d in cycle] for x in range(v)}
