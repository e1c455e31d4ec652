"""Cyclic path decompositions of K_{v/t x t} built from simple orderings."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Literal, Optional, Sequence

from .constructions import NzsArray
from .modcore import AnchoredSequence, ModulusContext, is_simple, modulus, partial_sums
from .verifier import DirectedCyclicOrdering

Edge = tuple[int, int]


class NotSimple(ValueError):
    pass


def edge(x: int, y: int) -> Edge:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class PathBlock:
    vertices: tuple[int, ...]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge(vs[p], vs[p + 1]) for p in range(len(vs) - 1)]

    def translate(self, g: int, v: int) -> "PathBlock":
        return PathBlock(tuple((x + g) % v for x in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices) - 1


@dataclass
class Decomposition:
    base_blocks: list[PathBlock]
    v: int
    axis: str = ""
    blocks: list[PathBlock] = field(default_factory=list)

    def edges(self) -> Iterable[Edge]:
        for b in self.blocks:
            yield from b.edges()


def base_block(line: AnchoredSequence | Sequence[int], v: ModulusContext | int) -> PathBlock:
    """(0, s_1, ..., s_k) for a simple anchored line."""
    v = modulus(v)
    res = is_simple(line, v)
    if not res:
        raise NotSimple(f"partial sums collide at positions {res.first}, {res.second}")
    return PathBlock((0, *partial_sums(line, v)))


def multipartite_edges(ctx: ModulusContext) -> set[Edge]:
    """Edges of K_{v/t x t}: pairs of residues whose difference avoids J."""
    v, step = ctx.v, ctx.step
    return {(x, y) for x in range(v) for y in range(x + 1, v) if (y - x) % step}


def develop(base_blocks: Sequence[PathBlock], v: ModulusContext | int, axis: str = "") -> Decomposition:
    v = modulus(v)
    blocks = [b.translate(g, v) for b in base_blocks for g in range(v)]
    return Decomposition(list(base_blocks), v, axis, blocks)


@dataclass
class PartitionResult:
    ok: bool
    defects: dict[Edge, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def check_partition(D: Decomposition, ctx: ModulusContext) -> PartitionResult:
    """Every edge of K_{v/t x t} covered exactly once; defects map edge -> multiplicity."""
    target = multipartite_edges(ctx)
    cover = Counter(D.edges())
    defects = {e: c for e, c in cover.items() if c != 1 or e not in target}
    defects.update({e: 0 for e in target if e not in cover})
    return PartitionResult(not defects, dict(sorted(defects.items())))


@dataclass
class OrthogonalityResult:
    ok: bool
    witness: Optional[tuple[PathBlock, PathBlock]] = None

    def __bool__(self) -> bool:
        return self.ok


def check_orthogonal(D1: Decomposition, D2: Decomposition) -> OrthogonalityResult:
    """Every block of D1 shares at most one edge with every block of D2."""
    if D1.v != D2.v:
        raise ValueError("decompositions live on different moduli")
    index: dict[Edge, list[int]] = defaultdict(list)
    for bid, b in enumerate(D2.blocks):
        for e in b.edges():
            index[e].append(bid)
    for b1 in D1.blocks:
        hits = Counter(bid for e in b1.edges() for bid in index.get(e, ()))
        for bid, c in hits.items():
            if c > 1:
                return OrthogonalityResult(False, (b1, D2.blocks[bid]))
    return OrthogonalityResult(True)


@dataclass(frozen=True)
class Circuit:
    """Closed walk through x_0, built from ``source`` and its translates by x_k - x_0."""

    vertices: tuple[int, ...]
    source: PathBlock
    multiplier: int

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge(vs[p], vs[(p + 1) % len(vs)]) for p in range(len(vs))]


def circuit_closure(P: PathBlock, v: ModulusContext | int) -> Circuit:
    v = modulus(v)
    xs = P.vertices
    d = (xs[-1] - xs[0]) % v
    lam = v // gcd(d, v)
    walk: list[int] = []
    for i in range(lam):
        walk.extend((x + i * d) % v for x in xs[:-1])
    return Circuit(tuple(walk), P, lam)


def row_decomposition(A: NzsArray, dirs: Optional[DirectedCyclicOrdering] = None) -> Decomposition:
    """D_R from natural left-to-right readings, or D_{omega_r^-1} when ``dirs`` is given.

    The inverse ordering of a row is its chosen reading reversed, anchored at
    that reading's last element.
    """
    m, _ = A.shape
    lines = []
    for i in range(m):
        if dirs is None:
            lines.append(AnchoredSequence(tuple(A.row(i))))
        else:
            lines.append(dirs.row_reading(A, i).reversed())
    return develop([base_block(l, A.v) for l in lines], A.v, "rows")


def col_decomposition(A: NzsArray, dirs: Optional[DirectedCyclicOrdering] = None) -> Decomposition:
    """D_C from top-to-bottom readings, or D_{omega_c} when ``dirs`` is given."""
    _, n = A.shape
    lines = [AnchoredSequence(tuple(A.col(j))) if dirs is None else dirs.col_reading(A, j)
             for j in range(n)]
    return develop([base_block(l, A.v) for l in lines], A.v, "cols")


def circuits(D: Decomposition) -> list[Circuit]:
    """Distinct circuits C_P over all blocks P of D (translates along P's own closure coincide)."""
    out = []
    seen = set()
    for b in D.blocks:
        c = circuit_closure(b, D.v)
        key = frozenset(c.edges())
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out
