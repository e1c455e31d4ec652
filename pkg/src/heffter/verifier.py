"""Certification of the array axioms, global simplicity and compatible orderings."""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional, Sequence

from .constructions import NzsArray
from .modcore import AnchoredSequence, ModulusContext, is_simple, modulus, signed

DEFAULT_ORDERING_BOUND = 12
EXHAUSTIVE_MAX_N = 6


class BoundExceeded(ValueError):
    pass


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class LineFailure:
    """A line whose anchored reading is not simple.

    ``first``/``second`` are 0-based positions in the reading; ``second`` is
    ``None`` when partial sum ``first`` is zero.
    """

    axis: str
    index: int
    first: int
    second: Optional[int]


@dataclass
class VerificationReport:
    filled_counts_ok: bool
    support_ok: bool
    sums_ok: bool
    globally_simple: bool
    bad_counts: list[tuple[str, int, int]] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)
    duplicated: list[int] = field(default_factory=list)
    forbidden: list[int] = field(default_factory=list)
    zero_sum_lines: list[tuple[str, int]] = field(default_factory=list)
    simplicity_failure: Optional[LineFailure] = None

    @property
    def overall(self) -> bool:
        return self.filled_counts_ok and self.support_ok and self.sums_ok and self.globally_simple

    def to_dict(self) -> dict:
        d = asdict(self)
        d["overall"] = self.overall
        d["bad_counts"] = [list(x) for x in self.bad_counts]
        d["zero_sum_lines"] = [list(x) for x in self.zero_sum_lines]
        return d


def _lines(A: NzsArray) -> Iterable[tuple[str, int, list[int]]]:
    m, n = A.shape
    for i in range(m):
        yield "row", i, A.row(i)
    for j in range(n):
        yield "col", j, A.col(j)


def expected_fill(A: NzsArray) -> tuple[int, int]:
    """Filled cells expected per row and per column, from v, t and the shape."""
    m, n = A.shape
    total = (A.v - A.ctx.t) // 2
    return total // m, total // n


def check_globally_simple(A: NzsArray) -> Optional[LineFailure]:
    """``None`` if every row/column, anchored at its first filled cell, is simple."""
    for axis, idx, values in _lines(A):
        if not values:
            return LineFailure(axis, idx, 0, None)
        res = is_simple(AnchoredSequence(tuple(values)), A.v)
        if not res:
            return LineFailure(axis, idx, res.first, res.second)
    return None


def check_axioms(A: NzsArray) -> VerificationReport:
    v, ctx = A.v, A.ctx
    m, n = A.shape
    h, k = expected_fill(A)

    bad_counts = []
    for i in range(m):
        if len(A.row(i)) != h:
            bad_counts.append(("row", i, len(A.row(i))))
    for j in range(n):
        if len(A.col(j)) != k:
            bad_counts.append(("col", j, len(A.col(j))))

    counts = [0] * v
    for _, _, x in A.filled():
        counts[x] += 1
        counts[-x % v] += 1
    missing, duplicated, forbidden = [], [], []
    for x in range(1, v // 2 + 1):
        if ctx.in_subgroup(x):
            if counts[x]:
                forbidden.append(x)
        elif counts[x] == 0:
            missing.append(x)
        elif counts[x] > 1:
            duplicated.append(x)
    if counts[0]:
        forbidden.insert(0, 0)

    zero_sum = [(axis, idx) for axis, idx, vals in _lines(A) if sum(vals) % v == 0]
    failure = check_globally_simple(A)
    return VerificationReport(
        filled_counts_ok=not bad_counts,
        support_ok=not (missing or duplicated or forbidden),
        sums_ok=not zero_sum,
        globally_simple=failure is None,
        bad_counts=bad_counts,
        missing=missing,
        duplicated=duplicated,
        forbidden=forbidden,
        zero_sum_lines=zero_sum,
        simplicity_failure=failure,
    )


def support(A: NzsArray) -> list[int]:
    """Sorted absolute values of the signed entries."""
    return sorted(abs(signed(x, A.v)) for _, _, x in A.filled())


def is_admissible(n: int, k: int, t: int, lam: int = 1) -> bool:
    if min(n, k, t, lam) < 1:
        raise ValueError("parameters must be positive")
    total = 2 * n * k
    return total % lam == 0 and (total // lam) % t == 0


def find_simple_ordering(T: Sequence[int], v: ModulusContext | int,
                         bound: int = DEFAULT_ORDERING_BOUND) -> tuple[int, ...]:
    """Depth-first search for an ordering of ``T`` with nonzero, distinct partial sums."""
    v = modulus(v)
    items = sorted(x % v for x in T)
    if not items:
        raise ValueError("T must be nonempty")
    if len(items) > bound:
        raise BoundExceeded(f"|T|={len(items)} exceeds the search bound {bound}")
    if any(x == 0 for x in items):
        raise ValueError("T must not contain 0")
    if sum(items) % v == 0:
        raise ValueError("the elements of T sum to 0")

    used = [False] * len(items)
    order: list[int] = []
    seen: set[int] = set()

    def dfs(s: int) -> bool:
        if len(order) == len(items):
            return True
        tried = set()
        for idx, x in enumerate(items):
            if used[idx] or x in tried:
                continue
            tried.add(x)
            nxt = (s + x) % v
            if nxt == 0 or nxt in seen:
                continue
            used[idx] = True
            order.append(x)
            seen.add(nxt)
            if dfs(nxt):
                return True
            seen.discard(nxt)
            order.pop()
            used[idx] = False
        return False

    if dfs(0):
        return tuple(order)
    raise NotFound(f"no simple ordering of {items} in Z_{v}")


@dataclass(frozen=True)
class DirectedCyclicOrdering:
    """Direction (+1 forward, -1 reverse) of every row and every column."""

    row_dirs: tuple[int, ...]
    col_dirs: tuple[int, ...]

    @classmethod
    def forward(cls, m: int, n: int) -> "DirectedCyclicOrdering":
        return cls((1,) * m, (1,) * n)

    def row_reading(self, A: NzsArray, i: int) -> AnchoredSequence:
        """Row ``i`` in its chosen direction; reversed rows start from the last cell."""
        vals = tuple(A.row(i))
        return AnchoredSequence(vals if self.row_dirs[i] == 1 else vals[::-1])

    def col_reading(self, A: NzsArray, j: int) -> AnchoredSequence:
        vals = tuple(A.col(j))
        return AnchoredSequence(vals if self.col_dirs[j] == 1 else vals[::-1])


def _cyclic_successors(cells: list[tuple[int, int]], direction: int) -> dict:
    step = 1 if direction == 1 else -1
    return {c: cells[(p + step) % len(cells)] for p, c in enumerate(cells)}


def row_permutation(A: NzsArray, dirs: DirectedCyclicOrdering) -> dict:
    """omega_r as a map on filled cells (i, j)."""
    m, _ = A.shape
    perm = {}
    for i in range(m):
        cells = [(i, j) for j, c in enumerate(A.cells[i]) if c is not None]
        perm.update(_cyclic_successors(cells, dirs.row_dirs[i]))
    return perm


def col_permutation(A: NzsArray, dirs: DirectedCyclicOrdering) -> dict:
    _, n = A.shape
    perm = {}
    for j in range(n):
        cells = [(i, j) for i, row in enumerate(A.cells) if row[j] is not None]
        perm.update(_cyclic_successors(cells, dirs.col_dirs[j]))
    return perm


def cycle_lengths(perm: dict) -> list[int]:
    seen = set()
    out = []
    for start in perm:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        out.append(length)
    return sorted(out)


def composition_cycles(A: NzsArray, dirs: DirectedCyclicOrdering) -> list[int]:
    """Cycle lengths of omega_c after omega_r on the filled cells."""
    wr = row_permutation(A, dirs)
    wc = col_permutation(A, dirs)
    return cycle_lengths({c: wc[wr[c]] for c in wr})


def is_compatible(A: NzsArray, dirs: DirectedCyclicOrdering) -> bool:
    return len(composition_cycles(A, dirs)) == 1


def readings_simple(A: NzsArray, dirs: DirectedCyclicOrdering) -> bool:
    m, n = A.shape
    return (all(is_simple(dirs.row_reading(A, i), A.v) for i in range(m))
            and all(is_simple(dirs.col_reading(A, j), A.v) for j in range(n)))


def _pattern(bits: Sequence[int], m: int) -> DirectedCyclicOrdering:
    dirs = tuple(1 if b else -1 for b in bits)
    return DirectedCyclicOrdering(dirs[:m], dirs[m:])


def find_compatible_orderings(A: NzsArray, seed: int = 0, max_tries: int = 200_000,
                              workers: int = 1) -> DirectedCyclicOrdering:
    """Search row/column directions making omega_c after omega_r one full cycle.

    Arrays with at most ``EXHAUSTIVE_MAX_N`` rows and columns are searched
    exhaustively in binary-counter order; larger arrays draw random patterns
    from ``random.Random(seed)``.  Every chosen reading must also be simple.
    With ``workers > 1`` tries are evaluated in chunks, and the lowest
    successful try index wins, so the result does not depend on ``workers``.
    """
    m, n = A.shape
    size = m + n
    if max(m, n) <= EXHAUSTIVE_MAX_N:
        # bit 1 = forward; start from the all-forward pattern
        candidates: Iterable = (tuple(1 - b for b in bits)
                                for bits in itertools.product((0, 1), repeat=size))
        limit = 2 ** size
    else:
        rng = random.Random(seed)
        candidates = (tuple(rng.getrandbits(1) for _ in range(size)) for _ in range(max_tries))
        limit = max_tries

    def ok(bits: tuple) -> bool:
        dirs = _pattern(bits, m)
        return is_compatible(A, dirs) and readings_simple(A, dirs)

    if workers <= 1:
        for bits in candidates:
            if ok(bits):
                return _pattern(bits, m)
    else:
        chunk = 64 * workers
        with ThreadPoolExecutor(max_workers=workers) as pool:
            while True:
                batch = list(itertools.islice(candidates, chunk))
                if not batch:
                    break
                for bits, good in zip(batch, pool.map(ok, batch)):
                    if good:
                        return _pattern(bits, m)
    raise NotFound(f"no compatible orderings among {limit} direction patterns")
