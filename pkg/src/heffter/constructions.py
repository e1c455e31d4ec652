"""Direct constructions of tight globally simple NH_t(n;n) arrays.

Every constructor returns an :class:`NzsArray` whose cells hold canonical
residues.  ``construct(n, t)`` dispatches on the parameters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Optional, Sequence

from .modcore import ModulusContext, UnsupportedParameters, signed

Provenance = Literal["t2", "t2n", "tn2", "t2n2", "t_div_n", "lookup_n2", "external"]
Axis = Literal["row", "col"]

Cell = Optional[int]


@dataclass(frozen=True)
class NzsArray:
    """A partially filled array over Z_v, cells indexed from 0."""

    ctx: ModulusContext
    cells: tuple[tuple[Cell, ...], ...]
    provenance: str = "external"

    def __post_init__(self) -> None:
        v = self.ctx.v
        cells = tuple(tuple(None if c is None else c % v for c in row) for row in self.cells)
        if not cells or any(len(r) != len(cells[0]) for r in cells):
            raise ValueError("cells must form a nonempty rectangular grid")
        object.__setattr__(self, "cells", cells)

    @property
    def v(self) -> int:
        return self.ctx.v

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.cells), len(self.cells[0])

    @property
    def is_tight(self) -> bool:
        return all(c is not None for row in self.cells for c in row)

    def row(self, i: int) -> list[int]:
        return [c for c in self.cells[i] if c is not None]

    def col(self, j: int) -> list[int]:
        return [row[j] for row in self.cells if row[j] is not None]

    def line(self, axis: Axis, index: int) -> list[int]:
        return self.row(index) if axis == "row" else self.col(index)

    def filled(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.cells):
            for j, c in enumerate(row):
                if c is not None:
                    yield i, j, c

    def signed_rows(self) -> list[list[Optional[int]]]:
        v = self.v
        return [[None if c is None else signed(c, v) for c in row] for row in self.cells]

    @classmethod
    def from_signed(cls, rows: Sequence[Sequence[Cell]], t: int, provenance: str = "external",
                    k: int | None = None) -> "NzsArray":
        ncols = len(rows[0])
        ctx = ModulusContext(ncols, t, k)
        return cls(ctx, tuple(tuple(r) for r in rows), provenance)


def _eps(i: int, j: int) -> int:
    """+1 when the 1-based indices have equal parity, -1 otherwise."""
    return 1 if (i - j) % 2 == 0 else -1


def _require_odd(n: int, what: str) -> None:
    if n < 1 or n % 2 == 0:
        raise UnsupportedParameters(f"{what} needs an odd n >= 1, got n={n}")


def _build(n: int, t: int, entry, provenance: str) -> NzsArray:
    ctx = ModulusContext(n, t)
    cells = tuple(tuple(entry(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    return NzsArray(ctx, cells, provenance)


def construct_t2(n: int) -> NzsArray:
    """NH_2(n;n) over Z_{2n^2+2}, any n >= 1."""
    if n < 1:
        raise UnsupportedParameters(f"n must be positive, got {n}")
    return _build(n, 2, lambda i, j: _eps(i, j) * (j + (i - 1) * n), "t2")


def construct_t2n(n: int) -> NzsArray:
    """NH_{2n}(n;n) over Z_{2n^2+2n}, n odd."""
    _require_odd(n, "the t=2n construction")

    def entry(i: int, j: int) -> int:
        if (i - j) % 2 == 0:
            return i + (n + 1) * (j - 1)
        return n * n + n - i - (n + 1) * (j - 1)

    return _build(n, 2 * n, entry, "t2n")


def construct_tn2(n: int) -> NzsArray:
    """NH_{n^2}(n;n) over Z_{3n^2}, n odd."""
    _require_odd(n, "the t=n^2 construction")
    half = (n + 1) // 2

    def entry(i: int, j: int) -> int:
        if j <= half:
            return _eps(i, j) * (3 * n * (j - 1) + 3 * (i - 1) + 1)
        return _eps(i, j) * (3 * n * j - 3 * i + 1)

    return _build(n, n * n, entry, "tn2")


def construct_t2n2(n: int) -> NzsArray:
    """NH_{2n^2}(n;n) over Z_{4n^2}, n odd."""
    _require_odd(n, "the t=2n^2 construction")
    half = (n + 1) // 2

    def entry(i: int, j: int) -> int:
        same = (i - j) % 2 == 0
        if j <= half:
            return 2 * n * (j - 1) + 2 * i - 1 if same else 2 * n * (n - j + 1) - 2 * i + 1
        return 2 * n * j - 2 * i + 1 if same else 2 * n * (n - j) + 2 * i - 1

    return _build(n, 2 * n * n, entry, "t2n2")


@dataclass(frozen=True)
class BlockArray:
    """The n x t building block H of the t | n construction and its shifts."""

    n: int
    t: int

    @property
    def step(self) -> int:
        return (2 * self.n * self.n + self.t) // self.t

    def base(self, i: int, j: int) -> int:
        """Entry (i, j) of H, 1-based, as an integer (not reduced)."""
        q = self.step
        if j % 2 == 1:
            return (j - 1) * q + i if i % 2 == 1 else j * q - i
        return -(j - 1) * q - i if i % 2 == 1 else -j * q + i

    def base_alt(self, i: int, j: int) -> int:
        """Equivalent expression of H's columns for j >= (t+3)/2 (equal mod v)."""
        q = self.step
        if j % 2 == 1:
            return (j - self.t - 1) * q + i if i % 2 == 1 else (j - self.t) * q - i
        return (self.t - j + 1) * q - i if i % 2 == 1 else (self.t - j) * q + i

    def shifted(self, i: int, j: int, alpha: int) -> int:
        """Entry (i, j) of H_{alpha n}: H plus eps*alpha*n."""
        return self.base(i, j) + _eps(i, j) * alpha * self.n

    def grid(self, alpha: int = 0) -> list[list[int]]:
        return [[self.shifted(i, j, alpha) for j in range(1, self.t + 1)]
                for i in range(1, self.n + 1)]


def construct_t_div_n(n: int, t: int) -> NzsArray:
    """NH_t(n;n) over Z_{2n^2+t} for n odd and t | n, laid out as H, -H_n, H_2n, ..."""
    _require_odd(n, "the t | n construction")
    if t < 1 or n % t:
        raise UnsupportedParameters(f"t={t} does not divide n={n}")
    blk = BlockArray(n, t)

    def entry(i: int, j: int) -> int:
        alpha, jj = divmod(j - 1, t)
        return (-1) ** alpha * blk.shifted(i, jj + 1, alpha)

    return _build(n, t, entry, "t_div_n")


_N2_LOOKUP = {
    1: ((1, 2), (3, 4)),
    2: ((1, 2), (3, 4)),
    4: ((1, 2), (4, 5)),
    8: ((1, 3), (5, 7)),
}


def construct_n2_lookup(t: int) -> NzsArray:
    """The 2x2 arrays for t in {1, 2, 4, 8}."""
    if t not in _N2_LOOKUP:
        raise UnsupportedParameters(f"t={t} is not admissible for n=2 (expected 1, 2, 4 or 8)")
    return NzsArray(ModulusContext(2, t), _N2_LOOKUP[t], "lookup_n2")


def construct(n: int, t: int) -> NzsArray:
    """Dispatch (n, t) to the matching construction.

    Precedence, first match wins: t=2 (any n); n=2 lookup; t | n; t=2n;
    t=n^2; t=2n^2.  The rules only overlap at n=1.
    """
    if n < 1 or t < 1:
        raise UnsupportedParameters(f"no construction for ({n},{t}): parameters must be positive")
    if (2 * n * n) % t:
        raise UnsupportedParameters(f"no construction for ({n},{t}): t is not admissible")
    if t == 2:
        return construct_t2(n)
    if n == 2:
        return construct_n2_lookup(t)
    if n % 2 == 0:
        raise UnsupportedParameters(f"no construction for ({n},{t}): even n only supports t=2")
    if n % t == 0:
        return construct_t_div_n(n, t)
    if t == 2 * n:
        return construct_t2n(n)
    if t == n * n:
        return construct_tn2(n)
    if t == 2 * n * n:
        return construct_t2n2(n)
    raise UnsupportedParameters(f"no construction for ({n},{t})")


def supported_t(n: int) -> list[int]:
    """All t for which ``construct(n, t)`` succeeds, ascending."""
    if n == 2:
        return [1, 2, 4, 8]
    if n % 2 == 0:
        return [2]
    ts = {d for d in range(1, n + 1) if n % d == 0} | {2, 2 * n, n * n, 2 * n * n}
    return sorted(ts)


def _provenance_for(n: int, t: int) -> str:
    return construct(n, t).provenance


def closed_form_sums(n: int, t: int, axis: Axis, index: int) -> int:
    """Closed-form total of row/column ``index`` (1-based) of ``construct(n, t)``, mod v."""
    if not 1 <= index <= n:
        raise ValueError(f"index {index} out of range [1, {n}]")
    prov = _provenance_for(n, t)
    v = 2 * n * n + t
    i = j = index
    if prov == "t2":
        if n % 2 == 1:
            if axis == "col":
                s = (-1) ** (j + 1) * (j + (n - 1) // 2 * n)
            else:
                s = (-1) ** (i + 1) * ((i - 1) * n + (n + 1) // 2)
        else:
            s = (-1) ** j * (n * n // 2) if axis == "col" else (-1) ** i * (n // 2)
    elif prov == "t2n":
        if axis == "col":
            if j % 2 == 1:
                s = j * (n + 1) + (n ** 3 - 2 * n - 1) // 2
            else:
                s = -j * (n + 1) + (n ** 3 + 2 * n * n + 2 * n + 1) // 2
        else:
            s = (n * n + n) // 2 + (-1) ** i * ((n ** 3 + 1) // 2 - i)
    elif prov == "tn2":
        if axis == "col":
            s = (-1) ** (j - 1) * (3 * n * j - (3 * n + 1) // 2)
        elif n % 4 == 1:
            s = (-1) ** (i - 1) * (3 * i - 2 + 3 * n * (n - 1) // 2)
        else:
            s = (-1) ** (i - 1) * (3 * (n + 1 - i) - 2 + 3 * n * (n - 1) // 2)
    elif prov == "t2n2":
        if axis == "col":
            s = n ** 3 + (-1) ** (j - 1) * (2 * n * j - n * n - n)
        elif n % 4 == 1:
            s = n ** 3 + (-1) ** (i - 1) * (2 * i - n - 1)
        else:
            s = n ** 3 + (-1) ** (i - 1) * (n + 1 - 2 * i)
    elif prov == "t_div_n":
        q = v // t
        if axis == "col":
            alpha, jj = divmod(j - 1, t)
            jj += 1
            s = (-1) ** (alpha + jj + 1) * (
                (jj - 1) * q + 1 + alpha * n + (n - 1) // 2 * ((2 * jj - 1) * q + 1))
        elif i % 2 == 1:
            s = i + n * (n // t - 1) // 2 + (t - 1) // 2 * q
        else:
            s = q - i - n * (n // t - 1) // 2 + (t - 1) // 2 * q
    else:
        raise UnsupportedParameters(f"no closed-form sums for the {prov} array ({n},{t})")
    return s % v
