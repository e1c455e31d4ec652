"""Exact arithmetic in Z_v for relative non-zero sum Heffter arrays.

Residues are plain ``int`` values kept in ``[0, v-1]``; the signed view in
``±[1, floor(v/2)]`` is computed on demand by :func:`signed`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

MAX_ORDER = 1000

ZigzagVariant = Literal["omega", "omega_inv", "nu", "nu_inv"]


class UnsupportedParameters(ValueError):
    """No implemented construction (or formula) covers the requested parameters."""


@dataclass(frozen=True)
class ModulusContext:
    """Parameters of an array over Z_v relative to the order-``t`` subgroup J.

    ``n`` is the number of columns and ``k`` the number of filled cells per
    column, so ``v = 2nk + t``.  For tight square arrays ``k == n``.
    """

    n: int
    t: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.k is None:
            object.__setattr__(self, "k", self.n)
        if self.n < 1 or self.t < 1 or self.k < 1:
            raise ValueError(f"parameters must be positive, got n={self.n}, t={self.t}, k={self.k}")
        if self.n > MAX_ORDER:
            raise ValueError(f"n={self.n} exceeds the supported bound {MAX_ORDER}")
        if (2 * self.n * self.k) % self.t:
            raise ValueError(f"t={self.t} is not admissible: it must divide 2nk={2 * self.n * self.k}")

    @property
    def v(self) -> int:
        return 2 * self.n * self.k + self.t

    @property
    def step(self) -> int:
        """Generator ``v/t`` of the subgroup J."""
        return self.v // self.t

    def reduce(self, x: int) -> int:
        return x % self.v

    def signed(self, x: int) -> int:
        return signed(x, self.v)

    def in_subgroup(self, x: int) -> bool:
        return x % self.step == 0

    @classmethod
    def from_modulus(cls, v: int, t: int, ncols: int) -> "ModulusContext":
        """Recover the context of an ``? x ncols`` array from ``v`` and ``t``."""
        if ncols < 1 or v <= t or (v - t) % (2 * ncols):
            raise ValueError(f"v={v}, t={t} do not fit an array with {ncols} columns")
        return cls(ncols, t, (v - t) // (2 * ncols))


def modulus(m: "ModulusContext | int") -> int:
    """``v`` from either a context or a bare modulus."""
    return m.v if isinstance(m, ModulusContext) else int(m)


def signed(x: int, v: int) -> int:
    """Signed representative of ``x`` in ``±[1, floor(v/2)]`` (``v/2`` maps to ``+v/2``)."""
    x %= v
    return x if x <= v // 2 else x - v


def subgroup(ctx: ModulusContext) -> frozenset[int]:
    """The subgroup J of Z_v of order t."""
    return frozenset(k * ctx.step for k in range(ctx.t))


@dataclass(frozen=True)
class AnchoredSequence:
    """A cyclic line read linearly from ``start``.

    ``AnchoredSequence((1, 10, 4, -11), start=2)`` reads ``(4, -11, 1, 10)``.
    """

    elements: tuple[int, ...]
    start: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("an anchored sequence must be nonempty")
        if not 0 <= self.start < len(self.elements):
            raise ValueError(f"start index {self.start} out of range")

    def reading(self) -> tuple[int, ...]:
        return self.elements[self.start:] + self.elements[:self.start]

    def reversed(self) -> "AnchoredSequence":
        """The reversed reading, anchored at the last element of this one."""
        return AnchoredSequence(tuple(reversed(self.reading())))

    def __len__(self) -> int:
        return len(self.elements)


def partial_sums(seq: AnchoredSequence | Sequence[int], v: ModulusContext | int) -> list[int]:
    v = modulus(v)
    if not isinstance(seq, AnchoredSequence):
        seq = AnchoredSequence(tuple(seq))
    out = []
    s = 0
    for x in seq.reading():
        s = (s + x) % v
        out.append(s)
    return out


@dataclass(frozen=True)
class SimplicityResult:
    """Outcome of a simplicity test.

    On failure ``first`` is the index of a zero partial sum (``second`` is
    ``None``) or ``first < second`` index two equal partial sums.
    """

    ok: bool
    first: int | None = None
    second: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_simple(seq: AnchoredSequence | Sequence[int], v: ModulusContext | int) -> SimplicityResult:
    seen: dict[int, int] = {}
    for idx, s in enumerate(partial_sums(seq, v)):
        if s == 0:
            return SimplicityResult(False, idx)
        if s in seen:
            return SimplicityResult(False, seen[s], idx)
        seen[s] = idx
    return SimplicityResult(True)


def zigzag_sequence(a: int, b: int, g: int, ell: int, variant: ZigzagVariant) -> list[int]:
    """Materialize (a, b, a+g, b-g, ...) in one of the four orientations.

    ``omega`` ends on ``a + ell*g`` (length 2ell+1); ``nu`` continues to
    ``b - ell*g`` (length 2ell+2).  The ``_inv`` variants are the reversals.
    """
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    seq = []
    for k in range(ell + 1):
        seq.append(a + k * g)
        if k < ell or variant in ("nu", "nu_inv"):
            seq.append(b - k * g)
    if variant.endswith("_inv"):
        seq.reverse()
    elif variant not in ("omega", "nu"):
        raise ValueError(f"unknown variant {variant!r}")
    return seq


def zigzag_sums(a: int, b: int, g: int, ell: int, variant: ZigzagVariant,
                v: ModulusContext | int) -> list[int]:
    """Closed-form multiset of partial sums of a zig-zag ordering, sorted."""
    v = modulus(v)
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    s = a + b
    if variant == "omega":
        out = [k * s for k in range(1, ell + 1)] + [a + k * (s + g) for k in range(ell + 1)]
    elif variant == "omega_inv":
        out = [k * (s + g) for k in range(1, ell + 1)] + [a + ell * g + k * s for k in range(ell + 1)]
    elif variant == "nu":
        out = [k * s for k in range(1, ell + 2)] + [a + k * (s + g) for k in range(ell + 1)]
    elif variant == "nu_inv":
        out = [k * s for k in range(1, ell + 2)] + [b - ell * g + k * (s + g) for k in range(ell + 1)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return sorted(x % v for x in out)


def line_sum(values: Iterable[int], v: int) -> int:
    return sum(values) % v
