"""Archdeacon embeddings of K_{v/t x t} from compatible simple orderings.

A directed edge is stored as ``(x, a)``: tail ``x`` and difference ``a``.
The rotation only relabels ``a`` and the reversal ``tau`` sends ``(x, a)``
to ``(x + a, -a)``, so a face step is ``(x, a) -> (x + a, rho0(-a))``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .constructions import NzsArray
from .decomposition import Edge, edge
from .modcore import UnsupportedParameters
from .verifier import DirectedCyclicOrdering, col_permutation, cycle_lengths, row_permutation


class NotCyclic(ValueError):
    pass


def isprime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass
class RotationSeed:
    """The permutation rho0 on the nonzero differences +-E(A)."""

    rho0: dict
    v: int
    t: int
    entries: dict  # residue -> (i, j) for every entry of the array


@dataclass
class Face:
    boundary: tuple[int, ...]
    color: str
    generator: int
    length: int

    def edges(self) -> list[Edge]:
        b = self.boundary
        return [edge(b[p], b[(p + 1) % len(b)]) for p in range(len(b))]


@dataclass
class EmbeddingReport:
    faces: list[Face]
    V: int
    E: int
    F: int
    genus: int
    spectrum: list[tuple[int, int, str]] = field(default_factory=list)

    def to_dict(self, boundaries: bool = False) -> dict:
        d = {
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "genus": self.genus,
            "euler_characteristic": self.V - self.E + self.F,
            "spectrum": [{"length": L, "count": c, "color": col} for L, c, col in self.spectrum],
        }
        if boundaries:
            d["faces"] = [{"color": f.color, "generator": f.generator, "length": f.length,
                           "boundary": list(f.boundary)} for f in self.faces]
        return d


def build_rho0(A: NzsArray, dirs: DirectedCyclicOrdering) -> RotationSeed:
    """rho0(a) = -omega_r(a) on E(A) and rho0(-a) = omega_c(a); must be one 2|E(A)|-cycle."""
    v = A.v
    entries = {x: (i, j) for i, j, x in A.filled()}
    wr = row_permutation(A, dirs)
    wc = col_permutation(A, dirs)
    val = {(i, j): x for x, (i, j) in entries.items()}
    rho0 = {}
    for x, cell in entries.items():
        rho0[x] = -val[wr[cell]] % v
        rho0[-x % v] = val[wc[cell]]
    if len(rho0) != 2 * len(entries):
        raise NotCyclic("E(A) and -E(A) overlap; not a valid array")
    lengths = cycle_lengths(rho0)
    if lengths != [2 * len(entries)]:
        raise NotCyclic(f"rho0 has cycle type {lengths}, expected one {2 * len(entries)}-cycle")
    return RotationSeed(rho0, v, A.ctx.t, entries)


def _canonical(boundary: list[int]) -> tuple[int, ...]:
    n = len(boundary)
    best = min(range(n), key=lambda s: boundary[s:] + boundary[:s])
    return tuple(boundary[best:] + boundary[:best])


def trace_faces(seed: RotationSeed) -> EmbeddingReport:
    v, rho0, entries = seed.v, seed.rho0, seed.entries
    diffs = sorted(rho0)
    visited: set[tuple[int, int]] = set()
    faces = []
    for x0 in range(v):
        for a0 in diffs:
            if (x0, a0) in visited:
                continue
            boundary = []
            x, a = x0, a0
            while (x, a) not in visited:
                visited.add((x, a))
                boundary.append(x)
                x, a = (x + a) % v, rho0[-a % v]
            if (x, a) != (x0, a0):
                raise AssertionError("face tracing did not close up; rho0 is not a permutation")
            if a0 in entries:
                color, gen = "col", entries[a0][1]
            else:
                color, gen = "row", entries[-a0 % v][0]
            faces.append(Face(_canonical(boundary), color, gen, len(boundary)))
    faces.sort(key=lambda f: (f.color, f.generator, f.boundary))

    if gcd(v, *entries) != 1:
        raise AssertionError("the entries do not generate Z_v; the Cayley graph is disconnected")
    V = v
    E = len(visited) // 2
    F = len(faces)
    chi = V - E + F
    if chi % 2 or chi > 2:
        raise AssertionError(f"Euler characteristic {chi} is not that of an orientable surface")
    spectrum = Counter((f.length, f.color) for f in faces)
    spec = sorted(((L, c, col) for (L, col), c in spectrum.items()), key=lambda s: (s[2], s[0]))
    return EmbeddingReport(faces, V, E, F, (2 - chi) // 2, spec)


def embed(A: NzsArray, dirs: DirectedCyclicOrdering) -> EmbeddingReport:
    return trace_faces(build_rho0(A, dirs))


def line_lambda(A: NzsArray, axis: str, index: int) -> int:
    """Additive order of the line's total sum in Z_v."""
    s = sum(A.line(axis, index)) % A.v
    if s == 0:
        raise ValueError(f"{axis} {index} sums to 0")
    return A.v // gcd(s, A.v)


def predicted_spectrum(A: NzsArray) -> Counter:
    """Face (length, color) counts implied by the line sums alone."""
    m, n = A.shape
    out: Counter = Counter()
    for axis, count, color in (("col", n, "col"), ("row", m, "row")):
        for idx in range(count):
            lam = line_lambda(A, axis, idx)
            size = len(A.line(axis, idx))
            out[(size * lam, color)] += A.v // lam
    return out


@dataclass
class SpectrumCheck:
    ok: bool
    rule: str
    violations: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _spectrum_rule(n: int, t: int):
    """(name, predicate on face length) for the face-length result matching (n, t)."""
    odd = n % 2 == 1
    if t == 2 and odd:
        half = n * (n * n + 1) // 2
        return "t=2", lambda L: L == 4 * n or L % half == 0
    if t == 2 * n and odd and isprime(n):
        return "t=2n", lambda L: L == 4 * n or L % (n * n) == 0
    if t == n * n and odd and isprime(n):
        return "t=n^2", lambda L: L in (3 * n * n, 3 * n ** 3)
    if t == 2 * n * n and odd and isprime(n):
        return "t=2n^2", lambda L: L in (4 * n, 4 * n * n, 4 * n ** 3)
    if t == n and odd and isprime(2 * n + 1):
        return "t=n", lambda L: L % (n * (2 * n + 1)) == 0
    raise UnsupportedParameters(f"no face-length prediction for (n={n}, t={t})")


def predicted_spectrum_check(report: EmbeddingReport, n: int, t: int) -> SpectrumCheck:
    rule, pred = _spectrum_rule(n, t)
    bad = sorted({f.length for f in report.faces if not pred(f.length)})
    return SpectrumCheck(not bad, rule, bad)
