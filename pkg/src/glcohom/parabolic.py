"""Ordered partitions of r and the parabolic subgroups of GL_r(F_q) they index."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .grpcore import GeneratorSet, elementary


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"a composition needs positive parts, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    @property
    def proper(self) -> bool:
        return len(self.parts) > 1

    @property
    def symmetric(self) -> bool:
        return self.parts == self.parts[::-1]

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for p in self.parts:
            out.append(acc)
            acc += p
        return out

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class ParabolicSpec:
    composition: Composition
    q: int = 2

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("q must be at least 2")

    @property
    def label(self) -> str:
        return parabolic_label(self.composition, self.q)


def parabolic_label(lam: Composition, q: int = 2) -> str:
    return f"GL(q={q},r={lam.r}):P({'+'.join(map(str, lam.parts))})"


def compositions(r: int) -> list[Composition]:
    """All 2^(r-1) compositions of r.

    Bit i of a counter k in [0, 2^(r-1)) says whether there is a cut after
    position i+1; compositions are listed in increasing k.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    out = []
    for k in range(1 << (r - 1)):
        parts, run = [], 1
        for i in range(r - 1):
            if (k >> i) & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(parts))
    return out


def dual(lam: Composition) -> Composition:
    return Composition(lam.parts[::-1])


def symmetric_compositions(r: int, proper_only: bool = False) -> list[Composition]:
    return [c for c in compositions(r) if c.symmetric and (c.proper or not proper_only)]


def gl_order(n: int, q: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def radical_dim(lam: Composition) -> int:
    """Dimension of the unipotent radical: sum of lam_i * lam_j over i < j."""
    total, seen = 0, 0
    for p in lam.parts:
        total += seen * p
        seen += p
    return total


def parabolic_order(lam: Composition, q: int) -> int:
    out = q ** radical_dim(lam)
    for p in lam.parts:
        out *= gl_order(p, q)
    return out


def parabolic_generators(lam: Composition) -> GeneratorSet:
    """Generators over F_2 of the block-upper-triangular group with blocks lam.

    Uses e + E_{a,a+1} for every a (these alone generate the upper
    unitriangular group) together with e + E_{a+1,a} for a, a+1 inside one
    diagonal block, which fills in each Levi factor GL_{lam_i}(F_2).
    """
    r = lam.r
    block = []
    for i, p in enumerate(lam.parts):
        block.extend([i] * p)
    gens = [elementary(r, a, a + 1) for a in range(r - 1)]
    gens += [elementary(r, a + 1, a) for a in range(r - 1) if block[a] == block[a + 1]]
    return GeneratorSet("matrix", r, tuple(gens))
