"""Textual group specifications.

Grammar (canonical forms)::

    parabolic:<q>:<r>:<parts joined by ','>
    cyclic:<n>
    dihedral:<2n>
    quaternion:8
    elemabelian:<2^k>
    klein4
"""

from __future__ import annotations

from dataclasses import dataclass

from . import grpcore
from .parabolic import Composition, parabolic_generators, parabolic_label, parabolic_order


class GroupSpecError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if self.family == "parabolic":
            q, lam = self.params
            return f"parabolic:{q}:{lam.r}:{','.join(map(str, lam.parts))}"
        if self.family == "klein4":
            return "klein4"
        return f"{self.family}:{self.params[0]}"

    @property
    def label(self) -> str:
        if self.family == "parabolic":
            q, lam = self.params
            return parabolic_label(lam, q)
        return str(self)

    def order(self) -> int:
        if self.family == "parabolic":
            q, lam = self.params
            return parabolic_order(lam, q)
        if self.family == "klein4":
            return 4
        return self.params[0]

    def generators(self) -> grpcore.GeneratorSet:
        f = self.family
        if f == "parabolic":
            q, lam = self.params
            if q != 2:
                raise ValueError("explicit generators are only available for q = 2")
            return parabolic_generators(lam)
        if f == "cyclic":
            return grpcore.cyclic(self.params[0])
        if f == "dihedral":
            return grpcore.dihedral(self.params[0])
        if f == "quaternion":
            return grpcore.quaternion8()
        if f in ("elemabelian", "klein4"):
            return grpcore.elementary_abelian(self.order())
        raise AssertionError(f)

    def table(self, cap: int = grpcore.DEFAULT_CAP) -> grpcore.ElementTable:
        return grpcore.close_generators(self.generators(), cap=cap, label=self.label)


def _int(text: str, pos: int) -> int:
    if not text.isdigit():
        raise GroupSpecError(f"expected a positive integer, got {text!r}", pos)
    return int(text)


def parse_group_spec(text: str) -> GroupSpec:
    fields = text.split(":")
    starts = [0]
    for f in fields[:-1]:
        starts.append(starts[-1] + len(f) + 1)
    family = fields[0]
    nargs = {"parabolic": 3, "cyclic": 1, "dihedral": 1, "quaternion": 1, "elemabelian": 1, "klein4": 0}
    if family not in nargs:
        raise GroupSpecError(f"unknown group family {family!r}", 0)
    if len(fields) - 1 != nargs[family]:
        raise GroupSpecError(f"{family} takes {nargs[family]} argument(s)", len(fields[0]))
    if family == "klein4":
        return GroupSpec("klein4")
    if family == "parabolic":
        q = _int(fields[1], starts[1])
        if q < 2:
            raise GroupSpecError("q must be at least 2", starts[1])
        r = _int(fields[2], starts[2])
        parts = []
        pos = starts[3]
        for p in fields[3].split(","):
            v = _int(p, pos)
            if v < 1:
                raise GroupSpecError("parts must be positive", pos)
            parts.append(v)
            pos += len(p) + 1
        if sum(parts) != r:
            raise GroupSpecError(f"parts sum to {sum(parts)}, not r = {r}", starts[3])
        return GroupSpec("parabolic", (q, Composition(parts)))
    n = _int(fields[1], starts[1])
    if family == "cyclic" and n < 1:
        raise GroupSpecError("order must be positive", starts[1])
    if family == "dihedral" and (n < 4 or n % 2):
        raise GroupSpecError("dihedral order must be even and at least 4", starts[1])
    if family == "quaternion" and n != 8:
        raise GroupSpecError("only quaternion:8 is supported", starts[1])
    if family == "elemabelian" and (n < 1 or n & (n - 1)):
        raise GroupSpecError("elementary abelian order must be a power of 2", starts[1])
    return GroupSpec(family, (n,))
