"""Parity form of Webb's sum over symmetric parabolics, plus the dimension ledger.

Non-symmetric compositions pair off with their reversals, whose parabolics
are isomorphic, so mod 2 only the proper symmetric compositions of r
contribute.  An odd total certifies that H^d(GL_r(F_2); F_2) is nonzero;
an even total certifies nothing.

Ledger files are UTF-8 text, one record per line::

    label,degree,dim,source,note

``#`` lines and blank lines are ignored.  ``source`` is one of ``computed``,
``paper`` or ``external``; ``note`` is free text and may contain commas.
Parabolic labels look like ``GL(q=2,r=6):P(1+4+1)``; other groups use their
canonical spec string (``klein4``, ``dihedral:8``).  A (label, degree) pair
may appear only once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from .parabolic import Composition, parabolic_label, parabolic_order, symmetric_compositions

SOURCES = ("computed", "paper", "external")

_LINE = re.compile(
    r"^(?P<label>GL\(q=(?P<q>\d+),r=(?P<r>\d+)\):P\((?P<parts>\d+(?:\+\d+)*)\)|[^,\s]+)"
    r",(?P<degree>\d+),(?P<dim>\d+),(?P<source>[a-z]+)(?:,(?P<note>.*))?$"
)


class LedgerError(Exception):
    pass


class ParseError(LedgerError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ConflictError(LedgerError):
    pass


class MissingDimension(Exception):
    def __init__(self, r: int, degree: int, missing: list[Composition]):
        names = ", ".join(str(c) for c in missing)
        super().__init__(f"no dim H^{degree} for {len(missing)} composition(s) of {r}: {names}")
        self.missing = missing


@dataclass(frozen=True)
class LedgerEntry:
    group_label: str
    degree: int
    dim: int
    source: str
    note: str = ""

    def __post_init__(self):
        if self.dim < 0 or self.degree < 0:
            raise ValueError("degree and dim must be nonnegative")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if not _LINE.match(self.format_line()):
            raise ValueError(f"malformed label {self.group_label!r}")

    @property
    def key(self) -> tuple[str, int]:
        return (self.group_label, self.degree)

    def format_line(self) -> str:
        return f"{self.group_label},{self.degree},{self.dim},{self.source},{self.note}"


@dataclass
class Ledger:
    entries: dict[tuple[str, int], LedgerEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())

    def __contains__(self, entry) -> bool:
        return self.entries.get(entry.key) == entry

    def get(self, label: str, degree: int) -> LedgerEntry | None:
        return self.entries.get((label, degree))

    def add(self, entry: LedgerEntry) -> bool:
        """Insert entry; False if an identical entry is already present."""
        old = self.entries.get(entry.key)
        if old is not None:
            if old.dim != entry.dim:
                raise ConflictError(f"{entry.group_label} degree {entry.degree}: ledger has dim "
                                    f"{old.dim} ({old.source}), refusing {entry.dim} ({entry.source})")
            return False
        self.entries[entry.key] = entry
        return True


def parse_ledger(text: str) -> Ledger:
    ledger = Ledger()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if m is None:
            raise ParseError(f"cannot parse {raw!r}", lineno)
        if m["parts"] is not None and sum(map(int, m["parts"].split("+"))) != int(m["r"]):
            raise ParseError(f"parts of {m['label']} do not sum to r", lineno)
        if m["source"] not in SOURCES:
            raise ParseError(f"unknown source {m['source']!r}", lineno)
        entry = LedgerEntry(m["label"], int(m["degree"]), int(m["dim"]), m["source"], (m["note"] or "").strip())
        if entry.key in ledger.entries:
            raise ParseError(f"duplicate entry for {entry.group_label} degree {entry.degree}", lineno)
        ledger.entries[entry.key] = entry
    return ledger


def ledger_load(path) -> Ledger:
    path = Path(path)
    if not path.exists():
        return Ledger()
    return parse_ledger(path.read_text(encoding="utf-8"))


def ledger_append(path, entry: LedgerEntry) -> bool:
    """Append entry to the ledger file; False if it was already recorded."""
    path = Path(path)
    ledger = ledger_load(path)
    if not ledger.add(entry):
        return False
    text = path.read_text(encoding="utf-8") if path.exists() else ""
    with path.open("a", encoding="utf-8") as fh:
        if text and not text.endswith("\n"):
            fh.write("\n")
        fh.write(entry.format_line() + "\n")
    return True


def paper_ledger_path() -> Path:
    return Path(str(resources.files("glcohom") / "data" / "paper.ledger"))


def paper_ledger() -> Ledger:
    return ledger_load(paper_ledger_path())


# -- parity sum ------------------------------------------------------------------

# A resolver returns (dim, source) for a composition, or None if unknown.
Resolver = Callable[[Composition], Optional[tuple[int, str]]]


@dataclass(frozen=True)
class Contribution:
    composition: Composition
    dim: int
    source: str

    @property
    def order(self) -> int:
        return parabolic_order(self.composition, 2)


@dataclass(frozen=True)
class ParityReport:
    r: int
    d: int
    contributions: tuple[Contribution, ...]

    @property
    def total(self) -> int:
        return sum(c.dim for c in self.contributions)

    @property
    def parity(self) -> str:
        return "odd" if self.total % 2 else "even"

    @property
    def verdict(self) -> str:
        return "nonzero-certified" if self.total % 2 else "inconclusive"

    @property
    def certified(self) -> bool:
        return self.total % 2 == 1


def ledger_resolver(ledger: Ledger, degree: int, q: int = 2) -> Resolver:
    def resolve(lam: Composition):
        e = ledger.get(parabolic_label(lam, q), degree)
        return None if e is None else (e.dim, e.source)
    return resolve


def chain_resolvers(*resolvers: Resolver) -> Resolver:
    def resolve(lam: Composition):
        for res in resolvers:
            got = res(lam)
            if got is not None:
                return got
        return None
    return resolve


def parity_sum(r: int, d: int, resolver: Resolver) -> ParityReport:
    """Sum dim H^d(P(lam)) over the proper symmetric compositions lam of r."""
    if d < 1:
        raise ValueError("the parity sum is only valid in positive degrees")
    comps = symmetric_compositions(r, proper_only=True)
    found, missing = [], []
    for lam in comps:
        got = resolver(lam)
        if got is None:
            missing.append(lam)
        else:
            found.append(Contribution(lam, int(got[0]), got[1]))
    if missing:
        raise MissingDimension(r, d, missing)
    return ParityReport(r, d, tuple(found))


def report_render(p: ParityReport, tsv: bool = False) -> str:
    header = ("composition", "order", "dim", "source")
    rows = [(str(c.composition), str(c.order), str(c.dim), c.source) for c in p.contributions]
    footer = f"total={p.total} parity={p.parity} verdict={p.verdict}"
    if tsv:
        lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
        return "\n".join(lines + ["# " + footer]) + "\n"
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    fmt = lambda row: "  ".join(  # noqa: E731
        cell.ljust(w) if i in (0, 3) else cell.rjust(w) for i, (cell, w) in enumerate(zip(row, widths))
    ).rstrip()
    lines = [f"dim H^{p.d}(GL_{p.r}(F_2)) mod 2 from proper symmetric parabolics", fmt(header)]
    lines += [fmt(row) for row in rows]
    lines.append(footer)
    return "\n".join(lines) + "\n"
