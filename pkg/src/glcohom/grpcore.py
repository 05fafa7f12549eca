"""Concrete finite groups given by generators.

Groups are enumerated by breadth-first closure and stored as an
:class:`ElementTable`: a list of canonical element encodings plus, for each
generator, the permutation of element indices given by left multiplication.

Two kinds of generators are supported:

* ``"permutation"``: tuples of images of ``0..degree-1``; the product ``a*b``
  is "apply b, then a".
* ``"matrix"``: invertible ``degree x degree`` matrices over F_2, encoded as a
  single integer with entry (i, j) at bit ``i*degree + j``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

GroupLabel = str

DEFAULT_CAP = 1 << 20


class CapExceeded(Exception):
    """Enumeration would produce more elements than the configured cap."""


class NotA2Group(ValueError):
    pass


# -- element arithmetic ------------------------------------------------------

def perm_mul(a: tuple, b: tuple) -> tuple:
    return tuple(a[i] for i in b)


def perm_inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def mat_rows(m: int, n: int) -> list[int]:
    mask = (1 << n) - 1
    return [(m >> (i * n)) & mask for i in range(n)]


def mat_from_rows(rows: Sequence[int], n: int) -> int:
    out = 0
    for i, r in enumerate(rows):
        out |= r << (i * n)
    return out


def mat_from_dense(a) -> int:
    a = np.asarray(a, dtype=np.int64) % 2
    n = a.shape[0]
    return mat_from_rows([sum(int(a[i, j]) << j for j in range(n)) for i in range(n)], n)


def mat_to_dense(m: int, n: int) -> np.ndarray:
    return np.array([[(r >> j) & 1 for j in range(n)] for r in mat_rows(m, n)], dtype=np.uint8)


def mat_mul(a: int, b: int, n: int) -> int:
    brows = mat_rows(b, n)
    out = []
    for r in mat_rows(a, n):
        acc = 0
        j = 0
        while r:
            if r & 1:
                acc ^= brows[j]
            r >>= 1
            j += 1
        out.append(acc)
    return mat_from_rows(out, n)


def mat_identity(n: int) -> int:
    return mat_from_rows([1 << i for i in range(n)], n)


def mat_inv(m: int, n: int) -> int:
    """Inverse over F_2 by Gauss-Jordan on [m | I]; raises if singular."""
    rows = [(r | (1 << (n + i))) for i, r in enumerate(mat_rows(m, n))]
    for c in range(n):
        p = next((i for i in range(c, n) if (rows[i] >> c) & 1), None)
        if p is None:
            raise ValueError("matrix is not invertible over F_2")
        rows[c], rows[p] = rows[p], rows[c]
        for i in range(n):
            if i != c and (rows[i] >> c) & 1:
                rows[i] ^= rows[c]
    return mat_from_rows([r >> n for r in rows], n)


def elementary(n: int, i: int, j: int) -> int:
    """The transvection e + E_{i,j}."""
    return mat_identity(n) ^ (1 << (i * n + j))


# -- generator sets ------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    kind: str
    degree: int
    generators: tuple = ()

    def __post_init__(self):
        if self.kind not in ("permutation", "matrix"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if self.kind == "permutation":
                if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                    raise ValueError(f"not a permutation of degree {self.degree}: {g}")
            else:
                if g >> (self.degree * self.degree):
                    raise ValueError("matrix encoding exceeds degree")
                mat_inv(g, self.degree)

    def identity(self):
        if self.kind == "permutation":
            return tuple(range(self.degree))
        return mat_identity(self.degree)

    def mul(self, a, b):
        if self.kind == "permutation":
            return perm_mul(a, b)
        return mat_mul(a, b, self.degree)

    def inv(self, a):
        if self.kind == "permutation":
            return perm_inv(a)
        return mat_inv(a, self.degree)

    def reordered(self, order: Sequence[int]) -> GeneratorSet:
        return GeneratorSet(self.kind, self.degree, tuple(self.generators[i] for i in order))


@dataclass(eq=False)
class ElementTable:
    """A fully enumerated group with its left-regular generator actions."""

    gens: GeneratorSet
    elements: list
    gen_actions: np.ndarray          # shape (ngens, order); gen_actions[k, x] = index of g_k * x
    inverse_table: np.ndarray
    parent: np.ndarray               # BFS tree: elements[x] = gens[via[x]] * elements[parent[x]]
    via: np.ndarray
    label: GroupLabel = ""
    index_of_identity: int = 0
    _index: dict = field(default_factory=dict, repr=False)
    _mult: np.ndarray | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def ngens(self) -> int:
        return self.gen_actions.shape[0]

    def index(self, element) -> int:
        return self._index[element]

    def mul(self, i: int, j: int) -> int:
        return self._index[self.gens.mul(self.elements[i], self.elements[j])]

    def left_mult_table(self) -> np.ndarray:
        """``table[g, h]`` = index of ``g*h``; built from the BFS tree."""
        if self._mult is None:
            n = self.order
            table = np.empty((n, n), dtype=np.int32)
            table[self.index_of_identity] = np.arange(n, dtype=np.int32)
            for x in range(n):
                if x == self.index_of_identity:
                    continue
                # BFS order guarantees the parent row is already filled
                table[x] = self.gen_actions[self.via[x]][table[self.parent[x]]]
            self._mult = table
        return self._mult


def close_generators(gens: GeneratorSet, cap: int = DEFAULT_CAP, label: GroupLabel = "") -> ElementTable:
    """Enumerate the group generated by ``gens`` breadth-first.

    Elements are indexed in discovery order, scanning generators in their
    given order, so indices are reproducible.  Raises :class:`CapExceeded`
    as soon as more than ``cap`` elements are found.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    e = gens.identity()
    elements = [e]
    index = {e: 0}
    parent = [-1]
    via = [-1]
    ng = len(gens.generators)
    actions: list[list[int]] = [[] for _ in range(ng)]
    queue = deque([0])
    # actions are filled in index order because the queue pops indices in order
    while queue:
        x = queue.popleft()
        ex = elements[x]
        for k, g in enumerate(gens.generators):
            y = gens.mul(g, ex)
            j = index.get(y)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                elements.append(y)
                index[y] = j
                parent.append(x)
                via.append(k)
                queue.append(j)
            actions[k].append(j)
    n = len(elements)
    inverse = np.array([index[gens.inv(x)] for x in elements], dtype=np.int64)
    return ElementTable(
        gens=gens,
        elements=elements,
        gen_actions=np.array(actions, dtype=np.int32).reshape(ng, n),
        inverse_table=inverse,
        parent=np.array(parent, dtype=np.int64),
        via=np.array(via, dtype=np.int64),
        label=label,
        _index=index,
    )


def order_factorization(t: ElementTable | int) -> tuple[int, int]:
    """Split the group order as (2-part, odd part)."""
    n = t if isinstance(t, int) else t.order
    two = n & -n
    return two, n // two


def is_2group(t: ElementTable) -> bool:
    return order_factorization(t)[1] == 1


def subgroup_closure(t: ElementTable, seeds) -> set[int]:
    """Indices of the subgroup generated by the given element indices."""
    chosen: list[int] = []
    sub = {t.index_of_identity}
    for s in seeds:
        if s in sub:
            continue
        chosen.append(s)
        # in a finite group, closure under multiplication is a subgroup
        sub = {t.index_of_identity}
        frontier = [t.index_of_identity]
        while frontier:
            x = frontier.pop()
            for g in chosen:
                y = t.mul(g, x)
                if y not in sub:
                    sub.add(y)
                    frontier.append(y)
    return sub


def frattini_rank(t: ElementTable) -> int:
    """Dimension of G/Phi(G) over F_2 for a 2-group G.

    Phi(G) is generated by all squares together with commutators of the
    generators (for 2-groups the squares alone already suffice).
    """
    if not is_2group(t):
        raise NotA2Group(f"group of order {t.order} is not a 2-group")
    if t.order == 1:
        return 0
    squares = {t.mul(x, x) for x in range(t.order)}
    gidx = [t.index(g) for g in t.gens.generators]
    comms = set()
    for a in gidx:
        for b in gidx:
            ab = t.mul(a, b)
            ba = t.mul(b, a)
            comms.add(t.mul(ab, int(t.inverse_table[ba])))
    phi = subgroup_closure(t, sorted(squares | comms))
    return int(math.log2(t.order // len(phi)))


# -- library groups --------------------------------------------------------

def _cycle_perm(n: int, cycles) -> tuple:
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def cyclic(n: int) -> GeneratorSet:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    gens = () if n == 1 else (_cycle_perm(n, [list(range(n))]),)
    return GeneratorSet("permutation", n, gens)


def dihedral(order: int) -> GeneratorSet:
    """Dihedral group of the given order (>= 4), acting on a polygon."""
    if order < 4 or order % 2:
        raise ValueError("dihedral order must be even and at least 4")
    n = order // 2
    if n == 2:
        return elementary_abelian(4)
    r = _cycle_perm(n, [list(range(n))])
    s = tuple((-i) % n for i in range(n))
    return GeneratorSet("permutation", n, (r, s))


def elementary_abelian(order: int) -> GeneratorSet:
    k = order.bit_length() - 1
    if order < 1 or (1 << k) != order:
        raise ValueError("elementary abelian 2-group order must be a power of 2")
    gens = tuple(_cycle_perm(2 * k, [[2 * i, 2 * i + 1]]) for i in range(k))
    return GeneratorSet("permutation", 2 * k, gens)


def direct_product_cyclic(*orders: int) -> GeneratorSet:
    """Product of cyclic groups, each acting on its own block of points."""
    n = sum(orders)
    gens = []
    start = 0
    for m in orders:
        if m > 1:
            gens.append(_cycle_perm(n, [list(range(start, start + m))]))
        start += m
    return GeneratorSet("permutation", n, tuple(gens))


def quaternion8() -> GeneratorSet:
    """Q8 in its regular permutation representation.

    Points 0..7 stand for 1, i, j, k, -1, -i, -j, -k; the generators act by
    left multiplication by i and j.
    """
    table = {  # unit * unit for 1,i,j,k as (sign, unit)
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def left(u: int) -> tuple:
        img = []
        for p in range(8):
            sign, v = divmod(p, 4)
            s2, w = table[(u, v)]
            img.append(4 * ((sign + s2) % 2) + w)
        return tuple(img)

    return GeneratorSet("permutation", 8, (left(1), left(2)))
