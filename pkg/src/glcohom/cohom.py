"""Mod-2 group cohomology from free resolutions over F_2[G].

A free module F_2[G]^b is stored in coordinates: the basis element ``h·e_s``
(slot ``s``, group element ``h``) sits at position ``s*|G| + h``.  A map of
free modules is given by the images of the ``e_s``; its F_2-linear expansion
is recovered by translating those images under the left-regular action.

Resolutions are built stage by stage: compute the kernel of the current
differential as an F_2-subspace, choose module generators of it, and let
those be the images of the next differential.  For 2-groups the generators
are a basis of K/IK (I the augmentation ideal), giving a minimal resolution
whose ranks are the cohomology dimensions.  Otherwise generators are picked
greedily and the cochain complex Hom(F, F_2) is computed explicitly.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from .f2la import BitMatrix, SpanBuilder, kernel_basis, pack_bits, rank, rref, unpack_bits
from .grpcore import ElementTable, GroupLabel, NotA2Group, is_2group

log = logging.getLogger(__name__)

DEFAULT_MAX_BITS = 1 << 28


class ResourceExceeded(Exception):
    """An expanded matrix would exceed the configured bit budget."""


class TooLargeForOracle(ValueError):
    pass


class DegreeOutOfRange(ValueError):
    pass


@dataclass(eq=False)
class FreeModuleMap:
    """F_2[G]-map F_2[G]^source_rank -> F_2[G]^target_rank.

    ``images`` has one row per source slot, of length target_rank*|G|.
    """

    group: ElementTable
    source_rank: int
    target_rank: int
    images: BitMatrix

    def __post_init__(self):
        n = self.group.order
        if self.images.shape != (self.source_rank, self.target_rank * n):
            raise ValueError(f"images have shape {self.images.shape}")

    def expanded(self) -> BitMatrix:
        """Rows are the images of all h·e_k, in coordinate order of the source."""
        return BitMatrix.from_dense(_translates(self.images, self.target_rank, self.group))

    def augmented(self) -> BitMatrix:
        """Induced map on Hom(-, F_2): entry (k, j) is the coefficient sum of slot j of image k."""
        n = self.group.order
        imgs = unpack_bits(self.images.data, self.images.cols).reshape(self.source_rank, self.target_rank, n)
        return BitMatrix.from_dense(imgs.sum(axis=2) % 2)


def _translates(vectors: BitMatrix, slots: int, t: ElementTable) -> np.ndarray:
    """All left translates g·v, as a bool array of shape (len(vectors)*|G|, slots*|G|).

    Row ``k*|G| + g`` holds g·vectors[k].
    """
    n = t.order
    mult = t.left_mult_table()
    v = unpack_bits(vectors.data, vectors.cols).reshape(vectors.rows, slots, n)
    out = np.zeros((vectors.rows, n, slots, n), dtype=bool)
    # (g·v)[s, g*h] = v[s, h]
    out[:, np.arange(n)[:, None, None], np.arange(slots)[None, :, None], mult[:, None, :]] = v[:, None, :, :]
    return out.reshape(vectors.rows * n, slots * n)


def _act(vectors: np.ndarray, perm: np.ndarray, slots: int, n: int) -> np.ndarray:
    """Apply one generator (given by its left action on indices) to bool rows."""
    v = vectors.reshape(vectors.shape[0], slots, n)
    out = np.zeros_like(v)
    out[:, :, perm] = v
    return out.reshape(vectors.shape[0], slots * n)


def minimal_generators(kernel: BitMatrix, t: ElementTable, slots: int | None = None) -> list[np.ndarray]:
    """Vectors of ``kernel`` whose classes form a basis of K / IK.

    ``kernel`` rows span a submodule K of F_2[G]^slots.  IK is the span of
    (g+1)·v over the group generators g and kernel rows v.
    """
    if not is_2group(t):
        raise NotA2Group(f"minimal generators need a 2-group, order is {t.order}")
    if kernel.rows == 0:
        return []
    n = t.order
    slots = kernel.cols // n if slots is None else slots
    k = unpack_bits(kernel.data, kernel.cols)
    moved = [_act(k, t.gen_actions[i], slots, n) ^ k for i in range(t.ngens)]
    ik = rref(BitMatrix.from_dense(np.vstack(moved))) if moved else None
    span = SpanBuilder(kernel.cols, capacity=kernel.rows)
    if ik is not None:
        span.add_many(ik.matrix.data[: ik.rank])
    want = kernel.rows - span.dim
    chosen = []
    for row in kernel.data:
        if len(chosen) == want:
            break
        if span.add(row):
            chosen.append(row.copy())
    return chosen


def greedy_generators(kernel: BitMatrix, t: ElementTable, slots: int | None = None,
                      seed: int | None = None) -> list[np.ndarray]:
    """Module generators of K chosen greedily.

    Candidates are the kernel rows in order, or, when ``seed`` is given, a
    seeded stream of random vectors of K (random vectors tend to generate
    large cyclic submodules, which keeps the resolution small).  A candidate
    is kept iff it is outside the submodule generated by those kept so far.
    """
    if kernel.rows == 0:
        return []
    n = t.order
    slots = kernel.cols // n if slots is None else slots
    span = SpanBuilder(kernel.cols, capacity=kernel.rows)
    chosen = []
    for v in _candidates(kernel, seed):
        if span.dim == kernel.rows:
            break
        if span.contains(v):
            continue
        chosen.append(v.copy())
        orbit = _translates(BitMatrix(1, kernel.cols, v[None, :]), slots, t)
        span.add_many(pack_bits(orbit))
    assert span.dim == kernel.rows
    return chosen


def _candidates(kernel: BitMatrix, seed: int | None):
    if seed is None:
        yield from kernel.data
        return
    rng = np.random.default_rng(seed)
    while True:
        mask = rng.random(kernel.rows) < 0.5
        if mask.any():
            yield np.bitwise_xor.reduce(kernel.data[mask], axis=0)


@dataclass(eq=False)
class Resolution:
    group: ElementTable
    ranks: list[int]
    differentials: list[FreeModuleMap]
    minimal: bool

    @property
    def length(self) -> int:
        return len(self.differentials)


def check_budget(order: int, max_bits: int = DEFAULT_MAX_BITS) -> None:
    """Refuse groups whose first kernel computation is already over budget."""
    if order * order > max_bits:
        raise ResourceExceeded(f"order {order}: the augmentation ideal alone needs {order * order} bits "
                               f"(> {max_bits})")


def _augmentation_kernel(n: int) -> BitMatrix:
    return kernel_basis(BitMatrix.from_dense(np.ones((1, n), dtype=bool)))


def build_resolution(t: ElementTable, N: int, mode: str = "auto", seed: int | None = 0,
                     max_bits: int = DEFAULT_MAX_BITS) -> Resolution:
    """Free resolution of F_2 over F_2[G] of length N.

    ``mode`` is ``"minimal"`` (2-groups only), ``"generic"`` or ``"auto"``.
    ``seed`` controls the candidate order in generic mode; ``None`` scans
    kernel basis rows in order.
    """
    if N < 1:
        raise ValueError("resolution length must be at least 1")
    minimal = {"auto": is_2group(t), "minimal": True, "generic": False}[mode]
    n = t.order
    check_budget(n, max_bits)
    ranks = [1]
    diffs: list[FreeModuleMap] = []
    kernel = _augmentation_kernel(n)
    for i in range(1, N + 1):
        prev = ranks[-1]
        if minimal:
            gens = minimal_generators(kernel, t, prev)
        else:
            gens = greedy_generators(kernel, t, prev, seed=seed)
        b = len(gens)
        images = BitMatrix(b, prev * n, np.array(gens).reshape(b, -1)) if b else BitMatrix(0, prev * n)
        d = FreeModuleMap(t, b, prev, images)
        ranks.append(b)
        diffs.append(d)
        log.info("%s: stage %d rank %d", t.label or f"order {n}", i, b)
        if i < N:
            bits = (b * n) * (prev * n)
            if bits > max_bits:
                raise ResourceExceeded(f"stage {i} needs a {b * n} x {prev * n} matrix "
                                       f"({bits} bits > {max_bits})")
            kernel = kernel_basis(d.expanded().transpose())
    return Resolution(t, ranks, diffs, minimal)


def cochain_matrices(res: Resolution) -> list[BitMatrix]:
    """Matrices of the coboundaries C^{i-1} -> C^i for i = 1..N."""
    return [d.augmented() for d in res.differentials]


def cohomology_dims(res: Resolution) -> list[int]:
    """dim H^d(G; F_2) for d = 0..N-1."""
    mats = cochain_matrices(res)
    ranks_in = [0] + [rank(m) for m in mats]
    return [res.ranks[d] - ranks_in[d + 1] - ranks_in[d] for d in range(res.length)]


def exactness_profile(res: Resolution) -> list[tuple[int, int]]:
    """(dim ker d_i, rank d_{i+1}) for every stage, d_0 being the augmentation.

    An exact resolution has equal entries in every pair.
    """
    n = res.group.order
    out = []
    ker_prev = n - 1
    for d in res.differentials:
        r = rank(d.expanded())
        out.append((ker_prev, r))
        ker_prev = d.source_rank * n - r
    return out


@dataclass(frozen=True)
class CohomologyResult:
    group_label: GroupLabel
    degree: int
    dim: int
    method: str
    resolution_ranks: tuple[int, ...] | None = None


def compute_cohomology(t: ElementTable, degree: int, mode: str = "auto", seed: int | None = 0,
                       max_bits: int = DEFAULT_MAX_BITS) -> CohomologyResult:
    if degree < 0:
        raise DegreeOutOfRange("degree must be nonnegative")
    if degree == 0:
        return CohomologyResult(t.label, 0, 1, "trivial", (1,))
    res = build_resolution(t, degree + 1, mode=mode, seed=seed, max_bits=max_bits)
    dims = cohomology_dims(res)
    method = "minimal-resolution" if res.minimal else "generic-resolution"
    return CohomologyResult(t.label, degree, dims[degree], method, tuple(res.ranks))


def cohomology_up_to(t: ElementTable, d_max: int, **kwargs) -> list[int]:
    return cohomology_dims(build_resolution(t, d_max + 1, **kwargs))


# -- bar complex oracle --------------------------------------------------------

ORACLE_MAX_ORDER = 16
ORACLE_MAX_DEGREE = 4
ORACLE_MAX_COLUMNS = 1 << 16


def bar_coboundary(t: ElementTable, d: int) -> BitMatrix:
    """Normalized bar coboundary C^d -> C^{d+1} with trivial F_2 coefficients.

    A normalized d-cochain is a function on d-tuples of non-identity elements.
    (δf)(g_1..g_{d+1}) = f(g_2..g_{d+1}) + Σ_i f(.., g_i g_{i+1}, ..) + f(g_1..g_d),
    where terms containing the identity vanish.
    """
    mult = t.left_mult_table()
    nonid = [x for x in range(t.order) if x != t.index_of_identity]
    m = len(nonid)
    pos = np.full(t.order, -1, dtype=np.int64)
    pos[nonid] = np.arange(m)
    tuples = np.array(list(itertools.product(range(m), repeat=d + 1)), dtype=np.int64).reshape(-1, d + 1)
    elems = np.array(nonid, dtype=np.int64)[tuples] if d + 1 else tuples
    nrows = tuples.shape[0]
    weights = m ** np.arange(d - 1, -1, -1, dtype=np.int64)
    out = np.zeros((nrows, m**d), dtype=np.uint8)
    rows = np.arange(nrows)

    def put(cols, valid=None):
        r = rows if valid is None else rows[valid]
        c = cols if valid is None else cols[valid]
        np.add.at(out, (r, c), 1)

    put(tuples[:, 1:] @ weights)
    for i in range(d):
        prod = mult[elems[:, i], elems[:, i + 1]]
        merged = np.concatenate([tuples[:, :i], pos[prod][:, None], tuples[:, i + 2:]], axis=1)
        valid = prod != t.index_of_identity
        put(merged @ weights, valid)
    put(tuples[:, :d] @ weights)
    return BitMatrix.from_dense(out % 2)


def bar_oracle(t: ElementTable, d_max: int) -> list[int]:
    """dim H^d(G; F_2) for d = 0..d_max straight from normalized bar cochains."""
    n = t.order
    if n > ORACLE_MAX_ORDER or d_max > ORACLE_MAX_DEGREE or d_max < 0:
        raise TooLargeForOracle(f"bar oracle needs |G| <= {ORACLE_MAX_ORDER}, d_max <= {ORACLE_MAX_DEGREE}")
    if (n - 1) ** (d_max + 1) > ORACLE_MAX_COLUMNS:
        raise TooLargeForOracle(f"{(n - 1) ** (d_max + 1)} cochains in degree {d_max + 1}")
    ranks = [rank(bar_coboundary(t, d)) for d in range(d_max + 1)]
    return [(n - 1) ** d - ranks[d] - (ranks[d - 1] if d else 0) for d in range(d_max + 1)]
