"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import contextlib
import io
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE, ZOO
from glcohom import grpcore
from glcohom.cli import main
from glcohom.cohom import (
    ResourceExceeded,
    bar_oracle,
    build_resolution,
    cochain_matrices,
    cohomology_dims,
    compute_cohomology,
    exactness_profile,
)
from glcohom.f2la import BitMatrix, kernel_basis, rank, rref
from glcohom.grpcore import GeneratorSet, close_generators, frattini_rank
from glcohom.parabolic import Composition, gl_order, parabolic_generators, parabolic_order, symmetric_compositions
from reference import naive_rank, naive_rref

C = Composition


@contextlib.contextmanager
def criterion(num, name):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE[num] = f"[{num}] FAIL {name}: {type(exc).__name__}: {exc}"
        raise
    ACCEPTANCE[num] = f"[{num}] PASS {name} ({time.perf_counter() - start:.1f}s)"


def run_cli(*argv):
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def test_1_gl4_table_reproduction():
    with criterion(1, "GL_4: dim H^2 = 7, 4, 4, total 15, certified"):
        t0 = time.perf_counter()
        borel = close_generators(parabolic_generators(C((1, 1, 1, 1))))
        assert compute_cohomology(borel, 2).dim == 7
        assert time.perf_counter() - t0 < 10

        t0 = time.perf_counter()
        code, text = run_cli("webb", "4", "--degree", "2", "--compute-missing")
        elapsed = time.perf_counter() - t0
        assert code == 0
        rows = {ln.split()[0]: ln.split() for ln in text.splitlines() if ln.startswith("(")}
        assert rows["(1,1,1,1)"][2] == "7"
        assert rows["(1,2,1)"][2] == "4"
        assert rows["(2,2)"][2] == "4"
        assert all(r[3] == "computed" for r in rows.values())
        assert text.splitlines()[-1] == "total=15 parity=odd verdict=nonzero-certified"
        assert elapsed < 15 * 60


def test_2_gl6_verdict_from_ledger():
    with criterion(2, "GL_6: ledger dims 47,28,16,5,24,17,6, total 143, certified"):
        t0 = time.perf_counter()
        code, text = run_cli("webb", "6", "--degree", "3", "--paper-ledger")
        elapsed = time.perf_counter() - t0
        assert code == 0
        dims = sorted(int(ln.split()[2]) for ln in text.splitlines() if ln.startswith("("))
        assert dims == sorted([47, 28, 16, 5, 24, 17, 6])
        assert text.splitlines()[-1] == "total=143 parity=odd verdict=nonzero-certified"
        assert elapsed < 1.0


def test_3_order_formulas():
    with criterion(3, "parabolic and GL orders match all printed values"):
        printed = {
            (1, 1, 1, 1): 64, (1, 2, 1): 192, (2, 2): 576,
            (1, 1, 1, 1, 1, 1): 32768, (1, 1, 2, 1, 1): 98304, (1, 2, 2, 1): 294912,
            (1, 4, 1): 10321920, (2, 1, 1, 2): 294912, (2, 2, 2): 884736, (3, 3): 14450688,
        }
        for parts, order in printed.items():
            assert parabolic_order(C(parts), 2) == order
        assert gl_order(4, 2) == 20_160
        assert gl_order(6, 2) == 20_158_709_760


def test_4_symmetric_compositions():
    with criterion(4, "symmetric compositions of 6 (8) and proper ones of 4 (3)"):
        paper6 = {(1, 1, 1, 1, 1, 1), (1, 1, 2, 1, 1), (1, 2, 2, 1), (1, 4, 1), (2, 1, 1, 2), (2, 2, 2), (3, 3), (6,)}
        got6 = [c.parts for c in symmetric_compositions(6)]
        assert len(got6) == 8 and set(got6) == paper6
        got4 = [c.parts for c in symmetric_compositions(4, proper_only=True)]
        assert len(got4) == 3 and set(got4) == {(1, 1, 1, 1), (1, 2, 1), (2, 2)}


def test_5_oracle_equivalence_suite():
    with criterion(5, "engine = bar oracle on the zoo, plus structural invariants"):
        t0 = time.perf_counter()
        for name, gens in ZOO.items():
            t = close_generators(gens, label=name)
            res = build_resolution(t, 4)
            dims = cohomology_dims(res)
            assert dims == bar_oracle(t, 3), name
            assert dims[0] == 1
            assert all(k == i for k, i in exactness_profile(res)), name
            assert not any(m.to_dense().any() for m in cochain_matrices(res)), name
            assert dims[1] == frattini_rank(t), name

        r, s = grpcore.dihedral(8).generators
        d8a = close_generators(GeneratorSet("permutation", 4, (r, s)))
        d8b = close_generators(GeneratorSet("permutation", 4, (grpcore.perm_mul(r, s), s)))
        assert cohomology_dims(build_resolution(d8a, 4)) == cohomology_dims(build_resolution(d8b, 4))

        for parts in [(1, 2, 1), (2, 2)]:
            res = build_resolution(close_generators(parabolic_generators(C(parts))), 3)
            assert all(k == i for k, i in exactness_profile(res))

        h112 = compute_cohomology(close_generators(parabolic_generators(C((1, 1, 2)))), 2).dim
        h211 = compute_cohomology(close_generators(parabolic_generators(C((2, 1, 1)))), 2).dim
        assert h112 == h211
        assert time.perf_counter() - t0 < 5 * 60


def test_6_f2la_reference_equivalence():
    with criterion(6, "f2la = naive eliminator on 1000 random matrices up to 512x512"):
        rng = np.random.default_rng(6)
        for i in range(1000):
            if i % 100 == 0:
                rows, cols = 512 - rng.integers(0, 40), 512 - rng.integers(0, 40)
            else:
                rows, cols = rng.integers(0, 97, size=2)
            a = (rng.random((rows, cols)) < rng.uniform(0.05, 0.95)).astype(np.uint8)
            if i % 3 == 0 and rows and cols:
                # force rank deficiency via a low-rank product
                k = int(rng.integers(0, min(rows, cols) + 1))
                a = ((rng.integers(0, 2, (rows, k)) @ rng.integers(0, 2, (k, cols))) % 2).astype(np.uint8)
            m = BitMatrix.from_dense(a)
            ref, piv = naive_rref(a)
            ef = rref(m)
            assert list(ef.pivot_cols) == piv
            assert np.array_equal(ef.matrix.to_dense(), ref)
            assert rank(m) == len(piv) == naive_rank(a.T)
            ker = kernel_basis(m)
            assert rank(m) + ker.rows == cols
            if ker.rows:
                assert not ((a.astype(np.int64) @ ker.to_dense().T.astype(np.int64)) % 2).any()


def test_7_stretch_gl6_borel():
    with criterion(7, "stretch: GL_6 Borel to degree 4 (non-blocking)"):
        t = close_generators(parabolic_generators(C((1,) * 6)))
        assert t.order == 32768
        with pytest.raises(ResourceExceeded):
            build_resolution(t, 4)
    ACCEPTANCE[7] = ("[7] SKIP stretch: GL_6 Borel (order 32768) enumerates, but the dense expanded "
                     "matrices (>= 5e9 bits at stage 1) are refused by the memory ceiling; not attempted")
    pytest.skip("stretch goal not attempted: dense expansion of the order-32768 Borel is out of reach")
