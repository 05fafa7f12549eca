"""Packed GF(2) linear algebra: echelon forms, rank and null spaces."""

import numpy as np

from glcohom.f2la import BitMatrix, SpanBuilder, in_span, kernel_basis, rank, rref

rng = np.random.default_rng(0)

# a 6x10 matrix of rank at most 4, built as a product
m = BitMatrix.from_dense((rng.integers(0, 2, (6, 4)) @ rng.integers(0, 2, (4, 10))) % 2)
print(m.to_dense())

ef = rref(m)
print("reduced form:\n", ef.matrix.to_dense())
print("pivot columns:", ef.pivot_cols, "rank:", rank(m))

# rows of the kernel basis satisfy m v = 0, and rank + nullity = cols
k = kernel_basis(m)
print("nullity:", k.rows, "check:", rank(m) + k.rows == m.cols)
print("m . k^T == 0:", not m.matmul(k.transpose()).to_dense().any())

# membership in a row space
print("first row in span:", in_span(m.to_dense()[0], ef))
print("e_0 in span:", in_span(np.eye(10, dtype=np.uint8)[0], ef))

# incremental spans are what the resolution code uses to pick generators
sb = SpanBuilder(10)
for row in m.data:
    print("added" if sb.add(row) else "dependent", end=" ")
print("\ndimension:", sb.dim)

# larger matrices are still quick
big = BitMatrix.random(2000, 2000, rng)
print("rank of a random 2000x2000 matrix:", rank(big))
