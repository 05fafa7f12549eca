"""Naive unpacked GF(2) elimination, kept independent of the packed code."""

import numpy as np


def naive_rref(a):
    a = (np.array(a, dtype=np.uint8) % 2).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = None
        for i in range(r, rows):
            if a[i, c]:
                p = i
                break
        if p is None:
            continue
        a[[r, p]] = a[[p, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        pivots.append(c)
        r += 1
    return a, pivots


def naive_rank(a):
    return len(naive_rref(a)[1])


def naive_nullity(a):
    return np.asarray(a).shape[1] - naive_rank(a)
