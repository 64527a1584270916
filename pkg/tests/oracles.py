"""Independent oracles the tests check the library against.

Everything here deliberately avoids the library's own algorithms:
spectral radii come from numpy's eigenvalue solver, and dimensions come
from enumerating every subset of the interval candidates rather than
maximal sets only.
"""

import itertools

import numpy as np

from fpq.quiver import dim_ext1, hom_dim, tensor_vertexwise
from fpq.typea import all_intervals, interval_rep


def numpy_radius(a):
    """Spectral radius via numpy's eigenvalue solver."""
    if not a or not a[0]:
        return 0.0
    return float(max(abs(np.linalg.eigvals(np.array(a, dtype=float)))))


def twisted_hom(x, m_tensor_y, shift):
    if shift == 0:
        return hom_dim(x, m_tensor_y)
    if shift == 1:
        return dim_ext1(x, m_tensor_y)
    return 0


def brute_force_fpd(m, word, shift=0):
    """Max over ALL subsets of interval modules that are brick sets of the
    numpy spectral radius of [dim Hom(X_i, (M (x) X_j)[shift])]_ij.

    Exponential in the number of intervals; use on small n only.
    """
    objs = [interval_rep(word, v, m.quiver) for v in all_intervals(word.n)]
    pair_hom = [[hom_dim(x, y) for y in objs] for x in objs]
    tensored = [tensor_vertexwise(m, y) for y in objs]
    best = 0.0
    for size in range(1, len(objs) + 1):
        for sub in itertools.combinations(range(len(objs)), size):
            if any(
                pair_hom[i][j] != (1 if i == j else 0)
                for i in sub
                for j in sub
            ):
                continue
            a = [[twisted_hom(objs[i], tensored[j], shift) for j in sub] for i in sub]
            best = max(best, numpy_radius(a))
    return best
