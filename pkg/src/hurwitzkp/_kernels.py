"""Hot integer kernels of the permutation oracle.

Each kernel has a loop version (compiled by numba when enabled) and a
vectorised numpy version.  The public names dispatch on the backend; the
``*_numba`` / ``*_numpy`` variants are exported for parity tests and the
benchmark.
"""
from math import factorial

import numpy as np

from ._accel import HAVE_NUMBA, njit


def _fact_weights(n):
    return np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)


# -- Lehmer rank -----------------------------------------------------------


@njit
def _rank_loop(perms, weights):
    m, n = perms.shape
    out = np.zeros(m, dtype=np.int64)
    for r in range(m):
        acc = 0
        for i in range(n):
            smaller = 0
            pi = perms[r, i]
            for j in range(i + 1, n):
                if perms[r, j] < pi:
                    smaller += 1
            acc += smaller * weights[i]
        out[r] = acc
    return out


def rank_numba(perms):
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    return _rank_loop(perms, _fact_weights(perms.shape[1]))


def rank_numpy(perms):
    perms = np.asarray(perms, dtype=np.int64)
    n = perms.shape[1]
    w = _fact_weights(n)
    out = np.zeros(perms.shape[0], dtype=np.int64)
    for i in range(n - 1):
        out += (perms[:, i + 1 :] < perms[:, i : i + 1]).sum(axis=1) * w[i]
    return out


# -- cycle types -------------------------------------------------------------


@njit
def _cycle_mult_loop(perms):
    m, n = perms.shape
    out = np.zeros((m, n + 1), dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    for r in range(m):
        seen[:] = False
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            j = s
            while not seen[j]:
                seen[j] = True
                j = perms[r, j]
                length += 1
            out[r, length] += 1
    return out


def cycle_multiplicities_numba(perms):
    return _cycle_mult_loop(np.ascontiguousarray(perms, dtype=np.int64))


def cycle_multiplicities_numpy(perms):
    """Row r, column k: number of k-cycles of permutation r."""
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    ident = np.arange(n)
    length = np.zeros((m, n), dtype=np.int64)
    cur = perms.copy()
    for k in range(1, n + 1):
        hit = (cur == ident) & (length == 0)
        length[hit] = k
        cur = np.take_along_axis(perms, cur, axis=1)
    out = np.zeros((m, n + 1), dtype=np.int64)
    for k in range(1, n + 1):
        out[:, k] = (length == k).sum(axis=1) // k
    return out


# -- right multiplication by a sum of transpositions ------------------------------


@njit
def _gather_sum_loop(vec, tables):
    t, m = tables.shape
    out = np.zeros(m, dtype=np.int64)
    for a in range(t):
        for g in range(m):
            out[g] += vec[tables[a, g]]
    return out


def gather_sum_numba(vec, tables):
    return _gather_sum_loop(np.ascontiguousarray(vec, dtype=np.int64), np.ascontiguousarray(tables, dtype=np.int64))


def gather_sum_numpy(vec, tables):
    """out[g] = sum_a vec[tables[a, g]]: right multiplication by sum_a of involutions."""
    return np.asarray(vec, dtype=np.int64)[tables].sum(axis=0)


# -- class pair counts ------------------------------------------------------------


@njit
def _pair_counts_loop(left, right, k):
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(left.shape[0]):
        out[left[i], right[i]] += 1
    return out


def pair_counts_numba(left, right, k):
    return _pair_counts_loop(np.asarray(left, dtype=np.int64), np.asarray(right, dtype=np.int64), k)


def pair_counts_numpy(left, right, k):
    flat = np.bincount(np.asarray(left) * k + np.asarray(right), minlength=k * k)
    return flat.reshape(k, k).astype(np.int64)


if HAVE_NUMBA:
    rank, cycle_multiplicities, gather_sum, pair_counts = (
        rank_numba,
        cycle_multiplicities_numba,
        gather_sum_numba,
        pair_counts_numba,
    )
else:
    rank, cycle_multiplicities, gather_sum, pair_counts = (
        rank_numpy,
        cycle_multiplicities_numpy,
        gather_sum_numpy,
        pair_counts_numpy,
    )
