"""Pure numpy implementations of the hot kernels.

All kernels work on minimize-oriented float64 matrices (maximized metrics
negated by the caller).  Semantics are identical to the compiled versions in
``_speedups``; these are the fallback when the extension is unavailable.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"

_BLOCK = 512
_CHUNK = 4096


def nondominated_mask(values: np.ndarray) -> np.ndarray:
    """Boolean mask of rows not dominated by any other row (minimization).

    Duplicated rows never dominate each other, so all copies survive.
    """
    vals = np.ascontiguousarray(values, dtype=np.float64)
    n = vals.shape[0]
    mask = np.ones(n, dtype=bool)
    for start in range(0, n, _BLOCK):
        blk = vals[start : start + _BLOCK]
        le = (vals[:, None, :] <= blk[None, :, :]).all(axis=-1)
        lt = (vals[:, None, :] < blk[None, :, :]).any(axis=-1)
        dominated = (le & lt).any(axis=0)
        mask[start : start + _BLOCK] &= ~dominated
    return mask


def nondominated_rank(values: np.ndarray) -> np.ndarray:
    """Non-dominated sorting ranks: 0 for the front, peeling outward."""
    vals = np.ascontiguousarray(values, dtype=np.float64)
    n = vals.shape[0]
    le = (vals[:, None, :] <= vals[None, :, :]).all(axis=-1)
    lt = (vals[:, None, :] < vals[None, :, :]).any(axis=-1)
    dom = le & lt  # dom[i, j]: i dominates j
    counts = dom.sum(axis=0).astype(np.int64)
    ranks = np.full(n, -1, dtype=np.int64)
    rank = 0
    remaining = np.ones(n, dtype=bool)
    while remaining.any():
        front = remaining & (counts == 0)
        if not front.any():  # defensive; cannot happen with a strict partial order
            front = remaining
        ranks[front] = rank
        counts -= dom[front].sum(axis=0)
        remaining &= ~front
        rank += 1
    return ranks


def enumerate_front(mats: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Streaming exhaustive enumeration of one-row-per-matrix combinations.

    Returns ``(choices, sums)`` for the non-dominated combinations, where the
    objective of a combination is the sum of the selected rows (dominance is
    invariant to the 1/N rescaling).  Enumeration is chunked and the archive
    re-filtered against each chunk, which is equivalent to filtering at the
    end but bounds memory by the front size.
    """
    sizes = np.array([m.shape[0] for m in mats], dtype=np.int64)
    n_cat = len(mats)
    width = mats[0].shape[1]
    total = int(np.prod(sizes.astype(object)))
    radix = np.ones(n_cat, dtype=np.int64)
    for i in range(n_cat - 2, -1, -1):
        radix[i] = radix[i + 1] * sizes[i + 1]

    arch_vals = np.empty((0, width), dtype=np.float64)
    arch_choices = np.empty((0, n_cat), dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // radix[None, :]) % sizes[None, :]
        sums = mats[0][digits[:, 0]].astype(np.float64, copy=True)
        for i in range(1, n_cat):
            sums += mats[i][digits[:, i]]
        pool_vals = np.concatenate([arch_vals, sums])
        pool_choices = np.concatenate([arch_choices, digits])
        keep = nondominated_mask(pool_vals)
        arch_vals = pool_vals[keep]
        arch_choices = pool_choices[keep]
    return arch_choices, arch_vals
