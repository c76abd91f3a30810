"""Pure-NumPy implementations of the hot kernels.

Same call signatures and bit-identical results as the compiled backend in
``_ckern.pyx``; used as the fallback when the extension is not built.
"""
import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def im2col(x, k):
    """Unfold k x k patches of a padded batch into a column matrix.

    x: (B, C, Hp, Wp) float64. Returns (B, C*k*k, Ho*Wo) with
    Ho = Hp - k + 1, Wo = Wp - k + 1 and rows ordered (c, ky, kx).
    """
    b, c, hp, wp = x.shape
    ho, wo = hp - k + 1, wp - k + 1
    v = sliding_window_view(x, (k, k), axis=(2, 3))  # (B,C,Ho,Wo,k,k)
    v = v.transpose(0, 1, 4, 5, 2, 3)                # (B,C,k,k,Ho,Wo)
    return np.ascontiguousarray(v).reshape(b, c * k * k, ho * wo)


def maxpool2x2(x):
    """Non-overlapping 2x2 max pooling.

    x: (B, C, H, W) with H, W even. Returns (out, idx) where out is
    (B, C, H/2, W/2) and idx holds the in-window argmax position
    (0..3, row-major, first occurrence on ties) as uint8.
    """
    b, c, h, w = x.shape
    r = x.reshape(b, c, h // 2, 2, w // 2, 2).transpose(0, 1, 2, 4, 3, 5)
    r = np.ascontiguousarray(r).reshape(b, c, h // 2, w // 2, 4)
    idx = r.argmax(axis=-1)
    out = np.take_along_axis(r, idx[..., None], axis=-1)[..., 0]
    return out, idx.astype(np.uint8)


def maxpool2x2_backward(grad, idx):
    """Scatter pooled gradients back to the argmax cells."""
    b, c, ho, wo = grad.shape
    buf = np.zeros((b, c, ho, wo, 4), dtype=np.float64)
    np.put_along_axis(buf, idx[..., None].astype(np.intp), grad[..., None], axis=-1)
    buf = buf.reshape(b, c, ho, wo, 2, 2).transpose(0, 1, 2, 4, 3, 5)
    return np.ascontiguousarray(buf).reshape(b, c, 2 * ho, 2 * wo)


def viterbi_path(cost, floor, lam, jump):
    """Minimum-cost row path across columns of a cost map.

    Minimizes sum_w cost[r_w, w] + lam * sum_w min(|r_{w+1} - r_w|, jump)
    subject to r_w > floor[w]. Exact optimum; among optimal paths returns
    the lexicographically smallest (ties broken toward smaller rows).

    cost: (H, W) float64; floor: (W,) int64; returns (W,) int64.
    """
    h, w = cost.shape
    d = np.empty((h, w), dtype=np.float64)
    rows = np.arange(h)

    col = cost[:, w - 1].copy()
    col[rows <= floor[w - 1]] = np.inf
    d[:, w - 1] = col
    for j in range(w - 2, -1, -1):
        nxt = d[:, j + 1]
        best = np.full(h, np.inf)
        for step in range(-jump, jump + 1):
            lo = max(0, -step)
            hi = min(h, h - step)
            if lo >= hi:
                continue
            move = lam * abs(step)
            np.minimum(best[lo:hi], nxt[lo + step:hi + step] + move, out=best[lo:hi])
        # any jump beyond the truncation point costs a flat lam*jump
        np.minimum(best, nxt.min() + lam * jump, out=best)
        col = cost[:, j] + best
        col[rows <= floor[j]] = np.inf
        d[:, j] = col

    path = np.empty(w, dtype=np.int64)
    path[0] = int(np.argmin(d[:, 0]))
    for j in range(1, w):
        trans = lam * np.minimum(np.abs(rows - path[j - 1]), jump)
        path[j] = int(np.argmin(d[:, j] + trans))
    return path
