"""Pure-numpy implementations of the hot loops.

Every function here has a twin in ``_numba`` with the same signature and
bit-identical output on the same inputs.
"""
import numpy as np


def grid_distance(n):
    i = np.arange(n, dtype=np.int64)
    diff = np.abs(i[:, None] - i[None, :])
    return np.minimum(diff, n - diff)


def push_forward(weights, mapping):
    return np.bincount(mapping, weights=weights, minlength=weights.shape[0]).astype(np.float64)


def cycle_representatives(mapping):
    """Return (rep, periodic) for the functional graph of ``mapping``.

    ``rep[x]`` is the smallest point on the cycle that the forward orbit of
    ``x`` eventually enters; ``periodic[x]`` says whether ``x`` lies on it.
    """
    n = mapping.shape[0]
    # pointer doubling: after the loop jump = f^(2^K) and low[x] is the
    # minimum over the 2^K points x, f(x), ..., with 2^K >= n
    jump = mapping.astype(np.int64)
    low = np.arange(n, dtype=np.int64)
    span = 1
    while span < n:
        low = np.minimum(low, low[jump])
        jump = jump[jump]
        span *= 2
    # n >= 2^K steps in, every orbit sits on its cycle; the window covers it
    pts = jump
    rep = low[pts]
    periodic = np.zeros(n, dtype=np.bool_)
    periodic[pts] = True
    return rep, periodic


def orbit_counts(mapping, x, steps):
    n = mapping.shape[0]
    counts = np.zeros(n, dtype=np.int64)
    y = x
    for _ in range(steps):
        counts[y] += 1
        y = mapping[y]
    return counts


def cesaro_sum(weights, mapping, steps):
    """Sum of the first ``steps`` push-forward iterates of ``weights``."""
    acc = np.zeros_like(weights)
    cur = weights.copy()
    for _ in range(steps):
        acc += cur
        cur = push_forward(cur, mapping)
    return acc


def cesaro_distances(weights, mapping, steps, limit):
    """L1 distance of each Cesaro average A_1..A_steps to ``limit``."""
    out = np.empty(steps, dtype=np.float64)
    acc = np.zeros_like(weights)
    cur = weights.copy()
    for t in range(steps):
        acc += cur
        cur = push_forward(cur, mapping)
        out[t] = np.abs(acc / (t + 1) - limit).sum()
    return out
