"""``numba.njit`` twins of the kernels in ``_numpy``."""
import numpy as np
from numba import njit


@njit(cache=True)
def grid_distance(n):
    out = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            d = abs(i - j)
            out[i, j] = min(d, n - d)
    return out


@njit(cache=True)
def push_forward(weights, mapping):
    out = np.zeros(weights.shape[0], dtype=np.float64)
    for i in range(weights.shape[0]):
        out[mapping[i]] += weights[i]
    return out


@njit(cache=True)
def cycle_representatives(mapping):
    n = mapping.shape[0]
    # 0 unvisited, 1 on current walk, 2 resolved
    state = np.zeros(n, dtype=np.int8)
    rep = np.empty(n, dtype=np.int64)
    periodic = np.zeros(n, dtype=np.bool_)
    path = np.empty(n, dtype=np.int64)
    for start in range(n):
        if state[start] == 2:
            continue
        length = 0
        y = start
        while state[y] == 0:
            state[y] = 1
            path[length] = y
            length += 1
            y = mapping[y]
        if state[y] == 1:
            # closed a new cycle at y
            r = y
            z = mapping[y]
            while z != y:
                if z < r:
                    r = z
                z = mapping[z]
            z = y
            periodic[z] = True
            rep[z] = r
            z = mapping[y]
            while z != y:
                periodic[z] = True
                rep[z] = r
                z = mapping[z]
        r = rep[y]
        for k in range(length):
            p = path[k]
            state[p] = 2
            if not periodic[p]:
                rep[p] = r
    return rep, periodic


@njit(cache=True)
def orbit_counts(mapping, x, steps):
    counts = np.zeros(mapping.shape[0], dtype=np.int64)
    y = x
    for _ in range(steps):
        counts[y] += 1
        y = mapping[y]
    return counts


@njit(cache=True)
def cesaro_sum(weights, mapping, steps):
    n = weights.shape[0]
    acc = np.zeros(n, dtype=np.float64)
    cur = weights.copy()
    for _ in range(steps):
        for i in range(n):
            acc[i] += cur[i]
        cur = push_forward(cur, mapping)
    return acc


@njit(cache=True)
def cesaro_distances(weights, mapping, steps, limit):
    n = weights.shape[0]
    out = np.empty(steps, dtype=np.float64)
    acc = np.zeros(n, dtype=np.float64)
    cur = weights.copy()
    for t in range(steps):
        for i in range(n):
            acc[i] += cur[i]
        cur = push_forward(cur, mapping)
        s = 0.0
        for i in range(n):
            s += abs(acc[i] / (t + 1) - limit[i])
        out[t] = s
    return out
