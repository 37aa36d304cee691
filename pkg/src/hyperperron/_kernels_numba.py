"""JIT-compiled hot loops. Semantics mirror _kernels_numpy exactly.

All kernels take 0-based edge arrays of shape (m, k) and float64 vectors.
Leave-one-out edge products are computed with O(k^2) inner loops rather than
division so that exact zeros in the input stay exact.
"""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def form_value(edges, x, k):
    # sum_e ( sum_{i in e} x_i^k  -  k * prod_{i in e} x_i )
    total = 0.0
    for e in range(edges.shape[0]):
        p = 1.0
        for a in range(k):
            xi = x[edges[e, a]]
            total += xi ** k
            p *= xi
        total -= k * p
    return total


@njit(**_JIT)
def adjacency_products(edges, x, n):
    # out[i] = sum_{e containing i} prod_{l in e, l != i} x_l
    out = np.zeros(n)
    for e in range(edges.shape[0]):
        k = edges.shape[1]
        for a in range(k):
            p = 1.0
            for b in range(k):
                if b != a:
                    p *= x[edges[e, b]]
            out[edges[e, a]] += p
    return out


@njit(**_JIT)
def laplacian_apply_vec(deg, edges, x, k):
    # (L x^{k-1})_i = d_i x_i^{k-1} - sum_{e ∋ i} prod_{l != i} x_l
    n = x.shape[0]
    out = np.empty(n)
    for i in range(n):
        out[i] = deg[i] * x[i] ** (k - 1)
    for e in range(edges.shape[0]):
        for a in range(k):
            p = 1.0
            for b in range(k):
                if b != a:
                    p *= x[edges[e, b]]
            out[edges[e, a]] -= p
    return out


@njit(**_JIT)
def objective_value(deg, edges, y, k):
    # f(y) = deg . y - k * sum_e prod_{i in e} y_i^{1/k}
    v = 0.0
    for i in range(y.shape[0]):
        v += deg[i] * y[i]
    kinv = 1.0 / k
    for e in range(edges.shape[0]):
        p = 1.0
        for a in range(k):
            p *= y[edges[e, a]] ** kinv
        v -= k * p
    return v


@njit(**_JIT)
def _project_simplex(v):
    d = v.shape[0]
    u = np.sort(v)[::-1]
    css = 0.0
    rho = -1
    theta = 0.0
    for j in range(d):
        css += u[j]
        t = (css - 1.0) / (j + 1)
        if u[j] - t > 0.0:
            rho = j
            theta = t
    out = np.empty(d)
    for i in range(d):
        z = v[i] - theta
        out[i] = z if z > 0.0 else 0.0
    return out


@njit(**_JIT)
def pgd_minimize(deg, edges, k, y0, max_iter, value_tol, floor, kkt_tol):
    """Projected gradient on the simplex for f(y) = deg.y - k sum_e prod y^{1/k}.

    Backtracking Armijo line search halving from 1.0; iterates floored at
    `floor` to keep the k-th-root gradient finite.  Converged when the
    relative value change stays below value_tol for 10 consecutive steps AND
    the eigenvector residual y_i^{(k-1)/k} |g_i - f| on the support is below
    kkt_tol.  Returns (y, f, iterations, converged).
    """
    d = y0.shape[0]
    y = np.empty(d)
    s = 0.0
    for i in range(d):
        y[i] = y0[i] if y0[i] > floor else floor
        s += y[i]
    for i in range(d):
        y[i] /= s
    f = objective_value(deg, edges, y, k)
    kinv = 1.0 / k
    g = np.empty(d)
    stable = 0
    it = 0
    while it < max_iter:
        it += 1
        top = 0.0
        for i in range(d):
            g[i] = deg[i]
            if y[i] > top:
                top = y[i]
        for e in range(edges.shape[0]):
            p = 1.0
            for a in range(k):
                p *= y[edges[e, a]] ** kinv
            for a in range(k):
                i = edges[e, a]
                g[i] -= p / y[i]
        kkt = 0.0
        for i in range(d):
            if y[i] > 1e-9 * top:
                r = y[i] ** ((k - 1.0) / k) * abs(g[i] - f)
                if r > kkt:
                    kkt = r
        t = 1.0
        accepted = False
        fz = f
        z = y
        for _ in range(60):
            cand = _project_simplex(y - t * g)
            dec = 0.0
            for i in range(d):
                dec += g[i] * (cand[i] - y[i])
            if dec >= -1e-18:
                # projected step is (numerically) a fixed point: stationary
                return y, f, it, True
            for i in range(d):
                if cand[i] < floor:
                    cand[i] = floor
            fc = objective_value(deg, edges, cand, k)
            if fc <= f + 1e-4 * dec:
                accepted = True
                z = cand
                fz = fc
                break
            t *= 0.5
        if not accepted:
            return y, f, it, kkt <= kkt_tol
        rel = abs(f - fz) / max(1.0, abs(f))
        y = z
        f = fz
        if rel < value_tol and kkt <= kkt_tol:
            stable += 1
            if stable >= 10:
                return y, f, it, True
        else:
            stable = 0
    return y, f, it, False


@njit(**_JIT)
def power_block(deg, edges, k, s, z0, max_iter, bracket_tol, eps):
    """Shifted power iteration z <- ((s I - L) z^{k-1})^{[1/(k-1)]} on one block.

    Tracks the min/max component ratios, which bracket the spectral radius of
    the nonnegative shifted tensor for any positive iterate.  Returns
    (z, lo, hi, iterations) with z normalized in the k-norm and matching the
    final bracket.
    """
    b = deg.shape[0]
    z = z0.copy()
    nrm = 0.0
    for i in range(b):
        nrm += z[i] ** k
    nrm = nrm ** (1.0 / k)
    for i in range(b):
        z[i] /= nrm
    lo = 0.0
    hi = 0.0
    km1 = k - 1
    it = 0
    while it < max_iter:
        it += 1
        w = adjacency_products(edges, z, b)
        lo = 1e300
        hi = -1e300
        for i in range(b):
            w[i] += (s - deg[i]) * z[i] ** km1
            r = w[i] / z[i] ** km1
            if r < lo:
                lo = r
            if r > hi:
                hi = r
        if hi - lo <= bracket_tol * max(1.0, abs(hi)):
            return z, lo, hi, it
        nrm = 0.0
        for i in range(b):
            z[i] = w[i] ** (1.0 / km1) + eps
            nrm += z[i] ** k
        nrm = nrm ** (1.0 / k)
        for i in range(b):
            z[i] /= nrm
    return z, lo, hi, it


@njit(**_JIT)
def grid_scan(deg, edges, k, comps, resolution):
    """Minimum of f(c / resolution) over the composition rows of comps."""
    nrows, d = comps.shape
    best = 1e300
    best_row = -1
    kinv = 1.0 / k
    r = float(resolution)
    y = np.empty(d)
    for row in range(nrows):
        for i in range(d):
            y[i] = comps[row, i] / r
        v = 0.0
        for i in range(d):
            v += deg[i] * y[i]
        for e in range(edges.shape[0]):
            p = 1.0
            for a in range(k):
                p *= y[edges[e, a]] ** kinv
            v -= k * p
        if v < best:
            best = v
            best_row = row
    return best, best_row


@njit(**_JIT)
def subset_cut_sizes(edge_masks, n):
    """|E(S, S-bar)| for every S encoded as a bitmask over vertices 0..n-2.

    Masks 1 .. 2^(n-1)-1 enumerate one representative of each {S, S-bar}
    pair (the one avoiding vertex n-1).
    """
    count = (1 << (n - 1)) - 1
    cuts = np.zeros(count, dtype=np.int64)
    m = edge_masks.shape[0]
    for s in range(1, count + 1):
        c = 0
        for e in range(m):
            inter = edge_masks[e] & s
            if inter != 0 and inter != edge_masks[e]:
                c += 1
        cuts[s - 1] = c
    return cuts
