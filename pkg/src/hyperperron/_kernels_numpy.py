"""Pure-numpy fallback kernels; same contracts as _kernels_numba.

Selected with HYPERPERRON_BACKEND=numpy.  Vectorized over edges; the
iterative solvers keep their Python loop structure, so this path is slower
but has no compilation dependency.
"""

import numpy as np

BACKEND_NAME = "numpy"


def _leave_one_out(X):
    # out[:, j] = prod over the other columns; cumulative products avoid
    # division so exact zeros propagate exactly
    m, k = X.shape
    out = np.empty_like(X)
    cum = np.cumprod(X, axis=1)
    rcum = np.cumprod(X[:, ::-1], axis=1)[:, ::-1]
    out[:, 0] = rcum[:, 1] if k > 1 else 1.0
    out[:, -1] = cum[:, -2]
    for j in range(1, k - 1):
        out[:, j] = cum[:, j - 1] * rcum[:, j + 1]
    return out


def form_value(edges, x, k):
    if edges.shape[0] == 0:
        return 0.0
    X = x[edges]
    return float(np.sum(X**k) - k * np.sum(np.prod(X, axis=1)))


def adjacency_products(edges, x, n):
    out = np.zeros(n)
    if edges.shape[0]:
        loo = _leave_one_out(x[edges])
        np.add.at(out, edges.ravel(), loo.ravel())
    return out


def laplacian_apply_vec(deg, edges, x, k):
    return deg * x ** (k - 1) - adjacency_products(edges, x, x.shape[0])


def objective_value(deg, edges, y, k):
    v = float(deg @ y)
    if edges.shape[0]:
        v -= k * float(np.sum(np.prod(y[edges] ** (1.0 / k), axis=1)))
    return v


def _project_simplex(v):
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, v.shape[0] + 1)
    rho = np.nonzero(u - (css - 1.0) / idx > 0)[0][-1]
    theta = (css[rho] - 1.0) / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def pgd_minimize(deg, edges, k, y0, max_iter, value_tol, floor, kkt_tol):
    y = np.maximum(y0, floor)
    y /= y.sum()
    f = objective_value(deg, edges, y, k)
    kinv = 1.0 / k
    stable = 0
    it = 0
    has_edges = edges.shape[0] > 0
    flat = edges.ravel() if has_edges else None
    while it < max_iter:
        it += 1
        g = deg.astype(np.float64).copy()
        if has_edges:
            p = np.prod(y[edges] ** kinv, axis=1)
            np.subtract.at(g, flat, np.repeat(p, k) / y[flat])
        support = y > 1e-9 * y.max()
        kkt = float(
            (y[support] ** ((k - 1.0) / k) * np.abs(g[support] - f)).max(initial=0.0)
        )
        t = 1.0
        accepted = False
        fz = f
        z = y
        for _ in range(60):
            cand = _project_simplex(y - t * g)
            dec = float(g @ (cand - y))
            if dec >= -1e-18:
                return y, f, it, True
            np.maximum(cand, floor, out=cand)
            fc = objective_value(deg, edges, cand, k)
            if fc <= f + 1e-4 * dec:
                accepted = True
                z, fz = cand, fc
                break
            t *= 0.5
        if not accepted:
            return y, f, it, kkt <= kkt_tol
        rel = abs(f - fz) / max(1.0, abs(f))
        y, f = z, fz
        if rel < value_tol and kkt <= kkt_tol:
            stable += 1
            if stable >= 10:
                return y, f, it, True
        else:
            stable = 0
    return y, f, it, False


def power_block(deg, edges, k, s, z0, max_iter, bracket_tol, eps):
    b = deg.shape[0]
    z = z0 / (np.sum(z0**k)) ** (1.0 / k)
    lo = hi = 0.0
    km1 = k - 1
    it = 0
    while it < max_iter:
        it += 1
        zp = z**km1
        w = adjacency_products(edges, z, b) + (s - deg) * zp
        ratios = w / zp
        lo = float(ratios.min())
        hi = float(ratios.max())
        if hi - lo <= bracket_tol * max(1.0, abs(hi)):
            return z, lo, hi, it
        z = w ** (1.0 / km1) + eps
        z /= (np.sum(z**k)) ** (1.0 / k)
    return z, lo, hi, it


def grid_scan(deg, edges, k, comps, resolution):
    nrows = comps.shape[0]
    best = np.inf
    best_row = -1
    chunk = 1 << 16
    for start in range(0, nrows, chunk):
        Y = comps[start : start + chunk].astype(np.float64) / resolution
        v = Y @ deg
        if edges.shape[0]:
            X = Y ** (1.0 / k)
            for e in range(edges.shape[0]):
                v -= k * np.prod(X[:, edges[e]], axis=1)
        i = int(np.argmin(v))
        if v[i] < best:
            best = float(v[i])
            best_row = start + i
    return best, best_row


def subset_cut_sizes(edge_masks, n):
    count = (1 << (n - 1)) - 1
    subsets = np.arange(1, count + 1, dtype=np.int64)
    cuts = np.zeros(count, dtype=np.int64)
    for em in edge_masks:
        inter = subsets & em
        cuts += (inter != 0) & (inter != em)
    return cuts
