"""Inverse Perron values, analytic connectivity and the solvers behind them.

For a vertex j, the inverse Perron value is the minimum of the Laplacian
form L x^k over nonnegative x with sum x_i^k = 1 and x_j = 0.  Two
independent numerical routes are provided and cross-checked:

* projected gradient on the simplex reached through y_i = x_i^k (the
  substituted objective deg.y - k sum_e prod y^{1/k} is convex, so the
  simplex problem is globally solvable; multiple starts are kept anyway),
* shifted power iteration: the value equals s - rho(s I - L(j)) for any
  shift s above the largest degree, computed blockwise on the connected
  pieces of the edge set avoiding j, with Collatz-Wielandt ratio brackets
  certifying every reported spectral radius.

For graphs (k = 2) a dense symmetric eigensolver provides exact values.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb

import numpy as np

from .backend import kernels
from .hypergraph import Hypergraph, components
from .tensor_form import h_eigen_residual, laplacian_form

KKT_TOL = 1e-6
AGREEMENT_TOL = 1e-6
ITERATE_FLOOR = 1e-12
POWER_EPS = 1e-12
VALUE_CHANGE_TOL = 1e-12
SUPPORT_ROUND_FACTOR = 1e-9


class EnumerationLimitError(ValueError):
    """Exact enumeration refused: the instance exceeds the size gate."""


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-8
    max_iter: int = 50_000
    starts: int = 16
    seed: int = 0
    method: str = "auto"  # auto | pg | power | both
    connectivity_tol: float = 1e-8
    threads: int = 1


DEFAULT_OPTIONS = SolverOptions()


@dataclass(eq=False)
class PerronResult:
    """One inverse Perron value with its minimizer and solver diagnostics."""

    vertex: int
    value: float
    minimizer: np.ndarray
    kkt_residual: float
    iterations: int
    method: str
    converged: bool


@dataclass(eq=False)
class PerronSummary:
    per_vertex: tuple[PerronResult, ...]
    alpha: float
    beta: float
    argmin_vertex: int
    argmax_vertex: int

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.per_vertex)


# ---------------------------------------------------------------------------
# reduction to the index set without j

def _reduced(h: Hypergraph, j: int):
    """Full degrees and reindexed edges on V minus {j} (0-based, ascending)."""
    keep = np.array([v for v in range(1, h.n + 1) if v != j], dtype=np.int64)
    deg = h.degrees[keep - 1].astype(np.float64)
    red = [
        tuple(v - 1 if v < j else v - 2 for v in e)
        for e in h.edges
        if j not in e
    ]
    if red:
        arr = np.asarray(red, dtype=np.int64)
    else:
        arr = np.empty((0, h.k), dtype=np.int64)
    return keep, deg, arr


def _blocks(d: int, edges: np.ndarray):
    """Connected pieces of the reduced edge set.

    Returns (edge_blocks, lonely) where each edge block is a pair of
    (member indices ascending, edges relabeled to the block) and lonely
    lists the vertices in no reduced edge.
    """
    adj: list[list[int]] = [[] for _ in range(d)]
    for e in edges:
        for a in e:
            for b in e:
                if a != b:
                    adj[a].append(b)
    seen = np.zeros(d, dtype=bool)
    edge_blocks = []
    lonely = []
    for start in range(d):
        if seen[start]:
            continue
        seen[start] = True
        if not adj[start]:
            lonely.append(start)
            continue
        stack, member = [start], [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    member.append(v)
                    stack.append(v)
        member.sort()
        pos = {v: i for i, v in enumerate(member)}
        inside = set(member)
        local = [tuple(pos[v] for v in e) for e in edges if e[0] in inside]
        edge_blocks.append((np.array(member, dtype=np.int64), np.asarray(local, dtype=np.int64)))
    return edge_blocks, np.array(lonely, dtype=np.int64)


def _finish(h: Hypergraph, j: int, x_full: np.ndarray, iterations: int,
            method: str, converged: bool) -> PerronResult:
    """Normalize the minimizer, recompute the value and the KKT residual."""
    x = np.maximum(x_full, 0.0)
    x[j - 1] = 0.0
    nrm = float(np.sum(x**h.k)) ** (1.0 / h.k)
    if nrm == 0.0:
        raise ValueError("zero minimizer")
    x /= nrm
    value = laplacian_form(h, x)
    reduced_x = np.concatenate([x[: j - 1], x[j:]])
    resid = h_eigen_residual(h, j, value, reduced_x)
    if value < -1e-10:
        raise ArithmeticError(f"negative form value {value} at a nonnegative point")
    return PerronResult(
        vertex=j,
        value=max(value, 0.0),
        minimizer=x,
        kkt_residual=resid.residual_inf,
        iterations=iterations,
        method=method,
        converged=bool(converged and resid.residual_inf <= KKT_TOL),
    )


def _require_solvable(h: Hypergraph, j: int) -> None:
    if h.n < 2:
        raise ValueError("inverse Perron values need at least 2 vertices")
    if not 1 <= j <= h.n:
        raise ValueError(f"vertex {j} outside 1..{h.n}")


# ---------------------------------------------------------------------------
# projected gradient route

def solve_projected_gradient(h: Hypergraph, j: int, opts: SolverOptions = DEFAULT_OPTIONS) -> PerronResult:
    """Minimize the substituted simplex objective with multi-start PGD."""
    _require_solvable(h, j)
    keep, deg, edges = _reduced(h, j)
    d = h.n - 1
    rng = np.random.default_rng(opts.seed)
    best_y = None
    best_f = np.inf
    best_ok = False
    total_iter = 0
    for start in range(max(opts.starts, 1)):
        if start == 0:
            y0 = np.full(d, 1.0 / d)
        else:
            y0 = np.maximum(rng.dirichlet(np.ones(d)), ITERATE_FLOOR)
        y, _, iters, ok = kernels.pgd_minimize(
            deg, edges, h.k, y0, opts.max_iter, VALUE_CHANGE_TOL, ITERATE_FLOOR,
            KKT_TOL / 5.0,
        )
        total_iter += int(iters)
        # polish: drop the floor noise, renormalize, score the exact objective
        y = np.asarray(y).copy()
        y[y <= SUPPORT_ROUND_FACTOR * y.max()] = 0.0
        y /= y.sum()
        f = kernels.objective_value(deg, edges, y, h.k)
        if f < best_f:
            best_f = f
            best_y = y
            best_ok = bool(ok)
    x = np.zeros(h.n)
    x[keep - 1] = best_y ** (1.0 / h.k)
    return _finish(h, j, x, total_iter, "projected_gradient", best_ok)


# ---------------------------------------------------------------------------
# shifted power iteration route

def solve_shifted_power(h: Hypergraph, j: int, opts: SolverOptions = DEFAULT_OPTIONS) -> PerronResult:
    """Blockwise s - rho(s I - L(j)) with certified ratio brackets."""
    _require_solvable(h, j)
    keep, deg, edges = _reduced(h, j)
    d = h.n - 1
    s = float(h.max_degree + 1)
    bracket_target = max(opts.tol / 100.0, 1e-13)
    edge_blocks, lonely = _blocks(d, edges)

    best_val = np.inf
    best_vec = None  # (indices ascending, block vector)
    ran_iteration = False
    converged = True
    total_iter = 0
    for member, local in edge_blocks:
        ran_iteration = True
        b = member.shape[0]
        z0 = np.full(b, 1.0)
        z, lo, hi, iters = kernels.power_block(
            deg[member], local, h.k, s, z0, opts.max_iter, bracket_target, POWER_EPS
        )
        total_iter += int(iters)
        width = hi - lo
        if not width <= KKT_TOL * max(1.0, abs(hi)):
            converged = False
        # value of the block via the form; inside [s - hi, s - lo]
        z = np.asarray(z)
        w = kernels.adjacency_products(local, z, b) + (s - deg[member]) * z ** (h.k - 1)
        val = s - float(z @ w)
        if val < best_val:
            best_val = val
            best_vec = (member, z)
    method = "shifted_power"
    for i in lonely:
        if deg[i] < best_val:
            best_val = float(deg[i])
            best_vec = (np.array([i], dtype=np.int64), np.ones(1))
            method = "block_reduction"
    if not ran_iteration:
        method = "block_reduction"
    x = np.zeros(h.n)
    member, z = best_vec
    x[keep[member] - 1] = z
    return _finish(h, j, x, total_iter, method, converged)


# ---------------------------------------------------------------------------
# exact route for graphs

def _principal_matrix(deg: np.ndarray, edges: np.ndarray, d: int) -> np.ndarray:
    L = np.diag(deg.astype(np.float64))
    for a, b in edges:
        L[a, b] -= 1.0
        L[b, a] -= 1.0
    return L


def _solve_exact_k2(h: Hypergraph, j: int) -> PerronResult:
    _require_solvable(h, j)
    if h.k != 2:
        raise ValueError("exact eigensolver route applies to graphs only")
    keep, deg, edges = _reduced(h, j)
    d = h.n - 1
    L = _principal_matrix(deg, edges, d)
    whole_min = float(np.linalg.eigvalsh(L).min()) if d else 0.0
    edge_blocks, lonely = _blocks(d, edges)
    best_val = np.inf
    best_vec = None
    for member, local in edge_blocks:
        sub = _principal_matrix(deg[member], local, member.shape[0])
        w, v = np.linalg.eigh(sub)
        if w[0] < best_val:
            best_val = float(w[0])
            best_vec = (member, np.abs(v[:, 0]))
    for i in lonely:
        if deg[i] < best_val:
            best_val = float(deg[i])
            best_vec = (np.array([i], dtype=np.int64), np.ones(1))
    if abs(best_val - whole_min) > 1e-10 * max(1.0, abs(whole_min)):
        raise ArithmeticError(
            f"block eigenvalues ({best_val}) disagree with the dense solve ({whole_min})"
        )
    x = np.zeros(h.n)
    member, z = best_vec
    x[keep[member] - 1] = z
    return _finish(h, j, x, 0, "exact_k2", True)


# ---------------------------------------------------------------------------
# brute-force lattice oracle

@lru_cache(maxsize=16)
def _compositions(total: int, parts: int) -> np.ndarray:
    """All weak compositions of `total` into `parts` parts, int32 rows."""
    if parts == 1:
        return np.array([[total]], dtype=np.int32)
    nslots = total + parts - 1
    nbars = parts - 1
    rows = comb(nslots, nbars)
    bars = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(nslots), nbars)),
        dtype=np.int32,
        count=rows * nbars,
    ).reshape(rows, nbars)
    out = np.empty((rows, parts), dtype=np.int32)
    out[:, 0] = bars[:, 0]
    for i in range(1, nbars):
        out[:, i] = bars[:, i] - bars[:, i - 1] - 1
    out[:, parts - 1] = nslots - 1 - bars[:, nbars - 1]
    return out


def oracle_grid(h: Hypergraph, j: int, resolution: int) -> float:
    """Exhaustive minimum of the form over a simplex lattice; upper-bounds
    the true inverse Perron value and converges to it as resolution grows."""
    _require_solvable(h, j)
    d = h.n - 1
    if d > 5:
        raise EnumerationLimitError(
            f"grid oracle covers n-1 <= 5 coordinates, got {d}"
        )
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    _, deg, edges = _reduced(h, j)
    comps = _compositions(resolution, d)
    val, _ = kernels.grid_scan(deg, edges, h.k, comps, resolution)
    return float(val)


# ---------------------------------------------------------------------------
# front door

def inverse_perron(h: Hypergraph, j: int, opts: SolverOptions = DEFAULT_OPTIONS) -> PerronResult:
    """Inverse Perron value of vertex j by the configured method.

    "auto" takes the exact eigensolver for graphs and the agreeing pair of
    iterative solvers otherwise; "both" always runs the pair.  When the two
    routes disagree beyond tolerance the result is flagged non-converged
    rather than silently trusted.
    """
    _require_solvable(h, j)
    method = opts.method
    if method == "auto":
        if h.k == 2:
            return _solve_exact_k2(h, j)
        method = "both"
    if method == "pg":
        return solve_projected_gradient(h, j, opts)
    if method == "power":
        return solve_shifted_power(h, j, opts)
    if method == "both":
        a = solve_projected_gradient(h, j, opts)
        b = solve_shifted_power(h, j, opts)
        winner = a if a.value <= b.value else b
        agree = abs(a.value - b.value) <= AGREEMENT_TOL * max(1.0, winner.value)
        if a.converged and b.converged:
            converged = agree
        else:
            converged = a.converged or b.converged
        return replace(
            winner,
            iterations=a.iterations + b.iterations,
            converged=converged,
        )
    raise ValueError(f"unknown method {opts.method!r}")


def perron_summary(h: Hypergraph, opts: SolverOptions = DEFAULT_OPTIONS) -> PerronSummary:
    """All n inverse Perron values; ties break toward the smallest vertex."""
    if h.n < 2:
        raise ValueError("summary needs at least 2 vertices")
    vertices = range(1, h.n + 1)
    if opts.threads > 1:
        with ThreadPoolExecutor(max_workers=opts.threads) as pool:
            results = list(pool.map(lambda v: inverse_perron(h, v, opts), vertices))
    else:
        results = [inverse_perron(h, v, opts) for v in vertices]
    alpha = min(r.value for r in results)
    beta = max(r.value for r in results)
    argmin = next(r.vertex for r in results if r.value == alpha)
    argmax = next(r.vertex for r in results if r.value == beta)
    return PerronSummary(
        per_vertex=tuple(results),
        alpha=alpha,
        beta=beta,
        argmin_vertex=argmin,
        argmax_vertex=argmax,
    )


def is_connected_spectral(h: Hypergraph, opts: SolverOptions = DEFAULT_OPTIONS) -> bool:
    """Connectivity decided spectrally: some inverse Perron value > tolerance.

    Agrees with the component count; a single vertex is connected by
    convention (no inverse Perron values exist there).
    """
    if h.n == 1:
        return True
    summary = perron_summary(h, opts)
    return summary.beta > opts.connectivity_tol
