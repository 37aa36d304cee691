"""Laplacian tensor forms evaluated implicitly from the edge list.

The order-k tensor is never materialized: every operation is a sum over
edges, O(m*k) per evaluation.  For a vector x and a k-uniform hypergraph,

    form:   L x^k        = sum_e ( sum_{i in e} x_i^k - k prod_{i in e} x_i )
    apply:  (L x^{k-1})_i = d_i x_i^{k-1} - sum_{e ∋ i} prod_{l in e, l != i} x_l

and the principal variant L(j) drops vertex j while keeping full degrees on
the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .hypergraph import Hypergraph

# KKT/H-eigenvector conditions only bind on the support of a boundary
# minimizer; coordinates below this fraction of the max are excluded.
SUPPORT_TOL_FACTOR = 1e-9


@dataclass(frozen=True)
class HEigenResidual:
    """Max-norm residual of L(j) y^{k-1} = lambda y^{[k-1]} over a support."""

    eigenvalue: float
    residual_inf: float
    support: tuple[int, ...]


def _check_vector(h: Hypergraph, x, length: int | None = None) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=np.float64)
    want = h.n if length is None else length
    if x.shape != (want,):
        raise ValueError(f"vector has shape {x.shape}, expected ({want},)")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector has non-finite entries")
    return x


def laplacian_form(h: Hypergraph, x) -> float:
    """Evaluate the degree-k polynomial form of the Laplacian tensor at x."""
    x = _check_vector(h, x)
    return float(kernels.form_value(h.edge_array, x, h.k))


def laplacian_apply(h: Hypergraph, x) -> np.ndarray:
    """The gradient-carrying vector L x^{k-1}."""
    x = _check_vector(h, x)
    return kernels.laplacian_apply_vec(h.degrees.astype(np.float64), h.edge_array, x, h.k)


def _extend(h: Hypergraph, j: int, y: np.ndarray) -> np.ndarray:
    full = np.zeros(h.n)
    full[: j - 1] = y[: j - 1]
    full[j:] = y[j - 1 :]
    return full


def _restrict(j: int, full: np.ndarray) -> np.ndarray:
    return np.concatenate([full[: j - 1], full[j:]])


def principal_apply(h: Hypergraph, j: int, y) -> np.ndarray:
    """L(j) y^{k-1} for y indexed by the vertices other than j (ascending).

    Equals the full apply on the zero-extension of y, restricted back: the
    diagonal keeps full degrees, off-diagonal terms come only from edges
    avoiding j.
    """
    if not 1 <= j <= h.n:
        raise ValueError(f"vertex {j} outside 1..{h.n}")
    y = _check_vector(h, y, length=h.n - 1)
    return _restrict(j, laplacian_apply(h, _extend(h, j, y)))


def h_eigen_residual(h: Hypergraph, j: int, lam: float, y) -> HEigenResidual:
    """Residual of the H-eigenvector relation for L(j) on the support of y."""
    if not 1 <= j <= h.n:
        raise ValueError(f"vertex {j} outside 1..{h.n}")
    y = _check_vector(h, y, length=h.n - 1)
    if np.any(y < 0):
        raise ValueError("vector must be nonnegative")
    top = float(y.max(initial=0.0))
    if top == 0.0:
        raise ValueError("vector must be nonzero")
    applied = principal_apply(h, j, y)
    mask = y > SUPPORT_TOL_FACTOR * top
    resid = np.abs(applied[mask] - lam * y[mask] ** (h.k - 1))
    others = [v for v in range(1, h.n + 1) if v != j]
    support = tuple(others[i] for i in np.flatnonzero(mask))
    return HEigenResidual(
        eigenvalue=float(lam),
        residual_inf=float(resid.max(initial=0.0)),
        support=support,
    )
