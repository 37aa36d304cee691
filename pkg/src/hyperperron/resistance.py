"""Electrical quantities of graphs via principal-submatrix inverses.

Strictly k = 2: no hypergraph resistance notion is defined here, and inputs
with larger uniformity are rejected.  The resistance matrix is produced from
a single principal inverse padded with a zero row and column (a symmetric
{1}-inverse of the Laplacian) and re-verified from a second pivot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hypergraph import DisconnectedError, Hypergraph, is_connected
from .perron import PerronSummary
from . import report

NEGATIVE_ENTRY_TOL = -1e-12
PIVOT_AGREEMENT_TOL = 1e-9
CONDITION_LIMIT = 1e13


class NumericalError(ArithmeticError):
    """Elimination produced entries a nonsingular M-matrix inverse cannot have."""


@dataclass(eq=False)
class ResistanceReport:
    """Pairwise resistance distances with the derived vertex indices.

    r: symmetric (n, n) matrix, zero diagonal
    kf: Kirchhoff index, the sum of r over unordered pairs
    kf_i: per-vertex row sums (resistance centralities)
    r_i: per-vertex row maxima (resistance eccentricities)
    """

    r: np.ndarray
    kf: float
    kf_i: np.ndarray
    r_i: np.ndarray


def _graph_only(g: Hypergraph) -> None:
    if g.k != 2:
        raise ValueError(
            f"resistance quantities are defined for graphs only, got k={g.k}"
        )


def _laplacian(g: Hypergraph) -> np.ndarray:
    L = np.diag(g.degrees.astype(np.float64))
    for a, b in g.edges:
        L[a - 1, b - 1] -= 1.0
        L[b - 1, a - 1] -= 1.0
    return L


def _invert_partial_pivot(a: np.ndarray) -> np.ndarray:
    """Gauss-Jordan with partial pivoting on [A | I]; no library solver."""
    d = a.shape[0]
    if d == 0:
        return np.empty((0, 0))
    aug = np.hstack([a.astype(np.float64).copy(), np.eye(d)])
    scale = max(float(np.abs(a).max()), 1.0)
    for col in range(d):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = aug[pivot_row, col]
        if abs(pivot) <= 1e-12 * scale:
            raise DisconnectedError(
                "singular principal submatrix: the graph is disconnected"
            )
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        aug[col] /= pivot
        for row in range(d):
            if row != col and aug[row, col] != 0.0:
                aug[row] -= aug[row, col] * aug[col]
    return aug[:, d:]


def principal_inverse(g: Hypergraph, i: int) -> np.ndarray:
    """Inverse of the Laplacian with row/column i deleted.

    The result is entrywise nonnegative for a connected graph; entries below
    -1e-12 are treated as numerical failure rather than clamped.
    """
    _graph_only(g)
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex {i} outside 1..{g.n}")
    L = _laplacian(g)
    keep = [v for v in range(g.n) if v != i - 1]
    sub = L[np.ix_(keep, keep)]
    inv = _invert_partial_pivot(sub)
    cond = float(np.abs(sub).sum(axis=0).max() * np.abs(inv).sum(axis=0).max()) if keep else 0.0
    if cond > CONDITION_LIMIT:
        raise NumericalError(f"principal submatrix too ill-conditioned ({cond:.3e})")
    if inv.size and float(inv.min()) < NEGATIVE_ENTRY_TOL:
        raise NumericalError(
            f"principal inverse has entry {inv.min():.3e} < {NEGATIVE_ENTRY_TOL}"
        )
    return inv


def padded_one_inverse(g: Hypergraph, i: int) -> np.ndarray:
    """principal_inverse(g, i) padded with a zero row/column at position i.

    Satisfies L N L = L, i.e. it is a symmetric {1}-inverse of the Laplacian.
    """
    inv = principal_inverse(g, i)
    n = g.n
    out = np.zeros((n, n))
    keep = [v for v in range(n) if v != i - 1]
    out[np.ix_(keep, keep)] = inv
    return out


def _resistances_from(n_inv: np.ndarray) -> np.ndarray:
    diag = np.diag(n_inv)
    return diag[:, None] + diag[None, :] - n_inv - n_inv.T


def resistance_matrix(g: Hypergraph, seed: int = 0) -> ResistanceReport:
    """Full resistance report from the pivot at the last vertex.

    A second, seeded pivot recomputes the matrix through the same four-term
    identity; disagreement beyond 1e-9 raises instead of returning bad data.
    """
    _graph_only(g)
    if not is_connected(g):
        raise DisconnectedError("resistance distances need a connected graph")
    n = g.n
    if n == 1:
        z = np.zeros((1, 1))
        return ResistanceReport(r=z, kf=0.0, kf_i=np.zeros(1), r_i=np.zeros(1))
    n_inv = padded_one_inverse(g, n)
    r = _resistances_from(n_inv)
    if n >= 2:
        rng = np.random.default_rng(seed)
        other = int(rng.integers(1, n))  # pivot in 1..n-1
        r2 = _resistances_from(padded_one_inverse(g, other))
        if float(np.abs(r - r2).max()) > PIVOT_AGREEMENT_TOL * max(1.0, float(r.max())):
            raise NumericalError(
                f"resistance matrices from pivots {n} and {other} disagree"
            )
    kf = float(n * np.trace(n_inv) - n_inv.sum())
    kf_pairs = float(r.sum() / 2.0)
    if abs(kf - kf_pairs) > 1e-9 * max(1.0, abs(kf)):
        raise NumericalError(
            f"Kirchhoff index mismatch: trace identity {kf} vs pair sum {kf_pairs}"
        )
    return ResistanceReport(
        r=r,
        kf=kf,
        kf_i=r.sum(axis=1),
        r_i=r.max(axis=1),
    )


def check_section4(g: Hypergraph, summary: PerronSummary,
                   instance_id: str = "", seed: int = 0) -> list[report.Certificate]:
    """Resistance-vs-inverse-Perron certificates for a connected graph.

    Per vertex i:   1/alpha_i >= r_i          (T4.1)
                    (n-1)/alpha_i >= n Kf_i - Kf   (T4.2)
    Globally:       (n-1)/n sum 1/alpha_i >= Kf    (C4.3)
    """
    _graph_only(g)
    if len(summary.per_vertex) != g.n:
        raise ValueError("summary was computed on a different instance")
    rep = resistance_matrix(g, seed=seed)
    n = g.n
    certs: list[report.Certificate] = []
    if not summary.converged:
        for tid in ("T4.1", "T4.2"):
            certs.extend(
                report.indeterminate(tid, instance_id, "solver did not converge", vertex=v)
                for v in range(1, n + 1)
            )
        certs.append(report.indeterminate("C4.3", instance_id, "solver did not converge"))
        return certs
    for res in summary.per_vertex:
        i = res.vertex
        inv_alpha = 1.0 / res.value
        certs.append(report.evaluate(
            "T4.1", instance_id, inv_alpha, float(rep.r_i[i - 1]), vertex=i,
            detail=f"1/alpha_{i}={inv_alpha:.10g} >= resistance eccentricity r_{i}={rep.r_i[i - 1]:.10g}",
        ))
        lhs = (n - 1) * inv_alpha
        rhs = n * float(rep.kf_i[i - 1]) - rep.kf
        certs.append(report.evaluate(
            "T4.2", instance_id, lhs, rhs, vertex=i,
            detail=f"(n-1)/alpha_{i}={lhs:.10g} >= n*Kf_{i}-Kf={rhs:.10g}",
        ))
    total = sum(1.0 / r.value for r in summary.per_vertex)
    lhs = (n - 1) / n * total
    certs.append(report.evaluate(
        "C4.3", instance_id, lhs, rep.kf,
        detail=f"(n-1)/n * sum(1/alpha_i)={lhs:.10g} >= Kf={rep.kf:.10g}",
    ))
    return certs
