"""Exact enumeration of cut quantities and 2-design detection.

Everything here is ground truth by exhaustion, with explicit size gates and
refusals instead of approximations.  Witness sets are reported in
lexicographically smallest form among all optima.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backend import kernels
from .hypergraph import Hypergraph
from .perron import EnumerationLimitError

BW_MAX_N = 14
ISO_MAX_N = 14
EDGE_CONN_MAX_N = 20


@dataclass(frozen=True)
class CutReport:
    """One vertex cut: |E(S, S-bar)| and the mean intersection size t(S).

    cut_size == 0 is the empty-cut flag; t_value is 0 there and lies in
    [1, k-1] otherwise.
    """

    subset: tuple[int, ...]
    cut_size: int
    t_value: float


@dataclass(frozen=True)
class DesignParams:
    """Parameters of a detected 2-(n, b, k, r, lambda) design."""

    n: int
    b: int
    k: int
    r: int
    lam: int
    symmetric: bool

    def __post_init__(self):
        for name in ("n", "b", "k", "r", "lam"):
            if getattr(self, name) < 1:
                raise ValueError(f"design parameter {name} must be positive")
        if self.lam * (self.n - 1) != self.r * (self.k - 1):
            raise ValueError(
                f"inconsistent design: lambda(n-1)={self.lam * (self.n - 1)} "
                f"!= r(k-1)={self.r * (self.k - 1)}"
            )
        if self.n * self.r != self.b * self.k:
            raise ValueError(
                f"inconsistent design: n*r={self.n * self.r} != b*k={self.b * self.k}"
            )
        if self.symmetric != (self.n == self.b):
            raise ValueError("symmetric flag must equal (n == b)")


def cut(h: Hypergraph, subset) -> CutReport:
    """Exact cut size and t(S) by a single edge scan."""
    s = frozenset(subset)
    if not s or len(s) >= h.n:
        raise ValueError("subset must be proper and nonempty")
    bad = [v for v in s if not 1 <= v <= h.n]
    if bad:
        raise ValueError(f"vertex {bad[0]} outside 1..{h.n}")
    cut_size = 0
    inter_total = 0
    for e in h.edges:
        inside = sum(1 for v in e if v in s)
        if 0 < inside < h.k:
            cut_size += 1
            inter_total += inside
    t = inter_total / cut_size if cut_size else 0.0
    return CutReport(subset=tuple(sorted(s)), cut_size=cut_size, t_value=t)


def _cut_size_mask(edge_masks: list[int], smask: int) -> int:
    c = 0
    for em in edge_masks:
        inter = em & smask
        if inter != 0 and inter != em:
            c += 1
    return c


def _edge_masks(h: Hypergraph) -> list[int]:
    return [sum(1 << (v - 1) for v in e) for e in h.edges]


def bipartition_width(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Minimum cut over all floor(n/2)-subsets, with the smallest witness."""
    if h.n < 2:
        raise ValueError("bipartition width needs n >= 2")
    if h.n > BW_MAX_N:
        raise EnumerationLimitError(
            f"refusing exact bipartition width for n={h.n} > {BW_MAX_N}"
        )
    masks = _edge_masks(h)
    best: int | None = None
    witness: tuple[int, ...] = ()
    for combo in itertools.combinations(range(1, h.n + 1), h.n // 2):
        smask = sum(1 << (v - 1) for v in combo)
        c = _cut_size_mask(masks, smask)
        if best is None or c < best or (c == best and combo < witness):
            best, witness = c, combo
    return best, witness


def isoperimetric_number(h: Hypergraph) -> tuple[float, tuple[int, ...]]:
    """Exact min of |E(S,S-bar)| / |S| over nonempty S with |S| <= n/2.

    Values are compared as exact fractions so ties and the lexicographic
    witness rule are decided without rounding.
    """
    if h.n < 2:
        raise ValueError("isoperimetric number needs n >= 2")
    if h.n > ISO_MAX_N:
        raise EnumerationLimitError(
            f"refusing exact isoperimetric number for n={h.n} > {ISO_MAX_N}"
        )
    masks = _edge_masks(h)
    best: Fraction | None = None
    witness: tuple[int, ...] = ()
    for size in range(1, h.n // 2 + 1):
        for combo in itertools.combinations(range(1, h.n + 1), size):
            smask = sum(1 << (v - 1) for v in combo)
            val = Fraction(_cut_size_mask(masks, smask), size)
            if best is None or val < best or (val == best and combo < witness):
                best, witness = val, combo
    return float(best), witness


def edge_connectivity(h: Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Exact e(G) over all proper nonempty subsets; 0 iff disconnected."""
    if h.n < 2:
        raise ValueError("edge connectivity needs n >= 2")
    if h.n > EDGE_CONN_MAX_N:
        raise EnumerationLimitError(
            f"refusing exact edge connectivity for n={h.n} > {EDGE_CONN_MAX_N}"
        )
    edge_masks = np.array(_edge_masks(h), dtype=np.int64)
    cuts = kernels.subset_cut_sizes(edge_masks, h.n)
    best = int(cuts.min())
    witness: tuple[int, ...] | None = None
    full = frozenset(range(1, h.n + 1))
    for idx in np.flatnonzero(cuts == best):
        smask = int(idx) + 1
        inside = tuple(v for v in range(1, h.n) if smask >> (v - 1) & 1)
        for cand in (inside, tuple(sorted(full - set(inside)))):
            if witness is None or cand < witness:
                witness = cand
    return best, witness


def detect_2_design(h: Hypergraph) -> DesignParams | None:
    """Design parameters when all degrees and all pair-counts agree, else None.

    The single edge on exactly k vertices counts as the trivial
    2-(k, 1, k, 1, 1) design.
    """
    if h.m < 1 or h.n < 2:
        return None
    degs = set(h.degrees.tolist())
    if len(degs) != 1:
        return None
    r = degs.pop()
    pair_counts: dict[tuple[int, int], int] = {}
    for e in h.edges:
        for p in itertools.combinations(e, 2):
            pair_counts[p] = pair_counts.get(p, 0) + 1
    if len(pair_counts) != h.n * (h.n - 1) // 2:
        return None  # some pair uncovered
    lams = set(pair_counts.values())
    if len(lams) != 1:
        return None
    lam = lams.pop()
    if lam < 1:
        return None
    params = DesignParams(
        n=h.n, b=h.m, k=h.k, r=int(r), lam=int(lam), symmetric=h.n == h.m
    )
    return params


def design_edge_connectivity_bounds(d: DesignParams) -> tuple[float, float]:
    """(n*lambda/k, (n-1)*lambda/(k-1)); a symmetric design pins e(G) = k = r."""
    lower = d.n * d.lam / d.k
    upper = (d.n - 1) * d.lam / (d.k - 1)
    if d.symmetric:
        # integrality squeezes the interval to the single value k (= r)
        if d.r != d.k or not (lower <= d.k <= upper + 1e-12):
            raise ValueError(f"symmetric design with r={d.r}, k={d.k} violates its own bounds")
    return lower, upper
