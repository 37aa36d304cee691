"""Certificate runner: every catalogued inequality checked on an instance or
a corpus, with exact combinatorial sides and cross-validated spectral sides.

The catalogue (see report.THEOREM_IDS) covers, for a k-uniform hypergraph
with inverse Perron values a_j, a = min a_j, b = max a_j:

  T3.1  connectivity  <->  some a_j above tolerance
  T3.2  bipartition width >= (n + (-1)^n) / (k (n+1)) * sum a_j
  T3.3  isoperimetric number >= (a + b) / k
  T3.4  ecc(j) >= k / (2 (k-1)(n-1) a_j)          for every vertex
  C3.5  diam >= k / (2 (k-1)(n-1) a)  and  rad >= same with b
  T3.6  a_j <= (k-1) d_j / (n-1)                   for every vertex
  C3.7  sum a_j <= (k-1) k m / (n-1)
  T3.8  2-design  <->  all a_j equal to max_degree (k-1) / (n-1)
  T3.9  n lam / k <= edge connectivity <= (n-1) lam / (k-1)  for designs,
        with equality to k (= r) when symmetric
  L2.3  edge connectivity >= (n / k) a
  T4.1, T4.2, C4.3  resistance bounds (graphs only; see resistance module)

A certificate is emitted for every id on every instance: evaluated, or
skipped with a reason, or indeterminate when the solver did not converge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import report
from .combinatorics import (
    BW_MAX_N,
    EDGE_CONN_MAX_N,
    ISO_MAX_N,
    bipartition_width,
    design_edge_connectivity_bounds,
    detect_2_design,
    edge_connectivity,
    isoperimetric_number,
)
from .corpus import CorpusSpec, default_corpus, expand_corpus
from .hypergraph import Hypergraph, diameter, eccentricity, is_connected, radius
from .perron import DEFAULT_OPTIONS, PerronSummary, SolverOptions, perron_summary
from .report import Certificate
from .resistance import check_section4

EQUAL_VALUES_TOL = 1e-6

__all__ = [
    "certify_instance",
    "certify_corpus",
    "CorpusReport",
    "CorpusSpec",
    "default_corpus",
    "render_certificates",
    "render_corpus_report",
]


def certify_instance(
    h: Hypergraph,
    opts: SolverOptions = DEFAULT_OPTIONS,
    instance_id: str = "instance",
    summary: PerronSummary | None = None,
) -> list[Certificate]:
    """All thirteen certificate families for one instance.

    Disconnected instances are decided by T3.1 alone (everything else is
    skipped); inequality certificates go indeterminate, never fail, when the
    spectral side did not converge.
    """
    if h.n < 2:
        raise ValueError("certification needs at least 2 vertices")
    if summary is not None and len(summary.per_vertex) != h.n:
        raise ValueError("summary was computed on a different instance")
    if summary is None:
        summary = perron_summary(h, opts)
    connected = is_connected(h)
    solved = summary.converged
    n, k, m = h.n, h.k, h.m
    alphas = [r.value for r in summary.per_vertex]
    certs: list[Certificate] = []

    def indet(tid, vertex=None):
        certs.append(report.indeterminate(tid, instance_id, "solver did not converge", vertex))

    # T3.1: connectivity equivalence
    spectral = summary.beta > opts.connectivity_tol
    if solved:
        certs.append(report.evaluate(
            "T3.1", instance_id, float(spectral == connected), 1.0,
            detail=f"bfs_connected={connected} max_alpha={summary.beta:.6e} "
                   f"spectral_connected={spectral}",
        ))
    else:
        indet("T3.1")

    if not connected:
        for tid in report.THEOREM_IDS:
            if tid != "T3.1":
                certs.append(report.skipped(tid, instance_id, "disconnected instance"))
        return certs

    # T3.2: bipartition width lower bound
    if n > BW_MAX_N:
        certs.append(report.skipped("T3.2", instance_id, f"n={n} above the enumeration gate {BW_MAX_N}"))
    elif not solved:
        indet("T3.2")
    else:
        bw, witness = bipartition_width(h)
        factor = (n + (-1) ** n) / (k * (n + 1))
        certs.append(report.evaluate(
            "T3.2", instance_id, float(bw), factor * sum(alphas),
            detail=f"bw={bw} witness={list(witness)} parity={'even' if n % 2 == 0 else 'odd'} "
                   f"factor={factor:.10g} sum_alpha={sum(alphas):.10g}",
        ))

    # T3.3: isoperimetric number lower bound
    if n > ISO_MAX_N:
        certs.append(report.skipped("T3.3", instance_id, f"n={n} above the enumeration gate {ISO_MAX_N}"))
    elif not solved:
        indet("T3.3")
    else:
        iso, witness = isoperimetric_number(h)
        certs.append(report.evaluate(
            "T3.3", instance_id, iso, (summary.alpha + summary.beta) / k,
            detail=f"i={iso:.10g} witness={list(witness)} "
                   f"alpha={summary.alpha:.10g} beta={summary.beta:.10g}",
        ))

    # T3.4 / C3.5: eccentricity, diameter, radius lower bounds
    scale = 2 * (k - 1) * (n - 1)
    if not solved:
        for j in range(1, n + 1):
            indet("T3.4", vertex=j)
        indet("C3.5")
    else:
        eccs = {j: eccentricity(h, j) for j in range(1, n + 1)}
        for j, res in zip(range(1, n + 1), summary.per_vertex):
            if res.value <= 0:
                indet("T3.4", vertex=j)
                continue
            certs.append(report.evaluate(
                "T3.4", instance_id, float(eccs[j]), k / (scale * res.value), vertex=j,
                detail=f"ecc({j})={eccs[j]} alpha_{j}={res.value:.10g}",
            ))
        if summary.alpha <= 0:
            indet("C3.5")
        else:
            dia, rad = diameter(h), radius(h)
            diam_slack = dia - k / (scale * summary.alpha)
            rad_slack = rad - k / (scale * summary.beta)
            certs.append(report.evaluate(
                "C3.5", instance_id, min(diam_slack, rad_slack), 0.0,
                detail=f"diam={dia} bound={k / (scale * summary.alpha):.10g}; "
                       f"rad={rad} bound={k / (scale * summary.beta):.10g}",
            ))

    # T3.6: degree upper bound per vertex
    for j, res in zip(range(1, n + 1), summary.per_vertex):
        if not solved:
            indet("T3.6", vertex=j)
            continue
        dj = int(h.degrees[j - 1])
        certs.append(report.evaluate(
            "T3.6", instance_id, (k - 1) * dj / (n - 1), res.value, vertex=j,
            detail=f"(k-1)d_{j}/(n-1)={(k - 1) * dj / (n - 1):.10g} >= alpha_{j}={res.value:.10g}",
        ))

    # C3.7: summed upper bound
    if not solved:
        indet("C3.7")
    else:
        certs.append(report.evaluate(
            "C3.7", instance_id, (k - 1) * k * m / (n - 1), sum(alphas),
            detail=f"(k-1)km/(n-1)={(k - 1) * k * m / (n - 1):.10g} >= sum_alpha={sum(alphas):.10g}",
        ))

    # T3.8: 2-design equivalence, both directions folded into one indicator
    design = detect_2_design(h)
    if not solved:
        indet("T3.8")
    else:
        target = h.max_degree * (k - 1) / (n - 1)
        spread = summary.beta - summary.alpha
        off_target = max(abs(a - target) for a in alphas)
        spectral_flag = spread <= EQUAL_VALUES_TOL and off_target <= EQUAL_VALUES_TOL
        agree = (design is not None) == spectral_flag
        certs.append(report.evaluate(
            "T3.8", instance_id, float(agree), 1.0,
            detail=f"design={design is not None} spectral={spectral_flag} "
                   f"target={target:.10g} spread={spread:.3e} off_target={off_target:.3e}"
                   + (f" params=2-({design.n},{design.b},{design.k},{design.r},{design.lam})"
                      if design else ""),
        ))

    # T3.9: design edge-connectivity bracket (exact integer arithmetic)
    if design is None:
        certs.append(report.skipped("T3.9", instance_id, "not a 2-design"))
    elif n > EDGE_CONN_MAX_N:
        certs.append(report.skipped("T3.9", instance_id, f"n={n} above the enumeration gate {EDGE_CONN_MAX_N}"))
    else:
        lower, upper = design_edge_connectivity_bounds(design)
        e_val, _ = edge_connectivity(h)
        slacks = [e_val * k - n * design.lam, (n - 1) * design.lam - e_val * (k - 1)]
        note = ""
        if design.symmetric:
            slacks.append(-abs(e_val - design.k))
            note = f" symmetric: e must equal k=r={design.k}"
        certs.append(report.evaluate(
            "T3.9", instance_id, float(min(slacks)), 0.0, tol=0.0,
            detail=f"{lower:.10g} <= e={e_val} <= {upper:.10g}{note}",
        ))

    # L2.3: edge connectivity lower bound
    if n > EDGE_CONN_MAX_N:
        certs.append(report.skipped("L2.3", instance_id, f"n={n} above the enumeration gate {EDGE_CONN_MAX_N}"))
    elif not solved:
        indet("L2.3")
    else:
        e_val, witness = edge_connectivity(h)
        certs.append(report.evaluate(
            "L2.3", instance_id, float(e_val), n / k * summary.alpha,
            detail=f"e={e_val} witness={list(witness)} alpha={summary.alpha:.10g}",
        ))

    # T4.1 / T4.2 / C4.3: resistance bounds, graphs only
    if k == 2:
        certs.extend(check_section4(h, summary, instance_id=instance_id, seed=opts.seed))
    else:
        for tid in ("T4.1", "T4.2", "C4.3"):
            certs.append(report.skipped(tid, instance_id, "resistance is defined for graphs (k=2) only"))
    return certs


@dataclass
class CorpusReport:
    """Aggregated certification results over an expanded corpus."""

    seed: int
    connectivity: str
    instances: list[tuple[str, list[Certificate]]]
    tallies: dict[str, dict[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.tallies:
            for tid in report.THEOREM_IDS:
                self.tallies[tid] = {s: 0 for s in
                                     (report.PASS, report.FAIL, report.SKIP, report.INDETERMINATE)}
            for _, certs in self.instances:
                for c in certs:
                    self.tallies[c.theorem_id][c.status] += 1

    @property
    def failures(self) -> list[Certificate]:
        return [c for _, certs in self.instances for c in certs if c.status == report.FAIL]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    @property
    def indeterminate_rate(self) -> float:
        evaluated = sum(
            t[report.PASS] + t[report.FAIL] + t[report.INDETERMINATE]
            for t in self.tallies.values()
        )
        if evaluated == 0:
            return 0.0
        return sum(t[report.INDETERMINATE] for t in self.tallies.values()) / evaluated


def certify_corpus(spec: CorpusSpec, opts: SolverOptions = DEFAULT_OPTIONS) -> CorpusReport:
    """Certify every instance of the expanded corpus; deterministic per seed."""
    instances = expand_corpus(spec)
    results = []
    for instance_id, h in instances:
        results.append((instance_id, certify_instance(h, opts, instance_id=instance_id)))
    return CorpusReport(seed=spec.seed, connectivity=spec.connectivity, instances=results)


# ---------------------------------------------------------------------------
# renderers

def _fmt(value) -> str:
    return "-" if value is None else f"{value:.10g}"


def render_certificates(certs: list[Certificate]) -> str:
    """One section per theorem id, one line per certificate."""
    lines = []
    for tid in report.THEOREM_IDS:
        group = [c for c in certs if c.theorem_id == tid]
        if not group:
            continue
        lines.append(f"[{tid}]")
        for c in group:
            vtx = f" v={c.vertex}" if c.vertex is not None else ""
            lines.append(
                f"  {c.status.upper():<13}{vtx:<6} lhs={_fmt(c.lhs):<16} rhs={_fmt(c.rhs):<16} "
                f"slack={_fmt(c.slack):<16} {c.detail}"
            )
    return "\n".join(lines) + "\n"


def render_corpus_report(rep: CorpusReport, verbose: bool = False) -> str:
    lines = [f"# corpus seed={rep.seed} connectivity={rep.connectivity} "
             f"instances={len(rep.instances)}"]
    lines.append(f"{'theorem':<8}{'pass':>8}{'fail':>8}{'skip':>8}{'indet':>8}")
    for tid in report.THEOREM_IDS:
        t = rep.tallies[tid]
        lines.append(
            f"{tid:<8}{t[report.PASS]:>8}{t[report.FAIL]:>8}"
            f"{t[report.SKIP]:>8}{t[report.INDETERMINATE]:>8}"
        )
    if rep.failures:
        lines.append("FAILURES:")
        for c in rep.failures:
            lines.append(f"  {c.instance_id} {c.theorem_id} v={c.vertex} "
                         f"lhs={_fmt(c.lhs)} rhs={_fmt(c.rhs)} slack={_fmt(c.slack)} {c.detail}")
    elif verbose:
        for instance_id, certs in rep.instances:
            lines.append(f"== {instance_id}")
            lines.append(render_certificates(certs).rstrip())
    lines.append(f"result: {'ALL PASS' if rep.all_pass else 'FAILURES PRESENT'} "
                 f"(indeterminate rate {rep.indeterminate_rate:.4%})")
    return "\n".join(lines) + "\n"
