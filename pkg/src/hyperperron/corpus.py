"""Deterministic instance corpora for certification runs.

A CorpusSpec expands to a fixed, seed-reproducible list of (instance_id,
hypergraph) pairs: named families, every non-isomorphic connected graph up
to 6 vertices, seeded random uniform hypergraphs, and synthesized
disconnected variants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .hypergraph import (
    Hypergraph,
    disjoint_union,
    generate,
    is_connected,
    with_isolated_vertices,
)

ALL_GRAPHS_MAX_N = 6


@lru_cache(maxsize=None)
def all_connected_graphs(n: int) -> tuple[Hypergraph, ...]:
    """Every connected graph on n vertices up to isomorphism.

    Canonical form by brute force: the minimum edge bitmask over all n!
    relabelings.  Counts for n = 1..6 are 1, 1, 2, 6, 21, 112.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > ALL_GRAPHS_MAX_N:
        raise ValueError(f"exhaustive graph enumeration capped at n = {ALL_GRAPHS_MAX_N}")
    if n == 1:
        return (Hypergraph(1, 2, ()),)
    pairs = list(itertools.combinations(range(n), 2))
    ne = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << ne, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(ne)) & 1).astype(np.int64)
    weights = (np.int64(1) << np.arange(ne, dtype=np.int64))
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        mapping = np.array(
            [pair_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        )
        np.minimum(canon, bits[:, mapping] @ weights, out=canon)
    reps = np.flatnonzero(canon == masks)
    graphs = []
    for mask in reps.tolist():
        edges = tuple(
            (a + 1, b + 1) for i, (a, b) in enumerate(pairs) if mask >> i & 1
        )
        h = Hypergraph(n, 2, edges)
        if is_connected(h):
            graphs.append(h)
    return tuple(graphs)


@dataclass
class CorpusSpec:
    """Generator invocations plus a seed; expansion is deterministic.

    connectivity: "all" keeps instances as generated, "connected_only"
    filters, "include_disconnected" additionally synthesizes disconnected
    variants (disjoint unions and isolated-vertex paddings).
    """

    families: list[dict] = field(default_factory=list)
    seed: int = 0
    connectivity: str = "all"


def _derived_seed(base: int, counter: int) -> int:
    return (base * 2654435761 + counter * 97 + 13) % (1 << 31)


def expand_corpus(spec: CorpusSpec) -> list[tuple[str, Hypergraph]]:
    if spec.connectivity not in ("all", "connected_only", "include_disconnected"):
        raise ValueError(f"unknown connectivity filter {spec.connectivity!r}")
    out: list[tuple[str, Hypergraph]] = []
    counter = 0
    for fam in spec.families:
        fam = dict(fam)
        name = fam.pop("family")
        if name == "all_connected_graphs":
            n_min = fam.pop("n_min", 2)
            n_max = fam.pop("n_max", ALL_GRAPHS_MAX_N)
            for n in range(n_min, n_max + 1):
                for idx, h in enumerate(all_connected_graphs(n)):
                    out.append((f"conn_graph/n{n}/{idx:03d}", h))
        elif name == "random_uniform":
            count = fam.pop("count", 1)
            n, k, m = fam["n"], fam["k"], fam["m"]
            for i in range(count):
                seed = _derived_seed(spec.seed, counter)
                counter += 1
                h = generate("random_uniform", n=n, k=k, m=m, seed=seed)
                out.append((f"random/n{n}k{k}m{m}/s{i}", h))
        else:
            h = generate(name, **fam)
            tag = "_".join(f"{k2}{v}" for k2, v in sorted(fam.items()))
            out.append((f"{name}/{tag}" if tag else name, h))
    if spec.connectivity == "connected_only":
        return [(i, h) for i, h in out if is_connected(h)]
    if spec.connectivity == "include_disconnected":
        rng = np.random.default_rng(spec.seed)
        by_k: dict[int, list[tuple[str, Hypergraph]]] = {}
        for item in out:
            by_k.setdefault(item[1].k, []).append(item)
        extra: list[tuple[str, Hypergraph]] = []
        for k, items in sorted(by_k.items()):
            if len(items) < 2:
                continue
            n_pairs = min(len(items) // 2, 40)
            picks = rng.choice(len(items), size=(n_pairs, 2), replace=True)
            for t, (a, b) in enumerate(picks.tolist()):
                left, right = items[a][1], items[b][1]
                if left.n + right.n > 13:
                    continue  # keep the disconnected variants inside gates
                extra.append((f"disjoint/k{k}/{t:03d}", disjoint_union(left, right)))
            n_iso = min(len(items), 20)
            picks = rng.choice(len(items), size=n_iso, replace=False)
            for t, a in enumerate(picks.tolist()):
                extra.append(
                    (f"isolated/k{k}/{t:03d}", with_isolated_vertices(items[a][1], 2))
                )
        out.extend(extra)
    return out


def default_corpus(seed: int = 0, connectivity: str = "include_disconnected") -> CorpusSpec:
    """The certification corpus: all connected graphs to n=6, seeded random
    3- and 4-uniform hypergraphs, named design families, disconnected variants."""
    families: list[dict] = [
        {"family": "all_connected_graphs", "n_min": 2, "n_max": 6},
        {"family": "fano_plane"},
        {"family": "complete_kuniform", "n": 3, "k": 3},
        {"family": "complete_kuniform", "n": 4, "k": 3},
        {"family": "complete_kuniform", "n": 5, "k": 4},
        {"family": "complete_kuniform", "n": 4, "k": 4},
        {"family": "loose_path", "k": 3, "length": 2},
        {"family": "loose_path", "k": 3, "length": 3},
        {"family": "loose_path", "k": 4, "length": 2},
        {"family": "path_graph", "n": 7},
        {"family": "cycle_graph", "n": 7},
        {"family": "complete_graph", "n": 7},
    ]
    k3_m = {4: (2, 3, 4), 5: (3, 5, 7, 9), 6: (4, 7, 11, 15), 7: (5, 9, 14, 20)}
    for n, ms in k3_m.items():
        for m in ms:
            families.append({"family": "random_uniform", "n": n, "k": 3, "m": m, "count": 9})
    k4_m = {5: (2, 3, 5), 6: (4, 7, 10, 13)}
    for n, ms in k4_m.items():
        for m in ms:
            families.append({"family": "random_uniform", "n": n, "k": 4, "m": m, "count": 9})
    return CorpusSpec(families=families, seed=seed, connectivity=connectivity)
