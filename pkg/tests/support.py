"""Shared test helpers: exhaustive scan oracles and seeded generators.

The scan oracles deliberately avoid the library's component machinery;
they enumerate candidate splits or walk edges directly, so agreement with
the package is a real cross-check and not a tautology.
"""

from __future__ import annotations

import numpy as np

from gqsbnet import Bipartition, SignedGraph


def all_splits(n):
    """Candidate side-one sets with node 0 fixed on side one (kills
    mirror duplicates) and side two non-empty."""
    for bits in range(2 ** (n - 1)):
        v1 = {0}
        for k in range(n - 1):
            if bits >> k & 1:
                v1.add(k + 1)
        if len(v1) < n:
            yield frozenset(v1)


def antagonistic_across(g: SignedGraph, v1) -> bool:
    return all(w < 0 for i, j, w in g.edges if (i in v1) != (j in v1))


def cooperative_within(g: SignedGraph, v1) -> bool:
    return all(w > 0 for i, j, w in g.edges if (i in v1) == (j in v1))


def scan_gqsb(g: SignedGraph):
    """All valid antagonistic splits by exhaustive scan."""
    return [v1 for v1 in all_splits(g.n) if antagonistic_across(g, v1)]


def scan_gqsb_count_fast(g: SignedGraph) -> int:
    """Vectorized count of valid splits: only cooperative edges constrain,
    they must not cross; both sides non-empty; mirrors collapsed."""
    n = g.n
    bits = (np.arange(1 << n, dtype=np.uint32)[:, None] >> np.arange(n)) & 1
    ok = np.ones(bits.shape[0], dtype=bool)
    for i, j, w in g.edges:
        if w > 0:
            ok &= bits[:, i] == bits[:, j]
    sizes = bits.sum(axis=1)
    ok &= (sizes > 0) & (sizes < n)
    return int(ok.sum()) // 2


def _has_positive_path(g: SignedGraph, a: int, b: int) -> bool:
    adj: dict[int, list[int]] = {}
    for i, j, w in g.edges:
        if w > 0:
            adj.setdefault(i, []).append(j)
            adj.setdefault(j, []).append(i)
    seen = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            return True
        for u in adj.get(v, ()):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return False


def scan_sb(g: SignedGraph):
    """Definition scan for full balance: the antagonistic split must be
    unique and internally cooperative."""
    splits = scan_gqsb(g)
    if len(splits) != 1:
        return None
    v1 = splits[0]
    return v1 if cooperative_within(g, v1) else None


def scan_qsb(g: SignedGraph):
    """Definition scan for quasi balance: unique antagonistic split whose
    same-subset antagonists still share a cooperative path."""
    splits = scan_gqsb(g)
    if len(splits) != 1:
        return None
    v1 = splits[0]
    for i, j, w in g.edges:
        if w < 0 and (i in v1) == (j in v1) and not _has_positive_path(g, i, j):
            return None
    return v1


def brute_chromatic(g: SignedGraph) -> int:
    """Smallest k admitting a proper coloring, by direct enumeration."""
    import itertools

    if g.n == 0:
        return 0
    if not g.edges:
        return 1
    for k in range(2, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[i] != coloring[j] for i, j, _ in g.edges):
                return k
    return g.n


def random_signed_graph(rng, n, density=0.5, neg_prob=0.5):
    """Fully unconstrained signed graph; weights in +-[0.5, 3]."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                w = float(rng.uniform(0.5, 3.0))
                if rng.random() < neg_prob:
                    w = -w
                edges.append((i, j, w))
    return SignedGraph.from_edge_list(n, edges)


def random_bloc_graph(rng, n, blocs, intra_extra=0.3, cross_density=0.6,
                      intra_neg=0.15):
    """Graph whose cooperative subgraph has exactly ``blocs`` components.

    Each bloc gets a cooperative spanning tree; ties between blocs are
    antagonistic only; extra same-bloc ties may go either way.
    """
    labels = np.empty(n, dtype=int)
    labels[:blocs] = np.arange(blocs)
    if n > blocs:
        labels[blocs:] = rng.integers(0, blocs, n - blocs)
    edges: dict[tuple[int, int], float] = {}
    for k in range(blocs):
        group = [int(v) for v in np.flatnonzero(labels == k)]
        for idx in range(1, len(group)):
            a = group[idx]
            b = group[int(rng.integers(0, idx))]
            edges[(min(a, b), max(a, b))] = float(rng.uniform(0.5, 3.0))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in edges:
                continue
            if labels[i] == labels[j]:
                if rng.random() < intra_extra:
                    w = float(rng.uniform(0.5, 3.0))
                    if rng.random() < intra_neg:
                        w = -w
                    edges[(i, j)] = w
            elif rng.random() < cross_density:
                edges[(i, j)] = -float(rng.uniform(0.5, 3.0))
    g = SignedGraph.from_edge_list(n, [(i, j, w) for (i, j), w in edges.items()])
    return g, labels


def random_gqsb_instance(rng, n_max=10, intra_neg=0.35, lo=1.0, hi=3.0):
    """Connected graph with a designated antagonistic bipartition.

    Cooperative spanning trees inside each side keep it connected once at
    least one cross tie exists; cross ties are antagonistic, extra
    same-side ties are cooperative or antagonistic at ``intra_neg`` odds.
    """
    n = int(rng.integers(4, n_max + 1))
    r = int(rng.integers(1, n))
    edges: dict[tuple[int, int], float] = {}
    for group in (list(range(r)), list(range(r, n))):
        for idx in range(1, len(group)):
            a = group[idx]
            b = group[int(rng.integers(0, idx))]
            edges[(min(a, b), max(a, b))] = float(rng.uniform(lo, hi))
    crossed = False
    for i in range(r):
        for j in range(r, n):
            if rng.random() < 0.5:
                edges[(i, j)] = -float(rng.uniform(lo, hi))
                crossed = True
    if not crossed:
        edges[(0, r)] = -float(rng.uniform(lo, hi))
    for side in ((0, r), (r, n)):
        for i in range(*side):
            for j in range(i + 1, side[1]):
                if (i, j) in edges:
                    continue
                if rng.random() < 0.25:
                    w = float(rng.uniform(lo, hi))
                    if rng.random() < intra_neg:
                        w = -w
                    edges[(i, j)] = w
    g = SignedGraph.from_edge_list(n, [(i, j, w) for (i, j), w in edges.items()])
    return g, Bipartition(n, frozenset(range(r)))


def random_sb_instance(rng, n_max=10):
    """Connected, fully balanced instance: cooperative trees inside each
    side, antagonistic ties across, nothing antagonistic within."""
    n = int(rng.integers(3, n_max + 1))
    r = int(rng.integers(1, n))
    edges: dict[tuple[int, int], float] = {}
    for group in (list(range(r)), list(range(r, n))):
        for idx in range(1, len(group)):
            a = group[idx]
            b = group[int(rng.integers(0, idx))]
            edges[(min(a, b), max(a, b))] = float(rng.uniform(0.5, 3.0))
    crossed = False
    for i in range(r):
        for j in range(r, n):
            if rng.random() < 0.5:
                edges[(i, j)] = -float(rng.uniform(0.5, 3.0))
                crossed = True
    if not crossed:
        edges[(0, r)] = -float(rng.uniform(0.5, 3.0))
    for side in ((0, r), (r, n)):
        for i in range(*side):
            for j in range(i + 1, side[1]):
                if (i, j) not in edges and rng.random() < 0.3:
                    edges[(i, j)] = float(rng.uniform(0.5, 3.0))
    g = SignedGraph.from_edge_list(n, [(i, j, w) for (i, j), w in edges.items()])
    return g, Bipartition(n, frozenset(range(r)))
