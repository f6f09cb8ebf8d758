"""Laplacian operators for signed networks with a dominant subset.

Besides the two classic signed Laplacians (repelling and opposing), this
module builds the dominance-scaled operator family for a bipartition whose
cross-subset ties are all antagonistic.  Perceived cross-subset weights are
amplified by the dominance coefficient in one direction and attenuated in
the other, while the degree term counts same-subset ties as signed and
cross-subset ties with flipped sign.  A diagonal coordinate gauge turns the
resulting flow matrix into a symmetric zero-row-sum Laplacian of a partner
network whose cross-subset ties are cooperative; spectra are computed there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadGamma, NotGQSB
from .signed_graph import Bipartition, SignedGraph, validate_gqsb


def repelling_laplacian(g: SignedGraph) -> np.ndarray:
    """Signed Laplacian whose diagonal sums the signed weights."""
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) - a


def opposing_laplacian(g: SignedGraph) -> np.ndarray:
    """Signed Laplacian whose diagonal sums the absolute weights."""
    a = g.adjacency()
    return np.diag(np.abs(a).sum(axis=1)) - a


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not gamma > 0 or not np.isfinite(gamma):
        raise BadGamma(f"dominance coefficient must be in (0, inf), got {gamma}")
    return gamma


def _require_gqsb(g: SignedGraph, b: Bipartition) -> None:
    if not validate_gqsb(g, b):
        raise NotGQSB("a cooperative edge crosses the bipartition")


def _gauge_diagonals(gamma: float, b: Bipartition):
    """Diagonals of the three gauges: scale (gamma on side one, else 1),
    sign (-1 on side one, else 1), and coordinate (sign / scale)."""
    gamma = _check_gamma(gamma)
    m = b.mask()
    scale = np.where(m, gamma, 1.0)
    sign = np.where(m, -1.0, 1.0)
    return scale, sign, sign / scale


def gauge_matrices(gamma: float, b: Bipartition):
    """The three diagonal gauges as full matrices."""
    scale, sign, coord = _gauge_diagonals(gamma, b)
    return np.diag(scale), np.diag(sign), np.diag(coord)


def _degree_vector(g: SignedGraph, b: Bipartition) -> np.ndarray:
    # Row sums of sign-conjugated adjacency: same-subset weights kept
    # signed, cross-subset weights flipped.  Entries can be negative.
    a = g.adjacency()
    sign = np.where(b.mask(), -1.0, 1.0)
    return (sign[:, None] * a * sign[None, :]).sum(axis=1)


def generalized_degree(g: SignedGraph, b: Bipartition) -> np.ndarray:
    """Degree matrix of the dominance-scaled flow.

    Independent of the dominance coefficient: for node i it sums the
    same-subset weights and subtracts the cross-subset ones.
    """
    _require_gqsb(g, b)
    return np.diag(_degree_vector(g, b))


def generalized_adjacency(g: SignedGraph, b: Bipartition, gamma: float) -> np.ndarray:
    """Perceived adjacency under dominance scaling.

    Same-subset weights are unchanged; ties from side one toward side two
    appear gamma times stronger, the reverse direction gamma times weaker.
    Equals the scale-gauge conjugation of the plain adjacency.
    """
    _require_gqsb(g, b)
    scale, _, _ = _gauge_diagonals(gamma, b)
    return scale[:, None] * g.adjacency() / scale[None, :]


@dataclass(frozen=True)
class OperatorBundle:
    """Operator set for one (graph, bipartition, coefficient) triple.

    Gauges are stored as diagonal vectors.  All matrices stay in the
    caller's node order; ``permutation`` lists the dominant side first for
    consumers that want the block layout.
    """

    graph: SignedGraph
    partition: Bipartition
    gamma: float
    adjacency: np.ndarray
    degree: np.ndarray
    laplacian: np.ndarray
    scale_gauge: np.ndarray
    sign_gauge: np.ndarray
    coord_gauge: np.ndarray
    z_adjacency: np.ndarray
    z_laplacian: np.ndarray
    permutation: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def generalized_laplacian(g: SignedGraph, b: Bipartition, gamma: float) -> OperatorBundle:
    """Build the dominance-scaled flow operator and its gauge partner.

    The flow matrix is degree minus perceived adjacency.  Conjugating by
    the coordinate gauge removes the coefficient and flips cross-subset
    weights positive, giving a symmetric zero-row-sum matrix; the two share
    their spectrum for every coefficient value.
    """
    gamma = _check_gamma(gamma)
    _require_gqsb(g, b)
    a = g.adjacency()
    scale, sign, coord = _gauge_diagonals(gamma, b)
    scaled = scale[:, None] * a / scale[None, :]
    conjugated = sign[:, None] * a * sign[None, :]
    deg = conjugated.sum(axis=1)
    lap = np.diag(deg) - scaled
    z_lap = np.diag(deg) - conjugated
    perm = tuple(sorted(b.v1)) + tuple(sorted(b.v2))
    return OperatorBundle(
        graph=g,
        partition=b,
        gamma=gamma,
        adjacency=_frozen(scaled),
        degree=_frozen(deg),
        laplacian=_frozen(lap),
        scale_gauge=_frozen(scale),
        sign_gauge=_frozen(sign),
        coord_gauge=_frozen(coord),
        z_adjacency=_frozen(conjugated),
        z_laplacian=_frozen(z_lap),
        permutation=perm,
    )


def z_transform_network(bundle: OperatorBundle) -> SignedGraph:
    """The gauge partner as a graph: cross-subset edges flip sign (they
    were antagonistic, so they turn cooperative), same-subset edges stay."""
    v1 = bundle.partition.v1
    edges = tuple(
        (i, j, -w if (i in v1) != (j in v1) else w)
        for i, j, w in bundle.graph.edges
    )
    return SignedGraph(bundle.graph.n, edges)
